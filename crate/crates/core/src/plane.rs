//! Coordinates of the plane `K[Z, T]`.
//!
//! [`vartest`] reduces the total degree of `f` by linear and elementary
//! substitutions until it is linear. At each stage the leading form of a
//! coordinate is a power of a linear form; after moving that form to `Z^n`
//! the Newton polygon must be the triangle with vertices `(n, 0)`, `(0, m)`
//! with `m | n`, and its hypotenuse a power of `T + βZ^(n/m)`. Every check is
//! forced, so a failure rules out coordinate-ness over `K` and over its
//! algebraic closure alike, except where a missing `p^e`-th root is the only
//! obstruction.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{usage, Error, Result};
use crate::fields::{Elem, Field};
use crate::poly::MultiPoly;
use crate::verifier::verify_plane_pair;

/// One substitution of the plane. Applied to `h` it gives
/// `h(image(Z), image(T))`.
#[derive(Debug, Clone, PartialEq)]
pub enum TameStep {
    /// `Z -> aZ + bT + e`, `T -> cZ + dT + f` with `ad - bc != 0`.
    Linear { m: [[Elem; 2]; 2], shift: [Elem; 2] },
    /// `target -> target + shift(other)`; `shift` is dense in the other
    /// variable.
    Elementary { target: PlaneVar, shift: Vec<Elem> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneVar {
    Z,
    T,
}

impl PlaneVar {
    fn index(self) -> usize {
        match self {
            PlaneVar::Z => 0,
            PlaneVar::T => 1,
        }
    }
}

impl TameStep {
    /// Images of the two variables, in the ring of `like`.
    pub fn images(&self, like: &MultiPoly) -> [MultiPoly; 2] {
        let k = like.field();
        let (z, t) = (like.var_at(0), like.var_at(1));
        match self {
            TameStep::Linear { m, shift } => {
                let row = |r: usize| {
                    &(&z.scale(&m[r][0]) + &t.scale(&m[r][1]))
                        + &like.constant_like(shift[r].clone())
                };
                [row(0), row(1)]
            }
            TameStep::Elementary { target, shift } => {
                let other = 1 - target.index();
                let s = MultiPoly::from_dense(k, &like.var_names(), other, shift);
                let mut im = [z, t];
                im[target.index()] = &im[target.index()] + &s;
                im
            }
        }
    }

    pub fn is_identity(&self, k: &Field) -> bool {
        match self {
            TameStep::Linear { m, shift } => {
                k.is_one(&m[0][0])
                    && k.is_zero(&m[0][1])
                    && k.is_zero(&m[1][0])
                    && k.is_one(&m[1][1])
                    && shift.iter().all(|c| k.is_zero(c))
            }
            TameStep::Elementary { shift, .. } => shift.iter().all(|c| k.is_zero(c)),
        }
    }

    pub fn apply(&self, h: &MultiPoly) -> Result<MultiPoly> {
        let im = self.images(h);
        h.substitute(&im)
    }

    pub fn inverse(&self, k: &Field) -> Result<TameStep> {
        Ok(match self {
            TameStep::Linear { m, shift } => {
                let det = k.sub(&k.mul(&m[0][0], &m[1][1]), &k.mul(&m[0][1], &m[1][0]));
                let di = k.inv(&det)?;
                let inv = [
                    [k.mul(&m[1][1], &di), k.neg(&k.mul(&m[0][1], &di))],
                    [k.neg(&k.mul(&m[1][0], &di)), k.mul(&m[0][0], &di)],
                ];
                let w = |r: usize| {
                    k.neg(&k.add(&k.mul(&inv[r][0], &shift[0]), &k.mul(&inv[r][1], &shift[1])))
                };
                let shift = [w(0), w(1)];
                TameStep::Linear { m: inv, shift }
            }
            TameStep::Elementary { target, shift } => TameStep::Elementary {
                target: *target,
                shift: shift.iter().map(|c| k.neg(c)).collect(),
            },
        })
    }

    /// `Z -> ..., T -> ...` in the expression grammar.
    pub fn describe(&self, like: &MultiPoly) -> String {
        let [a, b] = self.images(like);
        format!("{} -> {}, {} -> {}", like.vars()[0], a, like.vars()[1], b)
    }
}

/// Witness that `f = unit * τ(T) + constant` for the automorphism
/// `τ = steps[0] ∘ steps[1] ∘ ...`; the complement is `τ(Z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateCertificate {
    /// Field the steps live in; an extension of the input field when one
    /// was needed.
    pub field: Field,
    pub input_field: Field,
    pub vars: [String; 2],
    pub steps: Vec<TameStep>,
    pub unit: Elem,
    pub constant: Elem,
    pub complement: MultiPoly,
    /// Total degree before each reduction, strictly decreasing.
    pub degree_trace: Vec<u32>,
}

impl CoordinateCertificate {
    fn ring(&self) -> MultiPoly {
        MultiPoly::zero(&self.field, &[self.vars[0].as_str(), self.vars[1].as_str()])
    }

    /// Images `(τ(Z), τ(T))` of the composite automorphism.
    pub fn automorphism(&self) -> Result<[MultiPoly; 2]> {
        let like = self.ring();
        let mut img = [like.var_at(0), like.var_at(1)];
        for s in &self.steps {
            let [a, b] = s.images(&like);
            img = [a.substitute(&img)?, b.substitute(&img)?];
        }
        Ok(img)
    }

    /// `unit * τ(T) + constant`, which must equal the tested polynomial.
    pub fn coordinate(&self) -> Result<MultiPoly> {
        let [_, t] = self.automorphism()?;
        Ok(&t.scale(&self.unit) + &t.constant_like(self.constant.clone()))
    }

    /// The extension the certificate needed beyond the input field.
    pub fn extension_used(&self) -> Option<&Field> {
        (self.field != self.input_field).then_some(&self.field)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClosureStatus {
    NotCoordinate,
    /// A coordinate after a purely inseparable extension.
    Coordinate(Box<CoordinateCertificate>),
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rejection {
    pub reason: String,
    /// Status over the algebraic closure of the field.
    pub closure: ClosureStatus,
}

#[derive(Debug, Clone, PartialEq)]
pub enum VarTest {
    Accept(CoordinateCertificate),
    Reject(Rejection),
}

impl VarTest {
    pub fn is_accept(&self) -> bool {
        matches!(self, VarTest::Accept(_))
    }

    pub fn certificate(&self) -> Option<&CoordinateCertificate> {
        match self {
            VarTest::Accept(c) => Some(c),
            VarTest::Reject(_) => None,
        }
    }

    /// Coordinate over the algebraic closure.
    pub fn over_closure(&self) -> Option<bool> {
        match self {
            VarTest::Accept(_) => Some(true),
            VarTest::Reject(r) => match r.closure {
                ClosureStatus::NotCoordinate => Some(false),
                ClosureStatus::Coordinate(_) => Some(true),
                ClosureStatus::Unknown(_) => None,
            },
        }
    }
}

impl fmt::Display for VarTest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarTest::Accept(c) => write!(f, "Accept (complement {})", c.complement),
            VarTest::Reject(r) => write!(f, "Reject: {}", r.reason),
        }
    }
}

fn check_plane(f: &MultiPoly) -> Result<()> {
    if f.nvars() != 2 {
        return usage("plane polynomials live in a ring with exactly two variables");
    }
    if f.is_zero() {
        return usage("the zero polynomial");
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub enum FastPath {
    Accept(CoordinateCertificate),
    NotApplicable,
    Reject(String),
}

/// Decides `f = a0(Z) + a1(Z) T` directly.
pub fn linear_fastpath(f: &MultiPoly) -> Result<FastPath> {
    check_plane(f)?;
    if f.degree_in(1) > 1 {
        return Ok(FastPath::NotApplicable);
    }
    let k = f.field();
    let mut cs = f.coefficients_in(1);
    cs.resize(2, f.zero_like());
    let (a0, a1) = (&cs[0], &cs[1]);
    if a1.is_zero() {
        if a0.degree_in(0) == 1 {
            return Ok(match vartest(f)? {
                VarTest::Accept(c) => FastPath::Accept(c),
                VarTest::Reject(r) => return Err(Error::Internal(r.reason)),
            });
        }
        return Ok(FastPath::Reject(
            "free of T and not of degree one in Z".into(),
        ));
    }
    let Some(u) = a1.constant_value() else {
        return Ok(FastPath::Reject(
            "the coefficient of T is a nonconstant polynomial in Z".into(),
        ));
    };
    let ui = k.inv(&u)?;
    let mut shift = a0.to_dense(0)?;
    let constant = shift.first().cloned().unwrap_or_else(|| k.zero());
    if !shift.is_empty() {
        shift[0] = k.zero();
    }
    let shift: Vec<Elem> = shift.iter().map(|c| k.mul(c, &ui)).collect();
    let cert = CoordinateCertificate {
        field: k.clone(),
        input_field: k.clone(),
        vars: [f.vars()[0].clone(), f.vars()[1].clone()],
        steps: vec![TameStep::Elementary {
            target: PlaneVar::T,
            shift,
        }],
        unit: u,
        constant,
        complement: f.var_at(0),
        degree_trace: vec![f.total_degree().unwrap_or(0)],
    };
    check_certificate(f, &cert)?;
    Ok(FastPath::Accept(cert))
}

fn check_certificate(f: &MultiPoly, cert: &CoordinateCertificate) -> Result<()> {
    let expect = f.promote(&cert.field)?;
    if cert.coordinate()? != expect {
        return Err(Error::Internal(format!(
            "certificate does not reproduce {f}"
        )));
    }
    Ok(())
}

enum Power {
    Root(Elem),
    NotPower,
    /// `ρ` has no `q`-th root in the field.
    Missing {
        rho: Elem,
        q: u64,
    },
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// For a binary form with `h[j]` the coefficient of `U^(n-j) V^j` and
/// `h[0] != 0`, finds `β` with `h = h[0] (U + βV)^n`.
fn linear_power(k: &Field, h: &[Elem]) -> Result<Power> {
    let n = (h.len() - 1) as u64;
    let c = k.inv(&h[0])?;
    let h: Vec<Elem> = h.iter().map(|x| k.mul(x, &c)).collect();
    let p = k.characteristic();
    let mut q = 1u64;
    if p > 0 {
        while (n / q) % p == 0 {
            q *= p;
        }
    }
    let m = n / q;
    // (U^q + ρ V^q)^m
    let rho = k.div(&h[q as usize], &k.from_i64(m as i64))?;
    for (j, x) in h.iter().enumerate() {
        let j = j as u64;
        let want = if j % q == 0 {
            k.mul(&k.from_bigint(&binomial(m, j / q)), &k.pow(&rho, j / q))
        } else {
            k.zero()
        };
        if *x != want {
            return Ok(Power::NotPower);
        }
    }
    let mut root = rho;
    let mut left = q;
    while left > 1 {
        match k.pth_root(&root) {
            Some(r) => {
                root = r;
                left /= p;
            }
            None => return Ok(Power::Missing { rho: root, q: left }),
        }
    }
    Ok(Power::Root(root))
}

enum Reduction {
    Done(CoordinateCertificate),
    Reject(String),
    Missing { reason: String, rho: Elem, q: u64 },
}

fn reduce(f: &MultiPoly, input_field: &Field) -> Result<Reduction> {
    let k = f.field().clone();
    let constant = f.constant_term();
    let mut g = f.without_constant();
    if g.is_zero() {
        return Ok(Reduction::Reject("constant polynomial".into()));
    }
    let zero = k.zero();
    let one = k.one();
    let mut inverses: Vec<TameStep> = Vec::new();
    let mut trace: Vec<u32> = Vec::new();
    loop {
        let n = g.total_degree().unwrap();
        if let Some(&prev) = trace.last() {
            if n >= prev {
                return Err(Error::Internal(format!(
                    "degree reduction stalled at {n} after {prev}"
                )));
            }
        }
        trace.push(n);
        if n == 1 {
            break;
        }
        let nu = n as usize;
        let lf = g.homogeneous_part(n);
        let h: Vec<Elem> = (0..=n).map(|j| lf.coefficient(&[n - j, j])).collect();
        let (lead_z, lead_t) = (!k.is_zero(&h[0]), !k.is_zero(&h[nu]));
        let form = if lead_z {
            h.clone()
        } else if lead_t {
            h.iter().rev().cloned().collect()
        } else {
            return Ok(Reduction::Reject(format!(
                "leading form of degree {n} is not a power of a linear form"
            )));
        };
        let beta = match linear_power(&k, &form)? {
            Power::Root(b) => b,
            Power::NotPower => {
                return Ok(Reduction::Reject(format!(
                    "leading form of degree {n} is not a power of a linear form"
                )))
            }
            Power::Missing { rho, q } => {
                return Ok(Reduction::Missing {
                    reason: format!(
                        "leading form of degree {n} needs ({})^(1/{q})",
                        k.format(&rho)
                    ),
                    rho,
                    q,
                })
            }
        };
        let nb = k.neg(&beta);
        // send the linear form to Z
        let step = if lead_z {
            TameStep::Linear {
                m: [[one.clone(), nb.clone()], [zero.clone(), one.clone()]],
                shift: [zero.clone(), zero.clone()],
            }
        } else {
            TameStep::Linear {
                m: [[zero.clone(), one.clone()], [one.clone(), nb.clone()]],
                shift: [zero.clone(), zero.clone()],
            }
        };
        g = step.apply(&g)?;
        inverses.push(step.inverse(&k)?);

        let dt = g.degree_in(1);
        if dt == 0 {
            return Ok(Reduction::Reject(format!(
                "equivalent to a polynomial of degree {n} in one variable"
            )));
        }
        if n % dt != 0 {
            return Ok(Reduction::Reject(format!(
                "degree {dt} in the second variable does not divide the total degree {n}"
            )));
        }
        let kk = n / dt;
        let (w, top) = g.weighted_top(&[1, kk]);
        if top != n as u64 {
            return Ok(Reduction::Reject("Newton polygon is not a triangle".into()));
        }
        // w = Σ r[j] T^(dt-j) (Z^kk)^j must be r[0] (T + βZ^kk)^dt
        let r: Vec<Elem> = (0..=dt).map(|j| w.coefficient(&[kk * j, dt - j])).collect();
        let beta = match linear_power(&k, &r)? {
            Power::Root(b) => b,
            Power::NotPower => {
                return Ok(Reduction::Reject(format!(
                    "top edge of the Newton polygon is not a power of T + c*Z^{kk}"
                )))
            }
            Power::Missing { rho, q } => return Ok(Reduction::Missing {
                reason: format!(
                    "top edge of the Newton polygon needs a root of order {q} outside the field"
                ),
                rho,
                q,
            }),
        };
        let mut shift = vec![k.zero(); kk as usize + 1];
        shift[kk as usize] = k.neg(&beta);
        let step = TameStep::Elementary {
            target: PlaneVar::T,
            shift,
        };
        g = step.apply(&g)?;
        inverses.push(step.inverse(&k)?);
    }
    let alpha = g.coefficient(&[1, 0]);
    let beta = g.coefficient(&[0, 1]);
    let last = if !k.is_zero(&beta) {
        TameStep::Linear {
            m: [[one.clone(), zero.clone()], [alpha, beta]],
            shift: [zero.clone(), zero.clone()],
        }
    } else {
        TameStep::Linear {
            m: [[zero.clone(), one.clone()], [alpha, zero.clone()]],
            shift: [zero.clone(), zero.clone()],
        }
    };
    inverses.push(last);
    inverses.retain(|s| !s.is_identity(&k));
    let mut cert = CoordinateCertificate {
        field: k.clone(),
        input_field: input_field.clone(),
        vars: [f.vars()[0].clone(), f.vars()[1].clone()],
        steps: inverses,
        unit: one,
        constant,
        complement: f.zero_like(),
        degree_trace: trace,
    };
    cert.complement = cert.automorphism()?[0].clone();
    check_certificate(f, &cert)?;
    Ok(Reduction::Done(cert))
}

fn fresh_symbol(f: &MultiPoly) -> String {
    let mut name = "beta".to_string();
    while f.vars().contains(&name) || f.field().symbol() == Some(name.as_str()) {
        name.push('1');
    }
    name
}

/// Decides whether `f` is a coordinate of `K[Z, T]`.
pub fn vartest(f: &MultiPoly) -> Result<VarTest> {
    check_plane(f)?;
    let k = f.field().clone();
    let (reason, rho, q) = match reduce(f, &k)? {
        Reduction::Done(c) => return Ok(VarTest::Accept(c)),
        Reduction::Reject(reason) => {
            return Ok(VarTest::Reject(Rejection {
                reason,
                closure: ClosureStatus::NotCoordinate,
            }))
        }
        Reduction::Missing { reason, rho, q } => (reason, rho, q),
    };
    if k.is_extension() {
        return Ok(VarTest::Reject(Rejection {
            reason,
            closure: ClosureStatus::Unknown(
                "the closure test would need a second extension level".into(),
            ),
        }));
    }
    // adjoin ρ^(1/q); irreducible since ρ is not a p-th power
    let mut minpoly = vec![k.zero(); q as usize + 1];
    minpoly[0] = k.neg(&rho);
    minpoly[q as usize] = k.one();
    let ext = k
        .extend(&minpoly, &fresh_symbol(f))
        .map_err(|e| Error::Internal(format!("inseparable extension failed: {e}")))?;
    let closure = match reduce(&f.promote(&ext)?, &k)? {
        Reduction::Done(c) => ClosureStatus::Coordinate(Box::new(c)),
        Reduction::Reject(_) => ClosureStatus::NotCoordinate,
        Reduction::Missing { reason, .. } => ClosureStatus::Unknown(reason),
    };
    Ok(VarTest::Reject(Rejection { reason, closure }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineStatus {
    Line,
    NotLine,
    Unknown,
}

/// Whether `K[Z,T]/(f)` is a polynomial ring in one variable: decided by
/// [`vartest`] in characteristic zero, where lines are coordinates; in
/// characteristic `p` only coordinates are recognized.
pub fn line_test(f: &MultiPoly) -> Result<LineStatus> {
    if f.is_constant() {
        return usage("line_test needs a nonconstant polynomial");
    }
    let v = vartest(f)?;
    Ok(match (v.is_accept(), f.field().characteristic()) {
        (true, _) => LineStatus::Line,
        (false, 0) => LineStatus::NotLine,
        (false, _) => LineStatus::Unknown,
    })
}

/// The complement recorded in `cert`, re-verified against `f`.
pub fn complement(f: &MultiPoly, cert: &CoordinateCertificate) -> Result<MultiPoly> {
    check_certificate(f, cert)?;
    let g = cert.complement.clone();
    if !verify_plane_pair(&f.promote(&cert.field)?, &g)? {
        return Err(Error::Internal(format!(
            "complement {g} of {f} fails verification"
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests;
