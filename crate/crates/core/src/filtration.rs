//! The `X`-adic degree function on `A = K[X,Y,Z,T]/(X^d α(X) Y - F)`.
//!
//! Elements of `A` are kept in the normal form `Σ c_i(X,Z,T) Y^i` with
//! `deg_X c_i < deg a` for `i >= 1`. Since `y = F / (x^d α(x))`, such an
//! element is `n / (x^d α)^N` with `n = Σ c_i F^i (X^d α)^(N-i)`, and
//! `w = dN - v_X(n)`. `α(0) != 0`, so `α` never affects `v_X`.

use crate::error::{usage, Error, Result};
use crate::fields::Elem;
use crate::hyperplane::Hyperplane;
use crate::poly::MultiPoly;

const XZT: [&str; 3] = ["X", "Z", "T"];
const XYZT: [&str; 4] = ["X", "Y", "Z", "T"];
const XUZT: [&str; 4] = ["X", "U", "Z", "T"];

#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationContext {
    pub h: Hyperplane,
    pub d: u32,
    pub alpha: MultiPoly,
    pub f0: MultiPoly,
    alpha0: Elem,
}

/// `Σ coefficients[i] · y^i` in normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct AElement {
    pub coefficients: Vec<MultiPoly>,
}

impl AElement {
    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Highest power of `y`; `None` for zero.
    pub fn y_degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Pushes `a·Y^i` multiples down from the top: `a Y -> F`.
    fn reduced(mut self, ctx: &FiltrationContext) -> AElement {
        let c = &mut self.coefficients;
        for i in (1..c.len()).rev() {
            let (q, r) = c[i].divmod_in(0, ctx.a()).expect("a is monic up to a unit");
            c[i] = r;
            if !q.is_zero() {
                c[i - 1] = &c[i - 1] + &(&q * &ctx.h.f);
            }
        }
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        self
    }
}

/// Degree of the monomial `x^a y^b z^c t^e`.
fn monomial_w(d: u32, e: &[u32]) -> i64 {
    d as i64 * e[1] as i64 - e[0] as i64
}

impl FiltrationContext {
    /// Requires `a(0) = 0` and `F(0, Z, T) != 0`.
    pub fn new(h: &Hyperplane) -> Result<FiltrationContext> {
        let k = h.field();
        let a = h.a.to_dense(0)?;
        let d = a.iter().take_while(|c| k.is_zero(c)).count() as u32;
        if d == 0 {
            return usage("the filtration needs a(0) = 0");
        }
        let alpha_dense = a[d as usize..].to_vec();
        let alpha0 = alpha_dense[0].clone();
        let f0 = h.f.eval_var("X", &k.zero())?;
        if f0.is_zero() {
            return usage("the filtration needs F(0, Z, T) != 0");
        }
        Ok(FiltrationContext {
            h: h.clone(),
            d,
            alpha: MultiPoly::from_dense(k, &XZT, 0, &alpha_dense),
            f0,
            alpha0,
        })
    }

    /// The context at the root `λ` of `a`, after the shift `X -> X + λ`.
    pub fn at_root(h: &Hyperplane, root: &Elem) -> Result<FiltrationContext> {
        let k = h.field();
        if k.is_zero(root) {
            return FiltrationContext::new(h);
        }
        let like = h.f.zero_like();
        let images = [
            &like.var_at(0) + &like.constant_like(root.clone()),
            like.var_at(1),
            like.var_at(2),
        ];
        let shifted = Hyperplane::new(&h.a.substitute(&images)?, &h.f.substitute(&images)?)?;
        FiltrationContext::new(&shifted)
    }

    fn a(&self) -> &MultiPoly {
        &self.h.a
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.h.field(), &XZT)
    }

    pub fn x(&self) -> AElement {
        self.from_xzt(&self.zero().var_at(0))
    }

    pub fn y(&self) -> AElement {
        let z = self.zero();
        AElement {
            coefficients: vec![z.clone(), z.one_like()],
        }
        .reduced(self)
    }

    pub fn z(&self) -> AElement {
        self.from_xzt(&self.zero().var_at(1))
    }

    pub fn t(&self) -> AElement {
        self.from_xzt(&self.zero().var_at(2))
    }

    fn from_xzt(&self, p: &MultiPoly) -> AElement {
        AElement {
            coefficients: if p.is_zero() { vec![] } else { vec![p.clone()] },
        }
    }

    /// Image in `A` of a polynomial in `X, Y, Z, T`.
    pub fn to_normal_form(&self, p: &MultiPoly) -> Result<AElement> {
        let p = p.with_vars(&XYZT)?;
        let mut coefficients = Vec::new();
        for c in p.coefficients_in(1) {
            coefficients.push(c.with_vars(&XZT)?);
        }
        Ok(AElement { coefficients }.reduced(self))
    }

    pub fn to_poly(&self, e: &AElement) -> MultiPoly {
        let like = MultiPoly::zero(self.h.field(), &XYZT);
        let y = like.var_at(1);
        let mut out = like.clone();
        for c in e.coefficients.iter().rev() {
            out = &(&out * &y) + &c.with_vars(&XYZT).expect("X, Z, T");
        }
        out
    }

    pub fn add(&self, e1: &AElement, e2: &AElement) -> AElement {
        let n = e1.coefficients.len().max(e2.coefficients.len());
        let z = self.zero();
        let coefficients = (0..n)
            .map(|i| {
                let a = e1.coefficients.get(i).unwrap_or(&z);
                let b = e2.coefficients.get(i).unwrap_or(&z);
                a + b
            })
            .collect();
        AElement { coefficients }.reduced(self)
    }

    pub fn neg(&self, e: &AElement) -> AElement {
        AElement {
            coefficients: e.coefficients.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, e1: &AElement, e2: &AElement) -> AElement {
        if e1.is_zero() || e2.is_zero() {
            return AElement {
                coefficients: vec![],
            };
        }
        let n = e1.coefficients.len() + e2.coefficients.len() - 1;
        let mut coefficients = vec![self.zero(); n];
        for (i, a) in e1.coefficients.iter().enumerate() {
            for (j, b) in e2.coefficients.iter().enumerate() {
                coefficients[i + j] = &coefficients[i + j] + &(a * b);
            }
        }
        AElement { coefficients }.reduced(self)
    }

    /// `w(e)`; `None` stands for `-∞`.
    pub fn w_degree(&self, e: &AElement) -> Option<i64> {
        let n_y = e.y_degree()?;
        let xd_alpha = &self.zero().var_at(0).pow(self.d) * &self.alpha;
        let mut num = self.zero();
        for (i, c) in e.coefficients.iter().enumerate() {
            let term = &(c * &self.h.f.pow(i as u32)) * &xd_alpha.pow((n_y - i) as u32);
            num = &num + &term;
        }
        let v = num.valuation_in(0)?;
        Some(self.d as i64 * n_y as i64 - v as i64)
    }

    /// `e / x` when it lies in `A`. With `F = f0 + X F1`, `x` divides `e`
    /// iff `f0` divides `e(0, Y, Z, T)`, because
    /// `x (x^(d-1) α(x) y - F1) = f0` in `A`.
    pub fn x_divide(&self, e: &AElement) -> Result<Option<AElement>> {
        let p = self.to_poly(e);
        let like = p.zero_like();
        let at0 = p.eval_var("X", &self.h.field().zero())?;
        let f0 = self.f0.with_vars(&XYZT)?;
        let v = match at0.exact_divide(&f0) {
            Ok(v) => v,
            Err(Error::NotDivisible) => return Ok(None),
            Err(err) => return Err(err),
        };
        let x = like.var_at(0);
        let u = (&p - &at0).exact_divide(&x)?;
        let f = self.h.f.with_vars(&XYZT)?;
        let f1 = (&f - &f0).exact_divide(&x)?;
        let alpha = self.alpha.with_vars(&XYZT)?;
        let g = &(&(&x.pow(self.d - 1) * &alpha) * &like.var_at(1)) - &f1;
        let quotient = self.to_normal_form(&(&u + &(&g * &v)))?;
        if self.mul(&self.x(), &quotient) != *e {
            return Err(Error::Internal("x-division failed to multiply back".into()));
        }
        Ok(Some(quotient))
    }

    /// A polynomial in `X, Y, Z, T` with image `e` whose monomials all have
    /// degree at most `w(e)`, built by repeatedly rewriting the top degree
    /// group through `α(0) x^d y - f0 = x·H`.
    pub fn admissible_representation(&self, e: &AElement) -> Result<MultiPoly> {
        let target = self
            .w_degree(e)
            .ok_or_else(|| Error::Usage("zero has no admissible representation".into()))?;
        let mut rep = self.to_poly(e);
        loop {
            let top = rep
                .terms()
                .map(|(m, _)| monomial_w(self.d, m))
                .max()
                .expect("nonzero");
            if top <= target {
                break;
            }
            let mut group = rep.zero_like();
            for (m, c) in rep.terms() {
                if monomial_w(self.d, m) == top {
                    group.add_term(m.clone(), c.clone());
                }
            }
            let lowered = self.lower_group(&group, top)?;
            rep = &(&rep - &group) + &lowered;
        }
        if self.to_normal_form(&rep)? != *e {
            return Err(Error::Internal(
                "admissible rewriting changed the element".into(),
            ));
        }
        Ok(rep)
    }

    /// Rewrites a sum of monomials of common degree `top` into monomials of
    /// degree at most `w(group)`.
    fn lower_group(&self, group: &MultiPoly, top: i64) -> Result<MultiPoly> {
        let d = self.d as i64;
        let (iota, beta) = if top <= 0 {
            (0, -top)
        } else {
            let iota = (top + d - 1) / d;
            (iota, d * iota - top)
        };
        // group = y^ι x^β · b(x^d y, z, t)
        let ring = MultiPoly::zero(self.h.field(), &XUZT);
        let mut b = ring.clone();
        for (m, c) in group.terms() {
            b.add_term(vec![0, m[1] - iota as u32, m[2], m[3]], c.clone());
        }
        let w_group = self
            .w_degree(&self.to_normal_form(group)?)
            .ok_or_else(|| Error::Internal("top degree group vanished in A".into()))?;
        let steps = top - w_group;
        if steps <= 0 {
            return Err(Error::Internal("top degree group is not cancelling".into()));
        }
        let x = ring.var_at(0);
        let u = ring.var_at(1);
        let f = self.h.f.with_vars(&XUZT)?;
        let f0 = self.f0.with_vars(&XUZT)?;
        let alpha = self.alpha.with_vars(&XUZT)?;
        let alpha0 = ring.constant_like(self.alpha0.clone());
        // α(0) u - f0 = x·h with h in K[x, u, z, t]
        let h = &(&(&f - &f0) - &(&(&alpha - &alpha0) * &u)).exact_divide(&x)?;
        let relation = &(&u * &alpha0) - &f0;
        for _ in 0..steps {
            let free = b.eval_var("X", &self.h.field().zero())?;
            let s = free.exact_divide(&relation).map_err(|_| {
                Error::Internal("negative-degree part outside the relation ideal".into())
            })?;
            b = &(&b - &free).exact_divide(&x)? + &(h * &s);
        }
        let like = group.zero_like();
        let xl = like.var_at(0);
        let images = [
            xl.clone(),
            &xl.pow(self.d) * &like.var_at(1),
            like.var_at(2),
            like.var_at(3),
        ];
        let prefix = &like.var_at(1).pow(iota as u32) * &xl.pow(beta as u32 + steps as u32);
        Ok(&prefix * &b.substitute(&images)?)
    }

    /// `w(α(0) x^d y - f0)`; the graded ring is `K[X,Y,Z,T]/(X^d Y - f0)`
    /// exactly when this is at most `-1`.
    pub fn gr_relation_residual(&self) -> Result<Option<i64>> {
        let like = MultiPoly::zero(self.h.field(), &XYZT);
        let p = &like
            .var_at(0)
            .pow(self.d)
            .mul_monomial(&[0, 1, 0, 0], &self.alpha0)
            - &self.f0.with_vars(&XYZT)?;
        Ok(self.w_degree(&self.to_normal_form(&p)?))
    }
}
