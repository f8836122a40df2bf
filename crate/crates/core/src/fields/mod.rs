//! Exact coefficient fields: `Q`, `F_p`, `F_p(s)` and a single algebraic
//! extension `K[g]/(m(g))` over any of them.
//!
//! A [`Field`] is a cheap, shareable descriptor. Elements ([`Elem`]) carry no
//! reference to their field; every operation goes through the descriptor,
//! which checks that the element has the right shape.

pub mod dense;
pub mod fp_poly;
mod pth_root;

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{usage, Error, Result};
use fp_poly::FpPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    /// `F_p(s)`, rational functions in one parameter over a prime field.
    RationalFunctions {
        p: u64,
        param: String,
    },
    /// `base[g]/(minpoly(g))` with a monic irreducible minimal polynomial of
    /// degree at least two, coefficients low degree first.
    Extension {
        base: Field,
        minpoly: Vec<Elem>,
        generator: String,
    },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldKind>);

/// A field element in canonical form.
///
/// Rational-function elements keep a coprime numerator/denominator pair with
/// monic denominator; algebraic elements keep their coordinate vector in the
/// power basis with trailing zeros removed (so zero is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Rational(BigRational),
    Residue(u64),
    RatFun { num: FpPoly, den: FpPoly },
    Algebraic(Vec<Elem>),
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !fp_poly::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("prime {p} too large")));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    pub fn rational_functions(p: u64, param: &str) -> Result<Field> {
        Field::prime(p)?;
        Ok(Field(Arc::new(FieldKind::RationalFunctions {
            p,
            param: param.to_string(),
        })))
    }

    /// Builds `self[g]/(minpoly)`. The polynomial must be monic of degree at
    /// least two and irreducible over `self`; a reducible input is rejected
    /// with one of its nontrivial factors.
    pub fn extend(&self, minpoly: &[Elem], generator: &str) -> Result<Field> {
        if self.is_extension() {
            return Err(Error::Unsupported(
                "extensions of extension fields".to_string(),
            ));
        }
        let m = dense::trimmed(self, minpoly);
        if m.len() < 3 {
            return Err(Error::InvalidField(
                "minimal polynomial must have degree at least 2".into(),
            ));
        }
        for c in &m {
            self.check(c)?;
        }
        if !self.is_one(m.last().unwrap()) {
            return Err(Error::InvalidField(
                "minimal polynomial must be monic".into(),
            ));
        }
        crate::poly::factor::certify_irreducible(self, &m)?;
        Ok(Field::extension_unchecked(self, m, generator))
    }

    /// Extension without the irreducibility check. Callers must already know
    /// `minpoly` is irreducible (e.g. it came out of a factorization).
    pub(crate) fn extension_unchecked(base: &Field, minpoly: Vec<Elem>, generator: &str) -> Field {
        Field(Arc::new(FieldKind::Extension {
            base: base.clone(),
            minpoly,
            generator: generator.to_string(),
        }))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        match self.kind() {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
            FieldKind::RationalFunctions { p, .. } => *p,
            FieldKind::Extension { base, .. } => base.characteristic(),
        }
    }

    pub fn is_extension(&self) -> bool {
        matches!(self.kind(), FieldKind::Extension { .. })
    }

    /// The field an extension is built over; a base field returns itself.
    pub fn base(&self) -> Field {
        match self.kind() {
            FieldKind::Extension { base, .. } => base.clone(),
            _ => self.clone(),
        }
    }

    pub fn minpoly(&self) -> Option<&[Elem]> {
        match self.kind() {
            FieldKind::Extension { minpoly, .. } => Some(minpoly),
            _ => None,
        }
    }

    /// Degree over the base field (1 for base fields).
    pub fn degree(&self) -> usize {
        self.minpoly().map(|m| m.len() - 1).unwrap_or(1)
    }

    /// Name of the adjoined generator or of the function-field parameter.
    pub fn symbol(&self) -> Option<&str> {
        match self.kind() {
            FieldKind::Extension { generator, .. } => Some(generator),
            FieldKind::RationalFunctions { param, .. } => Some(param),
            _ => None,
        }
    }

    /// Canonical textual field spec: `Q`, `F5`, `F2(s)`, `Q[i]/(i^2+1)`.
    pub fn spec(&self) -> String {
        match self.kind() {
            FieldKind::Rationals => "Q".to_string(),
            FieldKind::Prime(p) => format!("F{p}"),
            FieldKind::RationalFunctions { p, param } => format!("F{p}({param})"),
            FieldKind::Extension {
                base,
                minpoly,
                generator,
            } => format!(
                "{}[{}]/({})",
                base.spec(),
                generator,
                dense::format(base, minpoly, generator)
            ),
        }
    }

    // ----- constructors -----

    pub fn zero(&self) -> Elem {
        match self.kind() {
            FieldKind::Rationals => Elem::Rational(BigRational::zero()),
            FieldKind::Prime(_) => Elem::Residue(0),
            FieldKind::RationalFunctions { .. } => Elem::RatFun {
                num: Vec::new(),
                den: vec![1],
            },
            FieldKind::Extension { .. } => Elem::Algebraic(Vec::new()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match self.kind() {
            FieldKind::Rationals => Elem::Rational(BigRational::from_integer(n.clone())),
            FieldKind::Prime(p) => Elem::Residue(reduce_bigint(n, *p)),
            FieldKind::RationalFunctions { p, .. } => {
                let mut num = vec![reduce_bigint(n, *p)];
                fp_poly::trim(&mut num);
                Elem::RatFun { num, den: vec![1] }
            }
            FieldKind::Extension { base, .. } => self.lift(base.from_bigint(n)),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Elem> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        self.div(&n, &d)
    }

    /// Embeds an element of the base field into an extension.
    pub fn lift(&self, base_elem: Elem) -> Elem {
        match self.kind() {
            FieldKind::Extension { base, .. } => {
                if base.is_zero(&base_elem) {
                    Elem::Algebraic(Vec::new())
                } else {
                    Elem::Algebraic(vec![base_elem])
                }
            }
            _ => base_elem,
        }
    }

    /// Generator of an extension, or the parameter `s` of `F_p(s)`.
    pub fn generator(&self) -> Option<Elem> {
        match self.kind() {
            FieldKind::Extension { base, .. } => {
                Some(Elem::Algebraic(vec![base.zero(), base.one()]))
            }
            FieldKind::RationalFunctions { .. } => Some(Elem::RatFun {
                num: vec![0, 1],
                den: vec![1],
            }),
            _ => None,
        }
    }

    /// Element `Σ coords[i] g^i` of an extension.
    pub fn from_coords(&self, coords: Vec<Elem>) -> Elem {
        match self.kind() {
            FieldKind::Extension { base, minpoly, .. } => {
                let r = dense::rem(base, &coords, minpoly);
                Elem::Algebraic(r)
            }
            _ => coords.into_iter().next().unwrap_or_else(|| self.zero()),
        }
    }

    /// Coordinates of an element over the base field, padded to `degree()`.
    pub fn coords(&self, x: &Elem) -> Vec<Elem> {
        match (self.kind(), x) {
            (FieldKind::Extension { base, .. }, Elem::Algebraic(v)) => {
                let mut v = v.clone();
                v.resize(self.degree(), base.zero());
                v
            }
            _ => vec![x.clone()],
        }
    }

    /// Element of `F_p(s)` from numerator/denominator coefficient lists.
    pub fn ratfun(&self, num: &[u64], den: &[u64]) -> Result<Elem> {
        match self.kind() {
            FieldKind::RationalFunctions { p, .. } => {
                let n: FpPoly = num.iter().map(|c| c % p).collect();
                let d: FpPoly = den.iter().map(|c| c % p).collect();
                ratfun_make(n, d, *p)
            }
            _ => usage("ratfun on a field that is not F_p(s)"),
        }
    }

    // ----- predicates -----

    pub fn is_zero(&self, x: &Elem) -> bool {
        match x {
            Elem::Rational(q) => q.is_zero(),
            Elem::Residue(r) => *r == 0,
            Elem::RatFun { num, .. } => num.is_empty(),
            Elem::Algebraic(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self, x: &Elem) -> bool {
        *x == self.one()
    }

    /// Whether the element lies in the prime subfield (or `Q`); used for
    /// printing without parentheses.
    pub fn is_integer_like(&self, x: &Elem) -> bool {
        match x {
            Elem::Rational(q) => q.is_integer(),
            Elem::Residue(_) => true,
            Elem::RatFun { num, den } => num.len() <= 1 && den.len() == 1,
            Elem::Algebraic(v) => v.len() <= 1 && v.iter().all(|c| self.base().is_integer_like(c)),
        }
    }

    /// Verifies that `x` has the representation this field expects.
    pub fn check(&self, x: &Elem) -> Result<()> {
        let ok = match (self.kind(), x) {
            (FieldKind::Rationals, Elem::Rational(_)) => true,
            (FieldKind::Prime(p), Elem::Residue(r)) => r < p,
            (FieldKind::RationalFunctions { .. }, Elem::RatFun { .. }) => true,
            (FieldKind::Extension { base, .. }, Elem::Algebraic(v)) => {
                v.len() < self.degree() + 1 && v.iter().all(|c| base.check(c).is_ok())
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            usage(format!("element {x:?} does not belong to {}", self.spec()))
        }
    }

    // ----- arithmetic -----

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.kind(), a, b) {
            (_, Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x + y),
            (FieldKind::Prime(p), Elem::Residue(x), Elem::Residue(y)) => {
                Elem::Residue(fp_poly::addmod(*x, *y, *p))
            }
            (
                FieldKind::RationalFunctions { p, .. },
                Elem::RatFun { num: n1, den: d1 },
                Elem::RatFun { num: n2, den: d2 },
            ) => {
                if d1 == d2 {
                    let n = fp_poly::add(n1, n2, *p);
                    ratfun_make(n, d1.clone(), *p).expect("nonzero denominator")
                } else {
                    let n = fp_poly::add(&fp_poly::mul(n1, d2, *p), &fp_poly::mul(n2, d1, *p), *p);
                    let d = fp_poly::mul(d1, d2, *p);
                    ratfun_make(n, d, *p).expect("nonzero denominator")
                }
            }
            (FieldKind::Extension { base, .. }, Elem::Algebraic(x), Elem::Algebraic(y)) => {
                Elem::Algebraic(dense::add(base, x, y))
            }
            _ => panic!("field element mismatch in add over {}", self.spec()),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self.kind(), a) {
            (_, Elem::Rational(x)) => Elem::Rational(-x),
            (FieldKind::Prime(p), Elem::Residue(x)) => Elem::Residue(fp_poly::submod(0, *x, *p)),
            (FieldKind::RationalFunctions { p, .. }, Elem::RatFun { num, den }) => Elem::RatFun {
                num: fp_poly::sub(&[], num, *p),
                den: den.clone(),
            },
            (FieldKind::Extension { base, .. }, Elem::Algebraic(x)) => {
                Elem::Algebraic(x.iter().map(|c| base.neg(c)).collect())
            }
            _ => panic!("field element mismatch in neg over {}", self.spec()),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.kind(), a, b) {
            (_, Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x * y),
            (FieldKind::Prime(p), Elem::Residue(x), Elem::Residue(y)) => {
                Elem::Residue(fp_poly::mulmod(*x, *y, *p))
            }
            (
                FieldKind::RationalFunctions { p, .. },
                Elem::RatFun { num: n1, den: d1 },
                Elem::RatFun { num: n2, den: d2 },
            ) => {
                // cross-cancel first to keep degrees small
                let g1 = fp_poly::gcd(n1, d2, *p);
                let g2 = fp_poly::gcd(n2, d1, *p);
                let (n1, d2) = cancel(n1, d2, &g1, *p);
                let (n2, d1) = cancel(n2, d1, &g2, *p);
                let n = fp_poly::mul(&n1, &n2, *p);
                let d = fp_poly::mul(&d1, &d2, *p);
                ratfun_make(n, d, *p).expect("nonzero denominator")
            }
            (
                FieldKind::Extension { base, minpoly, .. },
                Elem::Algebraic(x),
                Elem::Algebraic(y),
            ) => Elem::Algebraic(dense::rem(base, &dense::mul(base, x, y), minpoly)),
            _ => panic!("field element mismatch in mul over {}", self.spec()),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self.kind(), a) {
            (_, Elem::Rational(x)) => Elem::Rational(x.recip()),
            (FieldKind::Prime(p), Elem::Residue(x)) => Elem::Residue(fp_poly::invmod(*x, *p)),
            (FieldKind::RationalFunctions { p, .. }, Elem::RatFun { num, den }) => {
                ratfun_make(den.clone(), num.clone(), *p)?
            }
            (FieldKind::Extension { base, minpoly, .. }, Elem::Algebraic(x)) => {
                let (g, s, _) = dense::ext_gcd(base, x, minpoly);
                if g.len() != 1 {
                    return Err(Error::Internal(
                        "extension element not invertible; minimal polynomial reducible".into(),
                    ));
                }
                Elem::Algebraic(dense::rem(base, &s, minpoly))
            }
            _ => return usage(format!("element mismatch in inv over {}", self.spec())),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn pow_big(&self, a: &Elem, e: &BigUint) -> Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// The unique `r` with `r^p = x` in characteristic `p`, if it exists in
    /// this field. Returns `None` in characteristic zero.
    pub fn pth_root(&self, x: &Elem) -> Option<Elem> {
        pth_root::pth_root(self, x)
    }

    /// Order of the field when finite.
    pub fn size(&self) -> Option<BigUint> {
        match self.kind() {
            FieldKind::Prime(p) => Some(BigUint::from(*p)),
            FieldKind::Extension { base, .. } => base.size().map(|q| q.pow(self.degree() as u32)),
            _ => None,
        }
    }

    /// Rational value of an element of `Q`, for callers that need integers.
    pub fn as_rational<'a>(&self, x: &'a Elem) -> Option<&'a BigRational> {
        match x {
            Elem::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Small integer value of a prime-field or rational element, if any.
    pub fn as_i64(&self, x: &Elem) -> Option<i64> {
        match x {
            Elem::Rational(q) if q.is_integer() => q.to_integer().to_i64(),
            Elem::Residue(r) => Some(*r as i64),
            _ => None,
        }
    }

    /// Renders an element in the expression grammar accepted by the parser.
    /// Compound values are parenthesized.
    pub fn format(&self, x: &Elem) -> String {
        match (self.kind(), x) {
            (_, Elem::Rational(q)) => {
                if q.is_integer() {
                    if q.is_negative() {
                        format!("({})", q.numer())
                    } else {
                        q.numer().to_string()
                    }
                } else {
                    format!("({}/{})", q.numer(), q.denom())
                }
            }
            (_, Elem::Residue(r)) => r.to_string(),
            (FieldKind::RationalFunctions { p, param }, Elem::RatFun { num, den }) => {
                let pb = Field::prime(*p).expect("prime");
                let n: Vec<Elem> = num.iter().map(|&c| Elem::Residue(c)).collect();
                let ns = dense::format(&pb, &n, param);
                if den.len() == 1 {
                    wrap_compound(ns)
                } else {
                    let d: Vec<Elem> = den.iter().map(|&c| Elem::Residue(c)).collect();
                    format!("(({ns})/({}))", dense::format(&pb, &d, param))
                }
            }
            (
                FieldKind::Extension {
                    base, generator, ..
                },
                Elem::Algebraic(v),
            ) => {
                if v.len() <= 1 {
                    v.first()
                        .map(|c| base.format(c))
                        .unwrap_or_else(|| "0".into())
                } else {
                    wrap_compound(dense::format(base, v, generator))
                }
            }
            _ => format!("{x:?}"),
        }
    }
}

/// Parenthesizes sums and negations so the text can stand as a factor.
fn wrap_compound(s: String) -> String {
    if s.starts_with('-') || s[1..].contains(['+', '-']) {
        format!("({s})")
    } else {
        s
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() {
        m + BigInt::from(p)
    } else {
        m
    };
    m.to_u64().expect("residue fits")
}

fn cancel(n: &[u64], d: &[u64], g: &[u64], p: u64) -> (FpPoly, FpPoly) {
    if g.len() <= 1 {
        (n.to_vec(), d.to_vec())
    } else {
        (fp_poly::divrem(n, g, p).0, fp_poly::divrem(d, g, p).0)
    }
}

fn ratfun_make(mut num: FpPoly, mut den: FpPoly, p: u64) -> Result<Elem> {
    fp_poly::trim(&mut num);
    fp_poly::trim(&mut den);
    if den.is_empty() {
        return Err(Error::DivisionByZero);
    }
    if num.is_empty() {
        return Ok(Elem::RatFun { num, den: vec![1] });
    }
    let g = fp_poly::gcd(&num, &den, p);
    if g.len() > 1 {
        num = fp_poly::divrem(&num, &g, p).0;
        den = fp_poly::divrem(&den, &g, p).0;
    }
    let lc = *den.last().unwrap();
    if lc != 1 {
        let inv = fp_poly::invmod(lc, p);
        num = fp_poly::scale(&num, inv, p);
        den = fp_poly::scale(&den, inv, p);
    }
    Ok(Elem::RatFun { num, den })
}

impl Elem {
    pub fn rational(n: i64, d: i64) -> Elem {
        Elem::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn is_one_rational(&self) -> bool {
        matches!(self, Elem::Rational(q) if q.is_one())
    }
}

#[cfg(test)]
mod tests;
