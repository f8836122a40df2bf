//! Sparse multivariate polynomials over a [`Field`].

pub mod bivariate;
pub mod factor;
pub mod groebner;
mod order;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{usage, Error, Result};
use crate::fields::{dense, Elem, Field};

pub use order::MonomialOrder;

pub type Exponents = Vec<u32>;

/// A polynomial in named variables. Terms are stored sparsely; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Elem>,
}

impl MultiPoly {
    pub fn zero(field: &Field, vars: &[&str]) -> MultiPoly {
        MultiPoly {
            field: field.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn zero_like(&self) -> MultiPoly {
        MultiPoly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn with_var_names(field: &Field, vars: Vec<String>) -> MultiPoly {
        MultiPoly {
            field: field.clone(),
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, vars: &[&str], c: Elem) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub(crate) fn constant_like(&self, c: Elem) -> MultiPoly {
        let mut p = self.zero_like();
        p.add_term(vec![0; self.nvars()], c);
        p
    }

    pub(crate) fn one_like(&self) -> MultiPoly {
        self.constant_like(self.field.one())
    }

    pub fn var(field: &Field, vars: &[&str], name: &str) -> Result<MultiPoly> {
        let p = MultiPoly::zero(field, vars);
        let i = p.var_index(name)?;
        Ok(p.var_at(i))
    }

    /// The variable with index `i` in this polynomial's ring.
    pub fn var_at(&self, i: usize) -> MultiPoly {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        let mut p = self.zero_like();
        p.add_term(e, self.field.one());
        p
    }

    pub fn monomial(&self, exps: Exponents, c: Elem) -> MultiPoly {
        let mut p = self.zero_like();
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(field: &Field, vars: &[&str], terms: Vec<(Exponents, Elem)>) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, e: Exponents, c: Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = self.field.add(v, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Usage(format!("unknown variable {name}")))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Elem> {
        if !self.is_constant() {
            return None;
        }
        Some(self.constant_term())
    }

    pub fn constant_term(&self) -> Elem {
        self.terms
            .get(&vec![0; self.nvars()])
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coefficient(&self, e: &[u32]) -> Elem {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn degree_in_var(&self, name: &str) -> Result<u32> {
        Ok(self.degree_in(self.var_index(name)?))
    }

    /// Whether the polynomial involves variable `i`.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub(crate) fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.field != other.field {
            return usage(format!(
                "field mismatch: {} vs {}",
                self.field.spec(),
                other.field.spec()
            ));
        }
        if self.vars != other.vars {
            return usage(format!(
                "variable mismatch: {:?} vs {:?}",
                self.vars, other.vars
            ));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Elem) -> MultiPoly {
        let mut p = self.zero_like();
        if self.field.is_zero(c) {
            return p;
        }
        for (e, v) in &self.terms {
            p.terms.insert(e.clone(), self.field.mul(v, c));
        }
        p
    }

    pub fn mul_monomial(&self, m: &[u32], c: &Elem) -> MultiPoly {
        let mut p = self.zero_like();
        if self.field.is_zero(c) {
            return p;
        }
        for (e, v) in &self.terms {
            let ne: Exponents = e.iter().zip(m).map(|(a, b)| a + b).collect();
            p.terms.insert(ne, self.field.mul(v, c));
        }
        p
    }

    pub fn pow(&self, mut n: u32) -> MultiPoly {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn checked_add(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(o)?;
        Ok(self + o)
    }

    pub fn checked_sub(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(o)?;
        Ok(self - o)
    }

    pub fn checked_mul(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(o)?;
        Ok(self * o)
    }

    /// Leading term with respect to lex order (variable 0 highest).
    fn lex_leading(&self) -> Option<(&Exponents, &Elem)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (de, dc) = d
            .lex_leading()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let inv = self.field.inv(&dc)?;
        let mut r = self.clone();
        let mut q = self.zero_like();
        while let Some((re, rc)) = r.lex_leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return Err(Error::NotDivisible);
            }
            let me: Exponents = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let mc = self.field.mul(&rc, &inv);
            r = &r - &d.mul_monomial(&me, &mc);
            q.add_term(me, mc);
        }
        Ok(q)
    }

    /// Coefficients with respect to variable `i`: entry `k` is the
    /// coefficient of `x_i^k`, a polynomial in the same ring free of `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<MultiPoly> {
        let n = self.degree_in(i) as usize;
        let mut out = vec![self.zero_like(); if self.is_zero() { 0 } else { n + 1 }];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i] as usize;
            e2[i] = 0;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    /// Division in variable `i` by a divisor whose leading coefficient in
    /// that variable is a nonzero constant. Returns `(q, r)` with
    /// `deg_i r < deg_i divisor`.
    pub fn divmod_in(&self, i: usize, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        self.same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dn = divisor.degree_in(i);
        let lc_poly = divisor.coefficients_in(i).pop().unwrap();
        let lc = lc_poly.constant_value().ok_or_else(|| {
            Error::Usage(
                "divisor leading coefficient in the division variable is not a unit".into(),
            )
        })?;
        let inv = self.field.inv(&lc)?;
        let mut r = self.clone();
        let mut q = self.zero_like();
        loop {
            let rn = r.degree_in(i);
            if r.is_zero() || rn < dn {
                break;
            }
            // all terms of r with x_i^rn, shifted down by dn
            let mut t = self.zero_like();
            for (e, c) in r.terms.iter().filter(|(e, _)| e[i] == rn) {
                let mut e2 = e.clone();
                e2[i] -= dn;
                t.terms.insert(e2, self.field.mul(c, &inv));
            }
            r = &r - &(&t * divisor);
            q = &q + &t;
        }
        Ok((q, r))
    }

    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            let c2 = self.field.mul(c, &self.field.from_i64(e[i] as i64));
            p.add_term(e2, c2);
        }
        p
    }

    pub fn derivative(&self, name: &str) -> Result<MultiPoly> {
        Ok(self.partial_derivative(self.var_index(name)?))
    }

    /// Substitutes `images[i]` for variable `i`. All images must share a
    /// ring, which becomes the ring of the result. Coefficients of `self`
    /// are lifted if the target field is an extension of `self`'s field.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars() {
            return usage("substitution needs one image per variable");
        }
        let target = images
            .first()
            .map(|p| p.zero_like())
            .unwrap_or_else(|| self.zero_like());
        for im in images {
            target.same_ring(im)?;
        }
        let lift = lifter(&self.field, &target.field)?;
        // cache powers per variable
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|im| vec![target.one_like(), im.clone()])
            .collect();
        let mut out = target.clone();
        for (e, c) in &self.terms {
            let mut term = target.constant_like(lift(c));
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Binds variable `name` to a constant, keeping the variable list.
    pub fn eval_var(&self, name: &str, value: &Elem) -> Result<MultiPoly> {
        let i = self.var_index(name)?;
        self.field.check(value)?;
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i];
            e2[i] = 0;
            p.add_term(e2, self.field.mul(c, &self.field.pow(value, k as u64)));
        }
        Ok(p)
    }

    /// Same polynomial viewed in a ring with a different variable list; every
    /// variable that occurs must exist in `vars`.
    pub fn with_vars(&self, vars: &[&str]) -> Result<MultiPoly> {
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if !self.involves(i) => map.push(None),
                None => return usage(format!("variable {v} missing from target ring")),
            }
        }
        let mut p = MultiPoly::zero(&self.field, vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    e2[j] = k;
                }
            }
            p.add_term(e2, c.clone());
        }
        Ok(p)
    }

    /// Coefficients moved into `field`, which must equal this field or be an
    /// extension of it.
    pub fn promote(&self, field: &Field) -> Result<MultiPoly> {
        let lift = lifter(&self.field, field)?;
        let mut p = MultiPoly::with_var_names(field, self.vars.clone());
        for (e, c) in &self.terms {
            p.add_term(e.clone(), lift(c));
        }
        Ok(p)
    }

    /// Dense coefficient list in variable `i` for a polynomial involving no
    /// other variable.
    pub fn to_dense(&self, i: usize) -> Result<Vec<Elem>> {
        let mut out = vec![self.field.zero(); self.degree_in(i) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return usage("polynomial is not univariate in the requested variable");
            }
            out[e[i] as usize] = c.clone();
        }
        dense::trim(&self.field, &mut out);
        Ok(out)
    }

    pub fn from_dense(field: &Field, vars: &[&str], i: usize, coeffs: &[Elem]) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars);
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = k as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Splits `f = content * primitive`, where `f` is read as a polynomial in
    /// the variables `main` with coefficients in the remaining variables. The
    /// remaining variables must number at most one. The content is monic.
    pub fn content_free_part(&self, main: &[usize]) -> Result<(MultiPoly, MultiPoly)> {
        let rest: Vec<usize> = (0..self.nvars()).filter(|i| !main.contains(i)).collect();
        if rest.len() > 1 {
            return Err(Error::Unsupported(
                "content over more than one coefficient variable".into(),
            ));
        }
        if self.is_zero() {
            return Ok((self.one_like(), self.clone()));
        }
        let Some(&r) = rest.first() else {
            let lc = self.lex_leading().unwrap().1.clone();
            let c = self.constant_like(lc.clone());
            return Ok((c, self.scale(&self.field.inv(&lc)?)));
        };
        let k = &self.field;
        // group by main-variable exponents
        let mut groups: BTreeMap<Exponents, Vec<Elem>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Exponents = main.iter().map(|&i| e[i]).collect();
            let dense = groups.entry(key).or_default();
            let d = e[r] as usize;
            if dense.len() <= d {
                dense.resize(d + 1, k.zero());
            }
            dense[d] = c.clone();
        }
        let mut g: Vec<Elem> = Vec::new();
        for coeffs in groups.values() {
            g = dense::gcd(k, &g, coeffs);
        }
        let content = MultiPoly::from_dense(k, &self.var_names(), r, &g);
        let prim = self.exact_divide(&content)?;
        Ok((content, prim))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    /// Terms of maximal weight under integer weights, with that weight.
    pub fn weighted_top(&self, weights: &[u32]) -> (MultiPoly, u64) {
        let w = |e: &Exponents| -> u64 {
            e.iter()
                .zip(weights)
                .map(|(&a, &b)| a as u64 * b as u64)
                .sum()
        };
        let top = self.terms.keys().map(w).max().unwrap_or(0);
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            if w(e) == top {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        (p, top)
    }

    /// Largest power of variable `i` dividing the polynomial.
    pub fn valuation_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn map_coefficients(&self, f: impl Fn(&Elem) -> Elem) -> MultiPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c));
        }
        p
    }

    /// Leading (exponent, coefficient) under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Exponents, &Elem)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Makes the leading coefficient (under `order`) equal to one.
    pub fn monic(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(c).expect("nonzero")),
        }
    }

    /// Drops the constant term.
    pub fn without_constant(&self) -> MultiPoly {
        let mut p = self.clone();
        p.terms.remove(&vec![0; self.nvars()]);
        p
    }
}

/// Map from elements of `from` into `to`; `to` must be `from` or an
/// extension built over `from`.
pub(crate) fn lifter(from: &Field, to: &Field) -> Result<Box<dyn Fn(&Elem) -> Elem>> {
    if from == to {
        return Ok(Box::new(|c: &Elem| c.clone()));
    }
    if to.is_extension() && to.base() == *from {
        let to = to.clone();
        return Ok(Box::new(move |c: &Elem| to.lift(c.clone())));
    }
    usage(format!(
        "cannot move coefficients from {} to {}",
        from.spec(),
        to.spec()
    ))
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        debug_assert!(self.same_ring(o).is_ok(), "ring mismatch in add");
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        debug_assert!(self.same_ring(o).is_ok(), "ring mismatch in sub");
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), self.field.neg(c));
        }
        p
    }
}

impl<'a> Neg for &'a MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coefficients(|c| self.field.neg(c))
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        debug_assert!(self.same_ring(o).is_ok(), "ring mismatch in mul");
        let mut p = self.zero_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, self.field.mul(c1, c2));
            }
        }
        p
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::format_poly(self))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {}",
            crate::parse::format_poly(self),
            self.field.spec()
        )
    }
}

#[cfg(test)]
mod tests;
