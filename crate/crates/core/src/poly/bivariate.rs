//! Irreducibility of polynomials in two variables.
//!
//! Over `Q` and `F_p` the decision is exhaustive: substitute `Z = x`,
//! `T = x^D` with `D > deg_Z f`, factor the univariate image, and test every
//! recombination of image factors for divisibility. Over a small extension
//! of `Q` or `F_p` the same procedure runs on the norm. A cheap sufficient
//! test by specialization is tried first everywhere.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::factor::{dense_irreducible, factor_dense, norm};
use super::{MonomialOrder, MultiPoly};
use crate::error::{usage, Error, Result};
use crate::fields::{dense, Elem, Field, FieldKind};

pub const DEFAULT_DEGREE_BOUND: u32 = 12;
const NORM_MAX_EXTENSION_DEGREE: usize = 3;
const NORM_SHIFTS: i64 = 6;
const NORM_MAX_TOTAL_DEGREE: u32 = 8;
const MAX_SUBSETS: usize = 1 << 17;
const SEED: u64 = 0xb1;

#[derive(Debug, Clone, PartialEq)]
pub enum Irreducibility {
    Irreducible,
    /// Carries a verified nontrivial factor.
    Reducible(MultiPoly),
    Unknown(String),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// Decides irreducibility of a nonconstant polynomial involving at most two
/// variables of its ring.
pub fn bivariate_irreducible(f: &MultiPoly, degree_bound: u32) -> Result<Irreducibility> {
    if f.is_constant() {
        return usage("irreducibility of a constant");
    }
    let names: Vec<&str> = (0..f.nvars())
        .filter(|&i| f.involves(i))
        .map(|i| f.vars()[i].as_str())
        .collect();
    if names.len() > 2 {
        return usage("bivariate_irreducible needs at most two variables");
    }
    let g = f.with_vars(&names)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    Ok(match decide(&g, degree_bound, &mut rng)? {
        Irreducibility::Reducible(w) => {
            Irreducibility::Reducible(w.with_vars(&f.var_names())?.monic(MonomialOrder::GrevLex))
        }
        other => other,
    })
}

fn decide(f: &MultiPoly, bound: u32, rng: &mut ChaCha8Rng) -> Result<Irreducibility> {
    let k = f.field().clone();
    if f.nvars() == 1 {
        return univariate(f, rng);
    }
    for i in 0..2 {
        if f.valuation_in(i).unwrap_or(0) > 0 {
            return Ok(Irreducibility::Reducible(f.var_at(i)));
        }
    }
    if !f.involves(0) || !f.involves(1) {
        let v = if f.involves(0) { 0 } else { 1 };
        let u = f.with_vars(&[f.vars()[v].as_str()])?;
        return Ok(match univariate(&u, rng)? {
            Irreducibility::Reducible(w) => Irreducibility::Reducible(w.with_vars(&f.var_names())?),
            other => other,
        });
    }
    for i in 0..2 {
        let (c, _) = f.content_free_part(&[i])?;
        if !c.is_constant() {
            return Ok(Irreducibility::Reducible(c));
        }
    }
    let total = f.total_degree().unwrap_or(0);
    if total == 1 || specialization_certifies(f, rng) {
        return Ok(Irreducibility::Irreducible);
    }
    match k.kind() {
        FieldKind::Rationals | FieldKind::Prime(_) => {
            if total > bound {
                return Ok(Irreducibility::Unknown(format!(
                    "total degree {total} exceeds the bound {bound}"
                )));
            }
            kronecker(f, rng)
        }
        FieldKind::Extension { base, .. }
            if matches!(base.kind(), FieldKind::Rationals | FieldKind::Prime(_)) =>
        {
            if k.degree() > NORM_MAX_EXTENSION_DEGREE || total > NORM_MAX_TOTAL_DEGREE {
                return Ok(Irreducibility::Unknown(format!(
                    "norm reduction limited to extension degree {NORM_MAX_EXTENSION_DEGREE} and total degree {NORM_MAX_TOTAL_DEGREE}"
                )));
            }
            via_norm(f, rng)
        }
        _ => Ok(Irreducibility::Unknown(format!(
            "no exhaustive bivariate test over {}",
            k.spec()
        ))),
    }
}

fn univariate(f: &MultiPoly, rng: &mut ChaCha8Rng) -> Result<Irreducibility> {
    let k = f.field();
    let d = f.to_dense(0)?;
    if d.len() == 2 {
        return Ok(Irreducibility::Irreducible);
    }
    match factor_dense(k, &d, rng) {
        Ok(df) => {
            let total: usize = df.factors.iter().map(|(_, m, _)| m).sum();
            if total > 1 {
                let g = MultiPoly::from_dense(k, &f.var_names(), 0, &df.factors[0].0);
                Ok(Irreducibility::Reducible(g))
            } else if df.factors[0].2 {
                Ok(Irreducibility::Irreducible)
            } else {
                Ok(Irreducibility::Unknown(format!(
                    "irreducibility over {} not certified",
                    k.spec()
                )))
            }
        }
        Err(Error::Unsupported(m)) => Ok(Irreducibility::Unknown(m)),
        Err(e) => Err(e),
    }
}

fn specialization_points(k: &Field) -> Vec<Elem> {
    let mut pts: Vec<Elem> = Vec::new();
    for c in [0i64, 1, -1, 2, -2, 3, -3] {
        let e = k.from_i64(c);
        if !pts.contains(&e) {
            pts.push(e);
        }
    }
    if let Some(g) = k.generator() {
        pts.push(k.add(&g, &k.one()));
        pts.push(g);
    }
    pts
}

/// Sufficient test for a polynomial primitive in both variables: if
/// `f(Z, t0)` keeps its `Z`-degree and is irreducible, any factorization of
/// `f` would have a factor free of `Z`, contradicting primitivity.
fn specialization_certifies(f: &MultiPoly, rng: &mut ChaCha8Rng) -> bool {
    let k = f.field();
    let names = f.var_names();
    for main in 0..2 {
        let other = 1 - main;
        let n = f.degree_in(main) as usize;
        let lc = f.coefficients_in(main).pop().unwrap();
        for t0 in specialization_points(k) {
            let Ok(lc0) = lc.eval_var(names[other], &t0) else {
                continue;
            };
            if lc0.is_zero() {
                continue;
            }
            let Ok(g) = f.eval_var(names[other], &t0).and_then(|g| g.to_dense(main)) else {
                continue;
            };
            if g.len() == n + 1 && dense_irreducible(k, &g, rng) {
                return true;
            }
        }
    }
    false
}

/// Exhaustive decision over `Q` or `F_p` for `f` primitive in both variables.
fn kronecker(f: &MultiPoly, rng: &mut ChaCha8Rng) -> Result<Irreducibility> {
    let k = f.field();
    let dz = f.degree_in(0) as usize;
    let dt = f.degree_in(1) as usize;
    let base = dz + 1;
    let mut img = vec![k.zero(); dz + base * dt + 1];
    for (e, c) in f.terms() {
        img[e[0] as usize + base * e[1] as usize] = c.clone();
    }
    let df = factor_dense(k, &img, rng)?;
    let mut pieces: Vec<Vec<Elem>> = Vec::new();
    for (g, m, _) in df.factors {
        for _ in 0..m {
            pieces.push(g.clone());
        }
    }
    let r = pieces.len();
    if r <= 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut budget = MAX_SUBSETS;
    for size in 1..=r / 2 {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if budget == 0 {
                return Ok(Irreducibility::Unknown(format!(
                    "recombination of {r} image factors exceeds the subset budget"
                )));
            }
            budget -= 1;
            let g = idx
                .iter()
                .fold(vec![k.one()], |acc, &i| dense::mul(k, &acc, &pieces[i]));
            if seen.insert(g.clone()) {
                if let Some(h) = inverse_kronecker(f, &g, base, dz, dt) {
                    if f.exact_divide(&h).is_ok() {
                        return Ok(Irreducibility::Reducible(h));
                    }
                }
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
    }
    Ok(Irreducibility::Irreducible)
}

fn inverse_kronecker(
    like: &MultiPoly,
    g: &[Elem],
    base: usize,
    dz: usize,
    dt: usize,
) -> Option<MultiPoly> {
    let mut h = like.zero_like();
    for (j, c) in g.iter().enumerate() {
        let (ez, et) = (j % base, j / base);
        if like.field().is_zero(c) {
            continue;
        }
        if ez > dz || et > dt {
            return None;
        }
        h.add_term(vec![ez as u32, et as u32], c.clone());
    }
    if h.is_constant() {
        None
    } else {
        Some(h)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Over `K = B[g]/(m)`: an irreducible norm certifies irreducibility; a
/// factor of the norm sharing a proper gcd with `f` witnesses reducibility.
/// `Z` is shifted by `c*g` until the norm is squarefree.
fn via_norm(f: &MultiPoly, rng: &mut ChaCha8Rng) -> Result<Irreducibility> {
    let k = f.field();
    let g = k.generator().expect("extension field");
    let total = f.total_degree().unwrap_or(0);
    for c in 0..NORM_SHIFTS {
        let shift = k.mul(&k.from_i64(c), &g);
        let z = &f.var_at(0) - &MultiPoly::constant(k, &f.var_names(), shift.clone());
        let fs = f.substitute(&[z, f.var_at(1)])?;
        let Some(factors) = norm_factors(&norm(&fs)?, rng)? else {
            return Ok(Irreducibility::Unknown(
                "norm factorization not certified".into(),
            ));
        };
        if factors.len() == 1 {
            return Ok(Irreducibility::Irreducible);
        }
        let distinct = factors.iter().enumerate().all(|(i, a)| {
            factors[i + 1..]
                .iter()
                .all(|b| b.monic(MonomialOrder::GrevLex) != a.monic(MonomialOrder::GrevLex))
        });
        if !distinct {
            continue;
        }
        let back = &f.var_at(0) + &MultiPoly::constant(k, &f.var_names(), shift);
        for h in factors {
            let d = gcd(&fs, &h.promote(k)?)?;
            let dd = d.total_degree().unwrap_or(0);
            if dd > 0 && dd < total {
                let w = d.substitute(&[back.clone(), f.var_at(1)])?;
                if f.exact_divide(&w).is_ok() {
                    return Ok(Irreducibility::Reducible(w));
                }
            }
        }
        break;
    }
    Ok(Irreducibility::Unknown(
        "norm splits but no factor over the extension was isolated".into(),
    ))
}

/// Irreducible factors of `n` over the base field, with repetition.
fn norm_factors(n: &MultiPoly, rng: &mut ChaCha8Rng) -> Result<Option<Vec<MultiPoly>>> {
    let mut pending = vec![n.clone()];
    let mut factors = Vec::new();
    while let Some(h) = pending.pop() {
        if h.total_degree().unwrap_or(0) == 0 {
            continue;
        }
        if specialization_certifies(&h, rng) {
            factors.push(h);
            continue;
        }
        match decide_base(&h, rng)? {
            Irreducibility::Irreducible => factors.push(h),
            Irreducibility::Reducible(w) => {
                let q = h.exact_divide(&w)?;
                pending.push(w);
                pending.push(q);
            }
            Irreducibility::Unknown(_) => return Ok(None),
        }
    }
    Ok(Some(factors))
}

fn decide_base(h: &MultiPoly, rng: &mut ChaCha8Rng) -> Result<Irreducibility> {
    if h.total_degree().unwrap_or(0) <= 1 {
        return Ok(Irreducibility::Irreducible);
    }
    for i in 0..2 {
        if h.valuation_in(i).unwrap_or(0) > 0 {
            return Ok(Irreducibility::Reducible(h.var_at(i)));
        }
    }
    for i in 0..2 {
        let (c, p) = h.content_free_part(&[i])?;
        if !c.is_constant() && !p.is_constant() {
            return Ok(Irreducibility::Reducible(c));
        }
    }
    if !h.involves(0) || !h.involves(1) {
        let v = if h.involves(0) { 0 } else { 1 };
        let u = h.with_vars(&[h.vars()[v].as_str()])?;
        return Ok(match univariate(&u, rng)? {
            Irreducibility::Reducible(w) => Irreducibility::Reducible(w.with_vars(&h.var_names())?),
            other => other,
        });
    }
    kronecker(h, rng)
}

/// Pseudo-remainder of `a` by `b` in variable 0.
fn prem(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let db = b.degree_in(0);
    let lb = b.coefficients_in(0).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(0) >= db {
        let dr = r.degree_in(0);
        let lr = r.coefficients_in(0).pop().unwrap();
        let mut e = vec![0; r.nvars()];
        e[0] = dr - db;
        let shift = r.monomial(e, r.field().one());
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

/// Greatest common divisor in `K[Z, T]` by primitive remainder sequences in
/// `Z` over `K[T]`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.same_ring(b)?;
    if a.nvars() != 2 {
        return usage("gcd expects a ring in two variables");
    }
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    let (ca, pa) = a.content_free_part(&[0])?;
    let (cb, pb) = b.content_free_part(&[0])?;
    let k = a.field();
    let c = dense::gcd(k, &ca.to_dense(1)?, &cb.to_dense(1)?);
    let c = MultiPoly::from_dense(k, &a.var_names(), 1, &c);
    let (mut x, mut y) = if pa.degree_in(0) >= pb.degree_in(0) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !y.is_zero() {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_zero() {
            r
        } else {
            r.content_free_part(&[0])?.1
        };
    }
    if x.degree_in(0) == 0 {
        return Ok(c);
    }
    Ok(&c * &x)
}
