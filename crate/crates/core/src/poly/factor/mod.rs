//! Univariate factorization over `Q`, `F_p`, and (partially) `F_p(s)`.

mod ratfun;
mod trager;
pub mod zassenhaus;

pub use trager::norm;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::fields::{dense, fp_poly, Elem, Field, FieldKind};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// `unit * Π factor^multiplicity`. Factors are monic.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(MultiPoly, usize)>,
    /// Indices into `factors` whose irreducibility could not be certified
    /// (only possible over `F_p(s)`).
    pub uncertified: Vec<usize>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.uncertified.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn expand(&self, like: &MultiPoly) -> MultiPoly {
        let mut acc = like.constant_like(self.unit.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m as u32);
        }
        acc
    }
}

/// Dense-level factorization result: unit, monic factors with
/// multiplicity, and a certification flag per factor.
pub(crate) struct DenseFactorization {
    pub unit: Elem,
    pub factors: Vec<(Vec<Elem>, usize, bool)>,
}

/// Factors a nonzero polynomial involving at most one variable.
pub fn univariate_factor(f: &MultiPoly) -> Result<Factorization> {
    univariate_factor_seeded(f, DEFAULT_SEED)
}

pub fn univariate_factor_seeded(f: &MultiPoly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::Usage("cannot factor the zero polynomial".into()));
    }
    let involved: Vec<usize> = (0..f.nvars()).filter(|&i| f.involves(i)).collect();
    if involved.len() > 1 {
        return Err(Error::Usage(
            "univariate_factor needs a univariate polynomial".into(),
        ));
    }
    let k = f.field();
    let Some(&var) = involved.first() else {
        return Ok(Factorization {
            unit: f.constant_term(),
            factors: Vec::new(),
            uncertified: Vec::new(),
        });
    };
    let coeffs = f.to_dense(var)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let df = factor_dense(k, &coeffs, &mut rng)?;
    let names = f.var_names();
    let mut factors = Vec::new();
    let mut uncertified = Vec::new();
    for (i, (g, m, ok)) in df.factors.into_iter().enumerate() {
        factors.push((MultiPoly::from_dense(k, &names, var, &g), m));
        if !ok {
            uncertified.push(i);
        }
    }
    Ok(Factorization {
        unit: df.unit,
        factors,
        uncertified,
    })
}

pub(crate) fn factor_dense(
    k: &Field,
    f: &[Elem],
    rng: &mut ChaCha8Rng,
) -> Result<DenseFactorization> {
    let f = dense::trimmed(k, f);
    if f.is_empty() {
        return Err(Error::Usage("cannot factor the zero polynomial".into()));
    }
    let unit = f.last().unwrap().clone();
    let monic = dense::monic(k, &f);
    let mut factors = match k.kind() {
        FieldKind::Rationals => factor_rational(k, &monic, rng)
            .into_iter()
            .map(|(g, m)| (g, m, true))
            .collect(),
        FieldKind::Prime(p) => {
            let fp: Vec<u64> = monic.iter().map(residue).collect();
            fp_poly::factor(&fp, *p, rng)
                .into_iter()
                .map(|(g, m)| (g.into_iter().map(Elem::Residue).collect(), m, true))
                .collect()
        }
        FieldKind::RationalFunctions { .. } => ratfun::factor(k, &monic)?,
        FieldKind::Extension { base, .. } => match base.kind() {
            FieldKind::Rationals | FieldKind::Prime(_) => trager::factor(k, &monic, rng)?,
            _ if monic.len() == 2 => vec![(monic, 1, true)],
            _ => {
                return Err(Error::Unsupported(format!(
                    "factorization over {}",
                    k.spec()
                )))
            }
        },
    };
    factors.sort_by(|a: &(Vec<Elem>, usize, bool), b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    Ok(DenseFactorization { unit, factors })
}

/// Whether `f` is certifiably irreducible; `false` means reducible or
/// undecided.
pub(crate) fn dense_irreducible(k: &Field, f: &[Elem], rng: &mut ChaCha8Rng) -> bool {
    match factor_dense(k, f, rng) {
        Ok(df) => df.factors.len() == 1 && df.factors[0].1 == 1 && df.factors[0].2,
        Err(_) => false,
    }
}

fn residue(e: &Elem) -> u64 {
    match e {
        Elem::Residue(r) => *r,
        _ => unreachable!("prime field element"),
    }
}

fn rational(e: &Elem) -> &BigRational {
    match e {
        Elem::Rational(q) => q,
        _ => unreachable!("rational element"),
    }
}

/// Squarefree decomposition. In characteristic `p`, a part with zero
/// derivative whose coefficients have no p-th roots is returned whole with
/// multiplicity one.
pub(crate) fn squarefree_decomposition(k: &Field, f: &[Elem]) -> Vec<(Vec<Elem>, usize)> {
    let p = k.characteristic() as usize;
    if p == 0 {
        return yun(k, f);
    }
    let mut out = Vec::new();
    let f = dense::monic(k, f);
    if f.len() <= 1 {
        return out;
    }
    let d = dense::derivative(k, &f);
    if d.is_empty() {
        // f = g(X^p); descend if every coefficient is a p-th power
        let roots: Option<Vec<Elem>> = f.iter().step_by(p).map(|c| k.pth_root(c)).collect();
        match roots {
            Some(g) => {
                for (h, m) in squarefree_decomposition(k, &g) {
                    out.push((h, m * p));
                }
            }
            None => out.push((f.to_vec(), 1)),
        }
        return out;
    }
    let mut c = dense::gcd(k, &f, &d);
    let mut w = dense::divrem(k, &f, &c).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = dense::gcd(k, &w, &c);
        let z = dense::divrem(k, &w, &y).0;
        if z.len() > 1 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = dense::divrem(k, &c, &w).0;
    }
    if c.len() > 1 {
        out.extend(squarefree_decomposition(k, &c));
    }
    out
}

/// Squarefree decomposition over a field of characteristic zero (Yun).
pub(crate) fn yun(k: &Field, f: &[Elem]) -> Vec<(Vec<Elem>, usize)> {
    let mut out = Vec::new();
    let f = dense::monic(k, f);
    if f.len() <= 1 {
        return out;
    }
    let d = dense::derivative(k, &f);
    let a0 = dense::gcd(k, &f, &d);
    let mut b = dense::divrem(k, &f, &a0).0;
    let mut c = dense::divrem(k, &d, &a0).0;
    let mut dd = dense::sub(k, &c, &dense::derivative(k, &b));
    let mut i = 1;
    while b.len() > 1 {
        let a = dense::gcd(k, &b, &dd);
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        b = dense::divrem(k, &b, &a).0;
        c = dense::divrem(k, &dd, &a).0;
        dd = dense::sub(k, &c, &dense::derivative(k, &b));
        i += 1;
    }
    out
}

fn factor_rational(k: &Field, f: &[Elem], rng: &mut ChaCha8Rng) -> Vec<(Vec<Elem>, usize)> {
    let mut out = Vec::new();
    for (part, m) in yun(k, f) {
        // clear denominators
        let l = part
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(rational(c).denom()));
        let z: Vec<BigInt> = part
            .iter()
            .map(|c| (rational(c) * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        for g in zassenhaus::factor_squarefree(&z, rng) {
            let lc = BigRational::from_integer(g.last().unwrap().clone());
            let monic: Vec<Elem> = g
                .iter()
                .map(|c| Elem::Rational(BigRational::from_integer(c.clone()) / &lc))
                .collect();
            out.push((monic, m));
        }
    }
    out
}

/// Succeeds iff the monic polynomial `m` (degree ≥ 2) is irreducible over
/// `k`; a reducible input reports a nontrivial factor.
pub fn certify_irreducible(k: &Field, m: &[Elem]) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let df = factor_dense(k, m, &mut rng)?;
    let total: usize = df.factors.iter().map(|(_, mult, _)| mult).sum();
    if total == 1 {
        if df.factors[0].2 {
            return Ok(());
        }
        return Err(Error::Unsupported(format!(
            "cannot certify irreducibility of {} over {}",
            dense::format(k, m, "X"),
            k.spec()
        )));
    }
    let g = &df.factors[0].0;
    Err(Error::Reducible(dense::format(k, g, "X")))
}
