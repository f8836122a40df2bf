//! Partial factorization over `F_p(s)`.
//!
//! Full factorization over a non-perfect function field is out of reach
//! here; we split off powers of `X`, take a squarefree decomposition where
//! derivatives allow it, split rational roots, and certify what remains by
//! one of three criteria (degree one; purely inseparable binomial
//! `X^(p^e) - c` with `c` not a p-th power; Eisenstein at a prime of
//! `F_p[s]`). Anything else is returned uncertified.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::squarefree_decomposition;
use crate::error::Result;
use crate::fields::fp_poly::{self, FpPoly};
use crate::fields::{dense, Elem, Field};

const MAX_ROOT_CANDIDATES: usize = 20_000;

pub(super) fn factor(k: &Field, f: &[Elem]) -> Result<Vec<(Vec<Elem>, usize, bool)>> {
    let mut out = Vec::new();
    let mut f = dense::monic(k, f);
    let mut xpow = 0;
    while f.len() > 1 && k.is_zero(&f[0]) {
        f.remove(0);
        xpow += 1;
    }
    if xpow > 0 {
        out.push((vec![k.zero(), k.one()], xpow, true));
    }
    for (part, m) in squarefree_decomposition(k, &f) {
        let (roots, rest) = split_roots(k, &part);
        for r in roots {
            out.push((vec![k.neg(&r), k.one()], m, true));
        }
        if rest.len() > 1 {
            let ok = certified_irreducible(k, &rest);
            out.push((rest, m, ok));
        }
    }
    Ok(out)
}

fn parts(e: &Elem) -> (&FpPoly, &FpPoly) {
    match e {
        Elem::RatFun { num, den } => (num, den),
        _ => unreachable!("element of F_p(s)"),
    }
}

/// Coefficients of `f` scaled into `F_p[s]`, with common content removed.
fn clear_denominators(k: &Field, f: &[Elem]) -> Vec<FpPoly> {
    let p = k.characteristic();
    let mut l: FpPoly = vec![1];
    for c in f {
        let (_, den) = parts(c);
        let g = fp_poly::gcd(&l, den, p);
        l = fp_poly::divrem(&fp_poly::mul(&l, den, p), &g, p).0;
    }
    let mut polys: Vec<FpPoly> = f
        .iter()
        .map(|c| {
            let (num, den) = parts(c);
            fp_poly::mul(num, &fp_poly::divrem(&l, den, p).0, p)
        })
        .collect();
    let g = polys.iter().fold(Vec::new(), |g, c| fp_poly::gcd(&g, c, p));
    if g.len() > 1 {
        for c in polys.iter_mut() {
            *c = fp_poly::divrem(c, &g, p).0;
        }
    }
    polys
}

fn monic_divisors(a: &[u64], p: u64, limit: usize) -> Option<Vec<FpPoly>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut divs: Vec<FpPoly> = vec![vec![1]];
    for (g, m) in fp_poly::factor(a, p, &mut rng) {
        let mut next = Vec::new();
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..m {
                acc = fp_poly::mul(&acc, &g, p);
                next.push(acc.clone());
            }
        }
        divs = next;
        if divs.len() > limit {
            return None;
        }
    }
    Some(divs)
}

/// Roots in `F_p(s)` by the rational root test, and the cofactor.
fn split_roots(k: &Field, f: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let p = k.characteristic();
    let mut roots = Vec::new();
    let mut rest = f.to_vec();
    if rest.len() <= 2 {
        if rest.len() == 2 {
            roots.push(k.neg(&k.div(&rest[0], &rest[1]).expect("nonzero")));
            rest = vec![k.one()];
        }
        return (roots, rest);
    }
    let z = clear_denominators(k, &rest);
    let (a0, an) = (z[0].clone(), z.last().unwrap().clone());
    if a0.is_empty() {
        return (roots, rest);
    }
    let Some(nums) = monic_divisors(&a0, p, MAX_ROOT_CANDIDATES) else {
        return (roots, rest);
    };
    let Some(dens) = monic_divisors(&an, p, MAX_ROOT_CANDIDATES) else {
        return (roots, rest);
    };
    if nums.len() * dens.len() * (p as usize - 1) > MAX_ROOT_CANDIDATES {
        return (roots, rest);
    }
    for u in &nums {
        for v in &dens {
            if !fp_poly::is_one(&fp_poly::gcd(u, v, p)) {
                continue;
            }
            for c in 1..p {
                if rest.len() <= 1 {
                    break;
                }
                let cand = k.ratfun(&fp_poly::scale(u, c, p), v).expect("nonzero");
                if k.is_zero(&dense::eval(k, &rest, &cand)) {
                    let lin = vec![k.neg(&cand), k.one()];
                    rest = dense::divrem(k, &rest, &lin).0;
                    roots.push(cand);
                }
            }
        }
    }
    (roots, rest)
}

fn certified_irreducible(k: &Field, f: &[Elem]) -> bool {
    let p = k.characteristic();
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    // X^(p^e) + c with -c not a p-th power
    let mut q = n;
    while q % p as usize == 0 {
        q /= p as usize;
    }
    if q == 1 && f[1..n].iter().all(|c| k.is_zero(c)) && k.pth_root(&k.neg(&f[0])).is_none() {
        return true;
    }
    // roots were already split off, so low degree means irreducible
    if n <= 3 && split_roots(k, f).0.is_empty() {
        return true;
    }
    eisenstein(k, f)
}

fn eisenstein(k: &Field, f: &[Elem]) -> bool {
    let p = k.characteristic();
    let z = clear_denominators(k, f);
    let n = z.len() - 1;
    if z[0].is_empty() {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (prime, _) in fp_poly::factor(&z[0], p, &mut rng) {
        let divides = |a: &FpPoly| fp_poly::rem(a, &prime, p).is_empty();
        let sq = fp_poly::mul(&prime, &prime, p);
        if (0..n).all(|i| divides(&z[i]))
            && !divides(&z[n])
            && !fp_poly::rem(&z[0], &sq, p).is_empty()
        {
            return true;
        }
    }
    false
}
