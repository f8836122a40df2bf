//! Factorization of squarefree primitive integer polynomials: reduce modulo
//! a small prime, lift the modular factors with linear Hensel steps, then
//! recombine subsets of lifted factors by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::fields::fp_poly::{self, FpPoly};

pub type ZPoly = Vec<BigInt>;

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

pub fn ztrim(a: &mut ZPoly) {
    while a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
}

pub fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    ztrim(&mut r);
    r
}

/// Exact division in `Z[x]`; `None` if `b` does not divide `a`.
pub fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r: ZPoly = a.to_vec();
    ztrim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    if r.len() < b.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        ztrim(&mut r);
    }
    if r.is_empty() {
        ztrim(&mut q);
        Some(q)
    } else {
        None
    }
}

pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn primitive(a: &[BigInt]) -> ZPoly {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if a.last().map(|x| x.is_negative()).unwrap_or(false) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    a.iter().map(|x| x / &c * &sign).collect()
}

fn to_fp(a: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let mut r: FpPoly = a
        .iter()
        .map(|c| {
            let m = c.mod_floor(&pb);
            m.to_u64().unwrap()
        })
        .collect();
    fp_poly::trim(&mut r);
    r
}

fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn symmetric_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    let mut r: ZPoly = a
        .iter()
        .map(|c| {
            let x = c.mod_floor(m);
            if x > half {
                x - m
            } else {
                x
            }
        })
        .collect();
    ztrim(&mut r);
    r
}

/// Lifts `f ≡ g*h (mod p)` with `g` monic to a factorization modulo
/// `modulus = p^k`. `h` absorbs the leading coefficient of `f`.
fn hensel_two(f: &[BigInt], g: &FpPoly, h: &FpPoly, p: u64, modulus: &BigInt) -> (ZPoly, ZPoly) {
    let (one, s, t) = fp_poly::ext_gcd(g, h, p);
    debug_assert!(fp_poly::is_one(&one), "modular factors must be coprime");
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    while &m < modulus {
        let prod = zmul(&big_g, &big_h);
        let n = f.len().max(prod.len());
        let diff: ZPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b) / &m
            })
            .collect();
        let e = to_fp(&diff, p);
        if !e.is_empty() {
            let te = fp_poly::mul(&t, &e, p);
            let (q, dg) = fp_poly::divrem(&te, g, p);
            let dh = fp_poly::add(&fp_poly::mul(&s, &e, p), &fp_poly::mul(&q, h, p), p);
            add_scaled(&mut big_g, &dg, &m);
            add_scaled(&mut big_h, &dh, &m);
        }
        m *= &pb;
    }
    (
        symmetric_mod(&big_g, modulus),
        symmetric_mod(&big_h, modulus),
    )
}

fn add_scaled(a: &mut ZPoly, d: &[u64], m: &BigInt) {
    if a.len() < d.len() {
        a.resize(d.len(), BigInt::zero());
    }
    for (x, &c) in a.iter_mut().zip(d) {
        *x += m * BigInt::from(c);
    }
    ztrim(a);
}

fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let lc = f.last().unwrap().abs();
    lc * (BigInt::one() << n) * (norm2.sqrt() + BigInt::one())
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// squarefree primitive polynomial of positive degree.
pub fn factor_squarefree<R: Rng>(f: &[BigInt], rng: &mut R) -> Vec<ZPoly> {
    let f = primitive(f);
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    let lc = f.last().unwrap().clone();
    // pick the admissible prime among the first few with the fewest factors
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_fp(&f, p);
        if fp.len() != f.len() {
            continue;
        }
        let d = fp_poly::derivative(&fp, p);
        if !fp_poly::is_one(&fp_poly::gcd(&fp, &d, p)) {
            continue;
        }
        let facs: Vec<FpPoly> = fp_poly::factor(&fp, p, rng)
            .into_iter()
            .map(|(g, _)| g)
            .collect();
        if facs.len() == 1 {
            return vec![f];
        }
        if best
            .as_ref()
            .map(|(_, b)| facs.len() < b.len())
            .unwrap_or(true)
        {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    let (p, modular) = best.expect("some small prime keeps the polynomial squarefree");
    let bound = coefficient_bound(&f) * 2 + BigInt::one();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
    }
    let lifted = hensel_lift(&f, &modular, p, &modulus);
    recombine(&f, lifted, &modulus)
}

fn hensel_lift(f: &[BigInt], modular: &[FpPoly], p: u64, modulus: &BigInt) -> Vec<ZPoly> {
    let r = modular.len();
    let mut out = Vec::with_capacity(r);
    let mut rest: ZPoly = f.to_vec();
    let lc_mod_p = to_fp(&[f.last().unwrap().clone()], p)[0];
    for i in 0..r - 1 {
        let g = &modular[i];
        let mut h: FpPoly = vec![lc_mod_p];
        for gj in &modular[i + 1..] {
            h = fp_poly::mul(&h, gj, p);
        }
        let (big_g, big_h) = hensel_two(&rest, g, &h, p, modulus);
        out.push(big_g);
        rest = big_h;
    }
    // last factor: rest ≡ lc * g_r, normalize to monic
    let lc = rest.last().unwrap().clone();
    let inv = lc
        .modinv(modulus)
        .expect("leading coefficient invertible mod p^k");
    let last: ZPoly = rest.iter().map(|c| c * &inv).collect();
    out.push(symmetric_mod(&last, modulus));
    out
}

fn recombine(f: &[BigInt], lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut remaining = lifted;
    let mut current: ZPoly = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit: Option<(Vec<usize>, ZPoly, ZPoly)> = None;
        for subset in subsets(remaining.len(), size) {
            let lc = current.last().unwrap().clone();
            let mut cand: ZPoly = vec![lc];
            for &i in &subset {
                cand = zmul(&cand, &remaining[i]);
                cand = symmetric_mod(&cand, modulus);
            }
            let cand = primitive(&cand);
            if cand.len() < 2 {
                continue;
            }
            // cheap filter on constant terms
            if !current[0].is_zero() && !cand[0].is_zero() && !(&current[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = zdiv_exact(&current, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                current = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if current.len() > 1 {
        found.push(primitive(&current));
    }
    found
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
