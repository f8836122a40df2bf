//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rectify::{Elem, Field, FieldKind, MultiPoly};

pub fn zero(ring: &MultiPoly) -> MultiPoly {
    MultiPoly::zero(ring.field(), &ring.var_names())
}

pub fn constant(ring: &MultiPoly, c: Elem) -> MultiPoly {
    MultiPoly::constant(ring.field(), &ring.var_names(), c)
}

pub const POOL: [i64; 5] = [-2, -1, 0, 1, 2];

/// A pool element of `k`; over an extension also `c0 + c1 g`.
pub fn coeff(k: &Field, rng: &mut ChaCha8Rng) -> Elem {
    let c0 = k.from_i64(*POOL.choose(rng).unwrap());
    match (k.kind(), k.generator()) {
        (FieldKind::Extension { .. }, Some(g)) if rng.gen_bool(0.5) => {
            let c1 = k.from_i64(*POOL.choose(rng).unwrap());
            k.add(&c0, &k.mul(&c1, &g))
        }
        _ => c0,
    }
}

fn nonzero_coeff(k: &Field, rng: &mut ChaCha8Rng) -> Elem {
    loop {
        let c = coeff(k, rng);
        if !k.is_zero(&c) {
            return c;
        }
    }
}

/// Random polynomial in variable `var` of `ring` with degree at most `deg`
/// and coefficients from `coeffs`.
fn shift_poly(
    ring: &MultiPoly,
    var: usize,
    deg: u32,
    coeffs: &mut dyn FnMut() -> MultiPoly,
) -> MultiPoly {
    let v = ring.var_at(var);
    let mut s = zero(ring);
    for e in 0..=deg {
        s = &s + &(&coeffs() * &v.pow(e));
    }
    s
}

/// Images of `Z` and `T` (ring variables `zi`, `ti`) under a random
/// composition of linear and elementary automorphisms. Coefficients of
/// elementary shifts come from `coeffs`, which may involve other variables
/// of the ring.
pub fn random_tame(
    ring: &MultiPoly,
    vars: (usize, usize),
    len: usize,
    shift_deg: u32,
    rng: &mut ChaCha8Rng,
    coeffs: &mut dyn FnMut(&mut ChaCha8Rng) -> MultiPoly,
) -> [MultiPoly; 2] {
    random_tame_capped(ring, vars, len, shift_deg, u32::MAX, rng, coeffs).unwrap()
}

/// As [`random_tame`], giving up with `None` once an image exceeds total
/// degree `cap`.
pub fn random_tame_capped(
    ring: &MultiPoly,
    (zi, ti): (usize, usize),
    len: usize,
    shift_deg: u32,
    cap: u32,
    rng: &mut ChaCha8Rng,
    coeffs: &mut dyn FnMut(&mut ChaCha8Rng) -> MultiPoly,
) -> Option<[MultiPoly; 2]> {
    let k = ring.field().clone();
    let (z, t) = (ring.var_at(zi), ring.var_at(ti));
    let mut img = [z.clone(), t.clone()];
    let mut images: Vec<MultiPoly> = (0..ring.nvars()).map(|i| ring.var_at(i)).collect();
    for _ in 0..len {
        let step = if rng.gen_bool(0.35) {
            let m = loop {
                let m = [
                    coeff(&k, rng),
                    coeff(&k, rng),
                    coeff(&k, rng),
                    coeff(&k, rng),
                ];
                if !k.is_zero(&k.sub(&k.mul(&m[0], &m[3]), &k.mul(&m[1], &m[2]))) {
                    break m;
                }
            };
            let c = |e: &Elem| constant(ring, e.clone());
            [
                &(&(&c(&m[0]) * &z) + &(&c(&m[1]) * &t)) + &c(&coeff(&k, rng)),
                &(&(&c(&m[2]) * &z) + &(&c(&m[3]) * &t)) + &c(&coeff(&k, rng)),
            ]
        } else {
            let deg = rng.gen_range(1..=shift_deg);
            let on_t = rng.gen_bool(0.5);
            let mut draw = || coeffs(rng);
            if on_t {
                [z.clone(), &t + &shift_poly(ring, zi, deg, &mut draw)]
            } else {
                [&z + &shift_poly(ring, ti, deg, &mut draw), t.clone()]
            }
        };
        images[zi] = img[0].clone();
        images[ti] = img[1].clone();
        let bound = step
            .iter()
            .map(|s| s.total_degree().unwrap_or(0))
            .max()
            .unwrap()
            * img
                .iter()
                .map(|s| s.total_degree().unwrap_or(0))
                .max()
                .unwrap();
        if bound > cap {
            return None;
        }
        img = [
            step[0].substitute(&images).unwrap(),
            step[1].substitute(&images).unwrap(),
        ];
    }
    Some(img)
}

/// Constant coefficients from the pool.
pub fn constants(ring: &MultiPoly) -> impl FnMut(&mut ChaCha8Rng) -> MultiPoly + '_ {
    move |rng| constant(ring, coeff(ring.field(), rng))
}

/// A random nonconstant polynomial in `Z, T` of total degree at most `deg`.
pub fn random_plane_poly(ring: &MultiPoly, deg: u32, rng: &mut ChaCha8Rng) -> MultiPoly {
    let k = ring.field().clone();
    loop {
        let mut f = zero(ring);
        let terms = rng.gen_range(1..=5);
        for _ in 0..terms {
            let a = rng.gen_range(0..=deg);
            let b = rng.gen_range(0..=deg - a);
            f = &f
                + &(&constant(ring, nonzero_coeff(&k, rng))
                    * &(&ring.var_at(0).pow(a) * &ring.var_at(1).pow(b)));
        }
        if !f.is_constant() {
            return f;
        }
    }
}
