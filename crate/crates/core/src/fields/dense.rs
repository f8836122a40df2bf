//! Dense univariate polynomials over an arbitrary [`Field`], coefficients
//! low degree first. Zero is the empty vector.

use super::{Elem, Field};

pub type Dense = Vec<Elem>;

pub fn trimmed(k: &Field, a: &[Elem]) -> Dense {
    let mut v = a.to_vec();
    trim(k, &mut v);
    v
}

pub fn trim(k: &Field, a: &mut Dense) {
    while a.last().map(|c| k.is_zero(c)).unwrap_or(false) {
        a.pop();
    }
}

pub fn degree(a: &[Elem]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(k: &Field, a: &[Elem], b: &[Elem]) -> Dense {
    let n = a.len().max(b.len());
    let zero = k.zero();
    let mut r: Dense = (0..n)
        .map(|i| k.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(k, &mut r);
    r
}

pub fn sub(k: &Field, a: &[Elem], b: &[Elem]) -> Dense {
    let n = a.len().max(b.len());
    let zero = k.zero();
    let mut r: Dense = (0..n)
        .map(|i| k.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(k, &mut r);
    r
}

pub fn scale(k: &Field, a: &[Elem], c: &Elem) -> Dense {
    let mut r: Dense = a.iter().map(|x| k.mul(x, c)).collect();
    trim(k, &mut r);
    r
}

pub fn mul(k: &Field, a: &[Elem], b: &[Elem]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = k.add(&r[i + j], &k.mul(x, y));
        }
    }
    trim(k, &mut r);
    r
}

/// Division with remainder by a nonzero divisor.
pub fn divrem(k: &Field, a: &[Elem], b: &[Elem]) -> (Dense, Dense) {
    let b = trimmed(k, b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trimmed(k, a);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let inv = k
        .inv(b.last().unwrap())
        .expect("nonzero leading coefficient");
    let mut q = vec![k.zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let s = r.len() - 1 - db;
        let c = k.mul(r.last().unwrap(), &inv);
        for (j, bj) in b.iter().enumerate() {
            r[s + j] = k.sub(&r[s + j], &k.mul(&c, bj));
        }
        q[s] = c;
        // leading term cancels exactly
        r.pop();
        trim(k, &mut r);
    }
    trim(k, &mut q);
    (q, r)
}

pub fn rem(k: &Field, a: &[Elem], b: &[Elem]) -> Dense {
    if a.len() < b.len() {
        return trimmed(k, a);
    }
    divrem(k, a, b).1
}

pub fn monic(k: &Field, a: &[Elem]) -> Dense {
    match a.last() {
        None => Vec::new(),
        Some(lc) => scale(k, a, &k.inv(lc).expect("nonzero")),
    }
}

pub fn gcd(k: &Field, a: &[Elem], b: &[Elem]) -> Dense {
    let mut x = trimmed(k, a);
    let mut y = trimmed(k, b);
    while !y.is_empty() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// `(g, s, t)` with `s*a + t*b = g` and `g` monic.
pub fn ext_gcd(k: &Field, a: &[Elem], b: &[Elem]) -> (Dense, Dense, Dense) {
    let (mut r0, mut r1) = (trimmed(k, a), trimmed(k, b));
    let (mut s0, mut s1): (Dense, Dense) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1): (Dense, Dense) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = k.inv(lc).expect("nonzero");
            (
                scale(k, &r0, &inv),
                scale(k, &s0, &inv),
                scale(k, &t0, &inv),
            )
        }
    }
}

pub fn derivative(k: &Field, a: &[Elem]) -> Dense {
    let mut r: Dense = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(c, &k.from_i64(i as i64)))
        .collect();
    trim(k, &mut r);
    r
}

pub fn eval(k: &Field, a: &[Elem], x: &Elem) -> Elem {
    a.iter()
        .rev()
        .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

/// Renders `Σ a_i v^i` in the expression grammar, highest degree first.
pub fn format(k: &Field, a: &[Elem], var: &str) -> String {
    crate::parse::render_terms(
        k,
        a.iter().enumerate().rev().map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            (c, mono)
        }),
    )
}
