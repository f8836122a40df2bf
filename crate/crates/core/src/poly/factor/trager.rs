//! Norms from a simple extension down to its base, and Trager's
//! factorization of univariate polynomials over `Q[g]/(m)` or `F_p[g]/(m)`.

use rand_chacha::ChaCha8Rng;

use super::{factor_dense, squarefree_decomposition};
use crate::error::{Error, Result};
use crate::fields::{dense, Elem, Field};
use crate::poly::MultiPoly;

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
fn bareiss(mut m: Vec<Vec<MultiPoly>>, like: &MultiPoly) -> Result<MultiPoly> {
    let n = m.len();
    let mut prev = like.one_like();
    let mut negate = false;
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(like.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_divide(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// `N(f)`, the determinant of multiplication by `f` on `K[vars]` viewed as
/// a free module over `B[vars]` with the power basis of `K = B[g]/(m)`.
pub fn norm(f: &MultiPoly) -> Result<MultiPoly> {
    let k = f.field();
    if !k.is_extension() {
        return Ok(f.clone());
    }
    let b = k.base();
    let n = k.degree();
    let g = k.generator().expect("extension has a generator");
    let names = f.var_names();
    let zero = MultiPoly::zero(&b, &names);
    let mut m = vec![vec![zero.clone(); n]; n];
    let mut col = f.clone();
    for j in 0..n {
        for (e, c) in col.terms() {
            for (i, ci) in k.coords(c).into_iter().enumerate() {
                m[i][j].add_term(e.clone(), ci);
            }
        }
        col = col.scale(&g);
    }
    bareiss(m, &zero)
}

/// `f(x + c)` for dense `f`.
fn shift(k: &Field, f: &[Elem], c: &Elem) -> Vec<Elem> {
    let lin = vec![c.clone(), k.one()];
    let mut acc: Vec<Elem> = Vec::new();
    for a in f.iter().rev() {
        acc = dense::add(k, &dense::mul(k, &acc, &lin), &[a.clone()]);
    }
    acc
}

fn is_squarefree(k: &Field, f: &[Elem]) -> bool {
    let d = dense::derivative(k, f);
    !d.is_empty() && dense::gcd(k, f, &d).len() == 1
}

/// Monic irreducible factors of a monic squarefree `f` over an extension
/// whose base is `Q` or `F_p`.
fn trager_squarefree(k: &Field, f: &[Elem], rng: &mut ChaCha8Rng) -> Result<Vec<Vec<Elem>>> {
    if f.len() <= 2 {
        return Ok(vec![f.to_vec()]);
    }
    let b = k.base();
    let lam = k.generator().expect("extension");
    for step in 0..12i64 {
        let c = if step % 2 == 0 {
            -step / 2
        } else {
            step / 2 + 1
        };
        let s = k.mul(&k.from_i64(c), &lam);
        // g(x) = f(x - s)
        let g = shift(k, f, &k.neg(&s));
        let gp = MultiPoly::from_dense(k, &["x"], 0, &g);
        let nm = norm(&gp)?.to_dense(0)?;
        if !is_squarefree(&b, &nm) {
            continue;
        }
        let mut out = Vec::new();
        for (h, _, _) in factor_dense(&b, &nm, rng)?.factors {
            let hk: Vec<Elem> = h.into_iter().map(|c| k.lift(c)).collect();
            let d = dense::gcd(k, &g, &hk);
            if d.len() > 1 {
                out.push(dense::monic(k, &shift(k, &d, &s)));
            }
        }
        return Ok(out);
    }
    Err(Error::Unsupported(format!(
        "no squarefree norm shift found over {}",
        k.spec()
    )))
}

/// Factorization of a monic polynomial over an extension of `Q` or `F_p`.
pub(super) fn factor(
    k: &Field,
    f: &[Elem],
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(Vec<Elem>, usize, bool)>> {
    let mut out = Vec::new();
    for (part, m) in squarefree_decomposition(k, f) {
        if part.len() > 2 && !is_squarefree(k, &part) {
            // inseparable leftover of a field without p-th roots; cannot occur
            // over perfect bases
            return Err(Error::Internal(
                "squarefree decomposition left a square".into(),
            ));
        }
        for g in trager_squarefree(k, &part, rng)? {
            out.push((g, m, true));
        }
    }
    Ok(out)
}
