//! p-th roots in characteristic p.
//!
//! `F_p(s)` is not perfect, so a p-th root may or may not exist. For an
//! extension `L = F_p(s)[g]/(m)` the Frobenius is only semilinear over the
//! base; we write `r = Σ r_i g^i`, expand `r^p = Σ r_i^p (g^p)^i`, split
//! every base coefficient along the basis `1, s, ..., s^(p-1)` of `F_p(s)`
//! over `F_p(s^p)`, and solve the resulting linear system for the `r_i`.

use super::fp_poly::{self, FpPoly};
use super::{Elem, Field, FieldKind};

pub(super) fn pth_root(k: &Field, x: &Elem) -> Option<Elem> {
    let p = k.characteristic();
    if p == 0 {
        return None;
    }
    let root = match (k.kind(), x) {
        (FieldKind::Prime(_), Elem::Residue(_)) => Some(x.clone()),
        (FieldKind::RationalFunctions { .. }, Elem::RatFun { num, den }) => {
            let n = fp_poly::pth_root(num, p)?;
            let d = fp_poly::pth_root(den, p)?;
            Some(Elem::RatFun { num: n, den: d })
        }
        (FieldKind::Extension { base, .. }, Elem::Algebraic(_)) => match base.kind() {
            FieldKind::Prime(_) => {
                let q = k.size().expect("finite field");
                Some(k.pow_big(x, &(q / p)))
            }
            FieldKind::RationalFunctions { .. } => extension_over_ratfun(k, base, x, p),
            _ => None,
        },
        _ => None,
    }?;
    // p-th roots are unique; confirm the candidate
    if k.pow(&root, p) == *x {
        Some(root)
    } else {
        None
    }
}

/// Splits `b ∈ F_p(s)` as `Σ_{j<p} s^j · c_j^p`, returning the `c_j`.
fn frobenius_split(base: &Field, b: &Elem, p: u64) -> Vec<Elem> {
    let (num, den) = match b {
        Elem::RatFun { num, den } => (num, den),
        _ => unreachable!("element of F_p(s)"),
    };
    // b = N D^(p-1) / D^p and D^p = D(s^p)
    let mut top: FpPoly = num.clone();
    for _ in 1..p {
        top = fp_poly::mul(&top, den, p);
    }
    let pu = p as usize;
    (0..pu)
        .map(|j| {
            let part: FpPoly = top.iter().skip(j).step_by(pu).copied().collect();
            base.ratfun(&part, den).expect("nonzero denominator")
        })
        .collect()
}

fn extension_over_ratfun(k: &Field, base: &Field, x: &Elem, p: u64) -> Option<Elem> {
    let n = k.degree();
    let gen_p = k.pow(&k.generator().unwrap(), p);
    // columns: coordinates of (g^p)^i
    let mut frob_basis: Vec<Vec<Elem>> = Vec::with_capacity(n);
    let mut acc = k.one();
    for _ in 0..n {
        frob_basis.push(k.coords(&acc));
        acc = k.mul(&acc, &gen_p);
    }
    let rhs_coords = k.coords(x);
    let pu = p as usize;
    // equation (j, l): Σ_i r_i · split(M_ij)[l] = split(x_j)[l]
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    let mut rhs: Vec<Elem> = Vec::new();
    let splits: Vec<Vec<Vec<Elem>>> = frob_basis
        .iter()
        .map(|col| col.iter().map(|m| frobenius_split(base, m, p)).collect())
        .collect();
    for j in 0..n {
        let xs = frobenius_split(base, &rhs_coords[j], p);
        for l in 0..pu {
            rows.push((0..n).map(|i| splits[i][j][l].clone()).collect());
            rhs.push(xs[l].clone());
        }
    }
    let sol = solve_linear(base, rows, rhs)?;
    Some(k.from_coords(sol))
}

/// Gaussian elimination; returns one solution or `None` if inconsistent.
pub(crate) fn solve_linear(
    k: &Field,
    mut rows: Vec<Vec<Elem>>,
    mut rhs: Vec<Elem>,
) -> Option<Vec<Elem>> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !k.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, pr);
        rhs.swap(r, pr);
        let inv = k.inv(&rows[r][c]).ok()?;
        rows[r] = rows[r].iter().map(|v| k.mul(v, &inv)).collect();
        rhs[r] = k.mul(&rhs[r], &inv);
        for i in 0..rows.len() {
            if i != r && !k.is_zero(&rows[i][c]) {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (dst, src) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *dst = k.sub(dst, &k.mul(&f, src));
                }
                rhs[i] = k.sub(&rhs[i], &k.mul(&f, &rhs[r]));
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if (r..rows.len()).any(|i| !k.is_zero(&rhs[i])) {
        return None;
    }
    let mut sol = vec![k.zero(); ncols];
    for (row, col) in pivots {
        sol[col] = rhs[row].clone();
    }
    Some(sol)
}
