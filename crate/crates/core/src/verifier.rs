//! Certifies claimed coordinate systems by elimination with tag variables.
//!
//! For claimed coordinates `H_1..H_n` of `K[X_1..X_n]`, adjoin tags
//! `U_1..U_n` and compute a Gröbner basis of `(U_j - H_j)` under an
//! elimination order with the `X` block first. `K[H] = K[X]` exactly when
//! every `X_i` reduces to a polynomial in the tags; that polynomial is the
//! inverse expression.

use crate::error::{usage, Result};
use crate::poly::groebner::{groebner, normal_form};
use crate::poly::{MonomialOrder, MultiPoly};

#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateClaim {
    pub vars: Vec<String>,
    pub coordinates: Vec<MultiPoly>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verification {
    /// `inverses[i]` expresses `X_i` in the tags `U_1..U_n`, which stand for
    /// the claimed coordinates in order.
    Accept {
        tags: Vec<String>,
        inverses: Vec<MultiPoly>,
    },
    /// The first ambient variable with no expression in the coordinates.
    Reject { unreachable: String },
}

impl Verification {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verification::Accept { .. })
    }
}

impl CoordinateClaim {
    pub fn new(vars: &[&str], coordinates: Vec<MultiPoly>) -> Result<CoordinateClaim> {
        if vars.is_empty() {
            return usage("a coordinate claim needs at least one variable");
        }
        if coordinates.len() != vars.len() {
            return usage(format!(
                "{} variables but {} claimed coordinates",
                vars.len(),
                coordinates.len()
            ));
        }
        let coordinates = coordinates
            .iter()
            .map(|h| h.with_vars(vars))
            .collect::<Result<Vec<_>>>()?;
        for h in &coordinates[1..] {
            coordinates[0].same_ring(h)?;
        }
        Ok(CoordinateClaim {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            coordinates,
        })
    }
}

fn tag_names(vars: &[String]) -> Vec<String> {
    (1..=vars.len())
        .map(|j| {
            let mut name = format!("U{j}");
            while vars.contains(&name) {
                name.push('u');
            }
            name
        })
        .collect()
}

pub fn verify_coordinate_system(claim: &CoordinateClaim) -> Result<Verification> {
    let n = claim.vars.len();
    let tags = tag_names(&claim.vars);
    let all: Vec<&str> = claim
        .vars
        .iter()
        .chain(tags.iter())
        .map(|s| s.as_str())
        .collect();
    let field = claim.coordinates[0].field();
    let zero = MultiPoly::zero(field, &all);
    let mut gens = Vec::with_capacity(n);
    for (j, h) in claim.coordinates.iter().enumerate() {
        let h = h.with_vars(&all)?;
        gens.push(&zero.var_at(n + j) - &h);
    }
    let order = MonomialOrder::Block(n);
    let basis = groebner(&gens, order)?;
    let tag_refs: Vec<&str> = tags.iter().map(|s| s.as_str()).collect();
    let mut inverses = Vec::with_capacity(n);
    for i in 0..n {
        let r = normal_form(&zero.var_at(i), &basis, order)?;
        if (0..n).any(|v| r.involves(v)) {
            return Ok(Verification::Reject {
                unreachable: claim.vars[i].clone(),
            });
        }
        inverses.push(r.with_vars(&tag_refs)?);
    }
    Ok(Verification::Accept { tags, inverses })
}

/// Whether `K[f, g] = K[Z, T]` for `f`, `g` in a two-variable ring.
pub fn verify_plane_pair(f: &MultiPoly, g: &MultiPoly) -> Result<bool> {
    f.same_ring(g)?;
    if f.nvars() != 2 {
        return usage("verify_plane_pair expects a ring in two variables");
    }
    let names = f.var_names();
    let claim = CoordinateClaim::new(&names, vec![f.clone(), g.clone()])?;
    Ok(verify_coordinate_system(&claim)?.is_accept())
}

/// Substitutes the claimed coordinates for the tags of each inverse
/// expression; an accepted claim must give back every ambient variable.
pub fn round_trip(claim: &CoordinateClaim, inverses: &[MultiPoly]) -> Result<bool> {
    for (i, inv) in inverses.iter().enumerate() {
        let back = inv.substitute(&claim.coordinates)?;
        if back != claim.coordinates[0].var_at(i) {
            return Ok(false);
        }
    }
    Ok(true)
}
