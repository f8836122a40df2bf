//! Buchberger's algorithm with the product and chain criteria and the
//! normal selection strategy. Output bases are reduced and monic.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{Exponents, MonomialOrder, MultiPoly};
use crate::error::{usage, Error, Result};
use crate::fields::{Elem, Field};

/// Pairs processed before giving up.
const MAX_PAIRS: usize = 50_000;

/// Terms in ascending order, so the leading term is last.
type Terms = Vec<(Exponents, Elem)>;

struct Ctx<'a> {
    k: &'a Field,
    order: MonomialOrder,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl Ctx<'_> {
    fn to_terms(&self, f: &MultiPoly) -> Terms {
        let mut t: Terms = f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        t.sort_by(|a, b| self.order.cmp(&a.0, &b.0));
        t
    }

    /// `p - c * x^m * g`.
    fn sub_mul(&self, p: &Terms, c: &Elem, m: &[u32], g: &Terms) -> Terms {
        let shifted = g.iter().map(|(e, gc)| {
            let e2: Exponents = e.iter().zip(m).map(|(a, b)| a + b).collect();
            (e2, self.k.mul(c, gc))
        });
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut shifted = shifted.peekable();
        while i < p.len() || shifted.peek().is_some() {
            let ord = match (p.get(i), shifted.peek()) {
                (Some(a), Some(b)) => self.order.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = shifted.next().unwrap();
                    out.push((e, self.k.neg(&c)));
                }
                Ordering::Equal => {
                    let (e, c) = shifted.next().unwrap();
                    let s = self.k.sub(&p[i].1, &c);
                    if !self.k.is_zero(&s) {
                        out.push((e, s));
                    }
                    i += 1;
                }
            }
        }
        out
    }

    /// Full reduction of `f` modulo `basis` (each element monic).
    fn reduce(&self, f: &Terms, basis: &[Terms]) -> Terms {
        let mut p = f.clone();
        let mut rest: Terms = Vec::new();
        while let Some((lm, lc)) = p.last().cloned() {
            match basis.iter().find(|g| divides(&g.last().unwrap().0, &lm)) {
                Some(g) => {
                    let m: Exponents = lm
                        .iter()
                        .zip(&g.last().unwrap().0)
                        .map(|(a, b)| a - b)
                        .collect();
                    p = self.sub_mul(&p, &lc, &m, g);
                }
                None => {
                    p.pop();
                    rest.push((lm, lc));
                }
            }
        }
        rest.reverse();
        rest
    }

    fn make_monic(&self, mut f: Terms) -> Terms {
        if let Some((_, lc)) = f.last() {
            let inv = self.k.inv(lc).expect("nonzero leading coefficient");
            for t in f.iter_mut() {
                t.1 = self.k.mul(&t.1, &inv);
            }
        }
        f
    }

    fn spoly(&self, f: &Terms, g: &Terms) -> Terms {
        let (lf, lg) = (&f.last().unwrap().0, &g.last().unwrap().0);
        let l = lcm(lf, lg);
        let mf: Exponents = l.iter().zip(lf).map(|(a, b)| a - b).collect();
        let mg: Exponents = l.iter().zip(lg).map(|(a, b)| a - b).collect();
        let a = self.sub_mul(&Vec::new(), &self.k.neg(&self.k.one()), &mf, f);
        self.sub_mul(&a, &self.k.one(), &mg, g)
    }

    fn to_poly(&self, like: &MultiPoly, t: &Terms) -> MultiPoly {
        let mut p = like.zero_like();
        for (e, c) in t {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

fn check_ring(gens: &[MultiPoly]) -> Result<()> {
    let Some(first) = gens.first() else {
        return usage("at least one generator is required");
    };
    for g in gens {
        first.same_ring(g)?;
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`. The zero ideal
/// has the empty basis.
pub fn groebner(gens: &[MultiPoly], order: MonomialOrder) -> Result<Vec<MultiPoly>> {
    check_ring(gens)?;
    let like = &gens[0];
    let ctx = Ctx {
        k: like.field(),
        order,
    };
    let mut basis: Vec<Terms> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ctx.make_monic(ctx.to_terms(g)))
        .collect();
    // small leading terms first keeps intermediate reductions short
    queue.sort_by(|a, b| order.cmp(&b.last().unwrap().0, &a.last().unwrap().0));
    let mut processed = 0;
    loop {
        let next = if let Some(f) = queue.pop() {
            Some(f)
        } else {
            // normal selection: the pair with the smallest lcm
            let best = pairs
                .iter()
                .min_by(|&&(i1, j1), &&(i2, j2)| {
                    let l1 = lcm(&basis[i1].last().unwrap().0, &basis[j1].last().unwrap().0);
                    let l2 = lcm(&basis[i2].last().unwrap().0, &basis[j2].last().unwrap().0);
                    order.cmp(&l1, &l2)
                })
                .copied();
            match best {
                None => None,
                Some((i, j)) => {
                    pairs.remove(&(i, j));
                    processed += 1;
                    if processed > MAX_PAIRS {
                        return Err(Error::Unsupported(
                            "Gröbner basis computation exceeded its pair budget".into(),
                        ));
                    }
                    if chain_skip(&basis, &pairs, i, j) {
                        continue;
                    }
                    Some(ctx.spoly(&basis[i], &basis[j]))
                }
            }
        };
        let Some(f) = next else { break };
        let r = ctx.reduce(&f, &basis);
        if r.is_empty() {
            continue;
        }
        let r = ctx.make_monic(r);
        if r.len() == 1 && r[0].0.iter().all(|&e| e == 0) {
            return Ok(vec![like.one_like()]);
        }
        let n = basis.len();
        for i in 0..n {
            if !coprime(&basis[i].last().unwrap().0, &r.last().unwrap().0) {
                pairs.insert((i, n));
            }
        }
        basis.push(r);
    }
    Ok(interreduce(&ctx, like, basis))
}

/// Buchberger's chain criterion: the pair `(i, j)` is redundant when some
/// `k` has leading monomial dividing `lcm(i, j)` and neither `(i, k)` nor
/// `(j, k)` is still pending.
fn chain_skip(basis: &[Terms], pending: &BTreeSet<(usize, usize)>, i: usize, j: usize) -> bool {
    let l = lcm(&basis[i].last().unwrap().0, &basis[j].last().unwrap().0);
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && divides(&basis[k].last().unwrap().0, &l)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn interreduce(ctx: &Ctx, like: &MultiPoly, basis: Vec<Terms>) -> Vec<MultiPoly> {
    let mut minimal: Vec<Terms> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = &g.last().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = &h.last().unwrap().0;
            j != i && divides(lh, lg) && (lh != lg || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Terms> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = minimal[i].last().unwrap().clone();
        let tail: Terms = minimal[i][..minimal[i].len() - 1].to_vec();
        let mut r = ctx.reduce(&tail, &others);
        r.push(lead);
        out.push(r);
    }
    out.sort_by(|a, b| ctx.order.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    out.iter().map(|t| ctx.to_poly(like, t)).collect()
}

/// Fully reduced remainder of `f` modulo `basis`, which should be a
/// Gröbner basis for `order` for the result to be canonical.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> Result<MultiPoly> {
    for g in basis {
        f.same_ring(g)?;
    }
    let ctx = Ctx {
        k: f.field(),
        order,
    };
    let b: Vec<Terms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ctx.make_monic(ctx.to_terms(g)))
        .collect();
    let r = ctx.reduce(&ctx.to_terms(f), &b);
    Ok(ctx.to_poly(f, &r))
}

/// Whether the ideal generated by `gens` is the unit ideal.
pub fn ideal_contains_one(gens: &[MultiPoly]) -> Result<bool> {
    let g = groebner(gens, MonomialOrder::GrevLex)?;
    Ok(g.len() == 1 && g[0].is_constant() && !g[0].is_zero())
}

/// Whether `f` lies in the ideal with Gröbner basis `basis`.
pub fn ideal_member(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> Result<bool> {
    Ok(normal_form(f, basis, order)?.is_zero())
}
