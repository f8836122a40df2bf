//! Structure and rectifiability of `G = a(X)Y - F(X,Z,T)`.
//!
//! The analysis factors `a`, specializes `F` at a root of each factor in
//! the residue field, and combines per-root facts: irreducibility of the
//! specialization (factoriality), line and coordinate tests (fibration and
//! rectifiability), and a Jacobian ideal test (regularity).

use std::fmt;

use crate::error::{usage, Error, Result};
use crate::fields::{dense, Elem, Field, FieldKind};
use crate::parse::parse_poly;
use crate::plane::{line_test, vartest, LineStatus, VarTest};
use crate::poly::bivariate::{bivariate_irreducible, Irreducibility, DEFAULT_DEGREE_BOUND};
use crate::poly::factor::{univariate_factor_seeded, DEFAULT_SEED};
use crate::poly::groebner::ideal_contains_one;
use crate::poly::MultiPoly;
use crate::verifier::verify_plane_pair;

pub const VARS: [&str; 3] = ["X", "Z", "T"];
const ROOT_SYMBOL: &str = "lambda";

#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    pub a: MultiPoly,
    pub f: MultiPoly,
    pub normalized: bool,
}

impl Hyperplane {
    /// `a` must be univariate in `X` of degree at least one; `f` may involve
    /// `X`, `Z`, `T`.
    pub fn new(a: &MultiPoly, f: &MultiPoly) -> Result<Hyperplane> {
        let a = a.with_vars(&VARS)?;
        let f = f.with_vars(&VARS)?;
        a.same_ring(&f)?;
        if a.involves(1) || a.involves(2) {
            return usage("a must be a polynomial in X alone");
        }
        if a.degree_in(0) < 1 || a.is_zero() {
            return usage("a must have degree at least one in X");
        }
        Ok(Hyperplane {
            a,
            f,
            normalized: false,
        })
    }

    pub fn parse(a: &str, f: &str, field: &Field) -> Result<Hyperplane> {
        Hyperplane::new(&parse_poly(a, field, &VARS)?, &parse_poly(f, field, &VARS)?)
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    /// `G = aY - F` in `K[X, Y, Z, T]`.
    pub fn g(&self) -> Result<MultiPoly> {
        let vars = ["X", "Y", "Z", "T"];
        let a = self.a.with_vars(&vars)?;
        let f = self.f.with_vars(&vars)?;
        Ok(&(&a * &a.var_at(1)) - &f)
    }

    /// `F` replaced by its remainder modulo `a` in `X`.
    pub fn normalize(&self) -> Result<Hyperplane> {
        let (_, r) = self.f.divmod_in(0, &self.a)?;
        Ok(Hyperplane {
            a: self.a.clone(),
            f: r,
            normalized: true,
        })
    }

    /// Coefficients of `F` as polynomials in `X`, one per `(Z, T)` monomial.
    fn x_coefficients(&self) -> Vec<Vec<Elem>> {
        let k = self.field();
        let mut groups: std::collections::BTreeMap<(u32, u32), Vec<Elem>> = Default::default();
        for (e, c) in self.f.terms() {
            let v = groups.entry((e[1], e[2])).or_default();
            if v.len() <= e[0] as usize {
                v.resize(e[0] as usize + 1, k.zero());
            }
            v[e[0] as usize] = c.clone();
        }
        groups.into_values().collect()
    }

    fn a_dense(&self) -> Vec<Elem> {
        self.a.to_dense(0).expect("a is univariate")
    }

    /// Whether some root of `a` in the algebraic closure is simple: `a`
    /// fails to divide `gcd(a, a')^deg(a)`.
    pub fn has_simple_root(&self) -> bool {
        let k = self.field();
        let a = self.a_dense();
        let g = dense::gcd(k, &a, &dense::derivative(k, &a));
        let mut acc = vec![k.one()];
        for _ in 0..a.len() - 1 {
            acc = dense::rem(k, &dense::mul(k, &acc, &g), &a);
        }
        !acc.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DomainStatus {
    Domain,
    /// `gcd(a, F)`, a nonconstant polynomial in `X`.
    NotDomain(MultiPoly),
}

/// `A` is a domain exactly when `a` and `F` are coprime, which holds iff no
/// factor of `a` divides every `X`-coefficient of `F`.
pub fn domain_check(h: &Hyperplane) -> Result<DomainStatus> {
    let k = h.field();
    let mut g = h.a_dense();
    for c in h.x_coefficients() {
        g = dense::gcd(k, &g, &c);
    }
    if g.len() > 1 {
        let g = dense::monic(k, &g);
        return Ok(DomainStatus::NotDomain(MultiPoly::from_dense(
            k, &VARS, 0, &g,
        )));
    }
    Ok(DomainStatus::Domain)
}

/// A factor of `a` with its residue field and the specialization of `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootDatum {
    pub factor: MultiPoly,
    pub multiplicity: usize,
    pub field: Field,
    /// `F(λ, Z, T)` over `field`, in the ring `K[Z, T]`.
    pub f: MultiPoly,
    /// `λ` as an element of `field`.
    pub root: Elem,
    /// `gcd(p, p') = 1`.
    pub separable: bool,
    /// `a'(λ) != 0`: the roots of this factor are simple in the closure.
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkippedFactor {
    pub factor: MultiPoly,
    pub multiplicity: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootData {
    pub data: Vec<RootDatum>,
    pub skipped: Vec<SkippedFactor>,
}

fn symbol_for(k: &Field) -> String {
    let mut s = ROOT_SYMBOL.to_string();
    while k.symbol() == Some(s.as_str()) {
        s.push('1');
    }
    s
}

/// Specializes `f` (in `X, Z, T`) at `X = root` in the field `kf`.
fn specialize(f: &MultiPoly, kf: &Field, root: &Elem) -> Result<MultiPoly> {
    f.promote(kf)?.eval_var("X", root)?.with_vars(&VARS[1..])
}

pub fn root_data(h: &Hyperplane, seed: u64) -> Result<RootData> {
    let k = h.field();
    let fac = univariate_factor_seeded(&h.a, seed)?;
    let a_dense = h.a_dense();
    let da = dense::derivative(k, &a_dense);
    let mut data = Vec::new();
    let mut skipped = Vec::new();
    for (i, (p, mult)) in fac.factors.iter().enumerate() {
        if fac.uncertified.contains(&i) {
            skipped.push(SkippedFactor {
                factor: p.clone(),
                multiplicity: *mult,
                reason: format!("irreducibility of {p} over {} not certified", k.spec()),
            });
            continue;
        }
        let pd = p.to_dense(0)?;
        let separable = dense::gcd(k, &pd, &dense::derivative(k, &pd)).len() == 1;
        let (kf, root) = if pd.len() == 2 {
            (k.clone(), k.neg(&pd[0]))
        } else if k.is_extension() {
            skipped.push(SkippedFactor {
                factor: p.clone(),
                multiplicity: *mult,
                reason: "residue field would need a second extension level".into(),
            });
            continue;
        } else {
            let kf = k.extend(&pd, &symbol_for(k))?;
            let root = kf.generator().expect("extension generator");
            (kf, root)
        };
        let lift: Vec<Elem> = da.iter().map(|c| kf.lift(c.clone())).collect();
        let simple = !kf.is_zero(&dense::eval(&kf, &lift, &root));
        data.push(RootDatum {
            factor: p.clone(),
            multiplicity: *mult,
            f: specialize(&h.f, &kf, &root)?,
            field: kf,
            root,
            separable,
            simple,
        });
    }
    Ok(RootData { data, skipped })
}

/// A three-valued answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    fn all(items: impl IntoIterator<Item = Tri>) -> Tri {
        let mut out = Tri::True;
        for t in items {
            match t {
                Tri::False => return Tri::False,
                Tri::Unknown => out = Tri::Unknown,
                Tri::True => {}
            }
        }
        out
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unknown => None,
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        })
    }
}

/// Per-root results.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    pub datum: RootDatum,
    pub vartest: VarTest,
    pub irreducible: Tri,
    pub line: LineStatus,
    /// The Jacobian ideal condition at this root.
    pub regular: bool,
}

fn irreducible_or_unit(d: &RootDatum, v: &VarTest, bound: u32) -> Result<Tri> {
    if d.f.is_constant() {
        return Ok(Tri::True);
    }
    if v.over_closure() == Some(true) {
        return Ok(Tri::True);
    }
    Ok(match bivariate_irreducible(&d.f, bound)? {
        Irreducibility::Irreducible => Tri::True,
        Irreducibility::Reducible(_) => Tri::False,
        Irreducibility::Unknown(_) => Tri::Unknown,
    })
}

/// Factoriality: every specialization is irreducible or a unit.
pub fn ufd_check(rd: &RootData, bound: u32) -> Result<Tri> {
    let mut out = Vec::new();
    for d in &rd.data {
        let v = vartest_or_constant(&d.f)?;
        out.push(irreducible_or_unit(d, &v, bound)?);
    }
    if !rd.skipped.is_empty() {
        out.push(Tri::Unknown);
    }
    Ok(Tri::all(out))
}

fn line_status(f: &MultiPoly) -> Result<LineStatus> {
    if f.is_constant() {
        return Ok(LineStatus::NotLine);
    }
    line_test(f)
}

fn line_tri(l: LineStatus) -> Tri {
    match l {
        LineStatus::Line => Tri::True,
        LineStatus::NotLine => Tri::False,
        LineStatus::Unknown => Tri::Unknown,
    }
}

/// The fibration property: every specialization is a line.
pub fn fibration_check(rd: &RootData) -> Result<Tri> {
    let mut out = Vec::new();
    for d in &rd.data {
        out.push(line_tri(line_status(&d.f)?));
    }
    if !rd.skipped.is_empty() {
        out.push(Tri::Unknown);
    }
    Ok(Tri::all(out))
}

fn root_regular(original: &Hyperplane, d: &RootDatum) -> Result<bool> {
    let fz = d.f.partial_derivative(0);
    let ft = d.f.partial_derivative(1);
    let mut gens = vec![d.f.clone(), fz, ft];
    if !d.simple {
        let fx = original.f.partial_derivative(0);
        gens.push(specialize(&fx, &d.field, &d.root)?);
    }
    ideal_contains_one(&gens)
}

/// Regularity of `A` by the Jacobian criterion at each root. `original`
/// supplies `F_X` before normalization.
pub fn regularity_check(original: &Hyperplane, rd: &RootData) -> Result<Tri> {
    let mut out = Vec::new();
    for d in &rd.data {
        out.push(Tri::from(root_regular(original, d)?));
    }
    if !rd.skipped.is_empty() {
        out.push(Tri::Unknown);
    }
    Ok(Tri::all(out))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// `K[X,Y,Z,T] = K[X,G]^[2] = K[G]^[3]`.
    Rectifiable,
    NotRectifiable {
        root: usize,
        theorem: String,
    },
    Inconclusive(String),
    NotDomain(MultiPoly),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Rectifiable => "Rectifiable",
            Verdict::NotRectifiable { .. } => "NotRectifiable",
            Verdict::Inconclusive(_) => "Inconclusive",
            Verdict::NotDomain(_) => "NotDomain",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Rectifiable => 0,
            Verdict::NotRectifiable { .. } => 1,
            Verdict::Inconclusive(_) => 2,
            Verdict::NotDomain(_) => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub original: Hyperplane,
    pub normalized: Option<Hyperplane>,
    pub domain: bool,
    pub roots: Vec<RootReport>,
    pub skipped: Vec<SkippedFactor>,
    pub ufd: Tri,
    pub fibration: Tri,
    pub regular: Tri,
    pub verdict: Verdict,
    pub theorem_path: Vec<String>,
    /// Conditions that follow from the verdict through the equivalences;
    /// never computed directly.
    pub implied: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    pub degree_bound: u32,
    /// Seed for randomized factoring steps.
    pub seed: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            degree_bound: DEFAULT_DEGREE_BOUND,
            seed: DEFAULT_SEED,
        }
    }
}

fn vartest_or_constant(f: &MultiPoly) -> Result<VarTest> {
    if f.is_zero() {
        return Err(Error::Internal(
            "specialization vanished on a domain".into(),
        ));
    }
    vartest(f)
}

/// Runs the full pipeline: domain, normalization, root data, structural
/// checks, and the verdict.
pub fn analyze(h: &Hyperplane, opts: AnalysisOptions) -> Result<AnalysisReport> {
    let original = h.clone();
    let mut path: Vec<String> = vec!["gcd".into(), "rnew".into()];
    if let DomainStatus::NotDomain(g) = domain_check(h)? {
        return Ok(AnalysisReport {
            original,
            normalized: None,
            domain: false,
            roots: Vec::new(),
            skipped: Vec::new(),
            ufd: Tri::Unknown,
            fibration: Tri::Unknown,
            regular: Tri::Unknown,
            verdict: Verdict::NotDomain(g),
            theorem_path: path,
            implied: Vec::new(),
        });
    }
    let norm = h.normalize()?;
    let rd = root_data(&norm, opts.seed)?;
    let k = h.field();
    let char_p = k.characteristic() != 0;

    let mut roots = Vec::new();
    for d in &rd.data {
        let v = vartest_or_constant(&d.f)?;
        if let VarTest::Accept(c) = &v {
            let g = c.complement.clone();
            if !verify_plane_pair(&d.f.promote(&c.field)?, &g)? {
                return Err(Error::Internal(format!(
                    "certificate for {} did not re-verify",
                    d.f
                )));
            }
        }
        let irreducible = irreducible_or_unit(d, &v, opts.degree_bound)?;
        let line = line_status(&d.f)?;
        let regular = root_regular(&original, d)?;
        roots.push(RootReport {
            datum: d.clone(),
            vartest: v,
            irreducible,
            line,
            regular,
        });
    }
    let unknown_tail = (!rd.skipped.is_empty()).then_some(Tri::Unknown);
    let ufd = Tri::all(roots.iter().map(|r| r.irreducible).chain(unknown_tail));
    let fibration = Tri::all(roots.iter().map(|r| line_tri(r.line)).chain(unknown_tail));
    let regular = Tri::all(
        roots
            .iter()
            .map(|r| Tri::from(r.regular))
            .chain(unknown_tail),
    );
    path.extend(["ufd".to_string(), "fib".to_string(), "reg".to_string()]);

    let failing = roots.iter().position(|r| !r.vartest.is_accept());
    let mut implied = Vec::new();
    let verdict = match failing {
        None if rd.skipped.is_empty() => {
            path.extend(["G".to_string(), "corG".to_string(), "k[x]".to_string()]);
            implied.extend(
                [
                    "A = k[x]^[2]",
                    "A = k^[3]",
                    "ML(A) = k",
                    "DK(A) = A",
                    "A is an A^2-fibration over k[x]",
                ]
                .map(String::from),
            );
            Verdict::Rectifiable
        }
        None => Verdict::Inconclusive(format!(
            "factor {} of a could not be analyzed: {}",
            rd.skipped[0].factor, rd.skipped[0].reason
        )),
        Some(i) => {
            let f_free_of_x = !norm.f.involves(0);
            let separable_multiple = rd.data.iter().any(|d| d.multiplicity >= 2 && d.separable);
            if !char_p {
                path.extend(["ams".to_string(), "ch0".to_string()]);
                implied.push("ML(A) != k or A is not stably a polynomial ring".into());
                Verdict::NotRectifiable {
                    root: i,
                    theorem: "ch0".into(),
                }
            } else if !h.has_simple_root() {
                path.push("chp2".into());
                implied.push("ML(A) != k or A is not stably a polynomial ring".into());
                implied.push("DK(A) != A or A is not stably a polynomial ring".into());
                Verdict::NotRectifiable {
                    root: i,
                    theorem: "chp2".into(),
                }
            } else if f_free_of_x
                && separable_multiple
                && !vartest_or_constant(&norm.f.with_vars(&VARS[1..])?)?.is_accept()
            {
                path.push("chp3".into());
                implied.push("ML(A) != k or A is not stably a polynomial ring".into());
                implied.push("DK(A) != A or A is not stably a polynomial ring".into());
                let root = rd
                    .data
                    .iter()
                    .position(|d| d.multiplicity >= 2 && d.separable)
                    .unwrap_or(i);
                Verdict::NotRectifiable {
                    root,
                    theorem: "chp3".into(),
                }
            } else {
                Verdict::Inconclusive(format!(
                    "the specialization at the root of {} is not a coordinate, but in characteristic {} \
                     a has a simple root and the hypotheses for F free of X with a separable multiple root do not all hold",
                    rd.data[i].factor,
                    k.characteristic()
                ))
            }
        }
    };
    if verdict == Verdict::Rectifiable && (ufd != Tri::True || fibration != Tri::True) {
        return Err(Error::Internal(format!(
            "rectifiable but ufd={ufd}, fibration={fibration}"
        )));
    }
    Ok(AnalysisReport {
        original,
        normalized: Some(norm),
        domain: true,
        roots,
        skipped: rd.skipped,
        ufd,
        fibration,
        regular,
        verdict,
        theorem_path: path,
        implied,
    })
}

/// Whether the analyzer can build residue fields over `k`.
pub fn supports_field(k: &Field) -> bool {
    !matches!(k.kind(), FieldKind::Extension { base, .. } if matches!(base.kind(), FieldKind::RationalFunctions { .. }))
}
