//! JSON and text renderings of analysis results.
//!
//! Every JSON document carries `schema` and `command`; the shipped schema
//! `schema/report.v1.json` describes all of them. Certificates embed a
//! claim (`field`, `vars`, `coordinates`) that [`crate::verifier`] can
//! replay from the document alone.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::filtration::FiltrationContext;
use crate::hyperplane::{AnalysisReport, Tri, Verdict};
use crate::plane::{ClosureStatus, CoordinateCertificate, LineStatus, VarTest};
use crate::poly::factor::Factorization;
use crate::poly::MultiPoly;
use crate::verifier::Verification;
use crate::{Field, Result};

pub const SCHEMA: &str = "rectify.report.v1";
pub const CERTIFICATES_SCHEMA: &str = "rectify.certificates.v1";

fn tri(t: Tri) -> Value {
    match t.as_bool() {
        Some(b) => Value::Bool(b),
        None => Value::String("unknown".into()),
    }
}

fn line(l: LineStatus) -> Value {
    match l {
        LineStatus::Line => Value::Bool(true),
        LineStatus::NotLine => Value::Bool(false),
        LineStatus::Unknown => Value::String("unknown".into()),
    }
}

pub fn certificate_json(c: &CoordinateCertificate) -> Result<Value> {
    let like = MultiPoly::zero(&c.field, &[c.vars[0].as_str(), c.vars[1].as_str()]);
    let coordinate = c.coordinate()?;
    Ok(json!({
        "field": c.field.spec(),
        "input_field": c.input_field.spec(),
        "vars": c.vars,
        "coordinate": coordinate.to_string(),
        "complement": c.complement.to_string(),
        "unit": c.field.format(&c.unit),
        "constant": c.field.format(&c.constant),
        "steps": c.steps.iter().map(|s| s.describe(&like)).collect::<Vec<_>>(),
        "degree_trace": c.degree_trace,
        "claim": {
            "field": c.field.spec(),
            "vars": c.vars,
            "coordinates": [coordinate.to_string(), c.complement.to_string()],
        },
    }))
}

fn closure_json(c: &ClosureStatus) -> Result<Value> {
    Ok(match c {
        ClosureStatus::NotCoordinate => {
            json!({"status": "not_coordinate", "certificate": null, "detail": null})
        }
        ClosureStatus::Coordinate(cert) => {
            json!({"status": "coordinate", "certificate": certificate_json(cert)?, "detail": null})
        }
        ClosureStatus::Unknown(why) => {
            json!({"status": "unknown", "certificate": null, "detail": why})
        }
    })
}

pub fn vartest_json(v: &VarTest) -> Result<Value> {
    Ok(match v {
        VarTest::Accept(c) => json!({
            "result": "accept",
            "reason": null,
            "certificate": certificate_json(c)?,
            "closure": null,
        }),
        VarTest::Reject(r) => json!({
            "result": "reject",
            "reason": r.reason,
            "certificate": null,
            "closure": closure_json(&r.closure)?,
        }),
    })
}

/// Certificates an analysis or vartest produced, including closure
/// witnesses.
pub fn collect_certificates(tests: &[&VarTest]) -> Vec<CoordinateCertificate> {
    let mut out = Vec::new();
    for v in tests {
        match v {
            VarTest::Accept(c) => out.push(c.clone()),
            VarTest::Reject(r) => {
                if let ClosureStatus::Coordinate(c) = &r.closure {
                    out.push((**c).clone());
                }
            }
        }
    }
    out
}

pub fn certificates_document(certs: &[CoordinateCertificate]) -> Result<Value> {
    Ok(json!({
        "schema": CERTIFICATES_SCHEMA,
        "certificates": certs.iter().map(certificate_json).collect::<Result<Vec<_>>>()?,
    }))
}

fn verdict_detail(v: &Verdict) -> Value {
    match v {
        Verdict::Inconclusive(why) => Value::String(why.clone()),
        Verdict::NotRectifiable { theorem, .. } => Value::String(format!("via {theorem}")),
        Verdict::NotDomain(g) => Value::String(format!("a and F share the factor {g}")),
        Verdict::Rectifiable => Value::Null,
    }
}

pub fn analysis_json(r: &AnalysisReport) -> Result<Value> {
    let mut roots = Vec::new();
    for (i, root) in r.roots.iter().enumerate() {
        let d = &root.datum;
        let minpoly = d
            .field
            .minpoly()
            .filter(|_| d.field != *r.original.field())
            .map(|m| {
                crate::fields::dense::format(
                    &d.field.base(),
                    m,
                    d.field.symbol().unwrap_or("lambda"),
                )
            });
        roots.push(json!({
            "index": i,
            "factor": d.factor.to_string(),
            "multiplicity": d.multiplicity,
            "residue_field": d.field.spec(),
            "residue_minpoly": minpoly,
            "root": d.field.format(&d.root),
            "specialization": d.f.to_string(),
            "separable": d.separable,
            "simple": d.simple,
            "coordinate": vartest_json(&root.vartest)?,
            "irreducible": tri(root.irreducible),
            "line": line(root.line),
            "regular": root.regular,
        }));
    }
    let skipped: Vec<Value> = r
        .skipped
        .iter()
        .map(|s| json!({"factor": s.factor.to_string(), "multiplicity": s.multiplicity, "reason": s.reason}))
        .collect();
    let common = match &r.verdict {
        Verdict::NotDomain(g) => Value::String(g.to_string()),
        _ => Value::Null,
    };
    Ok(json!({
        "schema": SCHEMA,
        "command": "analyze",
        "field": r.original.field().spec(),
        "exit_code": r.verdict.exit_code(),
        "input": {
            "a": r.original.a.to_string(),
            "F": r.original.f.to_string(),
            "F_normalized": r.normalized.as_ref().map(|h| h.f.to_string()),
        },
        "domain": r.domain,
        "common_factor": common,
        "verdict": r.verdict.name(),
        "verdict_detail": verdict_detail(&r.verdict),
        "theorem_path": r.theorem_path,
        "implied": r.implied,
        "flags": {
            "ufd": tri(r.ufd),
            "fibration": tri(r.fibration),
            "regular": tri(r.regular),
        },
        "roots": roots,
        "skipped": skipped,
    }))
}

pub fn analysis_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let k = r.original.field();
    let wrap = |p: &MultiPoly| {
        let t = p.to_string();
        if p.num_terms() > 1 || t.starts_with('-') {
            format!("({t})")
        } else {
            t
        }
    };
    let _ = writeln!(
        s,
        "G = {}*Y - {} over {}",
        wrap(&r.original.a),
        wrap(&r.original.f),
        k.spec()
    );
    let _ = writeln!(s, "verdict: {}", r.verdict.name());
    if let Value::String(d) = verdict_detail(&r.verdict) {
        let _ = writeln!(s, "  {d}");
    }
    if !r.domain {
        return s;
    }
    let _ = writeln!(
        s,
        "ufd: {}  fibration: {}  regular: {}",
        r.ufd, r.fibration, r.regular
    );
    for (i, root) in r.roots.iter().enumerate() {
        let d = &root.datum;
        let _ = writeln!(
            s,
            "root {i}: factor {} (multiplicity {}) over {}",
            d.factor,
            d.multiplicity,
            d.field.spec()
        );
        let _ = writeln!(s, "  f = {}", d.f);
        let _ = writeln!(s, "  {}", root.vartest);
    }
    for sk in &r.skipped {
        let _ = writeln!(s, "skipped factor {}: {}", sk.factor, sk.reason);
    }
    let _ = writeln!(s, "path: {}", r.theorem_path.join(" -> "));
    for imp in &r.implied {
        let _ = writeln!(s, "implied: {imp}");
    }
    s
}

pub fn vartest_document(f: &MultiPoly, v: &VarTest) -> Result<Value> {
    let mut doc = vartest_json(v)?;
    let obj = doc.as_object_mut().expect("object");
    obj.insert("schema".into(), SCHEMA.into());
    obj.insert("command".into(), "vartest".into());
    obj.insert("field".into(), f.field().spec().into());
    obj.insert("exit_code".into(), i32::from(!v.is_accept()).into());
    obj.insert(
        "input".into(),
        json!({"f": f.to_string(), "vars": f.vars()}),
    );
    Ok(doc)
}

pub fn vartest_text(f: &MultiPoly, v: &VarTest) -> String {
    let mut s = format!("f = {} over {}\n{v}\n", f, f.field().spec());
    let cert = match v {
        VarTest::Accept(c) => Some(c),
        VarTest::Reject(r) => match &r.closure {
            ClosureStatus::Coordinate(c) => {
                s.push_str(&format!("coordinate over {}\n", c.field.spec()));
                Some(&**c)
            }
            ClosureStatus::NotCoordinate => {
                s.push_str("not a coordinate over the algebraic closure\n");
                None
            }
            ClosureStatus::Unknown(why) => {
                s.push_str(&format!("closure status unknown: {why}\n"));
                None
            }
        },
    };
    if let Some(c) = cert {
        let like = MultiPoly::zero(&c.field, &[c.vars[0].as_str(), c.vars[1].as_str()]);
        for st in &c.steps {
            s.push_str(&format!("  step {}\n", st.describe(&like)));
        }
    }
    s
}

/// One verified claim.
pub struct VerifyOutcome {
    pub field: Field,
    pub vars: Vec<String>,
    pub coordinates: Vec<MultiPoly>,
    pub verification: Verification,
    pub round_trip: Option<bool>,
}

pub fn verify_json(outcomes: &[VerifyOutcome]) -> Value {
    let claims: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            let (result, unreachable, inverses) = match &o.verification {
                Verification::Accept { tags, inverses } => (
                    "accept",
                    Value::Null,
                    json!({"tags": tags, "expressions": inverses.iter().map(|p| p.to_string()).collect::<Vec<_>>()}),
                ),
                Verification::Reject { unreachable } => ("reject", Value::String(unreachable.clone()), Value::Null),
            };
            json!({
                "field": o.field.spec(),
                "vars": o.vars,
                "coordinates": o.coordinates.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "result": result,
                "unreachable": unreachable,
                "inverses": inverses,
                "round_trip": o.round_trip,
            })
        })
        .collect();
    let ok = outcomes
        .iter()
        .all(|o| o.verification.is_accept() && o.round_trip != Some(false));
    json!({
        "schema": SCHEMA,
        "command": "verify",
        "field": outcomes.first().map(|o| o.field.spec()).unwrap_or_default(),
        "exit_code": i32::from(!ok),
        "claims": claims,
    })
}

pub fn verify_text(outcomes: &[VerifyOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let names = o.vars.join(", ");
        let coords: Vec<String> = o.coordinates.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            s,
            "claim over {}: K[{}] = K[{}]",
            o.field.spec(),
            coords.join(", "),
            names
        );
        match &o.verification {
            Verification::Accept { tags, inverses } => {
                let _ = writeln!(s, "  accept");
                for (v, inv) in o.vars.iter().zip(inverses) {
                    let _ = writeln!(s, "  {v} = {inv}");
                }
                let _ = writeln!(
                    s,
                    "  tags {} stand for the coordinates in order",
                    tags.join(", ")
                );
                if let Some(rt) = o.round_trip {
                    let _ = writeln!(s, "  round trip: {}", if rt { "exact" } else { "FAILED" });
                }
            }
            Verification::Reject { unreachable } => {
                let _ = writeln!(s, "  reject: {unreachable} is not reachable");
            }
        }
    }
    s
}

/// Results of the filtration checks on one context.
pub struct GrCheck {
    pub ctx: FiltrationContext,
    pub shift: Option<String>,
    pub w: [Option<i64>; 4],
    pub residual: Option<i64>,
}

impl GrCheck {
    pub fn passed(&self) -> bool {
        self.residual.map_or(true, |r| r <= -1)
            && self.w == [Some(-1), Some(self.ctx.d as i64), Some(0), Some(0)]
    }
}

pub fn grcheck_json(g: &GrCheck) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "gr-check",
        "field": g.ctx.h.field().spec(),
        "exit_code": i32::from(!g.passed()),
        "input": {"a": g.ctx.h.a.to_string(), "F": g.ctx.h.f.to_string()},
        "shift": g.shift,
        "d": g.ctx.d,
        "alpha": g.ctx.alpha.to_string(),
        "f0": g.ctx.f0.to_string(),
        "w": {"x": g.w[0], "y": g.w[1], "z": g.w[2], "t": g.w[3]},
        "residual": g.residual,
        "residual_ok": g.residual.map_or(true, |r| r <= -1),
        "passed": g.passed(),
    })
}

pub fn grcheck_text(g: &GrCheck) -> String {
    let mut s = String::new();
    if let Some(sh) = &g.shift {
        let _ = writeln!(s, "shifted X -> {sh}");
    }
    let _ = writeln!(
        s,
        "a = X^{} * ({}), f0 = {}",
        g.ctx.d, g.ctx.alpha, g.ctx.f0
    );
    let show = |w: Option<i64>| w.map_or("-inf".to_string(), |v| v.to_string());
    let _ = writeln!(
        s,
        "w(x) = {}, w(y) = {}, w(z) = {}, w(t) = {}",
        show(g.w[0]),
        show(g.w[1]),
        show(g.w[2]),
        show(g.w[3])
    );
    let _ = writeln!(s, "w(alpha(0) x^d y - f0) = {}", show(g.residual));
    let _ = writeln!(s, "{}", if g.passed() { "pass" } else { "FAIL" });
    s
}

pub fn factor_json(f: &MultiPoly, fac: &Factorization) -> Value {
    let factors: Vec<Value> = fac
        .factors
        .iter()
        .enumerate()
        .map(|(i, (g, m))| json!({"factor": g.to_string(), "multiplicity": m, "certified": !fac.uncertified.contains(&i)}))
        .collect();
    json!({
        "schema": SCHEMA,
        "command": "factor",
        "field": f.field().spec(),
        "exit_code": i32::from(!fac.is_complete()) * 2,
        "input": f.to_string(),
        "unit": f.field().format(&fac.unit),
        "factors": factors,
    })
}

pub fn factor_text(f: &MultiPoly, fac: &Factorization) -> String {
    let mut s = format!("{} = {}", f, f.field().format(&fac.unit));
    for (i, (g, m)) in fac.factors.iter().enumerate() {
        let mark = if fac.uncertified.contains(&i) {
            "?"
        } else {
            ""
        };
        if *m == 1 {
            let _ = write!(s, " * ({g}){mark}");
        } else {
            let _ = write!(s, " * ({g})^{m}{mark}");
        }
    }
    s.push('\n');
    if !fac.is_complete() {
        s.push_str("factors marked ? are not certified irreducible\n");
    }
    s
}
