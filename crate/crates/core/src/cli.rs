//! Command-line surface: `analyze`, `vartest`, `verify`, `gr-check`,
//! `factor`.
//!
//! Exit codes: 0 for a positive result (Rectifiable, Accept, pass), 1 for
//! a negative one, 2 for Inconclusive, 3 for NotDomain and usage errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::filtration::FiltrationContext;
use crate::hyperplane::{analyze, AnalysisOptions, Hyperplane};
use crate::parse::{parse_field, parse_poly, variable_names};
use crate::plane::vartest;
use crate::poly::bivariate::DEFAULT_DEGREE_BOUND;
use crate::poly::factor::{univariate_factor_seeded, DEFAULT_SEED};
use crate::poly::MultiPoly;
use crate::report::{self, GrCheck, VerifyOutcome};
use crate::verifier::{round_trip, verify_coordinate_system, CoordinateClaim, Verification};
use crate::Field;

pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rectify",
    version,
    about = "Rectifiability of a(X)Y - F(X,Z,T) in affine 4-space"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable report (default).
    #[arg(long, global = true)]
    pub text: bool,
    /// Seed for randomized factoring steps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Total degree bound for the exhaustive irreducibility search.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    pub degree_bound: u32,
    /// Write emitted coordinate certificates to this file as JSON.
    #[arg(long, global = true)]
    pub cert_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full structural analysis and rectifiability verdict.
    Analyze { a: String, f: String, field: String },
    /// Decide whether a plane polynomial is a coordinate.
    Vartest {
        f: String,
        field: String,
        /// The two ring variables, comma separated.
        #[arg(long, default_value = "Z,T")]
        vars: String,
    },
    /// Check a claimed coordinate system (TOML claim or certificate JSON).
    Verify { claim: PathBuf },
    /// Degree function and graded-relation checks at a root of a.
    GrCheck {
        a: String,
        f: String,
        field: String,
        /// Root of a to move to the origin; defaults to 0, or to a root in
        /// the field when a(0) != 0.
        #[arg(long)]
        root: Option<String>,
    },
    /// Factor a univariate polynomial.
    Factor { poly: String, field: String },
}

/// Rendered output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text, 0)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
        },
    }
}

fn render(cli: &Cli, json: Value, text: String) -> String {
    if cli.json {
        let mut s = serde_json::to_string_pretty(&json).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    }
}

fn write_certs(cli: &Cli, certs: &[crate::plane::CoordinateCertificate]) -> Result<()> {
    if let Some(path) = &cli.cert_out {
        let doc = report::certificates_document(certs)?;
        let text = serde_json::to_string_pretty(&doc).expect("serializable");
        std::fs::write(path, text)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze { a, f, field } => {
            let k = parse_field(field)?;
            let h = Hyperplane::parse(a, f, &k)?;
            let opts = AnalysisOptions {
                degree_bound: cli.degree_bound,
                seed: cli.seed,
            };
            let r = analyze(&h, opts)?;
            let tests: Vec<_> = r.roots.iter().map(|x| &x.vartest).collect();
            write_certs(cli, &report::collect_certificates(&tests))?;
            let out = render(cli, report::analysis_json(&r)?, report::analysis_text(&r));
            Ok(Outcome::ok(out, r.verdict.exit_code()))
        }
        Command::Vartest { f, field, vars } => {
            let k = parse_field(field)?;
            let names: Vec<&str> = vars.split(',').map(str::trim).collect();
            if names.len() != 2 {
                return Err(Error::Usage(
                    "--vars must name exactly two variables".into(),
                ));
            }
            let p = parse_poly(f, &k, &names)?;
            let v = vartest(&p)?;
            write_certs(cli, &report::collect_certificates(&[&v]))?;
            let out = render(
                cli,
                report::vartest_document(&p, &v)?,
                report::vartest_text(&p, &v),
            );
            Ok(Outcome::ok(out, i32::from(!v.is_accept())))
        }
        Command::Verify { claim } => {
            let outcomes = verify_file(claim)?;
            let doc = report::verify_json(&outcomes);
            let code = doc["exit_code"].as_i64().unwrap_or(1) as i32;
            Ok(Outcome::ok(
                render(cli, doc, report::verify_text(&outcomes)),
                code,
            ))
        }
        Command::GrCheck { a, f, field, root } => {
            let k = parse_field(field)?;
            let h = Hyperplane::parse(a, f, &k)?;
            let root = match root {
                Some(r) => Some(parse_constant(r, &k)?),
                None => default_root(&h, cli.seed)?,
            };
            let ctx = match &root {
                Some(r) => FiltrationContext::at_root(&h, r)?,
                None => FiltrationContext::new(&h)?,
            };
            let w = [ctx.x(), ctx.y(), ctx.z(), ctx.t()].map(|e| ctx.w_degree(&e));
            let g = GrCheck {
                shift: root.map(|r| format!("X+{}", k.format(&r))),
                residual: ctx.gr_relation_residual()?,
                w,
                ctx,
            };
            let code = i32::from(!g.passed());
            Ok(Outcome::ok(
                render(cli, report::grcheck_json(&g), report::grcheck_text(&g)),
                code,
            ))
        }
        Command::Factor { poly, field } => {
            let k = parse_field(field)?;
            let names = variable_names(poly, &k)?;
            if names.len() > 1 {
                return Err(Error::Usage(
                    "factor expects a univariate polynomial".into(),
                ));
            }
            let var = names.first().cloned().unwrap_or_else(|| "X".into());
            let p = parse_poly(poly, &k, &[var.as_str()])?;
            let fac = univariate_factor_seeded(&p, cli.seed)?;
            let json = report::factor_json(&p, &fac);
            let code = json["exit_code"].as_i64().unwrap_or(0) as i32;
            Ok(Outcome::ok(
                render(cli, json, report::factor_text(&p, &fac)),
                code,
            ))
        }
    }
}

fn parse_constant(text: &str, k: &Field) -> Result<crate::Elem> {
    parse_poly(text, k, &[])?
        .constant_value()
        .ok_or_else(|| Error::Usage(format!("{text} is not a constant")))
}

/// `None` when `a(0) = 0`; otherwise a root of `a` in the field, which must
/// exist.
fn default_root(h: &Hyperplane, seed: u64) -> Result<Option<crate::Elem>> {
    let k = h.field();
    if k.is_zero(&h.a.constant_term()) {
        return Ok(None);
    }
    let fac = univariate_factor_seeded(&h.a, seed)?;
    for (p, _) in &fac.factors {
        let d = p.to_dense(0)?;
        if d.len() == 2 {
            return Ok(Some(k.neg(&k.div(&d[0], &d[1])?)));
        }
    }
    Err(Error::Usage(
        "a has no root in the field; pass --root".into(),
    ))
}

#[derive(Debug, Deserialize)]
struct ClaimFile {
    field: String,
    vars: Vec<String>,
    coordinates: Vec<String>,
}

fn check_claim(c: &ClaimFile) -> Result<VerifyOutcome> {
    let k = parse_field(&c.field)?;
    let vars: Vec<&str> = c.vars.iter().map(String::as_str).collect();
    let coordinates = c
        .coordinates
        .iter()
        .map(|t| parse_poly(t, &k, &vars))
        .collect::<Result<Vec<MultiPoly>>>()?;
    let claim = CoordinateClaim::new(&vars, coordinates)?;
    let verification = verify_coordinate_system(&claim)?;
    let round_trip = match &verification {
        Verification::Accept { inverses, .. } => Some(round_trip(&claim, inverses)?),
        Verification::Reject { .. } => None,
    };
    Ok(VerifyOutcome {
        field: k,
        vars: claim.vars,
        coordinates: claim.coordinates,
        verification,
        round_trip,
    })
}

/// Reads a TOML claim, a JSON claim, or a certificates document and checks
/// every claim in it.
pub fn verify_file(path: &Path) -> Result<Vec<VerifyOutcome>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let claims: Vec<ClaimFile> =
        if let Ok(v) = serde_json::from_str::<Value>(&text) {
            match v.get("certificates").and_then(Value::as_array) {
                Some(certs) => certs
                    .iter()
                    .map(|c| serde_json::from_value(c["claim"].clone()))
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| Error::Usage(format!("bad certificate: {e}")))?,
                None => vec![serde_json::from_value(v)
                    .map_err(|e| Error::Usage(format!("bad claim: {e}")))?],
            }
        } else {
            vec![toml::from_str(&text).map_err(|e| Error::Usage(format!("bad claim file: {e}")))?]
        };
    if claims.is_empty() {
        return Err(Error::Usage("no claims to verify".into()));
    }
    claims.iter().map(check_claim).collect()
}
