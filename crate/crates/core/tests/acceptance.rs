//! End-to-end acceptance suite. Runs without the test harness so that every
//! criterion prints one PASS/FAIL line with its time budget.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectify::cli::verify_file;
use rectify::filtration::{AElement, FiltrationContext};
use rectify::hyperplane::{
    analyze, domain_check, regularity_check, root_data, AnalysisOptions, DomainStatus, Hyperplane,
    Tri, Verdict,
};
use rectify::parse::{parse_field, parse_poly};
use rectify::plane::{vartest, VarTest};
use rectify::poly::groebner::ideal_contains_one;
use rectify::verifier::{verify_plane_pair, Verification};
use rectify::{Field, MultiPoly};

use common::{
    coeff, constant, constants, random_plane_poly, random_tame, random_tame_capped, zero,
};

const SEED: u64 = 20_260_415;

type Check = fn() -> Result<String, String>;

fn main() {
    let criteria: [(&str, Duration, Check); 8] = [
        ("1 cusp-plus-one hyperplane over Q", secs(5), cusp_plus_one),
        (
            "2 inseparable coordinate system over F2(s)",
            secs(10),
            inseparable_system,
        ),
        (
            "3 purely inseparable factor over F2(s)",
            secs(10),
            inseparable_factor,
        ),
        ("4 tame coordinate round trip", secs(60), tame_round_trip),
        (
            "5 rejection of products and cusps",
            secs(30),
            rejection_soundness,
        ),
        (
            "6 rectifiable hyperplanes by pullback",
            secs(60),
            pullback_hyperplanes,
        ),
        ("7 filtration laws", secs(60), filtration_suite),
        (
            "8 regularity against the Jacobian ideal",
            secs(60),
            regularity_oracle,
        ),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {}", panic_text(&e))));
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed <= budget => "PASS",
            _ => "FAIL",
        };
        let detail = match outcome {
            Ok(d) if elapsed <= budget => d,
            Ok(d) => format!("{d}; over the {}s budget", budget.as_secs()),
            Err(e) => e,
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "{verdict} criterion {name}: {detail} ({:.2}s of {}s)",
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

fn secs(n: u64) -> Duration {
    Duration::from_secs(n)
}

fn panic_text(e: &Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_analysis(field: &str, a: &str, f: &str) -> rectify::hyperplane::AnalysisReport {
    let k = parse_field(field).unwrap();
    analyze(
        &Hyperplane::parse(a, f, &k).unwrap(),
        AnalysisOptions::default(),
    )
    .unwrap()
}

fn cusp_plus_one() -> Result<String, String> {
    let r = run_analysis("Q", "X", "Z^2+T^3+1");
    let got = (r.domain, r.ufd, r.fibration, r.verdict.name());
    ensure(
        got == (true, Tri::True, Tri::False, "NotRectifiable"),
        || format!("got {got:?}"),
    )?;
    Ok(format!(
        "domain, ufd, not a fibration, {}",
        r.verdict.name()
    ))
}

fn inseparable_system() -> Result<String, String> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("claims/inseparable_system.toml");
    let outcomes = verify_file(&path).map_err(|e| e.to_string())?;
    let o = &outcomes[0];
    ensure(
        matches!(o.verification, Verification::Accept { .. }),
        || format!("{:?}", o.verification),
    )?;
    ensure(o.round_trip == Some(true), || {
        "inverse expressions do not round-trip".into()
    })?;
    Ok("accepted, inverses round-trip".into())
}

fn inseparable_factor() -> Result<String, String> {
    let r = run_analysis("F2(s)", "X^2*(X^2-s)", "Z^2+s*T^2+T");
    let chp2 = matches!(&r.verdict, Verdict::NotRectifiable { theorem, .. } if theorem == "chp2")
        && r.theorem_path.iter().any(|t| t == "chp2");
    ensure(chp2, || {
        format!("verdict {:?}, path {:?}", r.verdict, r.theorem_path)
    })?;
    ensure(r.ufd == Tri::True, || format!("ufd {}", r.ufd))?;
    Ok(format!(
        "NotRectifiable via {}, ufd",
        r.theorem_path.join(" > ")
    ))
}

fn tame_round_trip() -> Result<String, String> {
    let k = Field::rationals();
    let ring = MultiPoly::zero(&k, &["Z", "T"]);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut max_degree, mut high) = (0, 0);
    for trial in 0..500 {
        let f = loop {
            let len = rng.gen_range(1..=5);
            let img =
                random_tame_capped(&ring, (0, 1), len, 4, 30, &mut rng, &mut constants(&ring));
            if let Some([_, t]) = img {
                break t;
            }
        };
        max_degree = max_degree.max(f.total_degree().unwrap_or(0));
        high += usize::from(f.total_degree().unwrap_or(0) >= 4);
        let c = match vartest(&f).map_err(|e| e.to_string())? {
            VarTest::Accept(c) => c,
            VarTest::Reject(r) => return Err(format!("trial {trial}: {f} rejected: {}", r.reason)),
        };
        let ok = verify_plane_pair(&f, &c.complement).map_err(|e| e.to_string())?;
        ensure(ok, || {
            format!("trial {trial}: complement {} of {f} fails", c.complement)
        })?;
    }
    Ok(format!(
        "500 of 500 accepted and verified, {high} of degree at least 4, max degree {max_degree}"
    ))
}

fn rejection_soundness() -> Result<String, String> {
    let k = Field::rationals();
    let ring = MultiPoly::zero(&k, &["Z", "T"]);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for trial in 0..200 {
        let g = random_plane_poly(&ring, 3, &mut rng);
        let h = random_plane_poly(&ring, 3, &mut rng);
        let f = &g * &h;
        let v = vartest(&f).map_err(|e| e.to_string())?;
        ensure(!v.is_accept(), || {
            format!("trial {trial}: ({g})*({h}) accepted")
        })?;
    }
    for text in ["Z^2-T^3", "Z^2+T^3+1"] {
        let f = parse_poly(text, &k, &["Z", "T"]).unwrap();
        ensure(!vartest(&f).unwrap().is_accept(), || {
            format!("{text} accepted")
        })?;
    }
    Ok("202 of 202 rejected".into())
}

fn pullback_hyperplanes() -> Result<String, String> {
    let k = Field::rationals();
    let ring = MultiPoly::zero(&k, &["X", "Z", "T"]);
    let x = ring.var_at(0);
    let one = constant(&ring, k.one());
    let multipliers = [one.clone(), x.clone(), &x - &one];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let exps: Vec<(u32, u32)> = (1..=3).flat_map(|m| (1..=3).map(move |n| (m, n))).collect();
    let mut certificates = 0;
    for case in 0..20 {
        let (m, n) = exps[case % exps.len()];
        let a = &x.pow(m) * &(&x - &one).pow(n);
        let mut coeffs = |rng: &mut ChaCha8Rng| {
            let c = constant(&ring, coeff(&k, rng));
            &c * multipliers.choose(rng).unwrap()
        };
        // nonlinear in Z, T and genuinely varying with X
        let f = loop {
            let len = rng.gen_range(2..=4);
            let [_, f] = random_tame(&ring, (1, 2), len, 3, &mut rng, &mut coeffs);
            let zt = f.degree_in(1).max(f.degree_in(2));
            if f.involves(0) && (3..=12).contains(&zt) && f.total_degree().unwrap_or(0) <= 16 {
                break f;
            }
        };
        let h = Hyperplane::new(&a, &f).map_err(|e| e.to_string())?;
        let r = analyze(&h, AnalysisOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Rectifiable, || {
            format!("case {case}: a = {a}, F = {f} gave {:?}", r.verdict)
        })?;
        for root in &r.roots {
            let c = root
                .vartest
                .certificate()
                .ok_or_else(|| format!("case {case}: root without certificate"))?;
            let f0 = root.datum.f.promote(&c.field).map_err(|e| e.to_string())?;
            let ok = verify_plane_pair(&f0, &c.complement).map_err(|e| e.to_string())?;
            ensure(ok, || {
                format!("case {case}: certificate for {} fails", root.datum.f)
            })?;
            certificates += 1;
        }
    }
    Ok(format!(
        "20 of 20 Rectifiable, {certificates} certificates re-verified"
    ))
}

const FILTRATION_CONTEXTS: [(&str, &str, &str); 10] = [
    ("Q", "X", "Z+X*T"),
    ("Q", "X^2*(X+1)", "Z+X*T"),
    ("Q", "X^3", "Z^2+T^3+1+X*Z"),
    ("Q", "X*(X-2)", "T+Z^2+X*Z*T"),
    ("Q", "X^2", "Z*T+1+X"),
    ("Q", "X^3*(X+3)", "Z^2-T+X^2*T^2"),
    ("Q", "X^2*(X^2+1)", "Z+X*T^2"),
    ("F5", "X^2", "Z^2+T^3+1"),
    ("F5", "X*(X+1)", "Z+T^2+X*T"),
    ("F2(s)", "X^2*(X^2-s)", "Z^2+s*T^2+T"),
];

fn random_element(ctx: &FiltrationContext, with_y: bool, rng: &mut ChaCha8Rng) -> AElement {
    let k = ctx.h.field().clone();
    let ring = MultiPoly::zero(&k, &["X", "Y", "Z", "T"]);
    let mut p = zero(&ring);
    for _ in 0..rng.gen_range(1..=4) {
        let e = [
            rng.gen_range(0..3),
            if with_y { rng.gen_range(0..3) } else { 0 },
            rng.gen_range(0..3),
            rng.gen_range(0..3),
        ];
        let mono = (0..4).fold(constant(&ring, coeff(&k, rng)), |acc, i| {
            &acc * &ring.var_at(i).pow(e[i])
        });
        p = &p + &mono;
    }
    ctx.to_normal_form(&p).unwrap()
}

fn add_w(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

fn filtration_suite() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let (mut pairs, mut negatives) = (0, 0);
    for (field, a, f) in FILTRATION_CONTEXTS {
        let k = parse_field(field).unwrap();
        let h = Hyperplane::parse(a, f, &k).unwrap();
        let ctx = FiltrationContext::new(&h).map_err(|e| e.to_string())?;
        let d = ctx.d as i64;
        let gens = [ctx.x(), ctx.y(), ctx.z(), ctx.t()].map(|e| ctx.w_degree(&e));
        ensure(gens == [Some(-1), Some(d), Some(0), Some(0)], || {
            format!("{a}, {f}: generator degrees {gens:?}")
        })?;
        let residual = ctx.gr_relation_residual().map_err(|e| e.to_string())?;
        ensure(residual.map_or(true, |r| r <= -1), || {
            format!("{a}, {f}: residual {residual:?}")
        })?;
        let mut negative: Vec<AElement> = Vec::new();
        for _ in 0..50 {
            let e1 = random_element(&ctx, true, &mut rng);
            let e2 = random_element(&ctx, true, &mut rng);
            let prod = ctx.mul(&e1, &e2);
            let (w1, w2, w12) = (ctx.w_degree(&e1), ctx.w_degree(&e2), ctx.w_degree(&prod));
            ensure(w12 == add_w(w1, w2), || {
                format!("{a}, {f}: w({e1:?}·{e2:?}) = {w12:?}")
            })?;
            pairs += 1;
            for e in [e1, e2, prod] {
                if ctx.w_degree(&e).is_some_and(|w| w < 0) {
                    negative.push(e);
                }
            }
        }
        // α(0) x^d y - f0 times elements of degree at most 0
        let like = MultiPoly::zero(&k, &["X", "Y", "Z", "T"]);
        let alpha0 = ctx.alpha.constant_term();
        let f0 =
            h.f.eval_var("X", &k.zero())
                .unwrap()
                .with_vars(&["X", "Y", "Z", "T"])
                .unwrap();
        let relation = &like
            .var_at(0)
            .pow(ctx.d)
            .mul_monomial(&[0, 1, 0, 0], &alpha0)
            - &f0;
        let relation = ctx.to_normal_form(&relation).unwrap();
        for _ in 0..20 {
            let e = ctx.mul(&relation, &random_element(&ctx, false, &mut rng));
            if !e.is_zero() {
                negative.push(e);
            }
        }
        for e in &negative {
            let w = ctx.w_degree(e);
            ensure(w.is_some_and(|w| w < 0), || {
                format!("{a}, {f}: expected a negative degree, got {w:?}")
            })?;
            let q = ctx.x_divide(e).map_err(|err| err.to_string())?;
            let q = q.ok_or_else(|| {
                format!(
                    "{a}, {f}: x does not divide {:?} of degree {w:?}",
                    ctx.to_poly(e).to_string()
                )
            })?;
            ensure(ctx.mul(&ctx.x(), &q) == *e, || {
                format!("{a}, {f}: x·(e/x) != e")
            })?;
            ensure(ctx.w_degree(&q) == w.map(|w| w + 1), || {
                format!("{a}, {f}: w(e/x) != w(e)+1")
            })?;
            negatives += 1;
        }
    }
    Ok(format!(
        "10 contexts, {pairs} pairs additive, {negatives} negative elements divisible by x"
    ))
}

/// `1 ∈ (G, ∂G/∂X, ∂G/∂Y, ∂G/∂Z, ∂G/∂T)`: no singular point over the
/// algebraic closure.
fn jacobian_smooth(h: &Hyperplane) -> bool {
    let g = h.g().unwrap();
    let mut gens = vec![g.clone()];
    gens.extend((0..4).map(|i| g.partial_derivative(i)));
    ideal_contains_one(&gens).unwrap()
}

fn regularity_oracle() -> Result<String, String> {
    let k = Field::rationals();
    let p = |t: &str| parse_poly(t, &k, &["X", "Z", "T"]).unwrap();
    let mut cases: Vec<(MultiPoly, MultiPoly)> = [
        ("X", "Z^2-T^2"),
        ("X^2", "Z^2-T^2+X"),
        ("X^2", "Z^2-T^2+X*Z"),
        ("X*(X-1)", "Z^2-T^3+X*T"),
        ("X^2+1", "Z^2+T^2+X*Z*T"),
        ("X^3", "Z^2+T^3+1"),
        ("X*(X^2+1)", "Z*T+X"),
        ("X^2*(X-1)", "Z^2-T^3+X-1"),
    ]
    .iter()
    .map(|(a, f)| (p(a), p(f)))
    .collect();
    let pool_a = [
        "X",
        "X^2",
        "X*(X-1)",
        "X^2*(X+1)",
        "X^2+1",
        "X^3-2",
        "X*(X^2+1)",
    ];
    let ring = p("0");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    while cases.len() < 20 {
        let a = p(pool_a.choose(&mut rng).unwrap());
        let mut f = zero(&ring);
        for _ in 0..rng.gen_range(2..=4) {
            let e: [u32; 3] = [
                rng.gen_range(0..=2),
                rng.gen_range(0..=3),
                rng.gen_range(0..=3),
            ];
            if e.iter().sum::<u32>() > 4 {
                continue;
            }
            let mono = (0..3).fold(constant(&ring, coeff(&k, &mut rng)), |acc, i| {
                &acc * &ring.var_at(i).pow(e[i])
            });
            f = &f + &mono;
        }
        let h = Hyperplane::new(&a, &f).unwrap();
        if f.total_degree().unwrap_or(0) >= 1 && domain_check(&h).unwrap() == DomainStatus::Domain {
            cases.push((a, f));
        }
    }
    let mut singular = 0;
    for (a, f) in &cases {
        let h = Hyperplane::new(a, f).unwrap();
        let rd = root_data(&h, rectify::poly::factor::DEFAULT_SEED).map_err(|e| e.to_string())?;
        let lemma = regularity_check(&h, &rd).map_err(|e| e.to_string())?;
        let oracle = jacobian_smooth(&h);
        ensure(lemma == Tri::from(oracle), || {
            format!("a = {a}, F = {f}: lemma {lemma}, oracle {oracle}")
        })?;
        singular += usize::from(!oracle);
    }
    Ok(format!("20 of 20 agree ({singular} singular)"))
}
