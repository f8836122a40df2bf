use rectify::hyperplane::{analyze, AnalysisOptions, Hyperplane};
use rectify::parse::parse_field;
use rectify::report::{analysis_json, certificates_document, collect_certificates};

fn main() -> rectify::Result<()> {
    let k = parse_field("Q")?;
    let h = Hyperplane::parse("X*(X^2+1)", "Z+(T+X*Z^2)^2", &k)?;
    let report = analyze(&h, AnalysisOptions::default())?;
    let doc = analysis_json(&report)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("serializable")
    );

    // the certificates alone are enough to replay every claim with `rectify verify`
    let tests: Vec<_> = report.roots.iter().map(|r| &r.vartest).collect();
    let certs = certificates_document(&collect_certificates(&tests))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&certs).expect("serializable")
    );
    Ok(())
}
