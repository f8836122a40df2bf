use std::path::Path;

use rectify::corpus::load_dir;
use rectify::hyperplane::AnalysisOptions;

fn main() -> rectify::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut failures = 0;
    for case in load_dir(&dir)? {
        let got = case.run(AnalysisOptions::default())?.verdict;
        let ok = got.name() == case.expected_verdict;
        failures += usize::from(!ok);
        println!(
            "{:<6} {:<34} {}",
            if ok { "ok" } else { "FAIL" },
            case.name(),
            got.name()
        );
    }
    if failures > 0 {
        std::process::exit(1);
    }
    Ok(())
}
