use rectify::hyperplane::{analyze, AnalysisOptions, Hyperplane};
use rectify::parse::parse_field;
use rectify::report::analysis_text;

fn main() -> rectify::Result<()> {
    let cases = [
        ("Q", "X", "Z^2+T^3+1"),
        ("Q", "X*(X-1)", "Z+X*T^2"),
        ("Q", "X^2+1", "Z+X*T^2"),
        ("F2(s)", "X^2-s", "Z^2+s*T^2+T"),
        ("F2(s)", "X^2*(X^2-s)", "Z^2+s*T^2+T"),
    ];
    for (field, a, f) in cases {
        let k = parse_field(field)?;
        let h = Hyperplane::parse(a, f, &k)?;
        let report = analyze(&h, AnalysisOptions::default())?;
        println!("== ({a})*Y - ({f}) over {field}");
        print!("{}", analysis_text(&report));
        println!();
    }
    Ok(())
}
