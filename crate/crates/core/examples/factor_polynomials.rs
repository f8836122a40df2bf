use rectify::parse::{parse_field, parse_poly};
use rectify::poly::bivariate::{bivariate_irreducible, Irreducibility, DEFAULT_DEGREE_BOUND};
use rectify::poly::factor::univariate_factor;

fn main() -> rectify::Result<()> {
    for (text, field) in [
        ("X^4-10*X^2+1", "Q"),
        ("6*X^4-6", "Q"),
        ("X^4+1", "F5"),
        ("X^2*(X^2-s)", "F2(s)"),
        ("X^4-2", "Q[c]/(c^2-2)"),
    ] {
        let k = parse_field(field)?;
        let f = parse_poly(text, &k, &["X"])?;
        let fac = univariate_factor(&f)?;
        let parts: Vec<String> = fac
            .factors
            .iter()
            .map(|(g, m)| format!("({g})^{m}"))
            .collect();
        println!(
            "{text} over {field} = {} * {}",
            k.format(&fac.unit),
            parts.join(" * ")
        );
    }

    for (text, field) in [
        ("Z^2+T^3+1", "Q"),
        ("Z^2+T^2", "Q[i]/(i^2+1)"),
        ("Z^2+s*T^2+T", "F2(s)"),
    ] {
        let k = parse_field(field)?;
        let f = parse_poly(text, &k, &["Z", "T"])?;
        let verdict = match bivariate_irreducible(&f, DEFAULT_DEGREE_BOUND)? {
            Irreducibility::Irreducible => "irreducible".to_string(),
            Irreducibility::Reducible(g) => format!("divisible by {g}"),
            Irreducibility::Unknown(why) => format!("undecided: {why}"),
        };
        println!("{text} over {field}: {verdict}");
    }
    Ok(())
}
