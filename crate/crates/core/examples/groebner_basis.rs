use rectify::parse::{parse_field, parse_poly};
use rectify::poly::groebner::{groebner, ideal_contains_one, normal_form};
use rectify::MonomialOrder;

fn main() -> rectify::Result<()> {
    let q = parse_field("Q")?;
    let vars = ["X", "Y", "Z"];
    let gens = ["X^2+Y^2+Z^2-1", "X-Y", "Y-Z^2"]
        .iter()
        .map(|t| parse_poly(t, &q, &vars))
        .collect::<rectify::Result<Vec<_>>>()?;
    let lex = groebner(&gens, MonomialOrder::Lex)?;
    println!("lex basis:");
    for g in &lex {
        println!("    {g}");
    }
    let f = parse_poly("X^3*Z", &q, &vars)?;
    println!(
        "X^3*Z reduces to {}",
        normal_form(&f, &lex, MonomialOrder::Lex)?
    );

    // a smooth curve has no common zero with its partial derivatives
    let zt = ["Z", "T"];
    for text in ["Z^2+T^3+1", "Z^2-T^3"] {
        let f = parse_poly(text, &q, &zt)?;
        let jac = [f.clone(), f.partial_derivative(0), f.partial_derivative(1)];
        println!("{text} smooth: {}", ideal_contains_one(&jac)?);
    }
    Ok(())
}
