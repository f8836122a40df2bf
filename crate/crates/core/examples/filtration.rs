use rectify::filtration::FiltrationContext;
use rectify::hyperplane::Hyperplane;
use rectify::parse::{parse_field, parse_poly};

fn main() -> rectify::Result<()> {
    let k = parse_field("Q")?;
    let h = Hyperplane::parse("X^2*(X+1)", "Z+X*T", &k)?;
    let ctx = FiltrationContext::new(&h)?;
    println!("d = {}, alpha = {}", ctx.d, ctx.alpha);
    for (name, e) in [
        ("x", ctx.x()),
        ("y", ctx.y()),
        ("z", ctx.z()),
        ("t", ctx.t()),
    ] {
        println!("w({name}) = {:?}", ctx.w_degree(&e));
    }

    // x^2 y (X + 1) equals Z + X T in A, so x^2 y - z has negative degree
    let e = ctx.to_normal_form(&parse_poly("X^2*Y-Z", &k, &["X", "Y", "Z", "T"])?)?;
    println!("w(x^2 y - z) = {:?}", ctx.w_degree(&e));
    if let Some(q) = ctx.x_divide(&e)? {
        println!("(x^2 y - z)/x = {}", ctx.to_poly(&q));
    }
    let rep = ctx.admissible_representation(&e)?;
    println!("admissible representation: {rep}");
    println!(
        "graded relation residual: {:?}",
        ctx.gr_relation_residual()?
    );

    // the same checks at the root -1, after moving it to the origin
    let at = FiltrationContext::at_root(&h, &k.from_i64(-1))?;
    println!(
        "at X = -1: d = {}, residual {:?}",
        at.d,
        at.gr_relation_residual()?
    );
    Ok(())
}
