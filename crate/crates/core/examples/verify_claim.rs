use rectify::parse::{parse_field, parse_poly};
use rectify::verifier::{
    round_trip, verify_coordinate_system, verify_plane_pair, CoordinateClaim, Verification,
};

fn main() -> rectify::Result<()> {
    let k = parse_field("F2(s)")?;
    let vars = ["X", "Y", "Z", "T"];
    let texts = ["X", "(X^2-s)*Y-(Z^2+s*T^2+T)", "Y+T^2", "Z+X*T"];
    let coordinates = texts
        .iter()
        .map(|t| parse_poly(t, &k, &vars))
        .collect::<rectify::Result<Vec<_>>>()?;
    let claim = CoordinateClaim::new(&vars, coordinates)?;
    match verify_coordinate_system(&claim)? {
        Verification::Accept { tags, inverses } => {
            println!(
                "accepted; tags {} stand for the claimed coordinates",
                tags.join(", ")
            );
            for (v, inv) in vars.iter().zip(&inverses) {
                println!("    {v} = {inv}");
            }
            println!("round trip: {}", round_trip(&claim, &inverses)?);
        }
        Verification::Reject { unreachable } => println!("rejected: {unreachable} is unreachable"),
    }

    let q = parse_field("Q")?;
    let p = |t: &str| parse_poly(t, &q, &["Z", "T"]);
    println!(
        "(Z+T^2, T) is a plane system: {}",
        verify_plane_pair(&p("Z+T^2")?, &p("T")?)?
    );
    println!(
        "(Z^2, T) is a plane system: {}",
        verify_plane_pair(&p("Z^2")?, &p("T")?)?
    );
    Ok(())
}
