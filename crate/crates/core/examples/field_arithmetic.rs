use rectify::parse::parse_field;

fn main() -> rectify::Result<()> {
    let k = parse_field("Q[c]/(c^3-2)")?;
    let c = k.generator().expect("extension");
    let x = k.add(&c, &k.one());
    let inv = k.inv(&x)?;
    println!("1/(c+1) = {} in {k}", k.format(&inv));
    println!("c^3 = {}", k.format(&k.pow(&c, 3)));

    let f4 = parse_field("F2[mu]/(mu^2+mu+1)")?;
    let mu = f4.generator().expect("extension");
    println!(
        "{} has {:?} elements; mu^3 = {}",
        f4,
        f4.size(),
        f4.format(&f4.pow(&mu, 3))
    );

    let r = parse_field("F3(s)")?;
    let s = r.generator().expect("rational functions");
    let e = r.div(&r.add(&s, &r.one()), &r.mul(&s, &s))?;
    println!(
        "(s+1)/s^2 = {}; its cube root exists: {}",
        r.format(&e),
        r.pth_root(&e).is_some()
    );
    println!(
        "s^3 has cube root {:?}",
        r.pth_root(&r.pow(&s, 3)).map(|x| r.format(&x))
    );
    Ok(())
}
