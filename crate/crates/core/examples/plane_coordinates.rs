use rectify::parse::{parse_field, parse_poly};
use rectify::plane::{
    complement, line_test, linear_fastpath, vartest, ClosureStatus, FastPath, VarTest,
};

fn main() -> rectify::Result<()> {
    let q = parse_field("Q")?;
    let vars = ["Z", "T"];

    // polynomials of degree one in T are decided without reduction
    for text in ["Z^2+2*T", "1+Z*T"] {
        let f = parse_poly(text, &q, &vars)?;
        match linear_fastpath(&f)? {
            FastPath::Accept(c) => println!("{text}: coordinate, complement {}", c.complement),
            FastPath::Reject(why) => println!("{text}: not a coordinate ({why})"),
            FastPath::NotApplicable => println!("{text}: needs the full test"),
        }
    }

    for text in ["Z+(T+Z^2)^3", "Z^2-T^3", "(Z+T)^2+T"] {
        let f = parse_poly(text, &q, &vars)?;
        match vartest(&f)? {
            VarTest::Accept(c) => {
                println!("{text}: coordinate, complement {}", complement(&f, &c)?);
                for step in &c.steps {
                    println!("    {}", step.describe(&f));
                }
                println!("    degrees {:?}", c.degree_trace);
            }
            VarTest::Reject(r) => println!("{text}: rejected, {}", r.reason),
        }
    }

    // a line of F2(s)[Z,T] that only becomes a coordinate after adjoining sqrt(s)
    let k = parse_field("F2(s)")?;
    let f = parse_poly("Z^2+s*T^2+T", &k, &vars)?;
    println!("line status over F2(s): {:?}", line_test(&f)?);
    if let VarTest::Reject(r) = vartest(&f)? {
        if let ClosureStatus::Coordinate(c) = r.closure {
            println!(
                "coordinate over {} with complement {}",
                c.field, c.complement
            );
        }
    }
    Ok(())
}
