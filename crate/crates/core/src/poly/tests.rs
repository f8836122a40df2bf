use proptest::prelude::*;

use super::groebner::{groebner, ideal_contains_one, normal_form};
use super::*;
use crate::parse::{format_poly, parse_field, parse_poly};

fn p(text: &str, vars: &[&str]) -> MultiPoly {
    parse_poly(text, &Field::rationals(), vars).unwrap()
}

const XY: [&str; 2] = ["X", "Y"];
const ZT: [&str; 2] = ["Z", "T"];
const XZT: [&str; 3] = ["X", "Z", "T"];

#[test]
fn ring_operations() {
    assert_eq!(&p("X+Y", &XY) * &p("X-Y", &XY), p("X^2-Y^2", &XY));
    let (q, r) = p("X^3", &XY).divmod_in(0, &p("X^2", &XY)).unwrap();
    assert_eq!((q, r.is_zero()), (p("X", &XY), true));
    assert_eq!(
        p("X^2-1", &XY).exact_divide(&p("X+1", &XY)).unwrap(),
        p("X-1", &XY)
    );
    assert!(matches!(
        p("X^2+1", &XY).exact_divide(&p("X+1", &XY)),
        Err(Error::NotDivisible)
    ));
}

#[test]
fn divmod_leaves_smaller_remainder() {
    let f = p("X^5*Y+3*X^2-Y", &XY);
    let d = p("X^2+Y*X+1", &XY);
    let (q, r) = f.divmod_in(0, &d).unwrap();
    assert!(r.degree_in(0) < 2);
    assert_eq!(&(&q * &d) + &r, f);
}

#[test]
fn substitution() {
    let f = p("X*Z+T", &XZT);
    assert_eq!(
        f.eval_var("X", &Field::rationals().zero()).unwrap(),
        p("T", &XZT)
    );
    let f = p("Z+T^2", &ZT);
    let images = [p("Z", &ZT), p("T+Z^3", &ZT)];
    assert_eq!(f.substitute(&images).unwrap(), p("Z+(T+Z^3)^2", &ZT));
}

#[test]
fn substitution_into_an_extension() {
    let k = Field::rational_functions(2, "s").unwrap();
    let f = parse_poly("Z^2+s*T^2+T+X", &k, &XZT).unwrap();
    let ext = parse_field("F2(s)[b]/(b^2+s)").unwrap();
    let f = f.promote(&ext).unwrap();
    let b = ext.generator().unwrap();
    let g = f.eval_var("X", &b).unwrap().with_vars(&ZT).unwrap();
    assert_eq!(g, parse_poly("Z^2+b^2*T^2+T+b", &ext, &ZT).unwrap());
}

#[test]
fn derivatives() {
    assert_eq!(p("Z^2+T^3+1", &ZT).derivative("Z").unwrap(), p("2*Z", &ZT));
    let f2 = Field::prime(2).unwrap();
    assert!(parse_poly("Z^2", &f2, &ZT)
        .unwrap()
        .partial_derivative(0)
        .is_zero());
    assert_eq!(p("X*Z+T", &XZT).derivative("X").unwrap(), p("Z", &XZT));
    assert!(p("Z", &ZT).derivative("W").is_err());
}

#[test]
fn groebner_examples() {
    let g = groebner(&[p("X^2-1", &XY), p("X-1", &XY)], MonomialOrder::Lex).unwrap();
    assert_eq!(g, vec![p("X-1", &XY)]);
    let g = groebner(&[p("Z", &ZT), p("T", &ZT)], MonomialOrder::GrevLex).unwrap();
    assert_eq!(g.len(), 2);
    assert!(g.contains(&p("Z", &ZT)) && g.contains(&p("T", &ZT)));
    let gens = [p("Z^2+T^3+1", &ZT), p("2*Z", &ZT), p("3*T^2", &ZT)];
    assert_eq!(
        groebner(&gens, MonomialOrder::GrevLex).unwrap(),
        vec![p("1", &ZT)]
    );
}

#[test]
fn unit_ideal() {
    assert!(ideal_contains_one(&[p("Z", &ZT), p("T", &ZT), p("1", &ZT)]).unwrap());
    assert!(!ideal_contains_one(&[p("Z", &ZT)]).unwrap());
    assert!(ideal_contains_one(&[p("Z^2+T^3+1", &ZT), p("2*Z", &ZT), p("3*T^2", &ZT)]).unwrap());
}

#[test]
fn content_split() {
    let (c, prim) = p("X*Z+X*T", &XZT).content_free_part(&[1, 2]).unwrap();
    assert_eq!((c, prim), (p("X", &XZT), p("Z+T", &XZT)));
    let (c, _) = p("Z^2+T", &XZT).content_free_part(&[1, 2]).unwrap();
    assert_eq!(c, p("1", &XZT));
    let (c, prim) = p("X^2*Z+X^3*T", &XZT).content_free_part(&[1, 2]).unwrap();
    assert_eq!((c, prim), (p("X^2", &XZT), p("Z+X*T", &XZT)));
}

#[test]
fn parse_errors_carry_positions() {
    let k = Field::rationals();
    match parse_poly("Z+*T", &k, &ZT) {
        Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_poly("Z+W", &k, &ZT),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_poly("Z/T", &k, &ZT),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_poly("Z/0", &k, &ZT),
        Err(Error::Parse { .. })
    ));
    assert_eq!(parse_poly("Z/2+T/2", &k, &ZT).unwrap(), p("(Z+T)*1/2", &ZT));
    assert!(parse_field("F4").is_err());
    assert!(parse_field("Q[i]/(i^2-1)").is_err());
}

#[test]
fn spec_examples_parse() {
    let a = p("X^2*(X-1)", &["X"]);
    assert_eq!(a, p("X^3-X^2", &["X"]));
    let k = parse_field("F2(s)").unwrap();
    let f = parse_poly("Z^2+s*T^2+T", &k, &ZT).unwrap();
    assert_eq!(f.num_terms(), 3);
    assert_eq!(f.field().characteristic(), 2);
}

fn small_poly(vars: &'static [&'static str]) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((0u32..4, 0u32..4, -3i64..4), 1..6).prop_map(move |terms| {
        let k = Field::rationals();
        let mut f = MultiPoly::zero(&k, vars);
        for (a, b, c) in terms {
            f.add_term(vec![a, b], k.from_i64(c));
        }
        f
    })
}

fn s_poly(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (fe, fc) = f.leading_term(order).unwrap();
    let (ge, gc) = g.leading_term(order).unwrap();
    let l: Vec<u32> = fe.iter().zip(ge).map(|(a, b)| *a.max(b)).collect();
    let k = f.field();
    let mf: Vec<u32> = l.iter().zip(fe).map(|(a, b)| a - b).collect();
    let mg: Vec<u32> = l.iter().zip(ge).map(|(a, b)| a - b).collect();
    &f.mul_monomial(&mf, &k.inv(fc).unwrap()) - &g.mul_monomial(&mg, &k.inv(gc).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_round_trips(f in small_poly(&ZT)) {
        prop_assert_eq!(parse_poly(&format_poly(&f), f.field(), &ZT).unwrap(), f);
    }

    #[test]
    fn groebner_basis_properties(f in small_poly(&ZT), g in small_poly(&ZT), h in small_poly(&ZT)) {
        let gens = vec![f, g, h];
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let basis = groebner(&gens, order).unwrap();
            for q in &gens {
                prop_assert!(normal_form(q, &basis, order).unwrap().is_zero());
            }
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    let s = s_poly(&basis[i], &basis[j], order);
                    prop_assert!(normal_form(&s, &basis, order).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn degrees_add_under_multiplication(f in small_poly(&ZT), g in small_poly(&ZT)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = &f * &g;
        prop_assert_eq!(fg.total_degree(), Some(f.total_degree().unwrap() + g.total_degree().unwrap()));
        prop_assert_eq!(fg.degree_in(0), f.degree_in(0) + g.degree_in(0));
        prop_assert_eq!(fg.exact_divide(&g).unwrap(), f);
    }
}

#[test]
fn negated_extension_coefficients_print_as_subtraction() {
    let k = parse_field("Q[c]/(c^2-2)").unwrap();
    for text in ["Z^2-c", "Z-2*T", "Z-c*T+T^2", "-c*Z+(c+1)*T"] {
        let f = parse_poly(text, &k, &ZT).unwrap();
        let shown = format_poly(&f);
        assert!(!shown.contains("(-"), "{shown}");
        assert_eq!(parse_poly(&shown, &k, &ZT).unwrap(), f);
    }
}
