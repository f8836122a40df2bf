use proptest::prelude::*;

use super::*;
use crate::parse::{parse_field, parse_poly};

const ZT: [&str; 2] = ["Z", "T"];

fn poly(text: &str, field: &str) -> MultiPoly {
    parse_poly(text, &parse_field(field).unwrap(), &ZT).unwrap()
}

fn q(text: &str) -> MultiPoly {
    poly(text, "Q")
}

fn accepted(f: &MultiPoly) -> CoordinateCertificate {
    match vartest(f).unwrap() {
        VarTest::Accept(c) => c,
        VarTest::Reject(r) => panic!("{f} rejected: {}", r.reason),
    }
}

fn assert_certificate(f: &MultiPoly, c: &CoordinateCertificate) {
    assert_eq!(c.coordinate().unwrap(), f.promote(&c.field).unwrap());
    assert!(verify_plane_pair(&f.promote(&c.field).unwrap(), &c.complement).unwrap());
    assert!(
        c.degree_trace.windows(2).all(|w| w[0] > w[1]),
        "{:?}",
        c.degree_trace
    );
}

#[test]
fn fastpath_examples() {
    match linear_fastpath(&q("3*Z+5")).unwrap() {
        FastPath::Accept(c) => assert_certificate(&q("3*Z+5"), &c),
        other => panic!("{other:?}"),
    }
    match linear_fastpath(&q("Z^2+2*T")).unwrap() {
        FastPath::Accept(c) => {
            assert_eq!(c.complement, q("Z"));
            assert_certificate(&q("Z^2+2*T"), &c);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        linear_fastpath(&q("1+Z*T")).unwrap(),
        FastPath::Reject(_)
    ));
    assert!(matches!(
        linear_fastpath(&q("Z^2+T^2")).unwrap(),
        FastPath::NotApplicable
    ));
}

#[test]
fn nested_coordinate_is_accepted() {
    let f = q("Z+(T+Z^2)^3");
    let c = accepted(&f);
    assert_eq!(c.complement, q("T+Z^2"));
    assert_certificate(&f, &c);
}

#[test]
fn curves_with_singularities_are_rejected() {
    for text in ["Z^2-T^3", "Z^2+T^3+1", "Z*T", "Z^2+T^2"] {
        match vartest(&q(text)).unwrap() {
            VarTest::Reject(r) => assert_eq!(r.closure, ClosureStatus::NotCoordinate, "{text}"),
            VarTest::Accept(_) => panic!("{text} accepted"),
        }
    }
}

#[test]
fn constants_are_not_coordinates() {
    assert!(!vartest(&q("7")).unwrap().is_accept());
    assert!(vartest(&q("0")).is_err());
}

#[test]
fn line_status() {
    assert_eq!(line_test(&q("Z+T^2")).unwrap(), LineStatus::Line);
    assert_eq!(line_test(&q("Z^2+T^3+1")).unwrap(), LineStatus::NotLine);
    assert_eq!(
        line_test(&poly("Z^2+s*T^2+T", "F2(s)")).unwrap(),
        LineStatus::Unknown
    );
}

#[test]
fn complements_of_simple_coordinates() {
    let t = q("T");
    assert_eq!(complement(&t, &accepted(&t)).unwrap(), q("Z"));
    let f = q("Z+T^2");
    assert_eq!(complement(&f, &accepted(&f)).unwrap(), q("T"));
}

#[test]
fn complement_rejects_a_foreign_certificate() {
    let c = accepted(&q("Z+T^2"));
    assert!(complement(&q("Z+T^3"), &c).is_err());
}

#[test]
fn coordinate_after_an_inseparable_extension() {
    let f = poly("Z^2+s*T^2+T", "F2(s)");
    match vartest(&f).unwrap() {
        VarTest::Reject(r) => match r.closure {
            ClosureStatus::Coordinate(c) => {
                assert!(c.extension_used().is_some());
                assert_certificate(&f, &c);
            }
            other => panic!("{other:?}"),
        },
        VarTest::Accept(_) => panic!("accepted over F2(s)"),
    }
}

#[test]
fn coordinates_over_extensions_and_prime_fields() {
    let f = poly("Z+i*T^2+(T+Z)^3", "Q[i]/(i^2+1)");
    assert!(!vartest(&f).unwrap().is_accept());
    for (text, field) in [
        ("i*Z+(T+i*Z^2)^2", "Q[i]/(i^2+1)"),
        ("Z+T^5+T", "F5"),
        ("T+(Z+T^2)^2", "F2"),
    ] {
        let f = poly(text, field);
        assert_certificate(&f, &accepted(&f));
    }
}

#[test]
fn tame_step_inverse() {
    let k = Field::rationals();
    let like = q("0");
    let steps = [
        TameStep::Linear {
            m: [
                [k.from_i64(1), k.from_i64(2)],
                [k.from_i64(1), k.from_i64(3)],
            ],
            shift: [k.from_i64(-1), k.from_i64(4)],
        },
        TameStep::Elementary {
            target: PlaneVar::T,
            shift: vec![k.zero(), k.from_i64(3), k.from_i64(-2)],
        },
    ];
    let f = q("Z^3+Z*T-T^2+5");
    for s in steps {
        let g = s.inverse(&k).unwrap().apply(&s.apply(&f).unwrap()).unwrap();
        assert_eq!(g, f, "{}", s.describe(&like));
    }
}

/// `Z -> Z + c T^j`, `T -> T + d Z^e`, followed by a linear swap-and-shift,
/// applied once per entry of `ops`.
fn scrambled(start: &MultiPoly, ops: &[(i64, u32, i64, u32)]) -> MultiPoly {
    let k = start.field().clone();
    let (z, t) = (start.var_at(0), start.var_at(1));
    let mut f = start.clone();
    for &(c, j, d, e) in ops {
        let zj = &z + &t.pow(j).scale(&k.from_i64(c));
        f = f.substitute(&[zj, t.clone()]).unwrap();
        let te = &t + &z.pow(e).scale(&k.from_i64(d));
        f = f.substitute(&[z.clone(), te]).unwrap();
        let one = z.constant_like(k.one());
        f = f.substitute(&[&t + &one, &z - &t]).unwrap();
    }
    f
}

fn ops() -> impl Strategy<Value = Vec<(i64, u32, i64, u32)>> {
    proptest::collection::vec((-2i64..3, 0u32..3, -2i64..3, 0u32..3), 1..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coordinates_stay_coordinates(ops in ops()) {
        let f = scrambled(&q("Z"), &ops);
        prop_assume!(!f.is_constant());
        let c = accepted(&f);
        assert_certificate(&f, &c);
    }

    #[test]
    fn non_coordinates_stay_rejected(ops in ops()) {
        for text in ["Z^2-T^3", "Z^2+T^3+1"] {
            let f = scrambled(&q(text), &ops);
            prop_assert!(!vartest(&f).unwrap().is_accept());
        }
    }

    #[test]
    fn coordinates_over_f5_stay_coordinates(ops in ops()) {
        let f = scrambled(&poly("T+Z^2", "F5"), &ops);
        prop_assume!(!f.is_constant());
        assert_certificate(&f, &accepted(&f));
    }
}
