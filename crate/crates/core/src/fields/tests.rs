use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn q(n: i64, d: i64) -> Elem {
    Elem::Rational(BigRational::new(n.into(), d.into()))
}

fn fields() -> Vec<Field> {
    let q_ = Field::rationals();
    let f5 = Field::prime(5).unwrap();
    let f2 = Field::prime(2).unwrap();
    let f2s = Field::rational_functions(2, "s").unwrap();
    let f3s = Field::rational_functions(3, "s").unwrap();
    vec![
        q_.clone(),
        q_.extend(&[q(1, 1), q(0, 1), q(1, 1)], "i").unwrap(),
        q_.extend(&[q(-2, 1), q(0, 1), q(0, 1), q(1, 1)], "c")
            .unwrap(),
        f5.clone(),
        f2.extend(&[f2.one(), f2.one(), f2.one()], "mu").unwrap(),
        f2s.clone(),
        f3s.extend(
            &[
                f3s.neg(&f3s.generator().unwrap()),
                f3s.zero(),
                f3s.zero(),
                f3s.one(),
            ],
            "b",
        )
        .unwrap(),
    ]
}

/// A field element determined by a few small integers.
fn sample(k: &Field, seed: &[i64]) -> Elem {
    match k.kind() {
        FieldKind::Rationals => q(seed[0], seed[1].unsigned_abs() as i64 + 1),
        FieldKind::Prime(_) => k.from_i64(seed[0]),
        FieldKind::RationalFunctions { p, .. } => {
            let num: Vec<u64> = seed[..3]
                .iter()
                .map(|c| c.rem_euclid(*p as i64) as u64)
                .collect();
            let mut den: Vec<u64> = seed[3..5]
                .iter()
                .map(|c| c.rem_euclid(*p as i64) as u64)
                .collect();
            den.push(1);
            k.ratfun(&num, &den).unwrap()
        }
        FieldKind::Extension { base, .. } => {
            let coords = (0..k.degree())
                .map(|j| {
                    let rotated: Vec<i64> = (0..seed.len())
                        .map(|t| seed[(j * 2 + t) % seed.len()])
                        .collect();
                    sample(base, &rotated)
                })
                .collect();
            k.from_coords(coords)
        }
    }
}

#[test]
fn rational_addition() {
    let k = Field::rationals();
    assert_eq!(k.add(&q(2, 3), &q(1, 6)), q(5, 6));
}

#[test]
fn gaussian_generator_squares_to_minus_one() {
    let k = &fields()[1];
    let i = k.generator().unwrap();
    assert_eq!(k.mul(&i, &i), k.from_i64(-1));
}

#[test]
fn rational_function_inverse() {
    let k = Field::rational_functions(2, "s").unwrap();
    let s1 = k.ratfun(&[1, 1], &[1]).unwrap();
    assert!(k.is_one(&k.mul(&k.inv(&s1).unwrap(), &s1)));
}

#[test]
fn characteristics() {
    assert_eq!(Field::rationals().characteristic(), 0);
    assert_eq!(
        Field::rational_functions(2, "s").unwrap().characteristic(),
        2
    );
    let r2 = Field::rationals()
        .extend(&[q(-2, 1), q(0, 1), q(1, 1)], "r")
        .unwrap();
    assert_eq!(r2.characteristic(), 0);
}

#[test]
fn field_with_four_elements() {
    let f4 = &fields()[4];
    assert_eq!(f4.size(), Some(4u32.into()));
    let mu = f4.generator().unwrap();
    // mu^3 = 1 and mu != 1
    assert!(f4.is_one(&f4.pow(&mu, 3)));
    assert!(!f4.is_one(&mu));
}

#[test]
fn reducible_minimal_polynomial_is_rejected() {
    let err = Field::rationals()
        .extend(&[q(-1, 1), q(0, 1), q(1, 1)], "g")
        .unwrap_err();
    match err {
        Error::Reducible(factor) => {
            assert!(factor.contains("X-1") || factor.contains("X+1"), "{factor}")
        }
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn extensions_do_not_nest() {
    let k = &fields()[1];
    assert!(k.extend(&[k.one(), k.zero(), k.one()], "j").is_err());
}

#[test]
fn division_by_zero_is_an_error() {
    for k in fields() {
        assert!(matches!(k.inv(&k.zero()), Err(Error::DivisionByZero)));
    }
}

#[test]
fn minimal_polynomial_vanishes_at_generator() {
    for k in fields().iter().filter(|k| k.is_extension()) {
        let m: Vec<Elem> = k
            .minpoly()
            .unwrap()
            .iter()
            .map(|c| k.lift(c.clone()))
            .collect();
        assert!(
            k.is_zero(&dense::eval(k, &m, &k.generator().unwrap())),
            "{k}"
        );
    }
}

#[test]
fn rational_function_canonical_form() {
    let k = Field::rational_functions(3, "s").unwrap();
    // (2s + 2) / (2s^2 + 2s) = 1/s
    let e = k.ratfun(&[2, 2], &[0, 2, 2]).unwrap();
    assert_eq!(
        e,
        Elem::RatFun {
            num: vec![1],
            den: vec![0, 1]
        }
    );
}

#[test]
fn pth_roots() {
    let k = Field::rational_functions(2, "s").unwrap();
    let s = k.generator().unwrap();
    assert!(k.pth_root(&s).is_none());
    let s2 = k.mul(&s, &s);
    assert_eq!(k.pth_root(&s2), Some(s.clone()));
    let f5 = Field::prime(5).unwrap();
    assert_eq!(f5.pth_root(&f5.from_i64(3)), Some(f5.from_i64(3)));
}

#[test]
fn big_integers_do_not_overflow() {
    let k = Field::rationals();
    let big = k.from_bigint(&BigInt::from(u64::MAX));
    let sq = k.mul(&big, &big);
    assert_eq!(
        k.as_rational(&sq).unwrap().numer(),
        &(BigInt::from(u64::MAX) * BigInt::from(u64::MAX))
    );
}

#[test]
fn format_is_parseable() {
    for k in fields() {
        for seed in [[3, -2, 1, 4, 0, 2], [0, 0, 0, 0, 0, 0], [-7, 5, 2, 1, 1, 3]] {
            let e = sample(&k, &seed);
            let back = crate::parse::parse_poly(&k.format(&e), &k, &[]).unwrap();
            assert_eq!(
                back.constant_value().unwrap_or_else(|| k.zero()),
                e,
                "{k}: {}",
                k.format(&e)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(which in 0usize..7, seed in proptest::collection::vec(-9i64..10, 18)) {
        let k = &fields()[which];
        let x = sample(k, &seed[0..6]);
        let y = sample(k, &seed[6..12]);
        let z = sample(k, &seed[12..18]);
        prop_assert_eq!(k.add(&k.add(&x, &y), &z), k.add(&x, &k.add(&y, &z)));
        prop_assert_eq!(k.mul(&x, &k.add(&y, &z)), k.add(&k.mul(&x, &y), &k.mul(&x, &z)));
        prop_assert_eq!(k.mul(&k.mul(&x, &y), &z), k.mul(&x, &k.mul(&y, &z)));
        prop_assert_eq!(k.add(&x, &k.neg(&x)), k.zero());
        if !k.is_zero(&x) {
            prop_assert!(k.is_one(&k.mul(&x, &k.inv(&x).unwrap())));
        }
        // canonical forms are fixed points
        prop_assert!(k.check(&x).is_ok());
        prop_assert_eq!(k.sub(&k.add(&x, &y), &y), x);
    }
}
