use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use symfunc::qt::{QTPoly, QTRational};

const CASES: u32 = 256;

fn small_poly() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec(((0u32..=2, 0u32..=2), -3i64..=3), 1..=4)
        .prop_map(|ts| QTPoly::from_terms(ts.into_iter().map(|((i, j), c)| ((i, j), BigRational::from_integer(BigInt::from(c))))))
}

fn qt_value() -> impl Strategy<Value = QTRational> {
    (small_poly(), small_poly().prop_filter("nonzero denominator", |d| !d.is_zero()))
        .prop_map(|(n, d)| QTRational::new(&n, &d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn qt_field_axioms(a in qt_value(), b in qt_value(), c in qt_value()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<QTRational>().unwrap(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in qt_value(), b in qt_value(), q0 in -9i64..=9, t0 in 1i64..=9) {
        let (q0, t0) = (BigRational::from_integer(q0.into()), BigRational::new(BigInt::from(1), BigInt::from(t0)));
        if let (Ok(x), Ok(y)) = (a.eval(&q0, &t0), b.eval(&q0, &t0)) {
            prop_assert_eq!((&a * &b).eval(&q0, &t0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval(&q0, &t0).unwrap(), x + y);
        }
    }
}
