mod common;

use common::*;
use geolab::symcore::{parse_scalar, Chart, Scalar};
use proptest::prelude::*;
use rand::Rng;

fn rand_scalar(seed: u64, dim: usize) -> Scalar {
    let mut rng = seeded(seed);
    let num = rand_poly(&mut rng, dim, 3);
    if rng.gen_bool(0.5) {
        return num;
    }
    let den = &int(1) + &rand_poly(&mut rng, dim, 2).pow(2);
    num.checked_div(&den).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(s in any_seed(), dim in 1usize..=5) {
        let (a, b, c) = (rand_scalar(s, dim), rand_scalar(s ^ 1, dim), rand_scalar(s ^ 2, dim));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn partials_commute(s in any_seed(), dim in 2usize..=5) {
        let a = rand_scalar(s, dim);
        prop_assert_eq!(a.diff(0).diff(1), a.diff(1).diff(0));
    }

    #[test]
    fn normalize_is_idempotent(s in any_seed()) {
        let a = rand_scalar(s, 3);
        let again = Scalar::normalize(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn eval_is_multiplicative(s in any_seed()) {
        let (a, b) = (rand_scalar(s, 3), rand_scalar(s ^ 7, 3));
        for pt in points(3, 4, s) {
            if let (Ok(va), Ok(vb)) = (a.eval(&pt), b.eval(&pt)) {
                prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &va * &vb);
            }
        }
    }

    #[test]
    fn inverse_round_trips(s in any_seed()) {
        let a = rand_scalar(s, 3);
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn printed_text_parses_back(s in any_seed()) {
        let chart = Chart::new(&["x", "y", "z"]).unwrap();
        let a = rand_scalar(s, 3);
        prop_assert_eq!(parse_scalar(&chart, &a.to_text(chart.coords())).unwrap(), a);
    }
}

#[test]
fn canonical_forms() {
    let chart = Chart::new(&["x", "y"]).unwrap();
    let a = parse_scalar(&chart, "(x^2 - y^2)/(x - y)").unwrap();
    assert_eq!(a, parse_scalar(&chart, "x + y").unwrap());
    let b = parse_scalar(&chart, "1/(2*x + 2)").unwrap();
    assert_eq!(b.to_text(chart.coords()), "(1/2)/(x + 1)");
}
