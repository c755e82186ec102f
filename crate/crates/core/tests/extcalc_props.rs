mod common;

use common::*;
use geolab::extcalc::{nijenhuis, DiffForm, MultiVector, Tensor11};
use proptest::prelude::*;

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_vanishes(s in any_seed(), dim in prop::sample::select(vec![3usize, 5])) {
        let mut rng = seeded(s);
        for k in 0..=dim {
            let f = rand_form(&mut rng, dim, k);
            prop_assert!(f.d().d().is_zero(), "degree {}", k);
        }
    }

    #[test]
    fn interior_is_an_antiderivation(s in any_seed(), ka in 1usize..=2, kb in 1usize..=2) {
        let mut rng = seeded(s);
        let (a, b) = (rand_form(&mut rng, 4, ka), rand_form(&mut rng, 4, kb));
        let x = rand_vector(&mut rng, 4);
        let lhs = a.wedge(&b).unwrap().interior(&x).unwrap();
        let rhs = a
            .interior(&x).unwrap().wedge(&b).unwrap()
            .add(&a.wedge(&b.interior(&x).unwrap()).unwrap().scale(&int(sign(ka))))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schouten_graded_antisymmetry(s in any_seed(), kp in 0usize..=2, kq in 0usize..=2) {
        let mut rng = seeded(s);
        let (p, q) = (rand_multivector(&mut rng, 3, kp), rand_multivector(&mut rng, 3, kq));
        let pq = p.schouten(&q).unwrap();
        let qp = q.schouten(&p).unwrap();
        let e = -sign((kp + 1) * (kq + 1));
        prop_assert_eq!(pq, qp.scale(&int(e)));
    }

    #[test]
    fn schouten_graded_jacobi(s in any_seed(), kp in 1usize..=2, kq in 1usize..=2, kr in 1usize..=2) {
        let mut rng = seeded(s);
        let p = rand_multivector(&mut rng, 3, kp);
        let q = rand_multivector(&mut rng, 3, kq);
        let r = rand_multivector(&mut rng, 3, kr);
        // (-1)^((p-1)(r-1)) [P,[Q,R]] + cyclic = 0
        let term = |a: &MultiVector, b: &MultiVector, c: &MultiVector, ka: usize, kc: usize| {
            a.schouten(&b.schouten(c).unwrap()).unwrap().scale(&int(sign((ka + 1) * (kc + 1))))
        };
        let total = term(&p, &q, &r, kp, kr)
            .add(&term(&q, &r, &p, kq, kp)).unwrap()
            .add(&term(&r, &p, &q, kr, kq)).unwrap();
        prop_assert!(total.is_zero());
    }

    #[test]
    fn vector_bracket_matches_coordinates(s in any_seed()) {
        let mut rng = seeded(s);
        let (a, b) = (rand_vector(&mut rng, 3), rand_vector(&mut rng, 3));
        prop_assert_eq!(a.lie_bracket(&b).unwrap(), lie_oracle(&a, &b));
        prop_assert_eq!(a.schouten(&b).unwrap(), lie_oracle(&a, &b));
    }

    #[test]
    fn nijenhuis_is_tensorial(s in any_seed()) {
        let mut rng = seeded(s);
        let images: Vec<MultiVector> = (0..3).map(|_| rand_vector(&mut rng, 3)).collect();
        let phi = Tensor11::from_images(&images).unwrap();
        let (x, y) = (rand_vector(&mut rng, 3), rand_vector(&mut rng, 3));
        let f = rand_poly(&mut rng, 3, 2);
        let lhs = nijenhuis(&phi, &x.scale(&f), &y).unwrap();
        prop_assert_eq!(lhs, nijenhuis(&phi, &x, &y).unwrap().scale(&f));
        let rhs = nijenhuis(&phi, &x, &y.scale(&f)).unwrap();
        prop_assert_eq!(rhs, nijenhuis(&phi, &x, &y).unwrap().scale(&f));
    }

    #[test]
    fn cartan_formula(s in any_seed(), k in 0usize..=2) {
        let mut rng = seeded(s);
        let a = rand_form(&mut rng, 3, k);
        let x = rand_vector(&mut rng, 3);
        let cartan = if k == 0 {
            a.d().interior(&x).unwrap()
        } else {
            a.d().interior(&x).unwrap().add(&a.interior(&x).unwrap().d()).unwrap()
        };
        prop_assert_eq!(a.lie_derivative(&x).unwrap(), cartan);
    }
}

#[test]
fn wedge_of_repeated_one_form_vanishes() {
    let a = dx(3, 0).scale(&x(1)).add(&dx(3, 2)).unwrap();
    assert!(a.wedge(&a).unwrap().is_zero());
    assert_eq!(DiffForm::zero(3, 2), a.wedge(&a).unwrap());
}
