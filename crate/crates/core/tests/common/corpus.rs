//! Named examples shared by the theorem and acceptance suites.

use super::*;
use geolab::extcalc::Tensor11;
use geolab::structures::{AlmostContact, CosymplecticPair, JacobiPair};

/// Contact forms with the expected contact density `eta ^ (d eta)^n / vol`.
pub fn contact_forms() -> Vec<(&'static str, DiffForm, Scalar)> {
    let generic = dx(3, 2).scale(&(&int(1) + &x(0).pow(2))).sub(&dx(3, 0).scale(&x(1))).unwrap();
    let twisted = dx(3, 2).add(&dx(3, 1).scale(&x(0))).unwrap();
    vec![
        ("dz - y dx", eta0(), int(1)),
        ("dz - y1 dx1 - y2 dx2", eta5(), int(2)),
        ("dz + x dy", twisted, int(1)),
        ("(1 + x^2) dz - y dx", generic, &int(1) + &x(0).pow(2)),
    ]
}

/// `(omega, eta)` pairs for the graph `L_(omega, eta)`.
pub fn omega_eta_pairs() -> Vec<(&'static str, DiffForm, DiffForm)> {
    let dxdy = DiffForm::monomial(3, &[0, 1], int(1));
    vec![
        ("(d eta0, eta0)", eta0().d(), eta0()),
        ("(dx^dy, dz)", dxdy.clone(), dx(3, 2)),
        ("(d eta5, eta5)", eta5().d(), eta5()),
        ("(2 d eta0, eta0)", eta0().d().scale(&int(2)), eta0()),
        ("(-dx^dy, dz - y dx)", dxdy.neg(), eta0()),
    ]
}

pub fn jacobi_pairs() -> Vec<(&'static str, JacobiPair)> {
    let pi = p(3, 0).add(&p(3, 2).scale(&x(1))).unwrap().wedge(&p(3, 1)).unwrap();
    let ez = p(3, 2);
    let z1 = MultiVector::zero(3, 1);
    let xy = p(3, 0).wedge(&p(3, 1)).unwrap();
    vec![
        ("((@x + y@z)^@y, @z)", JacobiPair::new(pi.clone(), ez.clone()).unwrap()),
        ("((@x + y@z)^@y, 0)", JacobiPair::new(pi, z1.clone()).unwrap()),
        ("(x @x^@y, 0)", JacobiPair::new(xy.scale(&x(0)), z1).unwrap()),
        ("(@x^@y, @z)", JacobiPair::new(xy, ez).unwrap()),
    ]
}

pub fn flat_phi() -> Tensor11 {
    Tensor11::from_images(&[p(3, 1), p(3, 0).neg(), MultiVector::zero(3, 1)]).unwrap()
}

/// Almost contact structures with whether each is normal.
pub fn almost_contact_corpus() -> Vec<(&'static str, AlmostContact, bool)> {
    let twisted = Tensor11::from_images(&[
        p(3, 1),
        p(3, 0).neg().sub(&p(3, 2).scale(&x(1))).unwrap(),
        MultiVector::zero(3, 1),
    ])
    .unwrap();
    let u = &int(1) + &x(2);
    let skewed = Tensor11::from_images(&[
        p(3, 1).scale(&u),
        p(3, 0).scale(&-&u.inv().unwrap()),
        MultiVector::zero(3, 1),
    ])
    .unwrap();
    vec![
        ("flat, eta = dz", AlmostContact::new(flat_phi(), p(3, 2), dx(3, 2)).unwrap(), true),
        ("twisted, eta = eta0", AlmostContact::new(twisted, p(3, 2), eta0()).unwrap(), true),
        ("skewed by 1 + z", AlmostContact::new(skewed, p(3, 2), dx(3, 2)).unwrap(), false),
    ]
}

pub fn cosymplectic_corpus() -> Vec<(&'static str, CosymplecticPair)> {
    vec![
        ("(dx^dy, dz)", CosymplecticPair::new(DiffForm::monomial(3, &[0, 1], int(1)), dx(3, 2)).unwrap()),
        ("(d eta0, eta0)", CosymplecticPair::new(eta0().d(), eta0()).unwrap()),
        ("(d eta5, eta5)", CosymplecticPair::new(eta5().d(), eta5()).unwrap()),
        ("(dx^dy + dy^dz, dz)", {
            let w = DiffForm::monomial(3, &[0, 1], int(1)).add(&DiffForm::monomial(3, &[1, 2], int(1))).unwrap();
            CosymplecticPair::new(w, dx(3, 2)).unwrap()
        }),
    ]
}
