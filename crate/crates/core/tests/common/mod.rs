//! Random generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use geolab::dsl::ErrorKind;
use geolab::e1::{E1Section, FormPair};
use geolab::extcalc::{DiffForm, MultiVector};
use geolab::symcore::{GaussRational, Monomial, Poly, Scalar};
use proptest::prelude::*;
use rand::Rng;

pub fn x(i: usize) -> Scalar {
    Scalar::coord(i)
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn dx(dim: usize, i: usize) -> DiffForm {
    DiffForm::dx(dim, i)
}

pub fn p(dim: usize, i: usize) -> MultiVector {
    MultiVector::partial(dim, i)
}

/// `dz - y dx` on (x, y, z).
pub fn eta0() -> DiffForm {
    dx(3, 2).sub(&dx(3, 0).scale(&x(1))).unwrap()
}

/// `dz - y1 dx1 - y2 dx2` on (x1, y1, x2, y2, z).
pub fn eta5() -> DiffForm {
    dx(5, 4)
        .sub(&dx(5, 0).scale(&x(1)))
        .unwrap()
        .sub(&dx(5, 2).scale(&x(3)))
        .unwrap()
}

pub fn subsets(dim: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for last in (k - 1)..dim {
        for mut s in subsets(last, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out
}

/// Small integer polynomial: up to `terms` terms of total degree at most 2.
pub fn rand_poly<R: Rng>(rng: &mut R, dim: usize, terms: usize) -> Scalar {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(0..=terms) {
        let mut pairs = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            pairs.push((rng.gen_range(0..dim as u32), 1));
        }
        let c = GaussRational::from_int(rng.gen_range(-3..=3));
        p = p.add(&Poly::term(Monomial::from_pairs(pairs), c));
    }
    Scalar::from_poly(p)
}

pub fn rand_form<R: Rng>(rng: &mut R, dim: usize, k: usize) -> DiffForm {
    let mut f = DiffForm::zero(dim, k);
    for idx in subsets(dim, k) {
        if rng.gen_bool(0.5) {
            f = f.add(&DiffForm::monomial(dim, &idx, rand_poly(rng, dim, 2))).unwrap();
        }
    }
    f
}

pub fn rand_vector<R: Rng>(rng: &mut R, dim: usize) -> MultiVector {
    let mut v = MultiVector::zero(dim, 1);
    for i in 0..dim {
        v = v.add(&p(dim, i).scale(&rand_poly(rng, dim, 2))).unwrap();
    }
    v
}

pub fn rand_section<R: Rng>(rng: &mut R, dim: usize) -> E1Section {
    E1Section::new(rand_vector(rng, dim), rand_poly(rng, dim, 2), rand_form(rng, dim, 1), rand_poly(rng, dim, 2))
        .unwrap()
}

pub fn rand_form_pair<R: Rng>(rng: &mut R, dim: usize, k: usize) -> FormPair {
    if k == 0 {
        return FormPair::function(dim, rand_poly(rng, dim, 3));
    }
    FormPair::new(rand_form(rng, dim, k), Some(rand_form(rng, dim, k - 1))).unwrap()
}

/// A degree-1 pair read back as the form part of a section.
pub fn pair_to_section(p: &FormPair) -> E1Section {
    let dim = p.dim();
    let g = p.beta().and_then(|b| b.as_function()).unwrap_or_else(Scalar::zero);
    E1Section::new(MultiVector::zero(dim, 1), Scalar::zero(), p.alpha().clone(), g).unwrap()
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Proptest strategy over seeds; values are built from a seeded generator so
/// shrinking acts on the seed.
pub fn any_seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

/// `(a, b, c)` components of a 1-form on R^3.
pub fn comps3(eta: &DiffForm) -> [Scalar; 3] {
    [eta.coeff(&[0]), eta.coeff(&[1]), eta.coeff(&[2])]
}

/// `curl(a, b, c)`, computed directly from partial derivatives.
pub fn curl3(c: &[Scalar; 3]) -> [Scalar; 3] {
    [
        &c[2].diff(1) - &c[1].diff(2),
        &c[0].diff(2) - &c[2].diff(0),
        &c[1].diff(0) - &c[0].diff(1),
    ]
}

pub fn dot3(a: &[Scalar; 3], b: &[Scalar; 3]) -> Scalar {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

/// On R^3, `eta ^ d eta = (eta . curl eta) dx^dy^dz`.
pub fn contact_density3(eta: &DiffForm) -> Scalar {
    let c = comps3(eta);
    dot3(&c, &curl3(&c))
}

/// On R^3 the Reeb field of a contact form is `curl eta / (eta . curl eta)`.
pub fn reeb3(eta: &DiffForm) -> MultiVector {
    let c = comps3(eta);
    let k = curl3(&c);
    let s = dot3(&c, &k).inv().unwrap();
    (0..3).fold(MultiVector::zero(3, 1), |acc, i| acc.add(&p(3, i).scale(&(&k[i] * &s))).unwrap())
}

/// Bracket of vector fields from the coordinate formula
/// `[X, Y]^i = X^j d_j Y^i - Y^j d_j X^i`.
pub fn lie_oracle(a: &MultiVector, b: &MultiVector) -> MultiVector {
    let dim = a.dim();
    let mut out = MultiVector::zero(dim, 1);
    for i in 0..dim {
        let mut c = Scalar::zero();
        for j in 0..dim {
            c = &c + &(&a.coeff(&[j]) * &b.coeff(&[i]).diff(j));
            c = &c - &(&b.coeff(&[j]) * &a.coeff(&[i]).diff(j));
        }
        out = out.add(&p(dim, i).scale(&c)).unwrap();
    }
    out
}

/// Exact rational points with small entries.
pub fn points(dim: usize, n: usize, seed: u64) -> Vec<Vec<GaussRational>> {
    let mut rng = seeded(seed);
    (0..n)
        .map(|_| (0..dim).map(|_| GaussRational::from_frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect())
        .collect()
}

pub fn rand_multivector<R: Rng>(rng: &mut R, dim: usize, k: usize) -> MultiVector {
    let mut v = MultiVector::zero(dim, k);
    for idx in subsets(dim, k) {
        if rng.gen_bool(0.5) {
            v = v.add(&MultiVector::monomial(dim, &idx, rand_poly(rng, dim, 2))).unwrap();
        }
    }
    v
}

/// `(L_X alpha)_i = X^j d_j alpha_i + alpha_j d_i X^j` for a 1-form.
pub fn lie_one_form_oracle(x: &MultiVector, alpha: &DiffForm) -> DiffForm {
    let dim = x.dim();
    let mut out = DiffForm::zero(dim, 1);
    for i in 0..dim {
        let mut c = Scalar::zero();
        for j in 0..dim {
            c = &c + &(&x.coeff(&[j]) * &alpha.coeff(&[i]).diff(j));
            c = &c + &(&alpha.coeff(&[j]) * &x.coeff(&[j]).diff(i));
        }
        out = out.add(&dx(dim, i).scale(&c)).unwrap();
    }
    out
}

/// Unipotent upper-triangular frame change with polynomial entries.
pub fn rand_unipotent<R: Rng>(rng: &mut R, dim: usize) -> Vec<Vec<Scalar>> {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => Scalar::one(),
                    std::cmp::Ordering::Less => rand_poly(rng, dim, 1),
                    std::cmp::Ordering::Greater => Scalar::zero(),
                })
                .collect()
        })
        .collect()
}

/// The flat almost contact structure on R^3 transported by a random frame
/// change `A`: `phi = A phi0 A^-1`, `xi = A xi0`, `eta = eta0 A^-1`.
pub fn rand_almost_contact<R: Rng>(rng: &mut R) -> geolab::structures::AlmostContact {
    use geolab::linalg;
    let a = rand_unipotent(rng, 3);
    let ainv = linalg::inverse(&a).unwrap();
    let z = Scalar::zero;
    let phi0 = vec![vec![z(), -int(1), z()], vec![int(1), z(), z()], vec![z(), z(), z()]];
    let phi = linalg::mat_mul(&linalg::mat_mul(&a, &phi0), &ainv);
    let xi: Vec<Scalar> = (0..3).map(|i| a[i][2].clone()).collect();
    let eta: Vec<Scalar> = (0..3).map(|j| ainv[2][j].clone()).collect();
    geolab::structures::AlmostContact::new(
        geolab::extcalc::Tensor11::from_matrix(phi).unwrap(),
        MultiVector::from_components(&xi),
        DiffForm::from_components(&eta),
    )
    .unwrap()
}

pub mod corpus;

/// Malformed scenes with the expected error kind, line and column.
pub const MALFORMED: &[(&str, ErrorKind, usize, usize)] = &[
    ("chart M(x,y,z)\nform eta = d(z) - y*d(x\ncheck contact(eta)", ErrorKind::Syntax, 3, 1),
    ("chart M(x,y,z)\ncheck contact(zeta)", ErrorKind::UnboundName, 2, 15),
    ("chart M(x,y,z)\nvector v = @x\ncheck contact(v)", ErrorKind::TypeMismatch, 3, 15),
    ("chart M(x,y,z)\nform e = d(z)\ncheck contact(e, e)", ErrorKind::Arity, 3, 14),
    ("chart M(x,y,z)\ncheck frobnicate(a)", ErrorKind::Syntax, 2, 7),
    ("chart M(x,y,z)\nform a = d(x) $ d(y)", ErrorKind::Syntax, 2, 15),
];

