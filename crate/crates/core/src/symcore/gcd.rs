//! Multivariate gcd over Q(i) by recursive primitive pseudo-remainder
//! sequences. Coefficient rings are handled by recursion on the remaining
//! variables, which terminates because the chosen main variable is always
//! the smallest index present.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::gauss::GaussRational;

use super::poly::{Monomial, Poly};

/// Monic gcd (grlex-leading coefficient 1). `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    if coprime_by_images(a, b) {
        return Poly::one();
    }
    let v = match (a.min_var(), b.min_var()) {
        (Some(x), Some(y)) => x.min(y),
        _ => unreachable!("non-constant polynomials have variables"),
    };
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    if da == 0 {
        return gcd(a, &content(b, v));
    }
    if db == 0 {
        return gcd(&content(a, v), b);
    }
    // cheap exit: one divides the other
    if let Some(_) = a.div_exact(b) {
        return b.monic();
    }
    if let Some(_) = b.div_exact(a) {
        return a.monic();
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, v);
    c.mul(&g).monic()
}

fn vars(p: &Poly) -> BTreeSet<u32> {
    p.terms().flat_map(|(m, _)| m.pairs().iter().map(|&(v, _)| v)).collect()
}

/// Image of `p` as a univariate polynomial in `v`, other variables set by `val`.
fn image(p: &Poly, v: u32, val: impl Fn(u32) -> GaussRational) -> Vec<GaussRational> {
    let mut out = vec![GaussRational::zero(); p.degree_in(v) as usize + 1];
    for (m, c) in p.terms() {
        let mut t = c.clone();
        let mut k = 0;
        for &(w, e) in m.pairs() {
            if w == v {
                k = e as usize;
            } else {
                t = &t * &val(w).pow(e);
            }
        }
        out[k] += &t;
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn univariate_gcd_degree(mut a: Vec<GaussRational>, mut b: Vec<GaussRational>) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !(b.len() == 1 && b[0].is_zero()) {
        let lb = b.last().expect("nonempty").inv().expect("trimmed leading coefficient");
        while a.len() >= b.len() && !(a.len() == 1 && a[0].is_zero()) {
            let q = a.last().expect("nonempty") * &lb;
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                let t = &q * c;
                a[i + shift] -= &t;
            }
            a.pop();
            while a.len() > 1 && a.last().is_some_and(Zero::is_zero) {
                a.pop();
            }
            if a.is_empty() {
                a.push(GaussRational::zero());
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// Exact coprimality certificate from integer specializations: if the images
/// in `v` keep their degrees and have constant gcd, the true gcd has degree 0
/// in `v`. `false` means "not proven", not "not coprime".
fn coprime_by_images(a: &Poly, b: &Poly) -> bool {
    let common: Vec<u32> = vars(a).intersection(&vars(b)).copied().collect();
    common.iter().all(|&v| {
        (0..3).any(|attempt| {
            let val = |w: u32| GaussRational::from_int(((w as i64) * 5 + attempt * 7) % 13 + 2);
            let (ia, ib) = (image(a, v, val), image(b, v, val));
            ia.len() == a.degree_in(v) as usize + 1
                && ib.len() == b.degree_in(v) as usize + 1
                && univariate_gcd_degree(ia, ib) == 0
        })
    })
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content(p: &Poly, v: u32) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v).into_values() {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(p: &Poly, v: u32) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let c = content(p, v);
    p.div_exact(&c).expect("content divides").monic()
}

fn leading_in(p: &Poly, v: u32) -> (u32, Poly) {
    let coeffs: BTreeMap<u32, Poly> = p.coeffs_in(v);
    coeffs
        .into_iter()
        .next_back()
        .unwrap_or((0, Poly::zero()))
}

/// Pseudo-remainder of `a` by `b` in variable `v`.
fn prem(a: &Poly, b: &Poly, v: u32) -> Poly {
    let (db, lb) = leading_in(b, v);
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let (dr, lr) = leading_in(&r, v);
        if dr < db {
            return r;
        }
        let shift = Monomial::from_pairs(vec![(v, dr - db)]);
        let t = b.mul(&lr).mul(&Poly::term(shift, num_traits::One::one()));
        r = r.mul(&lb).sub(&t);
    }
}

fn primitive_prs(mut a: Poly, mut b: Poly, v: u32) -> Poly {
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            return primitive_part(&b, v);
        }
        if r.degree_in(v) == 0 {
            // the remaining gcd has no v-part; contents were removed already
            return Poly::one();
        }
        a = b;
        b = primitive_part(&r, v);
    }
}
