//! The pairing and the tilde calculus on E^1(M): `d~`, `i~` and `L~`.

use super::section::E1Section;
use crate::error::{same_dim, GeoError, Result};
use crate::extcalc::{DiffForm, MultiVector};
use crate::symcore::Scalar;

/// An element of `Omega^k x Omega^(k-1)`; for `k = 0` the second slot is
/// absent (`Omega^-1 = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormPair {
    alpha: DiffForm,
    beta: Option<DiffForm>,
}

impl FormPair {
    pub fn new(alpha: DiffForm, beta: Option<DiffForm>) -> Result<Self> {
        match &beta {
            None if alpha.degree() != 0 => Err(GeoError::DegreeError(format!(
                "a degree-{} pair needs a second component",
                alpha.degree()
            ))),
            Some(b) if b.degree() + 1 != alpha.degree() => Err(GeoError::DegreeError(format!(
                "pair degrees ({}, {}) do not differ by one",
                alpha.degree(),
                b.degree()
            ))),
            Some(b) => {
                same_dim(alpha.dim(), b.dim())?;
                Ok(FormPair { alpha, beta })
            }
            None => Ok(FormPair { alpha, beta }),
        }
    }

    /// The degree-0 pair `(h, -)`.
    pub fn function(dim: usize, h: Scalar) -> Self {
        FormPair { alpha: DiffForm::function(dim, h), beta: None }
    }

    /// The degree-1 pair `(alpha, g)` carried by a section.
    pub fn of_section(e: &E1Section) -> Self {
        FormPair { alpha: e.alpha.clone(), beta: Some(DiffForm::function(e.dim(), e.g.clone())) }
    }

    pub fn zero(dim: usize, k: usize) -> Self {
        FormPair {
            alpha: DiffForm::zero(dim, k),
            beta: (k > 0).then(|| DiffForm::zero(dim, k - 1)),
        }
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }

    pub fn alpha(&self) -> &DiffForm {
        &self.alpha
    }

    pub fn beta(&self) -> Option<&DiffForm> {
        self.beta.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.as_ref().map_or(true, DiffForm::is_zero)
    }

    pub fn add(&self, o: &FormPair) -> Result<FormPair> {
        let beta = match (&self.beta, &o.beta) {
            (Some(a), Some(b)) => Some(a.add(b)?),
            (None, None) => None,
            _ => return Err(GeoError::DegreeError("adding pairs of different degree".into())),
        };
        Ok(FormPair { alpha: self.alpha.add(&o.alpha)?, beta })
    }

    pub fn sub(&self, o: &FormPair) -> Result<FormPair> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FormPair {
        FormPair { alpha: self.alpha.neg(), beta: self.beta.as_ref().map(DiffForm::neg) }
    }

    pub fn to_text(&self, names: &[String]) -> String {
        match &self.beta {
            None => format!("({}, -)", self.alpha.to_text(names)),
            Some(b) => format!("({}, {})", self.alpha.to_text(names), b.to_text(names)),
        }
    }
}

/// `<e1, e2> = 1/2 (i_X2 alpha1 + i_X1 alpha2 + f1 g2 + f2 g1)`.
pub fn pairing(e1: &E1Section, e2: &E1Section) -> Result<Scalar> {
    same_dim(e1.dim(), e2.dim())?;
    let a = e1.alpha.eval(&[&e2.x])?;
    let b = e2.alpha.eval(&[&e1.x])?;
    let sum = &(&a + &b) + &(&(&e1.f * &e2.g) + &(&e2.f * &e1.g));
    Ok(&sum * &Scalar::from_frac(1, 2))
}

/// `d~(alpha, beta) = (d alpha, (-1)^k alpha + d beta)`, and `d~ h = (dh, h)`.
pub fn tilde_d(p: &FormPair) -> FormPair {
    let k = p.degree();
    let sign_alpha = if k % 2 == 0 { p.alpha.clone() } else { p.alpha.neg() };
    let second = match &p.beta {
        Some(b) => sign_alpha.add(&b.d()).expect("matching degrees"),
        None => sign_alpha,
    };
    FormPair { alpha: p.alpha.d(), beta: Some(second) }
}

/// `i_(X,f)(alpha, beta) = (i_X alpha + (-1)^(k+1) f beta, i_X beta)`;
/// `None` stands for the zero pair of degree -1 (input of degree 0).
pub(crate) fn tilde_i_opt(x: &MultiVector, f: &Scalar, p: &FormPair) -> Option<FormPair> {
    let k = p.degree();
    if k == 0 {
        return None;
    }
    let beta = p.beta.as_ref().expect("degree >= 1 pairs carry beta");
    let mut first = p.alpha.interior_or_none(x).expect("degree >= 1");
    if !f.is_zero() {
        let fb = beta.scale(f);
        let fb = if (k + 1) % 2 == 0 { fb } else { fb.neg() };
        first = first.add(&fb).expect("matching degrees");
    }
    Some(FormPair { alpha: first, beta: beta.interior_or_none(x) })
}

pub fn tilde_i(x: &MultiVector, f: &Scalar, p: &FormPair) -> Result<FormPair> {
    same_dim(x.dim(), p.dim())?;
    if x.degree() != 1 {
        return Err(GeoError::DegreeError("contraction needs a vector field".into()));
    }
    tilde_i_opt(x, f, p).ok_or_else(|| GeoError::DegreeError("contraction of a degree-0 pair".into()))
}

/// `L~_(X,f) = i_(X,f) d~ + d~ i_(X,f)`.
pub fn tilde_lie(x: &MultiVector, f: &Scalar, p: &FormPair) -> Result<FormPair> {
    same_dim(x.dim(), p.dim())?;
    if x.degree() != 1 {
        return Err(GeoError::DegreeError("Lie derivative needs a vector field".into()));
    }
    let first = tilde_i_opt(x, f, &tilde_d(p)).expect("d~ raises degree");
    match tilde_i_opt(x, f, p) {
        Some(ip) => first.add(&tilde_d(&ip)),
        None => Ok(first),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y() -> Scalar {
        Scalar::coord(1)
    }
    fn eta0() -> DiffForm {
        DiffForm::dx(3, 2).sub(&DiffForm::dx(3, 0).scale(&y())).unwrap()
    }
    fn e(i: usize) -> MultiVector {
        MultiVector::partial(3, i)
    }

    #[test]
    fn pairing_examples() {
        let a = E1Section::new(e(0), Scalar::zero(), DiffForm::dx(3, 0), Scalar::zero()).unwrap();
        assert_eq!(pairing(&a, &a).unwrap(), Scalar::one());
        let u = E1Section::tangent(MultiVector::zero(3, 1), Scalar::one());
        let v = E1Section::cotangent(DiffForm::zero(3, 1), Scalar::one());
        assert_eq!(pairing(&u, &v).unwrap(), Scalar::from_frac(1, 2));
        let p = E1Section::tangent(e(0), Scalar::zero());
        let q = E1Section::tangent(e(1), Scalar::zero());
        assert!(pairing(&p, &q).unwrap().is_zero());
    }

    #[test]
    fn tilde_d_examples() {
        let p = tilde_d(&FormPair::function(3, Scalar::coord(0)));
        assert_eq!(p.alpha(), &DiffForm::dx(3, 0));
        assert_eq!(p.beta(), Some(&DiffForm::function(3, Scalar::coord(0))));
        let q = FormPair::new(eta0(), Some(DiffForm::zero(3, 0))).unwrap();
        let dq = tilde_d(&q);
        assert_eq!(dq.alpha(), &DiffForm::monomial(3, &[0, 1], Scalar::one()));
        assert_eq!(dq.beta(), Some(&eta0().neg()));
        assert!(tilde_d(&dq).is_zero());
    }

    #[test]
    fn tilde_i_examples() {
        let q = FormPair::new(eta0(), Some(DiffForm::zero(3, 0))).unwrap();
        let r = tilde_i(&e(2), &Scalar::zero(), &q).unwrap();
        assert_eq!(r, FormPair::function(3, Scalar::one()));

        let (f, g) = (Scalar::coord(0), Scalar::coord(2));
        let q = FormPair::new(DiffForm::dx(3, 1), Some(DiffForm::function(3, g.clone()))).unwrap();
        let r = tilde_i(&MultiVector::zero(3, 1), &f, &q).unwrap();
        assert_eq!(r, FormPair::function(3, &f * &g));

        let q = FormPair::new(DiffForm::monomial(3, &[0, 1], Scalar::one()), Some(DiffForm::dx(3, 2))).unwrap();
        let r = tilde_i(&e(0), &Scalar::zero(), &q).unwrap();
        assert_eq!(r, FormPair::new(DiffForm::dx(3, 1), Some(DiffForm::function(3, Scalar::zero()))).unwrap());

        assert!(matches!(
            tilde_i(&e(0), &Scalar::zero(), &FormPair::function(3, Scalar::one())),
            Err(GeoError::DegreeError(_))
        ));
    }

    #[test]
    fn tilde_lie_examples() {
        let q = FormPair::new(eta0(), Some(DiffForm::zero(3, 0))).unwrap();
        // both Cartan branches: i d~ gives (0, -1), d~ i gives (0, 1)
        let r = tilde_lie(&e(2), &Scalar::zero(), &q).unwrap();
        assert!(r.is_zero());
        let ip = tilde_i(&e(2), &Scalar::zero(), &tilde_d(&q)).unwrap();
        assert_eq!(ip, FormPair::new(DiffForm::zero(3, 1), Some(DiffForm::function(3, Scalar::from_int(-1)))).unwrap());

        let q = FormPair::new(DiffForm::dx(3, 1), Some(DiffForm::function(3, Scalar::coord(0)))).unwrap();
        assert!(tilde_lie(&MultiVector::zero(3, 1), &Scalar::zero(), &q).unwrap().is_zero());

        let q = FormPair::new(DiffForm::monomial(3, &[1, 2], Scalar::one()), Some(DiffForm::zero(3, 1))).unwrap();
        assert!(tilde_lie(&e(0), &Scalar::zero(), &q).unwrap().is_zero());
    }
}
