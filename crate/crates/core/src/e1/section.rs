use crate::error::{same_dim, GeoError, Result};
use crate::extcalc::{DiffForm, MultiVector};
use crate::symcore::Scalar;

/// A section `(X, f) + (alpha, g)` of E^1(M), possibly complex.
///
/// The fiber frame is `(@x_1, ..., @x_d, 1; dx_1, ..., dx_d, 1)`, so
/// [`E1Section::to_vec`] lays components out as
/// `[X^1..X^d, f, alpha_1..alpha_d, g]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct E1Section {
    pub x: MultiVector,
    pub f: Scalar,
    pub alpha: DiffForm,
    pub g: Scalar,
}

impl E1Section {
    pub fn new(x: MultiVector, f: Scalar, alpha: DiffForm, g: Scalar) -> Result<Self> {
        same_dim(x.dim(), alpha.dim())?;
        if x.degree() != 1 || alpha.degree() != 1 {
            return Err(GeoError::DegreeError(
                "a section needs a vector field and a 1-form".into(),
            ));
        }
        Ok(E1Section { x, f, alpha, g })
    }

    pub fn zero(dim: usize) -> Self {
        E1Section {
            x: MultiVector::zero(dim, 1),
            f: Scalar::zero(),
            alpha: DiffForm::zero(dim, 1),
            g: Scalar::zero(),
        }
    }

    /// `(X, f) + (0, 0)`.
    pub fn tangent(x: MultiVector, f: Scalar) -> Self {
        let dim = x.dim();
        E1Section { x, f, alpha: DiffForm::zero(dim, 1), g: Scalar::zero() }
    }

    /// `(0, 0) + (alpha, g)`.
    pub fn cotangent(alpha: DiffForm, g: Scalar) -> Self {
        let dim = alpha.dim();
        E1Section { x: MultiVector::zero(dim, 1), f: Scalar::zero(), alpha, g }
    }

    /// The `k`-th frame element of the fiber.
    pub fn frame(dim: usize, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); 2 * (dim + 1)];
        v[k] = Scalar::one();
        Self::from_vec(dim, &v)
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        let mut v = self.x.components();
        v.push(self.f.clone());
        v.extend(self.alpha.components());
        v.push(self.g.clone());
        v
    }

    pub fn from_vec(dim: usize, v: &[Scalar]) -> Self {
        assert_eq!(v.len(), 2 * (dim + 1), "section vector length");
        E1Section {
            x: MultiVector::from_components(&v[..dim]),
            f: v[dim].clone(),
            alpha: DiffForm::from_components(&v[dim + 1..2 * dim + 1]),
            g: v[2 * dim + 1].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.f.is_zero() && self.alpha.is_zero() && self.g.is_zero()
    }

    pub fn add(&self, o: &E1Section) -> Result<E1Section> {
        Ok(E1Section {
            x: self.x.add(&o.x)?,
            f: &self.f + &o.f,
            alpha: self.alpha.add(&o.alpha)?,
            g: &self.g + &o.g,
        })
    }

    pub fn sub(&self, o: &E1Section) -> Result<E1Section> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> E1Section {
        E1Section { x: self.x.neg(), f: -&self.f, alpha: self.alpha.neg(), g: -&self.g }
    }

    pub fn scale(&self, s: &Scalar) -> E1Section {
        E1Section {
            x: self.x.scale(s),
            f: &self.f * s,
            alpha: self.alpha.scale(s),
            g: &self.g * s,
        }
    }

    pub fn conj(&self) -> E1Section {
        E1Section { x: self.x.conj(), f: self.f.conj(), alpha: self.alpha.conj(), g: self.g.conj() }
    }

    pub fn is_real(&self) -> bool {
        self.to_vec().iter().all(Scalar::is_real)
    }

    /// `(X, f) + (alpha, g)` in printed form.
    pub fn to_text(&self, names: &[String]) -> String {
        format!(
            "({}, {}) + ({}, {})",
            self.x.to_text(names),
            self.f.to_text(names),
            self.alpha.to_text(names),
            self.g.to_text(names)
        )
    }
}

/// Human-readable name of fiber component `k` (see [`E1Section::to_vec`]).
pub fn component_name(names: &[String], k: usize) -> String {
    let d = names.len();
    if k < d {
        format!("@{}", names[k])
    } else if k == d {
        "f".into()
    } else if k < 2 * d + 1 {
        format!("d{}", names[k - d - 1])
    } else {
        "g".into()
    }
}
