use super::alternating::Alt;
use super::multivector::MultiVector;
use crate::error::{same_dim, GeoError, Result};
use crate::symcore::Scalar;

/// A differential k-form on a chart of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffForm(pub(crate) Alt);

impl DiffForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        DiffForm(Alt::zero(dim, degree))
    }

    /// The 0-form `f`.
    pub fn function(dim: usize, f: Scalar) -> Self {
        DiffForm(Alt::scalar(dim, f))
    }

    /// `dx_i` for coordinate index `i`.
    pub fn dx(dim: usize, i: usize) -> Self {
        let mut a = Alt::zero(dim, 1);
        a.add_term(vec![i], Scalar::one());
        DiffForm(a)
    }

    /// `c * dx_{i1} ^ ... ^ dx_{ik}` with indices in any order.
    pub fn monomial(dim: usize, idx: &[usize], c: Scalar) -> Self {
        let mut a = Alt::zero(dim, idx.len());
        a.add_unsorted(idx, c);
        DiffForm(a)
    }

    /// A 1-form from its components `alpha_i`.
    pub fn from_components(comps: &[Scalar]) -> Self {
        DiffForm(Alt::from_components(comps))
    }

    pub fn components(&self) -> Vec<Scalar> {
        self.0.components()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Coefficient on the strictly increasing tuple `idx`.
    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.0.get(idx)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.0.coeffs.iter()
    }

    /// The value of a 0-form.
    pub fn as_function(&self) -> Option<Scalar> {
        (self.degree() == 0).then(|| self.0.get(&[]))
    }

    pub fn add(&self, o: &DiffForm) -> Result<DiffForm> {
        same_dim(self.dim(), o.dim())?;
        if self.degree() != o.degree() {
            return Err(GeoError::DegreeError(format!(
                "cannot add forms of degree {} and {}",
                self.degree(),
                o.degree()
            )));
        }
        Ok(DiffForm(self.0.add(&o.0)))
    }

    pub fn sub(&self, o: &DiffForm) -> Result<DiffForm> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> DiffForm {
        DiffForm(self.0.neg())
    }

    pub fn scale(&self, s: &Scalar) -> DiffForm {
        DiffForm(self.0.scale(s))
    }

    pub fn conj(&self) -> DiffForm {
        DiffForm(self.0.map(Scalar::conj))
    }

    pub fn wedge(&self, o: &DiffForm) -> Result<DiffForm> {
        same_dim(self.dim(), o.dim())?;
        Ok(DiffForm(self.0.wedge(&o.0)))
    }

    /// `self ^ ... ^ self` (`n` factors); the 0th power is the constant 1.
    pub fn wedge_pow(&self, n: usize) -> DiffForm {
        let mut acc = DiffForm::function(self.dim(), Scalar::one());
        for _ in 0..n {
            acc = DiffForm(acc.0.wedge(&self.0));
        }
        acc
    }

    /// Exterior derivative.
    pub fn d(&self) -> DiffForm {
        let dim = self.dim();
        let mut out = Alt::zero(dim, self.degree() + 1);
        if self.degree() + 1 > dim {
            return DiffForm(out);
        }
        for (idx, c) in &self.0.coeffs {
            for j in 0..dim {
                if idx.contains(&j) {
                    continue;
                }
                let dc = c.diff(j);
                if dc.is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(idx.len() + 1);
                full.push(j);
                full.extend_from_slice(idx);
                out.add_unsorted(&full, dc);
            }
        }
        DiffForm(out)
    }

    /// Interior product `i_X` with a vector field.
    pub fn interior(&self, x: &MultiVector) -> Result<DiffForm> {
        same_dim(self.dim(), x.dim())?;
        if x.degree() != 1 {
            return Err(GeoError::DegreeError(format!(
                "interior product needs a vector field, got degree {}",
                x.degree()
            )));
        }
        if self.degree() == 0 {
            return Err(GeoError::DegreeError("interior product of a 0-form".into()));
        }
        Ok(DiffForm(self.0.contract_first(&x.components())))
    }

    /// Interior product that treats `i_X` of a 0-form as the zero form of
    /// degree -1, represented here by `None`.
    pub(crate) fn interior_or_none(&self, x: &MultiVector) -> Option<DiffForm> {
        if self.degree() == 0 {
            None
        } else {
            Some(DiffForm(self.0.contract_first(&x.components())))
        }
    }

    /// `alpha(X_1, ..., X_k)` with the determinant convention
    /// (`dx^dy(@x, @y) = 1`).
    pub fn eval(&self, vs: &[&MultiVector]) -> Result<Scalar> {
        if vs.len() != self.degree() {
            return Err(GeoError::DegreeError(format!(
                "a {}-form takes {} arguments, got {}",
                self.degree(),
                self.degree(),
                vs.len()
            )));
        }
        let mut cur = self.clone();
        for v in vs {
            cur = cur.interior(v)?;
        }
        Ok(cur.as_function().expect("fully contracted"))
    }

    /// Lie derivative by Cartan's formula `i_X d + d i_X`.
    pub fn lie_derivative(&self, x: &MultiVector) -> Result<DiffForm> {
        same_dim(self.dim(), x.dim())?;
        let a = self.d().interior(x)?;
        match self.interior_or_none(x) {
            Some(ix) => a.add(&ix.d()),
            None => Ok(a),
        }
    }

    pub fn to_text(&self, names: &[String]) -> String {
        self.0.to_text(names, "d")
    }
}
