use super::alternating::Alt;
use super::form::DiffForm;
use crate::error::{same_dim, GeoError, Result};
use crate::symcore::Scalar;

/// A multivector field of degree k; degree 1 is a vector field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiVector(pub(crate) Alt);

impl MultiVector {
    pub fn zero(dim: usize, degree: usize) -> Self {
        MultiVector(Alt::zero(dim, degree))
    }

    pub fn function(dim: usize, f: Scalar) -> Self {
        MultiVector(Alt::scalar(dim, f))
    }

    /// The coordinate field `@x_i`.
    pub fn partial(dim: usize, i: usize) -> Self {
        let mut a = Alt::zero(dim, 1);
        a.add_term(vec![i], Scalar::one());
        MultiVector(a)
    }

    pub fn monomial(dim: usize, idx: &[usize], c: Scalar) -> Self {
        let mut a = Alt::zero(dim, idx.len());
        a.add_unsorted(idx, c);
        MultiVector(a)
    }

    pub fn from_components(comps: &[Scalar]) -> Self {
        MultiVector(Alt::from_components(comps))
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

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.0.get(idx)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.0.coeffs.iter()
    }

    pub fn as_function(&self) -> Option<Scalar> {
        (self.degree() == 0).then(|| self.0.get(&[]))
    }

    pub fn add(&self, o: &MultiVector) -> Result<MultiVector> {
        same_dim(self.dim(), o.dim())?;
        if self.degree() != o.degree() {
            return Err(GeoError::DegreeError(format!(
                "cannot add multivectors of degree {} and {}",
                self.degree(),
                o.degree()
            )));
        }
        Ok(MultiVector(self.0.add(&o.0)))
    }

    pub fn sub(&self, o: &MultiVector) -> Result<MultiVector> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> MultiVector {
        MultiVector(self.0.neg())
    }

    pub fn scale(&self, s: &Scalar) -> MultiVector {
        MultiVector(self.0.scale(s))
    }

    pub fn conj(&self) -> MultiVector {
        MultiVector(self.0.map(Scalar::conj))
    }

    pub fn wedge(&self, o: &MultiVector) -> Result<MultiVector> {
        same_dim(self.dim(), o.dim())?;
        Ok(MultiVector(self.0.wedge(&o.0)))
    }

    /// Directional derivative `X . f` for a vector field.
    pub fn apply(&self, f: &Scalar) -> Result<Scalar> {
        self.require_vector("directional derivative")?;
        Ok(self
            .0
            .coeffs
            .iter()
            .map(|(k, c)| c * &f.diff(k[0]))
            .sum())
    }

    /// Contraction of the first slot with a 1-form, `i_alpha P`. For a
    /// bivector this is `pi^#(alpha)` with `pi(alpha, beta) = beta(pi^#(alpha))`.
    pub fn contract(&self, alpha: &DiffForm) -> Result<MultiVector> {
        same_dim(self.dim(), alpha.dim())?;
        if alpha.degree() != 1 || self.degree() == 0 {
            return Err(GeoError::DegreeError("contraction needs a 1-form and degree >= 1".into()));
        }
        Ok(MultiVector(self.0.contract_first(&alpha.components())))
    }

    /// `P(alpha_1, ..., alpha_k)` on 1-forms.
    pub fn eval(&self, forms: &[&DiffForm]) -> Result<Scalar> {
        if forms.len() != self.degree() {
            return Err(GeoError::DegreeError(format!(
                "a {}-vector takes {} arguments, got {}",
                self.degree(),
                self.degree(),
                forms.len()
            )));
        }
        let mut cur = self.clone();
        for a in forms {
            cur = cur.contract(a)?;
        }
        Ok(cur.as_function().expect("fully contracted"))
    }

    fn require_vector(&self, what: &str) -> Result<()> {
        if self.degree() == 1 {
            Ok(())
        } else {
            Err(GeoError::DegreeError(format!("{what} needs a vector field, got degree {}", self.degree())))
        }
    }

    /// Lie bracket of vector fields.
    pub fn lie_bracket(&self, o: &MultiVector) -> Result<MultiVector> {
        same_dim(self.dim(), o.dim())?;
        self.require_vector("Lie bracket")?;
        o.require_vector("Lie bracket")?;
        let xs = self.components();
        let ys = o.components();
        let comps: Vec<Scalar> = (0..self.dim())
            .map(|k| {
                let mut acc = Scalar::zero();
                for j in 0..self.dim() {
                    if !xs[j].is_zero() {
                        acc = &acc + &(&xs[j] * &ys[k].diff(j));
                    }
                    if !ys[j].is_zero() {
                        acc = &acc - &(&ys[j] * &xs[k].diff(j));
                    }
                }
                acc
            })
            .collect();
        Ok(MultiVector::from_components(&comps))
    }

    /// Schouten-Nijenhuis bracket.
    ///
    /// In odd coordinates `theta_j = @x_j`,
    /// `[P, Q] = s * sum_j (dP/dtheta_j)^(dQ/dx_j) - (-1)^((p-1)(q-1)) (dQ/dtheta_j)^(dP/dx_j)`
    /// with right derivatives and `s = (-1)^((p-1)(q-1))`. The factor `s`
    /// fixes the convention in which a Jacobi pair satisfies
    /// `[pi, pi] = 2 E ^ pi`; with it, `[X, Q] = L_X Q` for vector fields `X`.
    pub fn schouten(&self, o: &MultiVector) -> Result<MultiVector> {
        same_dim(self.dim(), o.dim())?;
        let (p, q) = (self.degree() as i64, o.degree() as i64);
        let dim = self.dim();
        let degree = (p + q - 1).max(0) as usize;
        if p + q == 0 {
            return Ok(MultiVector::zero(dim, 0));
        }
        let twist = if ((p - 1) * (q - 1)).rem_euclid(2) == 0 { 1 } else { -1 };
        let mut out = Alt::zero(dim, degree);
        for j in 0..dim {
            if p >= 1 {
                let dq = o.0.diff_coeffs(j);
                if !dq.is_zero() {
                    out = out.add(&self.0.right_derivative(j).wedge(&dq));
                }
            }
            if q >= 1 {
                let dp = self.0.diff_coeffs(j);
                if !dp.is_zero() {
                    let t = o.0.right_derivative(j).wedge(&dp);
                    out = if twist == 1 { out.sub(&t) } else { out.add(&t) };
                }
            }
        }
        let out = if twist == 1 { out } else { out.neg() };
        if degree > dim {
            return Ok(MultiVector::zero(dim, degree));
        }
        Ok(MultiVector(out))
    }

    pub fn to_text(&self, names: &[String]) -> String {
        self.0.to_text(names, "@")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex() -> MultiVector {
        MultiVector::partial(3, 0)
    }
    fn ey() -> MultiVector {
        MultiVector::partial(3, 1)
    }
    fn ez() -> MultiVector {
        MultiVector::partial(3, 2)
    }
    fn y() -> Scalar {
        Scalar::coord(1)
    }
    /// (@x + y @z) ^ @y
    fn pi0() -> MultiVector {
        ex().add(&ez().scale(&y())).unwrap().wedge(&ey()).unwrap()
    }

    #[test]
    fn lie_bracket_examples() {
        assert!(ex().lie_bracket(&ey()).unwrap().is_zero());
        let b = ey().lie_bracket(&ez().scale(&-y())).unwrap();
        assert_eq!(b, ez().neg());
        let bi = MultiVector::monomial(3, &[0, 1], Scalar::one());
        assert!(matches!(bi.lie_bracket(&ex()), Err(GeoError::DegreeError(_))));
    }

    #[test]
    fn schouten_examples() {
        assert!(ex().schouten(&ey()).unwrap().is_zero());
        assert!(ez().schouten(&pi0()).unwrap().is_zero());
        let pp = pi0().schouten(&pi0()).unwrap();
        let rhs = ez().wedge(&pi0()).unwrap().scale(&Scalar::from_int(2));
        assert_eq!(pp, rhs);
        assert_eq!(pp, MultiVector::monomial(3, &[0, 1, 2], Scalar::from_int(2)));
    }

    #[test]
    fn sharp_convention() {
        // pi^#(dx) = @y for pi = (@x + y @z) ^ @y
        let s = pi0().contract(&DiffForm::dx(3, 0)).unwrap();
        assert_eq!(s, ey());
        // pi^#(dz) = y @y
        let s = pi0().contract(&DiffForm::dx(3, 2)).unwrap();
        assert_eq!(s, ey().scale(&y()));
    }
}
