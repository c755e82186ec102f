use super::form::DiffForm;
use super::multivector::MultiVector;
use crate::error::{same_dim, GeoError, Result};
use crate::symcore::Scalar;

/// A (1,1)-tensor field: `matrix[i][j]` is the `@x_i` component of
/// `phi(@x_j)`, so columns are the images of the coordinate fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor11 {
    matrix: Vec<Vec<Scalar>>,
}

impl Tensor11 {
    pub fn from_matrix(matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(GeoError::BadInput("a (1,1)-tensor needs a square matrix".into()));
        }
        Ok(Tensor11 { matrix })
    }

    /// Builds the tensor from the images of `@x_1, ..., @x_d`.
    pub fn from_images(images: &[MultiVector]) -> Result<Self> {
        let n = images.len();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (j, img) in images.iter().enumerate() {
            same_dim(n, img.dim())?;
            if img.degree() != 1 {
                return Err(GeoError::DegreeError("tensor images must be vector fields".into()));
            }
            for (i, c) in img.components().into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        Ok(Tensor11 { matrix: m })
    }

    pub fn identity(dim: usize) -> Self {
        let m = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        Tensor11 { matrix: m }
    }

    pub fn zero(dim: usize) -> Self {
        Tensor11 { matrix: vec![vec![Scalar::zero(); dim]; dim] }
    }

    /// `X (x) alpha` acting as `Y -> alpha(Y) X`.
    pub fn outer(x: &MultiVector, alpha: &DiffForm) -> Result<Self> {
        same_dim(x.dim(), alpha.dim())?;
        let xs = x.components();
        let al = alpha.components();
        let m = xs.iter().map(|xi| al.iter().map(|aj| xi * aj).collect()).collect();
        Ok(Tensor11 { matrix: m })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[i][j]
    }

    pub fn image(&self, j: usize) -> MultiVector {
        let col: Vec<Scalar> = self.matrix.iter().map(|r| r[j].clone()).collect();
        MultiVector::from_components(&col)
    }

    pub fn apply(&self, x: &MultiVector) -> Result<MultiVector> {
        same_dim(self.dim(), x.dim())?;
        if x.degree() != 1 {
            return Err(GeoError::DegreeError("a (1,1)-tensor acts on vector fields".into()));
        }
        let xs = x.components();
        let comps: Vec<Scalar> = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(&xs).map(|(a, b)| a * b).sum())
            .collect();
        Ok(MultiVector::from_components(&comps))
    }

    /// Dual action on 1-forms: `(alpha o phi)(X) = alpha(phi X)`.
    pub fn pullback(&self, alpha: &DiffForm) -> Result<DiffForm> {
        same_dim(self.dim(), alpha.dim())?;
        let al = alpha.components();
        let n = self.dim();
        let comps: Vec<Scalar> = (0..n)
            .map(|j| (0..n).map(|i| &al[i] * &self.matrix[i][j]).sum())
            .collect();
        Ok(DiffForm::from_components(&comps))
    }

    /// `self o o`.
    pub fn compose(&self, o: &Tensor11) -> Result<Tensor11> {
        same_dim(self.dim(), o.dim())?;
        let n = self.dim();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.matrix[i][k] * &o.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(Tensor11 { matrix: m })
    }

    pub fn add(&self, o: &Tensor11) -> Result<Tensor11> {
        same_dim(self.dim(), o.dim())?;
        let m = self
            .matrix
            .iter()
            .zip(&o.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Tensor11 { matrix: m })
    }

    pub fn neg(&self) -> Tensor11 {
        Tensor11 { matrix: self.matrix.iter().map(|r| r.iter().map(|x| -x).collect()).collect() }
    }

    pub fn to_text(&self, names: &[String]) -> String {
        (0..self.dim())
            .map(|j| {
                let n = names.get(j).cloned().unwrap_or_else(|| format!("x{}", j + 1));
                format!("{n} -> {}", self.image(j).to_text(names))
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Nijenhuis torsion
/// `N(X, Y) = [phiX, phiY] + phi^2[X, Y] - phi[phiX, Y] - phi[X, phiY]`.
pub fn nijenhuis(phi: &Tensor11, x: &MultiVector, y: &MultiVector) -> Result<MultiVector> {
    let px = phi.apply(x)?;
    let py = phi.apply(y)?;
    let t1 = px.lie_bracket(&py)?;
    let t2 = phi.apply(&phi.apply(&x.lie_bracket(y)?)?)?;
    let t3 = phi.apply(&px.lie_bracket(y)?)?;
    let t4 = phi.apply(&x.lie_bracket(&py)?)?;
    t1.add(&t2)?.sub(&t3)?.sub(&t4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> MultiVector {
        MultiVector::partial(3, i)
    }

    #[test]
    fn nijenhuis_constant_vanishes() {
        let phi = Tensor11::from_images(&[e(1), e(0).neg(), MultiVector::zero(3, 1)]).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert!(nijenhuis(&phi, &e(a), &e(b)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn nijenhuis_examples() {
        let y = Scalar::coord(1);
        // @x -> @y, @y -> -@x - y @z, @z -> 0
        let img_y = e(0).neg().sub(&e(2).scale(&y)).unwrap();
        let phi = Tensor11::from_images(&[e(1), img_y, MultiVector::zero(3, 1)]).unwrap();
        assert_eq!(nijenhuis(&phi, &e(0), &e(1)).unwrap(), e(2).neg());

        // @x -> (1+z) @y, @y -> -(1+z)^-1 @x, @z -> 0
        let w = Scalar::one() + Scalar::coord(2);
        let phi = Tensor11::from_images(&[
            e(1).scale(&w),
            e(0).scale(&-(Scalar::one() / w.clone())),
            MultiVector::zero(3, 1),
        ])
        .unwrap();
        let n = nijenhuis(&phi, &e(0), &e(2)).unwrap();
        assert_eq!(n, e(0).scale(&-(Scalar::one() / w)));
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(n.to_text(&names), "(-1/(z + 1))*@x");
    }

    #[test]
    fn pullback_matches_apply() {
        let y = Scalar::coord(1);
        let phi = Tensor11::from_images(&[e(1), e(0).neg().sub(&e(2).scale(&y)).unwrap(), e(2)]).unwrap();
        let alpha = DiffForm::from_components(&[Scalar::one(), Scalar::coord(0), y.clone()]);
        let x = MultiVector::from_components(&[y.clone(), Scalar::from_int(3), Scalar::one()]);
        let lhs = phi.pullback(&alpha).unwrap().eval(&[&x]).unwrap();
        let rhs = alpha.eval(&[&phi.apply(&x).unwrap()]).unwrap();
        assert_eq!(lhs, rhs);
    }
}
