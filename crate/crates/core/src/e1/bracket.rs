use super::section::E1Section;
use super::tilde::{tilde_d, tilde_i_opt, tilde_lie, FormPair};
use crate::error::{same_dim, Result};

/// The extended Courant bracket (non-skew, Dorfman type):
///
/// `[(X1,f1)+(a1,g1), (X2,f2)+(a2,g2)] = ([X1,X2], X1.f2 - X2.f1)
///     + L~_(X1,f1)(a2,g2) - i_(X2,f2) d~(a1,g1)`.
pub fn dorfman(e1: &E1Section, e2: &E1Section) -> Result<E1Section> {
    same_dim(e1.dim(), e2.dim())?;
    let x = e1.x.lie_bracket(&e2.x)?;
    let f = &e1.x.apply(&e2.f)? - &e2.x.apply(&e1.f)?;
    let lie = tilde_lie(&e1.x, &e1.f, &FormPair::of_section(e2))?;
    let contr = tilde_i_opt(&e2.x, &e2.f, &tilde_d(&FormPair::of_section(e1)))
        .expect("d~ of a degree-1 pair has degree 2");
    let forms = lie.sub(&contr)?;
    let g = forms
        .beta()
        .and_then(|b| b.as_function())
        .expect("degree-1 pair carries a function");
    E1Section::new(x, f, forms.alpha().clone(), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e1::tilde::pairing;
    use crate::extcalc::{DiffForm, MultiVector};
    use crate::symcore::Scalar;

    fn e(i: usize) -> MultiVector {
        MultiVector::partial(3, i)
    }

    #[test]
    fn vector_fields_embed() {
        let y = Scalar::coord(1);
        let a = E1Section::tangent(e(1), Scalar::zero());
        let b = E1Section::tangent(e(2).scale(&-y), Scalar::zero());
        let r = dorfman(&a, &b).unwrap();
        assert_eq!(r, E1Section::tangent(e(2).neg(), Scalar::zero()));
    }

    #[test]
    fn symmetric_part_example() {
        let s = E1Section::new(e(0), Scalar::zero(), DiffForm::dx(3, 0), Scalar::zero()).unwrap();
        assert_eq!(pairing(&s, &s).unwrap(), Scalar::one());
        let r = dorfman(&s, &s).unwrap();
        assert_eq!(r, E1Section::cotangent(DiffForm::zero(3, 1), Scalar::one()));
    }

    #[test]
    fn reeb_direction_example() {
        let y = Scalar::coord(1);
        let eta0 = DiffForm::dx(3, 2).sub(&DiffForm::dx(3, 0).scale(&y)).unwrap();
        let a = E1Section::tangent(e(2), Scalar::zero());
        let b = E1Section::cotangent(eta0, Scalar::zero());
        // eta0 is invariant along @z
        assert!(dorfman(&a, &b).unwrap().is_zero());
        let r = dorfman(&b, &a).unwrap();
        assert_eq!(r, E1Section::cotangent(DiffForm::zero(3, 1), Scalar::one()));
    }
}
