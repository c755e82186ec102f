use super::contact::{odd_half, one_form};
use super::jacobi::theta_matrix;
use crate::certificate::{Certificate, Nonvanishing, ToCertificate, Verdict};
use crate::e1::{E1Section, EndoJ, SubBundle};
use crate::error::{same_dim, GeoError, Result};
use crate::extcalc::{DiffForm, MultiVector};
use crate::linalg;
use crate::symcore::{Chart, Scalar};

/// A 2-form `omega` with a 1-form `eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosymplecticPair {
    pub omega: DiffForm,
    pub eta: DiffForm,
}

impl CosymplecticPair {
    pub fn new(omega: DiffForm, eta: DiffForm) -> Result<Self> {
        same_dim(omega.dim(), eta.dim())?;
        one_form(&eta)?;
        if omega.degree() != 2 {
            return Err(GeoError::DegreeError("omega must be a 2-form".into()));
        }
        Ok(CosymplecticPair { omega, eta })
    }

    pub fn dim(&self) -> usize {
        self.eta.dim()
    }

    /// `Theta(X, f) = (i_X omega + f eta, -eta(X))`.
    pub fn theta(&self, x: &MultiVector, f: &Scalar) -> Result<(DiffForm, Scalar)> {
        same_dim(self.dim(), x.dim())?;
        let a = self.omega.interior(x)?.add(&self.eta.scale(f))?;
        Ok((a, -&self.eta.eval(&[x])?))
    }

    /// The Reeb field: `i_xi omega = 0`, `eta(xi) = 1`.
    pub fn reeb(&self) -> Result<MultiVector> {
        let d = self.dim();
        let e = self.eta.components();
        let mut m = linalg::zeros(d, d);
        for j in 0..d {
            let img = self.omega.interior(&MultiVector::partial(d, j))?;
            for i in 0..d {
                m[i][j] = &img.coeff(&[i]) + &(&e[j] * &e[i]);
            }
        }
        let inv = linalg::inverse(&m)
            .ok_or_else(|| GeoError::SingularFlat("i_X omega + eta(X) eta is not invertible".into()))?;
        Ok(MultiVector::from_components(&linalg::mat_vec(&inv, &e)))
    }
}

#[derive(Clone, Debug)]
pub struct CosymplecticReport {
    pub n: usize,
    /// Top coefficient of `eta ^ omega^n`.
    pub top: Nonvanishing,
    pub reeb: Option<MultiVector>,
}

impl CosymplecticReport {
    pub fn verdict(&self) -> Verdict {
        self.top.verdict()
    }
}

impl ToCertificate for CosymplecticReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let mut c = Certificate::new(self.verdict());
        let label = format!("eta^omega^{} / vol", self.n);
        if let Nonvanishing::IdenticallyZero = self.top {
            c = c.witness(format!("{label} = 0"));
        }
        c.certificate.extend(self.top.describe(&label, chart));
        if let Some(xi) = &self.reeb {
            c = c.cert(format!("reeb = {}", xi.to_text(chart.coords())));
        }
        c
    }
}

pub fn cosymplectic_check(c: &CosymplecticPair) -> Result<CosymplecticReport> {
    let n = odd_half(c.dim())?;
    let top = c.eta.wedge(&c.omega.wedge_pow(n))?;
    let idx: Vec<usize> = (0..c.dim()).collect();
    let top = Nonvanishing::classify(&top.coeff(&idx));
    let reeb = match top {
        Nonvanishing::IdenticallyZero => None,
        _ => Some(c.reeb()?),
    };
    Ok(CosymplecticReport { n, top, reeb })
}

/// `J((X,f) + (alpha,g)) = -Theta^-1(alpha, g) + Theta(X, f)` and
/// `E = {(X, f) - i Theta(X, f)}`.
#[derive(Clone, Debug)]
pub struct CosymplecticGac {
    pub endo: EndoJ,
    pub e: SubBundle,
}

pub fn gac_from_cosymplectic(c: &CosymplecticPair) -> Result<CosymplecticGac> {
    odd_half(c.dim())?;
    let d = c.dim();
    let t = theta_matrix(&c.omega, &c.eta)?;
    let tinv = linalg::inverse(&t).ok_or_else(|| {
        GeoError::SingularTheta("Theta is not invertible".into())
    })?;
    let zero = linalg::zeros(d + 1, d + 1);
    let endo = EndoJ::from_blocks(zero.clone(), linalg::neg(&tinv), t.clone(), zero)?;
    let i = Scalar::i();
    let gens = (0..=d)
        .map(|k| {
            let mut v: Vec<Scalar> = (0..=d).map(|r| if r == k { Scalar::one() } else { Scalar::zero() }).collect();
            v.extend((0..=d).map(|r| -&(&i * &t[r][k])));
            E1Section::from_vec(d, &v)
        })
        .collect();
    Ok(CosymplecticGac { endo, e: SubBundle::complex(gens)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e1::Sign;

    fn eta0() -> DiffForm {
        DiffForm::dx(3, 2).sub(&DiffForm::dx(3, 0).scale(&Scalar::coord(1))).unwrap()
    }
    fn split() -> CosymplecticPair {
        CosymplecticPair::new(DiffForm::monomial(3, &[0, 1], Scalar::one()), DiffForm::dx(3, 2)).unwrap()
    }
    fn contact() -> CosymplecticPair {
        CosymplecticPair::new(eta0().d(), eta0()).unwrap()
    }

    #[test]
    fn checks() {
        let r = cosymplectic_check(&split()).unwrap();
        assert!(matches!(r.top, Nonvanishing::Everywhere(ref v) if v.is_one()));
        assert_eq!(r.reeb, Some(MultiVector::partial(3, 2)));
        assert_eq!(cosymplectic_check(&contact()).unwrap().verdict(), Verdict::Pass);
        let (a, f) = split().theta(&MultiVector::partial(3, 2), &Scalar::zero()).unwrap();
        assert!(a.is_zero());
        assert_eq!(f, Scalar::from_int(-1));
        let xi = contact().reeb().unwrap();
        assert!(contact().omega.interior(&xi).unwrap().is_zero());
        assert_eq!(eta0().eval(&[&xi]).unwrap(), Scalar::one());
    }

    #[test]
    fn singular_theta() {
        let c = CosymplecticPair::new(DiffForm::zero(3, 2), DiffForm::dx(3, 2)).unwrap();
        assert!(matches!(gac_from_cosymplectic(&c), Err(GeoError::SingularTheta(_))));
    }

    #[test]
    fn endomorphism_and_bundle() {
        for c in [split(), contact()] {
            let g = gac_from_cosymplectic(&c).unwrap();
            assert_eq!(g.endo.endo_check().verdict(), Verdict::Pass);
            assert!(g.endo.eigenbundle(Sign::Plus).unwrap().equal_span(&g.e));
            assert!(g.e.is_maximally_isotropic());
            assert!(g.e.direct_sum_check().verdict().is_pass());
        }
    }

    #[test]
    fn integrable_iff_closed() {
        assert!(!gac_from_cosymplectic(&split()).unwrap().e.integrability_check().is_integrable());
        assert!(gac_from_cosymplectic(&contact()).unwrap().e.integrability_check().is_integrable());
    }
}
