use crate::certificate::{Certificate, Nonvanishing, ToCertificate, Verdict};
use crate::error::{GeoError, Result};
use crate::extcalc::{DiffForm, MultiVector};
use crate::linalg::{self, Matrix};
use crate::symcore::Chart;

pub(crate) fn odd_half(dim: usize) -> Result<usize> {
    if dim % 2 == 0 {
        Err(GeoError::EvenDimension(dim))
    } else {
        Ok(dim / 2)
    }
}

pub(crate) fn one_form(eta: &DiffForm) -> Result<()> {
    if eta.degree() != 1 {
        return Err(GeoError::DegreeError(format!("expected a 1-form, got degree {}", eta.degree())));
    }
    Ok(())
}

/// Top coefficient of `eta ^ (d eta)^n`.
#[derive(Clone, Debug)]
pub struct ContactReport {
    pub n: usize,
    pub top: Nonvanishing,
}

impl ContactReport {
    pub fn verdict(&self) -> Verdict {
        self.top.verdict()
    }
}

impl ToCertificate for ContactReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let mut c = Certificate::new(self.verdict());
        let label = format!("eta^(d eta)^{} / vol", self.n);
        if let Nonvanishing::IdenticallyZero = self.top {
            c = c.witness(format!("{label} = 0"));
        }
        c.certificate.extend(self.top.describe(&label, chart));
        c
    }
}

pub fn contact_check(eta: &DiffForm) -> Result<ContactReport> {
    one_form(eta)?;
    let n = odd_half(eta.dim())?;
    let top = eta.wedge(&eta.d().wedge_pow(n))?;
    let idx: Vec<usize> = (0..eta.dim()).collect();
    Ok(ContactReport { n, top: Nonvanishing::classify(&top.coeff(&idx)) })
}

/// Matrix of `X -> i_X d eta + eta(X) eta`, columns are images of `@x_j`.
pub fn flat_matrix(eta: &DiffForm) -> Result<Matrix> {
    one_form(eta)?;
    let dim = eta.dim();
    let de = eta.d();
    let e = eta.components();
    let mut m = linalg::zeros(dim, dim);
    for j in 0..dim {
        let img = de.interior(&MultiVector::partial(dim, j))?;
        for i in 0..dim {
            m[i][j] = &img.coeff(&[i]) + &(&e[j] * &e[i]);
        }
    }
    Ok(m)
}

/// `flat_eta(X) = i_X d eta + eta(X) eta`.
pub fn flat_eta(eta: &DiffForm, x: &MultiVector) -> Result<DiffForm> {
    crate::error::same_dim(eta.dim(), x.dim())?;
    let v = linalg::mat_vec(&flat_matrix(eta)?, &x.components());
    Ok(DiffForm::from_components(&v))
}

fn flat_inverse_matrix(eta: &DiffForm) -> Result<Matrix> {
    let m = flat_matrix(eta)?;
    linalg::inverse(&m).ok_or_else(|| GeoError::SingularFlat("det of X -> i_X d eta + eta(X) eta is zero".into()))
}

pub fn flat_eta_inv(eta: &DiffForm, alpha: &DiffForm) -> Result<MultiVector> {
    crate::error::same_dim(eta.dim(), alpha.dim())?;
    one_form(alpha)?;
    let v = linalg::mat_vec(&flat_inverse_matrix(eta)?, &alpha.components());
    Ok(MultiVector::from_components(&v))
}

/// The Reeb field: `i_xi d eta = 0`, `eta(xi) = 1`.
pub fn reeb(eta: &DiffForm) -> Result<MultiVector> {
    flat_eta_inv(eta, eta)
}
