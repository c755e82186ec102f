use super::contact::{flat_eta_inv, one_form};
use crate::certificate::{Certificate, Nonvanishing, ToCertificate, Verdict};
use crate::e1::{E1Section, SubBundle};
use crate::error::{same_dim, GeoError, Result};
use crate::extcalc::{DiffForm, MultiVector};
use crate::linalg::{self, Matrix};
use crate::symcore::{Chart, Scalar};

/// A bivector `pi` with a vector field `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiPair {
    pub pi: MultiVector,
    pub e: MultiVector,
}

impl JacobiPair {
    pub fn new(pi: MultiVector, e: MultiVector) -> Result<Self> {
        same_dim(pi.dim(), e.dim())?;
        if pi.degree() != 2 || e.degree() != 1 {
            return Err(GeoError::DegreeError("a Jacobi pair is a bivector and a vector field".into()));
        }
        Ok(JacobiPair { pi, e })
    }

    pub fn zero(dim: usize) -> Self {
        JacobiPair { pi: MultiVector::zero(dim, 2), e: MultiVector::zero(dim, 1) }
    }

    pub fn dim(&self) -> usize {
        self.pi.dim()
    }

    pub fn neg(&self) -> Self {
        JacobiPair { pi: self.pi.neg(), e: self.e.neg() }
    }

    /// `(pi, E)^sharp(alpha, g) = (pi^sharp(alpha) + g E, -alpha(E))`.
    pub fn sharp(&self, alpha: &DiffForm, g: &Scalar) -> Result<(MultiVector, Scalar)> {
        same_dim(self.dim(), alpha.dim())?;
        let x = self.pi.contract(alpha)?.add(&self.e.scale(g))?;
        Ok((x, -&alpha.eval(&[&self.e])?))
    }

    /// Matrix of `(pi, E)^sharp` in the frames `(dx_i, 1)` and `(@x_i, 1)`.
    pub fn sharp_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = linalg::zeros(d + 1, d + 1);
        for j in 0..=d {
            let (x, h) = if j < d {
                self.sharp(&DiffForm::dx(d, j), &Scalar::zero())
            } else {
                self.sharp(&DiffForm::zero(d, 1), &Scalar::one())
            }
            .expect("frame covectors match the chart");
            for (i, c) in x.components().into_iter().enumerate() {
                m[i][j] = c;
            }
            m[d][j] = h;
        }
        m
    }
}

/// Residuals of `[E, pi] = 0` and `[pi, pi] = 2 E ^ pi`.
#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub e_pi: MultiVector,
    pub pi_pi: MultiVector,
}

impl JacobiReport {
    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.e_pi.is_zero() && self.pi_pi.is_zero())
    }
}

impl ToCertificate for JacobiReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        if !self.e_pi.is_zero() {
            c = c.witness(format!("[E, pi] = {}", self.e_pi.to_text(names)));
        }
        if !self.pi_pi.is_zero() {
            c = c.witness(format!("[pi, pi] - 2 E^pi = {}", self.pi_pi.to_text(names)));
        }
        c.cert("[E, pi] and [pi, pi] - 2 E^pi computed exactly")
    }
}

pub fn jacobi_check(j: &JacobiPair) -> JacobiReport {
    let e_pi = j.e.schouten(&j.pi).expect("same chart");
    let two_e_pi = j.e.wedge(&j.pi).expect("same chart").scale(&Scalar::from_int(2));
    let pi_pi = j.pi.schouten(&j.pi).expect("same chart").sub(&two_e_pi).expect("same degree");
    JacobiReport { e_pi, pi_pi }
}

/// Matrix of `(X, f) -> (-i_X d eta - f eta, eta(X))`.
fn psi_matrix(eta: &DiffForm) -> Matrix {
    let d = eta.dim();
    let de = eta.d();
    let e = eta.components();
    let mut m = linalg::zeros(d + 1, d + 1);
    for j in 0..d {
        let img = de.interior(&MultiVector::partial(d, j)).expect("2-form");
        for i in 0..d {
            m[i][j] = -&img.coeff(&[i]);
        }
        m[d][j] = e[j].clone();
    }
    for i in 0..d {
        m[i][d] = -&e[i];
    }
    m
}

/// The Jacobi pair of a contact form, solved from
/// `((pi,E)^sharp)^-1 (X, f) = (-i_X d eta - f eta, eta(X))`.
pub fn jacobi_from_contact(eta: &DiffForm) -> Result<JacobiPair> {
    one_form(eta)?;
    let d = eta.dim();
    let s = linalg::inverse(&psi_matrix(eta))
        .ok_or_else(|| GeoError::SingularFlat("(-i_X d eta - f eta, eta(X)) is not invertible".into()))?;
    let mut pi = MultiVector::zero(d, 2);
    for i in 0..d {
        for j in i + 1..d {
            if !s[j][i].is_zero() {
                pi = pi.add(&MultiVector::monomial(d, &[i, j], s[j][i].clone()))?;
            }
        }
    }
    let e = MultiVector::from_components(&(0..d).map(|i| s[i][d].clone()).collect::<Vec<_>>());
    let pair = JacobiPair { pi, e };
    // the sharp map of the assembled pair must reproduce every entry of s
    if pair.sharp_matrix() != s {
        return Err(GeoError::BadInput("inverse of the contact map is not a Jacobi sharp map".into()));
    }
    Ok(pair)
}

/// Everything the contact-to-Jacobi correspondence asserts for one form.
#[derive(Clone, Debug)]
pub struct ContactJacobiReport {
    pub pair: JacobiPair,
    /// Frame pairs where `pi(dx_i, dx_j) != d eta(flat^-1 dx_i, flat^-1 dx_j)`.
    pub pi_mismatch: Vec<(usize, usize, Scalar)>,
    pub e_is_reeb: bool,
    pub jacobi: JacobiReport,
}

impl ContactJacobiReport {
    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.pi_mismatch.is_empty() && self.e_is_reeb)
            .and(self.jacobi.verdict())
    }
}

impl ToCertificate for ContactJacobiReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict())
            .cert(format!("pi = {}", self.pair.pi.to_text(names)))
            .cert(format!("E = {}", self.pair.e.to_text(names)));
        for (i, j, v) in &self.pi_mismatch {
            c = c.witness(format!("pi(d{}, d{}) - d eta(..) = {}", names[*i], names[*j], v.to_text(names)));
        }
        if !self.e_is_reeb {
            c = c.witness("E differs from flat^-1(eta)");
        }
        let j = self.jacobi.to_certificate(chart);
        c.witness.extend(j.witness);
        c
    }
}

pub fn contact_jacobi_report(eta: &DiffForm) -> Result<ContactJacobiReport> {
    let pair = jacobi_from_contact(eta)?;
    let d = eta.dim();
    let de = eta.d();
    let inv: Vec<MultiVector> =
        (0..d).map(|i| flat_eta_inv(eta, &DiffForm::dx(d, i))).collect::<Result<_>>()?;
    let mut pi_mismatch = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = pair.pi.eval(&[&DiffForm::dx(d, i), &DiffForm::dx(d, j)])?;
            let rhs = de.eval(&[&inv[i], &inv[j]])?;
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                pi_mismatch.push((i, j, diff));
            }
        }
    }
    let e_is_reeb = pair.e == flat_eta_inv(eta, eta)?;
    let jacobi = jacobi_check(&pair);
    Ok(ContactJacobiReport { pair, pi_mismatch, e_is_reeb, jacobi })
}

fn bundle(gens: Vec<E1Section>) -> SubBundle {
    let real = gens.iter().all(E1Section::is_real);
    SubBundle::new(gens, !real).expect("nonempty generators on one chart")
}

/// `L_(pi,E) = {(pi,E)^sharp(alpha, g) + (alpha, g)}`.
pub fn graph_jacobi(j: &JacobiPair) -> SubBundle {
    let d = j.dim();
    let s = j.sharp_matrix();
    let gens = (0..=d)
        .map(|k| {
            let mut v: Vec<Scalar> = (0..=d).map(|i| s[i][k].clone()).collect();
            v.extend((0..=d).map(|i| if i == k { Scalar::one() } else { Scalar::zero() }));
            E1Section::from_vec(d, &v)
        })
        .collect();
    bundle(gens)
}

/// `Theta(X, f) = (i_X omega + f eta, -eta(X))` as a matrix.
pub fn theta_matrix(omega: &DiffForm, eta: &DiffForm) -> Result<Matrix> {
    same_dim(omega.dim(), eta.dim())?;
    one_form(eta)?;
    if omega.degree() != 2 {
        return Err(GeoError::DegreeError("omega must be a 2-form".into()));
    }
    let d = eta.dim();
    let e = eta.components();
    let mut m = linalg::zeros(d + 1, d + 1);
    for j in 0..d {
        let img = omega.interior(&MultiVector::partial(d, j))?;
        for i in 0..d {
            m[i][j] = img.coeff(&[i]);
        }
        m[d][j] = -&e[j];
    }
    for i in 0..d {
        m[i][d] = e[i].clone();
    }
    Ok(m)
}

/// `L_(omega,eta) = {(X, f) + (i_X omega + f eta, -eta(X))}`.
pub fn graph_omega_eta(omega: &DiffForm, eta: &DiffForm) -> Result<SubBundle> {
    let t = theta_matrix(omega, eta)?;
    let d = eta.dim();
    let gens = (0..=d)
        .map(|k| {
            let mut v: Vec<Scalar> = (0..=d).map(|i| if i == k { Scalar::one() } else { Scalar::zero() }).collect();
            v.extend((0..=d).map(|i| t[i][k].clone()));
            E1Section::from_vec(d, &v)
        })
        .collect();
    Ok(bundle(gens))
}

/// `L_eta = L_(d eta, eta)`.
pub fn graph_eta(eta: &DiffForm) -> Result<SubBundle> {
    graph_omega_eta(&eta.d(), eta)
}

/// `(X, f) + (alpha, g) -> (X, f) - (alpha, g)`, an automorphism of the
/// bracket that negates the pairing.
pub fn sigma(l: &SubBundle) -> SubBundle {
    l.map(|e| E1Section {
        x: e.x.clone(),
        f: e.f.clone(),
        alpha: e.alpha.neg(),
        g: -&e.g,
    })
}

#[derive(Clone, Debug)]
pub struct TransversalityReport {
    pub maximal: bool,
    /// `L` meets `(TM x R) + 0` trivially: the `(alpha, g)` block has full rank.
    pub tangent: Nonvanishing,
    /// `L` meets `0 + (T*M x R)` trivially: the `(X, f)` block has full rank.
    pub cotangent: Nonvanishing,
}

impl TransversalityReport {
    pub fn verdict(&self) -> Verdict {
        if !self.maximal {
            return Verdict::Fail;
        }
        self.tangent.verdict().and(self.cotangent.verdict())
    }
}

impl ToCertificate for TransversalityReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let mut c = Certificate::new(self.verdict());
        if !self.maximal {
            c = c.witness("L is not maximally isotropic");
        }
        if let Nonvanishing::IdenticallyZero = self.tangent {
            c = c.witness("L meets TM x R nontrivially");
        }
        if let Nonvanishing::IdenticallyZero = self.cotangent {
            c = c.witness("L meets T*M x R nontrivially");
        }
        c.certificate.extend(self.tangent.describe("det (alpha, g) block", chart));
        c.certificate.extend(self.cotangent.describe("det (X, f) block", chart));
        c
    }
}

fn block_det(m: &Matrix, cols: std::ops::Range<usize>, need: usize) -> Nonvanishing {
    let sub: Matrix = m.iter().map(|r| r[cols.clone()].to_vec()).collect();
    let info = linalg::rank_info(&sub);
    if info.rank < need {
        Nonvanishing::IdenticallyZero
    } else {
        Nonvanishing::classify(&info.minor)
    }
}

pub fn transversality_check(l: &SubBundle) -> TransversalityReport {
    let n = l.half_rank();
    let m = l.matrix();
    TransversalityReport {
        maximal: l.is_maximally_isotropic(),
        tangent: block_det(&m, n..2 * n, n),
        cotangent: block_det(&m, 0..n, n),
    }
}

#[derive(Clone, Debug)]
pub struct KernelLineReport {
    /// Rank of `L` meeting `(TM x 0) + (0 x R)`.
    pub rank: usize,
    pub generator: Option<E1Section>,
    pub xi: Option<MultiVector>,
    pub maximal: bool,
}

impl KernelLineReport {
    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.maximal && self.rank == 1 && self.xi.is_some())
    }
}

impl ToCertificate for KernelLineReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        if !self.maximal {
            c = c.witness("L is not maximally isotropic");
        }
        if self.rank != 1 {
            c = c.witness(format!("intersection has rank {}", self.rank));
        } else if self.xi.is_none() {
            c = c.witness("kernel line has no component along (0, 1)");
        }
        if let Some(g) = &self.generator {
            c = c.cert(format!("generator = {}", g.to_text(names)));
        }
        if let Some(xi) = &self.xi {
            c = c.cert(format!("xi = {}", xi.to_text(names)));
        }
        c
    }
}

/// `L` meeting `(TM x 0) + (0 x R)`, normalized to `(xi, 0) + (0, -1)`.
pub fn kernel_line(l: &SubBundle) -> KernelLineReport {
    let d = l.dim();
    let m = l.matrix();
    // columns f, alpha_1..alpha_d must vanish
    let constrained: Matrix = (d..=2 * d).map(|c| m.iter().map(|r| r[c].clone()).collect()).collect();
    let combos = linalg::null_space(&constrained, m.len());
    let mut sections: Vec<E1Section> = Vec::new();
    for c in &combos {
        let mut acc = E1Section::zero(d);
        for (k, s) in c.iter().enumerate() {
            if !s.is_zero() {
                acc = acc.add(&l.generators()[k].scale(s)).expect("same chart");
            }
        }
        sections.push(acc);
    }
    let rows: Matrix = sections.iter().map(E1Section::to_vec).collect();
    let info = linalg::rank_info(&rows);
    let mut report = KernelLineReport { rank: info.rank, generator: None, xi: None, maximal: l.is_maximally_isotropic() };
    if info.rank == 1 {
        let v = &sections[info.rows[0]];
        if !v.g.is_zero() {
            let s = (-&v.g).inv().expect("nonzero");
            let n = v.scale(&s);
            report.xi = Some(n.x.clone());
            report.generator = Some(n);
        } else {
            report.generator = Some(v.clone());
        }
    }
    report
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
    fn pi0() -> MultiVector {
        let a = MultiVector::partial(3, 0).add(&MultiVector::partial(3, 2).scale(&y())).unwrap();
        a.wedge(&MultiVector::partial(3, 1)).unwrap()
    }

    #[test]
    fn contact_jacobi_pair() {
        let j = jacobi_from_contact(&eta0()).unwrap();
        assert_eq!(j.pi, pi0());
        assert_eq!(j.e, MultiVector::partial(3, 2));
        let r = contact_jacobi_report(&eta0()).unwrap();
        assert_eq!(r.verdict(), Verdict::Pass);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_check(&JacobiPair::zero(3)).verdict(), Verdict::Pass);
        let j = JacobiPair::new(pi0(), MultiVector::partial(3, 2)).unwrap();
        assert_eq!(jacobi_check(&j).verdict(), Verdict::Pass);
        let j = JacobiPair::new(pi0(), MultiVector::zero(3, 1)).unwrap();
        let r = jacobi_check(&j);
        assert_eq!(r.verdict(), Verdict::Fail);
        let expected = MultiVector::partial(3, 2).wedge(&pi0()).unwrap().scale(&Scalar::from_int(2));
        assert_eq!(r.pi_pi, expected);
    }

    #[test]
    fn sharp_examples() {
        let j = JacobiPair::new(pi0(), MultiVector::partial(3, 2)).unwrap();
        let z = Scalar::zero();
        assert_eq!(j.sharp(&DiffForm::dx(3, 0), &z).unwrap(), (MultiVector::partial(3, 1), z.clone()));
        assert_eq!(j.sharp(&DiffForm::zero(3, 1), &Scalar::one()).unwrap(), (MultiVector::partial(3, 2), z.clone()));
        let want = MultiVector::partial(3, 1).scale(&y()).sub(&MultiVector::partial(3, 2)).unwrap();
        assert_eq!(
            j.sharp(&DiffForm::dx(3, 2), &Scalar::from_int(-1)).unwrap(),
            (want, Scalar::from_int(-1))
        );
    }

    #[test]
    fn graphs() {
        let l = graph_eta(&eta0()).unwrap();
        let want = E1Section::new(MultiVector::partial(3, 2), Scalar::zero(), DiffForm::zero(3, 1), Scalar::from_int(-1))
            .unwrap();
        assert_eq!(l.generators()[2], want);
        assert!(l.is_maximally_isotropic());

        let zero = graph_jacobi(&JacobiPair::zero(3));
        let cot = SubBundle::real((4..8).map(|k| E1Section::frame(3, k)).collect()).unwrap();
        assert!(zero.equal_span(&cot));

        let lj = graph_jacobi(&jacobi_from_contact(&eta0()).unwrap());
        assert!(lj.is_maximally_isotropic());
        assert!(!lj.equal_span(&l));
        assert!(sigma(&lj).equal_span(&l));
        assert!(graph_jacobi(&jacobi_from_contact(&eta0()).unwrap().neg()).equal_span(&l));
    }

    #[test]
    fn transversality_examples() {
        let r = transversality_check(&graph_eta(&eta0()).unwrap());
        assert_eq!(r.verdict(), Verdict::Pass);
        let tm = SubBundle::real((0..4).map(|k| E1Section::frame(3, k)).collect()).unwrap();
        let r = transversality_check(&tm);
        assert!(matches!(r.tangent, Nonvanishing::IdenticallyZero));
        let l = graph_omega_eta(&DiffForm::monomial(3, &[0, 1], Scalar::one()), &DiffForm::dx(3, 2)).unwrap();
        assert_eq!(transversality_check(&l).verdict(), Verdict::Pass);
    }

    #[test]
    fn kernel_line_examples() {
        let r = kernel_line(&graph_eta(&eta0()).unwrap());
        assert_eq!(r.verdict(), Verdict::Pass);
        let want = E1Section::new(MultiVector::partial(3, 2), Scalar::zero(), DiffForm::zero(3, 1), Scalar::from_int(-1))
            .unwrap();
        assert_eq!(r.generator, Some(want));
        assert_eq!(r.xi, Some(super::super::contact::reeb(&eta0()).unwrap()));

        let r = kernel_line(&graph_omega_eta(&DiffForm::zero(3, 2), &DiffForm::dx(3, 2)).unwrap());
        assert_eq!(r.rank, 3);
        assert_eq!(r.verdict(), Verdict::Fail);
    }
}
