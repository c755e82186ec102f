use super::contact::one_form;
use crate::certificate::{Certificate, ToCertificate, Verdict};
use crate::e1::{E1Section, EndoJ, Sign, SubBundle};
use crate::error::{same_dim, GeoError, Result};
use crate::extcalc::{nijenhuis, DiffForm, MultiVector, Tensor11};
use crate::linalg::{self, Matrix};
use crate::symcore::{Chart, Scalar};

/// A triple `(phi, xi, eta)`. The axioms are checked by
/// [`almost_contact_check`], not by the constructor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostContact {
    pub phi: Tensor11,
    pub xi: MultiVector,
    pub eta: DiffForm,
}

impl AlmostContact {
    pub fn new(phi: Tensor11, xi: MultiVector, eta: DiffForm) -> Result<Self> {
        same_dim(phi.dim(), xi.dim())?;
        same_dim(phi.dim(), eta.dim())?;
        one_form(&eta)?;
        if xi.degree() != 1 {
            return Err(GeoError::DegreeError("xi must be a vector field".into()));
        }
        Ok(AlmostContact { phi, xi, eta })
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    /// Matrix of `J(X, f) = (phi X - f xi, eta(X))`.
    pub fn j_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = linalg::zeros(d + 1, d + 1);
        let e = self.eta.components();
        let xi = self.xi.components();
        for i in 0..d {
            for j in 0..d {
                m[i][j] = self.phi.entry(i, j).clone();
            }
            m[i][d] = -&xi[i];
            m[d][i] = e[i].clone();
        }
        m
    }
}

/// Defect of each axiom and consequence; empty lists mean it holds.
#[derive(Clone, Debug)]
pub struct AlmostContactReport {
    /// `eta(xi) - 1`.
    pub eta_xi: Scalar,
    /// Frame index `j` with `phi^2(@j) + @j - eta_j xi != 0`.
    pub phi_squared: Vec<(usize, MultiVector)>,
    pub phi_xi: MultiVector,
    pub eta_phi: DiffForm,
}

impl AlmostContactReport {
    pub fn axioms_hold(&self) -> bool {
        self.eta_xi.is_zero() && self.phi_squared.is_empty()
    }

    pub fn consequences_hold(&self) -> bool {
        self.phi_xi.is_zero() && self.eta_phi.is_zero()
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.axioms_hold() && self.consequences_hold())
    }
}

impl ToCertificate for AlmostContactReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        if !self.eta_xi.is_zero() {
            c = c.witness(format!("eta(xi) - 1 = {}", self.eta_xi.to_text(names)));
        }
        for (j, r) in &self.phi_squared {
            c = c.witness(format!("phi^2(@{0}) + @{0} - eta(@{0}) xi = {1}", names[*j], r.to_text(names)));
        }
        if self.axioms_hold() && !self.consequences_hold() {
            c = c.witness(format!(
                "internal: phi(xi) = {}, eta o phi = {}",
                self.phi_xi.to_text(names),
                self.eta_phi.to_text(names)
            ));
        }
        c.cert("eta(xi) = 1 and phi^2 = -id + eta (x) xi checked on the frame")
    }
}

pub fn almost_contact_check(a: &AlmostContact) -> AlmostContactReport {
    let d = a.dim();
    let eta_xi = &a.eta.eval(&[&a.xi]).expect("same chart") - &Scalar::one();
    let phi2 = a.phi.compose(&a.phi).expect("same chart");
    let mut phi_squared = Vec::new();
    for j in 0..d {
        let dj = MultiVector::partial(d, j);
        let ej = a.eta.coeff(&[j]);
        let r = phi2
            .image(j)
            .add(&dj)
            .and_then(|v| v.sub(&a.xi.scale(&ej)))
            .expect("same chart");
        if !r.is_zero() {
            phi_squared.push((j, r));
        }
    }
    AlmostContactReport {
        eta_xi,
        phi_squared,
        phi_xi: a.phi.apply(&a.xi).expect("same chart"),
        eta_phi: a.phi.pullback(&a.eta).expect("same chart"),
    }
}

fn require_almost_contact(a: &AlmostContact) -> Result<()> {
    let r = almost_contact_check(a);
    if r.axioms_hold() {
        Ok(())
    } else {
        Err(GeoError::NotAlmostContact("the almost contact axioms fail".into()))
    }
}

/// The endomorphism `J(X, f) - J*(alpha, g)` and `E = F + Ann(F)` with
/// `F = {J(X, f) + i (X, f)}`.
#[derive(Clone, Debug)]
pub struct AlmostContactGac {
    pub endo: EndoJ,
    pub f: SubBundle,
    pub e: SubBundle,
}

pub fn gac_from_almost_contact(a: &AlmostContact) -> Result<AlmostContactGac> {
    require_almost_contact(a)?;
    let d = a.dim();
    let j = a.j_matrix();
    let zero = linalg::zeros(d + 1, d + 1);
    let endo = EndoJ::from_blocks(j.clone(), zero.clone(), zero, linalg::neg(&linalg::transpose(&j)))?;
    let i = Scalar::i();
    let gens: Vec<E1Section> = (0..=d)
        .map(|k| {
            let mut v: Vec<Scalar> = (0..=d).map(|r| j[r][k].clone()).collect();
            v[k] = &v[k] + &i;
            v.extend(std::iter::repeat(Scalar::zero()).take(d + 1));
            E1Section::from_vec(d, &v)
        })
        .collect();
    let f = SubBundle::complex(gens)?.basis();
    let e = f.sum(&f.annihilator()?)?;
    Ok(AlmostContactGac { endo, f, e })
}

/// Consistency of the constructed bundle with the eigenbundle of the endomorphism.
pub fn gac_consistency(endo: &EndoJ, e: &SubBundle) -> Result<bool> {
    Ok(endo.eigenbundle(Sign::Plus)?.equal_span(e))
}

#[derive(Clone, Debug)]
pub struct NormalityReport {
    /// Frame pairs `(i, j)`, `i < j`, with `N(@i, @j) + d eta(@i, @j) xi != 0`.
    pub failures: Vec<(usize, usize, MultiVector)>,
    /// Lemma identities that fail on a normal structure.
    pub lemma: Vec<String>,
}

impl NormalityReport {
    pub fn is_normal(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.is_normal() && self.lemma.is_empty())
    }
}

impl ToCertificate for NormalityReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        for (i, j, r) in &self.failures {
            c = c.witness(format!(
                "N(@{0}, @{1}) + deta(@{0}, @{1}) xi = {2}",
                names[*i],
                names[*j],
                r.to_text(names)
            ));
        }
        for l in &self.lemma {
            c = c.witness(format!("internal: {l}"));
        }
        if self.is_normal() && self.lemma.is_empty() {
            c = c.cert("normality tensor vanishes on all frame pairs");
            c = c.cert("d eta(X, xi) = 0, eta[phi X, xi] = 0, [phi X, xi] = phi[X, xi], d eta(phi X, Y) = d eta(phi Y, X)");
        }
        c
    }
}

pub fn normality_check(a: &AlmostContact) -> Result<NormalityReport> {
    require_almost_contact(a)?;
    let d = a.dim();
    let de = a.eta.d();
    let frame: Vec<MultiVector> = (0..d).map(|k| MultiVector::partial(d, k)).collect();
    let mut failures = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let n = nijenhuis(&a.phi, &frame[i], &frame[j])?;
            let r = n.add(&a.xi.scale(&de.eval(&[&frame[i], &frame[j]])?))?;
            if !r.is_zero() {
                failures.push((i, j, r));
            }
        }
    }
    let lemma = if failures.is_empty() { lemma_identities(a)? } else { Vec::new() };
    Ok(NormalityReport { failures, lemma })
}

/// The four identities every normal structure satisfies, checked on the
/// frame; returns the ones that fail.
pub fn lemma_identities(a: &AlmostContact) -> Result<Vec<String>> {
    let d = a.dim();
    let de = a.eta.d();
    let frame: Vec<MultiVector> = (0..d).map(|k| MultiVector::partial(d, k)).collect();
    let mut bad = Vec::new();
    for (i, x) in frame.iter().enumerate() {
        let phx = a.phi.apply(x)?;
        if !de.eval(&[x, &a.xi])?.is_zero() {
            bad.push(format!("d eta(@{i}, xi) != 0"));
        }
        let br = phx.lie_bracket(&a.xi)?;
        if !a.eta.eval(&[&br])?.is_zero() {
            bad.push(format!("eta[phi @{i}, xi] != 0"));
        }
        if br != a.phi.apply(&x.lie_bracket(&a.xi)?)? {
            bad.push(format!("[phi @{i}, xi] != phi[@{i}, xi]"));
        }
        for (j, y) in frame.iter().enumerate() {
            let l = de.eval(&[&phx, y])?;
            let r = de.eval(&[&a.phi.apply(y)?, x])?;
            if l != r {
                bad.push(format!("d eta(phi @{i}, @{j}) != d eta(phi @{j}, @{i})"));
            }
        }
    }
    Ok(bad)
}
