use std::sync::OnceLock;

use super::bracket::dorfman;
use super::section::{component_name, E1Section};
use super::tilde::pairing;
use crate::certificate::{Certificate, Nonvanishing, ToCertificate, Verdict};
use crate::error::{GeoError, Result};
use crate::linalg::{self, Matrix, Membership, RankInfo, Rref};
use crate::symcore::{Chart, Scalar};

/// A sub-bundle of E^1(M) (or its complexification) given by generators.
///
/// Rank data is computed over the field of rational functions and cached.
#[derive(Debug)]
pub struct SubBundle {
    dim: usize,
    generators: Vec<E1Section>,
    complexified: bool,
    rank: OnceLock<RankInfo>,
    rref: OnceLock<Rref>,
}

impl Clone for SubBundle {
    fn clone(&self) -> Self {
        SubBundle {
            dim: self.dim,
            generators: self.generators.clone(),
            complexified: self.complexified,
            rank: self.rank.clone(),
            rref: self.rref.clone(),
        }
    }
}

impl PartialEq for SubBundle {
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim && self.complexified == o.complexified && self.generators == o.generators
    }
}

impl SubBundle {
    pub fn new(generators: Vec<E1Section>, complexified: bool) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(GeoError::BadInput("a sub-bundle needs at least one generator".into()));
        };
        let dim = first.dim();
        for g in &generators {
            crate::error::same_dim(dim, g.dim())?;
            if !complexified && !g.is_real() {
                return Err(GeoError::BadInput(
                    "complex coefficients in a real sub-bundle".into(),
                ));
            }
        }
        Ok(Self::raw(dim, generators, complexified))
    }

    pub fn real(generators: Vec<E1Section>) -> Result<Self> {
        Self::new(generators, false)
    }

    pub fn complex(generators: Vec<E1Section>) -> Result<Self> {
        Self::new(generators, true)
    }

    /// The zero sub-bundle.
    pub fn zero(dim: usize, complexified: bool) -> Self {
        Self::raw(dim, Vec::new(), complexified)
    }

    fn raw(dim: usize, generators: Vec<E1Section>, complexified: bool) -> Self {
        SubBundle { dim, generators, complexified, rank: OnceLock::new(), rref: OnceLock::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank of a maximally isotropic sub-bundle: `dim + 1`.
    pub fn half_rank(&self) -> usize {
        self.dim + 1
    }

    pub fn generators(&self) -> &[E1Section] {
        &self.generators
    }

    pub fn is_complexified(&self) -> bool {
        self.complexified
    }

    /// Generators as rows in the fiber frame.
    pub fn matrix(&self) -> Matrix {
        self.generators.iter().map(E1Section::to_vec).collect()
    }

    pub fn rank_info(&self) -> &RankInfo {
        self.rank.get_or_init(|| linalg::rank_info(&self.matrix()))
    }

    pub fn rank(&self) -> usize {
        self.rank_info().rank
    }

    fn reduced(&self) -> &Rref {
        self.rref.get_or_init(|| linalg::rref(&self.matrix()))
    }

    /// Decides `e in span(generators)`, with coefficients or a residual.
    pub fn span_membership(&self, e: &E1Section) -> Membership {
        let v = e.to_vec();
        if self.generators.is_empty() {
            return linalg::row_space_membership(&Vec::new(), &v);
        }
        linalg::reduce_against(self.reduced(), self.generators.len(), &v)
    }

    pub fn contains(&self, e: &E1Section) -> bool {
        matches!(self.span_membership(e), Membership::Member(_))
    }

    /// Mutual containment of spans.
    pub fn equal_span(&self, o: &SubBundle) -> bool {
        self.dim == o.dim
            && self.generators.iter().all(|g| o.contains(g))
            && o.generators.iter().all(|g| self.contains(g))
    }

    /// The independent generators picked by the rank computation.
    pub fn basis(&self) -> SubBundle {
        let rows = &self.rank_info().rows;
        let gens = rows.iter().map(|&r| self.generators[r].clone()).collect();
        Self::raw(self.dim, gens, self.complexified)
    }

    /// Generators of both bundles together.
    pub fn sum(&self, o: &SubBundle) -> Result<SubBundle> {
        crate::error::same_dim(self.dim, o.dim)?;
        let mut gens = self.generators.clone();
        gens.extend(o.generators.iter().cloned());
        Ok(Self::raw(self.dim, gens, self.complexified || o.complexified))
    }

    /// Image under a fiberwise map of sections.
    pub fn map(&self, f: impl Fn(&E1Section) -> E1Section) -> SubBundle {
        Self::raw(self.dim, self.generators.iter().map(f).collect(), self.complexified)
    }

    pub fn conjugate(&self) -> Result<SubBundle> {
        if !self.complexified {
            return Err(GeoError::NotComplex);
        }
        Ok(self.map(E1Section::conj))
    }

    pub fn isotropy_check(&self) -> IsotropyReport {
        let mut nonzero = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for (j, b) in self.generators.iter().enumerate().skip(i) {
                let p = pairing(a, b).expect("generators share the chart");
                if !p.is_zero() {
                    nonzero.push((i, j, p));
                }
            }
        }
        let info = self.rank_info();
        IsotropyReport {
            nonzero,
            rank: info.rank,
            expected: self.half_rank(),
            minor: Nonvanishing::classify(&info.minor),
        }
    }

    pub fn is_maximally_isotropic(&self) -> bool {
        self.isotropy_check().verdict().is_pass()
    }

    /// Closure of the generators under the bracket, pair by ordered pair.
    pub fn integrability_check(&self) -> IntegrabilityReport {
        let advisory = !self.is_maximally_isotropic();
        let mut failures = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for (j, b) in self.generators.iter().enumerate() {
                let br = dorfman(a, b).expect("generators share the chart");
                if let Membership::NonMember { index, residual } = self.span_membership(&br) {
                    failures.push(BracketFailure { i, j, bracket: br, index, value: residual[index].clone() });
                }
            }
        }
        IntegrabilityReport { advisory, failures }
    }

    /// `E + conj(E)` fills the complexified fiber.
    pub fn direct_sum_check(&self) -> DirectSumReport {
        let full = 2 * self.half_rank();
        let rank = self.rank();
        let mut m = self.matrix();
        m.extend(self.generators.iter().map(|g| g.conj().to_vec()));
        let info = linalg::rank_info(&m);
        DirectSumReport {
            rank,
            expected: self.half_rank(),
            total_rank: info.rank,
            full,
            det: if info.rank == full { Nonvanishing::classify(&info.minor) } else { Nonvanishing::IdenticallyZero },
        }
    }

    /// `Ann(F)`, the `(alpha, g)` with `i_X alpha + g f = 0` for all `(X, f)` in `F`.
    pub fn annihilator(&self) -> Result<SubBundle> {
        let d = self.dim;
        let mut rows = Matrix::new();
        for g in &self.generators {
            if !g.alpha.is_zero() || !g.g.is_zero() {
                return Err(GeoError::BadInput("annihilator input has a nonzero form part".into()));
            }
            let mut r = g.x.components();
            r.push(g.f.clone());
            rows.push(r);
        }
        let gens = linalg::null_space(&rows, d + 1)
            .into_iter()
            .map(|v| {
                let mut full = vec![Scalar::zero(); d + 1];
                full.extend(v);
                E1Section::from_vec(d, &full)
            })
            .collect();
        Ok(Self::raw(d, gens, self.complexified))
    }

    /// Declaration text, one generator per entry.
    pub fn to_text(&self, names: &[String]) -> Vec<String> {
        self.generators.iter().map(|g| g.to_text(names)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct IsotropyReport {
    /// Generator pairs `(i, j)` with nonzero pairing.
    pub nonzero: Vec<(usize, usize, Scalar)>,
    pub rank: usize,
    pub expected: usize,
    pub minor: Nonvanishing,
}

impl IsotropyReport {
    pub fn is_isotropic(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.rank == self.expected
    }

    pub fn verdict(&self) -> Verdict {
        if !self.is_isotropic() || !self.is_maximal() {
            Verdict::Fail
        } else {
            self.minor.verdict()
        }
    }
}

impl ToCertificate for IsotropyReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        for (i, j, p) in &self.nonzero {
            c = c.witness(format!("<g{i}, g{j}> = {}", p.to_text(names)));
        }
        if !self.is_maximal() {
            c = c.witness(format!("rank {} but maximal rank is {}", self.rank, self.expected));
        }
        c = c.cert(format!("rank = {}", self.rank));
        if self.is_maximal() {
            c.certificate.extend(self.minor.describe("rank minor", chart));
        }
        c
    }
}

#[derive(Clone, Debug)]
pub struct BracketFailure {
    pub i: usize,
    pub j: usize,
    pub bracket: E1Section,
    /// First nonzero component of the residual.
    pub index: usize,
    pub value: Scalar,
}

#[derive(Clone, Debug)]
pub struct IntegrabilityReport {
    /// Set when the input is not maximally isotropic.
    pub advisory: bool,
    pub failures: Vec<BracketFailure>,
}

impl IntegrabilityReport {
    pub fn is_integrable(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.is_integrable())
    }
}

impl ToCertificate for IntegrabilityReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        if let Some(f) = self.failures.first() {
            c = c
                .witness(format!("pair ({}, {})", f.i, f.j))
                .witness(format!("[g{}, g{}] = {}", f.i, f.j, f.bracket.to_text(names)))
                .witness(format!(
                    "residual {} = {}",
                    component_name(names, f.index),
                    f.value.to_text(names)
                ));
        }
        if self.advisory {
            c = c.cert("advisory: not maximally isotropic");
        }
        c.cert(format!("failing pairs = {}", self.failures.len()))
    }
}

#[derive(Clone, Debug)]
pub struct DirectSumReport {
    pub rank: usize,
    pub expected: usize,
    pub total_rank: usize,
    pub full: usize,
    pub det: Nonvanishing,
}

impl DirectSumReport {
    pub fn verdict(&self) -> Verdict {
        if self.rank != self.expected || self.total_rank != self.full {
            Verdict::Fail
        } else {
            self.det.verdict()
        }
    }
}

impl ToCertificate for DirectSumReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let mut c = Certificate::new(self.verdict());
        if self.rank != self.expected {
            c = c.witness(format!("rank(E) = {}, expected {}", self.rank, self.expected));
        }
        if self.total_rank != self.full {
            c = c.witness(format!(
                "rank(E + conj E) = {}, defect {}",
                self.total_rank,
                self.full - self.total_rank
            ));
        }
        c.certificate.extend(self.det.describe("det", chart));
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extcalc::{DiffForm, MultiVector};

    fn t(i: usize) -> E1Section {
        E1Section::frame(3, i)
    }

    fn tangent_bundle() -> SubBundle {
        SubBundle::real((0..4).map(t).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let l = SubBundle::real(vec![t(0), t(5)]).unwrap();
        assert_eq!(
            l.span_membership(&t(0)),
            Membership::Member(vec![Scalar::one(), Scalar::zero()])
        );
        assert_eq!(
            l.span_membership(&E1Section::zero(3)),
            Membership::Member(vec![Scalar::zero(), Scalar::zero()])
        );
        match SubBundle::real(vec![t(0)]).unwrap().span_membership(&t(1)) {
            Membership::NonMember { index, .. } => assert_eq!(index, 1),
            m => panic!("{m:?}"),
        }
    }

    #[test]
    fn isotropy_examples() {
        let r = tangent_bundle().isotropy_check();
        assert_eq!(r.verdict(), Verdict::Pass);
        let e = E1Section::new(MultiVector::partial(3, 0), Scalar::zero(), DiffForm::dx(3, 0), Scalar::zero())
            .unwrap();
        let r = SubBundle::real(vec![e]).unwrap().isotropy_check();
        assert!(!r.is_isotropic());
        assert_eq!(r.nonzero[0].2, Scalar::one());
    }

    #[test]
    fn tangent_bundle_is_integrable() {
        assert!(tangent_bundle().integrability_check().is_integrable());
    }

    #[test]
    fn conjugation() {
        let g = t(0).add(&t(1).scale(&Scalar::i())).unwrap();
        assert!(matches!(SubBundle::new(vec![g.clone()], false), Err(GeoError::BadInput(_))));
        let l = SubBundle::complex(vec![g.clone()]).unwrap();
        let c = l.conjugate().unwrap();
        assert_eq!(c.generators()[0], t(0).sub(&t(1).scale(&Scalar::i())).unwrap());
        assert_eq!(c.conjugate().unwrap(), l);
        assert!(matches!(tangent_bundle().conjugate(), Err(GeoError::NotComplex)));
    }

    #[test]
    fn real_bundle_is_not_a_direct_sum() {
        let r = tangent_bundle().direct_sum_check();
        assert_eq!(r.verdict(), Verdict::Fail);
        assert_eq!(r.full - r.total_rank, 4);
    }

    #[test]
    fn annihilators() {
        let f = SubBundle::real(vec![t(0)]).unwrap();
        let ann = f.annihilator().unwrap();
        let expected = SubBundle::real(vec![t(5), t(6), t(7)]).unwrap();
        assert!(ann.equal_span(&expected));
        assert!(tangent_bundle().annihilator().unwrap().generators().is_empty());
        assert!(matches!(expected.annihilator(), Err(GeoError::BadInput(_))));
    }
}
