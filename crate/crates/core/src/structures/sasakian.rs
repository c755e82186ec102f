use crate::certificate::{Certificate, ToCertificate, Verdict};
use crate::e1::{component_name, EndoJ, Sign};
use crate::error::{same_dim, GeoError, Result};
use crate::linalg::{self, Matrix};
use crate::symcore::{Chart, GaussRational, Scalar};

#[derive(Clone, Debug)]
pub struct PointResult {
    pub point: Vec<GaussRational>,
    /// Order of the first leading principal minor that is not positive.
    pub failing_minor: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct SasakianReport {
    /// First nonzero entry of `J1 J2 - J2 J1`.
    pub commutator: Option<(usize, usize, Scalar)>,
    /// First nonzero entry of `Gram - Gram^T`.
    pub asymmetry: Option<(usize, usize, Scalar)>,
    pub points: Vec<PointResult>,
    pub skipped_poles: usize,
    pub integrable: [bool; 2],
}

impl SasakianReport {
    /// Positivity is only sampled, so the best verdict is generic.
    pub fn verdict(&self) -> Verdict {
        let ok = self.commutator.is_none()
            && self.asymmetry.is_none()
            && !self.points.is_empty()
            && self.points.iter().all(|p| p.failing_minor.is_none());
        if ok {
            Verdict::GenericPass
        } else {
            Verdict::Fail
        }
    }
}

fn point_text(p: &[GaussRational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

impl ToCertificate for SasakianReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        if let Some((i, j, v)) = &self.commutator {
            c = c.witness(format!(
                "J1 J2 - J2 J1 at ({}, {}) = {}",
                component_name(names, *i),
                component_name(names, *j),
                v.to_text(names)
            ));
        }
        if let Some((i, j, v)) = &self.asymmetry {
            c = c.witness(format!(
                "G not symmetric at ({}, {}): {}",
                component_name(names, *i),
                component_name(names, *j),
                v.to_text(names)
            ));
        }
        if self.points.is_empty() {
            c = c.witness("no pole-free sample point");
        }
        for p in &self.points {
            match p.failing_minor {
                Some(k) => c = c.witness(format!("minor {k} not positive at {}", point_text(&p.point))),
                None => c = c.cert(format!("positive at {}", point_text(&p.point))),
            }
        }
        if self.skipped_poles > 0 {
            c = c.cert(format!("skipped {} points at poles", self.skipped_poles));
        }
        c.cert(format!("J1 integrable: {}", self.integrable[0]))
            .cert(format!("J2 integrable: {}", self.integrable[1]))
    }
}

fn first_nonzero(m: &Matrix) -> Option<(usize, usize, Scalar)> {
    m.iter()
        .enumerate()
        .find_map(|(i, r)| r.iter().position(|x| !x.is_zero()).map(|j| (i, j, r[j].clone())))
}

fn is_positive(g: &GaussRational) -> bool {
    g.is_real() && g.re() > &num_rational::BigRational::from_integer(0.into())
}

/// Commutation of `J1, J2` and positivity of `G = -J1 J2` against the pairing,
/// the latter at each sample point.
pub fn gen_sasakian_check(j1: &EndoJ, j2: &EndoJ, points: &[Vec<GaussRational>]) -> Result<SasakianReport> {
    gen_sasakian_sampled(j1, j2, points, points.len())
}

/// As [`gen_sasakian_check`], stopping after `want` pole-free points.
pub fn gen_sasakian_sampled(
    j1: &EndoJ,
    j2: &EndoJ,
    candidates: &[Vec<GaussRational>],
    want: usize,
) -> Result<SasakianReport> {
    same_dim(j1.dim(), j2.dim())?;
    for j in [j1, j2] {
        if j.endo_check().verdict() != Verdict::Pass {
            return Err(GeoError::NotAlmostComplex("gen_sasakian needs two generalized almost contact structures".into()));
        }
    }
    let (a, b) = (j1.matrix(), j2.matrix());
    let commutator = first_nonzero(&linalg::add(&linalg::mat_mul(a, b), &linalg::neg(&linalg::mat_mul(b, a))));
    let g = linalg::neg(&linalg::mat_mul(a, b));
    let gram = linalg::mat_mul(&linalg::transpose(&g), &EndoJ::pairing_matrix(j1.dim()));
    let asymmetry = first_nonzero(&linalg::add(&gram, &linalg::neg(&linalg::transpose(&gram))));
    let mut results = Vec::new();
    let mut skipped = 0;
    'points: for p in candidates {
        if results.len() == want {
            break;
        }
        let mut vals: Matrix = Vec::with_capacity(gram.len());
        for row in &gram {
            let mut r = Vec::with_capacity(row.len());
            for x in row {
                match x.eval(p) {
                    Ok(v) => r.push(Scalar::constant(v)),
                    Err(_) => {
                        skipped += 1;
                        continue 'points;
                    }
                }
            }
            vals.push(r);
        }
        let failing_minor = (1..=vals.len()).find(|&k| {
            let sub: Matrix = vals[..k].iter().map(|r| r[..k].to_vec()).collect();
            let det = linalg::determinant(&sub).as_constant().expect("constant entries");
            !is_positive(&det)
        });
        results.push(PointResult { point: p.clone(), failing_minor });
    }
    let integrable = [j1, j2].map(|j| {
        j.eigenbundle(Sign::Plus).map(|e| e.integrability_check().is_integrable()).unwrap_or(false)
    });
    Ok(SasakianReport { commutator, asymmetry, points: results, skipped_poles: skipped, integrable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{gac_from_cosymplectic, CosymplecticPair};
    use crate::extcalc::DiffForm;

    fn j() -> EndoJ {
        let c = CosymplecticPair::new(DiffForm::monomial(3, &[0, 1], Scalar::one()), DiffForm::dx(3, 2)).unwrap();
        gac_from_cosymplectic(&c).unwrap().endo
    }

    fn pts() -> Vec<Vec<GaussRational>> {
        vec![vec![GaussRational::from_int(1), GaussRational::from_int(2), GaussRational::from_int(0)]]
    }

    #[test]
    fn opposite_structures_are_indefinite() {
        let r = gen_sasakian_check(&j(), &j().neg(), &pts()).unwrap();
        assert!(r.commutator.is_none());
        assert_eq!(r.points[0].failing_minor, Some(1));
        assert_eq!(r.verdict(), Verdict::Fail);
    }

    #[test]
    fn equal_structures_are_indefinite() {
        let r = gen_sasakian_check(&j(), &j(), &pts()).unwrap();
        assert!(r.commutator.is_none());
        assert!(r.points[0].failing_minor.is_some());
        assert_eq!(r.verdict(), Verdict::Fail);
    }

    #[test]
    fn rejects_non_structures() {
        assert!(matches!(
            gen_sasakian_check(&EndoJ::identity(3), &j(), &pts()),
            Err(GeoError::NotAlmostComplex(_))
        ));
    }
}
