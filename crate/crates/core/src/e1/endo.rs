use super::section::{component_name, E1Section};
use super::subbundle::SubBundle;
use crate::certificate::{Certificate, ToCertificate, Verdict};
use crate::error::{GeoError, Result};
use crate::linalg::{self, Matrix};
use crate::symcore::{Chart, Scalar};

/// A fiberwise endomorphism of E^1(M), as a `2(d+1)` square matrix acting
/// on the component vectors of [`E1Section::to_vec`].
///
/// Blocks: `A: TMxR -> TMxR`, `B: T*MxR -> TMxR`, `C: TMxR -> T*MxR`,
/// `D: T*MxR -> T*MxR`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoJ {
    dim: usize,
    m: Matrix,
}

impl EndoJ {
    pub fn from_blocks(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(GeoError::BadInput("empty blocks".into()));
        }
        for blk in [&a, &b, &c, &d] {
            if blk.len() != n || blk.iter().any(|r| r.len() != n) {
                return Err(GeoError::BadInput(format!("blocks must all be {n}x{n}")));
            }
        }
        let m = (0..2 * n)
            .map(|i| {
                let (l, r) = if i < n { (&a[i], &b[i]) } else { (&c[i - n], &d[i - n]) };
                l.iter().chain(r.iter()).cloned().collect()
            })
            .collect();
        Ok(EndoJ { dim: n - 1, m })
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        let n = m.len();
        if n < 4 || n % 2 != 0 || m.iter().any(|r| r.len() != n) {
            return Err(GeoError::BadInput("need an even square matrix of size at least 4".into()));
        }
        Ok(EndoJ { dim: n / 2 - 1, m })
    }

    pub fn identity(dim: usize) -> Self {
        EndoJ { dim, m: linalg::identity(2 * (dim + 1)) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// Block `(r, c)` with `0` the tangent side and `1` the cotangent side.
    pub fn block(&self, r: usize, c: usize) -> Matrix {
        let n = self.dim + 1;
        self.m[r * n..(r + 1) * n].iter().map(|row| row[c * n..(c + 1) * n].to_vec()).collect()
    }

    pub fn apply(&self, e: &E1Section) -> E1Section {
        E1Section::from_vec(self.dim, &linalg::mat_vec(&self.m, &e.to_vec()))
    }

    pub fn compose(&self, o: &EndoJ) -> Result<EndoJ> {
        crate::error::same_dim(self.dim, o.dim)?;
        Ok(EndoJ { dim: self.dim, m: linalg::mat_mul(&self.m, &o.m) })
    }

    pub fn neg(&self) -> EndoJ {
        EndoJ { dim: self.dim, m: linalg::neg(&self.m) }
    }

    /// Matrix of the pairing in the fiber frame.
    pub fn pairing_matrix(dim: usize) -> Matrix {
        let n = dim + 1;
        let half = Scalar::from_frac(1, 2);
        (0..2 * n)
            .map(|i| (0..2 * n).map(|j| if (i + n == j) || (j + n == i) { half.clone() } else { Scalar::zero() }).collect())
            .collect()
    }

    /// `J^2 = -id`, `J^T P J = P` and `J^T P = -P J`.
    pub fn endo_check(&self) -> EndoReport {
        let n2 = 2 * (self.dim + 1);
        let p = Self::pairing_matrix(self.dim);
        let sq = linalg::add(&linalg::mat_mul(&self.m, &self.m), &linalg::identity(n2));
        let jt = linalg::transpose(&self.m);
        let orth = linalg::add(&linalg::mat_mul(&linalg::mat_mul(&jt, &p), &self.m), &linalg::neg(&p));
        let skew = linalg::add(&linalg::mat_mul(&jt, &p), &linalg::mat_mul(&p, &self.m));
        EndoReport { square: first_nonzero(&sq), orthogonal: first_nonzero(&orth), skew: first_nonzero(&skew) }
    }

    /// `ker(J - i id)` for `Plus`, `ker(J + i id)` for `Minus`.
    pub fn eigenbundle(&self, sign: Sign) -> Result<SubBundle> {
        let r = self.endo_check();
        if r.verdict() != Verdict::Pass {
            return Err(GeoError::NotAlmostComplex(r.summary()));
        }
        let lambda = match sign {
            Sign::Plus => Scalar::i(),
            Sign::Minus => -Scalar::i(),
        };
        Ok(self.eigenspace(&lambda))
    }

    /// `ker(J - lambda id)`, without any precondition.
    pub fn eigenspace(&self, lambda: &Scalar) -> SubBundle {
        let n2 = 2 * (self.dim + 1);
        let shifted = linalg::add(&self.m, &linalg::scale(&linalg::identity(n2), &-lambda));
        let gens: Vec<E1Section> = linalg::null_space(&shifted, n2)
            .iter()
            .map(|v| E1Section::from_vec(self.dim, v))
            .collect();
        if gens.is_empty() {
            SubBundle::zero(self.dim, true)
        } else {
            SubBundle::complex(gens).expect("null vectors share the chart")
        }
    }

    pub fn to_text(&self, names: &[String]) -> Vec<String> {
        self.m
            .iter()
            .map(|r| r.iter().map(|x| x.to_text(names)).collect::<Vec<_>>().join(", "))
            .map(|r| format!("[{r}]"))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

fn first_nonzero(m: &Matrix) -> Option<(usize, usize, Scalar)> {
    m.iter().enumerate().find_map(|(i, r)| {
        r.iter().position(|x| !x.is_zero()).map(|j| (i, j, r[j].clone()))
    })
}

/// Entries are the first nonzero entry of each defect matrix.
#[derive(Clone, Debug)]
pub struct EndoReport {
    pub square: Option<(usize, usize, Scalar)>,
    pub orthogonal: Option<(usize, usize, Scalar)>,
    pub skew: Option<(usize, usize, Scalar)>,
}

impl EndoReport {
    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.square.is_none() && self.orthogonal.is_none() && self.skew.is_none())
    }

    fn summary(&self) -> String {
        let mut parts = Vec::new();
        if self.square.is_some() {
            parts.push("J^2 != -id");
        }
        if self.orthogonal.is_some() {
            parts.push("not orthogonal");
        }
        if self.skew.is_some() {
            parts.push("J* != -J");
        }
        parts.join(", ")
    }
}

impl ToCertificate for EndoReport {
    fn to_certificate(&self, chart: &Chart) -> Certificate {
        let names = chart.coords();
        let mut c = Certificate::new(self.verdict());
        let entries = [
            ("J^2 + id", &self.square),
            ("J^T P J - P", &self.orthogonal),
            ("J^T P + P J", &self.skew),
        ];
        for (label, e) in entries {
            match e {
                Some((i, j, v)) => {
                    c = c.witness(format!(
                        "{label} at ({}, {}) = {}",
                        component_name(names, *i),
                        component_name(names, *j),
                        v.to_text(names)
                    ))
                }
                None => c = c.cert(format!("{label} = 0")),
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ident(n: usize) -> Matrix {
        linalg::identity(n)
    }

    #[test]
    fn identity_fails() {
        let r = EndoJ::identity(3).endo_check();
        assert_eq!(r.verdict(), Verdict::Fail);
        assert!(r.square.is_some());
        assert!(r.orthogonal.is_none());
    }

    #[test]
    fn rotation_blocks_square_to_minus_one() {
        // B = -id, C = id: J^2 = -id, but the pairing changes sign.
        let j = EndoJ::from_blocks(linalg::zeros(2, 2), linalg::neg(&ident(2)), ident(2), linalg::zeros(2, 2))
            .unwrap();
        let r = j.endo_check();
        assert!(r.square.is_none());
        assert!(r.orthogonal.is_some());
        assert!(r.skew.is_some());
        assert!(matches!(j.eigenbundle(Sign::Plus), Err(GeoError::NotAlmostComplex(_))));
        let e = j.eigenspace(&Scalar::i());
        assert_eq!(e.rank(), 2);
        for g in e.generators() {
            let v = g.to_vec();
            for k in 0..2 {
                assert_eq!(v[k + 2], &v[k] * &-Scalar::i());
            }
        }
    }

    #[test]
    fn skew_rotation_passes() {
        // C skew and B = -C^-1.
        let s = |n: i64| Scalar::from_int(n);
        let c = vec![vec![s(0), s(1)], vec![s(-1), s(0)]];
        let b = vec![vec![s(0), s(1)], vec![s(-1), s(0)]];
        let j = EndoJ::from_blocks(linalg::zeros(2, 2), b, c, linalg::zeros(2, 2)).unwrap();
        assert_eq!(j.endo_check().verdict(), Verdict::Pass);
        let plus = j.eigenbundle(Sign::Plus).unwrap();
        let minus = j.eigenbundle(Sign::Minus).unwrap();
        assert_eq!(plus.rank(), 2);
        assert!(plus.conjugate().unwrap().equal_span(&minus));
        assert_eq!(plus.sum(&minus).unwrap().rank(), 4);
        assert!(plus.is_maximally_isotropic());
    }
}
