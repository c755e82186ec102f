//! Exact linear algebra over the field of rational functions.
//!
//! Pivots are chosen by lowest total degree (then fewest terms) to keep
//! intermediate expressions small.

use crate::symcore::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn zeros(r: usize, c: usize) -> Matrix {
    vec![vec![Scalar::zero(); c]; r]
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..k)
                        .filter(|&l| !a[i][l].is_zero() && !b[l][j].is_zero())
                        .map(|l| &a[i][l] * &b[l][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let c = a.first().map_or(0, Vec::len);
    (0..c).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn scale(a: &Matrix, s: &Scalar) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn neg(a: &Matrix) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

pub fn is_zero(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(Scalar::is_zero))
}

/// Rank together with a nonvanishing maximal minor.
#[derive(Clone, Debug, PartialEq)]
pub struct RankInfo {
    pub rank: usize,
    /// Determinant of the selected `rank x rank` minor (1 when rank is 0).
    pub minor: Scalar,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn better(a: &Scalar, b: &Scalar) -> bool {
    a.complexity() < b.complexity()
}

/// Fraction-free (Bareiss) elimination with full pivoting.
pub fn rank_info(a: &Matrix) -> RankInfo {
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let mut row_perm: Vec<usize> = (0..nr).collect();
    let mut col_perm: Vec<usize> = (0..nc).collect();
    let mut prev = Scalar::one();
    let mut k = 0;
    while k < nr.min(nc) {
        let mut best: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                if m[i][j].is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| better(&m[i][j], &m[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != k {
            m.swap(pi, k);
            row_perm.swap(pi, k);
        }
        if pj != k {
            for r in m.iter_mut() {
                r.swap(pj, k);
            }
            col_perm.swap(pj, k);
        }
        let piv = m[k][k].clone();
        for i in k + 1..nr {
            let lead = m[i][k].clone();
            for j in k + 1..nc {
                let v = &(&piv * &m[i][j]) - &(&lead * &m[k][j]);
                m[i][j] = &v / &prev;
            }
            m[i][k] = Scalar::zero();
        }
        prev = piv;
        k += 1;
    }
    let mut rows: Vec<usize> = row_perm[..k].to_vec();
    let mut cols: Vec<usize> = col_perm[..k].to_vec();
    let minor = if k == 0 {
        Scalar::one()
    } else {
        let sub: Matrix = rows.iter().map(|&r| cols.iter().map(|&c| a[r][c].clone()).collect()).collect();
        determinant(&sub)
    };
    rows.sort_unstable();
    cols.sort_unstable();
    RankInfo { rank: k, minor, rows, cols }
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).pivots.len()
}

/// Determinant by Bareiss elimination.
pub fn determinant(a: &Matrix) -> Scalar {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return Scalar::one();
    }
    let mut m = a.clone();
    let mut prev = Scalar::one();
    let mut sign = 1i32;
    for k in 0..n {
        let mut best: Option<usize> = None;
        for i in k..n {
            if !m[i][k].is_zero() && best.map_or(true, |b| better(&m[i][k], &m[b][k])) {
                best = Some(i);
            }
        }
        let Some(p) = best else { return Scalar::zero() };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        let piv = m[k][k].clone();
        for i in k + 1..n {
            let lead = m[i][k].clone();
            for j in k + 1..n {
                let v = &(&piv * &m[i][j]) - &(&lead * &m[k][j]);
                m[i][j] = &v / &prev;
            }
            m[i][k] = Scalar::zero();
        }
        prev = piv;
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Reduced row echelon form with the transformation `T` such that
/// `reduced = T * input`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub transform: Matrix,
    /// Pivot column of each of the first `pivots.len()` rows.
    pub pivots: Vec<usize>,
}

pub fn rref(a: &Matrix) -> Rref {
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let mut t = identity(nr);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let mut best: Option<usize> = None;
        for i in r..nr {
            if !m[i][c].is_zero() && best.map_or(true, |b| better(&m[i][c], &m[b][c])) {
                best = Some(i);
            }
        }
        let Some(p) = best else { continue };
        m.swap(p, r);
        t.swap(p, r);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for x in t[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nr {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..nc {
                if !m[r][j].is_zero() {
                    let v = &m[i][j] - &(&f * &m[r][j]);
                    m[i][j] = v;
                }
            }
            for j in 0..nr {
                if !t[r][j].is_zero() {
                    let v = &t[i][j] - &(&f * &t[r][j]);
                    t[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { reduced: m, transform: t, pivots }
}

/// Basis of `{v : A v = 0}`.
pub fn null_space(a: &Matrix, ncols: usize) -> Vec<Vec<Scalar>> {
    if a.is_empty() {
        return (0..ncols)
            .map(|k| (0..ncols).map(|j| if j == k { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
    }
    let rr = rref(a);
    let free: Vec<usize> = (0..ncols).filter(|c| !rr.pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Scalar::zero(); ncols];
            v[fc] = Scalar::one();
            for (row, &pc) in rr.pivots.iter().enumerate() {
                v[pc] = -&rr.reduced[row][fc];
            }
            v
        })
        .collect()
}

/// Outcome of reducing a vector against the row space of a matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// Coefficients on the original rows.
    Member(Vec<Scalar>),
    /// First nonzero entry of the canonical residual.
    NonMember { index: usize, residual: Vec<Scalar> },
}

/// Decides whether `v` lies in the row space of `rows`.
pub fn row_space_membership(rows: &Matrix, v: &[Scalar]) -> Membership {
    if rows.is_empty() {
        return match v.iter().position(|x| !x.is_zero()) {
            None => Membership::Member(Vec::new()),
            Some(index) => Membership::NonMember { index, residual: v.to_vec() },
        };
    }
    let rr = rref(rows);
    reduce_against(&rr, rows.len(), v)
}

pub(crate) fn reduce_against(rr: &Rref, nrows: usize, v: &[Scalar]) -> Membership {
    let mut residual = v.to_vec();
    let mut coeffs = vec![Scalar::zero(); nrows];
    for (row, &pc) in rr.pivots.iter().enumerate() {
        let f = residual[pc].clone();
        if f.is_zero() {
            continue;
        }
        for (j, x) in rr.reduced[row].iter().enumerate() {
            if !x.is_zero() {
                residual[j] = &residual[j] - &(&f * x);
            }
        }
        for (j, x) in rr.transform[row].iter().enumerate() {
            if !x.is_zero() {
                coeffs[j] = &coeffs[j] + &(&f * x);
            }
        }
    }
    match residual.iter().position(|x| !x.is_zero()) {
        None => Membership::Member(coeffs),
        Some(index) => Membership::NonMember { index, residual },
    }
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let rr = rref(&aug);
    if rr.pivots.len() < n || rr.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(rr.reduced.iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
    fn x() -> Scalar {
        Scalar::coord(0)
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![s(1), s(2)], vec![s(3), s(4)]];
        assert_eq!(determinant(&m), s(-2));
        let m = vec![vec![x(), s(1)], vec![s(1), x()]];
        assert_eq!(determinant(&m), &(&x() * &x()) - &s(1));
        let m = vec![vec![s(0), s(1), s(0)], vec![s(1), s(0), s(0)], vec![s(0), s(0), x()]];
        assert_eq!(determinant(&m), -x());
    }

    #[test]
    fn rank_and_minor() {
        let m = vec![vec![x(), s(1), s(0)], vec![&x() * &x(), x(), s(0)]];
        let info = rank_info(&m);
        assert_eq!(info.rank, 1);
        let m = vec![vec![s(1), s(0), s(0)], vec![s(0), x(), s(0)]];
        let info = rank_info(&m);
        assert_eq!(info.rank, 2);
        assert_eq!(info.minor, x());
    }

    #[test]
    fn null_space_and_membership() {
        let m = vec![vec![s(1), s(1), s(0)], vec![s(0), s(0), s(1)]];
        let ns = null_space(&m, 3);
        assert_eq!(ns, vec![vec![s(-1), s(1), s(0)]]);
        match row_space_membership(&m, &[s(2), s(2), s(5)]) {
            Membership::Member(c) => assert_eq!(c, vec![s(2), s(5)]),
            other => panic!("{other:?}"),
        }
        match row_space_membership(&m, &[s(1), s(0), s(0)]) {
            Membership::NonMember { index, .. } => assert_eq!(index, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![x(), s(1)], vec![s(0), s(2)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert!(inverse(&vec![vec![x(), x()], vec![s(1), s(1)]]).is_none());
    }
}
