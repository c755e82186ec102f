//! Sparse alternating coefficient tables shared by forms and multivectors.

use std::collections::BTreeMap;

use crate::symcore::Scalar;

/// Coefficients on strictly increasing index tuples; absent tuples are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Alt {
    pub dim: usize,
    pub degree: usize,
    pub coeffs: BTreeMap<Vec<usize>, Scalar>,
}

/// Sign of the permutation sorting `idx` and whether it has repeats.
pub(crate) fn sort_sign(idx: &[usize]) -> (Vec<usize>, i32, bool) {
    let mut v = idx.to_vec();
    let mut sign = 1;
    // insertion sort counting transpositions
    for a in 1..v.len() {
        let mut b = a;
        while b > 0 && v[b - 1] > v[b] {
            v.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    let repeated = v.windows(2).any(|w| w[0] == w[1]);
    (v, sign, repeated)
}

/// Merges two increasing tuples; `None` if they share an index.
pub(crate) fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining a's
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, if inversions % 2 == 0 { 1 } else { -1 }))
}

pub(crate) fn signed(s: &Scalar, sign: i32) -> Scalar {
    if sign >= 0 {
        s.clone()
    } else {
        -s
    }
}

impl Alt {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Alt { dim, degree, coeffs: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, s: Scalar) -> Self {
        let mut a = Self::zero(dim, 0);
        a.add_term(Vec::new(), s);
        a
    }

    /// Adds `c` times the basis element on `idx` (any order; sign applied).
    pub fn add_unsorted(&mut self, idx: &[usize], c: Scalar) {
        let (sorted, sign, repeated) = sort_sign(idx);
        if repeated {
            return;
        }
        self.add_term(sorted, signed(&c, sign));
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        debug_assert_eq!(idx.len(), self.degree);
        debug_assert!(idx.iter().all(|&k| k < self.dim));
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = &*e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.coeffs.get(idx).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Alt) -> Alt {
        debug_assert_eq!(self.degree, o.degree);
        let mut out = self.clone();
        for (k, v) in &o.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, o: &Alt) -> Alt {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Alt {
        self.map(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> Alt {
        if s.is_zero() {
            return Alt::zero(self.dim, self.degree);
        }
        self.map(|c| c * s)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Alt {
        let mut out = Alt::zero(self.dim, self.degree);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    pub fn wedge(&self, o: &Alt) -> Alt {
        let degree = self.degree + o.degree;
        let mut out = Alt::zero(self.dim, degree);
        if degree > self.dim {
            return out;
        }
        for (ka, va) in &self.coeffs {
            for (kb, vb) in &o.coeffs {
                if let Some((idx, sign)) = merge_sign(ka, kb) {
                    out.add_term(idx, signed(&(va * vb), sign));
                }
            }
        }
        out
    }

    /// Partial derivative of every coefficient.
    pub fn diff_coeffs(&self, v: usize) -> Alt {
        self.map(|c| c.diff(v))
    }

    /// Contraction of the first slot with a degree-1 dual object given by
    /// its components: `(i_v a)(..) = a(v, ..)`.
    pub fn contract_first(&self, v: &[Scalar]) -> Alt {
        assert!(self.degree >= 1);
        let mut out = Alt::zero(self.dim, self.degree - 1);
        for (k, c) in &self.coeffs {
            for (p, &idx) in k.iter().enumerate() {
                let comp = &v[idx];
                if comp.is_zero() {
                    continue;
                }
                let mut rest = k.clone();
                rest.remove(p);
                let t = comp * c;
                out.add_term(rest, if p % 2 == 0 { t } else { -t });
            }
        }
        out
    }

    /// Right derivative with respect to the odd generator `j`: removes `j`
    /// from the right end of each monomial.
    pub fn right_derivative(&self, j: usize) -> Alt {
        assert!(self.degree >= 1);
        let mut out = Alt::zero(self.dim, self.degree - 1);
        for (k, c) in &self.coeffs {
            if let Some(p) = k.iter().position(|&x| x == j) {
                let mut rest = k.clone();
                rest.remove(p);
                let sign = if (self.degree - 1 - p) % 2 == 0 { 1 } else { -1 };
                out.add_term(rest, signed(c, sign));
            }
        }
        out
    }

    /// Degree-1 components as a dense vector.
    pub fn components(&self) -> Vec<Scalar> {
        assert_eq!(self.degree, 1);
        (0..self.dim).map(|k| self.get(&[k])).collect()
    }

    pub fn from_components(comps: &[Scalar]) -> Alt {
        let mut out = Alt::zero(comps.len(), 1);
        for (k, c) in comps.iter().enumerate() {
            out.add_term(vec![k], c.clone());
        }
        out
    }

    /// `(coef)*dx^dy + ...` using `prefix` before each coordinate name.
    pub fn to_text(&self, names: &[String], prefix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        if self.degree == 0 {
            return self.get(&[]).to_text(names);
        }
        self.coeffs
            .iter()
            .map(|(k, c)| {
                let basis: Vec<String> = k
                    .iter()
                    .map(|&x| {
                        let n = names.get(x).cloned().unwrap_or_else(|| format!("x{}", x + 1));
                        format!("{prefix}{n}")
                    })
                    .collect();
                format!("({})*{}", c.to_text(names), basis.join("^"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_bookkeeping() {
        assert_eq!(sort_sign(&[2, 0, 1]), (vec![0, 1, 2], 1, false));
        assert_eq!(sort_sign(&[1, 0]), (vec![0, 1], -1, false));
        assert!(sort_sign(&[1, 1]).2);
        assert_eq!(merge_sign(&[2], &[0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(merge_sign(&[1], &[0]), Some((vec![0, 1], -1)));
        assert_eq!(merge_sign(&[0, 2], &[2]), None);
    }
}
