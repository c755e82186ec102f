use crate::error::{GeoError, Result};

/// Names reserved by the scalar syntax.
const RESERVED: &[&str] = &["i", "d"];

/// An ordered list of distinct coordinate names on a single chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chart {
    coords: Vec<String>,
}

impl Chart {
    pub fn new<S: AsRef<str>>(coords: &[S]) -> Result<Self> {
        if coords.is_empty() {
            return Err(GeoError::InvalidChart("a chart needs at least one coordinate".into()));
        }
        let mut out: Vec<String> = Vec::with_capacity(coords.len());
        for c in coords {
            let c = c.as_ref();
            let valid = c
                .chars()
                .next()
                .is_some_and(|ch| ch.is_ascii_alphabetic() || ch == '_')
                && c.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_');
            if !valid {
                return Err(GeoError::InvalidChart(format!("`{c}` is not an identifier")));
            }
            if RESERVED.contains(&c) {
                return Err(GeoError::InvalidChart(format!("`{c}` is reserved")));
            }
            if out.iter().any(|o| o == c) {
                return Err(GeoError::InvalidChart(format!("duplicate coordinate `{c}`")));
            }
            out.push(c.to_string());
        }
        Ok(Chart { coords: out })
    }

    /// Standard chart `x1, ..., xd`.
    pub fn standard(dim: usize) -> Self {
        let names: Vec<String> = (1..=dim).map(|k| format!("x{k}")).collect();
        Chart::new(&names).expect("generated names are valid")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.coords
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| GeoError::UnknownCoordinate(name.to_string()))
    }

    /// `n` such that `dim = 2n + 1`.
    pub fn half_dim(&self) -> Result<usize> {
        if self.dim() % 2 == 0 {
            Err(GeoError::EvenDimension(self.dim()))
        } else {
            Ok(self.dim() / 2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Chart::new(&["x", "y", "z"]).is_ok());
        assert!(matches!(Chart::new(&["x", "x"]), Err(GeoError::InvalidChart(_))));
        assert!(matches!(Chart::new(&["i"]), Err(GeoError::InvalidChart(_))));
        assert!(matches!(Chart::new(&["1x"]), Err(GeoError::InvalidChart(_))));
        let c = Chart::new(&["x", "y", "z"]).unwrap();
        assert_eq!(c.index_of("z").unwrap(), 2);
        assert_eq!(c.index_of("w"), Err(GeoError::UnknownCoordinate("w".into())));
        assert_eq!(c.half_dim().unwrap(), 1);
        assert_eq!(Chart::standard(4).half_dim(), Err(GeoError::EvenDimension(4)));
    }
}
