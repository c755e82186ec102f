//! Exact coefficient arithmetic: rational functions over Q(i) on a chart.

mod chart;
mod gauss;
mod gcd;
mod parse;
mod poly;
mod scalar;

pub use chart::Chart;
pub use gauss::GaussRational;
pub use gcd::{content, gcd};
pub use parse::parse_scalar;
pub use poly::{Monomial, Poly, PolyDisplay};
pub use scalar::{Scalar, ScalarDisplay};

use crate::error::{GeoError, Result};

/// Binary field operations on scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Canonical form of a raw fraction.
pub fn scalar_normalize(num: Poly, den: Poly) -> Result<Scalar> {
    Scalar::normalize(num, den)
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// Partial derivative with respect to a named coordinate.
pub fn scalar_diff(chart: &Chart, a: &Scalar, coord: &str) -> Result<Scalar> {
    Ok(a.diff(chart.index_of(coord)?))
}

/// Exact evaluation at a point with one rational entry per coordinate.
pub fn scalar_eval(chart: &Chart, a: &Scalar, point: &[GaussRational]) -> Result<GaussRational> {
    if point.len() != chart.dim() {
        return Err(GeoError::BadInput(format!(
            "point has {} entries, chart has dimension {}",
            point.len(),
            chart.dim()
        )));
    }
    a.eval(point)
}
