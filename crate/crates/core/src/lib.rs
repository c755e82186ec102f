//! Chart-local exact engine for the algebroid E^1(M) = (TM x R) + (T*M x R):
//! exterior calculus, the extended Courant bracket, Dirac-type sub-bundles,
//! and checkers for contact, Jacobi, cosymplectic and almost contact
//! structures, driven by a small scene language.

pub mod certificate;
pub mod dsl;
pub mod e1;
pub mod error;
pub mod extcalc;
pub mod linalg;
pub mod structures;
pub mod symcore;

pub use error::{GeoError, Result};
