//! The bundle E^1(M) = (TM x R) + (T*M x R) with its pairing and bracket.

mod bracket;
mod endo;
mod section;
mod subbundle;
mod tilde;

pub use bracket::dorfman;
pub use endo::{EndoJ, EndoReport, Sign};
pub use section::{component_name, E1Section};
pub use subbundle::{BracketFailure, DirectSumReport, IntegrabilityReport, IsotropyReport, SubBundle};
pub use tilde::{pairing, tilde_d, tilde_i, tilde_lie, FormPair};
