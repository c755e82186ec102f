//! Exterior calculus on a chart: forms, multivector fields, (1,1)-tensors.

mod alternating;
mod form;
mod multivector;
mod tensor;

pub use form::DiffForm;
pub use multivector::MultiVector;
pub use tensor::{nijenhuis, Tensor11};
