pub mod catalog;
pub mod codes;
pub mod error;
pub mod finite_field;
mod linalg;
pub mod ring_r;
pub mod skew_poly;

pub use codes::{Code, CodeOverR, ShiftKind};
pub use error::{Error, Result};
pub use finite_field::{Automorphism, FieldElement, FieldSpec};
pub use ring_r::RingElement;
pub use skew_poly::{FqPoly, RPoly, SkewPoly};
