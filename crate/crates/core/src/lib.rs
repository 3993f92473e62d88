//! Numerical toolkit for super operator systems on ℤ₂-graded Hilbert spaces.
//!
//! Everything is generic over the real scalar (`f32` or `f64`); the aliases
//! below fix it to `f64`, which is what the CLI and the verification suites use.

pub mod error;
pub mod graded;
pub mod group;
pub mod json;
pub mod linalg;
pub mod norms;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{CMat, CVec, Cx, Real};

pub type Operator = graded::GradedOperator<f64>;
pub type Omega = graded::OmegaUnitary<f64>;
pub type Operator32 = graded::GradedOperator<f32>;
