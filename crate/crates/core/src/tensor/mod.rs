//! Operator-space tensor norms on `M_a ⊗ M_b` with two-sided brackets.

mod bracket;
mod cstar;
mod dual;
mod element;
mod haagerup;
pub mod lmi;
mod projective;
mod star;

pub use bracket::{Method, NormBracket, TensorConfig, UpperWitness};
pub use cstar::{finite_dim_cstar_tensor, product_graded, PositivityCheck};
pub use dual::{dual_symmetrized_haagerup, DUAL_DIM_CAP};
pub use element::{TensorElement, Term};
pub use haagerup::{factorization_matrix, haagerup_norm, symmetrized_haagerup};
pub(crate) use haagerup::{apply_link, optimal_link};
pub use projective::projective_norm;
pub use star::{star_tensor, StarMode};
