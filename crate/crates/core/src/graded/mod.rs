//! Graded operators on `Ĥ = H_even ⊕ H_odd` and their algebra.

mod calculus;
mod construct;
mod operator;
mod random;
mod space;
mod unitary;

pub use calculus::{
    graded_abs, graded_spectrum, fiber_iso, iota, iota_inverse, is_epsilon_positive,
    is_epsilon_positive_by_form, is_epsilon_positive_by_spectrum, is_superpositive, is_superpositive_alt,
    kappa, kappa_conjugate, kappa_unconjugate, min_sesquilinear, sqrt_branch, twisted_product,
};
pub use construct::{standard_form_embed, swap_double};
pub use operator::GradedOperator;
pub use random::{iota_unitary, omega_hermitian, pseudo_unitary, random_graded, sample_graded, RandomKind};
pub use space::{GradedDim, GradedSpace, Grading};
pub use unitary::{
    is_pseudo_unitary, is_superunitary, lemma2_check, lemma2_gap, lemma2_search, lemma2_violation, OmegaUnitary,
};
