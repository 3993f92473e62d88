//! Strong and σ-strong matrix norms, their axioms, and contractivity checks
//! for linear maps.

mod axioms;
mod contractive;
mod maps;
mod radius;
mod strong;

pub use axioms::{
    check_sigma_axioms, COMPRESSION, DERIVED_IS_OPERATOR, DIRECT_SUM, DISPLAY_CHAIN, HERMITIAN_CORNER,
};
pub use contractive::{hermitian_contractive_check, rsc_check, HermitianReport, RscConfig, RscReport};
pub use maps::{full_basis, lower_triangular_basis, LinearMapSpec};
pub use radius::{numerical_radius, RadiusResult};
pub use strong::{
    big_r_norm, corner_embed, cross_embed, derived_matrix_norm, derived_sigma_norm, direct_sum, r_norm,
    scalar_compress, seminorm_big_p_omega, seminorm_p_omega, sigma_strong_norm, strong_norm, CircleSup,
};
