//! Monk, Giambelli and Stirling formulas, fixed-point restriction and
//! stability for the Peterson Schubert basis `{p_A}`.

mod expansion;
mod giambelli;
mod monk;
mod restriction;
mod stability;
mod stirling;

pub use expansion::{term, BasisExpansion};
pub use giambelli::{giambelli_monomial, giambelli_sigma, giambelli_verify};
pub use monk::{
    expand_monomial, expand_monomial_in_order, monk_coefficient, monk_product,
    multiply_by_generator, MonkCoefficient,
};
pub use restriction::{
    generator_weight, generator_weight_one_line, restrict_basis_class, restrict_class,
    restrict_generator,
};
pub use stability::{stability_lift, stability_restrict};
pub use stirling::stirling_expansion;
