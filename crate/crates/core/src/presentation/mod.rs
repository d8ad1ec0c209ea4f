//! The presentation `ℚ[t, p_1, …, p_{n-1}]/K`: Monk relations, their
//! Giambelli images, and Gröbner-basis checks on the ideal `K`.

mod checks;
mod groebner;
mod relations;

pub use checks::{
    localization_failures, quadratic_conjecture_check, quadratic_conjecture_check_with_limits,
    vanishing_check, VanishingCase, VanishingReport,
};
pub use groebner::{
    buchberger, buchberger_with_limits, normal_form, s_polynomial, GroebnerBasis, GroebnerLimits,
};
pub use relations::{
    apply_giambelli, extended_name, extended_nvars, extended_variable, giambelli_q_relation,
    giambelli_substitution, ideal_j, ideal_k, monk_relation, uni_to_multi, Relation, RelationKind,
    RelationSet, MAX_EXTENDED_RANK,
};

/// The twelve generators listed for `n = 4`.
pub const N4_GENERATORS: [&str; 12] = [
    "2*p1^2 - 2*t*p1 - p1*p2",
    "2*p2^2 - 2*t*p2 - p1*p2 - p2*p3",
    "2*p3^2 - 2*t*p3 - p2*p3",
    "3*p1^2*p2 - 6*t*p1*p2 - p1*p2*p3",
    "3*p1*p2^2 - 6*t*p1*p2 - 2*p1*p2*p3",
    "2*p1^2*p3 - 2*t*p1*p3 - p1*p2*p3",
    "2*p1*p3^2 - 2*t*p1*p3 - p1*p2*p3",
    "3*p2^2*p3 - 6*t*p2*p3 - 2*p1*p2*p3",
    "3*p2*p3^2 - 6*t*p2*p3 - p1*p2*p3",
    "p1^2*p2*p3 - 3*t*p1*p2*p3",
    "p1*p2^2*p3 - 4*t*p1*p2*p3",
    "p1*p2*p3^2 - 3*t*p1*p2*p3",
];
