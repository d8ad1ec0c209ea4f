//! Exact rational polynomial arithmetic in `t` and in `t, p_1, …, p_{n-1}`.

mod multi;
mod parse;
mod rational;
mod render;
mod uni;

pub use multi::{presentation_name, Monomial, MonomialOrder, MultiPoly};
pub use parse::{parse_generator_product, parse_multipoly, parse_unipoly};
pub use rational::{fmt_rational, int, parse_rational, rat, Rational};
pub use uni::{has_nonnegative_integer_coeffs, UniPoly};

pub(crate) use render::join_pieces;
