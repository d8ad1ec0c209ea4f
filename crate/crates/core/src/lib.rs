//! Equivariant Schubert calculus on type-A Peterson varieties: fixed points,
//! the Peterson Schubert basis and its Monk, Giambelli and Stirling rules,
//! a fixed-point localization oracle, and the ring presentation.

pub mod combinatorics;
pub mod error;
pub mod json;
pub mod oracle;
pub mod poly;
pub mod presentation;
pub mod schubert;
pub mod verify;

pub use combinatorics::{Permutation, SubsetIndex};
pub use error::{Error, Result};
pub use oracle::LocalizedClass;
pub use poly::{MultiPoly, Rational, UniPoly};
pub use presentation::{GroebnerBasis, RelationSet};
pub use schubert::BasisExpansion;
pub use verify::{Limits, Suite, VerifyReport};
