//! Restriction of Peterson Schubert classes to the fixed points `w_B`.
//!
//! The generator restriction `p_i(w_B)` has two independent routes: a closed
//! form in terms of the head and tail of `B`, and a prefix sum over the
//! one-line notation of `w_B`. They are required to agree.

use num_bigint::BigInt;

use super::expansion::BasisExpansion;
use super::giambelli::giambelli_sigma;
use crate::combinatorics::{fixed_point_permutation, SubsetIndex};
use crate::error::{Error, Result};
use crate::poly::{Rational, UniPoly};

/// Integer weight `w` with `p_i(w_B) = w·t`, via the closed form
/// `(i - tail + 1)(head - i + 1)` for `i ∈ B`, and 0 otherwise.
pub fn generator_weight(i: u32, b: &SubsetIndex) -> Result<u64> {
    b.check_index(i)?;
    if !b.contains(i) {
        return Ok(0);
    }
    let run = b.substring_of(i)?;
    Ok(u64::from(i - run.lo + 1) * u64::from(run.hi - i + 1))
}

/// Integer weight from `Σ_{j ≤ i} (w_B(j) - j)`.
pub fn generator_weight_one_line(i: u32, b: &SubsetIndex) -> Result<i64> {
    b.check_index(i)?;
    let w = fixed_point_permutation(b);
    Ok((1..=i).map(|j| i64::from(w.apply(j)) - i64::from(j)).sum())
}

/// `p_i(w_B)`.
pub fn restrict_generator(i: u32, b: &SubsetIndex) -> Result<UniPoly> {
    let w = generator_weight(i, b)?;
    Ok(UniPoly::monomial(
        Rational::from_integer(BigInt::from(w)),
        1,
    ))
}

/// `p_A(w_B) = σ(A)·∏_{j∈A} p_j(w_B)`.
pub fn restrict_basis_class(a: &SubsetIndex, b: &SubsetIndex) -> Result<UniPoly> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank() as usize,
            right: b.rank() as usize,
        });
    }
    if !a.is_subset_of(b) {
        return Ok(UniPoly::zero());
    }
    let mut weight = BigInt::from(1);
    for j in a.members() {
        weight *= BigInt::from(generator_weight(j, b)?);
    }
    let value = giambelli_sigma(a) * Rational::from_integer(weight);
    Ok(UniPoly::monomial(value, a.len()))
}

/// `Σ_A e[A]·p_A(w_B)`.
pub fn restrict_class(e: &BasisExpansion, b: &SubsetIndex) -> Result<UniPoly> {
    if e.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: e.rank() as usize,
            right: b.rank() as usize,
        });
    }
    let mut acc = UniPoly::zero();
    for (a, c) in e.iter() {
        if a.is_subset_of(b) {
            acc = &acc + &(c * &restrict_basis_class(a, b)?);
        }
    }
    Ok(acc)
}
