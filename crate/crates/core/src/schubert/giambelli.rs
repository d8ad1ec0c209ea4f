use num_bigint::BigInt;
use num_traits::One;

use super::expansion::BasisExpansion;
use super::monk::expand_monomial;
use crate::combinatorics::{factorial, SubsetIndex};
use crate::error::Result;
use crate::poly::{Monomial, MultiPoly, Rational};

/// `σ(A) = ∏ 1/(hi - lo + 1)!` over the maximal substrings of `A`.
pub fn giambelli_sigma(a: &SubsetIndex) -> Rational {
    let denom = a.substrings().iter().fold(BigInt::one(), |acc, run| {
        acc * BigInt::from(factorial(run.len()))
    });
    Rational::new(BigInt::one(), denom)
}

/// `σ(A)·∏_{j∈A} p_j` in `ℚ[t, p_1, …, p_{n-1}]`.
pub fn giambelli_monomial(a: &SubsetIndex) -> MultiPoly {
    let n = a.rank() as usize;
    let mut exps = vec![0u32; n];
    for j in a.members() {
        exps[j as usize] = 1;
    }
    MultiPoly::term(Monomial::from_exponents(exps), giambelli_sigma(a))
}

/// Whether `σ(A)·∏_{j∈A} p_j`, expanded through Monk products, is exactly `p_A`.
pub fn giambelli_verify(a: &SubsetIndex) -> Result<bool> {
    let factors: Vec<u32> = a.members().collect();
    let expanded = expand_monomial(a.rank(), &factors)?;
    Ok(expanded.scale_rational(&giambelli_sigma(a)) == BasisExpansion::basis(*a))
}
