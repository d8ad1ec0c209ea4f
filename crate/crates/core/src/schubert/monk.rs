//! Monk multiplication `p_i · p_A` in the Peterson basis.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::expansion::BasisExpansion;
use super::restriction::restrict_generator;
use crate::combinatorics::{binomial, SubsetIndex};
use crate::error::{Error, Result};
use crate::poly::{Rational, UniPoly};

/// A structure constant `c^B_{i,A}`; nonnegative by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonkCoefficient(BigUint);

impl MonkCoefficient {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_uni(&self) -> UniPoly {
        UniPoly::constant(Rational::from_integer(self.0.clone().into()))
    }
}

impl fmt::Display for MonkCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for MonkCoefficient {
    fn from(v: u32) -> Self {
        MonkCoefficient(BigUint::from(v))
    }
}

/// `c^B_{i,A}` for `B = A ∪ {k}`, `k ∉ A`.
pub fn monk_coefficient(i: u32, a: &SubsetIndex, b: &SubsetIndex) -> Result<MonkCoefficient> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank() as usize,
            right: b.rank() as usize,
        });
    }
    b.check_index(i)?;
    let extra = b.mask() & !a.mask();
    if !a.is_subset_of(b) || extra.count_ones() != 1 {
        return Err(Error::NotACover {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let k = extra.trailing_zeros() + 1;
    if !b.contains(i) {
        return Ok(MonkCoefficient(BigUint::zero()));
    }
    let run = b.substring_of(k)?;
    let (tail, head) = (run.lo, run.hi);
    let value = if k <= i && i <= head {
        BigUint::from(head - i + 1) * binomial(head - tail + 1, k - tail)
    } else if tail <= i && i < k {
        BigUint::from(i - tail + 1) * binomial(head - tail + 1, k - tail + 1)
    } else {
        BigUint::zero()
    };
    Ok(MonkCoefficient(value))
}

/// `p_i · p_A = p_i(w_A)·p_A + Σ_{B = A ∪ {k}} c^B_{i,A}·p_B`.
pub fn monk_product(i: u32, a: &SubsetIndex) -> Result<BasisExpansion> {
    let mut out = BasisExpansion::zero(a.rank());
    out.add_term(*a, &restrict_generator(i, a)?)?;
    for k in 1..a.rank() {
        if a.contains(k) {
            continue;
        }
        let b = a.with(k)?;
        let c = monk_coefficient(i, a, &b)?;
        if !c.is_zero() {
            out.add_term(b, &c.to_uni())?;
        }
    }
    Ok(out)
}

/// `p_i · e` by linearity.
pub fn multiply_by_generator(i: u32, e: &BasisExpansion) -> Result<BasisExpansion> {
    let mut out = BasisExpansion::zero(e.rank());
    for (a, c) in e.iter() {
        out.add_scaled(&monk_product(i, a)?, c)?;
    }
    Ok(out)
}

/// Basis expansion of `∏ p_i` over the multiset `factors`.
///
/// Factors are applied in sorted order, starting from `p_∅`.
pub fn expand_monomial(n: u32, factors: &[u32]) -> Result<BasisExpansion> {
    let mut sorted = factors.to_vec();
    sorted.sort_unstable();
    expand_monomial_in_order(n, &sorted)
}

/// As [`expand_monomial`] but multiplying in the order given.
pub fn expand_monomial_in_order(n: u32, factors: &[u32]) -> Result<BasisExpansion> {
    let empty = SubsetIndex::empty(n)?;
    for &i in factors {
        empty.check_index(i)?;
    }
    factors
        .iter()
        .try_fold(BasisExpansion::basis(empty), |acc, &i| {
            multiply_by_generator(i, &acc)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::all_subsets;
    use crate::poly::int;
    use crate::schubert::expansion::term;

    fn s(n: u32, m: &[u32]) -> SubsetIndex {
        SubsetIndex::new(n, m).unwrap()
    }

    fn c(i: u32, a: &SubsetIndex, b: &SubsetIndex) -> u32 {
        monk_coefficient(i, a, b)
            .unwrap()
            .value()
            .try_into()
            .unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(c(4, &s(5, &[1, 2]), &s(5, &[1, 2, 4])), 1);
        assert_eq!(c(4, &s(6, &[2, 3]), &s(6, &[2, 3, 4])), 3);
        // gluing: B = {1,2,3}, k = 2, tail 1, head 3 -> (3-2+1)*C(3,1)
        assert_eq!(c(2, &s(6, &[1, 3]), &s(6, &[1, 2, 3])), 6);
        // i not in B
        assert_eq!(c(5, &s(6, &[1, 3]), &s(6, &[1, 2, 3])), 0);
        // i in B but outside the run containing k
        assert_eq!(c(5, &s(6, &[1, 5]), &s(6, &[1, 2, 5])), 0);
        // tail ≤ i < k: B = {1,2,3}, k = 3, i = 1 -> 1*C(3,3)
        assert_eq!(c(1, &s(4, &[1, 2]), &s(4, &[1, 2, 3])), 1);
    }

    #[test]
    fn coefficient_preconditions() {
        let a = s(5, &[1]);
        assert!(matches!(
            monk_coefficient(1, &a, &s(5, &[1, 2, 3])),
            Err(Error::NotACover { .. })
        ));
        assert!(monk_coefficient(1, &a, &s(5, &[2])).is_err());
        assert!(monk_coefficient(1, &a, &a).is_err());
        assert!(monk_coefficient(5, &a, &s(5, &[1, 2])).is_err());
        assert!(monk_coefficient(1, &a, &s(6, &[1, 2])).is_err());
    }

    #[test]
    fn product_examples() {
        let mut expected = term(s(4, &[1, 2]), 2, 1);
        expected
            .add_term(s(4, &[1, 2, 3]), &UniPoly::one())
            .unwrap();
        assert_eq!(monk_product(1, &s(4, &[1, 2])).unwrap(), expected);

        assert_eq!(
            monk_product(4, &s(5, &[1, 2])).unwrap(),
            BasisExpansion::basis(s(5, &[1, 2, 4]))
        );
        assert_eq!(
            monk_product(1, &s(4, &[])).unwrap(),
            BasisExpansion::basis(s(4, &[1]))
        );
        assert!(monk_product(4, &s(4, &[])).is_err());
    }

    #[test]
    fn generator_outside_a_gives_single_superset_term() {
        for n in 2..=7 {
            for a in all_subsets(n).unwrap() {
                for i in 1..n {
                    let prod = monk_product(i, &a).unwrap();
                    assert!(prod.is_manifestly_positive());
                    for (b, _) in prod.iter() {
                        assert!(a.is_subset_of(b) && b.len() <= a.len() + 1);
                    }
                    if !a.contains(i) {
                        assert!(prod.coeff(&a).is_zero());
                        assert_eq!(prod.len(), 1);
                        assert!(prod.coeff(&a.with(i).unwrap()).as_monomial().is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn expansions_of_powers() {
        let mut sq = term(s(4, &[1]), 1, 1);
        sq.add_term(s(4, &[1, 2]), &UniPoly::one()).unwrap();
        assert_eq!(expand_monomial(4, &[1, 1]).unwrap(), sq);
        assert_eq!(
            expand_monomial(4, &[1, 1, 1]).unwrap().to_string(),
            "t^2*p{1} + 3*t*p{1,2} + p{1,2,3}"
        );
        let cube = expand_monomial(4, &[1, 2, 3]).unwrap();
        assert_eq!(cube.coeff(&s(4, &[1, 2, 3])), UniPoly::constant(int(6)));
        assert_eq!(
            expand_monomial(4, &[]).unwrap(),
            BasisExpansion::identity(4).unwrap()
        );
        assert!(expand_monomial(4, &[4]).is_err());
    }

    #[test]
    fn order_independence_small_ranks() {
        use itertools::Itertools;
        for n in 2..=5u32 {
            for deg in 0..=4usize {
                for factors in (1..n).combinations_with_replacement(deg) {
                    let reference = expand_monomial(n, &factors).unwrap();
                    for perm in factors.iter().copied().permutations(deg).unique() {
                        assert_eq!(expand_monomial_in_order(n, &perm).unwrap(), reference);
                    }
                }
            }
        }
    }
}
