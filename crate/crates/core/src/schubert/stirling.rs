use super::expansion::BasisExpansion;
use crate::combinatorics::{stirling2, SubsetIndex};
use crate::error::Result;
use crate::poly::{Rational, UniPoly};

/// `Σ_j S(k, j)·t^{k-j}·p_{[1,j]}`, truncated to `j ≤ n-1`.
///
/// For `k ≤ n-1` this equals `p_1^k`; beyond that range the interval
/// classes `p_{[1,j]}` with `j ≥ n` do not exist and are dropped.
pub fn stirling_expansion(n: u32, k: u32) -> Result<BasisExpansion> {
    let mut out = BasisExpansion::zero(n);
    for j in 1..=k.min(n.saturating_sub(1)) {
        let c = Rational::from_integer(stirling2(k, j).into());
        let interval = SubsetIndex::interval(n, 1, j)?;
        out.add_term(interval, &UniPoly::monomial(c, (k - j) as usize))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::monk::expand_monomial;

    #[test]
    fn small_powers() {
        assert_eq!(stirling_expansion(4, 1).unwrap().to_string(), "p{1}");
        assert_eq!(
            stirling_expansion(4, 2).unwrap().to_string(),
            "t*p{1} + p{1,2}"
        );
        assert_eq!(
            stirling_expansion(4, 3).unwrap().to_string(),
            "t^2*p{1} + 3*t*p{1,2} + p{1,2,3}"
        );
        assert_eq!(
            stirling_expansion(3, 4).unwrap().to_string(),
            "t^3*p{1} + 7*t^2*p{1,2}"
        );
        assert!(stirling_expansion(1, 2).unwrap().is_zero());
    }

    #[test]
    fn agrees_with_iterated_monk() {
        for n in 2..=8 {
            for k in 1..n {
                let factors = vec![1; k as usize];
                assert_eq!(
                    expand_monomial(n, &factors).unwrap(),
                    stirling_expansion(n, k).unwrap(),
                    "n={n}, k={k}"
                );
            }
        }
    }
}
