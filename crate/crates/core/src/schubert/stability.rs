use super::expansion::BasisExpansion;
use crate::error::{Error, Result};

/// Reinterprets a rank-`n+1` class supported on subsets of `{1, …, n-1}` at
/// rank `n`. Restrictions to every rank-`n` fixed point are unchanged.
pub fn stability_restrict(e: &BasisExpansion) -> Result<BasisExpansion> {
    let top = e
        .rank()
        .checked_sub(1)
        .filter(|&n| n >= 1)
        .ok_or(Error::ZeroRank)?;
    if let Some((a, _)) = e.iter().find(|(a, _)| a.contains(top)) {
        return Err(Error::NotStable {
            subset: a.to_string(),
            top,
        });
    }
    e.with_rank(top)
}

/// The inverse direction: the same coefficient data at rank `n+1`.
pub fn stability_lift(e: &BasisExpansion) -> Result<BasisExpansion> {
    e.with_rank(e.rank() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{all_subsets, SubsetIndex};
    use crate::poly::UniPoly;
    use crate::schubert::expansion::term;
    use crate::schubert::restriction::restrict_class;

    fn s(n: u32, m: &[u32]) -> SubsetIndex {
        SubsetIndex::new(n, m).unwrap()
    }

    fn restrictions_agree(big: &BasisExpansion, small: &BasisExpansion) {
        for b in all_subsets(small.rank()).unwrap() {
            let lifted = b.with_rank(big.rank()).unwrap();
            assert_eq!(
                restrict_class(big, &lifted).unwrap(),
                restrict_class(small, &b).unwrap(),
                "at {b:?}"
            );
        }
    }

    #[test]
    fn examples() {
        let big = BasisExpansion::basis(s(3, &[1]));
        let small = stability_restrict(&big).unwrap();
        assert_eq!(small, BasisExpansion::basis(s(2, &[1])));
        assert_eq!(restrict_class(&big, &s(3, &[1])).unwrap(), UniPoly::t());
        assert_eq!(restrict_class(&small, &s(2, &[1])).unwrap(), UniPoly::t());
        restrictions_agree(&big, &small);

        let one = BasisExpansion::identity(5).unwrap();
        assert_eq!(
            stability_restrict(&one).unwrap(),
            BasisExpansion::identity(4).unwrap()
        );

        let big = term(s(4, &[1, 2]), 1, 1);
        let small = stability_restrict(&big).unwrap();
        assert_eq!(small, term(s(3, &[1, 2]), 1, 1));
        restrictions_agree(&big, &small);
    }

    #[test]
    fn rejects_top_index() {
        let e = BasisExpansion::basis(s(4, &[3]));
        assert!(matches!(
            stability_restrict(&e),
            Err(Error::NotStable { top: 3, .. })
        ));
        assert!(stability_restrict(&BasisExpansion::identity(1).unwrap()).is_err());
    }

    #[test]
    fn basis_classes_are_stable() {
        for n in 1..=6 {
            for a in all_subsets(n).unwrap() {
                let big = stability_lift(&BasisExpansion::basis(a)).unwrap();
                let small = stability_restrict(&big).unwrap();
                assert_eq!(small, BasisExpansion::basis(a));
                restrictions_agree(&big, &small);
            }
        }
    }
}
