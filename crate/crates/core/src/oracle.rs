//! Fixed-point localization oracle.
//!
//! A class is represented by its restrictions to all `2^(n-1)` fixed points.
//! Products are pointwise, and the basis expansion is recovered by a
//! triangular solve, since `p_A(w_B) = 0` unless `A ⊆ B` and
//! `p_A(w_A) ≠ 0`. Nothing here consults the Monk coefficients.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::combinatorics::{all_subsets, SubsetIndex};
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::schubert::{monk_product, restrict_basis_class, restrict_class, BasisExpansion};

/// Restriction values at every fixed point, indexed by subset mask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalizedClass {
    n: u32,
    values: Vec<UniPoly>,
}

fn fixed_point_count(n: u32) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > 31 {
        return Err(Error::RankTooLarge { n, max: 31 });
    }
    Ok(1usize << (n - 1))
}

impl LocalizedClass {
    pub fn zero(n: u32) -> Result<Self> {
        Ok(LocalizedClass {
            n,
            values: vec![UniPoly::zero(); fixed_point_count(n)?],
        })
    }

    pub fn constant(n: u32, c: UniPoly) -> Result<Self> {
        Ok(LocalizedClass {
            n,
            values: vec![c; fixed_point_count(n)?],
        })
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn value(&self, b: &SubsetIndex) -> &UniPoly {
        &self.values[b.mask() as usize]
    }

    pub fn set(&mut self, b: &SubsetIndex, v: UniPoly) {
        self.values[b.mask() as usize] = v;
    }

    /// `(B, f(B))` in subset enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetIndex, &UniPoly)> + '_ {
        all_subsets(self.n)
            .expect("rank validated at construction")
            .map(move |b| (b, self.value(&b)))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(UniPoly::is_zero)
    }
}

/// The restriction of `e` to every fixed point.
pub fn localize(e: &BasisExpansion) -> Result<LocalizedClass> {
    let mut out = LocalizedClass::zero(e.rank())?;
    for b in all_subsets(e.rank())? {
        out.set(&b, restrict_class(e, &b)?);
    }
    Ok(out)
}

pub fn pointwise_product(f: &LocalizedClass, g: &LocalizedClass) -> Result<LocalizedClass> {
    if f.n != g.n {
        return Err(Error::RankMismatch {
            left: f.n as usize,
            right: g.n as usize,
        });
    }
    Ok(LocalizedClass {
        n: f.n,
        values: f.values.iter().zip(&g.values).map(|(a, b)| a * b).collect(),
    })
}

/// Masks of all supersets of `a` within rank `n`.
fn supersets(a: &SubsetIndex) -> impl Iterator<Item = SubsetIndex> + '_ {
    let n = a.rank();
    let full = (1u64 << (n - 1)) - 1;
    let free = full & !a.mask();
    // standard submask walk over the complement, including the empty submask
    let mut sub = free;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & free;
        }
        Some(SubsetIndex::from_mask(n, a.mask() | current).expect("within rank"))
    })
}

/// The unique expansion `e` with `localize(e) = f`.
pub fn expand_localized(f: &LocalizedClass) -> Result<BasisExpansion> {
    let n = f.n;
    let mut residual = f.values.clone();
    let mut out = BasisExpansion::zero(n);
    let mut diagonal: HashMap<SubsetIndex, UniPoly> = HashMap::new();
    for a in all_subsets(n)? {
        let r = &residual[a.mask() as usize];
        if r.is_zero() {
            continue;
        }
        let d = diagonal
            .entry(a)
            .or_insert_with(|| restrict_basis_class(&a, &a).expect("same rank"));
        let c = r.div_exact(d).map_err(|_| Error::NotInSpan {
            subset: a.to_string(),
        })?;
        for b in supersets(&a) {
            let v = restrict_basis_class(&a, &b)?;
            let slot = &mut residual[b.mask() as usize];
            *slot = &*slot - &(&c * &v);
        }
        out.add_term(a, &c)?;
    }
    if let Some(b) = all_subsets(n)?.find(|b| !residual[b.mask() as usize].is_zero()) {
        return Err(Error::NotInSpan {
            subset: b.to_string(),
        });
    }
    Ok(out)
}

/// One disagreement between the Monk formula and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonkMismatch {
    pub i: u32,
    pub a: SubsetIndex,
    pub formula: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub n: u32,
    pub checked: usize,
    pub mismatches: Vec<MonkMismatch>,
    /// Whether every formula-side product was manifestly positive.
    pub positive: bool,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.positive
    }
}

/// Compares `monk_product(i, A)` with the oracle product for every `(i, A)`.
pub fn oracle_check_monk(n: u32) -> Result<OracleReport> {
    let subsets: Vec<SubsetIndex> = all_subsets(n)?.collect();
    let localized: Vec<LocalizedClass> = subsets
        .par_iter()
        .map(|a| localize(&BasisExpansion::basis(*a)))
        .collect::<Result<_>>()?;
    let pairs: Vec<(u32, usize)> = (1..n)
        .flat_map(|i| (0..subsets.len()).map(move |ix| (i, ix)))
        .collect();
    let outcomes: Vec<(Option<MonkMismatch>, bool)> = pairs
        .par_iter()
        .map(|&(i, ix)| {
            let a = subsets[ix];
            let generator = SubsetIndex::new(n, &[i])?;
            let gen_ix = subsets
                .iter()
                .position(|s| *s == generator)
                .expect("enumerated");
            let formula = monk_product(i, &a)?;
            let oracle = expand_localized(&pointwise_product(&localized[gen_ix], &localized[ix])?)?;
            let positive = formula.is_manifestly_positive();
            let mismatch = (formula != oracle).then(|| MonkMismatch {
                i,
                a,
                formula: formula.to_string(),
                oracle: oracle.to_string(),
            });
            Ok((mismatch, positive))
        })
        .collect::<Result<_>>()?;
    Ok(OracleReport {
        n,
        checked: outcomes.len(),
        positive: outcomes.iter().all(|(_, p)| *p),
        mismatches: outcomes.into_iter().filter_map(|(m, _)| m).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::schubert::{expand_monomial, term};

    fn s(n: u32, m: &[u32]) -> SubsetIndex {
        SubsetIndex::new(n, m).unwrap()
    }

    #[test]
    fn localizes_small_classes() {
        let f = localize(&BasisExpansion::basis(s(2, &[1]))).unwrap();
        assert!(f.value(&s(2, &[])).is_zero());
        assert_eq!(f.value(&s(2, &[1])), &UniPoly::t());

        let one = localize(&BasisExpansion::identity(2).unwrap()).unwrap();
        assert_eq!(one, LocalizedClass::constant(2, UniPoly::one()).unwrap());
        assert!(localize(&BasisExpansion::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn pointwise_products() {
        let f = localize(&BasisExpansion::basis(s(2, &[1]))).unwrap();
        let sq = pointwise_product(&f, &f).unwrap();
        assert!(sq.value(&s(2, &[])).is_zero());
        assert_eq!(sq.value(&s(2, &[1])), &UniPoly::monomial(int(1), 2));
        let ones = LocalizedClass::constant(2, UniPoly::one()).unwrap();
        assert_eq!(pointwise_product(&f, &ones).unwrap(), f);
        assert!(pointwise_product(&f, &LocalizedClass::zero(2).unwrap())
            .unwrap()
            .is_zero());
        assert!(pointwise_product(&f, &LocalizedClass::zero(3).unwrap()).is_err());
    }

    #[test]
    fn triangular_solve() {
        let mut e = term(s(4, &[1]), 1, 1);
        e.add_term(s(4, &[1, 2]), &UniPoly::one()).unwrap();
        assert_eq!(expand_localized(&localize(&e).unwrap()).unwrap(), e);

        let p1 = localize(&BasisExpansion::basis(s(4, &[1]))).unwrap();
        assert_eq!(
            expand_localized(&pointwise_product(&p1, &p1).unwrap()).unwrap(),
            e
        );

        let p12 = localize(&BasisExpansion::basis(s(4, &[1, 2]))).unwrap();
        let mut expected = term(s(4, &[1, 2]), 2, 1);
        expected
            .add_term(s(4, &[1, 2, 3]), &UniPoly::one())
            .unwrap();
        assert_eq!(
            expand_localized(&pointwise_product(&p1, &p12).unwrap()).unwrap(),
            expected
        );
    }

    #[test]
    fn rejects_classes_outside_the_span() {
        // a constant at a single fixed point is not a polynomial class
        let mut f = LocalizedClass::zero(3).unwrap();
        f.set(&s(3, &[1]), UniPoly::one());
        assert!(matches!(expand_localized(&f), Err(Error::NotInSpan { .. })));
    }

    #[test]
    fn superset_walk() {
        let got: Vec<String> = supersets(&s(4, &[2])).map(|b| b.to_string()).collect();
        assert_eq!(got.len(), 4);
        for name in ["{2}", "{1,2}", "{2,3}", "{1,2,3}"] {
            assert!(got.contains(&name.to_string()));
        }
        assert_eq!(supersets(&s(1, &[])).count(), 1);
    }

    #[test]
    fn monk_sweeps() {
        for n in 1..=5 {
            let report = oracle_check_monk(n).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.checked, (n as usize - 1) << (n - 1));
        }
        assert_eq!(oracle_check_monk(4).unwrap().checked, 24);
        assert_eq!(oracle_check_monk(2).unwrap().checked, 2);
        assert_eq!(oracle_check_monk(1).unwrap().checked, 0);
    }

    #[test]
    fn localization_is_multiplicative() {
        let p1 = localize(&BasisExpansion::basis(s(5, &[1]))).unwrap();
        let p3 = localize(&BasisExpansion::basis(s(5, &[3]))).unwrap();
        let prod = pointwise_product(&pointwise_product(&p1, &p3).unwrap(), &p3).unwrap();
        assert_eq!(
            localize(&expand_monomial(5, &[1, 3, 3]).unwrap()).unwrap(),
            prod
        );
    }
}
