//! Fixed inputs shared by the criterion benches.

use peterson_core::combinatorics::{all_subsets, SubsetIndex};
use peterson_core::oracle::{localize, pointwise_product, LocalizedClass};
use peterson_core::presentation::ideal_k;
use peterson_core::schubert::BasisExpansion;
use peterson_core::MultiPoly;

/// Every `(i, A)` pair at rank `n`.
pub fn monk_pairs(n: u32) -> Vec<(u32, SubsetIndex)> {
    all_subsets(n)
        .expect("valid rank")
        .flat_map(|a| (1..n).map(move |i| (i, a)))
        .collect()
}

/// `p_1 · p_{1,…,n-2}` in localized form, a dense input for the triangular solve.
pub fn dense_localized_product(n: u32) -> LocalizedClass {
    let gen = localize(&BasisExpansion::basis(SubsetIndex::new(n, &[1]).unwrap())).unwrap();
    let members: Vec<u32> = (1..n - 1).collect();
    let big = localize(&BasisExpansion::basis(
        SubsetIndex::new(n, &members).unwrap(),
    ))
    .unwrap();
    pointwise_product(&gen, &big).unwrap()
}

pub fn quadratic_generators(n: u32) -> Vec<MultiPoly> {
    ideal_k(n).expect("valid rank").of_degree(2)
}
