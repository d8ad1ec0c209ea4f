use std::fmt;

use rayon::prelude::*;

use super::groebner::{buchberger_with_limits, normal_form, GroebnerLimits};
use super::relations::{giambelli_q_relation, ideal_k};
use crate::combinatorics::{all_subsets, SubsetIndex};
use crate::error::Result;
use crate::poly::UniPoly;
use crate::schubert::restrict_generator;

/// How `A ∪ {i}` arises from `A` when `i ∉ A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VanishingCase {
    /// Neither neighbour of `i` is in `A`: `{i}` is a new run.
    Singleton,
    /// `i - 1 ∈ A`, `i + 1 ∉ A`: a run grows to the right.
    RightExtension,
    /// `i + 1 ∈ A`, `i - 1 ∉ A`: a run grows to the left.
    LeftExtension,
    /// Both neighbours are in `A`: two runs merge.
    Gluing,
}

impl VanishingCase {
    pub const ALL: [VanishingCase; 4] = [
        VanishingCase::Singleton,
        VanishingCase::RightExtension,
        VanishingCase::LeftExtension,
        VanishingCase::Gluing,
    ];

    pub fn classify(i: u32, a: &SubsetIndex) -> Self {
        let left = i > 1 && a.contains(i - 1);
        let right = a.contains(i + 1);
        match (left, right) {
            (false, false) => VanishingCase::Singleton,
            (true, false) => VanishingCase::RightExtension,
            (false, true) => VanishingCase::LeftExtension,
            (true, true) => VanishingCase::Gluing,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            VanishingCase::Singleton => "singleton",
            VanishingCase::RightExtension => "right-extension",
            VanishingCase::LeftExtension => "left-extension",
            VanishingCase::Gluing => "gluing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub n: u32,
    /// Pairs checked per case, in the order of [`VanishingCase::ALL`].
    pub counts: [usize; 4],
    /// Pairs whose relation failed to vanish.
    pub nonzero: Vec<(u32, SubsetIndex, String)>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn count(&self, case: VanishingCase) -> usize {
        self.counts[case as usize]
    }

    pub fn all_cases_exercised(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }
}

impl fmt::Display for VanishingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cases: Vec<String> = VanishingCase::ALL
            .iter()
            .map(|c| format!("{}={}", c.id(), self.count(*c)))
            .collect();
        write!(
            f,
            "n={} {} nonzero={}",
            self.n,
            cases.join(" "),
            self.nonzero.len()
        )
    }
}

/// Checks that `q_{i,A} = 0` for every `i ∉ A`.
pub fn vanishing_check(n: u32) -> Result<VanishingReport> {
    let pairs: Vec<(u32, SubsetIndex)> = all_subsets(n)?
        .flat_map(|a| (1..n).filter(move |&i| !a.contains(i)).map(move |i| (i, a)))
        .collect();
    let results: Vec<(VanishingCase, Option<String>)> = pairs
        .par_iter()
        .map(|(i, a)| {
            let q = giambelli_q_relation(*i, a)?;
            Ok((
                VanishingCase::classify(*i, a),
                (!q.is_zero()).then(|| q.to_string()),
            ))
        })
        .collect::<Result<_>>()?;
    let mut report = VanishingReport {
        n,
        counts: [0; 4],
        nonzero: Vec::new(),
    };
    for ((i, a), (case, q)) in pairs.into_iter().zip(results) {
        report.counts[case as usize] += 1;
        if let Some(q) = q {
            report.nonzero.push((i, a, q));
        }
    }
    Ok(report)
}

/// Whether every generator of `K` lies in the ideal of its degree-2
/// generators, decided through a Gröbner basis of the latter.
pub fn quadratic_conjecture_check(n: u32) -> Result<bool> {
    quadratic_conjecture_check_with_limits(n, GroebnerLimits::default())
}

pub fn quadratic_conjecture_check_with_limits(n: u32, limits: GroebnerLimits) -> Result<bool> {
    let k = ideal_k(n)?;
    let quadratics = k.of_degree(2);
    if quadratics.is_empty() {
        return Ok(k.is_empty());
    }
    let gb = buchberger_with_limits(&quadratics, limits)?;
    for g in k.iter() {
        if !normal_form(&g.poly, gb.elements())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators of `K` that do not vanish at some fixed point, as
/// `(i, A, B)`; empty when every relation holds in the fixed-point ring.
pub fn localization_failures(n: u32) -> Result<Vec<(u32, SubsetIndex, SubsetIndex)>> {
    let k = ideal_k(n)?;
    let mut failures = Vec::new();
    for b in all_subsets(n)? {
        let mut values = vec![UniPoly::t()];
        for j in 1..n {
            values.push(restrict_generator(j, &b)?);
        }
        for r in k.iter() {
            if !r.poly.eval(&values).is_zero() {
                failures.push((r.i, r.a, b));
            }
        }
    }
    Ok(failures)
}
