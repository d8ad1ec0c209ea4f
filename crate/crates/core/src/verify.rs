//! Named verification suites and their reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{all_subsets, fixed_point_permutation, SubsetIndex};
use crate::error::{Error, Result};
use crate::oracle::oracle_check_monk;
use crate::poly::{parse_multipoly, MultiPoly};
use crate::presentation::{
    buchberger_with_limits, ideal_k, localization_failures, normal_form, vanishing_check,
    GroebnerLimits, VanishingCase, N4_GENERATORS,
};
use crate::schubert::{
    expand_monomial, generator_weight, generator_weight_one_line, giambelli_verify, restrict_class,
    stability_lift, stability_restrict, stirling_expansion, BasisExpansion,
};

/// Rank caps and Gröbner limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest rank for suites that enumerate all subsets.
    pub max_rank: u32,
    /// Largest rank for localization-oracle sweeps.
    pub max_oracle_rank: u32,
    /// Largest rank for presentation and Gröbner computations.
    pub max_groebner_rank: u32,
    pub groebner: GroebnerLimits,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rank: 20,
            max_oracle_rank: 12,
            max_groebner_rank: 6,
            groebner: GroebnerLimits::default(),
        }
    }
}

impl Limits {
    pub fn check(&self, n: u32, max: u32, what: &str) -> Result<()> {
        if n > max {
            return Err(Error::ResourceCap(format!(
                "{what} is capped at n = {max}, got n = {n}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    FixedPoints,
    Restriction,
    MonkOracle,
    Giambelli,
    Stirling,
    Vanishing,
    Stability,
    Localization,
    GoldenN4,
    Quadratic,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::FixedPoints,
        Suite::Restriction,
        Suite::MonkOracle,
        Suite::Giambelli,
        Suite::Stirling,
        Suite::Vanishing,
        Suite::Stability,
        Suite::Localization,
        Suite::GoldenN4,
        Suite::Quadratic,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Suite::FixedPoints => "fixed-points",
            Suite::Restriction => "restriction",
            Suite::MonkOracle => "monk-oracle",
            Suite::Giambelli => "giambelli",
            Suite::Stirling => "stirling",
            Suite::Vanishing => "vanishing",
            Suite::Stability => "stability",
            Suite::Localization => "localization",
            Suite::GoldenN4 => "golden-n4",
            Suite::Quadratic => "quadratic",
        }
    }

    fn cap(&self, limits: &Limits) -> u32 {
        match self {
            Suite::MonkOracle => limits.max_oracle_rank,
            Suite::Vanishing | Suite::Localization | Suite::GoldenN4 | Suite::Quadratic => {
                limits.max_groebner_rank
            }
            _ => limits.max_rank,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub id: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub n: u32,
    pub status: Status,
    pub total: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub wall_time_us: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undetermined => "UNDETERMINED",
        };
        writeln!(
            f,
            "{status} {} n={}: {} checks, {} failures, {:.3} s",
            self.suite,
            self.n,
            self.total,
            self.failures.len(),
            self.wall_time_us as f64 / 1e6
        )?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        for fail in &self.failures {
            writeln!(
                f,
                "  {}: expected {}, got {}",
                fail.id, fail.expected, fail.actual
            )?;
        }
        Ok(())
    }
}

struct Outcome {
    total: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

fn failure(
    id: impl Into<String>,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> Failure {
    Failure {
        id: id.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Runs `check` on every item in parallel, keeping failures in item order.
fn sweep<T, F>(items: &[T], check: F) -> Result<Outcome>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Failure>> + Sync + Send,
{
    let results: Vec<Option<Failure>> = items.par_iter().map(check).collect::<Result<_>>()?;
    Ok(Outcome {
        total: items.len(),
        failures: results.into_iter().flatten().collect(),
        notes: Vec::new(),
    })
}

/// Runs a suite at rank `n`. A rank above the suite's cap or a Gröbner
/// resource cap gives an undetermined report; other errors propagate.
pub fn run_suite(suite: Suite, n: u32, limits: &Limits) -> Result<VerifyReport> {
    let start = Instant::now();
    let n = if suite == Suite::GoldenN4 { 4 } else { n };
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let outcome = limits
        .check(n, suite.cap(limits), suite.id())
        .and_then(|_| run(suite, n, limits));
    let (status, outcome) = match outcome {
        Ok(o) if o.failures.is_empty() => (Status::Pass, o),
        Ok(o) => (Status::Fail, o),
        Err(Error::ResourceCap(msg)) => (
            Status::Undetermined,
            Outcome {
                total: 0,
                failures: Vec::new(),
                notes: vec![msg],
            },
        ),
        Err(e) => return Err(e),
    };
    Ok(VerifyReport {
        suite: suite.id().to_string(),
        n,
        status,
        total: outcome.total,
        failures: outcome.failures,
        notes: outcome.notes,
        wall_time_us: start.elapsed().as_micros() as u64,
    })
}

fn run(suite: Suite, n: u32, limits: &Limits) -> Result<Outcome> {
    match suite {
        Suite::FixedPoints => fixed_points(n),
        Suite::Restriction => restriction(n),
        Suite::MonkOracle => monk_oracle(n),
        Suite::Giambelli => {
            let subsets: Vec<SubsetIndex> = all_subsets(n)?.collect();
            sweep(&subsets, |a| {
                Ok((!giambelli_verify(a)?)
                    .then(|| failure(format!("A={a}"), format!("p{a}"), "mismatch")))
            })
        }
        Suite::Stirling => {
            let ks: Vec<u32> = (1..n).collect();
            sweep(&ks, |&k| {
                let expected = stirling_expansion(n, k)?;
                let actual = expand_monomial(n, &vec![1; k as usize])?;
                Ok(if actual != expected {
                    Some(failure(format!("k={k}"), &expected, &actual))
                } else if !actual.is_manifestly_positive() {
                    Some(failure(
                        format!("k={k} positivity"),
                        "nonnegative integers",
                        &actual,
                    ))
                } else {
                    None
                })
            })
        }
        Suite::Vanishing => {
            let report = vanishing_check(n)?;
            let notes = VanishingCase::ALL
                .iter()
                .map(|c| format!("{}: {} pairs", c.id(), report.count(*c)))
                .collect();
            Ok(Outcome {
                total: report.total(),
                failures: report
                    .nonzero
                    .iter()
                    .map(|(i, a, q)| failure(format!("i={i} A={a}"), "0", q))
                    .collect(),
                notes,
            })
        }
        Suite::Stability => stability(n),
        Suite::Localization => {
            let generators = ideal_k(n)?.len();
            let points = 1usize << (n - 1);
            let failures = localization_failures(n)?
                .into_iter()
                .map(|(i, a, b)| failure(format!("q(i={i}, A={a}) at w_{b}"), "0", "nonzero"))
                .collect();
            Ok(Outcome {
                total: generators * points,
                failures,
                notes: Vec::new(),
            })
        }
        Suite::GoldenN4 => golden_n4(),
        Suite::Quadratic => quadratic(n, limits),
    }
}

fn fixed_points(n: u32) -> Result<Outcome> {
    let subsets: Vec<SubsetIndex> = all_subsets(n)?.collect();
    let mut outcome = sweep(&subsets, |a| {
        let w = fixed_point_permutation(a);
        let recovered = w.descent_subset()?;
        Ok(
            if w.compose(&w) != crate::combinatorics::Permutation::identity(n) {
                Some(failure(format!("w_{a}"), "involution", &w))
            } else if recovered != *a {
                Some(failure(format!("w_{a}"), a, recovered))
            } else {
                None
            },
        )
    })?;
    let expected = 1usize << (n - 1);
    if subsets.len() != expected {
        outcome
            .failures
            .push(failure("count", expected, subsets.len()));
    }
    outcome.total += 1;
    Ok(outcome)
}

fn restriction(n: u32) -> Result<Outcome> {
    let pairs: Vec<(u32, SubsetIndex)> = all_subsets(n)?
        .flat_map(|b| (1..n).map(move |i| (i, b)))
        .collect();
    sweep(&pairs, |(i, b)| {
        let closed = generator_weight(*i, b)? as i64;
        let summed = generator_weight_one_line(*i, b)?;
        Ok((closed != summed).then(|| failure(format!("i={i} B={b}"), closed, summed)))
    })
}

fn monk_oracle(n: u32) -> Result<Outcome> {
    let report = oracle_check_monk(n)?;
    let mut failures: Vec<Failure> = report
        .mismatches
        .iter()
        .map(|m| failure(format!("i={} A={}", m.i, m.a), &m.oracle, &m.formula))
        .collect();
    if !report.positive {
        failures.push(failure(
            "positivity",
            "nonnegative integer coefficients",
            "negative or fractional",
        ));
    }
    Ok(Outcome {
        total: report.checked,
        failures,
        notes: Vec::new(),
    })
}

fn stability(n: u32) -> Result<Outcome> {
    let subsets: Vec<SubsetIndex> = all_subsets(n)?.collect();
    let points = subsets.clone();
    sweep(&subsets, |a| {
        let small = BasisExpansion::basis(*a);
        let big = stability_lift(&small)?;
        if stability_restrict(&big)? != small {
            return Ok(Some(failure(
                format!("A={a}"),
                &small,
                "round trip changed the class",
            )));
        }
        for b in &points {
            let lo = restrict_class(&small, b)?;
            let hi = restrict_class(&big, &b.with_rank(n + 1)?)?;
            if lo != hi {
                return Ok(Some(failure(format!("A={a} at w_{b}"), lo, hi)));
            }
        }
        Ok(None)
    })
}

fn golden_n4() -> Result<Outcome> {
    let listed: Vec<MultiPoly> = N4_GENERATORS
        .iter()
        .map(|s| parse_multipoly(4, s))
        .collect::<Result<_>>()?;
    let got = ideal_k(4)?.polys();
    let mut failures = Vec::new();
    if got.len() != listed.len() {
        failures.push(failure("count", listed.len(), got.len()));
    }
    // multiset comparison up to positive scalars
    let canon = |p: &MultiPoly| p.unit_leading();
    let mut remaining: Vec<MultiPoly> = got.iter().map(canon).collect();
    for (ix, g) in listed.iter().enumerate() {
        match remaining.iter().position(|h| *h == canon(g)) {
            Some(pos) => {
                remaining.swap_remove(pos);
            }
            None => failures.push(failure(format!("generator {}", ix + 1), g, "missing")),
        }
    }
    for extra in remaining {
        failures.push(failure("unexpected generator", "none", extra));
    }
    let first_and_third = [listed[0].clone(), listed[2].clone()];
    for ix in [5, 6] {
        let r = normal_form(&listed[ix], &first_and_third)?;
        if !r.is_zero() {
            failures.push(failure(
                format!("generator {} mod 1st and 3rd", ix + 1),
                "0",
                r,
            ));
        }
    }
    Ok(Outcome {
        total: listed.len() + 2,
        failures,
        notes: vec![format!("{} generators matched", got.len())],
    })
}

fn quadratic(n: u32, limits: &Limits) -> Result<Outcome> {
    let k = ideal_k(n)?;
    let quadratics = k.of_degree(2);
    let gb = buchberger_with_limits(&quadratics, limits.groebner)?;
    let mut failures = Vec::new();
    for r in k.iter() {
        let rem = normal_form(&r.poly, gb.elements())?;
        if !rem.is_zero() {
            failures.push(failure(format!("i={} A={}", r.i, r.a), "0", rem));
        }
    }
    Ok(Outcome {
        total: k.len(),
        failures,
        notes: vec![format!(
            "{} quadratic generators, Groebner basis of {} elements",
            quadratics.len(),
            gb.len()
        )],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.id().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let limits = Limits::default();
        for suite in Suite::ALL {
            for n in 1..=4 {
                let report = run_suite(suite, n, &limits).unwrap();
                assert_eq!(report.status, Status::Pass, "{report}");
            }
        }
    }

    #[test]
    fn spec_counts() {
        let limits = Limits::default();
        assert_eq!(run_suite(Suite::GoldenN4, 4, &limits).unwrap().total, 14);
        assert_eq!(run_suite(Suite::MonkOracle, 4, &limits).unwrap().total, 24);
        assert_eq!(run_suite(Suite::Stirling, 8, &limits).unwrap().total, 7);
    }

    #[test]
    fn caps_give_undetermined() {
        let limits = Limits {
            max_groebner_rank: 3,
            ..Limits::default()
        };
        let report = run_suite(Suite::Quadratic, 4, &limits).unwrap();
        assert_eq!(report.status, Status::Undetermined);
        let tight = Limits {
            groebner: GroebnerLimits {
                max_pairs: 1,
                max_degree: 30,
            },
            ..Limits::default()
        };
        assert_eq!(
            run_suite(Suite::Quadratic, 5, &tight).unwrap().status,
            Status::Undetermined
        );
        assert!(run_suite(Suite::Giambelli, 0, &limits).is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let report = run_suite(Suite::Vanishing, 4, &Limits::default()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: VerifyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
