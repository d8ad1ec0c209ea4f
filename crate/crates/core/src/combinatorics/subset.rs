//! Subsets of `{1, …, n-1}` indexing the Peterson fixed points.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest rank representable by the 64-bit member mask.
pub const MAX_RANK: u32 = 64;

/// A subset `A ⊆ {1, …, n-1}` stored as a bitmask (bit `m-1` set iff `m ∈ A`).
///
/// Ordering is cardinality-major, lexicographic-minor on the sorted member
/// list, which refines inclusion.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    n: u32,
    mask: u64,
}

/// An inclusive interval `[lo, hi]` of consecutive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Substring {
    pub lo: u32,
    pub hi: u32,
}

impl Substring {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u32 {
        self.hi - self.lo + 1
    }

    pub fn contains(&self, j: u32) -> bool {
        self.lo <= j && j <= self.hi
    }
}

fn check_rank(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_RANK {
        return Err(Error::RankTooLarge { n, max: MAX_RANK });
    }
    Ok(())
}

impl SubsetIndex {
    pub fn empty(n: u32) -> Result<Self> {
        check_rank(n)?;
        Ok(SubsetIndex { n, mask: 0 })
    }

    /// Builds a subset from members in any order; duplicates are rejected.
    pub fn new(n: u32, members: &[u32]) -> Result<Self> {
        check_rank(n)?;
        let mut mask = 0u64;
        for &m in members {
            if m == 0 || m >= n {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    max: n - 1,
                });
            }
            let bit = 1u64 << (m - 1);
            if mask & bit != 0 {
                return Err(Error::parse(0, format!("duplicate member {m}")));
            }
            mask |= bit;
        }
        Ok(SubsetIndex { n, mask })
    }

    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        check_rank(n)?;
        let allowed = if n == 1 { 0 } else { u64::MAX >> (65 - n) };
        if mask & !allowed != 0 {
            let bad = (mask & !allowed).trailing_zeros() + 1;
            return Err(Error::IndexOutOfRange {
                index: bad,
                max: n - 1,
            });
        }
        Ok(SubsetIndex { n, mask })
    }

    /// The interval `[lo, hi]` as a subset of rank `n`.
    pub fn interval(n: u32, lo: u32, hi: u32) -> Result<Self> {
        let members: Vec<u32> = (lo..=hi).collect();
        Self::new(n, &members)
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, j: u32) -> bool {
        j >= 1 && j < self.n && self.mask & (1u64 << (j - 1)) != 0
    }

    pub fn is_subset_of(&self, other: &SubsetIndex) -> bool {
        self.mask & !other.mask == 0
    }

    /// Sorted members.
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        let mask = self.mask;
        (1..self.n).filter(move |&m| mask & (1u64 << (m - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.members().collect()
    }

    /// `A ∪ {j}`; `j` must lie in `1..n`.
    pub fn with(&self, j: u32) -> Result<Self> {
        self.check_index(j)?;
        Ok(SubsetIndex {
            n: self.n,
            mask: self.mask | (1u64 << (j - 1)),
        })
    }

    /// Same members viewed at another rank.
    pub fn with_rank(&self, n: u32) -> Result<Self> {
        Self::from_mask(n, self.mask)
    }

    pub fn check_index(&self, i: u32) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n.saturating_sub(1),
            });
        }
        Ok(())
    }

    /// Maximal consecutive substrings, sorted.
    pub fn substrings(&self) -> Vec<Substring> {
        let mut out: Vec<Substring> = Vec::new();
        for m in self.members() {
            match out.last_mut() {
                Some(last) if last.hi + 1 == m => last.hi = m,
                _ => out.push(Substring { lo: m, hi: m }),
            }
        }
        out
    }

    /// The maximal substring containing `j`.
    pub fn substring_of(&self, j: u32) -> Result<Substring> {
        if !self.contains(j) {
            return Err(Error::NotAMember {
                index: j,
                subset: self.to_string(),
            });
        }
        let mut lo = j;
        while lo > 1 && self.contains(lo - 1) {
            lo -= 1;
        }
        let mut hi = j;
        while self.contains(hi + 1) {
            hi += 1;
        }
        Ok(Substring { lo, hi })
    }

    /// Largest element of the maximal substring containing `j`.
    pub fn head(&self, j: u32) -> Result<u32> {
        Ok(self.substring_of(j)?.hi)
    }

    /// Smallest element of the maximal substring containing `j`.
    pub fn tail(&self, j: u32) -> Result<u32> {
        Ok(self.substring_of(j)?.lo)
    }
}

impl Ord for SubsetIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.members().cmp(other.members()))
    }
}

impl PartialOrd for SubsetIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members().join(","))
    }
}

impl fmt::Debug for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.n)
    }
}

/// Parses the member list of `"{1,2,4}"`, `"1,2,4"`, `"{}"` or `""`.
pub fn parse_members(s: &str) -> Result<Vec<u32>> {
    let trimmed = s.trim();
    let (body, offset) = match trimmed.strip_prefix('{') {
        Some(rest) => match rest.strip_suffix('}') {
            Some(inner) => (inner, s.find('{').unwrap() + 1),
            None => return Err(Error::parse(s.len(), "missing closing '}'")),
        },
        None => (trimmed, s.len() - s.trim_start().len()),
    };
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in body.split(',') {
        let tok = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        let value = tok.parse::<u32>().map_err(|_| {
            Error::parse(
                pos + lead,
                format!("expected a positive integer, found {tok:?}"),
            )
        })?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Parses a subset of rank `n` in the textual `{…}` form.
pub fn parse_subset(n: u32, s: &str) -> Result<SubsetIndex> {
    SubsetIndex::new(n, &parse_members(s)?)
}

impl FromStr for Substring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected [lo,hi]"))?;
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(0, "expected [lo,hi]"))?;
        let lo = lo.trim().parse().map_err(|_| Error::parse(1, "bad lo"))?;
        let hi = hi.trim().parse().map_err(|_| Error::parse(1, "bad hi"))?;
        if lo > hi {
            return Err(Error::parse(0, "lo exceeds hi"));
        }
        Ok(Substring { lo, hi })
    }
}

impl fmt::Display for Substring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// All `2^(n-1)` subsets of `{1, …, n-1}`, cardinality-major then
/// lexicographic.
pub fn all_subsets(n: u32) -> Result<impl Iterator<Item = SubsetIndex>> {
    check_rank(n)?;
    Ok((0..n).flat_map(move |k| {
        (1..n)
            .combinations(k as usize)
            .map(move |c| SubsetIndex::new(n, &c).expect("members drawn from 1..n"))
    }))
}

/// Subsets of a fixed cardinality in lexicographic order.
pub fn subsets_of_size(n: u32, k: usize) -> Result<impl Iterator<Item = SubsetIndex>> {
    check_rank(n)?;
    Ok((1..n)
        .combinations(k)
        .map(move |c| SubsetIndex::new(n, &c).expect("members drawn from 1..n")))
}
