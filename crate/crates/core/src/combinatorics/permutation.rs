//! Permutations in one-line notation and the Peterson fixed points `w_A`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::subset::SubsetIndex;
use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation: `w(j) = one_line[j-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn from_one_line(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in one_line.iter().enumerate() {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::parse(
                    pos,
                    format!("{one_line:?} is not a permutation"),
                ));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn rank(&self) -> u32 {
        self.one_line.len() as u32
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    /// `w(j)` for `1 ≤ j ≤ n`.
    pub fn apply(&self, j: u32) -> u32 {
        self.one_line[j as usize - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.one_line.len()];
        for (j, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = j as u32 + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(
            self.rank(),
            other.rank(),
            "composing permutations of different rank"
        );
        Permutation {
            one_line: other.one_line.iter().map(|&j| self.apply(j)).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn simple_reflection(n: u32, i: u32) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut p = Self::identity(n);
        p.one_line.swap(i as usize - 1, i as usize);
        Ok(p)
    }

    /// Number of inversions, i.e. Coxeter length.
    pub fn inversions(&self) -> usize {
        self.one_line
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// `{ i : w⁻¹(i) = w⁻¹(i+1) + 1 }`, the subset a fixed point is indexed by.
    pub fn descent_subset(&self) -> Result<SubsetIndex> {
        let inv = self.inverse();
        let members: Vec<u32> = (1..self.rank())
            .filter(|&i| inv.apply(i) == inv.apply(i + 1) + 1)
            .collect();
        SubsetIndex::new(self.rank(), &members)
    }
}

impl fmt::Display for Permutation {
    /// Concatenated digits for `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.one_line.len() <= 9 {
            write!(f, "{}", self.one_line.iter().join(""))
        } else {
            write!(f, "{}", self.one_line.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"32154"` (single digits) or `"3,2,1,5,4"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<u32> = if s.contains(',') {
            let mut out = Vec::new();
            let mut pos = 0;
            for piece in s.split(',') {
                out.push(
                    piece
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad entry {piece:?}")))?,
                );
                pos += piece.len() + 1;
            }
            out
        } else {
            s.chars()
                .enumerate()
                .map(|(pos, c)| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::parse(pos, format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(values)
    }
}

/// The fixed point `w_A`.
///
/// `w_A⁻¹` is the concatenation of descending runs whose boundaries sit
/// exactly at the positions `i ∉ A`; block reversal is an involution, so
/// `w_A = w_A⁻¹`, but the inverse is taken explicitly.
pub fn fixed_point_permutation(a: &SubsetIndex) -> Permutation {
    let n = a.rank();
    let mut inv = Vec::with_capacity(n as usize);
    let mut start = 1;
    for end in 1..=n {
        if end == n || !a.contains(end) {
            inv.extend((start..=end).rev());
            start = end + 1;
        }
    }
    Permutation { one_line: inv }.inverse()
}

/// The word `(j_1, …, j_m)` of `A` and the product `s_{j_1} ∘ … ∘ s_{j_m}`,
/// composed with the rightmost factor applied first.
pub fn v_permutation(a: &SubsetIndex) -> (Vec<u32>, Permutation) {
    let n = a.rank();
    let word: Vec<u32> = a.members().collect();
    let perm = word.iter().fold(Permutation::identity(n), |acc, &j| {
        acc.compose(&Permutation::simple_reflection(n, j).expect("member lies in 1..n"))
    });
    (word, perm)
}
