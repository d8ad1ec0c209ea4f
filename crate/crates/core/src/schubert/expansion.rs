use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::combinatorics::SubsetIndex;
use crate::error::{Error, Result};
use crate::poly::{join_pieces, Rational, UniPoly};

/// A class written in the module basis `{p_A}` with coefficients in `ℚ[t]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasisExpansion {
    n: u32,
    coeffs: BTreeMap<SubsetIndex, UniPoly>,
}

impl BasisExpansion {
    pub fn zero(n: u32) -> Self {
        BasisExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `1·p_A`.
    pub fn basis(a: SubsetIndex) -> Self {
        let mut e = Self::zero(a.rank());
        e.coeffs.insert(a, UniPoly::one());
        e
    }

    /// `p_∅`, the unit class.
    pub fn identity(n: u32) -> Result<Self> {
        Ok(Self::basis(SubsetIndex::empty(n)?))
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: &SubsetIndex) -> UniPoly {
        self.coeffs.get(a).cloned().unwrap_or_default()
    }

    /// Terms in subset enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (&SubsetIndex, &UniPoly)> {
        self.coeffs.iter()
    }

    /// Adds `c·p_A`.
    pub fn add_term(&mut self, a: SubsetIndex, c: &UniPoly) -> Result<()> {
        if a.rank() != self.n {
            return Err(Error::RankMismatch {
                left: self.n as usize,
                right: a.rank() as usize,
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(a).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.coeffs.remove(&a);
        }
        Ok(())
    }

    /// `self + c·other`.
    pub fn add_scaled(&mut self, other: &BasisExpansion, c: &UniPoly) -> Result<()> {
        if other.n != self.n {
            return Err(Error::RankMismatch {
                left: self.n as usize,
                right: other.n as usize,
            });
        }
        for (a, x) in &other.coeffs {
            self.add_term(*a, &(x * c))?;
        }
        Ok(())
    }

    pub fn scale(&self, c: &UniPoly) -> BasisExpansion {
        let mut out = BasisExpansion::zero(self.n);
        for (a, x) in &self.coeffs {
            out.add_term(*a, &(x * c)).expect("same rank");
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> BasisExpansion {
        self.scale(&UniPoly::constant(c.clone()))
    }

    /// Same coefficient data at another rank; every key must fit.
    pub fn with_rank(&self, n: u32) -> Result<BasisExpansion> {
        let mut out = BasisExpansion::zero(n);
        for (a, c) in &self.coeffs {
            out.coeffs.insert(a.with_rank(n)?, c.clone());
        }
        Ok(out)
    }

    /// Whether every coefficient is `c·t^k` with `c` a nonnegative integer.
    pub fn is_manifestly_positive(&self) -> bool {
        self.coeffs.values().all(|c| match c.as_monomial() {
            Some((c, _)) => c.is_integer() && !c.is_negative(),
            None => false,
        })
    }
}

impl fmt::Display for BasisExpansion {
    /// `t^2*p{1} + 3*t*p{1,2} + p{1,2,3}`; the zero class is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.coeffs.iter().map(|(a, c)| {
            let (negative, factor) = c.render_as_factor();
            (negative, format!("{factor}p{a}"))
        });
        f.write_str(&join_pieces(pieces))
    }
}

impl fmt::Debug for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasisExpansion[n={}]({self})", self.n)
    }
}

impl From<SubsetIndex> for BasisExpansion {
    fn from(a: SubsetIndex) -> Self {
        Self::basis(a)
    }
}

/// Single-term helper: `c·t^k·p_A`.
pub fn term(a: SubsetIndex, c: i64, k: usize) -> BasisExpansion {
    let mut e = BasisExpansion::zero(a.rank());
    e.add_term(a, &UniPoly::monomial(Rational::from_integer(c.into()), k))
        .expect("same rank");
    e
}
