use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::render::{join_signed, Term};
use crate::error::{Error, Result};

/// A polynomial in `t` with rational coefficients.
///
/// Stored densely by ascending exponent; trailing zeros are never kept, so
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The generator `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `Some((c, k))` when the polynomial is a single term `c·t^k`.
    pub fn as_monomial(&self) -> Option<(&Rational, usize)> {
        let mut it = self.terms();
        let (k, c) = it.next()?;
        it.next().is_none().then_some((c, k))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// The `q` with `self = q·divisor`; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }

    pub(crate) fn render_terms(&self) -> Vec<Term> {
        self.terms()
            .rev()
            .map(|(k, c)| {
                let var = match k {
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{k}"),
                };
                Term::new(c, var)
            })
            .collect()
    }

    /// Rendering as a factor in front of another symbol: `""` for 1,
    /// `"3*t*"`, `"(t + 1)*"`, …  Returns the sign separately.
    pub(crate) fn render_as_factor(&self) -> (bool, String) {
        let terms = self.render_terms();
        if let [single] = terms.as_slice() {
            let body = single.body();
            return (
                single.negative,
                if body == "1" {
                    String::new()
                } else {
                    format!("{body}*")
                },
            );
        }
        (false, format!("({self})*"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_signed(self.render_terms()))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl From<Rational> for UniPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Whether every coefficient is a nonnegative integer.
pub fn has_nonnegative_integer_coeffs(p: &UniPoly) -> bool {
    p.terms().all(|(_, c)| c.is_integer() && !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{int, rat};

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn arithmetic() {
        let t = UniPoly::t();
        assert_eq!(&t + &t, UniPoly::monomial(int(2), 1));
        let prod = &UniPoly::monomial(int(2), 1) * &UniPoly::monomial(int(3), 1);
        assert_eq!(prod, UniPoly::monomial(int(6), 2));
        assert!((&UniPoly::zero() * &poly(&[1, 2, 3])).is_zero());
        assert!((&t - &t).is_zero());
        assert_eq!((&t - &t).degree(), None);
    }

    #[test]
    fn exact_division() {
        let q = UniPoly::monomial(int(6), 3)
            .div_exact(&UniPoly::monomial(int(2), 1))
            .unwrap();
        assert_eq!(q, UniPoly::monomial(int(3), 2));
        assert_eq!(
            poly(&[0, 1, 1]).div_exact(&UniPoly::t()).unwrap(),
            poly(&[1, 1])
        );
        assert_eq!(
            poly(&[1, 1]).div_exact(&UniPoly::t()),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            poly(&[1]).div_exact(&UniPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            UniPoly::zero().div_exact(&poly(&[0, 0, 5])).unwrap(),
            UniPoly::zero()
        );
        assert_eq!(
            poly(&[1]).div_exact(&poly(&[0, 1])),
            Err(Error::InexactDivision)
        );
        // (t^2 - 1) / (t + 1) = t - 1
        assert_eq!(
            poly(&[-1, 0, 1]).div_exact(&poly(&[1, 1])).unwrap(),
            poly(&[-1, 1])
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::monomial(int(2), 1).to_string(), "2*t");
        assert_eq!(UniPoly::t().to_string(), "t");
        assert_eq!(
            UniPoly::from_coeffs(vec![int(-1), int(3), rat(-1, 2)]).to_string(),
            "-1/2*t^2 + 3*t - 1"
        );
        assert_eq!(UniPoly::monomial(int(-1), 3).to_string(), "-t^3");
        assert_eq!(UniPoly::one().to_string(), "1");
    }

    #[test]
    fn evaluation() {
        let p = UniPoly::from_coeffs(vec![int(1), rat(1, 2), int(2)]);
        assert_eq!(p.eval(&int(2)), int(10));
    }
}
