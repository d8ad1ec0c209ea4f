use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rationals, always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `a` or `a/b`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str, position: usize) -> Result<Rational> {
    let bad = || Error::parse(position, format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(int(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
    }
}

/// Positive factor turning every coefficient into a coprime integer.
pub(crate) fn primitive_scale<'a>(coeffs: impl Iterator<Item = &'a Rational> + Clone) -> Rational {
    let lcm = coeffs
        .clone()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let gcd = coeffs.fold(BigInt::zero(), |acc, c| {
        acc.gcd(&(c.numer() * &lcm / c.denom()))
    });
    if gcd.is_zero() {
        return Rational::one();
    }
    Rational::new(lcm, gcd.abs())
}
