//! Parsers for the textual polynomial forms.
//!
//! Polynomials: `2*p1^2 - 2*t*p1 - 1/2*p1*p2`, variables `t` and `pI`.
//! Generator products (input to `expand`): `p1^3`, `p1*p2*p3`, `p1^0`, `1`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::multi::{Monomial, MultiPoly};
use super::rational::Rational;
use super::uni::UniPoly;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok((start, s))
    }

    fn small_int(&mut self) -> Result<u32> {
        let (at, s) = self.digits()?;
        s.parse()
            .map_err(|_| Error::parse(at, format!("integer {s} too large")))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn unexpected(&mut self) -> Error {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(&c) => Error::parse(self.pos, format!("unexpected character {:?}", c as char)),
            None => Error::parse(self.pos, "unexpected end of input"),
        }
    }
}

/// `"p<i>"` with `1 ≤ i < n`.
fn generator_index(cur: &mut Cursor<'_>, n: usize) -> Result<usize> {
    let at = cur.pos;
    let i = cur.small_int()? as usize;
    if i == 0 || i >= n {
        return Err(Error::parse(
            at,
            format!("generator p{i} is outside p1..p{}", n.saturating_sub(1)),
        ));
    }
    Ok(i)
}

fn exponent(cur: &mut Cursor<'_>) -> Result<u32> {
    if cur.eat(b'^') {
        cur.small_int()
    } else {
        Ok(1)
    }
}

/// Parses a polynomial in `t, p1, …, p_{n-1}` (a ring with `n` variables).
pub fn parse_multipoly(n: usize, s: &str) -> Result<MultiPoly> {
    let mut cur = Cursor::new(s);
    let mut out = MultiPoly::zero(n);
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') {
            if first {
                return Err(Error::parse(cur.pos - 1, "leading '+'"));
            }
            false
        } else if first {
            false
        } else if cur.at_end() {
            break;
        } else {
            return Err(cur.unexpected());
        };
        first = false;

        let mut coeff = Rational::from_integer(BigInt::from(if negative { -1 } else { 1 }));
        let mut exps = vec![0u32; n];
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let (_, num) = cur.digits()?;
                    let num: BigInt = num.parse().expect("digits");
                    let value = if cur.eat(b'/') {
                        let (dat, den) = cur.digits()?;
                        let den: BigInt = den.parse().expect("digits");
                        if den == BigInt::from(0) {
                            return Err(Error::parse(dat, "zero denominator"));
                        }
                        Rational::new(num, den)
                    } else {
                        Rational::from_integer(num)
                    };
                    coeff *= value;
                }
                Some(b't') => {
                    cur.pos += 1;
                    exps[0] += exponent(&mut cur)?;
                }
                Some(b'p') => {
                    cur.pos += 1;
                    let i = generator_index(&mut cur, n)?;
                    exps[i] += exponent(&mut cur)?;
                }
                _ => return Err(cur.unexpected()),
            }
            if !cur.eat(b'*') {
                break;
            }
        }
        out.add_term(Monomial::from_exponents(exps), coeff);
        if cur.at_end() {
            break;
        }
    }
    Ok(out)
}

/// Parses a polynomial in `t` alone, such as `"-1/2*t^2 + 3*t - 1"`.
pub fn parse_unipoly(s: &str) -> Result<UniPoly> {
    let p = parse_multipoly(1, s)?;
    let mut coeffs = Vec::new();
    for (m, c) in p.terms() {
        let k = m.exponents()[0] as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] = c.clone();
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Parses a product of generators into its multiset of indices (sorted).
///
/// `t` is rejected: it only arises in outputs.
pub fn parse_generator_product(n: u32, s: &str) -> Result<Vec<u32>> {
    let mut cur = Cursor::new(s);
    let mut factors = Vec::new();
    if cur.at_end() {
        return Err(Error::parse(0, "empty expression"));
    }
    loop {
        match cur.peek() {
            Some(b'p') => {
                cur.pos += 1;
                let i = generator_index(&mut cur, n as usize)? as u32;
                let e = exponent(&mut cur)?;
                factors.extend(std::iter::repeat_n(i, e as usize));
            }
            Some(b'1') => {
                let at = cur.pos;
                let (_, d) = cur.digits()?;
                if d != "1" {
                    return Err(Error::parse(at, "only the constant 1 is allowed"));
                }
            }
            Some(b't') => {
                return Err(Error::parse(
                    cur.pos,
                    "'t' is not allowed in a generator product",
                ));
            }
            _ => return Err(cur.unexpected()),
        }
        if cur.at_end() {
            break;
        }
        if !cur.eat(b'*') {
            return Err(cur.unexpected());
        }
    }
    factors.sort_unstable();
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    #[test]
    fn parses_polynomials() {
        let q = parse_multipoly(4, "2*p1^2 - 2*t*p1 - p1*p2").unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(q.to_string(), "-p1*p2 + 2*p1^2 - 2*t*p1");
        let r = parse_multipoly(4, "-1/2 * p3 + t^2").unwrap();
        assert_eq!(r.to_string(), "t^2 - 1/2*p3");
        assert_eq!(
            parse_multipoly(3, "p1*p1 - p1^2").unwrap(),
            MultiPoly::zero(3)
        );
        assert_eq!(
            parse_multipoly(3, "3/6").unwrap(),
            MultiPoly::constant(3, rat(1, 2))
        );
    }

    #[test]
    fn reports_positions() {
        match parse_multipoly(4, "p1 + p5") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        match parse_multipoly(4, "p1 ? p2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_multipoly(4, "1/0*p1").is_err());
        assert!(parse_multipoly(4, "+p1").is_err());
    }

    #[test]
    fn parses_univariate() {
        for text in [
            "0",
            "1",
            "t",
            "-t",
            "2*t",
            "-1/2*t^2 + 3*t - 1",
            "t^5 + 1/3",
        ] {
            assert_eq!(parse_unipoly(text).unwrap().to_string(), text);
        }
        assert!(parse_unipoly("p1").is_err());
    }

    #[test]
    fn parses_generator_products() {
        assert_eq!(parse_generator_product(4, "p1^3").unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_generator_product(4, "p2*p1").unwrap(), vec![1, 2]);
        assert_eq!(
            parse_generator_product(4, "p1^0").unwrap(),
            Vec::<u32>::new()
        );
        assert_eq!(parse_generator_product(4, "1").unwrap(), Vec::<u32>::new());
        match parse_generator_product(4, "p1*t") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_generator_product(4, "p4").is_err());
        assert!(parse_generator_product(4, "p0").is_err());
        assert!(parse_generator_product(4, "").is_err());
        assert!(parse_generator_product(4, "p1 p2").is_err());
        assert!(parse_generator_product(4, "2*p1").is_err());
    }
}
