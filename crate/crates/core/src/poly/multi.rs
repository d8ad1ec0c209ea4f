//! Sparse multivariate polynomials over `t, x_1, …, x_m`.
//!
//! Variable 0 is always `t`. In the presentation ring of rank `n` the
//! remaining variables are `p_1, …, p_{n-1}`; the extended ring used for the
//! abstract Monk relations reuses the same type with one variable per subset.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{primitive_scale, Rational};
use super::render::{join_signed, Term};
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// Supported monomial orders. Only graded reverse lexicographic is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `t < x_1 < x_2 < … < x_m`.
    DegRevLex,
}

impl MonomialOrder {
    pub fn id(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

/// A dense exponent vector. `Ord` is [`MonomialOrder::DegRevLex`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names(i)
                } else {
                    format!("{}^{e}", names(i))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0[0].cmp(&self.0[0]))
            .then_with(|| {
                for i in 1..self.0.len() {
                    match other.0[i].cmp(&self.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Default names: `t, p1, p2, …`.
pub fn presentation_name(i: usize) -> String {
    if i == 0 {
        "t".to_string()
    } else {
        format!("p{i}")
    }
}

/// A polynomial with rational coefficients in `nvars` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, index), Rational::one());
        p
    }

    /// `t` in a ring with `nvars` variables.
    pub fn t(nvars: usize) -> Self {
        Self::var(nvars, 0)
    }

    pub fn term(mono: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(mono.nvars());
        p.add_term(mono, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// For the presentation ring the number of variables equals the rank.
    pub fn rank(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms from largest to smallest monomial.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        assert_eq!(
            mono.nvars(),
            self.nvars,
            "monomial has the wrong number of variables"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RankMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_ring(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last()
    }

    /// `self -= c·m·g`, in place.
    pub fn sub_mul_term(&mut self, mono: &Monomial, c: &Rational, g: &MultiPoly) {
        for (m, x) in &g.terms {
            self.add_term(m.mul(mono), -(x * c));
        }
    }

    /// `c·m·self`.
    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        // multiplication by a monomial preserves the order
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.mul(mono), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(MultiPoly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Scaled by a positive rational so the coefficients are coprime integers.
    pub fn primitive(&self) -> MultiPoly {
        self.scale(&primitive_scale(self.terms.values()))
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Scaled so the leading coefficient is ±1, keeping its sign.
    pub fn unit_leading(&self) -> MultiPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.abs().recip()),
            None => self.clone(),
        }
    }

    /// Substitutes a univariate value for every variable.
    pub fn eval(&self, values: &[UniPoly]) -> UniPoly {
        assert_eq!(values.len(), self.nvars);
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut term = UniPoly::constant(c.clone());
            for (v, &e) in values.iter().zip(m.exponents()) {
                if e > 0 {
                    term = &term * &v.pow(e);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Ring map sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(self.nvars, MultiPoly::nvars);
        let mut acc = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                if e > 0 {
                    term = term.checked_mul(&img.pow(e))?;
                }
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    pub fn render_with(&self, names: &dyn Fn(usize) -> String) -> String {
        join_signed(self.terms().map(|(m, c)| Term::new(c, m.render(names))))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&presentation_name))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.nvars)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    /// Panics on a ring mismatch; see [`MultiPoly::checked_add`].
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs)
            .expect("adding polynomials from different rings")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs)
            .expect("subtracting polynomials from different rings")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs)
            .expect("multiplying polynomials from different rings")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_multipoly;
    use crate::poly::rational::{int, rat};

    fn p(n: usize, s: &str) -> MultiPoly {
        parse_multipoly(n, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!((&p(4, "p1") * &p(4, "p2")).to_string(), "p1*p2");
        let q = p(4, "p1^2 - t*p1");
        assert_eq!(&q + &MultiPoly::zero(4), q);
        let g = p(4, "2*p1^2 - 2*t*p1 - p1*p2");
        assert_eq!(g.scale(&rat(1, 2)), p(4, "p1^2 - t*p1 - 1/2*p1*p2"));
        assert_eq!(
            p(3, "p1").checked_add(&p(4, "p1")),
            Err(Error::RankMismatch { left: 3, right: 4 })
        );
        assert!(p(3, "p1").checked_mul(&p(2, "p1")).is_err());
    }

    #[test]
    fn degrevlex_with_t_smallest() {
        let q = p(4, "3*p1^2*p2 - 6*t*p1*p2 - p1*p2*p3");
        assert_eq!(q.to_string(), "-p1*p2*p3 + 3*p1^2*p2 - 6*t*p1*p2");
        let lm = |s: &str| p(4, s).leading_monomial().unwrap().clone();
        assert!(lm("p3^2") > lm("p2*p3"));
        assert!(lm("p2*p3") > lm("p2^2"));
        assert!(lm("p2^2") > lm("p1*p3"));
        assert!(lm("p1*p3") > lm("p1*p2"));
        assert!(lm("p1*p2") > lm("p1^2"));
        assert!(lm("p1^2") > lm("t*p3"));
        assert!(lm("t*p1") > lm("t^2"));
        assert!(lm("p1") < lm("t^2"));
    }

    #[test]
    fn normalisation() {
        let q = p(4, "1/2*p1^2*p2 - t*p1*p2 - 1/6*p1*p2*p3");
        assert_eq!(q.primitive(), p(4, "3*p1^2*p2 - 6*t*p1*p2 - p1*p2*p3"));
        let neg = p(3, "-4*p1 + 2*t");
        assert_eq!(neg.primitive(), p(3, "-2*p1 + t"));
        assert_eq!(neg.monic(), p(3, "p1 - 1/2*t"));
    }

    #[test]
    fn evaluation_and_substitution() {
        let q = p(3, "p1*p2 - t*p1");
        let v = q.eval(&[UniPoly::t(), UniPoly::monomial(int(2), 1), UniPoly::t()]);
        assert_eq!(v, UniPoly::monomial(int(0), 0));
        let images = [p(2, "t"), p(2, "p1"), p(2, "p1 + t")];
        assert_eq!(q.substitute(&images).unwrap(), p(2, "p1^2"));
    }
}
