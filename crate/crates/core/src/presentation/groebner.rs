//! Multivariate division and Buchberger's algorithm over `ℚ`, graded reverse
//! lexicographic order.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerLimits {
    /// Critical pairs taken off the queue before giving up.
    pub max_pairs: usize,
    /// Largest total degree allowed for a new basis element.
    pub max_degree: u32,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_pairs: 100_000,
            max_degree: 30,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reduce(&self, f: &MultiPoly) -> Result<MultiPoly> {
        normal_form(f, &self.elements)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Whether every S-polynomial reduces to zero.
    pub fn is_closed(&self) -> bool {
        for (i, f) in self.elements.iter().enumerate() {
            for g in &self.elements[i + 1..] {
                match normal_form(&s_polynomial(f, g), &self.elements) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

fn check_ring(f: &MultiPoly, g: &[MultiPoly]) -> Result<()> {
    match g.iter().find(|h| h.nvars() != f.nvars()) {
        Some(h) => Err(Error::RankMismatch {
            left: f.nvars(),
            right: h.nvars(),
        }),
        None => Ok(()),
    }
}

/// Remainder of `f` on division by `g`, trying divisors in the given order.
pub fn normal_form(f: &MultiPoly, g: &[MultiPoly]) -> Result<MultiPoly> {
    check_ring(f, g)?;
    let divisors: Vec<(&Monomial, &Rational, &MultiPoly)> = g
        .iter()
        .filter_map(|h| h.leading_term().map(|(m, c)| (m, c, h)))
        .collect();
    let mut p = f.clone();
    let mut remainder = MultiPoly::zero(f.nvars());
    while let Some((m, c)) = p.pop_leading() {
        match divisors
            .iter()
            .find_map(|(lm, lc, h)| m.div(lm).map(|q| (q, *lc, *h)))
        {
            Some((q, lc, h)) => {
                // p already lost its leading term; subtract the rest of h
                let factor = &c / lc;
                let mut tail = h.clone();
                tail.pop_leading();
                p.sub_mul_term(&q, &factor, &tail);
            }
            None => remainder.add_term(m, c),
        }
    }
    Ok(remainder)
}

/// `lcm/LT(f)·f − lcm/LT(g)·g`.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(), g.leading_term()) else {
        return MultiPoly::zero(f.nvars());
    };
    let lcm = mf.lcm(mg);
    let left = f.mul_term(&lcm.div(mf).expect("lcm"), &cf.recip());
    let right = g.mul_term(&lcm.div(mg).expect("lcm"), &cg.recip());
    &left - &right
}

pub fn buchberger(g: &[MultiPoly]) -> Result<GroebnerBasis> {
    buchberger_with_limits(g, GroebnerLimits::default())
}

type Pair = (Monomial, usize, usize);

/// Reduced Gröbner basis of the ideal generated by `g`.
///
/// Pairs are taken smallest lcm first, skipping those with coprime leading
/// monomials and those covered by the chain criterion.
pub fn buchberger_with_limits(g: &[MultiPoly], limits: GroebnerLimits) -> Result<GroebnerBasis> {
    let Some(first) = g.first() else {
        return Ok(GroebnerBasis {
            nvars: 0,
            order: MonomialOrder::DegRevLex,
            elements: Vec::new(),
        });
    };
    check_ring(first, g)?;
    let nvars = first.nvars();

    let mut basis: Vec<MultiPoly> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(MultiPoly::monic)
        .collect();
    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert((lm(&basis[i]).lcm(lm(&basis[j])), i, j));
            pending.insert((i, j));
        }
    }

    let mut taken = 0usize;
    while let Some((lcm, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        taken += 1;
        if taken > limits.max_pairs {
            return Err(Error::ResourceCap(format!(
                "Buchberger stopped after {} pairs with {} basis elements and {} pairs left",
                limits.max_pairs,
                basis.len(),
                queue.len() + 1
            )));
        }
        if lm(&basis[i]).is_coprime(lm(&basis[j])) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&lcm)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis)?;
        if r.is_zero() {
            continue;
        }
        let degree = r.total_degree().unwrap_or(0);
        if degree > limits.max_degree {
            return Err(Error::ResourceCap(format!(
                "Buchberger produced an element of degree {degree} (limit {}) with {} basis elements",
                limits.max_degree,
                basis.len()
            )));
        }
        let new = basis.len();
        basis.push(r.monic());
        for k in 0..new {
            queue.insert((lm(&basis[k]).lcm(lm(&basis[new])), k, new));
            pending.insert((k, new));
        }
    }

    Ok(GroebnerBasis {
        nvars,
        order: MonomialOrder::DegRevLex,
        elements: reduce_basis(basis)?,
    })
}

fn lm(p: &MultiPoly) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Minimal, fully interreduced, monic, sorted by decreasing leading monomial.
fn reduce_basis(basis: Vec<MultiPoly>) -> Result<Vec<MultiPoly>> {
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, h)| k != i && lm(h).divides(lm(g)) && (lm(h) != lm(g) || k < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, h)| h.clone())
            .collect();
        let mut tail = g.clone();
        let (m, c) = tail.pop_leading().expect("nonzero");
        let mut r = normal_form(&tail, &others)?;
        r.add_term(m, c);
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| lm(b).cmp(lm(a)));
    Ok(reduced)
}
