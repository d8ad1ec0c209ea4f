use std::fmt;

use crate::combinatorics::{all_subsets, SubsetIndex};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, UniPoly};
use crate::schubert::{giambelli_monomial, monk_product};

/// Largest rank for which the extended ring (one variable per subset) is built.
pub const MAX_EXTENDED_RANK: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// `m_{i,A}` over the extended ring.
    MonkM,
    /// `q_{i,A}` over `t, p_1, …, p_{n-1}`.
    GiambelliQ,
}

impl RelationKind {
    pub fn id(&self) -> &'static str {
        match self {
            RelationKind::MonkM => "monk-m",
            RelationKind::GiambelliQ => "giambelli-q",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub i: u32,
    pub a: SubsetIndex,
    pub kind: RelationKind,
    pub poly: MultiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    n: u32,
    relations: Vec<Relation>,
}

impl RelationSet {
    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Relation> {
        self.relations.iter()
    }

    pub fn polys(&self) -> Vec<MultiPoly> {
        self.relations.iter().map(|r| r.poly.clone()).collect()
    }

    /// Relations whose total degree is exactly `d`.
    pub fn of_degree(&self, d: u32) -> Vec<MultiPoly> {
        self.relations
            .iter()
            .filter(|r| r.poly.total_degree() == Some(d))
            .map(|r| r.poly.clone())
            .collect()
    }
}

impl<'a> IntoIterator for &'a RelationSet {
    type Item = &'a Relation;
    type IntoIter = std::slice::Iter<'a, Relation>;

    fn into_iter(self) -> Self::IntoIter {
        self.relations.iter()
    }
}

fn check_extended_rank(n: u32) -> Result<usize> {
    match n {
        0 => Err(Error::ZeroRank),
        n if n > MAX_EXTENDED_RANK => Err(Error::RankTooLarge {
            n,
            max: MAX_EXTENDED_RANK,
        }),
        n => Ok(1usize << (n - 1)),
    }
}

/// Number of variables of the extended ring: `t` plus one `P_A` per
/// nonempty subset. Variable `mask(A)` is `P_A`; `P_∅` is the constant 1.
pub fn extended_nvars(n: u32) -> Result<usize> {
    check_extended_rank(n)
}

/// `P_A` in the extended ring.
pub fn extended_variable(a: &SubsetIndex) -> Result<MultiPoly> {
    let nvars = check_extended_rank(a.rank())?;
    Ok(if a.is_empty() {
        MultiPoly::one(nvars)
    } else {
        MultiPoly::var(nvars, a.mask() as usize)
    })
}

/// Names the extended variables `t`, `P{1}`, `P{1,2}`, ….
pub fn extended_name(n: u32) -> impl Fn(usize) -> String {
    move |i| match i {
        0 => "t".to_string(),
        mask => SubsetIndex::from_mask(n, mask as u64)
            .map(|a| format!("P{a}"))
            .unwrap_or_else(|_| format!("P#{mask}")),
    }
}

/// A polynomial in `t` viewed in a ring with `nvars` variables.
pub fn uni_to_multi(u: &UniPoly, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (k, c) in u.terms() {
        let mut exps = vec![0; nvars];
        exps[0] = k as u32;
        out.add_term(Monomial::from_exponents(exps), c.clone());
    }
    out
}

/// `m_{i,A} = P_i·P_A − p_i(w_A)·P_A − Σ c^B_{i,A}·P_B` over the extended ring.
pub fn monk_relation(i: u32, a: &SubsetIndex) -> Result<MultiPoly> {
    let n = a.rank();
    let nvars = check_extended_rank(n)?;
    let generator = SubsetIndex::new(n, &[i])?;
    let mut m = extended_variable(&generator)?.checked_mul(&extended_variable(a)?)?;
    for (b, c) in monk_product(i, a)?.iter() {
        m = m.checked_sub(&uni_to_multi(c, nvars).checked_mul(&extended_variable(b)?)?)?;
    }
    Ok(m)
}

/// Images of the extended variables under `P_A ↦ σ(A)·∏_{j∈A} p_j`, `t ↦ t`.
pub fn giambelli_substitution(n: u32) -> Result<Vec<MultiPoly>> {
    check_extended_rank(n)?;
    let mut images = Vec::with_capacity(1 << (n - 1));
    for mask in 0..(1u64 << (n - 1)) {
        images.push(if mask == 0 {
            MultiPoly::t(n as usize)
        } else {
            giambelli_monomial(&SubsetIndex::from_mask(n, mask)?)
        });
    }
    Ok(images)
}

/// Applies the Giambelli substitution to an extended-ring polynomial.
pub fn apply_giambelli(n: u32, p: &MultiPoly) -> Result<MultiPoly> {
    p.substitute(&giambelli_substitution(n)?)
}

/// `q_{i,A}`: the image of `m_{i,A}` under the Giambelli substitution.
pub fn giambelli_q_relation(i: u32, a: &SubsetIndex) -> Result<MultiPoly> {
    apply_giambelli(a.rank(), &monk_relation(i, a)?)
}

/// All `m_{i,A}`, the un-substituted relations.
pub fn ideal_j(n: u32) -> Result<RelationSet> {
    let mut relations = Vec::new();
    for a in all_subsets(n)? {
        for i in 1..n {
            relations.push(Relation {
                i,
                a,
                kind: RelationKind::MonkM,
                poly: monk_relation(i, &a)?,
            });
        }
    }
    Ok(RelationSet { n, relations })
}

/// The generators `q_{i,A}` with `i ∈ A`, scaled to coprime integer
/// coefficients by a positive factor. Sign is left as produced, so the
/// `p_i·∏ p_j` term stays positive.
pub fn ideal_k(n: u32) -> Result<RelationSet> {
    let mut relations = Vec::new();
    for a in all_subsets(n)? {
        for i in a.members() {
            let q = giambelli_q_relation(i, &a)?;
            if !q.is_zero() {
                relations.push(Relation {
                    i,
                    a,
                    kind: RelationKind::GiambelliQ,
                    poly: q.primitive(),
                });
            }
        }
    }
    Ok(RelationSet { n, relations })
}

impl fmt::Display for RelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = extended_name(self.n);
        for r in &self.relations {
            let body = match r.kind {
                RelationKind::MonkM => r.poly.render_with(&names),
                RelationKind::GiambelliQ => r.poly.to_string(),
            };
            writeln!(f, "{} i={} A={}: {body}", r.kind.id(), r.i, r.a)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_multipoly, rat};
    use crate::schubert::restrict_generator;

    fn s(n: u32, m: &[u32]) -> SubsetIndex {
        SubsetIndex::new(n, m).unwrap()
    }

    fn p(n: u32, text: &str) -> MultiPoly {
        parse_multipoly(n as usize, text).unwrap()
    }

    fn ext(a: SubsetIndex) -> MultiPoly {
        extended_variable(&a).unwrap()
    }

    #[test]
    fn monk_relation_examples() {
        let n = 4;
        let t = MultiPoly::t(8);
        let m = monk_relation(1, &s(n, &[1, 2])).unwrap();
        let expected = &(&(&ext(s(n, &[1])) * &ext(s(n, &[1, 2])))
            - &(&t.scale(&rat(2, 1)) * &ext(s(n, &[1, 2]))))
            - &ext(s(n, &[1, 2, 3]));
        assert_eq!(m, expected);
        assert_eq!(
            m.render_with(&extended_name(n)),
            "P{1}*P{1,2} - 2*t*P{1,2} - P{1,2,3}"
        );

        let m = monk_relation(3, &s(n, &[1])).unwrap();
        assert_eq!(
            m,
            &(&ext(s(n, &[3])) * &ext(s(n, &[1]))) - &ext(s(n, &[1, 3]))
        );

        assert!(monk_relation(1, &s(2, &[])).unwrap().is_zero());
    }

    #[test]
    fn substitution_map() {
        let images = giambelli_substitution(4).unwrap();
        assert_eq!(images.len(), 8);
        assert_eq!(images[0], MultiPoly::t(4));
        assert_eq!(images[s(4, &[1, 2]).mask() as usize], p(4, "1/2*p1*p2"));
        assert_eq!(images[s(4, &[1, 3]).mask() as usize], p(4, "p1*p3"));
        assert_eq!(
            images[s(4, &[1, 2, 3]).mask() as usize],
            p(4, "1/6*p1*p2*p3")
        );
        let lifted = apply_giambelli(4, &ext(s(4, &[2, 3]))).unwrap();
        assert_eq!(lifted, p(4, "1/2*p2*p3"));
        assert_eq!(
            apply_giambelli(4, &ext(s(4, &[]))).unwrap(),
            MultiPoly::one(4)
        );
    }

    #[test]
    fn q_relation_examples() {
        assert!(giambelli_q_relation(4, &s(5, &[1, 2])).unwrap().is_zero());
        assert_eq!(
            giambelli_q_relation(1, &s(4, &[1, 2])).unwrap(),
            p(4, "1/2*p1^2*p2 - t*p1*p2 - 1/6*p1*p2*p3")
        );
        assert_eq!(
            giambelli_q_relation(1, &s(4, &[1])).unwrap(),
            p(4, "p1^2 - t*p1 - 1/2*p1*p2")
        );
    }

    // q_{i,A} written out term by term, without the extended ring.
    fn q_direct(i: u32, a: &SubsetIndex) -> MultiPoly {
        let n = a.rank();
        let nv = n as usize;
        let pa = giambelli_monomial(a);
        let mut q = &MultiPoly::var(nv, i as usize) * &pa;
        let weight = uni_to_multi(&restrict_generator(i, a).unwrap(), nv);
        q = &q - &(&weight * &pa);
        for k in 1..n {
            if a.contains(k) {
                continue;
            }
            let b = a.with(k).unwrap();
            let c = crate::schubert::monk_coefficient(i, a, &b).unwrap();
            let c = crate::poly::Rational::from_integer(c.value().clone().into());
            q = &q - &giambelli_monomial(&b).scale(&c);
        }
        q
    }

    #[test]
    fn q_relation_matches_direct_formula() {
        for n in 1..=6 {
            for a in all_subsets(n).unwrap() {
                for i in 1..n {
                    assert_eq!(
                        giambelli_q_relation(i, &a).unwrap(),
                        q_direct(i, &a),
                        "{i} {a}"
                    );
                }
            }
        }
    }

    #[test]
    fn ideal_small_ranks() {
        assert!(ideal_k(1).unwrap().is_empty());
        let k2 = ideal_k(2).unwrap();
        assert_eq!(k2.polys(), vec![p(2, "p1^2 - t*p1")]);
        assert_eq!(ideal_k(4).unwrap().len(), 12);
        assert_eq!(ideal_j(4).unwrap().len(), 24);
    }

    #[test]
    fn generators_are_primitive_integral() {
        for r in &ideal_k(5).unwrap() {
            assert_eq!(r.poly.primitive(), r.poly);
            let i = r.i as usize;
            // the p_i * prod p_j term keeps a positive coefficient
            let mut exps = vec![0u32; 5];
            for j in r.a.members() {
                exps[j as usize] += 1;
            }
            exps[i] += 1;
            let c = r.poly.coeff(&Monomial::from_exponents(exps));
            assert!(c > rat(0, 1), "{r:?}");
        }
    }

    #[test]
    fn extended_ring_bounds() {
        assert!(extended_nvars(0).is_err());
        assert_eq!(extended_nvars(1).unwrap(), 1);
        assert!(extended_nvars(MAX_EXTENDED_RANK + 1).is_err());
        assert_eq!(extended_name(4)(0), "t");
        assert_eq!(extended_name(4)(3), "P{1,2}");
    }
}
