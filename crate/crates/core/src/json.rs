//! JSON documents for expansions, localized classes, fixed points and the
//! presentation. Field order is fixed by the struct definitions, so
//! re-serializing a parsed document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{all_subsets, fixed_point_permutation, v_permutation, SubsetIndex};
use crate::error::{Error, Result};
use crate::oracle::LocalizedClass;
use crate::poly::parse_unipoly;
use crate::presentation::RelationSet;
use crate::schubert::BasisExpansion;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub subset: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub n: u32,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub subset: Vec<u32>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedDoc {
    pub n: u32,
    pub values: Vec<ValueDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointDoc {
    pub subset: Vec<u32>,
    pub w: String,
    pub v_word: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointsDoc {
    pub n: u32,
    pub fixed_points: Vec<FixedPointDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub i: u32,
    pub subset: Vec<u32>,
    pub poly: String,
}

/// `quadratic_conjecture` is `"true"`, `"false"` or `"undetermined"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFlags {
    pub n: u32,
    pub quadratic_conjecture: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub n: u32,
    pub order: String,
    pub generators: Vec<GeneratorDoc>,
    pub flags: PresentationFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GiambelliDoc {
    pub n: u32,
    pub subset: Vec<u32>,
    pub sigma: String,
    pub monomial: String,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionDoc {
    pub n: u32,
    pub class: Vec<u32>,
    pub fixed_point: Vec<u32>,
    pub w: String,
    pub value: String,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        position: e.column(),
        message: e.to_string(),
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents contain only strings and integers")
}

pub fn from_json<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(json_error)
}

impl From<&BasisExpansion> for ExpansionDoc {
    fn from(e: &BasisExpansion) -> Self {
        ExpansionDoc {
            n: e.rank(),
            terms: e
                .iter()
                .map(|(a, c)| TermDoc {
                    subset: a.to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&ExpansionDoc> for BasisExpansion {
    type Error = Error;

    fn try_from(doc: &ExpansionDoc) -> Result<Self> {
        let mut e = BasisExpansion::zero(doc.n);
        for term in &doc.terms {
            e.add_term(
                SubsetIndex::new(doc.n, &term.subset)?,
                &parse_unipoly(&term.coeff)?,
            )?;
        }
        Ok(e)
    }
}

impl From<&LocalizedClass> for LocalizedDoc {
    fn from(f: &LocalizedClass) -> Self {
        LocalizedDoc {
            n: f.rank(),
            values: f
                .iter()
                .map(|(b, v)| ValueDoc {
                    subset: b.to_vec(),
                    value: v.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&LocalizedDoc> for LocalizedClass {
    type Error = Error;

    fn try_from(doc: &LocalizedDoc) -> Result<Self> {
        let mut f = LocalizedClass::zero(doc.n)?;
        let mut seen = std::collections::HashSet::new();
        for v in &doc.values {
            let b = SubsetIndex::new(doc.n, &v.subset)?;
            if !seen.insert(b) {
                return Err(Error::parse(0, format!("duplicate fixed point {b}")));
            }
            f.set(&b, parse_unipoly(&v.value)?);
        }
        Ok(f)
    }
}

pub fn fixed_points_doc(n: u32) -> Result<FixedPointsDoc> {
    let fixed_points = all_subsets(n)?
        .map(|a| FixedPointDoc {
            subset: a.to_vec(),
            w: fixed_point_permutation(&a).to_string(),
            v_word: v_permutation(&a).0,
        })
        .collect();
    Ok(FixedPointsDoc { n, fixed_points })
}

/// `quadratic` is `None` when the check was not run to completion.
pub fn presentation_doc(
    k: &RelationSet,
    quadratic: Option<bool>,
    quadratic_only: bool,
) -> PresentationDoc {
    let generators = k
        .iter()
        .filter(|r| !quadratic_only || r.poly.total_degree() == Some(2))
        .map(|r| GeneratorDoc {
            i: r.i,
            subset: r.a.to_vec(),
            poly: r.poly.to_string(),
        })
        .collect();
    PresentationDoc {
        n: k.rank(),
        order: crate::poly::MonomialOrder::DegRevLex.id().to_string(),
        generators,
        flags: PresentationFlags {
            n: k.rank(),
            quadratic_conjecture: match quadratic {
                Some(true) => "true",
                Some(false) => "false",
                None => "undetermined",
            }
            .to_string(),
        },
    }
}
