//! Structured records for machine consumption.
//!
//! Every record carries `schema_version`; rationals are strings `p` or
//! `p/q` and group exponents are decimal strings, so values of any size
//! survive a JSON round trip.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraElem, AlgebraError, AlgebraParams};
use crate::field::FieldElem;
use crate::group::GroupWord;
use crate::index_set::IndexSet;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::series::Series;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),
    #[error("malformed rational `{0}`")]
    Rational(String),
    #[error("malformed exponent `{0}`")]
    Exponent(String),
    #[error("indices must be positive")]
    Index,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn check_version(v: u32) -> Result<(), RecordError> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(RecordError::SchemaVersion(v))
    }
}

fn rat(s: &str) -> Result<Rational, RecordError> {
    parse_rational(s).ok_or_else(|| RecordError::Rational(s.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub mask: Vec<u32>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    /// `[index, exponent]` pairs in increasing index order.
    pub word: Vec<(u32, String)>,
    pub coeff: Vec<CoeffRecord>,
}

/// A series: one entry per term in ascending group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub schema_version: u32,
    pub trunc: Option<u32>,
    pub terms: Vec<TermRecord>,
}

impl From<&Series> for SeriesRecord {
    fn from(s: &Series) -> Self {
        SeriesRecord {
            schema_version: SCHEMA_VERSION,
            trunc: s.truncation(),
            terms: s
                .terms()
                .map(|(w, a)| TermRecord {
                    word: w.exponents().map(|(i, n)| (i, n.to_string())).collect(),
                    coeff: a
                        .terms()
                        .map(|(m, c)| CoeffRecord {
                            mask: m.as_slice().to_vec(),
                            value: format_rational(c),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&SeriesRecord> for Series {
    type Error = RecordError;

    fn try_from(r: &SeriesRecord) -> Result<Self, RecordError> {
        check_version(r.schema_version)?;
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in &r.terms {
            let mut exps = Vec::with_capacity(t.word.len());
            for (i, n) in &t.word {
                if *i == 0 {
                    return Err(RecordError::Index);
                }
                let n: BigInt = n.parse().map_err(|_| RecordError::Exponent(n.clone()))?;
                exps.push((*i, n));
            }
            let mut coeff = Vec::with_capacity(t.coeff.len());
            for c in &t.coeff {
                if c.mask.contains(&0) {
                    return Err(RecordError::Index);
                }
                coeff.push((c.mask.iter().copied().collect::<IndexSet>(), rat(&c.value)?));
            }
            terms.push((GroupWord::from_exponents(exps), FieldElem::from_terms(coeff)));
        }
        Ok(Series::from_terms(terms).with_truncation(r.trunc))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraParamsRecord {
    pub schema_version: u32,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl From<&AlgebraParams> for AlgebraParamsRecord {
    fn from(p: &AlgebraParams) -> Self {
        AlgebraParamsRecord {
            schema_version: SCHEMA_VERSION,
            a: p.a().iter().map(format_rational).collect(),
            b: p.b().iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<&AlgebraParamsRecord> for AlgebraParams {
    type Error = RecordError;

    fn try_from(r: &AlgebraParamsRecord) -> Result<Self, RecordError> {
        check_version(r.schema_version)?;
        let a = r.a.iter().map(|s| rat(s)).collect::<Result<_, _>>()?;
        let b = r.b.iter().map(|s| rat(s)).collect::<Result<_, _>>()?;
        Ok(AlgebraParams::new(a, b)?)
    }
}

/// An element of `A_n`: coordinates in basis-index order `ε + 2^n μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElemRecord {
    pub schema_version: u32,
    pub n: usize,
    pub coords: Vec<String>,
}

impl AlgebraElemRecord {
    pub fn new(params: &AlgebraParams, x: &AlgebraElem) -> Self {
        AlgebraElemRecord {
            schema_version: SCHEMA_VERSION,
            n: params.factors(),
            coords: x.coords().iter().map(format_rational).collect(),
        }
    }

    pub fn to_elem(&self, params: &AlgebraParams) -> Result<AlgebraElem, RecordError> {
        check_version(self.schema_version)?;
        if self.n != params.factors() {
            return Err(AlgebraError::DimensionMismatch {
                expected: params.dim(),
                found: 1 << (2 * self.n.min(16)),
            }
            .into());
        }
        let coords = self.coords.iter().map(|s| rat(s)).collect::<Result<_, _>>()?;
        Ok(params.element(coords)?)
    }
}
