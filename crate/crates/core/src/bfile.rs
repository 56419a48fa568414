//! OEIS identifiers, b-file parsing and the local statistic each supported
//! sequence is compared against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::counting::{partitions_by_pentagonal, theta_seq, Counts};
use crate::error::{domain, Error, Result};

/// A sequence identifier of the form `A` followed by six digits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OeisId(String);

impl OeisId {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn digits(&self) -> &str {
        &self.0[1..]
    }

    /// `b001970.txt` for `A001970`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", self.digits())
    }

    pub fn bfile_url(&self) -> String {
        format!("https://oeis.org/{}/{}", self.0, self.bfile_name())
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        if b.len() == 7 && b[0] == b'A' && b[1..].iter().all(u8::is_ascii_digit) {
            Ok(OeisId(s.to_string()))
        } else {
            Err(domain(format!("{s:?} is not an OEIS id (expected A and six digits)")))
        }
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A sequence as published: the index of the first term and the terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisRef {
    pub id: OeisId,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl OeisRef {
    pub fn from_bfile(id: OeisId, text: &str) -> Result<Self> {
        let (offset, terms) = parse_bfile(text)?;
        Ok(OeisRef { id, offset, terms })
    }
}

/// Parses `index value` lines. Comment lines start with `#`; blank lines
/// are skipped. Indices must be consecutive and at least one term present.
pub fn parse_bfile(text: &str) -> Result<(i64, Vec<BigInt>)> {
    let mut offset = None;
    let mut terms = Vec::new();
    let mut pos = 0;
    for line in text.split_inclusive('\n') {
        let start = pos;
        pos += line.len();
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { pos: start, msg };
        let mut fields = body.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got {body:?}")));
        };
        let idx: i64 = idx.parse().map_err(|_| err(format!("bad index {idx:?}")))?;
        let val: BigInt = val.parse().map_err(|_| err(format!("bad value {val:?}")))?;
        let first = *offset.get_or_insert(idx);
        let expected = first.checked_add(terms.len() as i64).ok_or_else(|| err("index overflow".into()))?;
        if idx != expected {
            return Err(err(format!("index {idx} follows {}", expected - 1)));
        }
        terms.push(val);
    }
    match offset {
        Some(o) => Ok((o, terms)),
        None => Err(Error::Parse { pos, msg: "no terms".into() }),
    }
}

/// Largest index [`LocalSequence::terms`] will compute.
pub const MAX_LOCAL_INDEX: usize = 2000;

/// The local statistic behind each supported sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalSequence {
    /// `p(n)`, `n >= 0`
    Partitions,
    /// `θ(n) = p(0) + ... + p(n)`, `n >= 0`
    PartitionSums,
    /// `Φ(3, n)` with the empty object at `n = 0`
    DoublePartitions,
    /// `φ(k, 5)` as a function of `k >= 0`
    PhiColumn5,
}

impl LocalSequence {
    pub fn for_id(id: &OeisId) -> Result<Self> {
        Ok(match id.as_str() {
            "A000041" => LocalSequence::Partitions,
            "A000070" => LocalSequence::PartitionSums,
            "A001970" => LocalSequence::DoublePartitions,
            "A203552" => LocalSequence::PhiColumn5,
            other => return Err(domain(format!("no local statistic for {other}"))),
        })
    }

    pub fn description(self) -> &'static str {
        match self {
            LocalSequence::Partitions => "p(n)",
            LocalSequence::PartitionSums => "theta(n)",
            LocalSequence::DoublePartitions => "Phi(3,n)",
            LocalSequence::PhiColumn5 => "phi(k,5)",
        }
    }

    /// Terms at indices `offset..offset+count`. Negative indices are out of domain.
    pub fn terms(self, offset: i64, count: usize) -> Result<Vec<BigInt>> {
        if offset < 0 {
            return Err(domain("negative sequence index"));
        }
        let offset = offset as usize;
        let last = offset.saturating_add(count);
        if last > MAX_LOCAL_INDEX {
            return Err(domain(format!("indices beyond {MAX_LOCAL_INDEX} are not computed locally")));
        }
        Ok(match self {
            LocalSequence::Partitions => {
                let p = partitions_by_pentagonal(last.max(1));
                (offset..last).map(|n| if n == 0 { BigInt::one() } else { p.term(n).clone() }).collect()
            }
            LocalSequence::PartitionSums => theta_seq(last)[offset..last].to_vec(),
            LocalSequence::DoublePartitions => {
                let c = Counts::new(3, last.max(1))?;
                (offset..last).map(|n| if n == 0 { BigInt::one() } else { c.cumulative_phi(3, n) }).collect()
            }
            LocalSequence::PhiColumn5 => {
                let c = Counts::new(last.max(1), 5)?;
                (offset..last).map(|k| c.phi(k, 5)).collect()
            }
        })
    }
}

/// Result of comparing a published prefix with the local statistic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub offset: i64,
    pub compared: usize,
    /// `(index, published, local)` of the first disagreement.
    pub first_mismatch: Option<(i64, BigInt, BigInt)>,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the first `count` published terms (fewer if the b-file is
/// shorter) against the local statistic, using the b-file's own indices.
pub fn compare(published: &OeisRef, count: usize) -> Result<Comparison> {
    let local = LocalSequence::for_id(&published.id)?;
    let count = count.min(published.terms.len());
    let ours = local.terms(published.offset, count)?;
    let first_mismatch = published
        .terms
        .iter()
        .zip(&ours)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| (published.offset + i as i64, a.clone(), b.clone()));
    Ok(Comparison { offset: published.offset, compared: count, first_mismatch })
}
