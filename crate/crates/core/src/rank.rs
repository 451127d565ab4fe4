//! Lexicographic ranks of score vectors.
//!
//! Two counters turn a priority-ordered score vector `(s_0, …, s_{k-1})`
//! into a single comparable value:
//!
//! * the grossone rank `s_0·①^(k-1) + … + s_{k-1}·①^0`, valid for any
//!   nonnegative rational scores;
//! * the binary rank `0.1…1 0 1…1 0 …` (runs of `s_i` ones separated by
//!   single zeros), defined for integer scores only and needing
//!   `Σ s_i + k − 1` bits.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::RankError;
use crate::number::GrossNumber;
use crate::rational::{parse_rational, Rational};

/// Largest binary rank, in bits, that [`binary_rank`] will build.
pub const MAX_BITS: u64 = 1 << 26;

/// Nonnegative scores, most important first (gold, silver, bronze, …).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector(Vec<Rational>);

impl ScoreVector {
    pub fn new(scores: Vec<Rational>) -> Result<Self, RankError> {
        if scores.is_empty() {
            return Err(RankError::EmptyScores);
        }
        if let Some((index, value)) = scores.iter().enumerate().find(|(_, s)| s.is_negative()) {
            return Err(RankError::NegativeScore {
                index,
                value: value.to_string(),
            });
        }
        Ok(ScoreVector(scores))
    }

    pub fn from_integers(scores: &[u64]) -> Result<Self, RankError> {
        Self::new(
            scores
                .iter()
                .map(|s| Rational::from_integer((*s).into()))
                .collect(),
        )
    }

    /// Comma-separated scores, e.g. `2,0,1` or `1/2,0.75`.
    pub fn parse(text: &str) -> Result<Self, RankError> {
        let scores = text
            .split(',')
            .map(|item| {
                parse_rational(item)
                    .ok_or_else(|| RankError::InvalidScore(format!("'{}' is not a number", item.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(scores)
    }

    pub fn scores(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ScoreVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&items.join(","))
    }
}

/// JSON shape `{"scores": [2, 0, 1]}`; non-integer scores are written as
/// strings such as `"1/2"`.
#[derive(Serialize, Deserialize)]
struct ScoresJson {
    scores: Vec<serde_json::Value>,
}

impl Serialize for ScoreVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let scores = self
            .0
            .iter()
            .map(|s| match s.to_integer().to_u64() {
                Some(v) if s.is_integer() => serde_json::Value::from(v),
                _ => serde_json::Value::from(s.to_string()),
            })
            .collect();
        ScoresJson { scores }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ScoreVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = ScoresJson::deserialize(deserializer)?;
        let scores = json
            .scores
            .iter()
            .map(|v| {
                let text = match v {
                    serde_json::Value::Number(n) => n.to_string(),
                    serde_json::Value::String(s) => s.clone(),
                    other => return Err(D::Error::custom(format!("bad score {other}"))),
                };
                parse_rational(&text).ok_or_else(|| D::Error::custom(format!("bad score {text}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ScoreVector::new(scores).map_err(D::Error::custom)
    }
}

/// `Σ scores[i]·①^(k−1−i)`.
pub fn gross_rank(v: &ScoreVector) -> GrossNumber {
    let k = v.len();
    GrossNumber::normalize(v.scores().iter().enumerate().map(|(i, s)| {
        crate::number::GrossTerm::new(Rational::from_integer(((k - 1 - i) as i64).into()), s.clone())
    }))
}

fn same_dimension(a: &ScoreVector, b: &ScoreVector) -> Result<(), RankError> {
    if a.len() != b.len() {
        return Err(RankError::DimensionMismatch(a.len(), b.len()));
    }
    Ok(())
}

pub fn gross_compare(a: &ScoreVector, b: &ScoreVector) -> Result<Ordering, RankError> {
    same_dimension(a, b)?;
    Ok(gross_rank(a).compare(&gross_rank(b)))
}

/// A binary fraction `0.b_1 b_2 … b_L`, stored as the integer
/// `b_1 … b_L` over `2^L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRank {
    numerator: BigUint,
    bit_length: u64,
}

impl BitRank {
    pub fn bit_length(&self) -> u64 {
        self.bit_length
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    /// Digits after the binary point, left-padded to `bit_length`.
    pub fn bits(&self) -> String {
        if self.bit_length == 0 {
            return String::new();
        }
        let raw = self.numerator.to_str_radix(2);
        let raw = if self.numerator.is_zero() { "" } else { raw.as_str() };
        let width = self.bit_length as usize;
        format!("{raw:0>width$}")
    }

    /// Exact value in `[0, 1)`.
    pub fn value(&self) -> Rational {
        let denominator = BigUint::one() << self.bit_length;
        Rational::new(self.numerator.clone().into(), denominator.into())
    }

    /// Splits the digits back into the tallies they encode.
    pub fn tallies(&self) -> Vec<u64> {
        self.bits()
            .split('0')
            .map(|run| run.len() as u64)
            .collect()
    }

    pub fn from_bits(bits: &str) -> Option<BitRank> {
        if !bits.bytes().all(|b| b == b'0' || b == b'1') {
            return None;
        }
        let numerator = if bits.is_empty() {
            BigUint::zero()
        } else {
            BigUint::parse_bytes(bits.as_bytes(), 2)?
        };
        Some(BitRank {
            numerator,
            bit_length: bits.len() as u64,
        })
    }
}

impl Ord for BitRank {
    fn cmp(&self, other: &Self) -> Ordering {
        // a / 2^la vs b / 2^lb
        let lhs = &self.numerator << other.bit_length;
        let rhs = &other.numerator << self.bit_length;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for BitRank {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.{}", self.bits())
    }
}

#[derive(Serialize, Deserialize)]
struct BitRankJson {
    bits: String,
    bit_length: u64,
}

impl Serialize for BitRank {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BitRankJson {
            bits: self.bits(),
            bit_length: self.bit_length,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BitRank {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = BitRankJson::deserialize(deserializer)?;
        let rank = BitRank::from_bits(&json.bits)
            .ok_or_else(|| D::Error::custom("bits must be a string of 0 and 1"))?;
        if rank.bit_length != json.bit_length {
            return Err(D::Error::custom(format!(
                "bit_length {} does not match {} bits",
                json.bit_length, rank.bit_length
            )));
        }
        Ok(rank)
    }
}

fn integer_tallies(v: &ScoreVector) -> Result<Vec<u64>, RankError> {
    v.scores()
        .iter()
        .enumerate()
        .map(|(index, s)| {
            if !s.is_integer() {
                return Err(RankError::NonIntegerScore {
                    index,
                    value: s.to_string(),
                });
            }
            s.to_integer()
                .to_u64()
                .filter(|t| *t <= MAX_BITS)
                .ok_or_else(|| RankError::TooManyBits(s.to_string()))
        })
        .collect()
}

/// Builds the binary-fraction rank of an integer score vector.
pub fn binary_rank(v: &ScoreVector) -> Result<BitRank, RankError> {
    let tallies = integer_tallies(v)?;
    let bit_length = tallies.iter().sum::<u64>() + (tallies.len() as u64 - 1);
    if bit_length > MAX_BITS {
        return Err(RankError::TooManyBits(bit_length.to_string()));
    }
    let mut numerator = BigUint::zero();
    for (i, t) in tallies.iter().enumerate() {
        if i > 0 {
            numerator <<= 1u32;
        }
        numerator <<= *t;
        numerator += (BigUint::one() << *t) - BigUint::one();
    }
    Ok(BitRank {
        numerator,
        bit_length,
    })
}

pub fn binary_compare(a: &ScoreVector, b: &ScoreVector) -> Result<Ordering, RankError> {
    same_dimension(a, b)?;
    Ok(binary_rank(a)?.cmp(&binary_rank(b)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Gross,
    Binary,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Gross => "gross",
            Method::Binary => "binary",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankValue {
    Gross(GrossNumber),
    Binary(BitRank),
}

impl RankValue {
    fn compare(&self, other: &RankValue) -> Ordering {
        match (self, other) {
            (RankValue::Gross(a), RankValue::Gross(b)) => a.compare(b),
            (RankValue::Binary(a), RankValue::Binary(b)) => a.cmp(b),
            _ => unreachable!("a leaderboard uses a single method"),
        }
    }
}

impl fmt::Display for RankValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankValue::Gross(g) => write!(f, "{g}"),
            RankValue::Binary(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Standing {
    /// 1-based; tied entries share a place.
    pub place: usize,
    pub label: String,
    pub scores: ScoreVector,
    pub rank: RankValue,
}

/// Sorts entries best first. Ties keep input order and share a place
/// (`1, 1, 3`).
pub fn leaderboard(
    method: Method,
    entries: Vec<(String, ScoreVector)>,
) -> Result<Vec<Standing>, RankError> {
    if let Some((_, first)) = entries.first() {
        for (_, v) in &entries {
            same_dimension(first, v)?;
        }
    }
    let mut rows = entries
        .into_iter()
        .map(|(label, scores)| {
            let rank = match method {
                Method::Gross => RankValue::Gross(gross_rank(&scores)),
                Method::Binary => RankValue::Binary(binary_rank(&scores)?),
            };
            Ok(Standing {
                place: 0,
                label,
                scores,
                rank,
            })
        })
        .collect::<Result<Vec<_>, RankError>>()?;
    rows.sort_by(|a, b| b.rank.compare(&a.rank));
    for i in 0..rows.len() {
        rows[i].place = if i > 0 && rows[i].rank.compare(&rows[i - 1].rank) == Ordering::Equal {
            rows[i - 1].place
        } else {
            i + 1
        };
    }
    Ok(rows)
}
