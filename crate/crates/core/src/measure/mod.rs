//! Grossone measures ("number of elements") of infinite numeral sets.
//!
//! A [`Measure`] is either a gross-number or an exponential form
//! `coeff · base^exponent + offset` with an infinite exponent, which is how
//! power sets and positional-numeral sets are counted. Exponentials are
//! ordered exactly: `q1·ln b1` against `q2·ln b2` is decided by comparing the
//! integers `b1^(q1·d)` and `b2^(q2·d)`, never by floating logarithms.

mod descriptor;
mod grammar;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::MeasureError;
use crate::number::{Class, GrossNumber};
use crate::rational::{lcm, pow_int, Rational};
use crate::syntax::{print_styled, Style};

pub use descriptor::{
    arithmetic_sequence_length, catalog, check_sequence, max_sequence_length, measure,
    zero_numeral_count, CantorLabel, CatalogEntry, FractionNumerals, NumeralSystem,
    SetDescriptor,
};
pub use grammar::parse_set;

/// Largest power computed while ordering exponential measures.
const MAX_COMPARE_EXPONENT: u32 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Measure {
    /// A gross-number. With `floor` set the count is `⌊value⌋`.
    Poly { value: GrossNumber, floor: bool },
    /// `coeff · base^exponent + offset`. With `floor` set the exponent is
    /// `⌊exponent⌋`.
    Exp {
        coeff: Rational,
        base: u64,
        exponent: GrossNumber,
        offset: GrossNumber,
        floor: bool,
    },
}

impl Measure {
    pub fn poly(value: GrossNumber) -> Result<Measure, MeasureError> {
        Self::check(Measure::Poly {
            value,
            floor: false,
        })
    }

    pub fn exp(
        coeff: Rational,
        base: u64,
        exponent: GrossNumber,
        offset: GrossNumber,
    ) -> Result<Measure, MeasureError> {
        Self::check(Measure::Exp {
            coeff,
            base,
            exponent,
            offset,
            floor: false,
        })
    }

    /// Validates the invariants of a measure built by hand.
    pub fn check(self) -> Result<Measure, MeasureError> {
        match &self {
            Measure::Poly { value, .. } if value.is_negative() => Err(
                MeasureError::InvalidDescriptor(format!("negative count {value}")),
            ),
            Measure::Exp { coeff, .. } if !coeff.is_positive() => Err(
                MeasureError::InvalidDescriptor(format!("coefficient {coeff} is not positive")),
            ),
            Measure::Exp { base, .. } if *base < 2 => Err(MeasureError::InvalidDescriptor(
                format!("base {base} is below 2"),
            )),
            Measure::Exp { exponent, .. }
                if exponent.classify() != Class::Infinite || !exponent.is_positive() =>
            {
                Err(MeasureError::InvalidDescriptor(format!(
                    "exponent {exponent} is not positive infinite"
                )))
            }
            _ => Ok(self),
        }
    }

    pub fn with_floor(self, floor: bool) -> Measure {
        match self {
            Measure::Poly { value, .. } => Measure::Poly { value, floor },
            Measure::Exp {
                coeff,
                base,
                exponent,
                offset,
                ..
            } => Measure::Exp {
                coeff,
                base,
                exponent,
                offset,
                floor,
            },
        }
    }

    pub fn floor(&self) -> bool {
        match self {
            Measure::Poly { floor, .. } | Measure::Exp { floor, .. } => *floor,
        }
    }

    /// The gross-number value of a polynomial measure.
    pub fn as_poly(&self) -> Option<&GrossNumber> {
        match self {
            Measure::Poly { value, .. } => Some(value),
            Measure::Exp { .. } => None,
        }
    }

    /// Adds `delta` elements (negative to remove them).
    pub fn shift(self, delta: &BigInt) -> Result<Measure, MeasureError> {
        let delta = GrossNumber::from_rational(Rational::from_integer(delta.clone()));
        match self {
            Measure::Poly { value, floor } => Measure::Poly {
                value: &value + &delta,
                floor,
            }
            .check(),
            Measure::Exp {
                coeff,
                base,
                exponent,
                offset,
                floor,
            } => Ok(Measure::Exp {
                coeff,
                base,
                exponent,
                offset: &offset + &delta,
                floor,
            }),
        }
    }

    pub fn display(&self, style: Style) -> String {
        match self {
            Measure::Poly { value, floor } => {
                let text = print_styled(value, style);
                if *floor {
                    format!("floor({text})")
                } else {
                    text
                }
            }
            Measure::Exp {
                coeff,
                base,
                exponent,
                offset,
                floor,
            } => {
                let mut out = String::new();
                if !coeff.is_one() {
                    out.push_str(&format!("{coeff}*"));
                }
                let power = print_styled(exponent, style);
                let atomic = power == style.unit();
                out.push_str(&match (floor, atomic) {
                    (true, _) => format!("{base}^floor({power})"),
                    (false, true) => format!("{base}^{power}"),
                    (false, false) => format!("{base}^({power})"),
                });
                if !offset.is_zero() {
                    let text = print_styled(offset, style);
                    match text.strip_prefix('-') {
                        Some(rest) => out.push_str(&format!(" - {rest}")),
                        None => out.push_str(&format!(" + {text}")),
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Style::default()))
    }
}

/// Orders two measures.
///
/// Floor annotations only matter when the unannotated values are within a
/// finite distance of each other; such comparisons are refused with
/// [`MeasureError::AmbiguousComparison`] (identical measures still compare
/// equal).
pub fn compare_measure(a: &Measure, b: &Measure) -> Result<Ordering, MeasureError> {
    if a == b {
        return Ok(Ordering::Equal);
    }
    match (a, b) {
        (Measure::Poly { value: x, floor: fx }, Measure::Poly { value: y, floor: fy }) => {
            if !fx && !fy {
                return Ok(x.compare(y));
            }
            let margin = x - y;
            if margin.classify() == Class::Infinite {
                Ok(margin.compare(&GrossNumber::zero()))
            } else {
                Err(ambiguous(a, b))
            }
        }
        (Measure::Exp { .. }, Measure::Poly { .. }) => Ok(Ordering::Greater),
        (Measure::Poly { .. }, Measure::Exp { .. }) => Ok(Ordering::Less),
        (
            Measure::Exp {
                coeff: c1,
                base: b1,
                exponent: e1,
                offset: o1,
                floor: f1,
            },
            Measure::Exp {
                coeff: c2,
                base: b2,
                exponent: e2,
                offset: o2,
                floor: f2,
            },
        ) => {
            let powers: BTreeSet<&Rational> = e1
                .terms()
                .iter()
                .chain(e2.terms())
                .map(|t| &t.exponent)
                .collect();
            // Infinite part of exponent·ln(base): any difference here is an
            // infinite factor between the two values.
            for p in powers.iter().rev().filter(|p| p.is_positive()) {
                let ord = compare_log_terms(&e1.coefficient(p), *b1, &e2.coefficient(p), *b2)?;
                if ord != Ordering::Equal {
                    return Ok(ord);
                }
            }
            if *f1 || *f2 {
                return Err(ambiguous(a, b));
            }
            let zero = Rational::zero();
            let ord = compare_scaled_powers(
                c1,
                *b1,
                &e1.coefficient(&zero),
                c2,
                *b2,
                &e2.coefficient(&zero),
            )?;
            if ord != Ordering::Equal {
                return Ok(ord);
            }
            for p in powers.iter().rev().filter(|p| p.is_negative()) {
                let ord = compare_log_terms(&e1.coefficient(p), *b1, &e2.coefficient(p), *b2)?;
                if ord != Ordering::Equal {
                    return Ok(ord);
                }
            }
            Ok(o1.compare(o2))
        }
    }
}

fn ambiguous(a: &Measure, b: &Measure) -> MeasureError {
    MeasureError::AmbiguousComparison(format!("{a} vs {b}"))
}

/// Orders `q1·ln(b1)` against `q2·ln(b2)`.
pub fn compare_log_terms(
    q1: &Rational,
    b1: u64,
    q2: &Rational,
    b2: u64,
) -> Result<Ordering, MeasureError> {
    let (s1, s2) = (sign(q1), sign(q2));
    if s1 != s2 || s1 == Ordering::Equal {
        return Ok(s1.cmp(&s2));
    }
    if b1 == b2 {
        return Ok(q1.cmp(q2));
    }
    let d = lcm(q1.denom(), q2.denom());
    let x = (q1 * Rational::from_integer(d.clone())).to_integer();
    let y = (q2 * Rational::from_integer(d)).to_integer();
    let lhs = big_pow(b1, &x.abs())?;
    let rhs = big_pow(b2, &y.abs())?;
    Ok(if s1 == Ordering::Greater {
        lhs.cmp(&rhs)
    } else {
        rhs.cmp(&lhs)
    })
}

/// Orders `c1·b1^f1` against `c2·b2^f2` for positive `c` and rational `f`,
/// raising both sides to the common denominator of the exponents.
fn compare_scaled_powers(
    c1: &Rational,
    b1: u64,
    f1: &Rational,
    c2: &Rational,
    b2: u64,
    f2: &Rational,
) -> Result<Ordering, MeasureError> {
    let d = lcm(f1.denom(), f2.denom());
    let side = |c: &Rational, b: u64, f: &Rational| -> Result<Rational, MeasureError> {
        let base = Rational::from_integer(BigInt::from(b));
        let scaled = (f * Rational::from_integer(d.clone())).to_integer();
        let too_large = || MeasureError::TooLarge(format!("{b}^({f})"));
        let power = pow_int(&base, &scaled).ok_or_else(too_large)?;
        let coeff = pow_int(c, &d).ok_or_else(too_large)?;
        Ok(coeff * power)
    };
    Ok(side(c1, b1, f1)?.cmp(&side(c2, b2, f2)?))
}

fn big_pow(base: u64, exponent: &BigInt) -> Result<BigUint, MeasureError> {
    let e = exponent
        .to_u32()
        .filter(|e| *e <= MAX_COMPARE_EXPONENT)
        .ok_or_else(|| MeasureError::TooLarge(format!("{base}^{exponent}")))?;
    Ok(num_traits::pow(BigUint::from(base), e as usize))
}

fn sign(q: &Rational) -> Ordering {
    q.cmp(&Rational::zero())
}

#[derive(Serialize, Deserialize)]
struct MeasureJson {
    form: String,
    coeff: Option<String>,
    base: Option<u64>,
    exponent: Option<String>,
    offset: String,
    floor: bool,
}

impl Serialize for Measure {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let json = match self {
            Measure::Poly { value, floor } => MeasureJson {
                form: "poly".into(),
                coeff: None,
                base: None,
                exponent: None,
                offset: value.to_string(),
                floor: *floor,
            },
            Measure::Exp {
                coeff,
                base,
                exponent,
                offset,
                floor,
            } => MeasureJson {
                form: "exp".into(),
                coeff: Some(coeff.to_string()),
                base: Some(*base),
                exponent: Some(exponent.to_string()),
                offset: offset.to_string(),
                floor: *floor,
            },
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Measure {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = MeasureJson::deserialize(deserializer)?;
        let number = |text: &str| crate::syntax::evaluate(text).map_err(D::Error::custom);
        let offset = number(&json.offset)?;
        let measure = match json.form.as_str() {
            "poly" => Measure::Poly {
                value: offset,
                floor: json.floor,
            },
            "exp" => {
                let coeff = json
                    .coeff
                    .as_deref()
                    .and_then(crate::rational::parse_rational)
                    .ok_or_else(|| D::Error::custom("exp measure needs a rational coeff"))?;
                let base = json
                    .base
                    .ok_or_else(|| D::Error::custom("exp measure needs a base"))?;
                let exponent = number(
                    json.exponent
                        .as_deref()
                        .ok_or_else(|| D::Error::custom("exp measure needs an exponent"))?,
                )?;
                Measure::Exp {
                    coeff,
                    base,
                    exponent,
                    offset,
                    floor: json.floor,
                }
            }
            other => return Err(D::Error::custom(format!("unknown measure form {other:?}"))),
        };
        measure.check().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::syntax::evaluate;

    fn gn(text: &str) -> GrossNumber {
        evaluate(text).unwrap()
    }

    fn exp(coeff: Rational, base: u64, exponent: &str, offset: &str) -> Measure {
        Measure::exp(coeff, base, gn(exponent), gn(offset)).unwrap()
    }

    #[test]
    fn decimal_beats_binary() {
        let ten = exp(int(1), 10, "G", "0");
        let two = exp(int(1), 2, "G", "0");
        assert_eq!(compare_measure(&ten, &two), Ok(Ordering::Greater));
        assert_eq!(compare_measure(&two, &ten), Ok(Ordering::Less));
    }

    #[test]
    fn closed_interval_has_one_more_element() {
        let closed = exp(int(1), 2, "G", "1");
        let open = exp(int(1), 2, "G", "0");
        assert_eq!(compare_measure(&closed, &open), Ok(Ordering::Greater));
    }

    #[test]
    fn exponent_comparison() {
        let a = exp(int(1), 2, "2*G + 1", "0");
        let b = exp(int(1), 2, "0.5*G", "0");
        assert_eq!(compare_measure(&a, &b), Ok(Ordering::Greater));
        let p = Measure::poly(gn("G")).unwrap();
        assert_eq!(compare_measure(&p, &p.clone()), Ok(Ordering::Equal));
    }

    #[test]
    fn finite_exponent_level_uses_coefficients() {
        // 2^(G+1) = 2*2^G < 3*2^G, and 4^G = 2^(2G)
        let a = exp(int(1), 2, "G + 1", "0");
        let b = exp(int(3), 2, "G", "0");
        assert_eq!(compare_measure(&a, &b), Ok(Ordering::Less));
        let c = exp(int(2), 2, "G", "5");
        assert_eq!(compare_measure(&a, &c), Ok(Ordering::Less));
        let d = exp(int(2), 2, "G", "0");
        assert_eq!(compare_measure(&a, &d), Ok(Ordering::Equal));
        let four = exp(int(1), 4, "G", "0");
        let two_sq = exp(int(1), 2, "2*G", "0");
        assert_eq!(compare_measure(&four, &two_sq), Ok(Ordering::Equal));
        // 8^(1/3) = 2: 2^G vs 8^(G/3) equal, 9^(G/2) = 3^G greater
        let eight = exp(int(1), 8, "G/3", "0");
        assert_eq!(compare_measure(&exp(int(1), 2, "G", "0"), &eight), Ok(Ordering::Equal));
        let nine = exp(int(1), 9, "G/2", "0");
        assert_eq!(compare_measure(&nine, &eight), Ok(Ordering::Greater));
    }

    #[test]
    fn log_terms_with_mixed_signs() {
        assert_eq!(
            compare_log_terms(&int(-1), 2, &int(0), 3),
            Ok(Ordering::Less)
        );
        assert_eq!(
            compare_log_terms(&int(-1), 2, &int(-1), 3),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            compare_log_terms(&ratio(3, 2), 4, &int(3), 2),
            Ok(Ordering::Equal)
        );
    }

    #[test]
    fn floor_annotations() {
        let root = Measure::Poly {
            value: gn("G^(1/2)"),
            floor: true,
        };
        let whole = Measure::poly(gn("G")).unwrap();
        assert_eq!(compare_measure(&root, &whole), Ok(Ordering::Less));
        let near = Measure::poly(gn("G^(1/2) + 3")).unwrap();
        assert!(matches!(
            compare_measure(&root, &near),
            Err(MeasureError::AmbiguousComparison(_))
        ));
        assert_eq!(compare_measure(&root, &root.clone()), Ok(Ordering::Equal));
        let big = Measure::Exp {
            coeff: int(1),
            base: 2,
            exponent: gn("G^(1/2)"),
            offset: GrossNumber::zero(),
            floor: true,
        };
        let small = exp(int(1), 2, "G^(1/2)", "0");
        assert!(matches!(
            compare_measure(&big, &small),
            Err(MeasureError::AmbiguousComparison(_))
        ));
        assert_eq!(
            compare_measure(&big, &exp(int(1), 2, "G", "0")),
            Ok(Ordering::Less)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(exp(int(2), 10, "G", "0").to_string(), "2*10^G");
        assert_eq!(exp(int(1), 2, "G", "1").to_string(), "2^G + 1");
        assert_eq!(exp(int(1), 2, "G", "-3").to_string(), "2^G - 3");
        assert_eq!(exp(int(1), 2, "G", "1 - G").to_string(), "2^G - G + 1");
        assert_eq!(exp(int(1), 2, "G/2", "0").to_string(), "2^(1/2*G)");
        assert_eq!(
            exp(int(1), 2, "G", "0").display(Style { unicode: true }),
            "2^①"
        );
    }

    #[test]
    fn invalid_measures_are_rejected() {
        assert!(Measure::poly(gn("-G")).is_err());
        assert!(Measure::exp(int(0), 2, gn("G"), GrossNumber::zero()).is_err());
        assert!(Measure::exp(int(1), 1, gn("G"), GrossNumber::zero()).is_err());
        assert!(Measure::exp(int(1), 2, gn("5"), GrossNumber::zero()).is_err());
    }

    #[test]
    fn json_shape() {
        let m = exp(int(2), 10, "G", "0");
        let json = serde_json::to_value(&m).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "form": "exp", "coeff": "2", "base": 10,
                "exponent": "G", "offset": "0", "floor": false
            })
        );
        let back: Measure = serde_json::from_value(json).unwrap();
        assert_eq!(back, m);
        let bad = serde_json::json!({
            "form": "exp", "coeff": "2", "base": 1,
            "exponent": "G", "offset": "0", "floor": false
        });
        assert!(serde_json::from_value::<Measure>(bad).is_err());
    }
}
