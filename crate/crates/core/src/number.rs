//! Numbers written in the grossone positional system.
//!
//! A [`GrossNumber`] is a finite sum `c_1·①^p_1 + … + c_m·①^p_m` with exact
//! rational gross-digits `c_i` and gross-powers `p_i`. The term list is kept
//! in canonical form (strictly decreasing powers, no zero digits), so
//! structural equality is numeric equality and the empty list is zero.
//!
//! Powers are restricted to finite rationals. Quantities such as `2^①`
//! leave this form and are handled by [`crate::measure::Measure`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ArithError;
use crate::rational::{exact_root, pow_int, Rational};

/// Term budget used by [`GrossNumber::div`] when the caller has no opinion.
pub const DEFAULT_DIV_TERMS: usize = 32;

/// Largest integer exponent accepted by [`GrossNumber::pow`].
pub const MAX_INTEGER_EXPONENT: u64 = 1 << 16;

/// One `coefficient · ①^exponent` term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrossTerm {
    pub exponent: Rational,
    pub coefficient: Rational,
}

impl GrossTerm {
    pub fn new(exponent: Rational, coefficient: Rational) -> Self {
        GrossTerm {
            exponent,
            coefficient,
        }
    }

    fn mul(&self, other: &GrossTerm) -> GrossTerm {
        GrossTerm {
            exponent: &self.exponent + &other.exponent,
            coefficient: &self.coefficient * &other.coefficient,
        }
    }
}

/// Which of the three scales dominates a number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Zero,
    Infinitesimal,
    Finite,
    Infinite,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Zero => "zero",
            Class::Infinitesimal => "infinitesimal",
            Class::Finite => "finite",
            Class::Infinite => "infinite",
        })
    }
}

/// Split of a number by the sign of its powers. The three parts sum back to
/// the original value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parts {
    pub infinite: GrossNumber,
    pub finite: GrossNumber,
    pub infinitesimal: GrossNumber,
}

impl Parts {
    pub fn reassemble(&self) -> GrossNumber {
        &(&self.infinite + &self.finite) + &self.infinitesimal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GrossNumber {
    terms: Vec<GrossTerm>,
}

impl GrossNumber {
    /// Builds the canonical form of an arbitrary list of terms: equal powers
    /// are merged, zero digits dropped, powers sorted in decreasing order.
    pub fn normalize<I>(raw_terms: I) -> Self
    where
        I: IntoIterator<Item = GrossTerm>,
    {
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for term in raw_terms {
            *merged.entry(term.exponent).or_insert_with(Rational::zero) += term.coefficient;
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponent, coefficient)| GrossTerm {
                exponent,
                coefficient,
            })
            .collect();
        GrossNumber { terms }
    }

    pub fn zero() -> Self {
        GrossNumber { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The infinite unit ①.
    pub fn grossone() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    pub fn from_rational(value: Rational) -> Self {
        Self::monomial(value, Rational::zero())
    }

    pub fn from_integer(value: i64) -> Self {
        Self::from_rational(Rational::from_integer(value.into()))
    }

    /// `coefficient · ①^exponent`.
    pub fn monomial(coefficient: Rational, exponent: Rational) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        GrossNumber {
            terms: vec![GrossTerm {
                exponent,
                coefficient,
            }],
        }
    }

    pub fn terms(&self) -> &[GrossTerm] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<GrossTerm> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    pub fn leading(&self) -> Option<&GrossTerm> {
        self.terms.first()
    }

    pub fn leading_exponent(&self) -> Option<&Rational> {
        self.leading().map(|t| &t.exponent)
    }

    /// Digit of `①^exponent`, zero when absent.
    pub fn coefficient(&self, exponent: &Rational) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.exponent == exponent)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// -1, 0 or 1 according to the sign of the leading digit.
    pub fn signum(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some(t) if t.coefficient.is_positive() => 1,
            Some(_) => -1,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// The value as a plain rational, if it has no infinite or
    /// infinitesimal part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn classify(&self) -> Class {
        match self.leading_exponent() {
            None => Class::Zero,
            Some(p) if p.is_positive() => Class::Infinite,
            Some(p) if p.is_zero() => Class::Finite,
            Some(_) => Class::Infinitesimal,
        }
    }

    pub fn parts(&self) -> Parts {
        let pick = |keep: fn(&Rational) -> bool| GrossNumber {
            terms: self
                .terms
                .iter()
                .filter(|t| keep(&t.exponent))
                .cloned()
                .collect(),
        };
        Parts {
            infinite: pick(|p| p.is_positive()),
            finite: pick(|p| p.is_zero()),
            infinitesimal: pick(|p| p.is_negative()),
        }
    }

    /// Ordering of `self - other`, decided by the highest power at which the
    /// two numbers differ.
    pub fn compare(&self, other: &GrossNumber) -> Ordering {
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => return sign_of(&x.coefficient),
                (None, Some(y)) => return sign_of(&y.coefficient).reverse(),
                (Some(x), Some(y)) => match x.exponent.cmp(&y.exponent) {
                    Ordering::Greater => return sign_of(&x.coefficient),
                    Ordering::Less => return sign_of(&y.coefficient).reverse(),
                    Ordering::Equal => {
                        let digits = x.coefficient.cmp(&y.coefficient);
                        if digits != Ordering::Equal {
                            return digits;
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }

    /// Long division by leading terms.
    ///
    /// Returns the exact quotient when the remainder vanishes after at most
    /// `max_terms` quotient terms; otherwise reports the truncated quotient
    /// together with the remainder.
    pub fn div(&self, divisor: &GrossNumber, max_terms: usize) -> Result<GrossNumber, ArithError> {
        let lead = divisor.leading().ok_or(ArithError::DivisionByZero)?;
        if let [single] = divisor.terms.as_slice() {
            let inverse = GrossTerm::new(-&single.exponent, single.coefficient.recip());
            return Ok(self.scale(&inverse));
        }
        let mut quotient = Vec::new();
        let mut remainder = self.clone();
        while let Some(top) = remainder.leading() {
            if quotient.len() >= max_terms {
                return Err(ArithError::InexactDivision {
                    quotient: GrossNumber::normalize(quotient),
                    remainder,
                });
            }
            let step = GrossTerm::new(
                &top.exponent - &lead.exponent,
                &top.coefficient / &lead.coefficient,
            );
            remainder = &remainder - &divisor.scale(&step);
            quotient.push(step);
        }
        Ok(GrossNumber::normalize(quotient))
    }

    /// Exact power in the cases where the result stays a finite sum of terms:
    /// integer exponents, rational exponents of a single term with an exact
    /// rational root, and the axiomatic `0^x`, `1^x`.
    pub fn pow(&self, exponent: &GrossNumber) -> Result<GrossNumber, ArithError> {
        self.pow_with(exponent, DEFAULT_DIV_TERMS)
    }

    /// [`pow`](Self::pow) with an explicit term budget for the division
    /// behind negative powers of sums.
    pub fn pow_with(
        &self,
        exponent: &GrossNumber,
        max_div_terms: usize,
    ) -> Result<GrossNumber, ArithError> {
        if exponent.is_zero() {
            return if self.is_zero() {
                Err(ArithError::Indeterminate)
            } else {
                Ok(GrossNumber::one())
            };
        }
        if self.is_zero() {
            return if exponent.is_positive() {
                Ok(GrossNumber::zero())
            } else {
                Err(ArithError::ZeroToNegativePower)
            };
        }
        if self.is_one() {
            return Ok(GrossNumber::one());
        }
        let Some(power) = exponent.as_rational() else {
            return Err(ArithError::NotRepresentable(format!(
                "({self})^({exponent})"
            )));
        };
        if power.is_integer() {
            return self.pow_integer(power.numer(), max_div_terms);
        }
        let [term] = self.terms.as_slice() else {
            return Err(ArithError::NotRepresentable(format!(
                "({self})^({power}) of a sum of terms"
            )));
        };
        let root_degree = power
            .denom()
            .to_u32()
            .ok_or_else(|| ArithError::ExponentTooLarge(power.to_string()))?;
        check_exponent(power.numer())?;
        let raised = pow_int(&term.coefficient, power.numer())
            .ok_or(ArithError::ZeroToNegativePower)?;
        let coefficient = exact_root(&raised, root_degree).ok_or_else(|| {
            ArithError::NotRepresentable(format!(
                "({})^({power}) has no rational value",
                term.coefficient
            ))
        })?;
        Ok(GrossNumber::monomial(coefficient, &term.exponent * &power))
    }

    fn pow_integer(&self, power: &BigInt, max_div_terms: usize) -> Result<GrossNumber, ArithError> {
        if let [term] = self.terms.as_slice() {
            if term.coefficient.abs().is_one() {
                let coefficient = if power.is_odd() {
                    term.coefficient.clone()
                } else {
                    Rational::one()
                };
                let exponent = &term.exponent * Rational::from_integer(power.clone());
                return Ok(GrossNumber::monomial(coefficient, exponent));
            }
        }
        let magnitude = check_exponent(power)?;
        if let [term] = self.terms.as_slice() {
            let coefficient =
                pow_int(&term.coefficient, power).ok_or(ArithError::ZeroToNegativePower)?;
            let exponent = &term.exponent * Rational::from_integer(power.clone());
            return Ok(GrossNumber::monomial(coefficient, exponent));
        }
        let mut result = GrossNumber::one();
        let mut square = self.clone();
        let mut rest = magnitude;
        while rest > 0 {
            if rest & 1 == 1 {
                result = &result * &square;
            }
            rest >>= 1;
            if rest > 0 {
                square = &square * &square;
            }
        }
        if power.is_negative() {
            GrossNumber::one().div(&result, max_div_terms)
        } else {
            Ok(result)
        }
    }

    fn scale(&self, factor: &GrossTerm) -> GrossNumber {
        if factor.coefficient.is_zero() {
            return GrossNumber::zero();
        }
        // multiplying by one term keeps the powers distinct and ordered
        GrossNumber {
            terms: self.terms.iter().map(|t| t.mul(factor)).collect(),
        }
    }
}

fn check_exponent(power: &BigInt) -> Result<u64, ArithError> {
    power
        .magnitude()
        .to_u64()
        .filter(|m| *m <= MAX_INTEGER_EXPONENT)
        .ok_or_else(|| ArithError::ExponentTooLarge(power.to_string()))
}

fn sign_of(value: &Rational) -> Ordering {
    value.cmp(&Rational::zero())
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrossNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print(self))
    }
}

impl From<Rational> for GrossNumber {
    fn from(value: Rational) -> Self {
        GrossNumber::from_rational(value)
    }
}

impl From<i64> for GrossNumber {
    fn from(value: i64) -> Self {
        GrossNumber::from_integer(value)
    }
}

impl Serialize for GrossNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GrossNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        crate::syntax::evaluate(&text).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a GrossNumber> for &'a GrossNumber {
    type Output = GrossNumber;

    fn add(self, rhs: &'a GrossNumber) -> GrossNumber {
        // both sides are canonical: merge the two descending lists
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().cloned(),
                (None, Some(_)) => b.next().cloned(),
                (Some(x), Some(y)) => match x.exponent.cmp(&y.exponent) {
                    Ordering::Greater => a.next().cloned(),
                    Ordering::Less => b.next().cloned(),
                    Ordering::Equal => {
                        let sum = &x.coefficient + &y.coefficient;
                        let exponent = x.exponent.clone();
                        a.next();
                        b.next();
                        (!sum.is_zero()).then(|| GrossTerm::new(exponent, sum))
                    }
                },
            };
            terms.extend(next);
        }
        GrossNumber { terms }
    }
}

impl<'a> Sub<&'a GrossNumber> for &'a GrossNumber {
    type Output = GrossNumber;

    fn sub(self, rhs: &'a GrossNumber) -> GrossNumber {
        self + &-rhs
    }
}

impl<'a> Mul<&'a GrossNumber> for &'a GrossNumber {
    type Output = GrossNumber;

    fn mul(self, rhs: &'a GrossNumber) -> GrossNumber {
        let (short, long) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        short
            .terms
            .iter()
            .fold(GrossNumber::zero(), |acc, t| &acc + &long.scale(t))
    }
}

impl Neg for &GrossNumber {
    type Output = GrossNumber;

    fn neg(self) -> GrossNumber {
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| GrossTerm::new(t.exponent.clone(), -&t.coefficient))
                .collect(),
        }
    }
}

impl Neg for GrossNumber {
    type Output = GrossNumber;

    fn neg(self) -> GrossNumber {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<GrossNumber> for GrossNumber {
            type Output = GrossNumber;

            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);
