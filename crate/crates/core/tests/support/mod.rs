//! Generators and independent oracles shared by the integration tests.
//!
//! The oracles never go through `GrossNumber`'s arithmetic: they substitute a
//! concrete finite value for ① and work with plain rationals, or they
//! enumerate cases directly.

#![allow(dead_code)]

use std::cmp::Ordering;

use grossnum::{GrossNumber, GrossTerm, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub const COEFF_BOUND: i64 = 1_000_000;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn coefficient() -> impl Strategy<Value = Rational> {
    (-COEFF_BOUND..=COEFF_BOUND, 1..=COEFF_BOUND).prop_map(|(n, d)| rational(n, d))
}

pub fn positive_coefficient() -> impl Strategy<Value = Rational> {
    (1..=COEFF_BOUND, 1..=COEFF_BOUND).prop_map(|(n, d)| rational(n, d))
}

/// Small exponents with denominators up to 3, so that terms collide often.
pub fn exponent() -> impl Strategy<Value = Rational> {
    (-6i64..=6, prop_oneof![Just(1i64), Just(1), Just(2), Just(3)]).prop_map(|(n, d)| rational(n, d))
}

pub fn term() -> impl Strategy<Value = GrossTerm> {
    (exponent(), coefficient()).prop_map(|(p, c)| GrossTerm::new(p, c))
}

pub fn raw_terms() -> impl Strategy<Value = Vec<GrossTerm>> {
    prop::collection::vec(term(), 0..=6)
}

/// Canonical numbers with at most six terms.
pub fn gross_number() -> impl Strategy<Value = GrossNumber> {
    raw_terms().prop_map(GrossNumber::normalize)
}

pub fn nonzero_gross_number() -> impl Strategy<Value = GrossNumber> {
    gross_number().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn positive_gross_number() -> impl Strategy<Value = GrossNumber> {
    nonzero_gross_number().prop_map(|x| if x.is_negative() { -x } else { x })
}

/// Smallest `D` with every exponent of `xs` a multiple of `1/D`.
fn common_denominator(xs: &[&GrossNumber]) -> BigInt {
    xs.iter()
        .flat_map(|x| x.terms())
        .fold(BigInt::one(), |acc, t| acc.lcm(t.exponent.denom()))
}

/// Value of `x` with ① replaced by `s^d`.
pub fn substitute(x: &GrossNumber, s: &BigInt, d: &BigInt) -> Rational {
    let base = Rational::from_integer(s.clone());
    x.terms().iter().fold(Rational::zero(), |acc, t| {
        let power = (&t.exponent * Rational::from_integer(d.clone())).to_integer();
        let magnitude: usize = power.magnitude().try_into().unwrap();
        let mut factor = num_traits::pow(base.clone(), magnitude);
        if power.is_negative() {
            factor = factor.recip();
        }
        acc + &t.coefficient * factor
    })
}

/// Checks `lhs == rhs` as functions of ① by substituting a few finite
/// values. Both sides are Laurent polynomials in `①^(1/d)` of bounded
/// degree, so agreement on more points than their degree span proves
/// identity.
pub fn identical_by_substitution(lhs: &GrossNumber, rhs: &GrossNumber) -> bool {
    let d = common_denominator(&[lhs, rhs]);
    let span = [lhs, rhs]
        .iter()
        .flat_map(|x| x.terms())
        .map(|t| (&t.exponent * Rational::from_integer(d.clone())).to_integer())
        .fold((BigInt::zero(), BigInt::zero()), |(lo, hi), p| {
            (lo.min(p.clone()), hi.max(p))
        });
    let points: usize = (&span.1 - &span.0 + 2u32).try_into().unwrap();
    (2..2 + points as i64).all(|s| {
        let s = BigInt::from(s);
        substitute(lhs, &s, &d) == substitute(rhs, &s, &d)
    })
}

/// Sign of `a - b` when ① is "larger than any finite number": substitute a
/// value of `①^(1/d)` beyond the Cauchy root bound of the difference.
pub fn compare_oracle(a: &GrossNumber, b: &GrossNumber) -> Ordering {
    // raw difference, kept without normalization
    let mut diff: Vec<(Rational, Rational)> = a
        .terms()
        .iter()
        .map(|t| (t.exponent.clone(), t.coefficient.clone()))
        .collect();
    diff.extend(
        b.terms()
            .iter()
            .map(|t| (t.exponent.clone(), -t.coefficient.clone())),
    );
    let mut merged: Vec<(Rational, Rational)> = Vec::new();
    for (p, c) in diff {
        match merged.iter_mut().find(|(q, _)| *q == p) {
            Some(entry) => entry.1 += c,
            None => merged.push((p, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    let Some(lead) = merged.iter().max_by(|x, y| x.0.cmp(&y.0)).cloned() else {
        return Ordering::Equal;
    };
    let bound = merged
        .iter()
        .map(|(_, c)| (c / &lead.1).abs())
        .fold(Rational::zero(), |m, r| m.max(r));
    let s = (bound + Rational::from_integer(2.into())).ceil().to_integer();
    let x = GrossNumber::normalize(merged.into_iter().map(|(p, c)| GrossTerm::new(p, c)));
    let d = common_denominator(&[&x]);
    substitute(&x, &s, &d).cmp(&Rational::zero())
}

/// Term-pair convolution, merged by linear search.
pub fn mul_oracle(a: &GrossNumber, b: &GrossNumber) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    for x in a.terms() {
        for y in b.terms() {
            let p = &x.exponent + &y.exponent;
            let c = &x.coefficient * &y.coefficient;
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some(entry) => entry.1 += c,
                None => out.push((p, c)),
            }
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out.sort_by(|x, y| y.0.cmp(&x.0));
    out
}

pub fn as_pairs(x: &GrossNumber) -> Vec<(Rational, Rational)> {
    x.terms()
        .iter()
        .map(|t| (t.exponent.clone(), t.coefficient.clone()))
        .collect()
}

/// Plain lexicographic order: the first differing coordinate decides.
pub fn lex_oracle(a: &[u64], b: &[u64]) -> Ordering {
    for i in 0..a.len() {
        if a[i] > b[i] {
            return Ordering::Greater;
        }
        if a[i] < b[i] {
            return Ordering::Less;
        }
    }
    Ordering::Equal
}

pub fn lex_oracle_rational(a: &[Rational], b: &[Rational]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

pub fn gn(text: &str) -> GrossNumber {
    grossnum::syntax::evaluate(text).unwrap()
}
