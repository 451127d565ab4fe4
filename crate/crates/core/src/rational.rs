//! Helpers on arbitrary-precision rationals shared by the other modules.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-3/4"` or a terminating decimal such as `"0.125"` exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    if body.is_empty() {
        return None;
    }
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_decimal(num)?;
        let den = parse_decimal(den)?;
        if den.is_zero() {
            return None;
        }
        num / den
    } else {
        parse_decimal(body)?
    };
    Some(if negative { -value } else { value })
}

/// Unsigned decimal literal: `digits` or `digits.digits`.
pub fn parse_decimal(text: &str) -> Option<Rational> {
    let (whole, frac) = match text.split_once('.') {
        Some((w, f)) => (w, f),
        None => (text, ""),
    };
    if whole.is_empty() || !whole.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if text.contains('.') && (frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit())) {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    Some(Rational::new(digits, scale))
}

/// `value^exponent` for an integer exponent; `None` for `0^negative`.
pub fn pow_int(value: &Rational, exponent: &BigInt) -> Option<Rational> {
    if exponent.is_zero() {
        return Some(Rational::one());
    }
    if value.is_zero() {
        return if exponent.is_positive() {
            Some(Rational::zero())
        } else {
            None
        };
    }
    let magnitude: u32 = exponent.magnitude().try_into().ok()?;
    let raised = num_traits::pow(value.clone(), magnitude as usize);
    Some(if exponent.is_negative() {
        raised.recip()
    } else {
        raised
    })
}

/// Exact `n`-th root of a rational, if it exists in the rationals.
pub fn exact_root(value: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    if n == 1 || value.is_zero() {
        return Some(value.clone());
    }
    if value.is_negative() && n % 2 == 0 {
        return None;
    }
    let numer = exact_int_root(value.numer(), n)?;
    let denom = exact_int_root(value.denom(), n)?;
    Some(Rational::new(numer, denom))
}

fn exact_int_root(value: &BigInt, n: u32) -> Option<BigInt> {
    let root = value.magnitude().nth_root(n);
    if num_traits::pow(root.clone(), n as usize) != *value.magnitude() {
        return None;
    }
    let root = BigInt::from_biguint(Sign::Plus, root);
    Some(if value.is_negative() { -root } else { root })
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}
