use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Measure;
use crate::error::{ArithError, MeasureError};
use crate::number::{GrossNumber, DEFAULT_DIV_TERMS};
use crate::rational::Rational;

/// Symbolic description of an infinite set of numerals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetDescriptor {
    /// ℕ = {1, 2, …, ①}.
    Naturals,
    /// ℕ without the listed (distinct, positive) elements.
    NaturalsMinus(Vec<BigInt>),
    /// `N_{k,n} = {k, k+n, k+2n, …}`, with `1 ≤ k ≤ n`.
    Progression { k: u64, n: u64 },
    /// ℤ = {−①, …, 0, …, ①}.
    Integers,
    IntegersMinus(Vec<BigInt>),
    /// Squares of naturals.
    Squares,
    /// Ordered pairs of naturals.
    Pairs,
    /// Fraction numerals p/q, p ∈ ℤ, q ∈ ℤ \ {0}.
    Q1,
    /// Numerals 0, p/q and −p/q with p, q ∈ ℕ.
    Q2,
    PowerSet(Box<SetDescriptor>),
    /// Numerals in `[lower, upper)` (or `[lower, upper]`) written in the
    /// positional system with the given base.
    IntervalNumerals {
        base: u64,
        lower: Rational,
        upper: Rational,
        closed_upper: bool,
    },
    /// Union of progressions sharing the same modulus.
    DisjointUnion(Vec<SetDescriptor>),
    MinusElements(Box<SetDescriptor>, u64),
    PlusElements(Box<SetDescriptor>, u64),
}

/// Cantor's cardinality of a catalog set; display only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CantorLabel {
    CountableAleph0,
    ContinuumC,
}

impl fmt::Display for CantorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CantorLabel::CountableAleph0 => "countable, ℵ₀",
            CantorLabel::ContinuumC => "continuum, 𝔠",
        })
    }
}

impl SetDescriptor {
    pub fn power_set(inner: SetDescriptor) -> SetDescriptor {
        SetDescriptor::PowerSet(Box::new(inner))
    }

    pub fn minus(inner: SetDescriptor, count: u64) -> SetDescriptor {
        SetDescriptor::MinusElements(Box::new(inner), count)
    }

    pub fn plus(inner: SetDescriptor, count: u64) -> SetDescriptor {
        SetDescriptor::PlusElements(Box::new(inner), count)
    }

    pub fn interval(base: u64, lower: Rational, upper: Rational, closed_upper: bool) -> Self {
        SetDescriptor::IntervalNumerals {
            base,
            lower,
            upper,
            closed_upper,
        }
    }

    pub fn cantor_label(&self) -> CantorLabel {
        match self {
            SetDescriptor::PowerSet(_) | SetDescriptor::IntervalNumerals { .. } => {
                CantorLabel::ContinuumC
            }
            SetDescriptor::MinusElements(inner, _) | SetDescriptor::PlusElements(inner, _) => {
                inner.cantor_label()
            }
            _ => CantorLabel::CountableAleph0,
        }
    }

    /// Whether the numeral 0 belongs to the set.
    fn contains_zero(&self) -> Option<bool> {
        match self {
            SetDescriptor::Naturals | SetDescriptor::NaturalsMinus(_) => Some(false),
            SetDescriptor::Progression { .. } => Some(false),
            SetDescriptor::Integers => Some(true),
            SetDescriptor::IntegersMinus(removed) => Some(!removed.iter().any(Zero::is_zero)),
            _ => None,
        }
    }
}

fn invalid(message: impl Into<String>) -> MeasureError {
    MeasureError::InvalidDescriptor(message.into())
}

fn poly(value: GrossNumber) -> Result<Measure, MeasureError> {
    Measure::poly(value)
}

fn count_of(n: usize) -> GrossNumber {
    GrossNumber::from_rational(Rational::from_integer(n.into()))
}

fn check_distinct(elements: &[BigInt]) -> Result<(), MeasureError> {
    let mut seen = HashSet::new();
    for e in elements {
        if !seen.insert(e) {
            return Err(invalid(format!("element {e} is listed twice")));
        }
    }
    Ok(())
}

/// Number of elements of the set described by `s`.
pub fn measure(s: &SetDescriptor) -> Result<Measure, MeasureError> {
    let g = GrossNumber::grossone();
    match s {
        SetDescriptor::Naturals => poly(g),
        SetDescriptor::NaturalsMinus(removed) => {
            if let Some(bad) = removed.iter().find(|e| !e.is_positive()) {
                return Err(invalid(format!("{bad} is not a natural number")));
            }
            check_distinct(removed)?;
            poly(&g - &count_of(removed.len()))
        }
        SetDescriptor::Progression { k, n } => {
            if !(1 <= *k && k <= n) {
                return Err(invalid(format!("N({k},{n}) needs 1 <= k <= n")));
            }
            // ① is divisible by every finite n
            let share = Rational::new(BigInt::one(), BigInt::from(*n));
            poly(GrossNumber::monomial(share, Rational::one()))
        }
        SetDescriptor::Integers => poly(integers()),
        SetDescriptor::IntegersMinus(removed) => {
            check_distinct(removed)?;
            poly(&integers() - &count_of(removed.len()))
        }
        SetDescriptor::Squares => {
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            Ok(Measure::Poly {
                value: GrossNumber::monomial(Rational::one(), half),
                floor: true,
            })
        }
        SetDescriptor::Pairs => poly(&g * &g),
        SetDescriptor::Q1 => NumeralSystem::Q1.numerals().count(),
        SetDescriptor::Q2 => NumeralSystem::Q2.numerals().count(),
        SetDescriptor::PowerSet(inner) => match measure(inner)? {
            Measure::Poly { value, floor } => Measure::Exp {
                coeff: Rational::one(),
                base: 2,
                exponent: value,
                offset: GrossNumber::zero(),
                floor,
            }
            .check(),
            Measure::Exp { .. } => Err(invalid(format!(
                "the power set of {inner} has no representable measure"
            ))),
        },
        SetDescriptor::IntervalNumerals {
            base,
            lower,
            upper,
            closed_upper,
        } => {
            if *base < 2 {
                return Err(invalid(format!("numeral base {base} is below 2")));
            }
            if lower >= upper {
                return Err(invalid(format!("empty interval [{lower}, {upper})")));
            }
            let offset = if *closed_upper {
                GrossNumber::one()
            } else {
                GrossNumber::zero()
            };
            Measure::exp(upper - lower, *base, g, offset)
        }
        SetDescriptor::DisjointUnion(members) => {
            check_union(members)?;
            let mut total = GrossNumber::zero();
            for member in members {
                let m = measure(member)?;
                total = &total + m.as_poly().expect("progressions have polynomial measures");
            }
            poly(total)
        }
        SetDescriptor::MinusElements(inner, count) => {
            measure(inner)?.shift(&-BigInt::from(*count))
        }
        SetDescriptor::PlusElements(inner, count) => measure(inner)?.shift(&BigInt::from(*count)),
    }
}

fn integers() -> GrossNumber {
    &(&GrossNumber::from_integer(2) * &GrossNumber::grossone()) + &GrossNumber::one()
}

fn check_union(members: &[SetDescriptor]) -> Result<(), MeasureError> {
    if members.is_empty() {
        return Err(invalid("empty union"));
    }
    let mut modulus = None;
    let mut residues = HashSet::new();
    for member in members {
        let SetDescriptor::Progression { k, n } = member else {
            return Err(invalid(format!(
                "only progressions N(k,n) can be united, found {member}"
            )));
        };
        if *modulus.get_or_insert(*n) != *n {
            return Err(invalid("united progressions must share the same n"));
        }
        if !residues.insert(*k) {
            return Err(invalid(format!("N({k},{n}) appears twice in the union")));
        }
    }
    Ok(())
}

/// Rational numeral systems counted by [`zero_numeral_count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumeralSystem {
    Q1,
    Q2,
}

/// A set of fraction numerals `p/q`: numerators and denominators range over
/// two sets, `signs` copies are written (`p/q` and `-p/q` give two), and an
/// optional standalone `0` is added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionNumerals {
    pub numerators: SetDescriptor,
    pub denominators: SetDescriptor,
    pub signs: u32,
    pub standalone_zero: bool,
}

impl NumeralSystem {
    pub fn numerals(self) -> FractionNumerals {
        match self {
            NumeralSystem::Q1 => FractionNumerals {
                numerators: SetDescriptor::Integers,
                denominators: SetDescriptor::IntegersMinus(vec![BigInt::zero()]),
                signs: 1,
                standalone_zero: false,
            },
            NumeralSystem::Q2 => FractionNumerals {
                numerators: SetDescriptor::Naturals,
                denominators: SetDescriptor::Naturals,
                signs: 2,
                standalone_zero: true,
            },
        }
    }
}

impl FractionNumerals {
    fn standalone(&self) -> GrossNumber {
        if self.standalone_zero {
            GrossNumber::one()
        } else {
            GrossNumber::zero()
        }
    }

    fn poly_measure(s: &SetDescriptor) -> Result<GrossNumber, MeasureError> {
        match measure(s)? {
            Measure::Poly {
                value,
                floor: false,
            } => Ok(value),
            other => Err(invalid(format!("{s} has non-polynomial measure {other}"))),
        }
    }

    /// Total number of numerals.
    pub fn count(&self) -> Result<Measure, MeasureError> {
        let pairs = &Self::poly_measure(&self.numerators)?
            * &Self::poly_measure(&self.denominators)?;
        poly(&(&count_of(self.signs as usize) * &pairs) + &self.standalone())
    }

    /// Number of numerals denoting zero: every `0/q`, plus the standalone 0.
    pub fn zero_count(&self) -> Result<Measure, MeasureError> {
        let zero_numerators = match self.numerators.contains_zero() {
            Some(true) => GrossNumber::one(),
            Some(false) => GrossNumber::zero(),
            None => return Err(invalid(format!("cannot tell whether 0 is in {}", self.numerators))),
        };
        let fractions = &(&count_of(self.signs as usize) * &zero_numerators)
            * &Self::poly_measure(&self.denominators)?;
        poly(&fractions + &self.standalone())
    }
}

/// How many distinct numerals of the system denote the number zero.
pub fn zero_numeral_count(system: NumeralSystem) -> Measure {
    system
        .numerals()
        .zero_count()
        .expect("built-in numeral systems are well formed")
}

/// Upper bound on the length of any sequence of naturals: ①.
pub fn max_sequence_length() -> Measure {
    Measure::Poly {
        value: GrossNumber::grossone(),
        floor: false,
    }
}

/// Whether a sequence with `length` elements fits inside ℕ.
pub fn check_sequence(length: &GrossNumber) -> Result<bool, MeasureError> {
    if !length.is_positive() {
        return Err(MeasureError::NotAnAdmissibleLength(length.to_string()));
    }
    Ok(length <= &GrossNumber::grossone())
}

/// Number of elements of `first, first + step, …, last`.
pub fn arithmetic_sequence_length(
    first: &GrossNumber,
    step: &GrossNumber,
    last: &GrossNumber,
) -> Result<GrossNumber, ArithError> {
    Ok(&(last - first).div(step, DEFAULT_DIV_TERMS)? + &GrossNumber::one())
}

/// One row of the reference catalog of infinite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub description: &'static str,
    pub descriptor: SetDescriptor,
    pub cantor: CantorLabel,
}

/// The catalog of infinite sets with their Cantor labels, in table order.
pub fn catalog() -> Vec<CatalogEntry> {
    use SetDescriptor as S;
    let int = |v: i64| Rational::from_integer(v.into());
    let rows: Vec<(&'static str, SetDescriptor)> = vec![
        ("the set of natural numbers", S::Naturals),
        (
            "N without {3, 5, 10, 23, 114}",
            S::NaturalsMinus([3, 5, 10, 23, 114].into_iter().map(BigInt::from).collect()),
        ),
        ("the set of even numbers", S::Progression { k: 2, n: 2 }),
        ("the set of integers", S::Integers),
        ("Z without {0}", S::IntegersMinus(vec![BigInt::zero()])),
        ("squares of natural numbers", S::Squares),
        ("pairs of natural numbers", S::Pairs),
        ("the set of numerals Q1", S::Q1),
        ("the set of numerals Q2", S::Q2),
        ("the power set of N", S::power_set(S::Naturals)),
        (
            "the power set of the even numbers",
            S::power_set(S::Progression { k: 2, n: 2 }),
        ),
        ("the power set of Z", S::power_set(S::Integers)),
        ("the power set of Q1", S::power_set(S::Q1)),
        ("the power set of Q2", S::power_set(S::Q2)),
        (
            "numbers in [1,2) expressible in binary",
            S::interval(2, int(1), int(2), false),
        ),
        (
            "numbers in [1,2] expressible in binary",
            S::interval(2, int(1), int(2), true),
        ),
        (
            "numbers in [1,2) expressible in decimal",
            S::interval(10, int(1), int(2), false),
        ),
        (
            "numbers in [0,2) expressible in decimal",
            S::interval(10, int(0), int(2), false),
        ),
    ];
    rows.into_iter()
        .map(|(description, descriptor)| CatalogEntry {
            description,
            cantor: descriptor.cantor_label(),
            descriptor,
        })
        .collect()
}
