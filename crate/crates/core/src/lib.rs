//! Exact arithmetic in the grossone (①) numeral system.
//!
//! * [`number`]: gross-numbers, their arithmetic and total order.
//! * [`syntax`]: the text format (`3*G^2 - G + 1`) with parser and printer.
//! * [`measure`]: grossone measures of infinite numeral sets.
//! * [`rank`]: lexicographic ranks, grossone-based and binary-fraction.

pub mod error;
pub mod measure;
pub mod number;
pub mod rank;
pub mod rational;
pub mod syntax;

pub use error::{ArithError, Error, MeasureError, RankError, SyntaxError};
pub use number::{Class, GrossNumber, GrossTerm, Parts, DEFAULT_DIV_TERMS};
pub use rational::Rational;
pub use measure::{compare_measure, measure, parse_set, Measure, SetDescriptor};
pub use rank::{binary_compare, binary_rank, gross_compare, gross_rank, BitRank, ScoreVector};
