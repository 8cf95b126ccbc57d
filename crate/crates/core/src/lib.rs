//! Exact symmetric-function invariants of graphs, digraphs and boards.
//!
//! Everything is computed over exact rationals. The main entry points are
//! [`invariants`] for the invariants themselves and [`verify`] for the
//! identity suites that cross-check them against brute-force oracles.

pub mod combinatorics;
pub mod error;
pub mod invariants;
pub mod verify;

pub use error::{Error, Result};
pub mod structures;
pub mod symfunc;

/// Exact rational numbers used throughout.
pub type Rational = num::BigRational;
