//! Invariants of graphs, digraphs, posets and trees.

use std::collections::BTreeMap;

use crate::combinatorics::IntegerPartition;
use crate::symfunc::BivarPoly;
use crate::Rational;

pub mod chromatic;
pub mod pathcycle;
pub mod superfication;

pub use chromatic::*;
pub use pathcycle::*;
pub use superfication::*;

/// Covers (or full rook placements) grouped by `(path type, cycle type)`,
/// together with the totals by number of edges used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverStatistics {
    pub by_type: BTreeMap<(IntegerPartition, IntegerPartition), u64>,
    pub by_size: Vec<u64>,
}

impl CoverStatistics {
    pub fn total(&self) -> u64 {
        self.by_type.values().sum()
    }
}

/// The pair of polynomials in `(m, n)` attached to a rooted tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: BivarPoly,
    pub beta: BivarPoly,
}

pub(crate) fn count_rat(n: u64) -> Rational {
    Rational::from_integer(n.into())
}
