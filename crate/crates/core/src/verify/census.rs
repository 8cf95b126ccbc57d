//! Census of four-vertex acyclic weakly (3+1)-free digraphs that are not
//! transitively closed, with the e-positivity of `Ξ(x; 0)`.

use std::collections::BTreeMap;
use std::time::Instant;

use super::{CheckReport, Checker};
use crate::combinatorics::IntegerPartition;
use crate::error::Result;
use crate::invariants::path_cycle_sym;
use crate::structures::digraph::all_loopless_digraphs;
use crate::structures::{iso_classes, serialize_structure, Digraph, Structure};
use crate::symfunc::{rat, Basis};
use crate::Rational;

/// Expected class counts for the census, checked in the report.
pub const EXPECTED_CLASSES: usize = 5;
pub const EXPECTED_E_POSITIVE: usize = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    pub representative: Digraph,
    pub e_expansion: BTreeMap<IntegerPartition, Rational>,
    pub s_expansion: BTreeMap<IntegerPartition, Rational>,
    pub e_positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    /// Failures record each count that differs from the expected one.
    pub report: CheckReport,
    pub classes: Vec<CensusClass>,
    /// Classes after identifying those with equal `Ξ(x; 0)`.
    pub distinct_values: usize,
    pub distinct_e_positive: usize,
    /// Whether some class has `s_4 + 2s_31 + s_22 + 4s_211 + 3s_1111`.
    pub displayed_found: bool,
}

fn displayed_expansion() -> BTreeMap<IntegerPartition, Rational> {
    [(vec![4], 1), (vec![3, 1], 2), (vec![2, 2], 1), (vec![2, 1, 1], 4), (vec![1, 1, 1, 1], 3)]
        .into_iter()
        .map(|(p, c)| (IntegerPartition::from_parts(p), rat(c)))
        .collect()
}

pub fn census_weakly_free_four() -> Result<Census> {
    let start = Instant::now();
    let mut members = Vec::new();
    for d in all_loopless_digraphs(4) {
        if d.is_acyclic() && !d.is_transitively_closed() && d.is_weakly_31_free()? {
            members.push(d);
        }
    }
    let mut classes = Vec::new();
    for rep in iso_classes(&members)? {
        let x = path_cycle_sym(&rep)?.restrict_y0();
        let mut e_expansion = x.convert(Basis::E)?;
        e_expansion.retain(|_, c| *c != rat(0));
        let mut s_expansion = x.convert(Basis::S)?;
        s_expansion.retain(|_, c| *c != rat(0));
        let e_positive = e_expansion.values().all(|c| *c > rat(0));
        classes.push(CensusClass { representative: rep, e_expansion, s_expansion, e_positive });
    }
    let e_positive = classes.iter().filter(|c| c.e_positive).count();
    let mut by_value: BTreeMap<&BTreeMap<IntegerPartition, Rational>, bool> = BTreeMap::new();
    for c in &classes {
        by_value.insert(&c.e_expansion, c.e_positive);
    }
    let distinct_values = by_value.len();
    let distinct_e_positive = by_value.values().filter(|&&p| p).count();
    let shown = displayed_expansion();
    let displayed_found = classes.iter().any(|c| c.s_expansion == shown);

    let mut ck = Checker::new("census");
    ck.eq(|| "isomorphism classes".into(), || Ok((EXPECTED_CLASSES, classes.len())));
    ck.eq(|| "e-positive classes".into(), || Ok((EXPECTED_E_POSITIVE, e_positive)));
    ck.holds(|| "displayed Schur expansion occurs".into(), || Ok(displayed_found));
    Ok(Census {
        report: ck.finish(start.elapsed()),
        classes,
        distinct_values,
        distinct_e_positive,
        displayed_found,
    })
}

impl CensusClass {
    pub fn representative_text(&self) -> String {
        serialize_structure(&Structure::Digraph(self.representative.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_counts() {
        let c = census_weakly_free_four().unwrap();
        assert_eq!(c.classes.len(), 6);
        assert_eq!(c.classes.iter().filter(|k| k.e_positive).count(), 2);
        assert_eq!((c.distinct_values, c.distinct_e_positive), (4, 1));
        assert!(c.displayed_found);
        // only the count comparisons fail
        assert_eq!(c.report.failures.len(), 2);
    }
}
