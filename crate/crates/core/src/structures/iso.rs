//! Isomorphism classes of small digraphs by exhaustive relabelling.

use std::collections::BTreeMap;

use super::{Digraph, Graph};
use crate::combinatorics::for_each_permutation;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_ISO_VERTICES: usize = 8;

fn code(g: &Digraph, perm: &[usize]) -> u64 {
    let d = g.d();
    let mut c = 0u64;
    for (u, v) in g.edges() {
        c |= 1u64 << (perm[u] * d + perm[v]);
    }
    c
}

/// The relabelling of `g` with the smallest adjacency bitstring, and that bitstring.
pub fn canonical_form(g: &Digraph) -> Result<(u64, Digraph)> {
    if g.d() > MAX_ISO_VERTICES {
        return Err(Error::TooLarge(format!(
            "isomorphism test on {} vertices (limit {MAX_ISO_VERTICES})",
            g.d()
        )));
    }
    let mut best = u64::MAX;
    let mut best_perm = (0..g.d()).collect::<Vec<_>>();
    for_each_permutation(g.d(), |perm| {
        let c = code(g, perm);
        if c < best {
            best = c;
            best_perm = perm.to_vec();
        }
    });
    if g.d() == 0 {
        best = 0;
    }
    Ok((best, g.relabel(&best_perm)))
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool> {
    Ok(a.d() == b.d() && canonical_form(a)?.0 == canonical_form(b)?.0)
}

/// One canonical representative per class, ordered by canonical code.
pub fn iso_classes(values: &[Digraph]) -> Result<Vec<Digraph>> {
    if let Some(first) = values.first() {
        if values.iter().any(|g| g.d() != first.d()) {
            return Err(Error::Precondition("iso_classes needs a common vertex count".into()));
        }
    }
    let mut classes = BTreeMap::new();
    for g in values {
        let (c, rep) = canonical_form(g)?;
        classes.entry(c).or_insert(rep);
    }
    Ok(classes.into_values().collect())
}

/// Graph version, via symmetric digraphs.
pub fn graph_iso_classes(values: &[Graph]) -> Result<Vec<Graph>> {
    let digraphs: Vec<Digraph> = values.iter().map(Graph::to_symmetric_digraph).collect();
    Ok(iso_classes(&digraphs)?
        .into_iter()
        .map(|d| {
            let edges: Vec<_> = d.edges().into_iter().filter(|&(u, v)| u < v).collect();
            Graph::from_edges(d.d(), &edges).expect("symmetric digraph is a graph")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::digraph::{all_digraphs, all_loopless_digraphs};
    use crate::structures::graph::all_graphs;

    #[test]
    fn examples() {
        let a = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        let b = Digraph::from_edges(2, &[(1, 0)]).unwrap();
        assert_eq!(iso_classes(&[a, b]).unwrap().len(), 1);
        assert_eq!(iso_classes(&all_digraphs(1).collect::<Vec<_>>()).unwrap().len(), 2);
        assert_eq!(iso_classes(&all_loopless_digraphs(2).collect::<Vec<_>>()).unwrap().len(), 3);
        assert!(canonical_form(&Digraph::empty(9)).is_err());
    }

    #[test]
    fn known_class_counts() {
        // unlabelled digraphs with loops: 1, 2, 10, 104; loopless: 1, 1, 3, 16, 218
        let with_loops: Vec<usize> = (0..=3)
            .map(|d| iso_classes(&all_digraphs(d).collect::<Vec<_>>()).unwrap().len())
            .collect();
        assert_eq!(with_loops, [1, 2, 10, 104]);
        let loopless: Vec<usize> = (0..=4)
            .map(|d| iso_classes(&all_loopless_digraphs(d).collect::<Vec<_>>()).unwrap().len())
            .collect();
        assert_eq!(loopless, [1, 1, 3, 16, 218]);
        let graphs: Vec<usize> = (1..=5).map(|n| graph_iso_classes(&all_graphs(n)).unwrap().len()).collect();
        assert_eq!(graphs, [1, 2, 4, 11, 34]);
    }
}
