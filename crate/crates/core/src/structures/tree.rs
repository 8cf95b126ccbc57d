use super::graph::iter_bits;
use super::Graph;
use crate::error::{Error, Result};

/// A tree with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::Precondition("a rooted tree needs at least one vertex".into()));
        }
        if root >= graph.n() {
            return Err(Error::Precondition(format!(
                "root {} outside vertex range 1..={}",
                root + 1,
                graph.n()
            )));
        }
        if !(graph.is_connected() && graph.is_forest()) {
            return Err(Error::Precondition("graph is not a tree".into()));
        }
        Ok(RootedTree { graph, root })
    }

    pub fn single_vertex() -> Self {
        RootedTree { graph: Graph::empty(1), root: 0 }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The trees left after deleting the root, each rooted at the root's
    /// former neighbour, ordered by that neighbour.
    pub fn root_deleted_subtrees(&self) -> Vec<RootedTree> {
        let n = self.graph.n();
        let mut out = Vec::new();
        for child in iter_bits(self.graph.neighbors(self.root)) {
            // collect the side of the child, never crossing the root
            let mut seen = (1u64 << self.root) | (1u64 << child);
            let mut frontier = 1u64 << child;
            while frontier != 0 {
                let mut next = 0;
                for v in iter_bits(frontier) {
                    next |= self.graph.neighbors(v);
                }
                frontier = next & !seen;
                seen |= next;
            }
            let verts: Vec<usize> = iter_bits(seen & !(1u64 << self.root)).filter(|&v| v < n).collect();
            let root = verts.iter().position(|&v| v == child).unwrap();
            out.push(RootedTree { graph: self.graph.induced(&verts), root });
        }
        out
    }
}
