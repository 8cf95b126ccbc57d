use std::fmt;

use super::Digraph;
use crate::combinatorics::{set_partitions, SetPartition};
use crate::error::{Error, Result};

/// Largest vertex count representable by the bit-mask adjacency rows.
pub const MAX_VERTICES: usize = 64;

pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices (limit {MAX_VERTICES})")));
    }
    Ok(())
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// A simple undirected graph on `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        check_size(n).expect("vertex count within limit");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut g = Graph { n, adj: vec![0; n] };
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Precondition(format!(
                "edge {{{}, {}}} outside vertex range 1..={}",
                u + 1,
                v + 1,
                self.n
            )));
        }
        if u == v {
            return Err(Error::Precondition(format!("graphs have no loops (vertex {})", u + 1)));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.adj[u] = ((1u128 << n) - 1) as u64 & !bit(u);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| iter_bits(self.adj[u] & !((bit(u) << 1).wrapping_sub(1))).map(move |v| (u, v)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Connected-component labels of the spanning subgraph with edge set `edges`.
    pub fn component_labels(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    pub fn components(&self) -> SetPartition {
        SetPartition::from_labels(&Self::component_labels(self.n, &self.edges()))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.num_edges() + self.components().len() == self.n
    }

    /// True iff the vertices of `mask` induce a connected subgraph.
    pub fn induces_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask & mask.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_bits(frontier) {
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    }

    /// Number of edges with both ends inside one block of `pi`.
    pub fn edges_inside(&self, pi: &SetPartition) -> usize {
        let labels = pi.labels();
        self.edges().iter().filter(|&&(u, v)| labels[u] == labels[v]).count()
    }

    /// Set partitions of the vertices with no edge inside a block.
    pub fn stable_partitions(&self) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut blocks: Vec<u64> = Vec::new();
        let mut labels = Vec::with_capacity(self.n);
        self.stable_rec(0, &mut blocks, &mut labels, &mut out);
        out
    }

    fn stable_rec(&self, v: usize, blocks: &mut Vec<u64>, labels: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if v == self.n {
            out.push(SetPartition::from_labels(labels));
            return;
        }
        blocks.push(bit(v));
        labels.push(blocks.len() - 1);
        self.stable_rec(v + 1, blocks, labels, out);
        labels.pop();
        blocks.pop();
        for b in 0..blocks.len() {
            if blocks[b] & self.adj[v] == 0 {
                blocks[b] |= bit(v);
                labels.push(b);
                self.stable_rec(v + 1, blocks, labels, out);
                labels.pop();
                blocks[b] &= !bit(v);
            }
        }
    }

    /// The bond lattice: set partitions whose blocks induce connected subgraphs.
    pub fn contraction_lattice(&self) -> Vec<SetPartition> {
        set_partitions(self.n)
            .into_iter()
            .filter(|p| {
                p.blocks()
                    .iter()
                    .all(|b| self.induces_connected(b.iter().fold(0, |m, &v| m | bit(v))))
            })
            .collect()
    }

    /// Every orientation of the edges without a directed cycle.
    pub fn acyclic_orientations(&self) -> Vec<Digraph> {
        let edges = self.edges();
        let m = edges.len();
        assert!(m < 32, "too many edges to enumerate orientations");
        let mut out = Vec::new();
        for code in 0u32..(1u32 << m) {
            let mut d = Digraph::empty(self.n);
            for (k, &(u, v)) in edges.iter().enumerate() {
                if code & (1 << k) == 0 {
                    d.insert_edge(u, v);
                } else {
                    d.insert_edge(v, u);
                }
            }
            if d.is_acyclic() {
                out.push(d);
            }
        }
        out
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if a != b && self.has_edge(u, v) {
                    g.adj[a] |= bit(b);
                }
            }
        }
        g
    }

    /// The symmetric digraph with both orientations of every edge.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for (u, v) in self.edges() {
            d.insert_edge(u, v);
            d.insert_edge(v, u);
        }
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        write!(f, "{})", edges.join(" "))
    }
}

/// All labelled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many graphs to enumerate");
    (0u32..(1u32 << pairs.len()))
        .map(|code| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| code & (1 << k) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("valid pairs")
        })
        .collect()
}

/// All labelled trees on `n` vertices, via Prüfer sequences.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n <= 1 {
        return vec![Graph::empty(n)];
    }
    if n == 2 {
        return vec![Graph::complete(2)];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect();
            let mut degree = vec![1usize; n];
            for &v in &seq {
                degree[v] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &v in &seq {
                let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
                edges.push((leaf, v));
                degree[leaf] -= 1;
                degree[v] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::integer_partitions;

    #[test]
    fn stable_partition_examples() {
        assert_eq!(Graph::empty(1).stable_partitions(), vec![SetPartition::discrete(1)]);
        assert_eq!(Graph::complete(2).stable_partitions(), vec![SetPartition::discrete(2)]);
        assert_eq!(Graph::empty(4).stable_partitions().len(), 15);
        let _ = integer_partitions(0);
    }

    #[test]
    fn stable_partitions_match_filter() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                let mut fast = g.stable_partitions();
                fast.sort();
                let mut slow: Vec<_> = set_partitions(n)
                    .into_iter()
                    .filter(|p| p.blocks().iter().all(|b| b.iter().all(|&u| b.iter().all(|&v| !g.has_edge(u, v)))))
                    .collect();
                slow.sort();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn contraction_lattice_examples() {
        assert_eq!(Graph::empty(3).contraction_lattice(), vec![SetPartition::discrete(3)]);
        assert_eq!(Graph::complete(4).contraction_lattice().len(), 15);
        assert_eq!(Graph::path(2).contraction_lattice().len(), 2);
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(Graph::complete(2).acyclic_orientations().len(), 2);
        assert_eq!(Graph::complete(3).acyclic_orientations().len(), 6);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 16, 125, 1296]);
        assert!(all_trees(5).iter().all(|t| t.is_forest() && t.is_connected()));
    }
}
