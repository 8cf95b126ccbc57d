use std::fmt;

use rand::Rng;

use super::graph::{bit, check_size, iter_bits};
use crate::combinatorics::IntegerPartition;
use crate::error::{Error, Result};

/// A digraph on `{0, .., d-1}` with loops allowed; equivalently a board in
/// `[d] × [d]` (row = source, column = target).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    d: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn empty(d: usize) -> Self {
        check_size(d).expect("vertex count within limit");
        Digraph { d, out: vec![0; d] }
    }

    pub fn from_edges(d: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_size(d)?;
        let mut g = Digraph { d, out: vec![0; d] };
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from out-neighbour masks.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let d = rows.len();
        check_size(d)?;
        let full = if d == 64 { u64::MAX } else { bit(d) - 1 };
        if rows.iter().any(|r| r & !full != 0) {
            return Err(Error::Precondition("edge target outside vertex range".into()));
        }
        Ok(Digraph { d, out: rows })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.d || v >= self.d {
            return Err(Error::Precondition(format!(
                "edge ({}, {}) outside vertex range 1..={}",
                u + 1,
                v + 1,
                self.d
            )));
        }
        self.out[u] |= bit(v);
        Ok(())
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.out[u] |= bit(v);
    }

    /// The directed path `0 → 1 → … → d-1`.
    pub fn path(d: usize) -> Self {
        let mut g = Self::empty(d);
        for v in 1..d {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// The directed cycle on `d ≥ 1` vertices; `d = 1` is a single loop.
    pub fn cycle(d: usize) -> Self {
        let mut g = Self::path(d);
        if d > 0 {
            g.insert_edge(d - 1, 0);
        }
        g
    }

    /// All of `[d] × [d]`.
    pub fn complete_with_loops(d: usize) -> Self {
        let full = if d == 64 { u64::MAX } else { bit(d) - 1 };
        Digraph { d, out: vec![full; d] }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u] & bit(v) != 0
    }

    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    pub fn rows(&self) -> &[u64] {
        &self.out
    }

    pub fn in_mask(&self, v: usize) -> u64 {
        (0..self.d).filter(|&u| self.has_edge(u, v)).fold(0, |m, u| m | bit(u))
    }

    /// Edges in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.d)
            .flat_map(|u| iter_bits(self.out[u]).map(move |v| (u, v)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    fn full_mask(&self) -> u64 {
        if self.d == 64 {
            u64::MAX
        } else {
            bit(self.d) - 1
        }
    }

    /// `D'`: the complement inside `[d] × [d]`, loops included.
    pub fn complement(&self) -> Self {
        let full = self.full_mask();
        Digraph {
            d: self.d,
            out: self.out.iter().map(|r| !r & full).collect(),
        }
    }

    /// Complement inside the non-loop pairs.
    pub fn loopless_complement(&self) -> Self {
        let full = self.full_mask();
        Digraph {
            d: self.d,
            out: self.out.iter().enumerate().map(|(u, r)| !r & full & !bit(u)).collect(),
        }
    }

    pub fn has_loops(&self) -> bool {
        (0..self.d).any(|u| self.has_edge(u, u))
    }

    /// No directed cycles, loops counting as cycles of length one.
    pub fn is_acyclic(&self) -> bool {
        let mut remaining = self.full_mask();
        loop {
            // peel off vertices with no out-edges into the remaining set
            let sinks = iter_bits(remaining)
                .filter(|&u| self.out[u] & remaining == 0)
                .fold(0, |m, u| m | bit(u));
            if sinks == 0 {
                return remaining == 0;
            }
            remaining &= !sinks;
        }
    }

    /// `(u,w), (w,v) ∈ E ⇒ (u,v) ∈ E`.
    pub fn is_transitively_closed(&self) -> bool {
        (0..self.d).all(|u| {
            iter_bits(self.out[u]).all(|w| self.out[w] & !self.out[u] == 0)
        })
    }

    /// Targets of directed paths of length two from `u`.
    pub fn two_step(&self, u: usize) -> u64 {
        iter_bits(self.out[u]).fold(0, |m, w| m | self.out[w])
    }

    /// For every ordered pair `(u, v)`, `u = v` allowed, at most one of `D`
    /// and its loopless complement has a directed path of length two from
    /// `u` to `v`. The intermediate vertex is distinct from both ends since
    /// neither graph has loops.
    pub fn is_weakly_31_free(&self) -> Result<bool> {
        if self.has_loops() {
            return Err(Error::Precondition(
                "weak (3+1)-freeness is defined for loopless digraphs".into(),
            ));
        }
        let comp = self.loopless_complement();
        Ok((0..self.d).all(|u| self.two_step(u) & comp.two_step(u) == 0))
    }

    /// Same test with the complement taken inside all of `[d] × [d]`, so
    /// loops of the complement may serve as path edges.
    pub fn is_weakly_31_free_full_complement(&self) -> Result<bool> {
        if self.has_loops() {
            return Err(Error::Precondition(
                "weak (3+1)-freeness is defined for loopless digraphs".into(),
            ));
        }
        let comp = self.complement();
        Ok((0..self.d).all(|u| self.two_step(u) & comp.two_step(u) == 0))
    }

    /// `D_1` and `D_2` side by side plus every edge from `D_1` to `D_2`.
    pub fn ordinal_join(&self, other: &Digraph) -> Result<Digraph> {
        let d = self.d + other.d;
        check_size(d)?;
        let high = ((bit(other.d) - 1) << self.d) as u64;
        let mut out: Vec<u64> = self.out.iter().map(|r| r | high).collect();
        out.extend(other.out.iter().map(|r| r << self.d));
        Ok(Digraph { d, out })
    }

    /// Disjoint union, `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let d = self.d + other.d;
        check_size(d)?;
        let mut out = self.out.clone();
        out.extend(other.out.iter().map(|r| r << self.d));
        Ok(Digraph { d, out })
    }

    /// Induced subdigraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut g = Digraph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.insert_edge(a, b);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        let mut g = Digraph::empty(self.d);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Each of the `d²` squares present independently with probability 1/2.
    pub fn random<R: Rng>(d: usize, rng: &mut R) -> Digraph {
        let full = if d == 64 { u64::MAX } else { bit(d) - 1 };
        Digraph {
            d,
            out: (0..d).map(|_| rng.gen::<u64>() & full).collect(),
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{}>{}", u + 1, v + 1)).collect();
        write!(f, "Digraph({}; {})", self.d, edges.join(" "))
    }
}

/// Disjoint directed paths with `λ_i` vertices followed by directed cycles
/// with `μ_j` vertices.
pub fn build_d_lambda_mu(lam: &IntegerPartition, mu: &IntegerPartition) -> Digraph {
    let mut g = Digraph::empty(0);
    for &k in lam.parts() {
        g = g.disjoint_union(&Digraph::path(k as usize)).expect("size within limit");
    }
    for &k in mu.parts() {
        g = g.disjoint_union(&Digraph::cycle(k as usize)).expect("size within limit");
    }
    g
}

pub fn complement(d: &Digraph) -> Digraph {
    d.complement()
}

pub fn ordinal_join(a: &Digraph, b: &Digraph) -> Result<Digraph> {
    a.ordinal_join(b)
}

/// All `2^{d²}` digraphs on `d` vertices.
pub fn all_digraphs(d: usize) -> impl Iterator<Item = Digraph> {
    assert!(d * d < 64, "too many digraphs to enumerate");
    let mask = bit(d) - 1;
    (0u64..(1u64 << (d * d))).map(move |code| Digraph {
        d,
        out: (0..d).map(|u| (code >> (u * d)) & mask).collect(),
    })
}

/// All loopless digraphs on `d` vertices.
pub fn all_loopless_digraphs(d: usize) -> impl Iterator<Item = Digraph> {
    all_digraphs(d).filter(|g| !g.has_loops())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Digraph::empty(1).complement(), Digraph::cycle(1));
        let p2 = Digraph::path(2);
        assert_eq!(p2.complement().edges(), vec![(0, 0), (1, 0), (1, 1)]);
        for g in all_digraphs(3) {
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn join_examples() {
        assert_eq!(Digraph::empty(1).ordinal_join(&Digraph::empty(1)).unwrap(), Digraph::path(2));
        assert_eq!(Digraph::empty(2).ordinal_join(&Digraph::empty(2)).unwrap().num_edges(), 4);
    }

    #[test]
    fn model_digraphs() {
        assert_eq!(build_d_lambda_mu(&ip(&[4]), &IntegerPartition::empty()), Digraph::path(4));
        assert_eq!(build_d_lambda_mu(&IntegerPartition::empty(), &ip(&[3])), Digraph::cycle(3));
        assert_eq!(build_d_lambda_mu(&ip(&[2, 1]), &IntegerPartition::empty()).num_edges(), 1);
    }

    #[test]
    fn acyclicity_and_closure() {
        assert!(Digraph::path(3).is_acyclic());
        assert!(!Digraph::cycle(1).is_acyclic());
        assert!(!Digraph::cycle(3).is_acyclic());
        assert!(!Digraph::path(3).is_transitively_closed());
        let mut g = Digraph::path(3);
        g.insert_edge(0, 2);
        assert!(g.is_transitively_closed());
    }

    #[test]
    fn weakly_free_small_cases() {
        assert!(Digraph::cycle(1).is_weakly_31_free().is_err());
        // on two vertices neither graph has a length-two path avoiding loops
        // unless it contains both orientations of the edge
        for g in all_loopless_digraphs(2) {
            assert!(g.is_weakly_31_free().unwrap());
        }
    }

    #[test]
    fn weakly_free_is_complement_invariant() {
        for d in 1..=4 {
            for g in all_loopless_digraphs(d) {
                assert_eq!(
                    g.is_weakly_31_free().unwrap(),
                    g.loopless_complement().is_weakly_31_free().unwrap()
                );
            }
        }
    }
}
