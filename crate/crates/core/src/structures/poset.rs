use super::graph::{bit, check_size, iter_bits};
use super::{Digraph, Graph};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// A finite poset on `{0, .., n-1}`; bit `j` of `less[i]` records `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    n: usize,
    less: Vec<u64>,
}

impl Poset {
    /// The order generated by `relations` (`(u, v)` meaning `u < v`).
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut less = vec![0u64; n];
        for &(u, v) in relations {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "relation ({}, {}) outside element range 1..={}",
                    u + 1,
                    v + 1,
                    n
                )));
            }
            less[u] |= bit(v);
        }
        // transitive closure, Warshall style
        for k in 0..n {
            for i in 0..n {
                if less[i] & bit(k) != 0 {
                    less[i] |= less[k];
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i] & bit(i) != 0) {
            return Err(Error::Precondition(format!(
                "relations contain a cycle through element {}",
                i + 1
            )));
        }
        Ok(Poset { n, less })
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_relations(n, &[]).expect("valid antichain")
    }

    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Poset::from_relations(n, &rel).expect("valid chain")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.less[u] & bit(v) != 0
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.lt(u, v) || self.lt(v, u)
    }

    /// Mask of elements above `u`.
    pub fn up_mask(&self, u: usize) -> u64 {
        self.less[u]
    }

    /// All pairs `(u, v)` with `u < v`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| iter_bits(self.less[u]).map(move |v| (u, v)))
            .collect()
    }

    /// Cover relations, the minimal generating set.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(u, v)| iter_bits(self.less[u]).all(|w| !self.lt(w, v)))
            .collect()
    }

    /// `G(P)`: incomparable elements are adjacent.
    pub fn incomparability_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.comparable(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("valid pairs")
    }

    /// `D(P)`: an edge `(u, v)` for every `u < v`.
    pub fn digraph(&self) -> Digraph {
        Digraph::from_rows(self.less.clone()).expect("rows within range")
    }

    /// Contains no three-element chain with an element incomparable to all three.
    pub fn is_31_free(&self) -> bool {
        for (a, b) in self.relations() {
            for c in iter_bits(self.less[b]) {
                let chain = bit(a) | bit(b) | bit(c);
                let free = (0..self.n).any(|x| {
                    chain & bit(x) == 0 && !self.comparable(x, a) && !self.comparable(x, b) && !self.comparable(x, c)
                });
                if free {
                    return false;
                }
            }
        }
        true
    }

    /// Contains no three-element chain.
    pub fn is_3_free(&self) -> bool {
        (0..self.n).all(|u| iter_bits(self.less[u]).all(|v| self.less[v] == 0))
    }

    /// Words `π_1 … π_n` in which smaller elements come first.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        let below: Vec<u64> = (0..self.n)
            .map(|v| (0..self.n).filter(|&u| self.lt(u, v)).fold(0, |m, u| m | bit(u)))
            .collect();
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(self.n);
        fn rec(below: &[u64], placed: u64, word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            let n = below.len();
            if word.len() == n {
                out.push(Permutation::new(word.clone()).expect("word is a permutation"));
                return;
            }
            for v in 0..n {
                if placed & bit(v) == 0 && below[v] & !placed == 0 {
                    word.push(v);
                    rec(below, placed | bit(v), word, out);
                    word.pop();
                }
            }
        }
        rec(&below, 0, &mut word, &mut out);
        out
    }

    /// `P ⊕ Q`: every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &Poset) -> Result<Poset> {
        let n = self.n + other.n;
        check_size(n)?;
        let high = (bit(other.n) - 1) << self.n;
        let mut less: Vec<u64> = self.less.iter().map(|r| r | high).collect();
        less.extend(other.less.iter().map(|r| r << self.n));
        Ok(Poset { n, less })
    }
}

/// Every naturally labelled poset on `n` elements (`u < v` in the poset
/// implies `u < v` as integers). Every poset is isomorphic to one of these.
pub fn natural_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many relation subsets to enumerate");
    let mut out = Vec::new();
    for code in 0u32..(1u32 << pairs.len()) {
        let mut less = vec![0u64; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if code & (1 << k) != 0 {
                less[u] |= bit(v);
            }
        }
        let closed = (0..n).all(|u| iter_bits(less[u]).all(|w| less[w] & !less[u] == 0));
        if closed {
            out.push(Poset { n, less });
        }
    }
    out
}

/// Naturally labelled 3-free posets: relations `u < v` with no two composable.
pub fn natural_3_free_posets(n: usize) -> Vec<Poset> {
    natural_posets(n).into_iter().filter(Poset::is_3_free).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::SetPartition;
    use crate::structures::covers::path_cycle_covers;

    #[test]
    fn closure_and_cycles() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.cover_relations(), vec![(0, 1), (1, 2)]);
        assert!(Poset::from_relations(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Poset::from_relations(1, &[(0, 0)]).is_err());
    }

    #[test]
    fn associated_graphs() {
        let a = Poset::antichain(2);
        assert_eq!(a.incomparability_graph(), Graph::complete(2));
        assert_eq!(a.digraph().num_edges(), 0);
        let c = Poset::chain(2);
        assert_eq!(c.incomparability_graph().num_edges(), 0);
        assert_eq!(c.digraph(), Digraph::path(2));
        // 3-chain plus an isolated element
        let p = Poset::from_relations(4, &[(0, 1), (1, 2)]).unwrap();
        let g = p.incomparability_graph();
        assert_eq!(g.edges(), vec![(0, 3), (1, 3), (2, 3)]);
        assert!(!p.is_31_free());
        assert!(!p.digraph().is_weakly_31_free().unwrap());
    }

    #[test]
    fn posets_free_iff_digraph_weakly_free() {
        for n in 1..=5 {
            for p in natural_posets(n) {
                assert_eq!(p.is_31_free(), p.digraph().is_weakly_31_free().unwrap(), "{p:?}");
            }
        }
    }

    #[test]
    fn natural_poset_counts() {
        // naturally labelled posets: 1, 2, 7, 40, 357
        let counts: Vec<usize> = (1..=5).map(|n| natural_posets(n).len()).collect();
        assert_eq!(counts, [1, 2, 7, 40, 357]);
    }

    #[test]
    fn extensions() {
        assert_eq!(Poset::chain(4).linear_extensions().len(), 1);
        assert_eq!(Poset::antichain(4).linear_extensions().len(), 24);
        let v = Poset::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(v.linear_extensions().len(), 2);
    }

    #[test]
    fn ordinal_sum_matches_join() {
        let p = Poset::chain(2);
        let q = Poset::antichain(2);
        assert_eq!(p.ordinal_sum(&q).unwrap().digraph(), p.digraph().ordinal_join(&q.digraph()).unwrap());
    }

    #[test]
    fn stable_sets_are_chain_partitions_are_path_covers() {
        for n in 1..=5 {
            for p in natural_posets(n) {
                let mut stable = p.incomparability_graph().stable_partitions();
                stable.sort();
                let mut chains: Vec<SetPartition> = crate::combinatorics::set_partitions(n)
                    .into_iter()
                    .filter(|s| {
                        s.blocks()
                            .iter()
                            .all(|b| b.iter().all(|&u| b.iter().all(|&v| u == v || p.comparable(u, v))))
                    })
                    .collect();
                chains.sort();
                let mut covers: Vec<SetPartition> = path_cycle_covers(&p.digraph())
                    .iter()
                    .map(|c| c.components(n))
                    .collect();
                covers.sort();
                covers.dedup();
                assert_eq!(stable, chains);
                assert_eq!(stable, covers);
            }
        }
    }
}
