//! Path-cycle covers and full rook placements.

use std::collections::{BTreeMap, HashMap};

use super::graph::{bit, iter_bits};
use super::Digraph;
use crate::combinatorics::{permutations, IntegerPartition, Permutation, SetPartition};
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// An edge subset with no two edges in a common row or column, split into
/// its directed paths and cycles. An isolated vertex is a path with no edges
/// and a loop is a cycle of length one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathCycleCover {
    pub edges: Vec<(usize, usize)>,
    pub paths: Vec<Vec<usize>>,
    pub cycles: Vec<Vec<usize>>,
}

impl PathCycleCover {
    /// Decomposes a successor array (`succ[u] = v` for the edge `(u, v)`).
    pub fn from_successors(succ: &[usize]) -> Self {
        let d = succ.len();
        let mut has_pred = vec![false; d];
        let mut edges = Vec::new();
        for (u, &v) in succ.iter().enumerate() {
            if v != NONE {
                has_pred[v] = true;
                edges.push((u, v));
            }
        }
        let mut seen = vec![false; d];
        let mut paths = Vec::new();
        for start in (0..d).filter(|&u| !has_pred[u]) {
            let mut path = vec![start];
            seen[start] = true;
            let mut u = start;
            while succ[u] != NONE {
                u = succ[u];
                seen[u] = true;
                path.push(u);
            }
            paths.push(path);
        }
        let mut cycles = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut u = succ[start];
            while u != start {
                seen[u] = true;
                cycle.push(u);
                u = succ[u];
            }
            cycles.push(cycle);
        }
        PathCycleCover { edges, paths, cycles }
    }

    pub fn path_type(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.paths.iter().map(|p| p.len() as u32))
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.cycles.iter().map(|c| c.len() as u32))
    }

    /// All components (paths and cycles) as one set partition of `[d]`.
    pub fn components(&self, d: usize) -> SetPartition {
        SetPartition::new(d, self.paths.iter().chain(&self.cycles).cloned().collect())
            .expect("components partition the vertex set")
    }

    /// `π(S)` restricted to the path vertices, as blocks.
    pub fn pi_blocks(&self) -> &[Vec<usize>] {
        &self.paths
    }

    /// `σ(S)`, as blocks.
    pub fn sigma_blocks(&self) -> &[Vec<usize>] {
        &self.cycles
    }
}

/// Visits the successor array of every path-cycle cover of `g`.
pub fn for_each_cover<F: FnMut(&[usize])>(g: &Digraph, mut f: F) {
    fn rec<F: FnMut(&[usize])>(g: &Digraph, u: usize, used: u64, succ: &mut Vec<usize>, f: &mut F) {
        if u == g.d() {
            f(succ);
            return;
        }
        succ[u] = NONE;
        rec(g, u + 1, used, succ, f);
        for v in iter_bits(g.out_mask(u) & !used) {
            succ[u] = v;
            rec(g, u + 1, used | bit(v), succ, f);
        }
        succ[u] = NONE;
    }
    let mut succ = vec![NONE; g.d()];
    rec(g, 0, 0, &mut succ, &mut f);
}

pub fn path_cycle_covers(g: &Digraph) -> Vec<PathCycleCover> {
    let mut out = Vec::new();
    for_each_cover(g, |succ| out.push(PathCycleCover::from_successors(succ)));
    out
}

/// Number of covers of each type `(path type, cycle type)`.
pub fn cover_type_counts(g: &Digraph) -> BTreeMap<(IntegerPartition, IntegerPartition), u64> {
    assert!(g.d() <= 15, "cover type packing supports at most 15 vertices");
    let d = g.d();
    let mut packed: HashMap<(u64, u64), u64> = HashMap::new();
    let mut has_pred = vec![false; d];
    let mut seen = vec![false; d];
    let mut paths = [0u8; 16];
    let mut cycles = [0u8; 16];
    for_each_cover(g, |succ| {
        has_pred.iter_mut().for_each(|x| *x = false);
        seen.iter_mut().for_each(|x| *x = false);
        for &v in succ {
            if v != NONE {
                has_pred[v] = true;
            }
        }
        let (mut np, mut nc) = (0, 0);
        for start in 0..d {
            if has_pred[start] {
                continue;
            }
            let mut len = 1;
            let mut u = start;
            seen[u] = true;
            while succ[u] != NONE {
                u = succ[u];
                seen[u] = true;
                len += 1;
            }
            paths[np] = len;
            np += 1;
        }
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 1;
            seen[start] = true;
            let mut u = succ[start];
            while u != start {
                seen[u] = true;
                len += 1;
                u = succ[u];
            }
            cycles[nc] = len;
            nc += 1;
        }
        *packed.entry((pack(&mut paths[..np]), pack(&mut cycles[..nc]))).or_insert(0) += 1;
    });
    packed
        .into_iter()
        .map(|((p, c), n)| ((unpack(p), unpack(c)), n))
        .collect()
}

fn pack(parts: &mut [u8]) -> u64 {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts.iter().fold(0u64, |acc, &p| (acc << 4) | p as u64)
}

fn unpack(mut code: u64) -> IntegerPartition {
    let mut parts = Vec::new();
    while code != 0 {
        parts.push((code & 0xf) as u32);
        code >>= 4;
    }
    IntegerPartition::from_parts(parts)
}

/// All `d!` placements of `d` non-attacking rooks on `[d] × [d]`, as the
/// permutation sending each row to its rook's column.
pub fn rook_placements_full(d: usize) -> Vec<Permutation> {
    permutations(d)
}

/// The squares of `t` that lie on the board of `g`.
pub fn drop_edges(t: &Permutation, g: &Digraph) -> Result<Vec<(usize, usize)>> {
    if t.len() != g.d() {
        return Err(Error::GroundSizeMismatch(t.len(), g.d()));
    }
    Ok(t.one_line()
        .iter()
        .enumerate()
        .filter(|&(u, &v)| g.has_edge(u, v))
        .map(|(u, &v)| (u, v))
        .collect())
}
