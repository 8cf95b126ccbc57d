//! Brute-force colouring tallies in finitely many variables, and the
//! matching truncations of symmetric functions.

use std::collections::BTreeMap;

use crate::combinatorics::IntegerPartition;
use crate::error::{Error, Result};
use crate::structures::{path_cycle_covers, Digraph, Graph};
use crate::symfunc::{Basis, SymFunc, SymFunc2};
use crate::Rational;

/// Exponent vector of a monomial in `x_1, …, x_k`.
pub type Monomial = Vec<u32>;

fn for_each_map(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if n > 0 && k == 0 {
        return;
    }
    let mut kappa = vec![0usize; n];
    loop {
        f(&kappa);
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            kappa[pos] += 1;
            if kappa[pos] < k {
                break;
            }
            kappa[pos] = 0;
            pos += 1;
        }
    }
}

/// Proper colourings of `G` with colours in `[k]`, tallied by monomial.
pub fn brute_force_truncated_xg(g: &Graph, k: usize) -> Result<BTreeMap<Monomial, u64>> {
    if k > 6 {
        return Err(Error::TooLarge("brute-force colourings use at most 6 colours".into()));
    }
    let edges = g.edges();
    let mut out = BTreeMap::new();
    for_each_map(g.n(), k, |kappa| {
        if edges.iter().all(|&(u, v)| kappa[u] != kappa[v]) {
            let mut e = vec![0u32; k];
            for &c in kappa {
                e[c] += 1;
            }
            *out.entry(e).or_insert(0) += 1;
        }
    });
    Ok(out)
}

/// Path-cycle colourings of `D` with colours in `[k]`, tallied by the pair
/// of monomials (path vertices in `x`, cycle vertices in `y`).
pub fn brute_force_truncated_xi(d: &Digraph, k: usize) -> Result<BTreeMap<(Monomial, Monomial), u64>> {
    if k > 5 {
        return Err(Error::TooLarge("brute-force colourings use at most 5 colours".into()));
    }
    let mut out = BTreeMap::new();
    for cover in path_cycle_covers(d) {
        let comps: Vec<(&Vec<usize>, bool)> = cover
            .paths
            .iter()
            .map(|p| (p, true))
            .chain(cover.cycles.iter().map(|c| (c, false)))
            .collect();
        for_each_map(d.d(), k, |kappa| {
            // constant on each component
            if !comps.iter().all(|(vs, _)| vs.iter().all(|&v| kappa[v] == kappa[vs[0]])) {
                return;
            }
            // distinct paths get distinct colours
            let path_colours: Vec<usize> = comps.iter().filter(|c| c.1).map(|(vs, _)| kappa[vs[0]]).collect();
            let mut sorted = path_colours.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != path_colours.len() {
                return;
            }
            let mut x = vec![0u32; k];
            let mut y = vec![0u32; k];
            for (vs, is_path) in &comps {
                let slot = if *is_path { &mut x } else { &mut y };
                slot[kappa[vs[0]]] += vs.len() as u32;
            }
            *out.entry((x, y)).or_insert(0) += 1;
        });
    }
    Ok(out)
}

/// Every arrangement of the parts of `lam` into `k` slots (zeros elsewhere).
fn arrangements(lam: &IntegerPartition, k: usize) -> Vec<Monomial> {
    if lam.len() > k {
        return Vec::new();
    }
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in lam.parts() {
        *counts.entry(p).or_default() += 1;
    }
    *counts.entry(0).or_default() += k - lam.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(counts: &mut BTreeMap<u32, usize>, cur: &mut Vec<u32>, k: usize, out: &mut Vec<Monomial>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<u32> = counts.iter().filter(|(_, &n)| n > 0).map(|(&p, _)| p).collect();
        for p in keys {
            *counts.get_mut(&p).unwrap() -= 1;
            cur.push(p);
            rec(counts, cur, k, out);
            cur.pop();
            *counts.get_mut(&p).unwrap() += 1;
        }
    }
    rec(&mut counts, &mut cur, k, &mut out);
    out
}

/// The monomial expansion of `g` in `x_1, …, x_k`.
pub fn truncate_sym(g: &SymFunc, k: usize) -> Result<BTreeMap<Monomial, Rational>> {
    let mut out = BTreeMap::new();
    for (lam, c) in g.convert(Basis::M)? {
        for e in arrangements(&lam, k) {
            out.insert(e, c.clone());
        }
    }
    Ok(out)
}

/// The monomial expansion of `g` in `x_1, …, x_k; y_1, …, y_k`.
pub fn truncate_sym2(g: &SymFunc2, k: usize) -> Result<BTreeMap<(Monomial, Monomial), Rational>> {
    let mut out: BTreeMap<(Monomial, Monomial), Rational> = BTreeMap::new();
    for (mu, x_part) in g.by_y() {
        let xs = truncate_sym(&x_part, k)?;
        let ys = truncate_sym(&SymFunc::p(mu), k)?;
        for (ex, cx) in &xs {
            for (ey, cy) in &ys {
                let slot = out.entry((ex.clone(), ey.clone())).or_default();
                *slot += cx * cy;
            }
        }
    }
    out.retain(|_, c| *c != Rational::default());
    Ok(out)
}

/// Converts a count table to rationals for comparison with a truncation.
pub fn counts_to_rational<K: Ord + Clone>(t: &BTreeMap<K, u64>) -> BTreeMap<K, Rational> {
    t.iter().map(|(k, &n)| (k.clone(), Rational::from_integer(n.into()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{chromatic_sym, path_cycle_sym};

    #[test]
    fn xg_examples() {
        let k2 = brute_force_truncated_xg(&Graph::complete(2), 2).unwrap();
        assert_eq!(k2, BTreeMap::from([(vec![1, 1], 2)]));
        assert_eq!(brute_force_truncated_xg(&Graph::empty(1), 1).unwrap(), BTreeMap::from([(vec![1], 1)]));
        assert!(brute_force_truncated_xg(&Graph::complete(3), 2).unwrap().is_empty());
    }

    #[test]
    fn xi_examples() {
        let loop1 = brute_force_truncated_xi(&Digraph::cycle(1), 1).unwrap();
        assert_eq!(loop1, BTreeMap::from([((vec![1], vec![0]), 1), ((vec![0], vec![1]), 1)]));
        let p2 = brute_force_truncated_xi(&Digraph::path(2), 1).unwrap();
        assert_eq!(p2, BTreeMap::from([((vec![2], vec![0]), 1)]));
        let e2 = brute_force_truncated_xi(&Digraph::empty(2), 2).unwrap();
        assert_eq!(e2, BTreeMap::from([((vec![1, 1], vec![0, 0]), 2)]));
    }

    #[test]
    fn truncations_match() {
        let g = Graph::path(3);
        let t = truncate_sym(&chromatic_sym(&g).unwrap(), 3).unwrap();
        assert_eq!(t, counts_to_rational(&brute_force_truncated_xg(&g, 3).unwrap()));
        let d = Digraph::cycle(2);
        let t = truncate_sym2(&path_cycle_sym(&d).unwrap(), 2).unwrap();
        assert_eq!(t, counts_to_rational(&brute_force_truncated_xi(&d, 2).unwrap()));
    }
}
