//! Graph invariants: `X_G`, the chromatic polynomial, `X_G(t)`, G-ascents
//! and the tableau expansions for posets.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use super::count_rat;
use crate::combinatorics::{for_each_permutation, IntegerPartition, Permutation, SetPartition};
use crate::error::{Error, Result};
use crate::structures::tableaux::d_tableau_counts;
use crate::structures::{popping_classes, Graph, Poset};
use crate::symfunc::{BivarPoly, SymFunc, TPoly};
use crate::Rational;

/// Largest edge count for the edge-subset sums.
pub const MAX_SUBSET_EDGES: usize = 24;

fn check_edges(g: &Graph) -> Result<()> {
    if g.num_edges() > MAX_SUBSET_EDGES {
        return Err(Error::TooLarge(format!(
            "edge-subset sum over {} edges (limit {MAX_SUBSET_EDGES})",
            g.num_edges()
        )));
    }
    Ok(())
}

/// `X_G = Σ m̃_{type(π)}` over stable partitions `π`.
pub fn chromatic_sym(g: &Graph) -> Result<SymFunc> {
    let mut counts: BTreeMap<IntegerPartition, u64> = BTreeMap::new();
    for pi in g.stable_partitions() {
        *counts.entry(pi.block_type()).or_default() += 1;
    }
    let mut out = SymFunc::zero();
    for (lam, n) in counts {
        out = &out + &SymFunc::m_tilde(lam)?.scale(&count_rat(n));
    }
    Ok(out)
}

/// For each edge subset `S`, the partition of component sizes of `(V, S)`,
/// with the number of subsets of each size and type.
fn edge_subset_types(g: &Graph) -> Result<BTreeMap<(u32, IntegerPartition), u64>> {
    check_edges(g)?;
    let edges = g.edges();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << edges.len()) {
        let chosen: Vec<(usize, usize)> = (0..edges.len()).filter(|k| mask & (1 << k) != 0).map(|k| edges[k]).collect();
        let labels = Graph::component_labels(g.n(), &chosen);
        let lam = SetPartition::from_labels(&labels).block_type();
        *out.entry((mask.count_ones(), lam)).or_default() += 1;
    }
    Ok(out)
}

/// `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`.
pub fn chromatic_sym_edges(g: &Graph) -> Result<SymFunc> {
    Ok(xg_t_edges(g)?.evaluate(&-Rational::one()))
}

/// `χ_G(i)`, the number of proper colourings with `i` colours.
pub fn chromatic_poly(g: &Graph) -> Result<BivarPoly> {
    Ok(chromatic_sym(g)?.specialize_ones())
}

/// `X_G(t) = Σ_{S ⊆ E} t^{|S|} p_{λ(S)}`.
pub fn xg_t_edges(g: &Graph) -> Result<TPoly> {
    let mut out = TPoly::zero();
    for ((k, lam), n) in edge_subset_types(g)? {
        out.add_term(k, &SymFunc::p(lam).scale(&count_rat(n)));
    }
    Ok(out)
}

/// Möbius function of the bond lattice, `μ(π, σ)` for every comparable pair
/// (indices into `lattice`).
fn lattice_mobius(lattice: &[SetPartition]) -> Result<BTreeMap<(usize, usize), BigInt>> {
    // finer partitions have more blocks; process each interval bottom-up
    let mut order: Vec<usize> = (0..lattice.len()).collect();
    order.sort_by_key(|&k| std::cmp::Reverse(lattice[k].len()));
    let mut leq = vec![vec![false; lattice.len()]; lattice.len()];
    for a in 0..lattice.len() {
        for b in 0..lattice.len() {
            leq[a][b] = lattice[a].refines(&lattice[b])?;
        }
    }
    let mut mu = BTreeMap::new();
    for &a in &order {
        mu.insert((a, a), BigInt::one());
        for &b in &order {
            if b == a || !leq[a][b] {
                continue;
            }
            let mut s = BigInt::zero();
            for &c in &order {
                if c != b && leq[a][c] && leq[c][b] {
                    if let Some(v) = mu.get(&(a, c)) {
                        s += v;
                    }
                }
            }
            mu.insert((a, b), -s);
        }
    }
    Ok(mu)
}

/// `X_G(t) = Σ_{π ≤ σ in L_G} (1+t)^{n(π)} μ(π, σ) p_σ`, where `n(π)` counts
/// edges inside blocks of `π`.
pub fn xg_t_mobius(g: &Graph) -> Result<TPoly> {
    if g.n() > 8 {
        return Err(Error::TooLarge("bond lattice limited to 8 vertices".into()));
    }
    let lattice = g.contraction_lattice();
    let mu = lattice_mobius(&lattice)?;
    // (1+t)^k expanded by the binomial theorem
    let mut out = TPoly::zero();
    for ((a, b), m) in mu {
        let k = g.edges_inside(&lattice[a]);
        let p = SymFunc::p(lattice[b].block_type()).scale(&Rational::from_integer(m));
        for r in 0..=k {
            let c = crate::combinatorics::binomial(k, r);
            out.add_term(r as u32, &p.scale(&Rational::from_integer(c.into())));
        }
    }
    Ok(out)
}

/// `X_G(t)` by the edge-subset sum, checked against the bond-lattice formula.
pub fn xg_t(g: &Graph) -> Result<TPoly> {
    let direct = xg_t_edges(g)?;
    if g.n() <= 8 && direct != xg_t_mobius(g)? {
        return Err(Error::Consistency(format!("X_G(t) formulas disagree for {g:?}")));
    }
    Ok(direct)
}

/// The G-ascent type of `pi` (0-based one-line notation).
pub fn g_ascent_type(g: &Graph, pi: &Permutation) -> Result<IntegerPartition> {
    if pi.len() != g.n() {
        return Err(Error::GroundSizeMismatch(pi.len(), g.n()));
    }
    Ok(ascent_type(g, pi.one_line()))
}

fn ascent_type(g: &Graph, w: &[usize]) -> IntegerPartition {
    let n = w.len();
    let mut rank = vec![0usize; n];
    for k in 0..n {
        for i in 0..k {
            if g.has_edge(w[i], w[k]) {
                rank[k] = rank[k].max(rank[i] + 1);
            }
        }
    }
    let mut parts = Vec::new();
    let mut start = 0;
    for k in 0..n {
        let ascent = k + 1 < n && (rank[k] < rank[k + 1] || (rank[k] == rank[k + 1] && w[k] < w[k + 1]));
        if ascent || k + 1 == n {
            parts.push((k + 1 - start) as u32);
            start = k + 1;
        }
    }
    IntegerPartition::from_parts(parts)
}

/// `N_λ`, the number of permutations with each G-ascent type.
pub fn g_ascent_counts(g: &Graph) -> BTreeMap<IntegerPartition, u64> {
    let mut out = BTreeMap::new();
    for_each_permutation(g.n(), |w| {
        *out.entry(ascent_type(g, w)).or_insert(0) += 1;
    });
    out
}

/// `Σ_λ N_λ Ξ̃_λ` for a table of counts.
pub fn xi_tilde_combination(counts: &BTreeMap<IntegerPartition, u64>) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    for (lam, n) in counts {
        out = &out + &SymFunc::xi_tilde(lam.clone())?.scale(&count_rat(*n));
    }
    Ok(out)
}

/// Number of P-tableaux of each shape; needs a (3+1)-free poset.
pub fn schur_coeffs_via_p_tableaux(p: &Poset) -> Result<BTreeMap<IntegerPartition, u64>> {
    if !p.is_31_free() {
        return Err(Error::Precondition("poset is not (3+1)-free".into()));
    }
    Ok(d_tableau_counts(&p.digraph()))
}

/// The multiset `{λ^i}` of popping classes of a 3-free poset, checked to
/// satisfy `X_{G(P)} = Σ_i e_{λ^i}`.
pub fn threefree_e_expansion(p: &Poset) -> Result<BTreeMap<IntegerPartition, u64>> {
    let mut out: BTreeMap<IntegerPartition, u64> = BTreeMap::new();
    for class in popping_classes(p)? {
        *out.entry(class.lambda).or_default() += 1;
    }
    let mut sum = SymFunc::zero();
    for (lam, n) in &out {
        sum = &sum + &SymFunc::e(lam.clone())?.scale(&count_rat(*n));
    }
    if sum != chromatic_sym(&p.incomparability_graph())? {
        return Err(Error::Consistency(format!("popping classes do not reproduce X_G(P) for {p:?}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::graph::all_graphs;
    use crate::symfunc::rat;

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_sym(&Graph::empty(1)).unwrap(), SymFunc::m(ip(&[1])).unwrap());
        assert_eq!(chromatic_sym(&Graph::complete(2)).unwrap(), SymFunc::e(ip(&[2])).unwrap().scale(&rat(2)));
        let e3 = SymFunc::m_tilde(ip(&[1, 1, 1])).unwrap();
        assert_eq!(chromatic_sym(&Graph::complete(3)).unwrap(), e3);
        let k2 = &SymFunc::p(ip(&[1, 1])) - &SymFunc::p(ip(&[2]));
        assert_eq!(chromatic_sym_edges(&Graph::complete(2)).unwrap(), k2);
        assert_eq!(chromatic_poly(&Graph::complete(2)).unwrap().to_string(), "i^2 - i");
        assert_eq!(chromatic_poly(&Graph::complete(3)).unwrap(), BivarPoly::falling_factorial_i(3));
    }

    #[test]
    fn chromatic_forms_agree() {
        for n in 1..=4 {
            for g in all_graphs(n) {
                assert_eq!(chromatic_sym(&g).unwrap(), chromatic_sym_edges(&g).unwrap(), "{g:?}");
            }
        }
    }

    #[test]
    fn xg_t_examples() {
        let k2 = xg_t(&Graph::complete(2)).unwrap();
        assert_eq!(k2.coefficient(0), SymFunc::p(ip(&[1, 1])));
        assert_eq!(k2.coefficient(1), SymFunc::p(ip(&[2])));
        for g in all_graphs(4) {
            assert_eq!(xg_t_edges(&g).unwrap(), xg_t_mobius(&g).unwrap());
        }
    }

    #[test]
    fn ascent_examples() {
        let g = Graph::from_edges(3, &[(0, 2)]).unwrap();
        let pi = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        assert_eq!(g_ascent_type(&g, &pi).unwrap(), ip(&[2, 1]));
        assert_eq!(g_ascent_counts(&Graph::empty(1)), BTreeMap::from([(ip(&[1]), 1)]));
        // both orders of K_2 break into singletons
        assert_eq!(g_ascent_counts(&Graph::complete(2)), BTreeMap::from([(ip(&[1, 1]), 2)]));
        for g in all_graphs(4) {
            let x = xi_tilde_combination(&g_ascent_counts(&g)).unwrap();
            assert_eq!(x, chromatic_sym(&g).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn poset_expansions() {
        // G(chain) is edgeless, so X = p_1^3 = s_3 + 2 s_21 + s_111
        let chain = Poset::chain(3);
        let expect = BTreeMap::from([(ip(&[3]), 1), (ip(&[2, 1]), 2), (ip(&[1, 1, 1]), 1)]);
        assert_eq!(schur_coeffs_via_p_tableaux(&chain).unwrap(), expect);
        let anti = Poset::antichain(2);
        assert_eq!(schur_coeffs_via_p_tableaux(&anti).unwrap(), BTreeMap::from([(ip(&[1, 1]), 2)]));
        assert_eq!(threefree_e_expansion(&Poset::antichain(1)).unwrap(), BTreeMap::from([(ip(&[1]), 1)]));
        let e = threefree_e_expansion(&Poset::antichain(3)).unwrap();
        assert_eq!(e, BTreeMap::from([(ip(&[3]), 6)]));
        assert!(threefree_e_expansion(&Poset::chain(3)).is_err());
    }
}
