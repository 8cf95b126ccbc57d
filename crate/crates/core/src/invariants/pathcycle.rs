//! Invariants of digraphs and boards: `Ξ_D`, the cover and factorial
//! polynomials, rook statistics and their expansions.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use super::{count_rat, CoverStatistics};
use crate::combinatorics::{
    for_each_permutation, integer_partitions, mask_composition, mobius_full, set_partitions, IntegerPartition,
    SetPartition,
};
use crate::error::{Error, Result};
use crate::structures::covers::{cover_type_counts, for_each_cover};
use crate::structures::graph::iter_bits;
use crate::structures::tableaux::d_tableau_counts;
use crate::structures::{build_d_lambda_mu, Digraph};
use crate::symfunc::{insert_term, rat, Basis, BivarPoly, QSymFunc, SymFunc, SymFunc2, TruncatedMultiPoly};
use crate::Rational;

/// Largest digraph handled by the cover enumerators.
pub const MAX_COVER_VERTICES: usize = 15;

fn check_cover_size(d: &Digraph) -> Result<()> {
    if d.d() > MAX_COVER_VERTICES {
        return Err(Error::TooLarge(format!(
            "cover enumeration on {} vertices (limit {MAX_COVER_VERTICES})",
            d.d()
        )));
    }
    Ok(())
}

/// Path-cycle covers of `D` grouped by `(path type, cycle type)`, with the
/// number of covers of each size.
pub fn cover_statistics(d: &Digraph) -> Result<CoverStatistics> {
    check_cover_size(d)?;
    let by_type = cover_type_counts(d);
    let mut by_size = vec![0u64; d.d() + 1];
    for ((lam, _), n) in &by_type {
        // a cover with path type λ has d - ℓ(λ) edges
        by_size[d.d() - lam.len()] += n;
    }
    Ok(CoverStatistics { by_type, by_size })
}

fn assemble<F>(counts: &BTreeMap<(IntegerPartition, IntegerPartition), u64>, x_part: F) -> Result<SymFunc2>
where
    F: Fn(&IntegerPartition) -> Result<SymFunc>,
{
    let mut terms = BTreeMap::new();
    for ((lam, mu), n) in counts {
        let n = count_rat(*n);
        for (nu, c) in x_part(lam)?.terms() {
            insert_term(&mut terms, (nu.clone(), mu.clone()), c * &n);
        }
    }
    Ok(SymFunc2::from_terms(terms))
}

/// `Ξ_D = Σ_S m̃_{π(S)}(x) p_{σ(S)}(y)` over all path-cycle covers `S`.
pub fn path_cycle_sym(d: &Digraph) -> Result<SymFunc2> {
    let stats = cover_statistics(d)?;
    assemble(&stats.by_type, |lam| SymFunc::m_tilde(lam.clone()))
}

/// `Ξ_D` evaluated through the complement:
/// `Σ_S (sgn π(S)) f_{π(S)}(x,y) p_{σ(S)}(-y)` over covers `S` of `D'`.
pub fn path_cycle_sym_via_complement(d: &Digraph) -> Result<SymFunc2> {
    let stats = cover_statistics(&d.complement())?;
    let mut out = SymFunc2::zero();
    for ((lam, mu), n) in &stats.by_type {
        let f = SymFunc2::from_x(&SymFunc::f(lam.clone())?).delta_xy();
        let sign = lam.sgn() * if mu.weight() % 2 == 0 { 1 } else { -1 };
        let y = SymFunc2::pp(IntegerPartition::empty(), mu.clone());
        out = &out + &(&f * &y).scale(&(count_rat(*n) * rat(sign as i64)));
    }
    Ok(out)
}

/// `C(D; i, j) = Σ_S i^{\underline{ℓ(π(S))}} j^{ℓ(σ(S))}`.
pub fn cover_poly(d: &Digraph) -> Result<BivarPoly> {
    let stats = cover_statistics(d)?;
    let mut out = BivarPoly::zero(["i", "j"]);
    for ((lam, mu), n) in &stats.by_type {
        let mut term = BivarPoly::falling_factorial_i(lam.len() as u32);
        term = &term * &BivarPoly::var(["i", "j"], 1).pow(mu.len() as u32);
        out = &out + &term.scale(&count_rat(*n));
    }
    Ok(out)
}

/// `r_k`, the number of ways to place `k` non-attacking rooks on the board,
/// for `k = 0..=d`.
pub fn rook_numbers(b: &Digraph) -> Vec<u64> {
    // rows in order; state is the set of used columns
    let mut states: BTreeMap<u64, Vec<u64>> = BTreeMap::from([(0u64, {
        let mut v = vec![0u64; b.d() + 1];
        v[0] = 1;
        v
    })]);
    for row in 0..b.d() {
        let mut next: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for (used, counts) in &states {
            let skip = next.entry(*used).or_insert_with(|| vec![0; b.d() + 1]);
            for (k, c) in counts.iter().enumerate() {
                skip[k] += c;
            }
            for col in iter_bits(b.out_mask(row) & !used) {
                let slot = next.entry(used | (1 << col)).or_insert_with(|| vec![0; b.d() + 1]);
                for k in 0..b.d() {
                    slot[k + 1] += counts[k];
                }
            }
        }
        states = next;
    }
    let mut total = vec![0u64; b.d() + 1];
    for counts in states.values() {
        for (k, c) in counts.iter().enumerate() {
            total[k] += c;
        }
    }
    total
}

/// `R(B; i) = Σ_k r_k i^{\underline{d-k}}`.
pub fn factorial_poly(b: &Digraph) -> BivarPoly {
    let d = b.d();
    rook_numbers(b)
        .iter()
        .enumerate()
        .fold(BivarPoly::zero(["i", "j"]), |acc, (k, &r)| {
            &acc + &BivarPoly::falling_factorial_i((d - k) as u32).scale(&count_rat(r))
        })
}

/// Types of `drop(T)` over all `d!` full rook placements `T`:
/// `by_type` holds `N_{λ,μ}` and `by_size[k]` holds `N_k`.
pub fn n_statistics(d: &Digraph) -> Result<CoverStatistics> {
    check_cover_size(d)?;
    let n = d.d();
    let mut by_type: BTreeMap<(IntegerPartition, IntegerPartition), u64> = BTreeMap::new();
    let mut by_size = vec![0u64; n + 1];
    let mut succ = vec![usize::MAX; n];
    for_each_permutation(n, |t| {
        let mut k = 0;
        for u in 0..n {
            succ[u] = if d.has_edge(u, t[u]) {
                k += 1;
                t[u]
            } else {
                usize::MAX
            };
        }
        let cover = crate::structures::PathCycleCover::from_successors(&succ);
        *by_type.entry((cover.path_type(), cover.cycle_type())).or_default() += 1;
        by_size[k] += 1;
    });
    Ok(CoverStatistics { by_type, by_size })
}

/// `Ξ̃_{λ,μ}`: the cover sum of `D_{λ,μ}` with each path part normalised by `ℓ(π(S))!`.
pub fn xi_tilde(lam: &IntegerPartition, mu: &IntegerPartition) -> Result<SymFunc2> {
    let d = build_d_lambda_mu(lam, mu);
    let stats = cover_statistics(&d)?;
    assemble(&stats.by_type, |nu| {
        let den = Rational::from_integer(crate::combinatorics::factorial(nu.len()).into());
        Ok(SymFunc::m_tilde(nu.clone())?.scale(&(Rational::one() / den)))
    })
}

/// The coefficients `N_{λ,μ}` of `Ξ_D = Σ N_{λ,μ} Ξ̃_{λ,μ}`, after checking the
/// identity exactly.
pub fn inclusion_exclusion_expand(d: &Digraph) -> Result<BTreeMap<(IntegerPartition, IntegerPartition), u64>> {
    let stats = n_statistics(d)?;
    let mut sum = SymFunc2::zero();
    for ((lam, mu), n) in &stats.by_type {
        sum = &sum + &xi_tilde(lam, mu)?.scale(&count_rat(*n));
    }
    if sum != path_cycle_sym(d)? {
        return Err(Error::Consistency(format!(
            "inclusion-exclusion expansion differs from the cover sum for {d:?}"
        )));
    }
    Ok(stats.by_type)
}

/// `R(D; i) = Σ_k N_k C(i + k, d)`, the polynomial form of inclusion-exclusion.
pub fn factorial_poly_via_n(d: &Digraph) -> Result<BivarPoly> {
    let stats = n_statistics(d)?;
    let i = BivarPoly::var(["i", "j"], 0);
    let mut out = BivarPoly::zero(["i", "j"]);
    for (k, &n) in stats.by_size.iter().enumerate() {
        let shifted = &i + &BivarPoly::constant(["i", "j"], rat(k as i64));
        out = &out + &shifted.binomial(d.d() as u32).scale(&count_rat(n));
    }
    Ok(out)
}

/// `δ_D(q, r, s)`: pairs `(S, T)` with `T` a full placement, `S ⊆ drop(T)`
/// exactly a union of `s` cycles with `r` edges, and `|drop(T)| = q + r`.
pub fn delta_statistics(d: &Digraph) -> Result<BTreeMap<(usize, usize, usize), u64>> {
    check_cover_size(d)?;
    let n = d.d();
    let mut out: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    let mut succ = vec![usize::MAX; n];
    for_each_permutation(n, |t| {
        let mut size = 0;
        for u in 0..n {
            succ[u] = if d.has_edge(u, t[u]) {
                size += 1;
                t[u]
            } else {
                usize::MAX
            };
        }
        let cycles: Vec<usize> = crate::structures::PathCycleCover::from_successors(&succ)
            .cycles
            .iter()
            .map(Vec::len)
            .collect();
        for pick in 0u32..(1 << cycles.len()) {
            let r: usize = iter_bits(pick as u64).map(|k| cycles[k]).sum();
            let s = pick.count_ones() as usize;
            *out.entry((size - r, r, s)).or_default() += 1;
        }
    });
    Ok(out)
}

/// `Σ δ_D(q,r,s) C(i+q, d-r) (j-1)^s`.
pub fn delta_formula(delta: &BTreeMap<(usize, usize, usize), u64>, d: usize) -> BivarPoly {
    let i = BivarPoly::var(["i", "j"], 0);
    let jm1 = &BivarPoly::var(["i", "j"], 1) - &BivarPoly::constant(["i", "j"], rat(1));
    let mut out = BivarPoly::zero(["i", "j"]);
    for (&(q, r, s), &n) in delta {
        let binom = (&i + &BivarPoly::constant(["i", "j"], rat(q as i64))).binomial((d - r) as u32);
        out = &out + &(&binom * &jm1.pow(s as u32)).scale(&count_rat(n));
    }
    out
}

/// `T_{≥π}` for an acyclic digraph, from the extended-board placement definition.
///
/// Each column holds one rook, either on the board or in an appended row;
/// appended rooks in the same row form the blocks of a set partition `τ`.
/// Rooks share a row only when both are on the board in the same original
/// row or both are appended in the same `τ` block. A vertex whose rook is
/// appended takes the colour of that row; a vertex whose rook sits in
/// original row `r` copies the colour of vertex `r`.
pub fn t_geq(d: &Digraph, pi: &SetPartition) -> Result<SymFunc> {
    let n = d.d();
    if pi.ground_size() != n {
        return Err(Error::GroundSizeMismatch(pi.ground_size(), n));
    }
    if !d.is_acyclic() {
        return Err(Error::Precondition("T_{>=pi} is defined for acyclic digraphs".into()));
    }
    let pi_labels = pi.labels();
    let rows_in: Vec<Vec<usize>> = (0..n).map(|c| iter_bits(d.in_mask(c)).collect()).collect();
    let partitions: Vec<Vec<SetPartition>> = (0..=n).map(set_partitions).collect();
    let mut types: BTreeMap<IntegerPartition, u64> = BTreeMap::new();
    let mut choice: Vec<Option<usize>> = vec![None; n];

    fn rec(
        c: usize,
        choice: &mut Vec<Option<usize>>,
        rows_in: &[Vec<usize>],
        visit: &mut dyn FnMut(&[Option<usize>]),
    ) {
        if c == choice.len() {
            visit(choice);
            return;
        }
        choice[c] = None;
        rec(c + 1, choice, rows_in, visit);
        for &r in &rows_in[c] {
            choice[c] = Some(r);
            rec(c + 1, choice, rows_in, visit);
        }
        choice[c] = None;
    }

    let mut visit = |choice: &[Option<usize>]| {
        let appended: Vec<usize> = (0..n).filter(|&c| choice[c].is_none()).collect();
        for tau in &partitions[appended.len()] {
            let tau_labels = tau.labels();
            let mut block_of = vec![usize::MAX; n];
            for (k, &c) in appended.iter().enumerate() {
                block_of[c] = tau_labels[k];
            }
            // row key of each column's rook: (appended?, row or block)
            let key = |c: usize| match choice[c] {
                Some(r) => (false, r),
                None => (true, block_of[c]),
            };
            let coarse_enough = (0..n).all(|u| (u + 1..n).all(|v| pi_labels[u] != pi_labels[v] || key(u) == key(v)));
            if !coarse_enough {
                continue;
            }
            let mut weights = vec![0u32; tau.len()];
            for c in 0..n {
                let mut v = c;
                while let Some(r) = choice[v] {
                    v = r;
                }
                weights[block_of[v]] += 1;
            }
            *types.entry(IntegerPartition::from_parts(weights)).or_default() += 1;
        }
    };
    rec(0, &mut choice, &rows_in, &mut visit);
    let mut out = SymFunc::zero();
    for (lam, k) in types {
        out = &out + &SymFunc::m_tilde(lam)?.scale(&count_rat(k));
    }
    Ok(out)
}

/// Multiset of `S(π) = {i : (π_i, π_{i+1}) ∉ E(D)}` over all permutations,
/// as subset masks of `[d-1]`.
pub fn quasisym_expansion(d: &Digraph) -> BTreeMap<u32, u64> {
    let n = d.d();
    let mut out = BTreeMap::new();
    for_each_permutation(n, |w| {
        let mask = (0..n.saturating_sub(1))
            .filter(|&k| !d.has_edge(w[k], w[k + 1]))
            .fold(0u32, |m, k| m | (1 << k));
        *out.entry(mask).or_insert(0) += 1;
    });
    out
}

/// `Σ_S b_S Q_{S,d}` for a fundamental-coefficient table.
pub fn quasisym_reassemble(b: &BTreeMap<u32, u64>, d: usize) -> Result<SymFunc> {
    if d == 0 {
        return Ok(SymFunc::constant(count_rat(b.values().sum())));
    }
    let coeffs: BTreeMap<u32, Rational> = b.iter().map(|(&s, &n)| (s, count_rat(n))).collect();
    QSymFunc::from_fundamental(d, &coeffs)?.to_sym()
}

/// Type of a subset of `[d-1]` given as a mask.
pub fn mask_type(mask: u32, d: usize) -> IntegerPartition {
    IntegerPartition::from_parts(mask_composition(mask, d))
}

/// Number of D-tableaux of each shape; needs a weakly (3+1)-free digraph.
pub fn schur_coeffs_via_d_tableaux(d: &Digraph) -> Result<BTreeMap<IntegerPartition, u64>> {
    if !d.is_weakly_31_free()? {
        return Err(Error::Precondition("digraph is not weakly (3+1)-free".into()));
    }
    Ok(d_tableau_counts(d))
}

/// `Σ_H (Σ_S μ(π(S), V(H))) Ξ_{D∖H}` over induced subgraphs `H` on `i`
/// vertices and path covers `S` of `H`; equals `∂Ξ_D/∂p_i` for acyclic `D`.
pub fn derivative_formula(d: &Digraph, i: usize) -> Result<SymFunc> {
    if !d.is_acyclic() {
        return Err(Error::Precondition("the derivative formula needs an acyclic digraph".into()));
    }
    let n = d.d();
    let mut out = SymFunc::zero();
    if i == 0 || i > n {
        return Ok(out);
    }
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let inside: Vec<usize> = iter_bits(mask).collect();
        let outside: Vec<usize> = (0..n).filter(|v| mask & (1 << v) == 0).collect();
        let h = d.induced(&inside);
        let mut weight = BigInt::zero();
        for_each_cover(&h, |succ| {
            let paths = succ.len() - succ.iter().filter(|&&v| v != usize::MAX).count();
            weight += mobius_full(paths);
        });
        if weight.is_zero() {
            continue;
        }
        let rest = path_cycle_sym(&d.induced(&outside))?.restrict_y0();
        out = &out + &rest.scale(&Rational::from_integer(weight));
    }
    Ok(out)
}

/// Walk sums `α_{D,n}` and `α_{D',n}` for `n = 0..=n_max`, in commuting
/// indeterminates `a_1, …, a_d` truncated above degree `n_max`.
pub fn walk_series(d: &Digraph, n_max: u32) -> Result<(Vec<TruncatedMultiPoly>, Vec<TruncatedMultiPoly>)> {
    if d.d() > 4 || n_max > 6 {
        return Err(Error::TooLarge("walk series are limited to d <= 4 and N <= 6".into()));
    }
    Ok((walks(d, n_max), walks(&d.complement(), n_max)))
}

fn walks(d: &Digraph, n_max: u32) -> Vec<TruncatedMultiPoly> {
    let k = d.d();
    let a: Vec<TruncatedMultiPoly> = (0..k).map(|v| TruncatedMultiPoly::var(k, n_max, v)).collect();
    let mut out = vec![TruncatedMultiPoly::one(k, n_max)];
    let mut ending: Vec<TruncatedMultiPoly> = a.clone();
    for _ in 1..=n_max {
        out.push(ending.iter().fold(TruncatedMultiPoly::zero(k, n_max), |acc, w| &acc + w));
        ending = (0..k)
            .map(|w| {
                let into = (0..k)
                    .filter(|&v| d.has_edge(v, w))
                    .fold(TruncatedMultiPoly::zero(k, n_max), |acc, v| &acc + &ending[v]);
                &into * &a[w]
            })
            .collect();
    }
    out
}

/// The `s`-coefficients of `Ξ_D(x;0)` as exact rationals.
pub fn schur_coeffs_exact(d: &Digraph) -> Result<BTreeMap<IntegerPartition, Rational>> {
    path_cycle_sym(d)?.restrict_y0().convert(Basis::S)
}

/// `Ξ̃_{λ,μ}` for every pair with `|λ| + |μ| = d`.
pub fn all_lambda_mu(d: usize) -> Vec<(IntegerPartition, IntegerPartition)> {
    let mut out = Vec::new();
    for k in 0..=d {
        for lam in integer_partitions(k) {
            for mu in integer_partitions(d - k) {
                out.push((lam.clone(), mu));
            }
        }
    }
    out
}
