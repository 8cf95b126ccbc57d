//! The registered identity checks.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::oracles::{brute_force_truncated_xg, brute_force_truncated_xi, counts_to_rational, truncate_sym, truncate_sym2};
use super::{CheckDef, Checker, Ctx};
use crate::combinatorics::{
    binomial, factorial, integer_partitions, lambda_factorial, lattice_join, mask_to_subset, mobius_interval,
    set_partitions, subset_type, u_sequence, v_sequence, IntegerPartition, SetPartition,
};
use crate::error::Result;
use crate::invariants::*;
use crate::structures::digraph::{all_digraphs, all_loopless_digraphs};
use crate::structures::graph::{all_graphs, all_trees};
use crate::structures::poset::{natural_3_free_posets, natural_posets};
use crate::structures::tableaux::{d_tableau_counts, PDiagram};
use crate::structures::{
    iso_classes, path_cycle_covers, popping_classes, serialize_structure, Digraph, Graph, Poset, RootedTree, Structure,
};
use crate::symfunc::qsym::{q_complement_map, sym_to_q};
use crate::symfunc::{
    csv_series, rat, Basis, BivarPoly, QSymFunc, SymFunc, SymFunc2, TruncatedMultiPoly,
};
use crate::Rational;

pub(crate) const REGISTRY: &[CheckDef] = &[
    CheckDef { name: "mobius-recursion", group: "combinatorics", run: mobius_recursion },
    CheckDef { name: "mobius-product", group: "combinatorics", run: mobius_product },
    CheckDef { name: "subset-type-fibers", group: "combinatorics", run: subset_type_fibers },
    CheckDef { name: "u-v-sums", group: "combinatorics", run: u_v_sums },
    CheckDef { name: "lattice-join", group: "combinatorics", run: lattice_join_laws },
    CheckDef { name: "basis-round-trip", group: "symfunc", run: basis_round_trip },
    CheckDef { name: "omega-ring-map", group: "symfunc", run: omega_ring_map },
    CheckDef { name: "omega-m-tilde", group: "symfunc", run: omega_m_tilde },
    CheckDef { name: "f-expansions", group: "symfunc", run: f_expansions },
    CheckDef { name: "xi-tilde-triangular", group: "symfunc", run: xi_tilde_triangular },
    CheckDef { name: "quasisym-round-trip", group: "symfunc", run: quasisym_round_trip },
    CheckDef { name: "q-complement", group: "symfunc", run: q_complement },
    CheckDef { name: "delta-specialization", group: "symfunc", run: delta_specialization },
    CheckDef { name: "iota-conjugation", group: "symfunc", run: iota_conjugation },
    CheckDef { name: "csv", group: "symfunc", run: csv },
    CheckDef { name: "cover-size", group: "structures", run: cover_size },
    CheckDef { name: "path-covers-of-paths", group: "structures", run: path_covers_of_paths },
    CheckDef { name: "weakly-free-complement", group: "structures", run: weakly_free_complement },
    CheckDef { name: "poset-partitions", group: "structures", run: poset_partitions },
    CheckDef { name: "popping-tableaux", group: "structures", run: popping_tableaux },
    CheckDef { name: "poset-xi-equals-xg", group: "invariants", run: poset_xi_equals_xg },
    CheckDef { name: "specialization-cover-poly", group: "invariants", run: specialization_cover_poly },
    CheckDef { name: "rook-cover", group: "invariants", run: rook_cover },
    CheckDef { name: "multiplicativity", group: "invariants", run: multiplicativity },
    CheckDef { name: "main-reciprocity", group: "invariants", run: main_reciprocity },
    CheckDef { name: "first-form-reciprocity", group: "invariants", run: first_form_reciprocity },
    CheckDef { name: "xi-hat-reciprocity", group: "invariants", run: xi_hat_reciprocity },
    CheckDef { name: "cover-reciprocity", group: "invariants", run: cover_reciprocity },
    CheckDef { name: "one-variable-reciprocity", group: "invariants", run: one_variable_reciprocity },
    CheckDef { name: "rook-reciprocity", group: "invariants", run: rook_reciprocity },
    CheckDef { name: "inclusion-exclusion", group: "invariants", run: inclusion_exclusion },
    CheckDef { name: "polynomial-inclusion-exclusion", group: "invariants", run: polynomial_inclusion_exclusion },
    CheckDef { name: "xi-tilde-specialization", group: "invariants", run: xi_tilde_specialization },
    CheckDef { name: "xi-tilde-involution", group: "invariants", run: xi_tilde_involution },
    CheckDef { name: "xi-tilde-quasisym", group: "invariants", run: xi_tilde_quasisym },
    CheckDef { name: "xi-tilde-positivity", group: "invariants", run: xi_tilde_positivity },
    CheckDef { name: "p-positivity", group: "invariants", run: p_positivity },
    CheckDef { name: "t-geq", group: "invariants", run: t_geq_inversion },
    CheckDef { name: "derivative", group: "invariants", run: derivative },
    CheckDef { name: "delta-formula", group: "invariants", run: delta_formula_check },
    CheckDef { name: "closed-forms", group: "invariants", run: closed_forms },
    CheckDef { name: "quasisym-expansion", group: "invariants", run: quasisym_expansion_check },
    CheckDef { name: "g-ascent", group: "invariants", run: g_ascent },
    CheckDef { name: "d-tableaux", group: "invariants", run: d_tableaux },
    CheckDef { name: "p-tableaux", group: "invariants", run: p_tableaux },
    CheckDef { name: "popping-e-expansion", group: "invariants", run: popping_e_expansion },
    CheckDef { name: "xg-t", group: "invariants", run: xg_t_forms },
    CheckDef { name: "xg-t-forest", group: "invariants", run: xg_t_forest },
    CheckDef { name: "supercolor", group: "invariants", run: supercolor },
    CheckDef { name: "ppartition", group: "invariants", run: ppartition },
    CheckDef { name: "chi-tilde-positive", group: "invariants", run: chi_tilde_positive },
    CheckDef { name: "tree-recurrence", group: "invariants", run: tree_recurrence },
    CheckDef { name: "alpha-beta-count", group: "invariants", run: alpha_beta_counting },
    CheckDef { name: "oracle-xg", group: "oracles", run: oracle_xg },
    CheckDef { name: "oracle-xi", group: "oracles", run: oracle_xi },
];

// ---- instance families and rendering ----

fn show_d(d: &Digraph) -> String {
    serialize_structure(&Structure::Digraph(d.clone()))
}

fn show_g(g: &Graph) -> String {
    serialize_structure(&Structure::Graph(g.clone()))
}

fn show_p(p: &Poset) -> String {
    serialize_structure(&Structure::Poset(p.clone()))
}

/// All digraphs up to `min(max_vertices, cap)`, plus random samples one size up.
fn digraph_family(ctx: &mut Ctx, cap: usize, default_samples: usize) -> Vec<Digraph> {
    let mut out: Vec<Digraph> = (0..=ctx.upto(cap)).flat_map(all_digraphs).collect();
    for _ in 0..ctx.samples(cap, default_samples) {
        out.push(Digraph::random(cap + 1, &mut ctx.rng));
    }
    out
}

fn loopless_family(ctx: &Ctx, cap: usize) -> Vec<Digraph> {
    (0..=ctx.upto(cap)).flat_map(all_loopless_digraphs).collect()
}

fn acyclic_family(ctx: &Ctx, cap: usize) -> Vec<Digraph> {
    loopless_family(ctx, cap).into_iter().filter(Digraph::is_acyclic).collect()
}

fn graph_family(ctx: &Ctx, cap: usize) -> Vec<Graph> {
    (0..=ctx.upto(cap)).flat_map(all_graphs).collect()
}

fn poset_family(ctx: &Ctx, cap: usize) -> Vec<Poset> {
    (0..=ctx.upto(cap)).flat_map(natural_posets).collect()
}

fn partitions_upto(max: usize) -> Vec<IntegerPartition> {
    (0..=max).flat_map(integer_partitions).collect()
}

fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn sign_poly(d: usize) -> Rational {
    if d % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

fn ij(k: usize) -> BivarPoly {
    BivarPoly::var(["i", "j"], k)
}

fn ij_const(c: i64) -> BivarPoly {
    BivarPoly::constant(["i", "j"], rat(c))
}

/// Whether the parts of `nu` can be grouped so that the groups sum to the parts of `lam`.
fn partition_refines(nu: &IntegerPartition, lam: &IntegerPartition) -> bool {
    fn rec(parts: &[u32], bins: &mut Vec<u32>) -> bool {
        let Some((&first, rest)) = parts.split_first() else {
            return bins.iter().all(|&b| b == 0);
        };
        for k in 0..bins.len() {
            if bins[k] >= first && (k == 0 || bins[k] != bins[k - 1]) {
                bins[k] -= first;
                if rec(rest, bins) {
                    return true;
                }
                bins[k] += first;
            }
        }
        false
    }
    nu.weight() == lam.weight() && rec(nu.parts(), &mut lam.parts().to_vec())
}

fn random_sym(rng: &mut impl Rng, d: usize) -> SymFunc {
    let parts = integer_partitions(d);
    let mut terms = Vec::new();
    for lam in parts {
        if rng.gen_bool(0.6) {
            let num: i64 = rng.gen_range(-9..=9);
            let den: i64 = rng.gen_range(1..=5);
            terms.push((lam, Rational::new(num.into(), den.into())));
        }
    }
    SymFunc::from_p_terms(terms)
}

// ---- combinatorics ----

fn mobius_recursion(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 0..=ctx.upto(5) {
        let all = set_partitions(n);
        for pi in &all {
            for sigma in &all {
                if !pi.refines(sigma).unwrap_or(false) {
                    continue;
                }
                ck.eq(
                    || format!("{pi:?} <= {sigma:?}"),
                    || {
                        let mut s = BigInt::zero();
                        for tau in &all {
                            if pi.refines(tau)? && tau.refines(sigma)? {
                                s += mobius_interval(pi, tau)?;
                            }
                        }
                        Ok((BigInt::from(u8::from(pi == sigma)), s))
                    },
                );
            }
        }
    }
}

fn mobius_product(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 0..=ctx.upto(5) {
        let all = set_partitions(n);
        for pi in &all {
            for sigma in &all {
                if !pi.refines(sigma).unwrap_or(false) {
                    continue;
                }
                ck.eq(
                    || format!("{pi:?} <= {sigma:?}"),
                    || {
                        let expect = pi
                            .interval_counts(sigma)?
                            .into_iter()
                            .fold(BigInt::one(), |acc, k| acc * BigInt::from(factorial(k.saturating_sub(1))));
                        Ok((expect, mobius_interval(pi, sigma)?.abs()))
                    },
                );
            }
        }
    }
}

fn subset_type_fibers(ctx: &mut Ctx, ck: &mut Checker) {
    for d in 1..=ctx.degree_upto(6) {
        ck.eq(
            || format!("d = {d}"),
            || {
                let mut seen: BTreeMap<IntegerPartition, u64> = BTreeMap::new();
                for mask in 0u32..(1 << (d - 1)) {
                    *seen.entry(subset_type(&mask_to_subset(mask, d), d)?).or_default() += 1;
                }
                let expect: BTreeMap<IntegerPartition, u64> = integer_partitions(d)
                    .into_iter()
                    .map(|lam| {
                        let n = factorial(lam.len()) / lam.r_factorial();
                        (lam, n.to_u64().unwrap())
                    })
                    .collect();
                Ok((expect, seen))
            },
        );
    }
}

fn u_v_sums(ctx: &mut Ctx, ck: &mut Checker) {
    for k in 1..=ctx.degree_upto(6) + 1 {
        ck.eq(
            || format!("k = {k}"),
            || {
                let u: num::BigUint = (0..k).map(|r| u_sequence(r) * binomial(k - 1, r)).sum();
                let v: num::BigUint = (0..k).map(|r| v_sequence(r) * binomial(k - 1, r)).sum();
                Ok((vec![factorial(k), factorial(k - 1)], vec![u, v]))
            },
        );
    }
}

fn lattice_join_laws(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 0..=ctx.upto(4) {
        let all = set_partitions(n);
        for a in &all {
            for b in &all {
                ck.holds(
                    || format!("{a:?} v {b:?}"),
                    || {
                        let ab = lattice_join(a, b)?;
                        Ok(ab == lattice_join(b, a)?
                            && lattice_join(a, a)? == *a
                            && a.refines(&ab)?
                            && b.refines(&ab)?
                            && (n > 3
                                || all.iter().try_fold(true, |ok, c| {
                                    Ok::<_, crate::Error>(
                                        ok && lattice_join(&ab, c)? == lattice_join(a, &lattice_join(b, c)?)?,
                                    )
                                })?))
                    },
                );
            }
        }
    }
}

// ---- symfunc ----

fn count(ctx: &Ctx, default: usize) -> usize {
    *ctx.config.sample_counts.get(ctx.name).unwrap_or(&default)
}

fn basis_round_trip(ctx: &mut Ctx, ck: &mut Checker) {
    let max = ctx.degree_upto(6);
    for _ in 0..count(ctx, 200) {
        let d = ctx.rng.gen_range(0..=max);
        let g = random_sym(&mut ctx.rng, d);
        ck.holds(
            || g.to_string(),
            || {
                for b in Basis::ALL {
                    if SymFunc::from_basis(b, &g.convert(b)?)? != g {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        );
    }
}

fn omega_ring_map(ctx: &mut Ctx, ck: &mut Checker) {
    let max = ctx.degree_upto(5);
    for _ in 0..count(ctx, 50) {
        let d1 = ctx.rng.gen_range(0..=max);
        let d2 = ctx.rng.gen_range(0..=max - d1.min(max));
        let f = random_sym(&mut ctx.rng, d1);
        let g = random_sym(&mut ctx.rng, d2);
        ck.holds(
            || format!("f = {f}; g = {g}"),
            || Ok(f.omega().omega() == f && (&f * &g).omega() == &f.omega() * &g.omega()),
        );
    }
}

fn omega_m_tilde(ctx: &mut Ctx, ck: &mut Checker) {
    for lam in partitions_upto(ctx.degree_upto(6)) {
        ck.eq(
            || format!("{lam:?}"),
            || Ok((SymFunc::f(lam.clone())?.scale(&rat(lam.sgn() as i64)), SymFunc::m_tilde(lam.clone())?.omega())),
        );
    }
}

fn f_expansions(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 0..=ctx.upto(5) {
        let all = set_partitions(n);
        for pi in &all {
            ck.holds(
                || format!("{pi:?}"),
                || {
                    let f = SymFunc::f(pi.block_type())?;
                    let mut via_m = SymFunc::zero();
                    let mut via_p = SymFunc::zero();
                    for sigma in &all {
                        if !pi.refines(sigma)? {
                            continue;
                        }
                        let lf = big(lambda_factorial(pi, sigma)?);
                        via_m = &via_m + &SymFunc::m_tilde(sigma.block_type())?.scale(&lf);
                        let mu = big(mobius_interval(pi, sigma)?.abs());
                        via_p = &via_p + &SymFunc::p(sigma.block_type()).scale(&mu);
                    }
                    Ok(f == via_m && f == via_p)
                },
            );
        }
    }
}

fn xi_tilde_triangular(ctx: &mut Ctx, ck: &mut Checker) {
    for lam in partitions_upto(ctx.degree_upto(6)) {
        ck.holds(
            || format!("{lam:?}"),
            || {
                let row = crate::symfunc::tables::xi_tilde_in_mtilde(&lam);
                let diagonal = row.get(&lam).is_some_and(|c| !c.is_zero());
                Ok(diagonal && row.keys().all(|nu| partition_refines(nu, &lam)))
            },
        );
    }
}

fn quasisym_round_trip(ctx: &mut Ctx, ck: &mut Checker) {
    for lam in partitions_upto(ctx.degree_upto(6)) {
        let d = lam.weight();
        if d == 0 {
            continue;
        }
        for g in [SymFunc::s(lam.clone()), SymFunc::m(lam.clone())] {
            ck.holds(
                || format!("{lam:?}"),
                || {
                    let g = g?;
                    let direct = QSymFunc::from_sym(&g, d)?.to_sym()?;
                    let via_fundamental = QSymFunc::from_fundamental(d, &sym_to_q(&g, d)?)?.to_sym()?;
                    Ok(direct == g && via_fundamental == g)
                },
            );
        }
    }
}

fn q_complement(ctx: &mut Ctx, ck: &mut Checker) {
    for lam in partitions_upto(ctx.degree_upto(6)) {
        let d = lam.weight();
        if d == 0 {
            continue;
        }
        ck.eq(
            || format!("m{lam:?}"),
            || {
                let g = SymFunc::m(lam.clone())?;
                Ok((g.omega(), q_complement_map(&g, d)?))
            },
        );
    }
}

fn delta_specialization(ctx: &mut Ctx, ck: &mut Checker) {
    for lam in partitions_upto(ctx.degree_upto(6)) {
        ck.eq(
            || format!("m~{lam:?}"),
            || {
                let g = SymFunc::m_tilde(lam.clone())?;
                let expect = g.specialize_ones().substitute(&(&ij(0) + &ij(1)), &ij(1))?;
                Ok((expect, SymFunc2::from_x(&g).delta_xy().specialize2()))
            },
        );
    }
}

fn iota_conjugation(ctx: &mut Ctx, ck: &mut Checker) {
    let max = ctx.degree_upto(6);
    for total in 0..=max {
        for k in 0..=total {
            for lam in integer_partitions(k) {
                for mu in integer_partitions(total - k) {
                    let g = SymFunc2::pp(lam.clone(), mu);
                    ck.holds(
                        || g.to_string(),
                        || Ok(g.iota().iota() == g && g.iota().xi_hat() == g.xi_hat().negate_y().omega_x()),
                    );
                }
            }
        }
    }
}

fn csv(ctx: &mut Ctx, ck: &mut Checker) {
    const N: u32 = 5;
    for d in (1..=ctx.upto(3)).flat_map(all_digraphs) {
        ck.holds(
            || show_d(&d),
            || {
                let (alpha, alpha_c) = walk_series(&d, N)?;
                let k = d.d();
                let mut signed = TruncatedMultiPoly::zero(k, N);
                let mut plain = TruncatedMultiPoly::zero(k, N);
                for (n, (a, ac)) in alpha.iter().zip(&alpha_c).enumerate() {
                    plain = &plain + a;
                    signed = &signed + &ac.scale(&sign_poly(n));
                }
                Ok((&signed * &plain).is_one() && csv_series(&alpha, N)? == signed)
            },
        );
    }
}

// ---- structures ----

fn cover_size(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 0) {
        ck.holds(
            || show_d(&d),
            || Ok(path_cycle_covers(&d).iter().all(|c| c.edges.len() == d.d() - c.paths.len())),
        );
    }
}

fn path_covers_of_paths(ctx: &mut Ctx, ck: &mut Checker) {
    for lam in partitions_upto(ctx.upto(5)) {
        let d = crate::structures::build_d_lambda_mu(&lam, &IntegerPartition::empty());
        ck.holds(
            || format!("{lam:?}"),
            || {
                let covers = path_cycle_covers(&d);
                Ok(covers.len() == 1 << d.num_edges() && covers.iter().all(|c| c.cycles.is_empty()))
            },
        );
    }
}

fn weakly_free_complement(ctx: &mut Ctx, ck: &mut Checker) {
    for d in loopless_family(ctx, 4) {
        ck.eq(
            || show_d(&d),
            || Ok((d.is_weakly_31_free()?, d.loopless_complement().is_weakly_31_free()?)),
        );
    }
}

fn poset_partitions(ctx: &mut Ctx, ck: &mut Checker) {
    for p in poset_family(ctx, 5) {
        ck.holds(
            || show_p(&p),
            || {
                let n = p.n();
                let stable: BTreeSet<Vec<usize>> =
                    p.incomparability_graph().stable_partitions().iter().map(SetPartition::labels).collect();
                let chains: BTreeSet<Vec<usize>> = set_partitions(n)
                    .iter()
                    .filter(|s| s.blocks().iter().all(|b| b.iter().all(|&u| b.iter().all(|&v| u == v || p.comparable(u, v)))))
                    .map(SetPartition::labels)
                    .collect();
                let covers: BTreeSet<Vec<usize>> =
                    path_cycle_covers(&p.digraph()).iter().map(|c| c.components(n).labels()).collect();
                Ok(stable == chains && chains == covers)
            },
        );
    }
}

fn popping_tableaux(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 0..=ctx.upto(6) {
        for p in natural_3_free_posets(n) {
            ck.holds(
                || show_p(&p),
                || {
                    for class in popping_classes(&p)? {
                        let members: Vec<PDiagram> =
                            class.tableaux.iter().map(PDiagram::from_tableau).collect::<Result<_>>()?;
                        let top = members.iter().max_by_key(|t| t.right.len()).unwrap().clone();
                        let mut cur = top;
                        while let Some(next) = cur.pop() {
                            if !next.is_p_tableau(&p) || !members.contains(&next) {
                                return Ok(false);
                            }
                            cur = next;
                        }
                    }
                    Ok(true)
                },
            );
        }
    }
}

// ---- invariants ----

fn poset_xi_equals_xg(ctx: &mut Ctx, ck: &mut Checker) {
    for p in poset_family(ctx, 5) {
        ck.eq(
            || show_p(&p),
            || Ok((SymFunc2::from_x(&chromatic_sym(&p.incomparability_graph())?), path_cycle_sym(&p.digraph())?)),
        );
    }
}

fn specialization_cover_poly(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 50) {
        ck.eq(|| show_d(&d), || Ok((cover_poly(&d)?, path_cycle_sym(&d)?.specialize2())));
    }
}

fn at_j_one(p: &BivarPoly) -> Result<BivarPoly> {
    p.substitute(&ij(0), &ij_const(1))
}

fn rook_cover(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 50) {
        ck.holds(
            || show_d(&d),
            || {
                let r = factorial_poly(&d);
                Ok(r == at_j_one(&cover_poly(&d)?)? && r == at_j_one(&path_cycle_sym(&d)?.specialize2())?)
            },
        );
    }
}

fn multiplicativity(ctx: &mut Ctx, ck: &mut Checker) {
    let max = ctx.upto(5);
    if max < 2 {
        return;
    }
    // Ξ is an isomorphism invariant and relabelling a factor relabels the
    // join, so one representative per class of each factor covers all pairs
    let mut factors: Vec<Vec<(Digraph, SymFunc2)>> = vec![Vec::new()];
    for d in 1..max {
        let all: Vec<Digraph> = all_digraphs(d).collect();
        let reps = iso_classes(&all).unwrap_or(all);
        factors.push(reps.into_iter().filter_map(|g| Some((g.clone(), path_cycle_sym(&g).ok()?))).collect());
    }
    for d1 in 1..max {
        for d2 in 1..=max - d1 {
            for (a, xa) in &factors[d1] {
                for (b, xb) in &factors[d2] {
                    ck.eq(
                        || format!("{}---\n{}", show_d(a), show_d(b)),
                        || Ok((xa * xb, path_cycle_sym(&a.ordinal_join(b)?)?)),
                    );
                }
            }
        }
    }
}

fn main_reciprocity(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 50) {
        ck.eq(|| show_d(&d), || Ok((path_cycle_sym(&d)?, path_cycle_sym(&d.complement())?.iota())));
    }
}

fn first_form_reciprocity(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 50) {
        ck.eq(|| show_d(&d), || Ok((path_cycle_sym(&d)?, path_cycle_sym_via_complement(&d)?)));
    }
}

fn xi_hat_reciprocity(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 50) {
        ck.eq(
            || show_d(&d),
            || {
                let hat = path_cycle_sym(&d)?.xi_hat();
                Ok((hat.negate_y().omega_x(), path_cycle_sym(&d.complement())?.xi_hat()))
            },
        );
    }
}

fn cover_reciprocity(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 50) {
        ck.eq(
            || show_d(&d),
            || {
                let minus = &(&ij_const(0) - &ij(0)) - &ij(1);
                let rhs = cover_poly(&d)?.substitute(&minus, &ij(1))?.scale(&sign_poly(d.d()));
                Ok((cover_poly(&d.complement())?, rhs))
            },
        );
    }
}

fn one_variable_reciprocity(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 50) {
        ck.eq(
            || show_d(&d),
            || Ok((path_cycle_sym(&d)?.restrict_y0(), path_cycle_sym(&d.complement())?.restrict_y0().omega())),
        );
    }
}

fn rook_reciprocity(ctx: &mut Ctx, ck: &mut Checker) {
    for b in digraph_family(ctx, 3, 50) {
        ck.eq(
            || show_d(&b),
            || {
                let minus = &(&ij_const(0) - &ij(0)) - &ij_const(1);
                let rhs = factorial_poly(&b).substitute(&minus, &ij(1))?.scale(&sign_poly(b.d()));
                Ok((factorial_poly(&b.complement()), rhs))
            },
        );
    }
}

fn inclusion_exclusion(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 25) {
        ck.eq(
            || show_d(&d),
            || {
                let mut sum = SymFunc2::zero();
                for ((lam, mu), n) in n_statistics(&d)?.by_type {
                    sum = &sum + &xi_tilde(&lam, &mu)?.scale(&big(n));
                }
                Ok((path_cycle_sym(&d)?, sum))
            },
        );
    }
}

fn polynomial_inclusion_exclusion(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 25) {
        ck.eq(|| show_d(&d), || Ok((factorial_poly(&d), factorial_poly_via_n(&d)?)));
    }
}

fn xi_tilde_specialization(ctx: &mut Ctx, ck: &mut Checker) {
    for total in 0..=ctx.degree_upto(6) {
        for (lam, mu) in all_lambda_mu(total) {
            ck.eq(
                || format!("{lam:?} {mu:?}"),
                || {
                    let shift = ij_const((total - lam.len()) as i64);
                    let expect = (&ij(0) + &shift).binomial(total as u32);
                    Ok((expect, at_j_one(&xi_tilde(&lam, &mu)?.specialize2())?))
                },
            );
        }
    }
}

/// `Ξ̃_λ ↦ (sgn λ) m̃_λ / ℓ(λ)!`, extended linearly.
fn xi_tilde_map(g: &SymFunc) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    for (lam, c) in g.convert(Basis::XiTilde)? {
        let scale = c * rat(lam.sgn() as i64) / big(factorial(lam.len()));
        out = &out + &SymFunc::m_tilde(lam)?.scale(&scale);
    }
    Ok(out)
}

fn xi_tilde_involution(ctx: &mut Ctx, ck: &mut Checker) {
    for lam in partitions_upto(ctx.degree_upto(6)) {
        ck.eq(
            || format!("{lam:?}"),
            || {
                let x = SymFunc::xi_tilde(lam.clone())?;
                Ok((x.clone(), xi_tilde_map(&xi_tilde_map(&x)?)?))
            },
        );
    }
}

fn quasisym_instances(ctx: &Ctx) -> Vec<(String, SymFunc)> {
    let mut out = Vec::new();
    for lam in partitions_upto(ctx.degree_upto(6)) {
        if lam.weight() > 0 {
            if let Ok(s) = SymFunc::s(lam.clone()) {
                out.push((format!("s{lam:?}"), s));
            }
        }
    }
    for g in graph_family(ctx, 4) {
        if g.n() > 0 {
            if let Ok(x) = chromatic_sym(&g) {
                out.push((show_g(&g), x));
            }
        }
    }
    out
}

fn xi_tilde_quasisym(ctx: &mut Ctx, ck: &mut Checker) {
    for (name, g) in quasisym_instances(ctx) {
        ck.eq(
            || name.clone(),
            || {
                let d = g.degrees()[0];
                let mut by_type: BTreeMap<IntegerPartition, Rational> = BTreeMap::new();
                for (mask, b) in sym_to_q(&g, d)? {
                    *by_type.entry(mask_type(mask, d)).or_default() += b;
                }
                by_type.retain(|_, c| !c.is_zero());
                Ok((g.convert(Basis::XiTilde)?, by_type))
            },
        );
    }
}

fn xi_tilde_positivity(ctx: &mut Ctx, ck: &mut Checker) {
    for (name, g) in quasisym_instances(ctx) {
        ck.holds(|| name.clone(), || g.is_positive_in(Basis::XiTilde));
    }
}

fn p_positivity(ctx: &mut Ctx, ck: &mut Checker) {
    for d in acyclic_family(ctx, 4) {
        ck.holds(
            || show_d(&d),
            || Ok(path_cycle_sym(&d)?.omega_x().terms().values().all(|c| !c.is_negative())),
        );
    }
}

fn t_geq_inversion(ctx: &mut Ctx, ck: &mut Checker) {
    for d in acyclic_family(ctx, 3) {
        ck.holds(
            || show_d(&d),
            || {
                let zero = SetPartition::discrete(d.d());
                let mut sum = SymFunc::zero();
                for pi in set_partitions(d.d()) {
                    let t = t_geq(&d, &pi)?;
                    if t.terms().values().any(|c| c.is_negative()) {
                        return Ok(false);
                    }
                    sum = &sum + &t.scale(&big(mobius_interval(&zero, &pi)?));
                }
                Ok(sum == path_cycle_sym(&d)?.restrict_y0())
            },
        );
    }
}

fn derivative(ctx: &mut Ctx, ck: &mut Checker) {
    for d in acyclic_family(ctx, 3) {
        for i in 1..=d.d() {
            ck.eq(
                || format!("{}i = {i}", show_d(&d)),
                || Ok((path_cycle_sym(&d)?.restrict_y0().p_partial_derivative(i as u32), derivative_formula(&d, i)?)),
            );
        }
    }
}

fn delta_formula_check(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 0) {
        ck.eq(|| show_d(&d), || Ok((cover_poly(&d)?, delta_formula(&delta_statistics(&d)?, d.d()))));
    }
}

fn closed_forms(ctx: &mut Ctx, ck: &mut Checker) {
    for d in 1..=ctx.degree_upto(6) {
        ck.holds(
            || format!("P_{d} and C_{d}"),
            || {
                let mut path_m = SymFunc::zero();
                let mut cycle_m = SymFunc::zero();
                for lam in integer_partitions(d) {
                    let m = SymFunc::m(lam.clone())?;
                    path_m = &path_m + &m.scale(&big(factorial(lam.len())));
                    cycle_m = &cycle_m + &m.scale(&big(factorial(lam.len() - 1) * d));
                }
                let mut path_s = SymFunc::zero();
                let mut cycle_s = SymFunc::zero();
                for r in 0..d {
                    let s = SymFunc::s(IntegerPartition::hook(d as u32, r as u32))?;
                    path_s = &path_s + &s.scale(&big(u_sequence(r)));
                    cycle_s = &cycle_s + &s.scale(&big(v_sequence(r) * d));
                }
                let pd = SymFunc2::pp(IntegerPartition::empty(), IntegerPartition::from_parts([d as u32]));
                let xp = path_cycle_sym(&Digraph::path(d))?;
                let xc = path_cycle_sym(&Digraph::cycle(d))?;
                Ok(xp == SymFunc2::from_x(&path_m)
                    && xp == SymFunc2::from_x(&path_s)
                    && xc == &SymFunc2::from_x(&cycle_m) + &pd
                    && xc == &SymFunc2::from_x(&cycle_s) + &pd)
            },
        );
    }
}

fn quasisym_expansion_check(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 0) {
        ck.eq(
            || show_d(&d),
            || Ok((path_cycle_sym(&d)?.restrict_y0(), quasisym_reassemble(&quasisym_expansion(&d), d.d())?)),
        );
    }
}

fn g_ascent(ctx: &mut Ctx, ck: &mut Checker) {
    for g in graph_family(ctx, 5) {
        ck.eq(|| show_g(&g), || Ok((chromatic_sym(&g)?, xi_tilde_combination(&g_ascent_counts(&g))?)));
    }
}

fn d_tableaux(ctx: &mut Ctx, ck: &mut Checker) {
    for d in loopless_family(ctx, 4) {
        if !d.is_weakly_31_free().unwrap_or(false) {
            continue;
        }
        ck.eq(
            || show_d(&d),
            || {
                let mut exact = schur_coeffs_exact(&d)?;
                exact.retain(|_, c| !c.is_zero());
                Ok((exact, counts_to_rational(&d_tableau_counts(&d))))
            },
        );
    }
}

fn p_tableaux(ctx: &mut Ctx, ck: &mut Checker) {
    for p in poset_family(ctx, 5) {
        if !p.is_31_free() {
            continue;
        }
        ck.eq(
            || show_p(&p),
            || {
                let mut exact = chromatic_sym(&p.incomparability_graph())?.convert(Basis::S)?;
                exact.retain(|_, c| !c.is_zero());
                Ok((exact, counts_to_rational(&schur_coeffs_via_p_tableaux(&p)?)))
            },
        );
    }
}

fn popping_e_expansion(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 0..=ctx.upto(6) {
        for p in natural_3_free_posets(n) {
            ck.eq(
                || show_p(&p),
                || {
                    let mut sum = SymFunc::zero();
                    for class in popping_classes(&p)? {
                        sum = &sum + &SymFunc::e(class.lambda)?;
                    }
                    Ok((chromatic_sym(&p.incomparability_graph())?, sum))
                },
            );
        }
    }
}

fn xg_t_forms(ctx: &mut Ctx, ck: &mut Checker) {
    for g in graph_family(ctx, 4) {
        ck.holds(
            || show_g(&g),
            || {
                let t = xg_t_edges(&g)?;
                Ok(t == xg_t_mobius(&g)? && t.evaluate(&rat(-1)) == chromatic_sym(&g)?)
            },
        );
    }
}

fn xg_t_forest(ctx: &mut Ctx, ck: &mut Checker) {
    for g in graph_family(ctx, 6) {
        if !g.is_forest() {
            continue;
        }
        ck.holds(
            || show_g(&g),
            || {
                let t = xg_t_edges(&g)?;
                Ok(t.by_partition().iter().all(|(lam, powers)| {
                    powers.len() == 1 && powers.keys().next() == Some(&((g.n() - lam.len()) as u32))
                }))
            },
        );
    }
}

fn supercolor(ctx: &mut Ctx, ck: &mut Checker) {
    for g in graph_family(ctx, 4) {
        for i in 0..=3 {
            for j in 0..=3 {
                ck.eq(
                    || format!("{}i = {i}, j = {j}", show_g(&g)),
                    || Ok((superfied_value(&g, i, j)?, big(supercolor_count(&g, i, j)?))),
                );
            }
        }
    }
}

fn ppartition(ctx: &mut Ctx, ck: &mut Checker) {
    for g in graph_family(ctx, 4) {
        for i in 0..=3 {
            for j in 0..=3 {
                ck.eq(
                    || format!("{}i = {i}, j = {j}", show_g(&g)),
                    || Ok((big(supercolor_count(&g, i, j)?), ppartition_formula(&g, i, j)?)),
                );
            }
        }
    }
}

fn chi_tilde_positive(ctx: &mut Ctx, ck: &mut Checker) {
    for g in graph_family(ctx, 5) {
        ck.holds(|| show_g(&g), || Ok(chi_tilde(&g)?.is_nonnegative()));
    }
}

fn tree_recurrence(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 1..=ctx.upto(6) {
        for g in all_trees(n) {
            ck.holds(
                || show_g(&g),
                || {
                    let chi = chi_tilde(&g)?;
                    for root in 0..n {
                        let t = RootedTree::new(g.clone(), root)?;
                        let ab = alpha_beta(&t);
                        let deg_ok = ab.alpha.total_degree() == Some(n as u32);
                        if !deg_ok || !is_related_pair(&ab.alpha, &ab.beta) || chi_tilde_tree(&t)? != chi {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                },
            );
        }
    }
}

fn alpha_beta_counting(ctx: &mut Ctx, ck: &mut Checker) {
    for n in 1..=ctx.upto(4) {
        for g in all_trees(n) {
            let t = match RootedTree::new(g.clone(), 0) {
                Ok(t) => t,
                Err(_) => continue,
            };
            for i in 1..=2u32 {
                for j in 1..=2u32 {
                    ck.eq(
                        || format!("{}i = {i}, j = {j}", show_g(&g)),
                        || {
                            let ab = alpha_beta(&t);
                            let (m, nn) = (rat((i + j) as i64), rat(j as i64 - i as i64));
                            let (a, b) = alpha_beta_count(&t, i, j)?;
                            Ok((vec![ab.alpha.evaluate(&m, &nn), ab.beta.evaluate(&m, &nn)], vec![big(a), big(b)]))
                        },
                    );
                }
            }
        }
    }
}

// ---- oracles ----

fn oracle_xg(ctx: &mut Ctx, ck: &mut Checker) {
    for g in graph_family(ctx, 4) {
        for k in 1..=4 {
            ck.eq(
                || format!("{}k = {k}", show_g(&g)),
                || {
                    let brute = counts_to_rational(&brute_force_truncated_xg(&g, k)?);
                    Ok((brute, truncate_sym(&chromatic_sym(&g)?, k)?))
                },
            );
        }
    }
}

fn oracle_xi(ctx: &mut Ctx, ck: &mut Checker) {
    for d in digraph_family(ctx, 3, 0) {
        for k in 1..=3 {
            ck.eq(
                || format!("{}k = {k}", show_d(&d)),
                || {
                    let brute = counts_to_rational(&brute_force_truncated_xi(&d, k)?);
                    Ok((brute, truncate_sym2(&path_cycle_sym(&d)?, k)?))
                },
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn refinement_of_integer_partitions() {
        assert!(partition_refines(&ip(&[2, 1, 1]), &ip(&[3, 1])));
        assert!(partition_refines(&ip(&[2, 2]), &ip(&[4])));
        assert!(!partition_refines(&ip(&[2, 2]), &ip(&[3, 1])));
        assert!(!partition_refines(&ip(&[3, 1]), &ip(&[2, 2])));
        assert!(partition_refines(&IntegerPartition::empty(), &IntegerPartition::empty()));
    }
}
