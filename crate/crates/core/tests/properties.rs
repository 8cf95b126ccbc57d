//! Randomized properties over digraphs, graphs and posets.

use proptest::prelude::*;

use pathcycle::combinatorics::permutations;
use pathcycle::invariants::{
    chi_tilde, chromatic_sym, chromatic_sym_edges, cover_poly, factorial_poly, g_ascent_counts, path_cycle_sym,
    path_cycle_sym_via_complement, superfied_value, supercolor_count, xi_tilde_combination,
};
use pathcycle::structures::{parse_structure, serialize_structure, Digraph, Graph, Poset, Structure};
use pathcycle::symfunc::{BivarPoly, SymFunc2};
use pathcycle::Rational;

fn arb_digraph(max: usize) -> impl Strategy<Value = Digraph> {
    (1..=max).prop_flat_map(|d| {
        proptest::collection::vec(0u64..(1 << d), d).prop_map(|rows| Digraph::from_rows(rows).unwrap())
    })
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Posets on `[n]` whose relations respect the natural order.
fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
    arb_graph(max).prop_map(|g| {
        let rel: Vec<_> = g.edges().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Poset::from_relations(g.n(), &rel).unwrap()
    })
}

fn arb_relabelling(d: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..d).collect::<Vec<_>>()).prop_shuffle()
}

fn ij(k: usize) -> BivarPoly {
    BivarPoly::var(["i", "j"], k)
}

fn sign(d: usize) -> Rational {
    Rational::from_integer(if d % 2 == 0 { 1.into() } else { (-1).into() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reciprocity_and_its_first_form(d in arb_digraph(4)) {
        let x = path_cycle_sym(&d).unwrap();
        prop_assert_eq!(&x, &path_cycle_sym(&d.complement()).unwrap().iota());
        prop_assert_eq!(&x, &path_cycle_sym_via_complement(&d).unwrap());
    }

    #[test]
    fn cover_polynomial_is_a_specialization(d in arb_digraph(4)) {
        let c = cover_poly(&d).unwrap();
        prop_assert_eq!(&c, &path_cycle_sym(&d).unwrap().specialize2());
        let zero = BivarPoly::zero(["i", "j"]);
        let minus = &(&zero - &ij(0)) - &ij(1);
        let reflected = c.substitute(&minus, &ij(1)).unwrap().scale(&sign(d.d()));
        prop_assert_eq!(cover_poly(&d.complement()).unwrap(), reflected);
        let one = BivarPoly::constant(["i", "j"], Rational::from_integer(1.into()));
        prop_assert_eq!(factorial_poly(&d), c.substitute(&ij(0), &one).unwrap());
    }

    #[test]
    fn xi_is_an_isomorphism_invariant(
        (d, perm) in arb_digraph(4).prop_flat_map(|d| { let n = d.d(); (Just(d), arb_relabelling(n)) })
    ) {
        prop_assert_eq!(path_cycle_sym(&d).unwrap(), path_cycle_sym(&d.relabel(&perm)).unwrap());
    }

    #[test]
    fn ordinal_join_is_multiplicative(a in arb_digraph(2), b in arb_digraph(3)) {
        let joined = path_cycle_sym(&a.ordinal_join(&b).unwrap()).unwrap();
        prop_assert_eq!(&path_cycle_sym(&a).unwrap() * &path_cycle_sym(&b).unwrap(), joined);
    }

    #[test]
    fn complement_is_an_involution(d in arb_digraph(5)) {
        prop_assert_eq!(d.complement().complement(), d);
    }

    #[test]
    fn structure_text_round_trips(d in arb_digraph(5), g in arb_graph(5), p in arb_poset(5)) {
        for s in [Structure::Digraph(d), Structure::Graph(g), Structure::Poset(p)] {
            prop_assert_eq!(parse_structure(&serialize_structure(&s)).unwrap(), s);
        }
    }

    #[test]
    fn chromatic_forms_agree(g in arb_graph(5)) {
        let x = chromatic_sym(&g).unwrap();
        prop_assert_eq!(&x, &chromatic_sym_edges(&g).unwrap());
        prop_assert_eq!(&x, &xi_tilde_combination(&g_ascent_counts(&g)).unwrap());
        let total: u64 = g_ascent_counts(&g).values().sum();
        prop_assert_eq!(total, permutations(g.n()).len() as u64);
    }

    #[test]
    fn superfication_counts_supercolourings(g in arb_graph(4), i in 0u32..3, j in 0u32..3) {
        let count = supercolor_count(&g, i, j).unwrap();
        prop_assert_eq!(superfied_value(&g, i, j).unwrap(), Rational::from_integer(count.into()));
        let chi = chi_tilde(&g).unwrap();
        prop_assert!(chi.is_integral() && chi.is_nonnegative());
    }

    #[test]
    fn poset_digraph_matches_incomparability_graph(p in arb_poset(5)) {
        let x = chromatic_sym(&p.incomparability_graph()).unwrap();
        prop_assert_eq!(SymFunc2::from_x(&x), path_cycle_sym(&p.digraph()).unwrap());
    }
}
