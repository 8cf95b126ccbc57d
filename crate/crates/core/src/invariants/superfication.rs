//! Superfied chromatic invariants: `X_G(1^i/1^j)`, `χ̃_G(m, n)` and the
//! α/β recurrence for rooted trees.

use num::{Signed, Zero};

use super::chromatic::chromatic_sym;
use super::AlphaBeta;
use crate::combinatorics::{binomial, for_each_permutation};
use crate::error::{Error, Result};
use crate::structures::{Digraph, Graph, RootedTree};
use crate::symfunc::{rat, superficiate, BivarPoly};
use crate::Rational;

const MN: [&str; 2] = ["m", "n"];

/// `(α_T, β_T)` from the recurrence over the root-deleted subtrees.
pub fn alpha_beta(t: &RootedTree) -> AlphaBeta {
    let (a, b) = products(t);
    let m = BivarPoly::var(MN, 0);
    let n = BivarPoly::var(MN, 1);
    let c = |k: i64| BivarPoly::constant(MN, rat(k));
    let half = Rational::new(1.into(), 2.into());
    let alpha = &(&(&(&m - &n) - &c(2)) * &a) + &(&(&m + &n) * &b);
    let beta = &(&(&(&m + &n) + &c(2)) * &b) + &(&(&m - &n) * &a);
    AlphaBeta { alpha: alpha.scale(&half), beta: beta.scale(&half) }
}

/// `∏ α_S` and `∏ β_S` over the root-deleted subtrees.
fn products(t: &RootedTree) -> (BivarPoly, BivarPoly) {
    let mut a = BivarPoly::constant(MN, rat(1));
    let mut b = BivarPoly::constant(MN, rat(1));
    for s in t.root_deleted_subtrees() {
        let ab = alpha_beta(&s);
        a = &a * &ab.alpha;
        b = &b * &ab.beta;
    }
    (a, b)
}

/// `χ̃_T = ((n+m) β_T + (n-m) α_T) / (2(n+1))`.
pub fn chi_tilde_tree(t: &RootedTree) -> Result<BivarPoly> {
    let AlphaBeta { alpha, beta } = alpha_beta(t);
    let m = BivarPoly::var(MN, 0);
    let n = BivarPoly::var(MN, 1);
    let num = &(&(&n + &m) * &beta) + &(&(&n - &m) * &alpha);
    Ok(num.div_linear(1, &rat(1))?.scale(&Rational::new(1.into(), 2.into())))
}

/// `χ̃_T` by colouring the root: `((m-n)/2) ∏ α_S + ((m+n)/2) ∏ β_S`.
pub fn chi_tilde_tree_direct(t: &RootedTree) -> BivarPoly {
    let (a, b) = products(t);
    let m = BivarPoly::var(MN, 0);
    let n = BivarPoly::var(MN, 1);
    let half = Rational::new(1.into(), 2.into());
    (&(&(&m - &n) * &a) + &(&(&m + &n) * &b)).scale(&half)
}

/// `X_G(1^i/1^j)` as a polynomial in `(i, j)`.
pub fn superfied_poly(g: &Graph) -> Result<BivarPoly> {
    Ok(superficiate(&chromatic_sym(g)?).specialize2())
}

/// `X_G(1^i/1^j)` at a point.
pub fn superfied_value(g: &Graph, i: u32, j: u32) -> Result<Rational> {
    Ok(superfied_poly(g)?.evaluate(&rat(i as i64), &rat(j as i64)))
}

/// `χ̃_G(m, n) = X_G(1^{(m-n)/2} / 1^{(m+n)/2})`, checked to have integer coefficients.
pub fn chi_tilde(g: &Graph) -> Result<BivarPoly> {
    let m = BivarPoly::var(MN, 0);
    let n = BivarPoly::var(MN, 1);
    let half = Rational::new(1.into(), 2.into());
    let i = (&m - &n).scale(&half);
    let j = (&m + &n).scale(&half);
    let out = superfied_poly(g)?.substitute(&i, &j)?;
    if !out.is_integral() {
        return Err(Error::Consistency(format!("chi-tilde of {g:?} has a non-integer coefficient")));
    }
    Ok(out)
}

/// Whether `g2` is `g1` with every sign made positive and each nonzero term
/// `m^r n^s` of `g1` has sign `(-1)^{d-r}`, `d` the degree of `g1`.
pub fn is_related_pair(g1: &BivarPoly, g2: &BivarPoly) -> bool {
    let Some(d) = g1.total_degree() else {
        return g2.is_zero();
    };
    let signs_ok = g1.terms().iter().all(|(&(r, _), c)| c.is_positive() == ((d - r) % 2 == 0));
    let abs: Vec<_> = g1.terms().iter().map(|(k, c)| (*k, c.abs())).collect();
    let other: Vec<_> = g2.terms().iter().map(|(k, c)| (*k, c.clone())).collect();
    signs_ok && abs == other
}

/// Colours `0..i` stand for `1..i` and `i..i+j` for `1̄..j̄`.
fn compatible(o: &Digraph, kappa: &[usize], i: usize) -> bool {
    o.edges()
        .iter()
        .all(|&(u, v)| kappa[u] > kappa[v] || (kappa[u] == kappa[v] && kappa[u] >= i))
}

fn for_each_map(n: usize, colours: usize, mut f: impl FnMut(&[usize])) {
    if n > 0 && colours == 0 {
        return;
    }
    let mut kappa = vec![0usize; n];
    loop {
        f(&kappa);
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            kappa[k] += 1;
            if kappa[k] < colours {
                break;
            }
            kappa[k] = 0;
            k += 1;
        }
    }
}

/// Pairs `(o, κ)` of an acyclic orientation and a compatible supercolouring
/// with colours `1 < … < i < 1̄ < … < j̄`.
pub fn supercolor_count(g: &Graph, i: u32, j: u32) -> Result<u64> {
    let (i, j) = (i as usize, j as usize);
    if g.n() > 8 || (i + j) > 8 {
        return Err(Error::TooLarge("supercolour enumeration limited to 8 vertices and 8 colours".into()));
    }
    let mut count = 0u64;
    for o in g.acyclic_orientations() {
        for_each_map(g.n(), i + j, |kappa| {
            if compatible(&o, kappa, i) {
                count += 1;
            }
        });
    }
    Ok(count)
}

/// `Σ_o Σ_{π ∈ L(ō)} Σ_k C(i + D_{n-k}(π), n-k) C(j + A_k(π), k)`.
///
/// For each orientation, vertices are relabelled by a natural labelling of
/// `ō` (`u → v` gives `v` the smaller label), and `π` runs over the label
/// words of the linear extensions read from the sinks upwards.
pub fn ppartition_formula(g: &Graph, i: u32, j: u32) -> Result<Rational> {
    let n = g.n();
    if n > 8 {
        return Err(Error::TooLarge("P-partition sum limited to 8 vertices".into()));
    }
    let mut total = Rational::zero();
    for o in g.acyclic_orientations() {
        // v must precede u whenever u → v; closure is implied by checking every edge
        let extensions = {
            let mut out = Vec::new();
            for_each_permutation(n, |w| {
                let mut pos = vec![0; n];
                for (k, &v) in w.iter().enumerate() {
                    pos[v] = k;
                }
                if o.edges().iter().all(|&(u, v)| pos[v] < pos[u]) {
                    out.push(w.to_vec());
                }
            });
            out
        };
        let mut label = vec![0usize; n];
        for (k, &v) in extensions[0].iter().enumerate() {
            label[v] = k;
        }
        for w in &extensions {
            let word: Vec<usize> = w.iter().map(|&v| label[v]).collect();
            for k in 0..=n {
                let first = &word[..n - k];
                let last = &word[n - k..];
                let des = first.windows(2).filter(|p| p[0] > p[1]).count();
                let asc = last.windows(2).filter(|p| p[0] < p[1]).count();
                let a = binomial(i as usize + des, n - k);
                let b = binomial(j as usize + asc, k);
                total += Rational::from_integer((a * b).into());
            }
        }
    }
    Ok(total)
}

/// `(α_T, β_T)` at `(m, n) = (i + j, j - i)` by direct enumeration over `T'`.
pub fn alpha_beta_count(t: &RootedTree, i: u32, j: u32) -> Result<(u64, u64)> {
    let n = t.n();
    if n + 1 > 8 || (i + j) > 6 {
        return Err(Error::TooLarge("alpha/beta enumeration limited to 7 vertices and 6 colours".into()));
    }
    let mut edges = t.graph().edges();
    edges.push((t.root(), n));
    let tp = Graph::from_edges(n + 1, &edges)?;
    let orientations = tp.acyclic_orientations();
    let (i, j) = (i as usize, j as usize);
    let mut alpha = 0u64;
    let mut beta = 0u64;
    for o in &orientations {
        for_each_map(n + 1, i + j, |kappa| {
            let extra = kappa[n];
            if (extra == 0 && i > 0) || (extra == i && j > 0) {
                if compatible(o, kappa, i) {
                    if extra == 0 && i > 0 {
                        alpha += 1;
                    } else {
                        beta += 1;
                    }
                }
            }
        });
    }
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::graph::{all_graphs, all_trees};

    #[test]
    fn single_vertex() {
        let t = RootedTree::single_vertex();
        let ab = alpha_beta(&t);
        assert_eq!(ab.alpha.to_string(), "m - 1");
        assert_eq!(ab.beta.to_string(), "m + 1");
        assert_eq!(chi_tilde_tree(&t).unwrap().to_string(), "m");
        assert_eq!(chi_tilde(&Graph::empty(1)).unwrap().to_string(), "m");
    }

    #[test]
    fn k2_values() {
        let k2 = Graph::complete(2);
        assert_eq!(supercolor_count(&k2, 1, 0).unwrap(), 0);
        assert_eq!(supercolor_count(&k2, 0, 1).unwrap(), 2);
        for i in 0..=3 {
            for j in 0..=3 {
                let expect = (i + j) * (i + j) + j - i;
                assert_eq!(superfied_value(&k2, i, j).unwrap(), rat(expect as i64));
                assert_eq!(supercolor_count(&k2, i, j).unwrap(), expect as u64);
            }
        }
        let chi = chi_tilde(&k2).unwrap();
        assert!(chi.is_nonnegative());
        assert_eq!(chi.to_string(), "m^2 + n");
    }

    #[test]
    fn ppartition_small() {
        for n in 1..=3 {
            for g in all_graphs(n) {
                for i in 0..=2 {
                    for j in 0..=2 {
                        let expect = rat(supercolor_count(&g, i, j).unwrap() as i64);
                        assert_eq!(ppartition_formula(&g, i, j).unwrap(), expect, "{g:?} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn trees_agree() {
        for n in 1..=5 {
            for g in all_trees(n) {
                let t = RootedTree::new(g.clone(), 0).unwrap();
                let ab = alpha_beta(&t);
                assert!(is_related_pair(&ab.alpha, &ab.beta));
                let chi = chi_tilde(&g).unwrap();
                assert_eq!(chi_tilde_tree(&t).unwrap(), chi);
                assert_eq!(chi_tilde_tree_direct(&t), chi);
            }
        }
    }

    #[test]
    fn alpha_beta_by_counting() {
        for n in 1..=3 {
            for g in all_trees(n) {
                let t = RootedTree::new(g, 0).unwrap();
                let ab = alpha_beta(&t);
                for i in 1..=2u32 {
                    for j in 1..=2u32 {
                        let (a, b) = alpha_beta_count(&t, i, j).unwrap();
                        let (m, nn) = (rat((i + j) as i64), rat(j as i64 - i as i64));
                        assert_eq!(ab.alpha.evaluate(&m, &nn), rat(a as i64));
                        assert_eq!(ab.beta.evaluate(&m, &nn), rat(b as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn related_pair_rejects() {
        let m = BivarPoly::var(MN, 0);
        let one = BivarPoly::constant(MN, rat(1));
        assert!(is_related_pair(&(&m - &one), &(&m + &one)));
        assert!(!is_related_pair(&(&m + &one), &(&m + &one)));
        assert!(!is_related_pair(&(&m - &one), &(&m - &one)));
    }
}
