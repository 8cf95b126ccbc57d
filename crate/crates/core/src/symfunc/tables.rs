//! Per-degree transition matrices between the p basis and the other bases.
//!
//! Tables are built on first use and then shared; each (degree, basis) slot
//! is a `OnceLock`, so a table is computed at most once even under
//! concurrent first access.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use num::{BigInt, BigUint, One, Zero};

use super::{complete, elementary, rat, sign, Basis, SymFunc};
use crate::combinatorics::{factorial, integer_partitions, kostka, IntegerPartition};
use crate::error::{Error, Result};
use crate::Rational;

/// Hard upper bound for the configurable degree cap.
pub const MAX_DEGREE_CAP: usize = 14;
const DEFAULT_DEGREE_CAP: usize = 8;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DEGREE_CAP);

pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Sets the largest degree for which basis conversions are allowed.
pub fn set_degree_cap(cap: usize) -> Result<()> {
    if cap == 0 || cap > MAX_DEGREE_CAP {
        return Err(Error::InvalidDegreeCap(cap));
    }
    DEGREE_CAP.store(cap, Ordering::Relaxed);
    Ok(())
}

/// `b_λ = Σ_μ to_p[λ][μ] p_μ` and `p_μ = Σ_λ from_p[μ][λ] b_λ`,
/// rows and columns indexed by `partitions`.
#[derive(Debug)]
pub struct Table {
    pub partitions: Vec<IntegerPartition>,
    index: HashMap<IntegerPartition, usize>,
    pub to_p: Vec<Vec<Rational>>,
    pub from_p: Vec<Vec<Rational>>,
}

impl Table {
    fn new(d: usize, to_p: Vec<Vec<Rational>>, from_p: Vec<Vec<Rational>>) -> Self {
        let partitions = integer_partitions(d);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Table {
            partitions,
            index,
            to_p,
            from_p,
        }
    }

    pub fn index_of(&self, lam: &IntegerPartition) -> usize {
        self.index[lam]
    }
}

type Slots = [OnceLock<Arc<Table>>; 8];

fn cache() -> &'static Vec<Slots> {
    static CACHE: OnceLock<Vec<Slots>> = OnceLock::new();
    CACHE.get_or_init(|| (0..=MAX_DEGREE_CAP).map(|_| Default::default()).collect())
}

/// The transition table for `basis` in degree `d`.
pub fn table(d: usize, basis: Basis) -> Result<Arc<Table>> {
    let cap = degree_cap();
    if d > cap {
        return Err(Error::DegreeTooLarge { degree: d, cap });
    }
    let slot = &cache()[d][basis.index()];
    Ok(slot.get_or_init(|| Arc::new(build(d, basis))).clone())
}

fn build(d: usize, basis: Basis) -> Table {
    let parts = integer_partitions(d);
    let n = parts.len();
    let get = |b: Basis| table(d, b).expect("degree already checked");
    match basis {
        Basis::P => Table::new(d, identity(n), identity(n)),
        Basis::M => {
            let l = p_in_m(&parts);
            Table::new(d, invert(&l), l)
        }
        Basis::MTilde => {
            let m = get(Basis::M);
            let r: Vec<Rational> = parts.iter().map(|l| Rational::from_integer(BigInt::from(l.r_factorial()))).collect();
            let to_p = (0..n).map(|i| m.to_p[i].iter().map(|c| c * &r[i]).collect()).collect();
            let from_p = m
                .from_p
                .iter()
                .map(|row| row.iter().zip(&r).map(|(c, ri)| c / ri).collect())
                .collect();
            Table::new(d, to_p, from_p)
        }
        Basis::F => {
            let mt = get(Basis::MTilde);
            let s: Vec<Rational> = parts.iter().map(|l| sign(l.sgn())).collect();
            let flip = |mat: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
                (0..n)
                    .map(|i| (0..n).map(|j| &mat[i][j] * &s[i] * &s[j]).collect())
                    .collect()
            };
            Table::new(d, flip(&mt.to_p), flip(&mt.from_p))
        }
        Basis::E | Basis::H => {
            let gen = if basis == Basis::E { elementary } else { complete };
            let to_p: Vec<Vec<Rational>> = parts
                .iter()
                .map(|lam| {
                    let prod = lam.parts().iter().fold(SymFunc::one(), |acc, &k| &acc * &gen(k as usize));
                    dense_row(&prod, &parts)
                })
                .collect();
            let from_p = invert(&to_p);
            Table::new(d, to_p, from_p)
        }
        Basis::S => {
            let m = get(Basis::M);
            let kost: Vec<Vec<Rational>> = parts
                .iter()
                .map(|lam| {
                    parts
                        .iter()
                        .map(|mu| Rational::from_integer(BigInt::from(kostka(lam, mu).expect("same weight"))))
                        .collect()
                })
                .collect();
            let to_p = mat_mul(&kost, &m.to_p);
            let from_p = invert(&to_p);
            Table::new(d, to_p, from_p)
        }
        Basis::XiTilde => {
            let mt = get(Basis::MTilde);
            let index: HashMap<&IntegerPartition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let coeffs: Vec<Vec<Rational>> = parts
                .iter()
                .map(|lam| {
                    let mut row = vec![Rational::zero(); n];
                    for (nu, c) in xi_tilde_in_mtilde(lam) {
                        row[index[&nu]] = c;
                    }
                    row
                })
                .collect();
            let to_p = mat_mul(&coeffs, &mt.to_p);
            let from_p = invert(&to_p);
            Table::new(d, to_p, from_p)
        }
    }
}

/// Coefficients of `Ξ̃_λ` in the m̃ basis.
///
/// The covers of a disjoint union of directed paths with `λ_i` vertices are
/// tuples of compositions of the `λ_i`; each contributes `m̃_ν / ℓ(ν)!` where
/// `ν` collects all composition parts.
pub fn xi_tilde_in_mtilde(lam: &IntegerPartition) -> BTreeMap<IntegerPartition, Rational> {
    let mut counts: BTreeMap<IntegerPartition, BigUint> = BTreeMap::from([(IntegerPartition::empty(), BigUint::one())]);
    for &k in lam.parts() {
        let comps = compositions_by_type(k);
        let mut next = BTreeMap::new();
        for (nu, c) in &counts {
            for (kappa, w) in &comps {
                *next.entry(nu.union(kappa)).or_insert_with(BigUint::zero) += c * w;
            }
        }
        counts = next;
    }
    counts
        .into_iter()
        .map(|(nu, c)| {
            let den = factorial(nu.len());
            (nu, Rational::new(BigInt::from(c), BigInt::from(den)))
        })
        .collect()
}

/// Number of compositions of `k` rearranging to each partition of `k`.
fn compositions_by_type(k: u32) -> Vec<(IntegerPartition, BigUint)> {
    integer_partitions(k as usize)
        .into_iter()
        .map(|p| {
            let w = factorial(p.len()) / p.r_factorial();
            (p, w)
        })
        .collect()
}

/// `p_λ = Σ_μ L[λ][μ] m_μ`, where `L[λ][μ]` counts assignments of the parts
/// of `λ` to the (labelled) parts of `μ` with matching sums.
fn p_in_m(parts: &[IntegerPartition]) -> Vec<Vec<Rational>> {
    fn count(
        lam: &[u32],
        caps: Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), BigUint>,
    ) -> BigUint {
        let Some((&first, rest)) = lam.split_first() else {
            return BigUint::one();
        };
        let key = (lam.len(), caps.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for j in 0..caps.len() {
            if caps[j] >= first {
                let mut next = caps.clone();
                next[j] -= first;
                next.sort_unstable_by(|a, b| b.cmp(a));
                total += count(rest, next, memo);
            }
        }
        memo.insert(key, total.clone());
        total
    }
    parts
        .iter()
        .map(|lam| {
            parts
                .iter()
                .map(|mu| {
                    if mu.len() > lam.len() {
                        return Rational::zero();
                    }
                    let mut memo = HashMap::new();
                    let c = count(lam.parts(), mu.parts().to_vec(), &mut memo);
                    Rational::from_integer(BigInt::from(c))
                })
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect()
}

fn dense_row(g: &SymFunc, parts: &[IntegerPartition]) -> Vec<Rational> {
    parts.iter().map(|p| g.coefficient(p)).collect()
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![Rational::zero(); n];
            for (k, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, v) in b[k].iter().enumerate() {
                    if !v.is_zero() {
                        out[j] += c * v;
                    }
                }
            }
            out
        })
        .collect()
}

/// Gauss–Jordan inverse. All tables are invertible by construction.
fn invert(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("transition matrix is singular");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] = &m[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                if !m[col][j].is_zero() {
                    let t = &f * &m[col][j];
                    m[r][j] -= t;
                }
                if !inv[col][j].is_zero() {
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_limits() {
        assert_eq!(set_degree_cap(0), Err(Error::InvalidDegreeCap(0)));
        assert_eq!(set_degree_cap(15), Err(Error::InvalidDegreeCap(15)));
        assert!(matches!(table(MAX_DEGREE_CAP + 1, Basis::M), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn tables_are_mutually_inverse() {
        for d in 0..=6 {
            for b in Basis::ALL {
                let t = table(d, b).unwrap();
                assert_eq!(mat_mul(&t.to_p, &t.from_p), identity(t.partitions.len()), "{b} {d}");
            }
        }
    }

    #[test]
    fn concurrent_first_access_agrees() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| table(7, Basis::XiTilde).unwrap()))
            .collect();
        let tables: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for t in &tables[1..] {
            assert!(Arc::ptr_eq(t, &tables[0]));
        }
    }
}
