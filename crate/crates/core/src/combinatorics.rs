//! Integer partitions, set partitions, permutations and the small counting
//! sequences everything else is built on.
//!
//! Set-partition elements and permutation values are stored 0-based; the
//! `Display`/`FromStr` forms are 1-based (`{1,3|2}`, `[1,3,2]`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigUint, One, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// A weakly decreasing sequence of positive parts.
///
/// Ordering is by weight first and then reverse lexicographic, so
/// `[4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]`; every ordered collection in
/// the crate iterates partitions in this order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPartition(Vec<u32>);

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Precondition(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        Ok(Self::from_parts(parts))
    }

    /// Sorts the parts and drops zeros. Handy for compositions.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition(parts)
    }

    pub fn empty() -> Self {
        IntegerPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.0 {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// Number of parts equal to `k`.
    pub fn count(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// `r_1! r_2! ...` over part multiplicities.
    pub fn r_factorial(&self) -> BigUint {
        self.multiplicities()
            .values()
            .fold(BigUint::one(), |acc, &r| acc * factorial(r))
    }

    /// `(-1)^{|λ| - ℓ(λ)}`.
    pub fn sgn(&self) -> i32 {
        if (self.weight() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Size of the centralizer of a permutation of cycle type λ.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .iter()
            .fold(BigUint::one(), |acc, (&i, &r)| {
                acc * num::pow(BigUint::from(i), r) * factorial(r)
            })
    }

    pub fn conjugate(&self) -> Self {
        let max = self.0.first().copied().unwrap_or(0);
        IntegerPartition(
            (1..=max)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Self) -> Self {
        Self::from_parts(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Removes one part equal to `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(IntegerPartition(parts))
    }

    /// `[a, 1^r]`-style hook `(d - r, 1^r)`.
    pub fn hook(d: u32, r: u32) -> Self {
        assert!(r < d, "hook leg must be shorter than the weight");
        Self::from_parts(std::iter::once(d - r).chain(std::iter::repeat(1).take(r as usize)))
    }
}

impl Ord for IntegerPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for IntegerPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            message: format!("malformed partition {s:?}, expected e.g. [3,1,1]"),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let p = Self::new(parts.clone())?;
        if p.0 != parts {
            return Err(Error::Parse {
                line: 1,
                message: format!("partition {s:?} is not weakly decreasing"),
            });
        }
        Ok(p)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn integer_partitions(n: usize) -> Vec<IntegerPartition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if rem == 0 {
            out.push(IntegerPartition(cur.clone()));
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// A partition of `{0, .., n-1}` into nonempty blocks.
///
/// Canonical form: elements ascending inside each block, blocks ordered by
/// their minimum element. Derived equality and hashing rely on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Precondition("empty block in set partition".into()));
            }
            for &e in block {
                if e >= n {
                    return Err(Error::Precondition(format!(
                        "element {} outside ground set of size {n}",
                        e + 1
                    )));
                }
                if seen[e] {
                    return Err(Error::Precondition(format!(
                        "element {} appears twice",
                        e + 1
                    )));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Precondition(format!(
                "element {} is not covered",
                missing + 1
            )));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    /// Builds the partition whose blocks are the level sets of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (e, &l) in labels.iter().enumerate() {
            groups.entry(l).or_default().push(e);
        }
        Self::canonical(labels.len(), groups.into_values().collect())
    }

    /// The bottom element 0̂: all singletons.
    pub fn discrete(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// The top element 1̂: a single block (no blocks when `n == 0`).
    pub fn full(n: usize) -> Self {
        SetPartition {
            n,
            blocks: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every element.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                labels[e] = i;
            }
        }
        labels
    }

    /// The integer partition of block sizes.
    pub fn block_type(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.blocks.iter().map(|b| b.len() as u32))
    }

    pub fn sgn(&self) -> i32 {
        if (self.n - self.blocks.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundSizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// True iff every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        self.check_size(other)?;
        let labels = other.labels();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&e| labels[e] == labels[b[0]])))
    }

    /// For each block of `coarser`, the number of blocks of `self` inside it.
    pub fn interval_counts(&self, coarser: &Self) -> Result<Vec<usize>> {
        if !self.refines(coarser)? {
            return Err(Error::NotComparable(self.to_string(), coarser.to_string()));
        }
        let labels = coarser.labels();
        let mut counts = vec![0; coarser.len()];
        for b in &self.blocks {
            counts[labels[b[0]]] += 1;
        }
        Ok(counts)
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for &e in &b[1..] {
                let (ra, rb) = (find(&mut parent, b[0]), find(&mut parent, e));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let labels: Vec<usize> = (0..self.n).map(|e| find(&mut parent, e)).collect();
        Ok(Self::from_labels(&labels))
    }

    /// Restricts to the elements of `subset` (0-based), relabelled in order.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        let labels = self.labels();
        Self::from_labels(&subset.iter().map(|&e| labels[e]).collect::<Vec<_>>())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", e + 1)?;
            }
        }
        write!(f, "}}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            message: format!("malformed set partition {s:?}: {msg}"),
        };
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| bad("expected e.g. {1,3|2}"))?;
        if inner.trim().is_empty() {
            return Ok(SetPartition::full(0));
        }
        let mut blocks = Vec::new();
        for block in inner.split('|') {
            let elems = block
                .split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(bad("elements are positive integers")),
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(elems);
        }
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(n, blocks)
    }
}

/// All set partitions of `{0, .., n-1}`.
///
/// Built by inserting each element first as a new singleton and then into
/// each existing block, so `n = 2` yields `{1|2}` before `{1,2}`.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(k: usize, n: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<SetPartition>) {
        if k == n {
            out.push(SetPartition::from_labels(labels));
            return;
        }
        labels.push(blocks);
        rec(k + 1, n, labels, blocks + 1, out);
        labels.pop();
        for b in 0..blocks {
            labels.push(b);
            rec(k + 1, n, labels, blocks, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

pub fn refines(pi: &SetPartition, sigma: &SetPartition) -> Result<bool> {
    pi.refines(sigma)
}

pub fn lattice_join(pi: &SetPartition, sigma: &SetPartition) -> Result<SetPartition> {
    pi.join(sigma)
}

/// Möbius function of the interval `[pi, sigma]` of the partition lattice,
/// via the product formula `∏ (-1)^{k-1} (k-1)!` over blocks of `sigma`.
pub fn mobius_interval(pi: &SetPartition, sigma: &SetPartition) -> Result<BigInt> {
    Ok(pi
        .interval_counts(sigma)?
        .into_iter()
        .fold(BigInt::one(), |acc, k| acc * mobius_full(k)))
}

/// `μ(0̂, 1̂)` in the lattice of partitions of a `k`-set.
pub fn mobius_full(k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let mag = BigInt::from(factorial(k - 1));
    if k % 2 == 1 {
        mag
    } else {
        -mag
    }
}

/// `λ(π,σ)! = ∏ k!` over blocks of `sigma`, `k` the number of `pi`-blocks inside.
pub fn lambda_factorial(pi: &SetPartition, sigma: &SetPartition) -> Result<BigUint> {
    Ok(pi
        .interval_counts(sigma)?
        .into_iter()
        .fold(BigUint::one(), |acc, k| acc * factorial(k)))
}

/// A bijection of `{0, .., n-1}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v >= n || seen[v] {
                return Err(Error::Precondition(format!(
                    "not a permutation: {:?}",
                    one_line.iter().map(|v| v + 1).collect::<Vec<_>>()
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    /// From 1-based one-line notation, e.g. `[1, 3, 2]`.
    pub fn from_one_based(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::Precondition("permutation values start at 1".into()));
        }
        Self::new(one_line.iter().map(|v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn sign(&self) -> i32 {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// All permutations of `{0, .., n-1}` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| out.push(Permutation(p.to_vec())));
    out
}

/// Visits every permutation of `{0, .., n-1}` in lexicographic order.
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Subsets of `[d-1]` are encoded as bit masks: bit `j-1` set iff `j ∈ S`.
pub fn subset_to_mask(s: &[usize], d: usize) -> Result<u32> {
    let mut mask = 0u32;
    for &e in s {
        if e == 0 || e >= d {
            return Err(Error::SubsetOutOfRange {
                element: e,
                max: d.saturating_sub(1),
            });
        }
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}

pub fn mask_to_subset(mask: u32, d: usize) -> Vec<usize> {
    (1..d).filter(|&j| mask & (1 << (j - 1)) != 0).collect()
}

/// Lengths of the subwords of `12…d` after breaking behind each element of
/// the subset, in order (a composition of `d`).
pub fn mask_composition(mask: u32, d: usize) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut run = 0;
    for j in 1..=d {
        run += 1;
        if j == d || mask & (1 << (j - 1)) != 0 {
            parts.push(run);
            run = 0;
        }
    }
    parts
}

/// Inverse of [`mask_composition`].
pub fn composition_mask(parts: &[u32]) -> u32 {
    let mut mask = 0;
    let mut pos = 0;
    for &p in &parts[..parts.len().saturating_sub(1)] {
        pos += p;
        mask |= 1 << (pos - 1);
    }
    mask
}

pub fn subset_type(s: &[usize], d: usize) -> Result<IntegerPartition> {
    let mask = subset_to_mask(s, d)?;
    Ok(IntegerPartition::from_parts(mask_composition(mask, d)))
}

/// Permutations of `r + 1` with no `i` immediately followed by `i + 1`.
pub fn u_sequence(r: usize) -> BigUint {
    let mut count = BigUint::zero();
    for_each_permutation(r + 1, |p| {
        if p.windows(2).all(|w| w[1] != w[0] + 1) {
            count += 1u32;
        }
    });
    count
}

/// Derangements of `r`.
pub fn v_sequence(r: usize) -> BigUint {
    let mut count = BigUint::zero();
    for_each_permutation(r, |p| {
        if p.iter().enumerate().all(|(i, &v)| i != v) {
            count += 1u32;
        }
    });
    count
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka(shape: &IntegerPartition, content: &IntegerPartition) -> Result<BigUint> {
    if shape.weight() != content.weight() {
        return Err(Error::WeightMismatch(shape.to_string(), content.to_string()));
    }
    // Peel the largest entry off as a horizontal strip, from the outside in.
    fn rec(shape: &[u32], content: &[u32]) -> BigUint {
        let Some((&last, rest)) = content.split_last() else {
            return if shape.iter().all(|&p| p == 0) {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        };
        let mut total = BigUint::zero();
        let mut inner = shape.to_vec();
        strips(shape, &mut inner, 0, last, rest, &mut total);
        total
    }
    // Choose inner[i] in [shape[i+1], shape[i]] removing `left` cells in total.
    fn strips(shape: &[u32], inner: &mut Vec<u32>, i: usize, left: u32, rest: &[u32], total: &mut BigUint) {
        if i == shape.len() {
            if left == 0 {
                *total += rec(inner, rest);
            }
            return;
        }
        let lower = shape.get(i + 1).copied().unwrap_or(0);
        let max_remove = (shape[i] - lower).min(left);
        for k in 0..=max_remove {
            inner[i] = shape[i] - k;
            strips(shape, inner, i + 1, left - k, rest, total);
        }
        inner[i] = shape[i];
    }
    Ok(rec(shape.parts(), content.parts()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(integer_partitions(0), vec![IntegerPartition::empty()]);
        assert_eq!(integer_partitions(1), vec![ip(&[1])]);
        let p4: Vec<String> = integer_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        let counts: Vec<usize> = (0..=10).map(|n| integer_partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn partition_order_matches_enumeration() {
        let mut all: Vec<_> = (0..7).flat_map(integer_partitions).collect();
        let before = all.clone();
        all.sort();
        assert_eq!(all, before);
    }

    #[test]
    fn set_partitions_bell_numbers() {
        assert_eq!(set_partitions(1), vec![SetPartition::discrete(1)]);
        assert_eq!(set_partitions(2), vec![sp("{1|2}"), sp("{1,2}")]);
        let bell: Vec<usize> = (0..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, [1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn refinement() {
        assert!(refines(&sp("{1|2}"), &sp("{1,2}")).unwrap());
        assert!(!refines(&sp("{1,2}"), &sp("{1|2}")).unwrap());
        assert!(refines(&sp("{1,3|2}"), &sp("{1,3|2}")).unwrap());
        assert_eq!(
            refines(&sp("{1|2}"), &sp("{1,2,3}")),
            Err(Error::GroundSizeMismatch(2, 3))
        );
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius_interval(&SetPartition::discrete(2), &SetPartition::full(2)).unwrap(), BigInt::from(-1));
        assert_eq!(mobius_interval(&SetPartition::discrete(3), &SetPartition::full(3)).unwrap(), BigInt::from(2));
        let s = sp("{1,3|2}");
        assert_eq!(mobius_interval(&s, &s).unwrap(), BigInt::one());
        assert!(matches!(
            mobius_interval(&sp("{1,2|3}"), &sp("{1,3|2}")),
            Err(Error::NotComparable(..))
        ));
    }

    #[test]
    fn lambda_factorial_values() {
        assert_eq!(lambda_factorial(&SetPartition::discrete(3), &SetPartition::full(3)).unwrap(), BigUint::from(6u32));
        let s = sp("{1,3|2}");
        assert_eq!(lambda_factorial(&s, &s).unwrap(), BigUint::one());
        assert_eq!(lambda_factorial(&sp("{1|2|3|4}"), &sp("{1,2|3,4}")).unwrap(), BigUint::from(4u32));
    }

    // Recursive definition of μ, independent of the product formula.
    fn mobius_recursive(pi: &SetPartition, sigma: &SetPartition, all: &[SetPartition]) -> BigInt {
        if pi == sigma {
            return BigInt::one();
        }
        -all.iter()
            .filter(|t| pi.refines(t).unwrap() && t.refines(sigma).unwrap() && *t != sigma)
            .map(|t| mobius_recursive(pi, t, all))
            .sum::<BigInt>()
    }

    #[test]
    fn mobius_product_formula_matches_recursion() {
        for n in 0..=4 {
            let all = set_partitions(n);
            for pi in &all {
                for sigma in &all {
                    if pi.refines(sigma).unwrap() {
                        assert_eq!(mobius_interval(pi, sigma).unwrap(), mobius_recursive(pi, sigma, &all));
                    }
                }
            }
        }
    }

    #[test]
    fn mobius_sums_vanish_on_intervals() {
        for n in 0..=5 {
            let all = set_partitions(n);
            for pi in &all {
                for sigma in all.iter().filter(|s| pi.refines(s).unwrap()) {
                    let total: BigInt = all
                        .iter()
                        .filter(|t| pi.refines(t).unwrap() && t.refines(sigma).unwrap())
                        .map(|t| mobius_interval(pi, t).unwrap())
                        .sum();
                    let expected = if pi == sigma { BigInt::one() } else { BigInt::zero() };
                    assert_eq!(total, expected, "{pi} {sigma}");
                }
            }
        }
    }

    #[test]
    fn signs_and_r_factorials() {
        assert_eq!(ip(&[1, 1, 1]).sgn(), 1);
        assert_eq!(ip(&[2]).sgn(), -1);
        assert_eq!(ip(&[3, 2]).sgn(), -1);
        assert_eq!(sp("{1,2|3}").sgn(), -1);
        assert_eq!(ip(&[2, 1]).r_factorial(), BigUint::one());
        assert_eq!(ip(&[1, 1, 1]).r_factorial(), BigUint::from(6u32));
        assert_eq!(ip(&[2, 2, 1]).r_factorial(), BigUint::from(2u32));
    }

    #[test]
    fn subset_types() {
        assert_eq!(subset_type(&[], 4).unwrap(), ip(&[4]));
        assert_eq!(subset_type(&[1, 2, 3], 4).unwrap(), ip(&[1, 1, 1, 1]));
        assert_eq!(subset_type(&[2], 5).unwrap(), ip(&[3, 2]));
        assert_eq!(
            subset_type(&[4], 4),
            Err(Error::SubsetOutOfRange { element: 4, max: 3 })
        );
    }

    #[test]
    fn subset_type_fibres() {
        for d in 1..=6 {
            let mut fibres: BTreeMap<IntegerPartition, usize> = BTreeMap::new();
            for mask in 0..(1u32 << (d - 1)) {
                *fibres.entry(IntegerPartition::from_parts(mask_composition(mask, d))).or_default() += 1;
            }
            let all = integer_partitions(d);
            assert_eq!(fibres.len(), all.len());
            for lam in all {
                let expected = factorial(lam.len()) / lam.r_factorial();
                assert_eq!(BigUint::from(fibres[&lam]), expected, "{lam}");
            }
        }
    }

    #[test]
    fn composition_mask_round_trip() {
        for d in 1..=7 {
            for mask in 0..(1u32 << (d - 1)) {
                assert_eq!(composition_mask(&mask_composition(mask, d)), mask);
            }
        }
    }

    #[test]
    fn u_and_v_sequences() {
        assert_eq!(u_sequence(0), BigUint::one());
        assert_eq!(v_sequence(0), BigUint::one());
        assert_eq!(u_sequence(2), BigUint::from(3u32));
        assert_eq!(v_sequence(3), BigUint::from(2u32));
        for k in 1..=7usize {
            let su: BigUint = (0..k).map(|r| u_sequence(r) * binomial(k - 1, r)).sum();
            let sv: BigUint = (0..k).map(|r| v_sequence(r) * binomial(k - 1, r)).sum();
            assert_eq!(su, factorial(k));
            assert_eq!(sv, factorial(k - 1));
        }
    }

    // Direct tableau enumeration oracle.
    fn kostka_brute(shape: &IntegerPartition, content: &IntegerPartition) -> usize {
        let cells: Vec<(usize, usize)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        let max = content.len();
        let mut grid = vec![vec![0usize; shape.parts().first().copied().unwrap_or(0) as usize]; shape.len()];
        fn rec(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, max: usize, content: &[u32]) -> usize {
            if i == cells.len() {
                let mut used = vec![0u32; max];
                for row in grid.iter() {
                    for &v in row.iter().filter(|&&v| v > 0) {
                        used[v - 1] += 1;
                    }
                }
                return usize::from(used == content);
            }
            let (r, c) = cells[i];
            let mut total = 0;
            for v in 1..=max {
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                grid[r][c] = v;
                total += rec(i + 1, cells, grid, max, content);
                grid[r][c] = 0;
            }
            total
        }
        rec(0, &cells, &mut grid, max, content.parts())
    }

    #[test]
    fn kostka_matches_enumeration() {
        assert_eq!(kostka(&ip(&[2, 1]), &ip(&[1, 1, 1])).unwrap(), BigUint::from(2u32));
        for d in 1..=5 {
            for shape in integer_partitions(d) {
                assert_eq!(kostka(&shape, &shape).unwrap(), BigUint::one());
                for content in integer_partitions(d) {
                    assert_eq!(kostka(&shape, &content).unwrap(), BigUint::from(kostka_brute(&shape, &content)));
                }
            }
        }
        assert!(kostka(&ip(&[2]), &ip(&[1])).is_err());
    }

    #[test]
    fn kostka_hooks_are_binomials() {
        for d in 1..=7u32 {
            for r in 0..d {
                let hook = IntegerPartition::hook(d, r);
                for lam in integer_partitions(d as usize) {
                    let expected = binomial(lam.len() - 1, r as usize);
                    assert_eq!(kostka(&hook, &lam).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn join_examples() {
        let s = sp("{1,3|2}");
        assert_eq!(lattice_join(&SetPartition::discrete(3), &s).unwrap(), s);
        assert_eq!(lattice_join(&sp("{1,2|3}"), &sp("{1|2,3}")).unwrap(), sp("{1,2,3}"));
        assert_eq!(lattice_join(&s, &s).unwrap(), s);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(sp("{1,3|2}").to_string(), "{1,3|2}");
        assert_eq!(sp("{2|3,1}").to_string(), "{1,3|2}");
        assert!("{1|1}".parse::<SetPartition>().is_err());
        assert!("{1|3}".parse::<SetPartition>().is_err());
        assert_eq!("[3,1,1]".parse::<IntegerPartition>().unwrap(), ip(&[3, 1, 1]));
        assert!("[1,3]".parse::<IntegerPartition>().is_err());
        assert_eq!(Permutation::from_one_based(&[1, 3, 2]).unwrap().to_string(), "[1,3,2]");
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(perms.iter().map(|p| p.sign()).sum::<i32>(), 0);
        assert_eq!(Permutation::from_one_based(&[2, 1, 3]).unwrap().sign(), -1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_partition(n: usize) -> impl Strategy<Value = SetPartition> {
            proptest::collection::vec(0..n, n).prop_map(|labels| SetPartition::from_labels(&labels))
        }

        proptest! {
            #[test]
            fn join_is_a_semilattice(a in arb_partition(6), b in arb_partition(6), c in arb_partition(6)) {
                let ab = a.join(&b).unwrap();
                prop_assert_eq!(&ab, &b.join(&a).unwrap());
                prop_assert_eq!(ab.join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
                prop_assert_eq!(a.join(&a).unwrap(), a.clone());
                prop_assert!(a.refines(&ab).unwrap());
                prop_assert!(b.refines(&ab).unwrap());
            }

            #[test]
            fn mobius_magnitude_is_product_of_factorials(a in arb_partition(5), b in arb_partition(5)) {
                let top = a.join(&b).unwrap();
                let counts = a.interval_counts(&top).unwrap();
                let expected: BigUint = counts.iter().map(|&k| factorial(k - 1)).product();
                let mu = mobius_interval(&a, &top).unwrap();
                prop_assert_eq!(mu.magnitude().clone(), expected);
                let sign = if (a.len() - top.len()) % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(mu.sign() == num::bigint::Sign::Minus, sign == -1);
            }
        }
    }
}
