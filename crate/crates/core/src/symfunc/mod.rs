//! Symmetric functions over the rationals.
//!
//! [`SymFunc`] stores coefficients in the power-sum basis; every other basis
//! is reached through the per-degree transition tables in [`tables`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};

use crate::combinatorics::{integer_partitions, IntegerPartition};
use crate::error::{Error, Result};
use crate::Rational;

pub mod json;
pub mod poly;
pub mod qsym;
pub mod series;
pub mod tables;
pub mod tpoly;
pub mod two;

pub use poly::BivarPoly;
pub use qsym::QSymFunc;
pub use series::{csv_series, TruncatedMultiPoly};
pub use tables::{degree_cap, set_degree_cap, MAX_DEGREE_CAP};
pub use tpoly::TPoly;
pub use two::{superficiate, SymFunc2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    MTilde,
    P,
    E,
    H,
    S,
    F,
    XiTilde,
}

impl Basis {
    pub const ALL: [Basis; 8] = [
        Basis::M,
        Basis::MTilde,
        Basis::P,
        Basis::E,
        Basis::H,
        Basis::S,
        Basis::F,
        Basis::XiTilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::MTilde => "mtilde",
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
            Basis::F => "f",
            Basis::XiTilde => "xitilde",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: format!(
                    "unknown basis {s:?} (expected one of m, mtilde, p, e, h, s, f, xitilde)"
                ),
            })
    }
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn sign(s: i32) -> Rational {
    rat(s as i64)
}

pub(crate) fn insert_term<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A symmetric function with rational coefficients, stored in the p basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymFunc {
    terms: BTreeMap<IntegerPartition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p(IntegerPartition::empty())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_p_terms([(IntegerPartition::empty(), c)])
    }

    pub fn p(lam: IntegerPartition) -> Self {
        Self::from_p_terms([(lam, Rational::one())])
    }

    pub fn from_p_terms<I: IntoIterator<Item = (IntegerPartition, Rational)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            insert_term(&mut map, k, c);
        }
        SymFunc { terms: map }
    }

    /// `Σ coeffs[λ] b_λ` for the basis `b`.
    pub fn from_basis(basis: Basis, coeffs: &BTreeMap<IntegerPartition, Rational>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (lam, c) in coeffs {
            if c.is_zero() {
                continue;
            }
            let table = tables::table(lam.weight(), basis)?;
            let row = table.index_of(lam);
            for (j, t) in table.to_p[row].iter().enumerate() {
                if !t.is_zero() {
                    insert_term(&mut out, table.partitions[j].clone(), c * t);
                }
            }
        }
        Ok(SymFunc { terms: out })
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lam: IntegerPartition) -> Result<Self> {
        Self::from_basis(basis, &BTreeMap::from([(lam, Rational::one())]))
    }

    pub fn m(lam: IntegerPartition) -> Result<Self> {
        Self::basis_element(Basis::M, lam)
    }

    pub fn m_tilde(lam: IntegerPartition) -> Result<Self> {
        Self::basis_element(Basis::MTilde, lam)
    }

    pub fn e(lam: IntegerPartition) -> Result<Self> {
        Self::basis_element(Basis::E, lam)
    }

    pub fn h(lam: IntegerPartition) -> Result<Self> {
        Self::basis_element(Basis::H, lam)
    }

    pub fn s(lam: IntegerPartition) -> Result<Self> {
        Self::basis_element(Basis::S, lam)
    }

    pub fn f(lam: IntegerPartition) -> Result<Self> {
        Self::basis_element(Basis::F, lam)
    }

    pub fn xi_tilde(lam: IntegerPartition) -> Result<Self> {
        Self::basis_element(Basis::XiTilde, lam)
    }

    /// Coefficients in the requested basis, in partition order.
    pub fn convert(&self, basis: Basis) -> Result<BTreeMap<IntegerPartition, Rational>> {
        if basis == Basis::P {
            return Ok(self.terms.clone());
        }
        let mut out = BTreeMap::new();
        let mut by_degree: BTreeMap<usize, Vec<(&IntegerPartition, &Rational)>> = BTreeMap::new();
        for (lam, c) in &self.terms {
            by_degree.entry(lam.weight()).or_default().push((lam, c));
        }
        for (d, terms) in by_degree {
            let table = tables::table(d, basis)?;
            for (mu, c) in terms {
                let row = table.index_of(mu);
                for (j, t) in table.from_p[row].iter().enumerate() {
                    if !t.is_zero() {
                        insert_term(&mut out, table.partitions[j].clone(), c * t);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn terms(&self) -> &BTreeMap<IntegerPartition, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, lam: &IntegerPartition) -> Rational {
        self.terms.get(lam).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees with a nonzero component.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(IntegerPartition::weight).collect();
        ds.dedup();
        ds
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|l| l.weight() == d)
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    fn map_signs<F: Fn(&IntegerPartition) -> bool>(&self, negate: F) -> Self {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), if negate(l) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// The involution `p_λ ↦ sgn(λ) p_λ`, sending `e_λ` to `h_λ`.
    pub fn omega(&self) -> Self {
        self.map_signs(|l| l.sgn() < 0)
    }

    /// `g(-x)`: `p_n ↦ (-1)^n p_n`.
    pub fn negate_vars(&self) -> Self {
        self.map_signs(|l| l.weight() % 2 == 1)
    }

    /// Principal specialization `p_λ(1^i) = i^{ℓ(λ)}`, as a polynomial in `i`.
    pub fn specialize_ones(&self) -> BivarPoly {
        let mut out = BivarPoly::zero(["i", "j"]);
        for (lam, c) in &self.terms {
            out.add_term(lam.len() as u32, 0, c.clone());
        }
        out
    }

    /// Partial derivative with respect to `p_i`, the `p_k` being free generators.
    pub fn p_partial_derivative(&self, i: u32) -> Self {
        let mut out = BTreeMap::new();
        for (lam, c) in &self.terms {
            let r = lam.count(i);
            if r > 0 {
                let rest = lam.without_part(i).expect("part is present");
                insert_term(&mut out, rest, c * rat(r as i64));
            }
        }
        SymFunc { terms: out }
    }

    /// Applies `p_λ ↦ Π_k sub(k)` where `sub(k)` is the image of `p_k`.
    pub fn substitute<F: Fn(u32) -> SymFunc>(&self, sub: F) -> Self {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.terms {
            let mut term = SymFunc::constant(c.clone());
            for &k in lam.parts() {
                term = &term * &sub(k);
            }
            out = &out + &term;
        }
        out
    }

    /// True iff every coefficient in `basis` is nonnegative.
    pub fn is_positive_in(&self, basis: Basis) -> Result<bool> {
        Ok(self.convert(basis)?.values().all(|c| !c.is_negative()))
    }

    /// Human-readable expansion, e.g. `m[2,1] + 1/2*m[1,1,1]`.
    pub fn pretty(&self, basis: Basis) -> Result<String> {
        Ok(pretty_terms(
            self.convert(basis)?
                .iter()
                .map(|(l, c)| (format!("{}{}", basis.name(), l), c)),
        ))
    }
}

/// Formats `c_1*a_1 + c_2*a_2 - ...` with unit coefficients elided.
pub(crate) fn pretty_terms<'a, I: IntoIterator<Item = (String, &'a Rational)>>(terms: I) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if name.is_empty() {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{}*{}", fmt_rational(&mag), name));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `num/den`, eliding a unit denominator.
pub fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut terms = self.terms.clone();
        for (l, c) in &rhs.terms {
            insert_term(&mut terms, l.clone(), c.clone());
        }
        SymFunc { terms }
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut terms = self.terms.clone();
        for (l, c) in &rhs.terms {
            insert_term(&mut terms, l.clone(), -c);
        }
        SymFunc { terms }
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        self.scale(&rat(-1))
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                insert_term(&mut terms, a.union(b), ca * cb);
            }
        }
        SymFunc { terms }
    }
}

impl Add for SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_terms(
            self.terms.iter().map(|(l, c)| (format!("p{l}"), c)),
        ))
    }
}

/// `Σ_{λ ⊢ n} sgn(λ) p_λ / z_λ`.
pub fn elementary(n: usize) -> SymFunc {
    SymFunc::from_p_terms(integer_partitions(n).into_iter().map(|l| {
        let c = Rational::new(BigInt::from(l.sgn()), BigInt::from(l.z()));
        (l, c)
    }))
}

/// `Σ_{λ ⊢ n} p_λ / z_λ`.
pub fn complete(n: usize) -> SymFunc {
    SymFunc::from_p_terms(integer_partitions(n).into_iter().map(|l| {
        let c = Rational::new(BigInt::one(), BigInt::from(l.z()));
        (l, c)
    }))
}

/// Free function form of [`SymFunc::convert`].
pub fn convert(g: &SymFunc, basis: Basis) -> Result<BTreeMap<IntegerPartition, Rational>> {
    g.convert(basis)
}

pub fn omega(g: &SymFunc) -> SymFunc {
    g.omega()
}

pub fn negate_vars(g: &SymFunc) -> SymFunc {
    g.negate_vars()
}

pub fn specialize_ones(g: &SymFunc) -> BivarPoly {
    g.specialize_ones()
}

pub fn p_partial_derivative(g: &SymFunc, i: u32) -> SymFunc {
    g.p_partial_derivative(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{factorial, kostka, mobius_interval, set_partitions, lambda_factorial, SetPartition};
    use num::BigUint;

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn fr(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn map(pairs: &[(&[u32], Rational)]) -> BTreeMap<IntegerPartition, Rational> {
        pairs.iter().map(|(l, c)| (ip(l), c.clone())).collect()
    }

    #[test]
    fn basis_examples() {
        let p2 = SymFunc::p(ip(&[2]));
        assert_eq!(p2.convert(Basis::M).unwrap(), map(&[(&[2], rat(1))]));
        let mt11 = SymFunc::m_tilde(ip(&[1, 1])).unwrap();
        assert_eq!(mt11.terms(), &map(&[(&[1, 1], rat(1)), (&[2], rat(-1))]));
        let xi21 = SymFunc::xi_tilde(ip(&[2, 1])).unwrap();
        assert_eq!(xi21.convert(Basis::M).unwrap(), map(&[(&[2, 1], fr(1, 2)), (&[1, 1, 1], rat(1))]));
    }

    #[test]
    fn omega_examples() {
        let e3 = SymFunc::e(ip(&[3])).unwrap();
        assert_eq!(e3.omega(), SymFunc::h(ip(&[3])).unwrap());
        assert_eq!(SymFunc::p(ip(&[2, 1])).omega(), -&SymFunc::p(ip(&[2, 1])));
        let mt111 = SymFunc::m_tilde(ip(&[1, 1, 1])).unwrap();
        assert_eq!(mt111, SymFunc::e(ip(&[3])).unwrap().scale(&rat(6)));
        assert_eq!(mt111.omega(), SymFunc::h(ip(&[3])).unwrap().scale(&rat(6)));
    }

    #[test]
    fn negate_vars_examples() {
        assert_eq!(SymFunc::p(ip(&[1])).negate_vars(), -&SymFunc::p(ip(&[1])));
        assert_eq!(SymFunc::p(ip(&[2])).negate_vars(), SymFunc::p(ip(&[2])));
        let e2 = SymFunc::e(ip(&[2])).unwrap();
        assert_eq!(e2.negate_vars(), e2);
    }

    #[test]
    fn specialization_examples() {
        for d in 0..=5 {
            for lam in integer_partitions(d) {
                let special = SymFunc::m_tilde(lam.clone()).unwrap().specialize_ones();
                assert_eq!(special, BivarPoly::falling_factorial_i(lam.len() as u32), "{lam}");
            }
        }
        let p22 = SymFunc::p(ip(&[2, 2])).specialize_ones();
        assert_eq!(p22.to_string(), "i^2");
        let e2 = SymFunc::e(ip(&[2])).unwrap().specialize_ones();
        assert_eq!(e2.to_string(), "1/2*i^2 - 1/2*i");
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            SymFunc::p(ip(&[2, 2])).p_partial_derivative(2),
            SymFunc::p(ip(&[2])).scale(&rat(2))
        );
        assert!(SymFunc::p(ip(&[3, 1])).p_partial_derivative(2).is_zero());
        assert_eq!(
            SymFunc::p(ip(&[1, 1, 1])).p_partial_derivative(1),
            SymFunc::p(ip(&[1, 1])).scale(&rat(3))
        );
    }

    // m_λ counted directly: p_μ = Σ_λ (#ways to merge parts of μ into λ) m_λ,
    // evaluated by brute force over part assignments.
    #[test]
    fn m_basis_against_merge_counts() {
        for d in 1..=6 {
            for mu in integer_partitions(d) {
                let coeffs = SymFunc::p(mu.clone()).convert(Basis::M).unwrap();
                let parts = mu.parts();
                let k = parts.len();
                let mut counts: BTreeMap<IntegerPartition, usize> = BTreeMap::new();
                // assignments of parts to slots 0..k, counted per resulting monomial
                let total = k.pow(k as u32);
                for code in 0..total {
                    let mut sums = vec![0u32; k];
                    let mut c = code;
                    for &p in parts {
                        sums[c % k] += p;
                        c /= k;
                    }
                    // each monomial x^a with a a sequence is counted once; keep those
                    // whose nonzero slots form a prefix to get one per m_λ term
                    let nz = sums.iter().take_while(|&&s| s > 0).count();
                    if sums[nz..].iter().all(|&s| s == 0) && sums[..nz].windows(2).all(|w| w[0] >= w[1]) {
                        *counts.entry(IntegerPartition::from_parts(sums)).or_default() += 1;
                    }
                }
                let expected: BTreeMap<_, _> = counts.into_iter().map(|(l, c)| (l, rat(c as i64))).collect();
                assert_eq!(coeffs, expected, "{mu}");
            }
        }
    }

    #[test]
    fn schur_via_kostka() {
        for d in 1..=5 {
            for lam in integer_partitions(d) {
                let s = SymFunc::s(lam.clone()).unwrap().convert(Basis::M).unwrap();
                for mu in integer_partitions(d) {
                    let k = kostka(&lam, &mu).unwrap();
                    let got = s.get(&mu).cloned().unwrap_or_default();
                    assert_eq!(got, Rational::from_integer(BigInt::from(k)));
                }
            }
        }
        // s_{n} = h_n and s_{1^n} = e_n
        assert_eq!(SymFunc::s(ip(&[3])).unwrap(), SymFunc::h(ip(&[3])).unwrap());
        assert_eq!(SymFunc::s(ip(&[1, 1, 1])).unwrap(), SymFunc::e(ip(&[3])).unwrap());
    }

    #[test]
    fn omega_of_mtilde_is_signed_forgotten() {
        for d in 0..=6 {
            for lam in integer_partitions(d) {
                let lhs = SymFunc::m_tilde(lam.clone()).unwrap().omega();
                let rhs = SymFunc::f(lam.clone()).unwrap().scale(&sign(lam.sgn()));
                assert_eq!(lhs, rhs, "{lam}");
            }
        }
    }

    #[test]
    fn forgotten_set_partition_sums() {
        for n in 1..=5 {
            let all = set_partitions(n);
            for pi in &all {
                let f = SymFunc::f(pi.block_type()).unwrap();
                let mut via_mt = SymFunc::zero();
                let mut via_p = SymFunc::zero();
                for sigma in all.iter().filter(|s| pi.refines(s).unwrap()) {
                    let lf = Rational::from_integer(BigInt::from(lambda_factorial(pi, sigma).unwrap()));
                    via_mt = &via_mt + &SymFunc::m_tilde(sigma.block_type()).unwrap().scale(&lf);
                    let mu = Rational::from_integer(mobius_interval(pi, sigma).unwrap().abs());
                    via_p = &via_p + &SymFunc::p(sigma.block_type()).scale(&mu);
                }
                assert_eq!(f, via_mt, "{pi}");
                assert_eq!(f, via_p, "{pi}");
            }
        }
    }

    #[test]
    fn mtilde_mobius_expansion() {
        for n in 0..=5 {
            let all = set_partitions(n);
            for pi in &all {
                let expected = all
                    .iter()
                    .filter(|s| pi.refines(s).unwrap())
                    .map(|s| SymFunc::p(s.block_type()).scale(&Rational::from_integer(mobius_interval(pi, s).unwrap())))
                    .sum::<SymFunc>();
                assert_eq!(SymFunc::m_tilde(pi.block_type()).unwrap(), expected);
            }
        }
        let _ = SetPartition::discrete(0);
    }

    #[test]
    fn xi_tilde_triangular() {
        for d in 1..=6 {
            let parts = integer_partitions(d);
            for lam in &parts {
                let row = SymFunc::xi_tilde(lam.clone()).unwrap().convert(Basis::MTilde).unwrap();
                // support lies on refinements of λ (more parts), diagonal nonzero
                for (mu, c) in &row {
                    assert!(!c.is_zero());
                    assert!(mu.len() >= lam.len(), "{lam} {mu}");
                }
                let diag = row.get(lam).expect("diagonal entry");
                assert_eq!(diag, &Rational::new(BigInt::one(), BigInt::from(factorial(lam.len()))));
            }
        }
    }

    #[test]
    fn degree_zero_is_scalar() {
        for b in Basis::ALL {
            let one = SymFunc::basis_element(b, IntegerPartition::empty()).unwrap();
            assert_eq!(one, SymFunc::one());
        }
        let _ = BigUint::one();
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_sym(max_degree: usize) -> impl Strategy<Value = SymFunc> {
            let parts: Vec<IntegerPartition> = (0..=max_degree).flat_map(integer_partitions).collect();
            let n = parts.len();
            proptest::collection::vec((0..n, -20i64..20, 1i64..6), 0..8).prop_map(move |v| {
                SymFunc::from_p_terms(v.into_iter().map(|(i, a, b)| (parts[i].clone(), fr(a, b))))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn round_trip_every_basis(g in arb_sym(6)) {
                for b in Basis::ALL {
                    let coeffs = g.convert(b).unwrap();
                    prop_assert_eq!(&SymFunc::from_basis(b, &coeffs).unwrap(), &g);
                }
            }

            #[test]
            fn omega_is_ring_involution(f in arb_sym(3), g in arb_sym(2)) {
                prop_assert_eq!(f.omega().omega(), f.clone());
                prop_assert_eq!((&f * &g).omega(), &f.omega() * &g.omega());
            }
        }
    }
}
