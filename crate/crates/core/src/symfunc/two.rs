//! Symmetric functions in two alphabets, stored in the `p(x) p(y)` basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Zero};

use super::{insert_term, rat, Basis, BivarPoly, SymFunc};
use crate::combinatorics::{binomial, IntegerPartition};
use crate::error::Result;
use crate::Rational;

type Key = (IntegerPartition, IntegerPartition);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymFunc2 {
    terms: BTreeMap<Key, Rational>,
}

impl SymFunc2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::pp(IntegerPartition::empty(), IntegerPartition::empty())
    }

    /// `p_λ(x) p_μ(y)`.
    pub fn pp(lam: IntegerPartition, mu: IntegerPartition) -> Self {
        Self::from_terms([((lam, mu), rat(1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (Key, Rational)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            insert_term(&mut map, k, c);
        }
        SymFunc2 { terms: map }
    }

    /// `g(x) · 1`.
    pub fn from_x(g: &SymFunc) -> Self {
        Self::from_terms(g.terms().iter().map(|(l, c)| ((l.clone(), IntegerPartition::empty()), c.clone())))
    }

    /// `1 · g(y)`.
    pub fn from_y(g: &SymFunc) -> Self {
        Self::from_terms(g.terms().iter().map(|(l, c)| ((IntegerPartition::empty(), l.clone()), c.clone())))
    }

    /// `a(x) b(y)`.
    pub fn tensor(a: &SymFunc, b: &SymFunc) -> Self {
        let mut map = BTreeMap::new();
        for (l, c) in a.terms() {
            for (m, d) in b.terms() {
                insert_term(&mut map, (l.clone(), m.clone()), c * d);
            }
        }
        SymFunc2 { terms: map }
    }

    pub fn terms(&self) -> &BTreeMap<Key, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, lam: &IntegerPartition, mu: &IntegerPartition) -> Rational {
        self.terms
            .get(&(lam.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// `g(x; 0)`.
    pub fn restrict_y0(&self) -> SymFunc {
        SymFunc::from_p_terms(
            self.terms
                .iter()
                .filter(|((_, m), _)| m.is_empty())
                .map(|((l, _), c)| (l.clone(), c.clone())),
        )
    }

    /// Groups terms by the y partition: `g = Σ_μ g_μ(x) p_μ(y)`.
    pub fn by_y(&self) -> BTreeMap<IntegerPartition, SymFunc> {
        let mut groups: BTreeMap<IntegerPartition, Vec<(IntegerPartition, Rational)>> = BTreeMap::new();
        for ((l, m), c) in &self.terms {
            groups.entry(m.clone()).or_default().push((l.clone(), c.clone()));
        }
        groups
            .into_iter()
            .map(|(m, v)| (m, SymFunc::from_p_terms(v)))
            .collect()
    }

    /// Coefficients with the x side expressed in `basis`; y stays in p.
    pub fn convert_x(&self, basis: Basis) -> Result<BTreeMap<Key, Rational>> {
        let mut out = BTreeMap::new();
        for (m, gx) in self.by_y() {
            for (l, c) in gx.convert(basis)? {
                out.insert((l, m.clone()), c);
            }
        }
        Ok(out)
    }

    /// Human-readable form with the x side in `basis`.
    pub fn pretty(&self, basis: Basis) -> Result<String> {
        let coeffs = self.convert_x(basis)?;
        Ok(super::pretty_terms(coeffs.iter().map(|((l, m), c)| {
            let name = match (l.is_empty(), m.is_empty()) {
                (true, true) => String::new(),
                (false, true) => format!("{}{l}(x)", basis.name()),
                (true, false) => format!("p{m}(y)"),
                (false, false) => format!("{}{l}(x)*p{m}(y)", basis.name()),
            };
            (name, c)
        })))
    }

    /// Inverse of [`SymFunc2::convert_x`].
    pub fn from_x_basis(basis: Basis, coeffs: &BTreeMap<Key, Rational>) -> Result<Self> {
        let mut groups: BTreeMap<IntegerPartition, BTreeMap<IntegerPartition, Rational>> = BTreeMap::new();
        for ((l, m), c) in coeffs {
            groups.entry(m.clone()).or_default().insert(l.clone(), c.clone());
        }
        let mut out = SymFunc2::zero();
        for (m, gx) in groups {
            let x = SymFunc::from_basis(basis, &gx)?;
            out = &out + &SymFunc2::tensor(&x, &SymFunc::p(m));
        }
        Ok(out)
    }

    fn map_coeffs<F: Fn(&IntegerPartition, &IntegerPartition) -> Rational>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|((l, m), c)| ((l.clone(), m.clone()), c * f(l, m))))
    }

    /// `ω` in the x alphabet only.
    pub fn omega_x(&self) -> Self {
        self.map_coeffs(|l, _| rat(l.sgn() as i64))
    }

    /// `g(x; -y)`.
    pub fn negate_y(&self) -> Self {
        self.map_coeffs(|_, m| rat(if m.weight() % 2 == 0 { 1 } else { -1 }))
    }

    /// `p_n(y) ↦ -2 p_n(y)`.
    pub fn kappa_y(&self) -> Self {
        self.map_coeffs(|_, m| rat(-2).pow(m.len() as i32))
    }

    /// `p_m(x) ↦ p_m(x) + p_m(y)`, fixing `p_n(y)`.
    pub fn delta_xy(&self) -> Self {
        let mut out = BTreeMap::new();
        for ((l, m), c) in &self.terms {
            split_parts(l, &mut |xs, ys, w| {
                insert_term(&mut out, (xs, ys.union(m)), c * w);
            });
        }
        SymFunc2 { terms: out }
    }

    /// `ι = Δ ∘ ω_x ∘ (y ↦ -y)`.
    pub fn iota(&self) -> Self {
        self.negate_y().omega_x().delta_xy()
    }

    /// `Ξ ↦ Δ(κ(Ξ))`.
    pub fn xi_hat(&self) -> Self {
        self.kappa_y().delta_xy()
    }

    /// `p_λ(x) p_μ(y) ↦ i^{ℓ(λ)} j^{ℓ(μ)}`.
    pub fn specialize2(&self) -> BivarPoly {
        let mut out = BivarPoly::zero(["i", "j"]);
        for ((l, m), c) in &self.terms {
            out.add_term(l.len() as u32, m.len() as u32, c.clone());
        }
        out
    }
}

/// Visits every way of sending each part of `lam` to x or y, grouped by the
/// resulting pair of partitions, with the multiplicity as a weight.
fn split_parts<F: FnMut(IntegerPartition, IntegerPartition, Rational)>(lam: &IntegerPartition, f: &mut F) {
    let groups: Vec<(u32, usize)> = lam.multiplicities().into_iter().collect();
    fn rec<F: FnMut(IntegerPartition, IntegerPartition, Rational)>(
        groups: &[(u32, usize)],
        xs: &mut Vec<u32>,
        ys: &mut Vec<u32>,
        w: Rational,
        f: &mut F,
    ) {
        let Some((&(part, r), rest)) = groups.split_first() else {
            f(
                IntegerPartition::from_parts(xs.iter().copied()),
                IntegerPartition::from_parts(ys.iter().copied()),
                w,
            );
            return;
        };
        for k in 0..=r {
            let c = Rational::from_integer(BigInt::from(binomial(r, k)));
            let (xl, yl) = (xs.len(), ys.len());
            xs.extend(std::iter::repeat(part).take(r - k));
            ys.extend(std::iter::repeat(part).take(k));
            rec(rest, xs, ys, &w * c, f);
            xs.truncate(xl);
            ys.truncate(yl);
        }
    }
    rec(&groups, &mut Vec::new(), &mut Vec::new(), rat(1), f);
}

/// `g(x/y)`: `p_n ↦ p_n(x) + (-1)^{n-1} p_n(y)`.
pub fn superficiate(g: &SymFunc) -> SymFunc2 {
    let mut out = BTreeMap::new();
    for (l, c) in g.terms() {
        split_parts(l, &mut |xs, ys, w| {
            let s = if (ys.weight() - ys.len()) % 2 == 0 { 1 } else { -1 };
            insert_term(&mut out, (xs, ys), c * w * rat(s));
        });
    }
    SymFunc2 { terms: out }
}

pub fn omega_x(g: &SymFunc2) -> SymFunc2 {
    g.omega_x()
}

pub fn negate_y(g: &SymFunc2) -> SymFunc2 {
    g.negate_y()
}

pub fn delta_xy(g: &SymFunc2) -> SymFunc2 {
    g.delta_xy()
}

pub fn kappa_y(g: &SymFunc2) -> SymFunc2 {
    g.kappa_y()
}

pub fn specialize2(g: &SymFunc2) -> BivarPoly {
    g.specialize2()
}

impl Add for &SymFunc2 {
    type Output = SymFunc2;

    fn add(self, rhs: &SymFunc2) -> SymFunc2 {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            insert_term(&mut terms, k.clone(), c.clone());
        }
        SymFunc2 { terms }
    }
}

impl Sub for &SymFunc2 {
    type Output = SymFunc2;

    fn sub(self, rhs: &SymFunc2) -> SymFunc2 {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc2 {
    type Output = SymFunc2;

    fn neg(self) -> SymFunc2 {
        self.scale(&rat(-1))
    }
}

impl Mul for &SymFunc2 {
    type Output = SymFunc2;

    fn mul(self, rhs: &SymFunc2) -> SymFunc2 {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &rhs.terms {
                insert_term(&mut terms, (a.union(x), b.union(y)), c * d);
            }
        }
        SymFunc2 { terms }
    }
}

impl std::iter::Sum for SymFunc2 {
    fn sum<I: Iterator<Item = SymFunc2>>(iter: I) -> SymFunc2 {
        iter.fold(SymFunc2::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for SymFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = super::pretty_terms(self.terms.iter().map(|((l, m), c)| {
            let name = match (l.is_empty(), m.is_empty()) {
                (true, true) => String::new(),
                (false, true) => format!("p{l}(x)"),
                (true, false) => format!("p{m}(y)"),
                (false, false) => format!("p{l}(x)*p{m}(y)"),
            };
            (name, c)
        }));
        f.write_str(&s)
    }
}
