//! Quasi-symmetric functions of a fixed degree.
//!
//! Subsets of `[d-1]` are bit masks (bit `j-1` set iff `j` is present); the
//! monomial basis `M_T` is stored and the fundamental basis `Q_S` is derived.

use std::collections::BTreeMap;

use num::Zero;

use super::{insert_term, rat, Basis, SymFunc};
use crate::combinatorics::{mask_composition, IntegerPartition};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSymFunc {
    degree: usize,
    terms: BTreeMap<u32, Rational>,
}

fn full_mask(d: usize) -> u32 {
    if d == 0 {
        0
    } else {
        (1u32 << (d - 1)) - 1
    }
}

/// Iterates over all submasks of `mask`, including 0 and `mask`.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

fn check_mask(mask: u32, d: usize) -> Result<()> {
    if mask & !full_mask(d) != 0 {
        let element = (32 - mask.leading_zeros()) as usize;
        return Err(Error::SubsetOutOfRange {
            element,
            max: d.saturating_sub(1),
        });
    }
    Ok(())
}

impl QSymFunc {
    pub fn zero(degree: usize) -> Self {
        QSymFunc {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients in the M basis, keyed by subset mask.
    pub fn m_terms(&self) -> &BTreeMap<u32, Rational> {
        &self.terms
    }

    pub fn from_m_terms(degree: usize, terms: BTreeMap<u32, Rational>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (mask, c) in terms {
            check_mask(mask, degree)?;
            insert_term(&mut out.terms, mask, c);
        }
        Ok(out)
    }

    /// `Q_{S,d} = Σ_{T ⊇ S} M_T`.
    pub fn fundamental(s: u32, d: usize) -> Result<Self> {
        check_mask(s, d)?;
        let free = full_mask(d) & !s;
        let terms = submasks(free).map(|extra| (s | extra, rat(1))).collect();
        Ok(QSymFunc { degree: d, terms })
    }

    /// `Σ b_S Q_S`.
    pub fn from_fundamental(d: usize, b: &BTreeMap<u32, Rational>) -> Result<Self> {
        let mut out = Self::zero(d);
        for (&s, c) in b {
            check_mask(s, d)?;
            let free = full_mask(d) & !s;
            for extra in submasks(free) {
                insert_term(&mut out.terms, s | extra, c.clone());
            }
        }
        Ok(out)
    }

    /// Coefficients `b_S` in the fundamental basis, via
    /// `b_U = Σ_{T ⊆ U} (-1)^{|U - T|} c_T`.
    pub fn fundamental_coeffs(&self) -> BTreeMap<u32, Rational> {
        let mut out = BTreeMap::new();
        for u in 0..=full_mask(self.degree) {
            let mut b = Rational::zero();
            for t in submasks(u) {
                if let Some(c) = self.terms.get(&t) {
                    if (u & !t).count_ones() % 2 == 0 {
                        b += c;
                    } else {
                        b -= c;
                    }
                }
            }
            if !b.is_zero() {
                out.insert(u, b);
            }
        }
        out
    }

    /// The M expansion of a homogeneous symmetric function of degree `d`:
    /// the coefficient of `M_T` is that of `m_λ` with `λ` the sorted
    /// composition of `T`.
    pub fn from_sym(g: &SymFunc, d: usize) -> Result<Self> {
        if !g.is_homogeneous_of(d) {
            return Err(Error::NotHomogeneous(d));
        }
        let m = g.convert(Basis::M)?;
        let mut out = Self::zero(d);
        for mask in 0..=full_mask(d) {
            let lam = IntegerPartition::from_parts(mask_composition(mask, d));
            if let Some(c) = m.get(&lam) {
                out.terms.insert(mask, c.clone());
            }
        }
        Ok(out)
    }

    /// Reassembles a symmetric function; fails if the coefficients are not
    /// constant on rearrangement classes of compositions.
    pub fn to_sym(&self) -> Result<SymFunc> {
        let mut m: BTreeMap<IntegerPartition, Rational> = BTreeMap::new();
        for mask in 0..=full_mask(self.degree) {
            let lam = IntegerPartition::from_parts(mask_composition(mask, self.degree));
            let c = self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero);
            match m.get(&lam) {
                Some(prev) if *prev != c => return Err(Error::NotSymmetric),
                Some(_) => {}
                None => {
                    m.insert(lam, c);
                }
            }
        }
        m.retain(|_, c| !c.is_zero());
        SymFunc::from_basis(Basis::M, &m)
    }

    pub fn is_symmetric(&self) -> bool {
        self.to_sym().is_ok()
    }
}

/// `Q_{S,d}` in the M basis.
pub fn q_fundamental(s: u32, d: usize) -> Result<QSymFunc> {
    QSymFunc::fundamental(s, d)
}

/// Coefficients `b_S` with `g = Σ b_S Q_{S,d}`.
pub fn sym_to_q(g: &SymFunc, d: usize) -> Result<BTreeMap<u32, Rational>> {
    Ok(QSymFunc::from_sym(g, d)?.fundamental_coeffs())
}

/// Expands `g` in the fundamental basis and sends `Q_S ↦ Q_{[d-1] - S}`.
pub fn q_complement_map(g: &SymFunc, d: usize) -> Result<SymFunc> {
    let full = full_mask(d);
    let b: BTreeMap<u32, Rational> = sym_to_q(g, d)?.into_iter().map(|(s, c)| (full & !s, c)).collect();
    QSymFunc::from_fundamental(d, &b)?.to_sym()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{integer_partitions, subset_to_mask};

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn fundamental_examples() {
        let q0 = QSymFunc::fundamental(0, 2).unwrap();
        assert_eq!(q0.m_terms().len(), 2);
        assert_eq!(q0.to_sym().unwrap(), SymFunc::h(ip(&[2])).unwrap());
        let q1 = QSymFunc::fundamental(1, 2).unwrap();
        assert_eq!(q1.to_sym().unwrap(), SymFunc::e(ip(&[2])).unwrap());
        assert!(QSymFunc::fundamental(0b100, 3).is_err());
    }

    #[test]
    fn m_basis_expansion_signs() {
        // m_λ = Σ_T Σ_{S ⊆ T, type S = λ} (-1)^{|T|-|S|} Q_T
        for d in 1..=5 {
            for lam in integer_partitions(d) {
                let b = sym_to_q(&SymFunc::m(lam.clone()).unwrap(), d).unwrap();
                for t in 0..=full_mask(d) {
                    let mut expected = rat(0);
                    for s in submasks(t) {
                        if IntegerPartition::from_parts(mask_composition(s, d)) == lam {
                            expected += rat(if (t & !s).count_ones() % 2 == 0 { 1 } else { -1 });
                        }
                    }
                    assert_eq!(b.get(&t).cloned().unwrap_or_default(), expected);
                }
            }
        }
    }

    #[test]
    fn complement_map_examples() {
        let h2 = SymFunc::h(ip(&[2])).unwrap();
        assert_eq!(q_complement_map(&h2, 2).unwrap(), SymFunc::e(ip(&[2])).unwrap());
        let e4 = SymFunc::e(ip(&[4])).unwrap();
        assert_eq!(q_complement_map(&e4, 4).unwrap(), SymFunc::h(ip(&[4])).unwrap());
        let s21 = SymFunc::s(ip(&[2, 1])).unwrap();
        assert_eq!(q_complement_map(&s21, 3).unwrap(), s21);
    }

    #[test]
    fn complement_map_is_omega() {
        for d in 0..=6 {
            for lam in integer_partitions(d) {
                let g = SymFunc::s(lam.clone()).unwrap();
                assert_eq!(q_complement_map(&g, d).unwrap(), g.omega(), "{lam}");
                let g = SymFunc::p(lam);
                assert_eq!(q_complement_map(&g, d).unwrap(), g.omega());
            }
        }
    }

    #[test]
    fn errors() {
        let g = &SymFunc::p(ip(&[2])) + &SymFunc::p(ip(&[1]));
        assert_eq!(sym_to_q(&g, 2), Err(Error::NotHomogeneous(2)));
        let mut t = BTreeMap::new();
        t.insert(subset_to_mask(&[1], 3).unwrap(), rat(1));
        assert_eq!(QSymFunc::from_m_terms(3, t).unwrap().to_sym(), Err(Error::NotSymmetric));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn q_round_trip(d in 1usize..=6, seed in proptest::collection::vec(-5i64..5, 11)) {
                let parts = integer_partitions(d);
                let g = SymFunc::from_p_terms(parts.iter().cloned().zip(seed.iter().map(|&c| rat(c))));
                let b = sym_to_q(&g, d).unwrap();
                prop_assert_eq!(QSymFunc::from_fundamental(d, &b).unwrap().to_sym().unwrap(), g);
            }
        }
    }
}
