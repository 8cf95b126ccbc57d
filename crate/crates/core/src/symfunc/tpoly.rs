//! Polynomials in a single variable `t` with symmetric-function coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::SymFunc;
use crate::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    terms: BTreeMap<u32, SymFunc>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `t^k · g`.
    pub fn add_term(&mut self, k: u32, g: &SymFunc) {
        let next = match self.terms.remove(&k) {
            Some(prev) => &prev + g,
            None => g.clone(),
        };
        if !next.is_zero() {
            self.terms.insert(k, next);
        }
    }

    pub fn terms(&self) -> &BTreeMap<u32, SymFunc> {
        &self.terms
    }

    pub fn coefficient(&self, k: u32) -> SymFunc {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Substitutes a rational value for `t`.
    pub fn evaluate(&self, t: &Rational) -> SymFunc {
        let mut out = SymFunc::zero();
        for (&k, g) in &self.terms {
            out = &out + &g.scale(&num::pow(t.clone(), k as usize));
        }
        out
    }

    /// `(λ, k) ↦ coefficient of t^k p_λ`, in partition order then `k`.
    pub fn by_partition(&self) -> BTreeMap<crate::combinatorics::IntegerPartition, BTreeMap<u32, Rational>> {
        let mut out: BTreeMap<_, BTreeMap<u32, Rational>> = BTreeMap::new();
        for (&k, g) in &self.terms {
            for (l, c) in g.terms() {
                out.entry(l.clone()).or_default().insert(k, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let pieces: Vec<String> = self
            .terms
            .iter()
            .map(|(k, g)| match k {
                0 => format!("({g})"),
                1 => format!("t*({g})"),
                _ => format!("t^{k}*({g})"),
            })
            .collect();
        f.write_str(&pieces.join(" + "))
    }
}
