//! Multivariate polynomials truncated above a fixed total degree.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{insert_term, rat};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedMultiPoly {
    num_vars: usize,
    max_degree: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncatedMultiPoly {
    pub fn zero(num_vars: usize, max_degree: u32) -> Self {
        TruncatedMultiPoly {
            num_vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, max_degree: u32) -> Self {
        let mut p = Self::zero(num_vars, max_degree);
        p.add_term(vec![0; num_vars], rat(1));
        p
    }

    /// The indeterminate `a_{k+1}` (0-based `k`).
    pub fn var(num_vars: usize, max_degree: u32, k: usize) -> Self {
        let mut p = Self::zero(num_vars, max_degree);
        let mut e = vec![0; num_vars];
        e[k] = 1;
        p.add_term(e, rat(1));
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    /// Adds `c · a^e`, silently dropping monomials above the truncation degree.
    pub fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        assert_eq!(e.len(), self.num_vars, "exponent vector length");
        if e.iter().sum::<u32>() <= self.max_degree {
            insert_term(&mut self.terms, e, c);
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.num_vars])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.num_vars, self.max_degree)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.num_vars, self.max_degree);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    fn check(&self, other: &Self) {
        assert!(
            self.num_vars == other.num_vars && self.max_degree == other.max_degree,
            "truncated polynomials live in different rings"
        );
    }

    /// Inverse of a series with constant term 1, as `Σ_k (-u)^k` for `u = self - 1`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::NotInvertible);
        }
        let one = Self::one(self.num_vars, self.max_degree);
        let neg_u = &one - self;
        let mut out = one.clone();
        let mut power = one;
        for _ in 0..self.max_degree {
            power = &power * &neg_u;
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }
}

impl Add for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn add(self, rhs: &TruncatedMultiPoly) -> TruncatedMultiPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn neg(self) -> TruncatedMultiPoly {
        self.scale(&rat(-1))
    }
}

impl Sub for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn sub(self, rhs: &TruncatedMultiPoly) -> TruncatedMultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn mul(self, rhs: &TruncatedMultiPoly) -> TruncatedMultiPoly {
        self.check(rhs);
        let mut out = TruncatedMultiPoly::zero(self.num_vars, self.max_degree);
        for (a, c) in &self.terms {
            let da: u32 = a.iter().sum();
            for (b, d) in &rhs.terms {
                if da + b.iter().sum::<u32>() > self.max_degree {
                    continue;
                }
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d);
            }
        }
        out
    }
}

/// The inverse of `Σ_n alpha[n]`, truncated at total degree `n_max`.
pub fn csv_series(alpha: &[TruncatedMultiPoly], n_max: u32) -> Result<TruncatedMultiPoly> {
    let first = alpha.first().ok_or(Error::NotInvertible)?;
    if !first.is_one() {
        return Err(Error::NotInvertible);
    }
    let mut total = TruncatedMultiPoly::zero(first.num_vars(), n_max);
    for a in alpha {
        for (e, c) in a.terms() {
            total.add_term(e.clone(), c.clone());
        }
    }
    total.inverse()
}
