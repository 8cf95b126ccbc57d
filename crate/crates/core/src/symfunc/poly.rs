//! Exact bivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{insert_term, rat};
use crate::error::{Error, Result};
use crate::Rational;

/// A polynomial in two named variables. Keys are `(e0, e1)` exponent pairs.
///
/// Arithmetic operators panic when the variable names differ; use
/// [`BivarPoly::ensure_same_vars`] first when mixing sources.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    vars: [String; 2],
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero(vars: [&str; 2]) -> Self {
        BivarPoly {
            vars: vars.map(str::to_owned),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: [&str; 2], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(0, 0, c);
        p
    }

    /// The variable `vars[k]` itself.
    pub fn var(vars: [&str; 2], k: usize) -> Self {
        let mut p = Self::zero(vars);
        if k == 0 {
            p.add_term(1, 0, rat(1));
        } else {
            p.add_term(0, 1, rat(1));
        }
        p
    }

    /// `i(i-1)…(i-k+1)` in the variables `(i, j)`.
    pub fn falling_factorial_i(k: u32) -> Self {
        let i = Self::var(["i", "j"], 0);
        i.falling(k)
    }

    /// `self (self - 1) … (self - k + 1)`.
    pub fn falling(&self, k: u32) -> Self {
        let mut out = self.with_constant(rat(1));
        for t in 0..k {
            out = &out * &(self - &self.with_constant(rat(t as i64)));
        }
        out
    }

    /// `self (self + 1) … (self + k - 1)`.
    pub fn rising(&self, k: u32) -> Self {
        let mut out = self.with_constant(rat(1));
        for t in 0..k {
            out = &out * &(self + &self.with_constant(rat(t as i64)));
        }
        out
    }

    /// The binomial polynomial `C(self, k) = self^{\underline k} / k!`.
    pub fn binomial(&self, k: u32) -> Self {
        let kf = Rational::from_integer(crate::combinatorics::factorial(k as usize).into());
        self.falling(k).scale(&(Rational::one() / kf))
    }

    fn with_constant(&self, c: Rational) -> Self {
        let mut p = BivarPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        p.add_term(0, 0, c);
        p
    }

    pub fn vars(&self) -> [&str; 2] {
        [self.vars[0].as_str(), self.vars[1].as_str()]
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn coefficient(&self, e0: u32, e1: u32) -> Rational {
        self.terms.get(&(e0, e1)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e0: u32, e1: u32, c: Rational) {
        insert_term(&mut self.terms, (e0, e1), c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn ensure_same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(self.vars.to_vec(), other.vars.to_vec()));
        }
        Ok(())
    }

    pub fn rename(&self, vars: [&str; 2]) -> Self {
        BivarPoly {
            vars: vars.map(str::to_owned),
            terms: self.terms.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = self.with_constant(Rational::zero());
        for (&(a, b), v) in &self.terms {
            p.add_term(a, b, v * c);
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(self.with_constant(rat(1)), |acc, _| &acc * self)
    }

    pub fn evaluate(&self, x0: &Rational, x1: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(a, b), c)| {
            acc + c * num::pow(x0.clone(), a as usize) * num::pow(x1.clone(), b as usize)
        })
    }

    /// Replaces the two variables by the given polynomials, which must share
    /// their own variable names; the result lives in those names.
    pub fn substitute(&self, s0: &BivarPoly, s1: &BivarPoly) -> Result<BivarPoly> {
        s0.ensure_same_vars(s1)?;
        let mut out = s0.with_constant(Rational::zero());
        let mut pow0 = vec![s0.with_constant(rat(1))];
        let mut pow1 = vec![s0.with_constant(rat(1))];
        for (&(a, b), c) in &self.terms {
            while pow0.len() <= a as usize {
                let next = pow0.last().unwrap() * s0;
                pow0.push(next);
            }
            while pow1.len() <= b as usize {
                let next = pow1.last().unwrap() * s1;
                pow1.push(next);
            }
            out = &out + &(&pow0[a as usize] * &pow1[b as usize]).scale(c);
        }
        Ok(out)
    }

    /// Exact quotient by `vars[k] + c`; errors when the remainder is nonzero.
    pub fn div_linear(&self, k: usize, c: &Rational) -> Result<BivarPoly> {
        // synthetic division in vars[k], coefficients polynomials in the other variable
        let split = |(a, b): (u32, u32)| if k == 0 { (a, b) } else { (b, a) };
        let join = |main: u32, other: u32| if k == 0 { (main, other) } else { (other, main) };
        let mut rows: BTreeMap<u32, BTreeMap<u32, Rational>> = BTreeMap::new();
        for (&e, v) in &self.terms {
            let (main, other) = split(e);
            rows.entry(main).or_default().insert(other, v.clone());
        }
        let mut quotient = self.with_constant(Rational::zero());
        let Some(&top) = rows.keys().next_back() else {
            return Ok(quotient);
        };
        let mut carry: BTreeMap<u32, Rational> = BTreeMap::new();
        for main in (0..=top).rev() {
            // coefficient of vars[k]^main after subtracting earlier multiples
            let mut cur = rows.remove(&main).unwrap_or_default();
            for (o, v) in &carry {
                insert_term(&mut cur, *o, -(v * c));
            }
            if main == 0 {
                if !cur.is_empty() {
                    return Err(Error::InexactDivision);
                }
                break;
            }
            for (o, v) in &cur {
                let (a, b) = join(main - 1, *o);
                quotient.add_term(a, b, v.clone());
            }
            carry = cur;
        }
        Ok(quotient)
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn monomial_name(&self, a: u32, b: u32) -> String {
        let mut parts = Vec::new();
        for (e, v) in [(a, &self.vars[0]), (b, &self.vars[1])] {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // highest total degree first, then by first exponent
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|x, y| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        let s = super::pretty_terms(keys.iter().map(|&(a, b)| (self.monomial_name(a, b), &self.terms[&(a, b)])));
        f.write_str(&s)
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        self.ensure_same_vars(rhs).expect("polynomial variables differ");
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        self + &(-rhs)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        self.scale(&rat(-1))
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        self.ensure_same_vars(rhs).expect("polynomial variables differ");
        let mut out = self.with_constant(Rational::zero());
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term(a + x, b + y, c * d);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ij() -> (BivarPoly, BivarPoly) {
        (BivarPoly::var(["i", "j"], 0), BivarPoly::var(["i", "j"], 1))
    }

    #[test]
    fn falling_and_rising() {
        let (i, _) = ij();
        assert_eq!(i.falling(2).to_string(), "i^2 - i");
        assert_eq!(i.rising(2).to_string(), "i^2 + i");
        assert_eq!(i.falling(0).to_string(), "1");
        let c = i.binomial(2);
        assert_eq!(c.evaluate(&rat(5), &rat(0)), rat(10));
    }

    #[test]
    fn linear_division() {
        let (i, j) = ij();
        let f = &(&i + &j.scale(&rat(3))) * &(&j + &i.with_constant(rat(1)));
        assert_eq!(f.div_linear(1, &rat(1)).unwrap(), &i + &j.scale(&rat(3)));
        let g = &(&i * &j) * &(&i - &i.with_constant(rat(2)));
        assert_eq!(g.div_linear(0, &rat(-2)).unwrap(), &i * &j);
        assert!(i.div_linear(1, &rat(1)).is_err());
        assert!(BivarPoly::zero(["i", "j"]).div_linear(0, &rat(5)).unwrap().is_zero());
    }

    #[test]
    fn substitution_changes_variables() {
        let (i, j) = ij();
        let p = &(&i * &i) + &j;
        let m = BivarPoly::var(["m", "n"], 0);
        let n = BivarPoly::var(["m", "n"], 1);
        let q = p.substitute(&(&m + &n), &n).unwrap();
        assert_eq!(q.vars(), ["m", "n"]);
        assert_eq!(q.to_string(), "m^2 + 2*m*n + n^2 + n");
        assert!(p.substitute(&m, &i).is_err());
    }

    #[test]
    #[should_panic(expected = "polynomial variables differ")]
    fn mixing_variables_panics() {
        let (i, _) = ij();
        let _ = &i + &BivarPoly::var(["m", "n"], 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = BivarPoly> {
            proptest::collection::vec((0u32..4, 0u32..4, -9i64..9), 0..6).prop_map(|v| {
                let mut p = BivarPoly::zero(["i", "j"]);
                for (a, b, c) in v {
                    p.add_term(a, b, rat(c));
                }
                p
            })
        }

        proptest! {
            #[test]
            fn evaluation_is_a_ring_map(p in arb_poly(), q in arb_poly(), x in -5i64..5, y in -5i64..5) {
                let (x, y) = (rat(x), rat(y));
                prop_assert_eq!((&p * &q).evaluate(&x, &y), p.evaluate(&x, &y) * q.evaluate(&x, &y));
                prop_assert_eq!((&p + &q).evaluate(&x, &y), p.evaluate(&x, &y) + q.evaluate(&x, &y));
            }

            #[test]
            fn substitution_commutes_with_evaluation(p in arb_poly(), x in -4i64..4, y in -4i64..4) {
                let (i, j) = (BivarPoly::var(["i", "j"], 0), BivarPoly::var(["i", "j"], 1));
                let s0 = &i + &j;
                let s1 = &i - &j;
                let q = p.substitute(&s0, &s1).unwrap();
                let (x, y) = (rat(x), rat(y));
                prop_assert_eq!(q.evaluate(&x, &y), p.evaluate(&(&x + &y), &(&x - &y)));
            }
        }
    }
}
