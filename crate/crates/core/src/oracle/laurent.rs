use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("division by the zero polynomial")]
    ByZero,
    #[error("division leaves a nonzero remainder (at exponent {0:?})")]
    Inexact(Vec<i64>),
}

/// A Laurent polynomial in a fixed number of variables with big-integer
/// coefficients. Exponents may be negative; zero coefficients are never
/// stored. Terms are kept in lexicographic exponent order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], BigInt::one())
    }

    pub fn monomial(exponents: Vec<i64>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[i64]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<i64>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.vars, "exponent vector has the wrong length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&[i64], &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (e.as_slice(), c))
    }

    /// Value with every variable set to 1.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    /// Applies `f` to every exponent vector, merging colliding terms.
    pub fn map_exponents<F: FnMut(&[i64]) -> Vec<i64>>(&self, mut f: F) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Adds `coeff * x^shift * other` in place.
    pub fn add_shifted(&mut self, other: &Self, shift: &[i64], coeff: &BigInt) {
        for (e, c) in &other.terms {
            let exps = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(exps, c * coeff);
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Long division on lexicographic leading terms. In an exact division the
    /// per-variable degree ranges of the quotient are pinned by those of the
    /// dividend and divisor, so any quotient term outside that box proves a
    /// nonzero remainder and also bounds the loop.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, DivisionError> {
        let (lead_exp, lead_coeff) = divisor.leading_term().ok_or(DivisionError::ByZero)?;
        let (lead_exp, lead_coeff) = (lead_exp.to_vec(), lead_coeff.clone());
        let mut quotient = Self::zero(self.vars);
        if self.is_zero() {
            return Ok(quotient);
        }
        let (num_lo, num_hi) = self.degree_box();
        let (den_lo, den_hi) = divisor.degree_box();
        let lo: Vec<i64> = num_lo.iter().zip(&den_lo).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = num_hi.iter().zip(&den_hi).map(|(a, b)| a - b).collect();
        let mut rem = self.clone();
        while let Some((exp, coeff)) = rem.leading_term() {
            let q_exp: Vec<i64> = exp.iter().zip(&lead_exp).map(|(a, b)| a - b).collect();
            let (q_coeff, r) = coeff.div_rem(&lead_coeff);
            let inside = q_exp.iter().enumerate().all(|(i, &d)| lo[i] <= d && d <= hi[i]);
            if !r.is_zero() || !inside {
                return Err(DivisionError::Inexact(exp.to_vec()));
            }
            rem.add_shifted(divisor, &q_exp, &-q_coeff.clone());
            quotient.add_term(q_exp, q_coeff);
        }
        Ok(quotient)
    }

    /// Per-variable minimum and maximum exponents.
    fn degree_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.vars];
        let mut hi = vec![i64::MIN; self.vars];
        for e in self.terms.keys() {
            for (i, &d) in e.iter().enumerate() {
                lo[i] = lo[i].min(d);
                hi[i] = hi[i].max(d);
            }
        }
        (lo, hi)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_shifted(rhs, e, c);
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "{}x^{:?}", c.abs(), e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
