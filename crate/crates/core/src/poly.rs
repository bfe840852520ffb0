//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration (and every
//! serialized form) is lexicographic on exponents. Zero coefficients are never
//! stored. Variables are numbered `x_1 .. x_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type ExponentVector = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePolynomial<T> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, T>,
}

impl<T: Scalar> SparsePolynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`, `1 <= i <= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable x_{i} outside 1..={nvars}");
        let mut exp = vec![0; nvars];
        exp[i - 1] = 1;
        Self::monomial(exp, T::one())
    }

    pub fn monomial(exp: ExponentVector, c: T) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, T)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::NvarsMismatch { left: nvars, right: exp.len() });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &T)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<ExponentVector, T> {
        self.terms
    }

    /// Adds `c·x^exp` in place.
    pub fn add_term(&mut self, exp: ExponentVector, c: T) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `Coeff(e, f)`. Exponents of a different length are compared up to
    /// trailing zeros.
    pub fn coeff(&self, exp: &[u32]) -> T {
        let key = normalize_exponent(exp, self.nvars);
        key.and_then(|k| self.terms.get(&k).cloned()).unwrap_or_else(T::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| exp_weight(e)).max()
    }

    /// Degree of every term, if they all agree (`None` for the zero polynomial
    /// or a non-homogeneous one).
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|e| exp_weight(e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn max_abs_coeff(&self) -> T {
        self.terms.values().map(|c| c.abs()).fold(T::zero(), |acc, c| {
            if c > acc { c } else { acc }
        })
    }

    /// Highest variable index that occurs with a positive exponent.
    pub fn support_nvars(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|e| e.iter().rposition(|&x| x > 0).map(|p| p + 1))
            .max()
            .unwrap_or(0)
    }

    /// Re-embeds into `nvars` variables; shrinking fails if a dropped variable
    /// is used.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if nvars < self.support_nvars() {
            return Err(Error::NvarsMismatch { left: self.support_nvars(), right: nvars });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars, 0);
                (e, c.clone())
            })
            .collect();
        Ok(SparsePolynomial { nvars, terms })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1.clone() * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c)).collect();
        SparsePolynomial { nvars: self.nvars, terms }
    }

    /// Multiplies by the monomial `x^exp`.
    pub fn shift(&self, exp: &[u32]) -> Self {
        assert_eq!(exp.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), v.clone()))
            .collect();
        SparsePolynomial { nvars: self.nvars, terms }
    }

    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> SparsePolynomial<U> {
        let mut out = SparsePolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// `Σ Coeff(e, f)·a^e`, exact.
    pub fn evaluate(&self, point: &[T]) -> Result<T> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        let mut powers: Vec<Vec<T>> = vec![vec![T::one()]; self.nvars];
        let mut acc = T::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (var, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[var];
                while table.len() <= e as usize {
                    let next = table.last().unwrap().clone() * &point[var];
                    table.push(next);
                }
                term *= &table[e as usize];
            }
            acc += term;
        }
        Ok(acc)
    }

    /// `f^{χ_i}`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Result<Self> {
        self.check_adjacent(i)?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i - 1, i);
                (e, c.clone())
            })
            .collect();
        Ok(SparsePolynomial { nvars: self.nvars, terms })
    }

    /// The divided difference `∂_i f = (f − f^{χ_i}) / (x_i − x_{i+1})`.
    ///
    /// Each pair `x_i^p x_{i+1}^q` is divided in closed form; the quotient is then
    /// multiplied back and compared against the numerator, and any remainder
    /// aborts.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        self.check_adjacent(i)?;
        let (a, b) = (i - 1, i);
        let mut quotient = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let (p, q) = (exp[a], exp[b]);
            if p == q {
                continue;
            }
            // (x^p y^q − x^q y^p)/(x − y) = ± Σ_{r} x^{hi−1−r} y^{lo+r}
            let (hi, lo, sign) = if p > q { (p, q, c.clone()) } else { (q, p, -c.clone()) };
            for r in 0..(hi - lo) {
                let mut e = exp.clone();
                e[a] = hi - 1 - r;
                e[b] = lo + r;
                quotient.add_term(e, sign.clone());
            }
        }
        let numerator = self.checked_sub(&self.swap_vars(i)?)?;
        let divisor = Self::var(self.nvars, i).checked_sub(&Self::var(self.nvars, i + 1))?;
        let remainder = numerator.checked_sub(&quotient.checked_mul(&divisor)?)?;
        assert!(
            remainder.is_zero(),
            "divided difference ∂_{i} left a nonzero remainder: {remainder}"
        );
        Ok(quotient)
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    fn check_adjacent(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.nvars {
            return Err(Error::IndexOutOfRange(format!(
                "∂_{i} needs 1 <= i <= {}",
                self.nvars.saturating_sub(1)
            )));
        }
        Ok(())
    }
}

pub fn add<T: Scalar>(f: &SparsePolynomial<T>, g: &SparsePolynomial<T>) -> Result<SparsePolynomial<T>> {
    f.checked_add(g)
}

pub fn sub<T: Scalar>(f: &SparsePolynomial<T>, g: &SparsePolynomial<T>) -> Result<SparsePolynomial<T>> {
    f.checked_sub(g)
}

pub fn mul<T: Scalar>(f: &SparsePolynomial<T>, g: &SparsePolynomial<T>) -> Result<SparsePolynomial<T>> {
    f.checked_mul(g)
}

pub fn scale<T: Scalar>(f: &SparsePolynomial<T>, c: &T) -> SparsePolynomial<T> {
    f.scale(c)
}

pub fn evaluate<T: Scalar>(f: &SparsePolynomial<T>, point: &[T]) -> Result<T> {
    f.evaluate(point)
}

pub fn coeff<T: Scalar>(f: &SparsePolynomial<T>, exp: &[u32]) -> T {
    f.coeff(exp)
}

pub fn divided_difference<T: Scalar>(f: &SparsePolynomial<T>, i: usize) -> Result<SparsePolynomial<T>> {
    f.divided_difference(i)
}

pub(crate) fn exp_weight(exp: &[u32]) -> u64 {
    exp.iter().map(|&e| u64::from(e)).sum()
}

fn normalize_exponent(exp: &[u32], nvars: usize) -> Option<ExponentVector> {
    if exp.len() <= nvars {
        let mut e = exp.to_vec();
        e.resize(nvars, 0);
        Some(e)
    } else if exp[nvars..].iter().all(|&x| x == 0) {
        Some(exp[..nvars].to_vec())
    } else {
        None
    }
}

impl<T: Scalar> Add for &SparsePolynomial<T> {
    type Output = SparsePolynomial<T>;

    fn add(self, rhs: Self) -> SparsePolynomial<T> {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl<T: Scalar> Sub for &SparsePolynomial<T> {
    type Output = SparsePolynomial<T>;

    fn sub(self, rhs: Self) -> SparsePolynomial<T> {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl<T: Scalar> Mul for &SparsePolynomial<T> {
    type Output = SparsePolynomial<T>;

    fn mul(self, rhs: Self) -> SparsePolynomial<T> {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl<T: Scalar> Neg for &SparsePolynomial<T> {
    type Output = SparsePolynomial<T>;

    fn neg(self) -> SparsePolynomial<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> fmt::Display for SparsePolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest exponents first reads more naturally.
        for (idx, (exp, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = exp.iter().all(|&e| e == 0);
            if is_const || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
                if !is_const {
                    f.write_str("*")?;
                }
            }
            let mut first = true;
            for (var, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", var + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = SparsePolynomial<BigInt>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn arithmetic_examples() {
        let x1 = x(2, 1);
        let x2 = x(2, 2);
        assert!((&x1 + &(-&x1)).is_zero());

        let s = &x1 + &x2;
        let sq = &s * &s;
        let expected = P::from_terms(
            2,
            vec![(vec![2, 0], big(1)), (vec![1, 1], big(2)), (vec![0, 2], big(1))],
        )
        .unwrap();
        assert_eq!(sq, expected);

        let f = P::from_terms(2, vec![(vec![2, 0], big(1)), (vec![1, 1], big(1)), (vec![0, 2], big(1))])
            .unwrap();
        let g = P::monomial(vec![1, 1], big(1));
        let h = P::from_terms(2, vec![(vec![2, 0], big(1)), (vec![0, 2], big(1))]).unwrap();
        assert_eq!(f.checked_sub(&g).unwrap(), h);
    }

    #[test]
    fn nvars_mismatch_is_an_error() {
        let err = x(2, 1).checked_add(&x(3, 1)).unwrap_err();
        assert!(matches!(err, Error::NvarsMismatch { left: 2, right: 3 }));
        assert!(x(2, 1).checked_mul(&x(3, 1)).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let s = &x(2, 1) + &x(2, 2);
        assert_eq!(s.evaluate(&[big(2), big(3)]).unwrap(), big(5));
        assert_eq!(P::zero(2).evaluate(&[big(7), big(9)]).unwrap(), big(0));
        let m = P::monomial(vec![2, 1], big(1));
        assert_eq!(m.evaluate(&[big(2), big(3)]).unwrap(), big(12));
        assert!(m.evaluate(&[big(2)]).is_err());
    }

    #[test]
    fn coeff_examples() {
        let s = &x(2, 1) + &x(2, 2);
        assert_eq!(s.coeff(&[1, 0]), big(1));
        assert_eq!(s.coeff(&[2, 0]), big(0));
        let t = P::from_terms(2, vec![(vec![1, 0], big(5)), (vec![0, 1], big(3))]).unwrap();
        assert_eq!(t.coeff(&[0, 1]), big(3));
        assert_eq!(t.coeff(&[0, 1, 0]), big(3));
        assert_eq!(t.coeff(&[0, 1, 1]), big(0));
    }

    #[test]
    fn divided_difference_examples() {
        let f = P::monomial(vec![2, 1], big(1));
        assert_eq!(f.divided_difference(1).unwrap(), P::monomial(vec![1, 1], big(1)));
        let s = &x(2, 1) + &x(2, 2);
        assert!(s.divided_difference(1).unwrap().is_zero());
        assert_eq!(x(2, 1).divided_difference(1).unwrap(), P::one(2));
        assert!(f.divided_difference(0).is_err());
        assert!(f.divided_difference(2).is_err());
    }

    #[test]
    fn display_is_readable() {
        let f = P::from_terms(2, vec![(vec![2, 1], big(1)), (vec![0, 0], big(-3)), (vec![1, 0], big(2))])
            .unwrap();
        assert_eq!(f.to_string(), "x1^2*x2 + 2*x1 - 3");
        assert_eq!(P::zero(3).to_string(), "0");
    }

    #[test]
    fn generic_over_machine_integers() {
        let f = SparsePolynomial::<i64>::monomial(vec![3, 1, 0], 4);
        let g = f.divided_difference(1).unwrap();
        // 4·(x1^3 x2 − x1 x2^3)/(x1 − x2) = 4·(x1^2 x2 + x1 x2^2)
        let expected =
            SparsePolynomial::from_terms(3, vec![(vec![2, 1, 0], 4), (vec![1, 2, 0], 4)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(g.evaluate(&[1, 2, 5]).unwrap(), 4 * (2 + 4));
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = SparsePolynomial<i64>> {
        prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..=5), 0..6)
            .prop_map(move |terms| SparsePolynomial::from_terms(nvars, terms).unwrap())
    }

    proptest! {
        #[test]
        fn dd_squares_to_zero(f in arb_poly(3), i in 1usize..3) {
            let once = f.divided_difference(i).unwrap();
            prop_assert!(once.divided_difference(i).unwrap().is_zero());
        }

        #[test]
        fn dd_lowers_homogeneous_degree(
            exps in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..5),
            i in 1usize..3,
        ) {
            // Force homogeneity by topping up the last variable.
            let target = exps.iter().map(|e| e[..2].iter().sum::<u32>()).max().unwrap() + 1;
            let terms = exps.into_iter().map(|mut e| {
                e[2] = target - e[0] - e[1];
                (e, 1i64)
            });
            let f = SparsePolynomial::from_terms(3, terms).unwrap();
            let g = f.divided_difference(i).unwrap();
            prop_assert!(g.is_zero() || g.homogeneous_degree() == Some(u64::from(target) - 1));
        }

        #[test]
        fn evaluate_is_a_ring_homomorphism(
            f in arb_poly(2),
            g in arb_poly(2),
            a in prop::collection::vec(-4i64..=4, 2),
        ) {
            let fa = f.evaluate(&a).unwrap();
            let ga = g.evaluate(&a).unwrap();
            prop_assert_eq!((&f * &g).evaluate(&a).unwrap(), fa * ga);
            prop_assert_eq!((&f + &g).evaluate(&a).unwrap(), fa + ga);
            prop_assert_eq!((&f - &g).evaluate(&a).unwrap(), fa - ga);
        }
    }
}
