//! Exact univariate interpolation at the nodes `y = 1, ..., D + 1`.
//!
//! Values are turned into forward differences `Δ^j f(1)` in place; the Newton
//! coefficients `c_j = Δ^j f(1) / j!` are integers exactly when `f` has integer
//! coefficients, since the basis `(y−1)(y−2)···(y−j)` is unitriangular over the
//! monomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `f(y) = Σ_j c_j (y−1)(y−2)···(y−j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonForm {
    coeffs: Vec<BigInt>,
}

impl NewtonForm {
    /// Interpolates from `values[i] = f(i + 1)`.
    pub fn from_values(mut values: Vec<BigInt>) -> Result<Self> {
        let len = values.len();
        for j in 1..len {
            for i in (j..len).rev() {
                let (lo, hi) = values.split_at_mut(i);
                hi[0] -= &lo[i - 1];
            }
        }
        let mut factorial = BigInt::one();
        for (j, delta) in values.iter_mut().enumerate().skip(1) {
            factorial *= j;
            if delta.is_zero() {
                continue;
            }
            let (q, r) = delta.div_rem(&factorial);
            if !r.is_zero() {
                return Err(Error::NonIntegral(format!(
                    "forward difference of order {j} is not divisible by {j}!"
                )));
            }
            *delta = q;
        }
        Ok(NewtonForm { coeffs: values })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Degree and leading coefficient; the top Newton coefficient equals the
    /// top monomial coefficient.
    pub fn leading(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().enumerate().rev().find(|(_, c)| !c.is_zero())
    }

    /// Monomial coefficients `[a_0, ..., a_D]` by Horner's rule in the Newton
    /// basis.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let len = self.coeffs.len();
        let mut out = vec![BigInt::zero(); len];
        let Some((top, _)) = self.leading() else {
            return out;
        };
        out[0] = self.coeffs[top].clone();
        let mut deg = 0;
        for j in (0..top).rev() {
            // out ← out·(y − (j+1)) + c_j
            let node = BigInt::from(j + 1);
            for k in (0..=deg + 1).rev() {
                let mut next = if k > 0 { out[k - 1].clone() } else { BigInt::zero() };
                if k <= deg {
                    next -= &out[k] * &node;
                }
                out[k] = next;
            }
            deg += 1;
            out[0] += &self.coeffs[j];
        }
        out
    }
}

/// Exact coefficients of a polynomial of degree at most `degree_bound` from
/// its values at `1, ..., degree_bound + 1`.
pub fn univariate_interpolate<F>(evaluator: F, degree_bound: usize) -> Result<Vec<BigInt>>
where
    F: Fn(&BigInt) -> BigInt,
{
    let values = (1..=degree_bound + 1).map(|y| evaluator(&BigInt::from(y))).collect();
    Ok(NewtonForm::from_values(values)?.to_dense())
}

/// Degree of a dense coefficient list, `None` for zero.
pub fn dense_degree(coeffs: &[BigInt]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

pub fn dense_eval(coeffs: &[BigInt], y: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(univariate_interpolate(|y| y * y + 1, 2).unwrap(), bigs(&[1, 0, 1]));
        assert!(univariate_interpolate(|_| big(0), 5).unwrap().iter().all(Zero::is_zero));
        assert_eq!(
            univariate_interpolate(|y| big(3) * y * y * y - y, 4).unwrap(),
            bigs(&[0, -1, 0, 3, 0])
        );
    }

    #[test]
    fn constant_with_zero_degree_bound() {
        assert_eq!(univariate_interpolate(|_| big(-7), 0).unwrap(), bigs(&[-7]));
    }

    #[test]
    fn non_integral_is_reported() {
        // y(y−1)/2 takes integer values but has non-integer coefficients.
        let err = univariate_interpolate(|y| y * (y - 1) / 2, 2).unwrap_err();
        assert!(err.is_contract_violation());
    }

    #[test]
    fn leading_matches_dense_top() {
        let f = NewtonForm::from_values((1..=6).map(|y| big(5 * y * y * y - 2 * y + 4)).collect()).unwrap();
        assert_eq!(f.leading(), Some((3, &big(5))));
        assert_eq!(dense_degree(&f.to_dense()), Some(3));
    }

    proptest! {
        #[test]
        fn recovers_random_polynomials(coeffs in prop::collection::vec(-1000i64..1000, 1..12), slack in 0usize..4) {
            let coeffs = bigs(&coeffs);
            let bound = coeffs.len() - 1 + slack;
            let got = univariate_interpolate(|y| dense_eval(&coeffs, y), bound).unwrap();
            prop_assert_eq!(&got[..coeffs.len()], &coeffs[..]);
            prop_assert!(got[coeffs.len()..].iter().all(Zero::is_zero));
        }
    }
}
