//! Complete homogeneous and Schur polynomials.
//!
//! `s_α = det[h_{α_i − i + j}]` is evaluated numerically with fraction-free
//! (Bareiss) elimination and expanded symbolically by cofactors; the symbolic
//! route serves as an oracle for the numeric one.

use num_traits::One;

use crate::combinatorics::Code;
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::scalar::Scalar;

/// `[h_0(a), h_1(a), ..., h_max(a)]` by the recurrence
/// `H_j[ℓ] = H_{j−1}[ℓ] + a_j·H_j[ℓ−1]`.
pub fn complete_homogeneous_table<T: Scalar>(max: usize, point: &[T]) -> Vec<T> {
    let mut table = vec![T::zero(); max + 1];
    table[0] = T::one();
    for a in point {
        for ell in 1..=max {
            let step = table[ell - 1].clone() * a;
            table[ell] += step;
        }
    }
    table
}

/// `h_ℓ(a_1, ..., a_k)`, with `h_0 = 1` and `h_ℓ = 0` for `ℓ < 0`.
pub fn complete_homogeneous_eval<T: Scalar>(ell: i64, point: &[T]) -> T {
    if ell < 0 {
        return T::zero();
    }
    complete_homogeneous_table(ell as usize, point).pop().unwrap()
}

/// Determinant by Bareiss elimination; every division is exact over an
/// integral domain.
pub fn bareiss_determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (m[i][j].clone() * &m[k][k] - m[i][k].clone() * &m[k][j]) / &prev;
                m[i][j] = value;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn check_partition(alpha: &Code) -> Result<()> {
    if alpha.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(alpha.to_string()))
    }
}

/// `s_α(a)` via Jacobi–Trudi at an integer point with at least `len(α)`
/// coordinates.
pub fn schur_eval<T: Scalar>(alpha: &Code, point: &[T]) -> Result<T> {
    check_partition(alpha)?;
    let l = alpha.len();
    if point.len() < l {
        return Err(Error::DimensionMismatch { expected: l, got: point.len() });
    }
    if l == 0 {
        return Ok(T::one());
    }
    let max_index = alpha.get(1) as usize + l - 1;
    let h = complete_homogeneous_table(max_index, point);
    let matrix = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let idx = alpha.get(i) as i64 - i as i64 + j as i64;
                    if idx < 0 { T::zero() } else { h[idx as usize].clone() }
                })
                .collect()
        })
        .collect();
    Ok(bareiss_determinant(matrix))
}

/// `h_ℓ(x_1, ..., x_k)` as a polynomial: every degree-`ℓ` monomial once.
pub fn complete_homogeneous_poly<T: Scalar>(ell: i64, k: usize) -> SparsePolynomial<T> {
    let mut out = SparsePolynomial::zero(k);
    if ell < 0 {
        return out;
    }
    fn rec<T: Scalar>(remaining: u32, var: usize, exp: &mut Vec<u32>, out: &mut SparsePolynomial<T>) {
        if var + 1 == exp.len() {
            exp[var] = remaining;
            out.add_term(exp.clone(), T::one());
            exp[var] = 0;
            return;
        }
        for e in 0..=remaining {
            exp[var] = e;
            rec(remaining - e, var + 1, exp, out);
        }
        exp[var] = 0;
    }
    if k == 0 {
        if ell == 0 {
            out.add_term(Vec::new(), T::one());
        }
        return out;
    }
    rec(ell as u32, 0, &mut vec![0; k], &mut out);
    out
}

fn cofactor_determinant<T: Scalar>(m: &[Vec<SparsePolynomial<T>>], nvars: usize) -> SparsePolynomial<T> {
    let n = m.len();
    if n == 0 {
        return SparsePolynomial::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = SparsePolynomial::zero(nvars);
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<_>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &cofactor_determinant(&minor, nvars);
        det = if col % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

/// Monomial expansion of `s_α(x_1, ..., x_k)` by symbolic Jacobi–Trudi.
pub fn schur_expand<T: Scalar>(alpha: &Code, k: usize) -> Result<SparsePolynomial<T>> {
    check_partition(alpha)?;
    let l = alpha.len();
    if k < l {
        return Err(Error::DimensionMismatch { expected: l, got: k });
    }
    let matrix: Vec<Vec<_>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| complete_homogeneous_poly(alpha.get(i) as i64 - i as i64 + j as i64, k))
                .collect()
        })
        .collect();
    Ok(cofactor_determinant(&matrix, k))
}

/// `⌈√(|α|!)⌉`, the coefficient bound for Schur polynomials.
pub fn schur_coefficient_bound(weight: u64) -> num_bigint::BigInt {
    let factorial = (1..=weight).fold(num_bigint::BigInt::one(), |acc, i| acc * i);
    ceil_sqrt(&factorial)
}

pub(crate) fn ceil_sqrt(n: &num_bigint::BigInt) -> num_bigint::BigInt {
    let root = n.sqrt();
    if &(&root * &root) == n { root } else { root + 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::codes_of_weight;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type P = SparsePolynomial<BigInt>;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn pt(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| big(x)).collect()
    }

    fn code(v: &[u32]) -> Code {
        Code::new(v.to_vec())
    }

    #[test]
    fn complete_homogeneous_examples() {
        assert_eq!(complete_homogeneous_eval(0, &pt(&[4, 5])), big(1));
        assert_eq!(complete_homogeneous_eval(0, &pt(&[])), big(1));
        assert_eq!(complete_homogeneous_eval(2, &pt(&[1, 1])), big(3));
        assert_eq!(complete_homogeneous_eval(2, &pt(&[2, 3])), big(19));
        assert_eq!(complete_homogeneous_eval(-1, &pt(&[2, 3])), big(0));
        assert_eq!(complete_homogeneous_eval(3, &pt(&[])), big(0));
    }

    #[test]
    fn schur_eval_examples() {
        assert_eq!(schur_eval(&Code::empty(), &pt(&[9, 9])).unwrap(), big(1));
        assert_eq!(schur_eval(&code(&[1, 1]), &pt(&[2, 3])).unwrap(), big(6));
        assert_eq!(schur_eval(&code(&[2, 1]), &pt(&[1, 1])).unwrap(), big(2));
        assert!(matches!(schur_eval(&code(&[1, 2]), &pt(&[1, 1])), Err(Error::NotDominant(_))));
        assert!(schur_eval(&code(&[1, 1, 1]), &pt(&[1, 1])).is_err());
    }

    #[test]
    fn schur_expand_examples() {
        let s1: P = schur_expand(&code(&[1]), 2).unwrap();
        assert_eq!(s1, &P::var(2, 1) + &P::var(2, 2));
        let s21: P = schur_expand(&code(&[2, 1]), 2).unwrap();
        let expected = P::from_terms(2, vec![(vec![2, 1], big(1)), (vec![1, 2], big(1))]).unwrap();
        assert_eq!(s21, expected);
        let s11: P = schur_expand(&code(&[1, 1]), 2).unwrap();
        assert_eq!(s11, P::monomial(vec![1, 1], big(1)));
        assert!(schur_expand::<BigInt>(&code(&[0, 1]), 2).is_err());
    }

    #[test]
    fn bareiss_handles_pivoting() {
        let m = vec![vec![big(0), big(2)], vec![big(3), big(4)]];
        assert_eq!(bareiss_determinant(m), big(-6));
        let singular = vec![vec![big(1), big(2)], vec![big(2), big(4)]];
        assert_eq!(bareiss_determinant(singular), big(0));
        let m3 = vec![
            vec![big(2), big(-1), big(0)],
            vec![big(-1), big(2), big(-1)],
            vec![big(0), big(-1), big(2)],
        ];
        assert_eq!(bareiss_determinant(m3), big(4));
    }

    fn partitions_up_to(weight: u32, k: usize) -> Vec<Code> {
        (0..=weight)
            .flat_map(|w| codes_of_weight(w, k))
            .filter(|c| c.is_dominant())
            .collect()
    }

    #[test]
    fn symbolic_and_numeric_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 1..=3 {
            for alpha in partitions_up_to(5, k) {
                let s: P = schur_expand(&alpha, k).unwrap();
                for _ in 0..4 {
                    let a: Vec<BigInt> = (0..k).map(|_| big(rng.gen_range(0..=10))).collect();
                    assert_eq!(s.evaluate(&a).unwrap(), schur_eval(&alpha, &a).unwrap(), "s_{alpha}");
                }
            }
        }
    }

    #[test]
    fn positivity_degree_and_coefficient_bound() {
        for k in 1..=3 {
            for alpha in partitions_up_to(5, k) {
                let s: P = schur_expand(&alpha, k).unwrap();
                let bound = schur_coefficient_bound(alpha.weight());
                assert!(!s.is_zero());
                assert_eq!(s.homogeneous_degree(), Some(alpha.weight()));
                for (_, c) in s.terms() {
                    assert!(*c > big(0));
                    assert!(*c <= bound);
                }
            }
        }
    }

    #[test]
    fn works_over_rationals() {
        use num_rational::BigRational;
        let a: Vec<BigRational> = vec![
            BigRational::new(big(1), big(2)),
            BigRational::new(big(1), big(3)),
        ];
        // s_{1,1}(x,y) = xy
        assert_eq!(
            schur_eval(&code(&[1, 1]), &a).unwrap(),
            BigRational::new(big(1), big(6))
        );
    }
}
