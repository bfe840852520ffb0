//! Generalized Littlewood–Richardson coefficients: the Schubert expansion of
//! `Y_u·Y_v`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::Code;
use crate::error::{Error, Result};
use crate::interpolation::{interpolate, BasisKind, Expansion, FnBlackBox, SchubertBasis};
use crate::poly::SparsePolynomial;
use crate::schubert::{schubert_eval, schubert_expand_transition};

type Poly = SparsePolynomial<BigInt>;

/// Variables needed for the product; `Y_w` with `w ∈ N^n` span `Z[x_1..x_n]`.
pub fn product_nvars(u: &Code, v: &Code) -> usize {
    u.len().max(v.len()).max(1)
}

/// Interpolates `a ↦ Y_u(a)·Y_v(a)` in the Schubert basis, with at most
/// `m_bound` terms.
pub fn lr_expand_product(u: &Code, v: &Code, m_bound: usize) -> Result<Expansion> {
    let n = product_nvars(u, v);
    let d = u.weight() + v.weight();
    let bb = FnBlackBox::new(n, |a: &[BigInt]| Ok(schubert_eval(u, a)? * schubert_eval(v, a)?));
    interpolate(&bb, &SchubertBasis, n, d, m_bound.max(1))
}

fn expand_in(code: &Code, n: usize) -> Result<Poly> {
    if code.is_empty() {
        return Ok(Poly::one(n));
    }
    schubert_expand_transition::<BigInt>(code).with_nvars(n)
}

/// `(S_n, S_{n−1}, ..., S_1)` with `S_i = e_i + ... + e_n`; ordering exponents
/// by this vector lexicographically refines reverse dominance.
fn suffix_sums(e: &[u32]) -> Vec<u64> {
    let mut acc = 0u64;
    e.iter()
        .rev()
        .map(|&x| {
            acc += u64::from(x);
            acc
        })
        .collect()
}

/// The same expansion by triangular elimination on the monomial expansion of
/// the product: the reverse-dominance-maximal monomial `x^w` is the leading
/// term of `Y_w`, whose coefficient is read off and subtracted.
pub fn lr_oracle_triangular(u: &Code, v: &Code) -> Result<Expansion> {
    let n = product_nvars(u, v);
    let mut rest = expand_in(u, n)?.checked_mul(&expand_in(v, n)?)?;
    let guard = rest.len();
    let mut out = Expansion::new(BasisKind::Schubert);
    let mut iterations = 0;
    while !rest.is_zero() {
        iterations += 1;
        if iterations > guard {
            return Err(Error::PromiseViolation(format!(
                "elimination did not finish within {guard} steps"
            )));
        }
        let (w, c) = rest
            .terms()
            .max_by_key(|(e, _)| suffix_sums(e))
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero polynomial has a term");
        let label = Code::new(w);
        rest = rest.checked_sub(&expand_in(&label, n)?.scale(&c))?;
        debug_assert!(!c.is_zero());
        out.add_term(label, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::codes_of_weight;
    use num_traits::Signed;

    fn code(v: &[u32]) -> Code {
        Code::new(v.to_vec())
    }

    fn exp(terms: &[(&[u32], i64)]) -> Expansion {
        Expansion::from_terms(
            BasisKind::Schubert,
            terms.iter().map(|(c, a)| (code(c), BigInt::from(*a))),
        )
    }

    #[test]
    fn examples() {
        let square = exp(&[(&[2], 1)]);
        let mixed = exp(&[(&[0, 2], 1), (&[1, 1], 1)]);
        assert_eq!(lr_expand_product(&code(&[1]), &code(&[1]), 1).unwrap(), square);
        assert_eq!(lr_expand_product(&code(&[0, 1]), &code(&[0, 1]), 2).unwrap(), mixed);
        assert_eq!(
            lr_expand_product(&code(&[1]), &code(&[0, 1]), 2).unwrap(),
            exp(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(lr_oracle_triangular(&code(&[0, 1]), &code(&[0, 1])).unwrap(), mixed);
        assert_eq!(lr_oracle_triangular(&code(&[1]), &code(&[1])).unwrap(), square);
        let product = lr_oracle_triangular(&code(&[1, 1]), &code(&[0, 1])).unwrap();
        assert!(!product.is_empty());
        assert!(product.terms().values().all(Signed::is_positive));
    }

    #[test]
    fn unit_factor() {
        let v = code(&[1, 0, 2]);
        assert_eq!(lr_oracle_triangular(&Code::empty(), &v).unwrap(), exp(&[(&[1, 0, 2], 1)]));
        assert_eq!(lr_expand_product(&v, &Code::empty(), 1).unwrap(), exp(&[(&[1, 0, 2], 1)]));
    }

    #[test]
    fn oracle_is_positive_and_homogeneous() {
        let codes: Vec<Code> = (0..=3).flat_map(|w| codes_of_weight(w, 3)).collect();
        for u in &codes {
            for v in &codes {
                if u.weight() + v.weight() > 5 {
                    continue;
                }
                let product = lr_oracle_triangular(u, v).unwrap();
                for (w, c) in product.terms() {
                    assert!(c.is_positive(), "{u} * {v}: {w} -> {c}");
                    assert_eq!(w.weight(), u.weight() + v.weight());
                    assert!(w.len() <= product_nvars(u, v));
                }
                let n = product_nvars(u, v);
                let lhs = expand_in(u, n).unwrap().checked_mul(&expand_in(v, n).unwrap()).unwrap();
                assert_eq!(product.materialize(n).unwrap(), lhs);
            }
        }
    }
}
