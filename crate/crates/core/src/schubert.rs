//! Schubert polynomials `Y_v` indexed by codes.
//!
//! Two independent expansions are provided: the transition recursion
//! `Y_v = x_k·Y_{v'} + Σ_{u∈Ψ_v} Y_u` bottoming out at anti-dominant codes
//! (Schur polynomials), and divided differences applied to the staircase
//! monomial along a reduced word. Evaluation at integer points uses the
//! transition recursion with numeric Schur evaluation at the leaves.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{code_to_perm, perm_to_code, Code, Permutation};
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::scalar::Scalar;
use crate::schur::{ceil_sqrt, schur_eval, schur_expand};

/// One application of the transition formula to a nonzero code `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionStep {
    /// Last nonzero position of `v` (1-based).
    pub k: usize,
    /// `v` with `v_k` decremented.
    pub vprime: Code,
    /// `Ψ_v`: codes `u` of weight `|v|` with `⟨u⟩ = ⟨v'⟩·τ_{ik}`, ordered by `i`.
    pub psi: Vec<Code>,
}

pub fn transition(v: &Code) -> Result<TransitionStep> {
    if v.is_empty() {
        return Err(Error::ZeroCode);
    }
    let k = v.len();
    let mut entries = v.entries().to_vec();
    entries[k - 1] -= 1;
    let vprime = Code::new(entries);
    let sigma = code_to_perm(&vprime);
    let psi = (1..k)
        .filter(|&i| {
            let (lo, hi) = (sigma.image(i), sigma.image(k));
            lo < hi && (i + 1..k).all(|j| {
                let s = sigma.image(j);
                s > hi || s < lo
            })
        })
        .map(|i| {
            let swapped = sigma.apply_transposition(i, k).expect("i < k");
            perm_to_code(&swapped)
        })
        .collect();
    Ok(TransitionStep { k, vprime, psi })
}

/// Bound on the length of any chain of non-anti-dominant transitions starting
/// at `v`: `n·(w² + w)` with `n = len(v)` and `w = |v|`.
pub fn transition_depth_cap(v: &Code) -> u64 {
    let w = v.weight();
    v.len().max(1) as u64 * (w * w + w)
}

/// Partition `(v_k, ..., v_1)` attached to an anti-dominant code.
fn reversed_partition(v: &Code) -> Code {
    Code::new(v.entries().iter().rev().copied().collect())
}

struct TransitionExpander<T> {
    nvars: usize,
    cap: u64,
    memo: HashMap<Code, SparsePolynomial<T>>,
}

impl<T: Scalar> TransitionExpander<T> {
    fn expand(&mut self, v: &Code, depth: u64) -> SparsePolynomial<T> {
        if let Some(hit) = self.memo.get(v) {
            return hit.clone();
        }
        let result = if v.is_antidominant() {
            schur_expand::<T>(&reversed_partition(v), v.len())
                .expect("reversed anti-dominant code is a partition")
                .with_nvars(self.nvars)
                .expect("Schur expansion fits")
        } else {
            assert!(
                depth <= self.cap,
                "transition chain from {v} exceeded the depth bound {}",
                self.cap
            );
            let step = transition(v).expect("non-anti-dominant codes are nonzero");
            let lower = self.expand(&step.vprime, depth + 1);
            let mut acc = lower.shift(&unit(self.nvars, step.k));
            for u in &step.psi {
                let term = self.expand(u, depth + 1);
                acc = &acc + &term;
            }
            acc
        };
        self.memo.insert(v.clone(), result.clone());
        result
    }
}

fn unit(nvars: usize, k: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[k - 1] = 1;
    e
}

/// Monomial expansion of `Y_v` in `x_1..x_{len(v)}` by the transition formula.
pub fn schubert_expand_transition<T: Scalar>(v: &Code) -> SparsePolynomial<T> {
    let mut expander = TransitionExpander {
        nvars: v.len(),
        cap: transition_depth_cap(v),
        memo: HashMap::new(),
    };
    expander.expand(v, 0)
}

/// Adjacent transpositions `s_i` (recorded as `i`) taking `σ` up to the longest
/// element of `S_n`, each step increasing the length by one.
pub fn word_to_longest(sigma: &Permutation, n: usize) -> Vec<usize> {
    let mut current = sigma.embed(n);
    let mut word = Vec::new();
    while let Some(i) = current.windows(2).position(|w| w[0] < w[1]) {
        current.swap(i, i + 1);
        word.push(i + 1);
    }
    word
}

/// Monomial expansion of `Y_v` in `x_1..x_{len(v)}`: start from the staircase
/// `x^{(N−1, ..., 1, 0)}` and apply divided differences along a reduced word.
pub fn schubert_expand_dd<T: Scalar>(v: &Code) -> SparsePolynomial<T> {
    let n = v.embedding_degree();
    if n <= 1 {
        return SparsePolynomial::one(v.len());
    }
    let staircase: Vec<u32> = (0..n as u32).rev().collect();
    let mut poly = SparsePolynomial::monomial(staircase, T::one());
    for &i in word_to_longest(&code_to_perm(v), n).iter().rev() {
        poly = poly.divided_difference(i).expect("word letters lie in 1..N-1");
    }
    poly.with_nvars(v.len()).expect("Y_v only involves x_1..x_len(v)")
}

pub fn schubert_expand<T: Scalar>(v: &Code) -> SparsePolynomial<T> {
    schubert_expand_transition(v)
}

struct TransitionEvaluator<'a, T> {
    point: &'a [T],
    cap: u64,
    memo: HashMap<Code, T>,
}

impl<T: Scalar> TransitionEvaluator<'_, T> {
    fn eval(&mut self, v: &Code, depth: u64) -> T {
        if let Some(hit) = self.memo.get(v) {
            return hit.clone();
        }
        let value = if v.is_antidominant() {
            schur_eval(&reversed_partition(v), &self.point[..v.len()])
                .expect("reversed anti-dominant code is a partition")
        } else {
            assert!(
                depth <= self.cap,
                "transition chain from {v} exceeded the depth bound {}",
                self.cap
            );
            let step = transition(v).expect("non-anti-dominant codes are nonzero");
            let mut acc = self.eval(&step.vprime, depth + 1) * &self.point[step.k - 1];
            for u in &step.psi {
                acc += self.eval(u, depth + 1);
            }
            acc
        };
        self.memo.insert(v.clone(), value.clone());
        value
    }
}

/// `Y_v(a)` for a point with nonnegative coordinates and at least `len(v)` of
/// them.
pub fn schubert_eval<T: Scalar>(v: &Code, point: &[T]) -> Result<T> {
    if let Some(pos) = point.iter().position(|a| a.is_negative()) {
        return Err(Error::NegativeCoordinate(pos + 1));
    }
    if point.len() < v.len() {
        return Err(Error::DimensionMismatch { expected: v.len(), got: point.len() });
    }
    let mut evaluator = TransitionEvaluator {
        point,
        cap: transition_depth_cap(v),
        memo: HashMap::new(),
    };
    Ok(evaluator.eval(v, 0))
}

/// `v ▷ u`: every suffix sum of `v` is at least that of `u`, with equal totals.
pub fn reverse_dominates(v: &[u32], u: &[u32]) -> bool {
    let n = v.len().max(u.len());
    let at = |x: &[u32], i: usize| u64::from(x.get(i).copied().unwrap_or(0));
    let (mut sv, mut su) = (0u64, 0u64);
    for i in (0..n).rev() {
        sv += at(v, i);
        su += at(u, i);
        if i > 0 && sv < su {
            return false;
        }
    }
    sv == su
}

/// `⌈n^{2n(|v|²+|v|)}·√(|v|!)⌉`, the coefficient bound for `Y_v` in `n`
/// variables.
pub fn k_bound(v: &Code, n: usize) -> BigInt {
    let w = v.weight();
    let exponent = 2 * n as u64 * (w * w + w);
    let factorial = (1..=w).fold(BigInt::one(), |acc, i| acc * i);
    let power = num_traits::pow(BigInt::from(n), usize::try_from(2 * exponent).unwrap());
    let radicand = power * factorial;
    if radicand.is_zero() {
        return BigInt::zero();
    }
    ceil_sqrt(&radicand)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::codes_of_weight;

    type P = SparsePolynomial<BigInt>;

    fn code(v: &[u32]) -> Code {
        Code::new(v.to_vec())
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> P {
        P::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), big(*c)))).unwrap()
    }

    #[test]
    fn transition_examples() {
        let t = transition(&code(&[0, 1])).unwrap();
        assert_eq!((t.k, t.vprime.clone(), t.psi.clone()), (2, Code::empty(), vec![code(&[1])]));

        let t = transition(&code(&[1, 1])).unwrap();
        assert_eq!((t.k, t.vprime.clone(), t.psi.clone()), (2, code(&[1]), vec![]));

        let t = transition(&code(&[2])).unwrap();
        assert_eq!((t.k, t.vprime.clone(), t.psi.clone()), (1, code(&[1]), vec![]));

        assert!(matches!(transition(&Code::empty()), Err(Error::ZeroCode)));
    }

    #[test]
    fn transition_step_invariants() {
        for w in 1..=6 {
            for v in codes_of_weight(w, 4) {
                let step = transition(&v).unwrap();
                assert_eq!(step.vprime.weight() + 1, v.weight());
                let sigma = code_to_perm(&step.vprime);
                for u in &step.psi {
                    assert_eq!(u.weight(), v.weight(), "Ψ_{v} contains {u}");
                    let target = code_to_perm(u);
                    assert!((1..step.k).any(|i| sigma.apply_transposition(i, step.k).unwrap() == target));
                }
            }
        }
    }

    #[test]
    fn expand_transition_examples() {
        let h2 = poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(schubert_expand_transition::<BigInt>(&code(&[0, 2])), h2);
        assert_eq!(schubert_expand_transition::<BigInt>(&code(&[1, 1])), poly(2, &[(&[1, 1], 1)]));
        assert_eq!(schubert_expand_transition::<BigInt>(&code(&[2, 1])), poly(2, &[(&[2, 1], 1)]));
        assert_eq!(schubert_expand_transition::<BigInt>(&Code::empty()), P::one(0));
    }

    #[test]
    fn expand_dd_examples() {
        assert_eq!(schubert_expand_dd::<BigInt>(&code(&[1, 1])), poly(2, &[(&[1, 1], 1)]));
        assert_eq!(schubert_expand_dd::<BigInt>(&code(&[1])), poly(1, &[(&[1], 1)]));
        assert_eq!(schubert_expand_dd::<BigInt>(&code(&[0, 1])), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(schubert_expand_dd::<BigInt>(&Code::empty()), P::one(0));
    }

    #[test]
    fn known_s3_polynomials() {
        // The six Schubert polynomials of S_3.
        assert_eq!(schubert_expand_dd::<BigInt>(&code(&[1, 0])), poly(1, &[(&[1], 1)]));
        assert_eq!(schubert_expand_dd::<BigInt>(&code(&[2])), poly(1, &[(&[2], 1)]));
        assert_eq!(schubert_expand_dd::<BigInt>(&code(&[2, 1])), poly(2, &[(&[2, 1], 1)]));
        // Y_{132} = x1 + x2, Y_{231} = x1 x2 already covered; Y_{312} = x1^2.
    }

    #[test]
    fn eval_examples() {
        assert_eq!(schubert_eval(&code(&[1]), &[big(5), big(7)]).unwrap(), big(5));
        assert_eq!(schubert_eval(&code(&[0, 2]), &[big(1), big(1), big(1)]).unwrap(), big(3));
        let y: P = schubert_expand_transition(&code(&[2, 0, 3]));
        let total = y.terms().fold(big(0), |acc, (_, c)| acc + c);
        assert_eq!(schubert_eval(&code(&[2, 0, 3]), &[big(1), big(1), big(1)]).unwrap(), total);
        assert!(matches!(
            schubert_eval(&code(&[1]), &[big(-1)]),
            Err(Error::NegativeCoordinate(1))
        ));
        assert!(schubert_eval(&code(&[0, 1]), &[big(1)]).is_err());
    }

    #[test]
    fn reverse_dominance_examples() {
        assert!(reverse_dominates(&[0, 1], &[1, 0]));
        assert!(!reverse_dominates(&[1, 0], &[0, 1]));
        assert!(reverse_dominates(&[2, 0, 3], &[2, 0, 3]));
        assert!(!reverse_dominates(&[1, 1], &[1, 0]));
        assert!(reverse_dominates(&[0, 0, 2], &[1, 1]));
    }

    #[test]
    fn k_bound_examples() {
        assert_eq!(k_bound(&code(&[1]), 2), big(256));
        assert_eq!(k_bound(&Code::empty(), 1), big(1));
        // 2^24·√2 = 23726566.9...
        assert_eq!(k_bound(&code(&[1, 1]), 2), big(23_726_567));
    }

    #[test]
    fn word_to_longest_is_reduced() {
        let sigma = code_to_perm(&code(&[1, 0, 1]));
        let n = 4;
        let word = word_to_longest(&sigma, n);
        assert_eq!(word.len() as u64, 6 - sigma.length());
    }

    #[test]
    fn generic_coefficients() {
        let small: SparsePolynomial<i64> = schubert_expand_transition(&code(&[0, 2, 1]));
        let big_poly: P = schubert_expand_transition(&code(&[0, 2, 1]));
        assert_eq!(small.map_coeffs(|c| BigInt::from(*c)), big_poly);
        assert_eq!(schubert_eval(&code(&[0, 2, 1]), &[2i64, 3, 5]).unwrap(),
            small.evaluate(&[2, 3, 5]).unwrap());
    }
}
