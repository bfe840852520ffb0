use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Klivans–Spielman vectors `c^(k)_i = k^{i−1} mod p`, `k ∈ [t]`, `i ∈ [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsSet {
    pub m: usize,
    pub n: usize,
    pub epsilon: BigRational,
    pub d_param: u64,
    /// `⌈m²n/ε⌉`.
    pub t: usize,
    /// Smallest prime above `max(t, d_param)`.
    pub p: u64,
    pub vectors: Vec<Vec<u64>>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_above(n: u64) -> u64 {
    let mut q = n + 1;
    while !is_prime(q) {
        q += 1;
    }
    q
}

/// `2, 3, 5, ...`, the first `n` primes.
pub fn first_primes(n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut q = 1;
    while out.len() < n {
        q = next_prime_above(q);
        out.push(q);
    }
    out
}

pub fn ks_set(m: usize, n: usize, epsilon: &BigRational, d_param: u64) -> Result<KsSet> {
    if m == 0 || n == 0 || d_param == 0 {
        return Err(Error::InvalidArgument("m, n and d must be positive".into()));
    }
    if !epsilon.is_positive() || *epsilon >= BigRational::one() {
        return Err(Error::InvalidArgument(format!("epsilon {epsilon} must lie in (0, 1)")));
    }
    let ratio = BigRational::from_integer(BigInt::from(m * m * n)) / epsilon;
    let t = ratio
        .ceil()
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::InvalidArgument("vector count overflows".into()))?;
    let p = next_prime_above((t as u64).max(d_param));
    let vectors = (1..=t as u64)
        .map(|k| {
            let mut entry = 1 % p;
            (0..n)
                .map(|_| {
                    let current = entry;
                    entry = ((entry as u128 * k as u128) % p as u128) as u64;
                    current
                })
                .collect()
        })
        .collect();
    Ok(KsSet { m, n, epsilon: epsilon.clone(), d_param, t, p, vectors })
}

/// True when `⟨c, e⟩` takes pairwise distinct values over `exponents`.
pub fn is_distinguishing(c: &[u64], exponents: &[Vec<u32>]) -> bool {
    let mut values: Vec<u64> = exponents
        .iter()
        .map(|e| c.iter().zip(e).map(|(&ci, &ei)| ci * u64::from(ei)).sum())
        .collect();
    values.sort_unstable();
    values.windows(2).all(|w| w[0] != w[1])
}

/// `⌊t/2⌋ + 1`.
pub fn majority_threshold(t: usize) -> usize {
    t / 2 + 1
}

pub(crate) fn one_third() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(3))
}
