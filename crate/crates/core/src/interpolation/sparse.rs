//! Deterministic sparse interpolation in an interpolation-friendly basis.
//!
//! For every Klivans–Spielman vector `c` the black box is restricted to the
//! curves `y ↦ (y^{d_1}, ..., y^{d_n})` and `y ↦ (p_1 y^{d_1}, ..., p_n y^{d_n})`
//! with `d = Ac`. The top coefficient of the first curve is the coefficient of
//! the `⟨d, ·⟩`-maximal basis element, and the ratio of the two top
//! coefficients is `Π p_i^{e_i}`, which reveals its leading exponent. The found
//! term is subtracted and the step repeats. The answer is the expansion that a
//! strict majority of vectors agree on.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::combinatorics::Code;
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;

use super::basis::{Basis, Expansion};
use super::ks::{first_primes, ks_set, majority_threshold, one_third, KsSet};
use super::univariate::{dense_degree, NewtonForm};

type Poly = SparsePolynomial<BigInt>;

/// Exact, deterministic access to a polynomial by evaluation only.
pub trait BlackBox: Sync {
    fn nvars(&self) -> usize;
    fn eval(&self, point: &[BigInt]) -> Result<BigInt>;
}

impl BlackBox for Poly {
    fn nvars(&self) -> usize {
        SparsePolynomial::nvars(self)
    }

    fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        self.evaluate(point)
    }
}

/// Wraps a closure as a black box.
pub struct FnBlackBox<F> {
    nvars: usize,
    f: F,
}

impl<F> FnBlackBox<F>
where
    F: Fn(&[BigInt]) -> Result<BigInt> + Sync,
{
    pub fn new(nvars: usize, f: F) -> Self {
        FnBlackBox { nvars, f }
    }
}

impl<F> BlackBox for FnBlackBox<F>
where
    F: Fn(&[BigInt]) -> Result<BigInt> + Sync,
{
    fn nvars(&self) -> usize {
        self.nvars
    }

    fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        (self.f)(point)
    }
}

/// `(y^{d_1}, ..., y^{d_n})`, or `(p_1 y^{d_1}, ...)` when primes are given.
pub fn phi_point(d_vec: &[u64], y: &BigInt, primes: Option<&[u64]>) -> Vec<BigInt> {
    d_vec
        .iter()
        .enumerate()
        .map(|(i, &di)| {
            let power = num_traits::pow(y.clone(), di as usize);
            match primes {
                Some(p) => power * p[i],
                None => power,
            }
        })
        .collect()
}

/// `(f − partial)` at the substituted point.
pub fn phi_eval(
    bb: &dyn BlackBox,
    partial: &Expansion,
    basis: &dyn Basis,
    d_vec: &[u64],
    y: &BigInt,
    primes: Option<&[u64]>,
) -> Result<BigInt> {
    if partial.basis != basis.kind() && !partial.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "partial expansion is in the {} basis, not {}",
            partial.basis,
            basis.kind()
        )));
    }
    let point = phi_point(d_vec, y, primes);
    let mut value = bb.eval(&point)?;
    for (label, a) in partial.terms() {
        value -= a * basis.eval(label, &point)?;
    }
    Ok(value)
}

/// Recovers `(e, a_e)` from the top coefficients of the plain and the
/// prime-scaled restrictions.
pub fn extract_leading(g: &[BigInt], gprime: &[BigInt], primes: &[u64], d_vec: &[u64]) -> Result<(Vec<u32>, BigInt)> {
    let k = dense_degree(g).ok_or_else(|| Error::InvalidArgument("g is zero".into()))?;
    let b = &g[k];
    let b_prime = gprime.get(k).cloned().unwrap_or_default();
    let (ratio, rem) = b_prime.div_rem(b);
    if !rem.is_zero() || !ratio.is_positive() {
        return Err(Error::NonDistinguishing(format!("{b_prime} / {b} is not a prime product")));
    }
    let mut rest = ratio;
    let mut e = Vec::with_capacity(primes.len());
    for &p in primes {
        let p = BigInt::from(p);
        let mut count = 0u32;
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
        e.push(count);
    }
    if !rest.is_one() {
        return Err(Error::NonDistinguishing(format!("ratio leaves cofactor {rest}")));
    }
    let weight: u64 = d_vec.iter().zip(&e).map(|(&d, &x)| d * u64::from(x)).sum();
    if weight != k as u64 {
        return Err(Error::NonDistinguishing(format!(
            "exponent {e:?} has weight {weight}, top degree is {k}"
        )));
    }
    Ok((e, b.clone()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InterpolationStats {
    pub t: usize,
    pub p: u64,
    pub threshold: usize,
    /// Vectors whose attempt ran to completion before the majority was found.
    pub vectors_processed: usize,
    /// Attempts discarded because of a malformed intermediate result.
    pub votes_discarded: usize,
    /// Univariate node count `D + 1` of each processed vector, in index order.
    pub node_counts: Vec<usize>,
}

struct Context<'a> {
    bb: &'a dyn BlackBox,
    basis: &'a dyn Basis,
    n: usize,
    d: u64,
    m: usize,
    primes: Vec<u64>,
    expanded: Mutex<HashMap<Code, Poly>>,
}

impl Context<'_> {
    fn expand(&self, label: &Code) -> Result<Poly> {
        if let Some(p) = self.expanded.lock().unwrap().get(label) {
            return Ok(p.clone());
        }
        let p = self.basis.expand(label, self.n)?;
        self.expanded.lock().unwrap().insert(label.clone(), p.clone());
        Ok(p)
    }

    fn restrict(&self, d_vec: &[u64], nodes: usize, primes: Option<&[u64]>) -> Result<Vec<BigInt>> {
        let values = (1..=nodes)
            .map(|y| self.bb.eval(&phi_point(d_vec, &BigInt::from(y), primes)))
            .collect::<Result<Vec<_>>>()?;
        Ok(NewtonForm::from_values(values)?.to_dense())
    }

    /// One vector's attempt. `Err` discards the vote.
    fn attempt(&self, c: &[u64]) -> Result<Expansion> {
        let d_vec = self.basis.apply_transform(c);
        let top = self.d * d_vec.iter().copied().max().unwrap_or(0);
        let nodes = top as usize + 1;
        let mut g = self.restrict(&d_vec, nodes, None)?;
        let mut g_prime = self.restrict(&d_vec, nodes, Some(&self.primes))?;
        let mut found = Expansion::new(self.basis.kind());
        for round in 0..=self.m {
            if dense_degree(&g).is_none() {
                return Ok(found);
            }
            if round == self.m {
                return Err(Error::PromiseViolation(format!("more than {} terms", self.m)));
            }
            let (e, a) = extract_leading(&g, &g_prime, &self.primes, &d_vec)?;
            let label = self
                .basis
                .leading_to_label(&e)
                .ok_or_else(|| Error::PromiseViolation(format!("{e:?} is not a leading exponent")))?;
            // g ← g − a·t_λ(φ(y)), coefficientwise.
            for (exp, coeff) in self.expand(&label)?.terms() {
                let deg = d_vec.iter().zip(exp).map(|(&di, &ei)| di * u64::from(ei)).sum::<u64>();
                if deg > top {
                    return Err(Error::PromiseViolation(format!("{label} exceeds degree {}", self.d)));
                }
                let scale: BigInt = self
                    .primes
                    .iter()
                    .zip(exp)
                    .map(|(&p, &ei)| num_traits::pow(BigInt::from(p), ei as usize))
                    .product();
                let delta = &a * coeff;
                g_prime[deg as usize] -= &delta * scale;
                g[deg as usize] -= delta;
            }
            found.add_term(label, a);
        }
        unreachable!()
    }
}

/// Interpolates `f = Σ_{λ∈Γ} a_λ t_λ` from black-box access, given
/// `deg f ≤ d` and `|Γ| ≤ m`.
pub fn interpolate(bb: &dyn BlackBox, basis: &dyn Basis, n: usize, d: u64, m: usize) -> Result<Expansion> {
    interpolate_with_stats(bb, basis, n, d, m).map(|(e, _)| e)
}

pub fn interpolate_with_stats(
    bb: &dyn BlackBox,
    basis: &dyn Basis,
    n: usize,
    d: u64,
    m: usize,
) -> Result<(Expansion, InterpolationStats)> {
    if bb.nvars() != n {
        return Err(Error::NvarsMismatch { left: bb.nvars(), right: n });
    }
    let d_param = (n as u64 * d).max(1);
    let ks: KsSet = ks_set(m, n, &one_third(), d_param)?;
    let ctx = Context {
        bb,
        basis,
        n,
        d,
        m,
        primes: first_primes(n),
        expanded: Mutex::new(HashMap::new()),
    };
    let threshold = majority_threshold(ks.t);
    let mut stats = InterpolationStats { t: ks.t, p: ks.p, threshold, ..Default::default() };
    let mut tally: Vec<(Expansion, usize)> = Vec::new();
    let chunk = rayon::current_num_threads().max(1);
    for batch in ks.vectors.chunks(chunk) {
        let results: Vec<Result<Expansion>> = batch.par_iter().map(|c| ctx.attempt(c)).collect();
        for (c, result) in batch.iter().zip(results) {
            stats.vectors_processed += 1;
            let top = d * basis.apply_transform(c).into_iter().max().unwrap_or(0);
            stats.node_counts.push(top as usize + 1);
            let Ok(expansion) = result else {
                stats.votes_discarded += 1;
                continue;
            };
            let count = match tally.iter_mut().find(|(e, _)| *e == expansion) {
                Some((_, count)) => {
                    *count += 1;
                    *count
                }
                None => {
                    tally.push((expansion.clone(), 1));
                    1
                }
            };
            if count >= threshold {
                return Ok((expansion, stats));
            }
        }
    }
    let best = tally.iter().map(|(_, c)| *c).max().unwrap_or(0);
    Err(Error::NoMajority { t: ks.t, best })
}
