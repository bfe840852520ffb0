//! Boolean-sum form of the skew Schubert polynomial.
//!
//! `Y_{π/σ}(x) = Σ h_N(x, g, b, W_1, ..., W_m)` over all 0-1 assignments to the
//! label matrices `g`, `b` (`N × m`) and the permutation matrices `W_t`
//! (`N × N`). Each gadget factor is 0 or 1 on 0-1 inputs except `h_1`, which
//! carries the chain monomial. Permutation matrices are row = position,
//! column = value: `W[p][q] = 1` iff `w(p) = q`.
//!
//! The sum is enumerated block by block (each `W_t`, then the columns of `g`
//! and `b`) and a subtree is skipped as soon as a factor that depends only on
//! the already-assigned block vanishes; every skipped assignment has
//! `h_N = 0`. Leaves evaluate the full product.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{code_to_perm, Code};
use crate::error::{Error, Result};

use super::chains::skew_embedding_degree;

pub const MAX_DEGREE: usize = 3;
pub const MAX_CHAIN_LENGTH: usize = 2;

type Matrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArithmetizationStats {
    pub degree: usize,
    pub chain_length: usize,
    /// `2N·m + N²·m`.
    pub assignment_bits: usize,
    /// Full assignments at which `h_N` was evaluated.
    pub leaves: u64,
    /// Leaves with `h_N ≠ 0`.
    pub nonzero: u64,
}

struct Instance<'a> {
    n: usize,
    m: usize,
    w0: Matrix,
    v: Matrix,
    point: &'a [BigInt],
}

struct Assignment {
    /// `W_0 .. W_m`.
    w: Vec<Matrix>,
    /// `g[row][column]`.
    g: Matrix,
    b: Matrix,
}

fn perm_matrix(code: &Code, n: usize) -> Matrix {
    let images = code_to_perm(code).embed(n);
    (0..n)
        .map(|p| (0..n).map(|q| i64::from(images[p] as usize == q + 1)).collect())
        .collect()
}

fn all_matrices(rows: usize, cols: usize) -> impl Iterator<Item = Matrix> {
    (0u64..1 << (rows * cols)).map(move |bits| {
        (0..rows)
            .map(|r| (0..cols).map(|c| ((bits >> (r * cols + c)) & 1) as i64).collect())
            .collect()
    })
}

fn all_columns(rows: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u64..1 << rows).map(move |bits| (0..rows).map(|r| ((bits >> r) & 1) as i64).collect())
}

/// One bracket of `h_2`: no two ones share a row or a column, and every row has
/// a one.
fn h2_bracket(w: &Matrix, n: usize) -> i64 {
    let mut prod = 1;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for k in 0..n {
                    if (i == l) == (j != k) {
                        prod *= 1 - w[i][j] * w[l][k];
                    }
                }
            }
        }
    }
    for row in w {
        prod *= row.iter().sum::<i64>();
    }
    prod
}

fn h2(a: &Assignment, inst: &Instance) -> i64 {
    (1..=inst.m).map(|t| h2_bracket(&a.w[t], inst.n)).product()
}

/// Column `k` part of `h_3`: at most one 1 in the column.
fn h3_column(col: &[i64]) -> i64 {
    let mut prod = 1;
    for i in 0..col.len() {
        for j in 0..col.len() {
            if i != j {
                prod *= 1 - col[i] * col[j];
            }
        }
    }
    prod
}

fn column(m: &Matrix, k: usize) -> Vec<i64> {
    m.iter().map(|row| row[k]).collect()
}

fn h3(a: &Assignment, inst: &Instance) -> i64 {
    (0..inst.m)
        .map(|k| h3_column(&column(&a.g, k)) * h3_column(&column(&a.b, k)))
        .product()
}

fn h4(a: &Assignment, inst: &Instance) -> i64 {
    (0..inst.m)
        .map(|j| column(&a.g, j).iter().sum::<i64>() * column(&a.b, j).iter().sum::<i64>())
        .product()
}

/// `Π (1 − Δ)(1 + Δ)`: 1 iff the matrices agree entrywise.
fn equality_gadget(x: &Matrix, y: &Matrix) -> i64 {
    let mut prod = 1;
    for (rx, ry) in x.iter().zip(y) {
        for (&p, &q) in rx.iter().zip(ry) {
            let delta = p - q;
            prod *= (1 - delta) * (1 + delta);
        }
    }
    prod
}

fn h5(a: &Assignment, inst: &Instance) -> i64 {
    equality_gadget(&a.w[inst.m], &inst.v)
}

/// `W_t = W_{t−1}·τ_{ij}`, i.e. `W_t` is `W_{t−1}` with rows `i` and `j` swapped.
fn h6(a: &Assignment, i: usize, j: usize, t: usize) -> i64 {
    let mut swapped = a.w[t - 1].clone();
    swapped.swap(i, j);
    equality_gadget(&a.w[t], &swapped)
}

/// `h_{7t}` with the label constraints of step `t` folded into the summand:
/// the cover `W_{t−1} ⋖ W_t` is `τ_{ij}` with values `k = w(i) < l = w(j)` and
/// nothing in between; the label value is `b = k` and the label index `s`
/// satisfies `i ≤ s < j`.
fn h7(a: &Assignment, inst: &Instance, t: usize) -> i64 {
    let n = inst.n;
    let prev = &a.w[t - 1];
    let mut sum = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for l in k + 1..n {
                    let corners = prev[i][k] * prev[j][l];
                    if corners == 0 {
                        continue;
                    }
                    let mut empty = 1;
                    for row in prev.iter().take(j).skip(i + 1) {
                        for &entry in row.iter().take(l).skip(k + 1) {
                            empty *= 1 - entry;
                        }
                    }
                    let label_index: i64 = (i..j).filter(|&s| s < n - 1).map(|s| a.g[s][t - 1]).sum();
                    sum += corners * empty * h6(a, i, j, t) * a.b[k][t - 1] * label_index;
                }
            }
        }
    }
    sum
}

fn h8(a: &Assignment, inst: &Instance) -> i64 {
    (1..=inst.m).map(|t| h7(a, inst, t)).product()
}

/// Consecutive labels increase lexicographically.
fn h9(a: &Assignment, inst: &Instance) -> i64 {
    let n = inst.n;
    let mut prod = 1;
    for t in 0..inst.m.saturating_sub(1) {
        let mut sum = 0;
        for i in 0..n {
            let later: i64 = (i + 1..n).map(|j| a.g[j][t + 1]).sum();
            let mut value_order = 0;
            for k in 0..n {
                let at_least: i64 = (k..n).map(|l| a.b[l][t + 1]).sum();
                value_order += a.b[k][t] * at_least;
            }
            sum += a.g[i][t] * (later + a.g[i][t + 1] * value_order);
        }
        prod *= sum;
    }
    prod
}

/// `h_1 = Π x_i^{N−i} · Π_j (Σ_k x_k^{−1} g_{kj})`, expanded over the
/// choices of one `k` per column and evaluated as Laurent monomials.
fn h1(a: &Assignment, inst: &Instance) -> Result<BigRational> {
    let n = inst.n;
    let base: Vec<i64> = (1..=n).map(|i| (n - i) as i64).collect();
    let mut total = BigRational::zero();
    let mut choice = vec![0usize; inst.m];
    loop {
        if (0..inst.m).all(|j| a.g[choice[j]][j] == 1) {
            let mut exp = base.clone();
            for &k in &choice {
                exp[k] -= 1;
            }
            total += laurent_monomial(inst.point, &exp)?;
        }
        // Odometer over choice ∈ [n]^m.
        let mut pos = 0;
        loop {
            if pos == inst.m {
                return Ok(total);
            }
            choice[pos] += 1;
            if choice[pos] < n {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn laurent_monomial(point: &[BigInt], exp: &[i64]) -> Result<BigRational> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (a, &e) in point.iter().zip(exp) {
        if e >= 0 {
            num *= num_traits::pow(a.clone(), e as usize);
        } else if a.is_zero() {
            return Err(Error::NonIntegral(
                "pole of h_1 at a zero coordinate on a nonzero assignment".into(),
            ));
        } else {
            den *= num_traits::pow(a.clone(), (-e) as usize);
        }
    }
    Ok(BigRational::new(num, den))
}

fn h_n(a: &Assignment, inst: &Instance) -> Result<BigRational> {
    let gadgets = h2(a, inst) * h3(a, inst) * h4(a, inst) * h5(a, inst) * h8(a, inst) * h9(a, inst);
    if gadgets == 0 {
        return Ok(BigRational::zero());
    }
    Ok(h1(a, inst)? * BigRational::from_integer(BigInt::from(gadgets)))
}

struct Enumerator<'a> {
    inst: Instance<'a>,
    sum: BigRational,
    stats: ArithmetizationStats,
}

impl Enumerator<'_> {
    fn assign_w(&mut self, a: &mut Assignment, t: usize) -> Result<()> {
        if t > self.inst.m {
            return self.assign_g(a, 0);
        }
        let n = self.inst.n;
        for w in all_matrices(n, n) {
            if h2_bracket(&w, n) == 0 {
                continue;
            }
            if t == self.inst.m && equality_gadget(&w, &self.inst.v) == 0 {
                continue;
            }
            a.w[t] = w;
            self.assign_w(a, t + 1)?;
        }
        Ok(())
    }

    fn assign_g(&mut self, a: &mut Assignment, col: usize) -> Result<()> {
        if col == self.inst.m {
            return self.assign_b(a, 0);
        }
        for c in all_columns(self.inst.n) {
            if h3_column(&c) * c.iter().sum::<i64>() == 0 {
                continue;
            }
            for (row, &entry) in a.g.iter_mut().zip(&c) {
                row[col] = entry;
            }
            self.assign_g(a, col + 1)?;
        }
        Ok(())
    }

    fn assign_b(&mut self, a: &mut Assignment, col: usize) -> Result<()> {
        if col == self.inst.m {
            self.stats.leaves += 1;
            let value = h_n(a, &self.inst)?;
            if !value.is_zero() {
                self.stats.nonzero += 1;
                self.sum += value;
            }
            return Ok(());
        }
        for c in all_columns(self.inst.n) {
            if h3_column(&c) * c.iter().sum::<i64>() == 0 {
                continue;
            }
            for (row, &entry) in a.b.iter_mut().zip(&c) {
                row[col] = entry;
            }
            self.assign_b(a, col + 1)?;
        }
        Ok(())
    }
}

/// `Y_{⟨w⟩/⟨v⟩}(a)` as the boolean sum of `h_N`, for `N ≤ 3` and chain length
/// `m = |w| − |v| ≤ 2`.
pub fn arithmetization_eval(v: &Code, w: &Code, point: &[BigInt]) -> Result<(BigInt, ArithmetizationStats)> {
    let n = skew_embedding_degree(v, w);
    if n > MAX_DEGREE {
        return Err(Error::SizeGuard(format!("N = {n} exceeds {MAX_DEGREE}")));
    }
    let (wv, ww) = (v.weight(), w.weight());
    if ww < wv {
        return Ok((BigInt::zero(), ArithmetizationStats { degree: n, ..Default::default() }));
    }
    let m = (ww - wv) as usize;
    if m > MAX_CHAIN_LENGTH {
        return Err(Error::SizeGuard(format!("chain length {m} exceeds {MAX_CHAIN_LENGTH}")));
    }
    if point.len() < n - 1 {
        return Err(Error::DimensionMismatch { expected: n - 1, got: point.len() });
    }
    if let Some(pos) = point.iter().position(|a| a.is_negative()) {
        return Err(Error::NegativeCoordinate(pos + 1));
    }
    // x_N never occurs with a nonzero exponent in a surviving term.
    let mut full_point = point[..n - 1].to_vec();
    full_point.push(point.get(n - 1).cloned().unwrap_or_else(BigInt::one));

    let inst = Instance {
        n,
        m,
        w0: perm_matrix(v, n),
        v: perm_matrix(w, n),
        point: &full_point,
    };
    let mut assignment = Assignment {
        w: vec![inst.w0.clone(); m + 1],
        g: vec![vec![0; m]; n],
        b: vec![vec![0; m]; n],
    };
    let stats = ArithmetizationStats {
        degree: n,
        chain_length: m,
        assignment_bits: 2 * n * m + n * n * m,
        ..Default::default()
    };
    let mut en = Enumerator { inst, sum: BigRational::zero(), stats };
    en.assign_w(&mut assignment, 1)?;
    if !en.sum.denom().is_one() {
        return Err(Error::NonIntegral(format!("boolean sum {} is not an integer", en.sum)));
    }
    let (value, _) = en.sum.numer().div_rem(en.sum.denom());
    Ok((value, en.stats))
}
