use crate::combinatorics::{bruhat_covers, code_to_perm, Code, Permutation};
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::scalar::Scalar;

/// Edge label `(j, b)`; ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainLabel {
    pub j: usize,
    pub b: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledEdge {
    pub label: ChainLabel,
    pub target: Permutation,
    /// The cover is `target = source·τ_{st}`.
    pub s: usize,
    pub t: usize,
}

/// For each cover `σ ⋖ σ·τ_{st}` in `S_n`, one edge per `j ∈ [s, t)` labeled
/// `(j, σ(s))`. Sorted by label, ties broken by `t`.
pub fn labeled_edges(sigma: &Permutation, n: usize) -> Vec<LabeledEdge> {
    let mut edges = Vec::new();
    for cover in bruhat_covers(sigma, n) {
        let b = sigma.image(cover.i);
        for j in cover.i..cover.k {
            edges.push(LabeledEdge {
                label: ChainLabel { j, b },
                target: cover.perm.clone(),
                s: cover.i,
                t: cover.k,
            });
        }
    }
    edges.sort_by(|x, y| (x.label, x.t).cmp(&(y.label, y.t)));
    edges
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledChain {
    pub start: Permutation,
    pub end: Permutation,
    pub labels: Vec<ChainLabel>,
    pub steps: Vec<(usize, usize)>,
}

impl LabeledChain {
    /// `e(C)` in `n − 1` coordinates: `e_i` counts labels with first entry `i`.
    pub fn exponent(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0u32; n.saturating_sub(1)];
        for label in &self.labels {
            e[label.j - 1] += 1;
        }
        e
    }

    /// `d − e(C)` with `d = (n−1, ..., 1)`.
    pub fn monomial_exponent(&self, n: usize) -> Vec<u32> {
        self.exponent(n)
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                (n - 1 - i)
                    .checked_sub(e as usize)
                    .expect("increasing chain uses index j at most N-j times") as u32
            })
            .collect()
    }
}

struct Frame {
    edges: Vec<LabeledEdge>,
    next: usize,
}

/// Depth-first enumeration of increasing chains from `σ` to `π` in `S_n`.
pub struct ChainIter {
    n: usize,
    start: Permutation,
    target: Permutation,
    budget: usize,
    stack: Vec<Frame>,
    path: Vec<LabeledEdge>,
    pending_empty: bool,
}

impl ChainIter {
    fn new(start: Permutation, target: Permutation, n: usize) -> Self {
        let (ls, lt) = (start.length(), target.length());
        let mut iter = ChainIter {
            n,
            start: start.clone(),
            target: target.clone(),
            budget: 0,
            stack: Vec::new(),
            path: Vec::new(),
            pending_empty: false,
        };
        if lt < ls {
            return iter;
        }
        iter.budget = (lt - ls) as usize;
        if iter.budget == 0 {
            iter.pending_empty = start == target;
        } else {
            iter.stack.push(Frame { edges: labeled_edges(&start, n), next: 0 });
        }
        iter
    }

    fn emit(&self) -> LabeledChain {
        LabeledChain {
            start: self.start.clone(),
            end: self.target.clone(),
            labels: self.path.iter().map(|e| e.label).collect(),
            steps: self.path.iter().map(|e| (e.s, e.t)).collect(),
        }
    }
}

impl Iterator for ChainIter {
    type Item = LabeledChain;

    fn next(&mut self) -> Option<LabeledChain> {
        if std::mem::take(&mut self.pending_empty) {
            return Some(self.emit());
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == frame.edges.len() {
                self.stack.pop();
                self.path.pop();
                continue;
            }
            let edge = frame.edges[frame.next].clone();
            frame.next += 1;
            if self.path.len() + 1 == self.budget {
                if edge.target == self.target {
                    self.path.push(edge);
                    let chain = self.emit();
                    self.path.pop();
                    return Some(chain);
                }
                continue;
            }
            let label = edge.label;
            let onward = labeled_edges(&edge.target, self.n)
                .into_iter()
                .filter(|e| e.label > label)
                .collect();
            self.path.push(edge);
            self.stack.push(Frame { edges: onward, next: 0 });
        }
    }
}

/// Increasing chains from `σ` to `π` in the labeled Bruhat order of `S_n`.
pub fn increasing_chains(sigma: &Permutation, pi: &Permutation, n: usize) -> ChainIter {
    assert!(
        sigma.degree() <= n && pi.degree() <= n,
        "permutations must embed in S_{n}"
    );
    ChainIter::new(sigma.clone(), pi.clone(), n)
}

/// Common `N` for a pair of codes: the larger embedding degree, at least 1.
pub fn skew_embedding_degree(v: &Code, w: &Code) -> usize {
    v.embedding_degree().max(w.embedding_degree()).max(1)
}

/// `Y_{⟨w⟩/⟨v⟩} = Σ_C x^{d − e(C)}` in `N − 1` variables.
pub fn skew_expand<T: Scalar>(v: &Code, w: &Code) -> SparsePolynomial<T> {
    let n = skew_embedding_degree(v, w);
    let mut out = SparsePolynomial::zero(n - 1);
    for chain in increasing_chains(&code_to_perm(v), &code_to_perm(w), n) {
        out.add_term(chain.monomial_exponent(n), T::one());
    }
    out
}

/// `Y_{⟨w⟩/⟨v⟩}(a)` summed chain by chain; `a` needs at least `N − 1`
/// coordinates.
pub fn skew_eval<T: Scalar>(v: &Code, w: &Code, point: &[T]) -> Result<T> {
    let n = skew_embedding_degree(v, w);
    if point.len() < n - 1 {
        return Err(Error::DimensionMismatch { expected: n - 1, got: point.len() });
    }
    let powers: Vec<Vec<T>> = point[..n - 1]
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut table = vec![T::one()];
            for _ in 0..(n - 1 - i) {
                let next = table.last().unwrap().clone() * a;
                table.push(next);
            }
            table
        })
        .collect();
    let mut acc = T::zero();
    for chain in increasing_chains(&code_to_perm(v), &code_to_perm(w), n) {
        let mut term = T::one();
        for (i, &e) in chain.monomial_exponent(n).iter().enumerate() {
            term *= &powers[i][e as usize];
        }
        acc += term;
    }
    Ok(acc)
}
