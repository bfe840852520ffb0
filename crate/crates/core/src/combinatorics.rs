//! Lehmer codes, permutations and the Bruhat order.
//!
//! Both types are stored canonically: a [`Code`] never ends in a zero and a
//! [`Permutation`] never ends in a fixed point, so `(2,0,3)` and `(2,0,3,0,0)`
//! (or `316245` and `3162457`) compare equal. Positions and values are 1-based
//! in every public signature.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A code `(v_1, ..., v_n)`, identified with all of its zero-padded extensions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Code(Vec<u32>);

impl Code {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Code(entries)
    }

    pub fn empty() -> Self {
        Code(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Index of the last nonzero entry (0 for the empty code).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `i`; zero beyond the stored length.
    pub fn get(&self, i: usize) -> u32 {
        assert!(i >= 1, "code positions are 1-based");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }

    /// The entries zero-padded to length `n`; `n` must be at least `len()`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.0.len(), "cannot pad code of length {} to {n}", self.0.len());
        let mut out = self.0.clone();
        out.resize(n, 0);
        out
    }

    /// Smallest `N` such that `⟨v⟩` lives in `S_N`, i.e. `max_i (v_i + i)`.
    pub fn embedding_degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &v)| v as usize + i + 1)
            .max()
            .unwrap_or(0)
    }

    /// `v_1 >= v_2 >= ...` (a partition).
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `v_1 <= ... <= v_k` followed by zeros only.
    pub fn is_antidominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn to_permutation(&self) -> Permutation {
        code_to_perm(self)
    }
}

impl From<Vec<u32>> for Code {
    fn from(entries: Vec<u32>) -> Self {
        Code::new(entries)
    }
}

impl From<Code> for Vec<u32> {
    fn from(code: Code) -> Self {
        code.0
    }
}

impl From<&[u32]> for Code {
    fn from(entries: &[u32]) -> Self {
        Code::new(entries.to_vec())
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Code::new(parse_list(s)?))
    }
}

/// A permutation in one-line notation, identified with its extensions by fixed
/// points at the tail.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity() -> Self {
        Permutation(Vec::new())
    }

    /// Validates that `images` is a bijection on `1..=images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &value in &images {
            let idx = value as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {value} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[idx - 1], true) {
                return Err(Error::InvalidPermutation(format!("value {value} repeated")));
            }
        }
        Ok(Self::canonical(images))
    }

    fn canonical(mut images: Vec<u32>) -> Self {
        while let Some(&last) = images.last() {
            if last as usize == images.len() {
                images.pop();
            } else {
                break;
            }
        }
        Permutation(images)
    }

    /// Number of positions actually stored (the smallest `N` with `σ ∈ S_N`).
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ(i)` for 1-based `i`, with fixed points beyond the stored prefix.
    pub fn image(&self, i: usize) -> u32 {
        assert!(i >= 1, "permutation positions are 1-based");
        self.0.get(i - 1).copied().unwrap_or(i as u32)
    }

    /// One-line notation in `S_n`; `n` must be at least `degree()`.
    pub fn embed(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.0.len(), "permutation of degree {} does not fit S_{n}", self.0.len());
        let mut out = self.0.clone();
        out.extend((self.0.len() as u32 + 1)..=(n as u32));
        out
    }

    /// Number of inversions.
    pub fn length(&self) -> u64 {
        perm_length(self)
    }

    pub fn code(&self) -> Code {
        perm_to_code(self)
    }

    /// `σ·τ_{ik}`: swap the entries at positions `i < k`.
    pub fn apply_transposition(&self, i: usize, k: usize) -> Result<Permutation> {
        apply_transposition(self, i, k)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (pos, &value) in self.0.iter().enumerate() {
            inv[value as usize - 1] = pos as u32 + 1;
        }
        Permutation::canonical(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_images(parse_list(s)?)
    }
}

/// `⟨v⟩`: position `k` receives the `(v_k + 1)`-th smallest value not yet used.
pub fn code_to_perm(code: &Code) -> Permutation {
    let n = code.embedding_degree();
    let mut unused: Vec<u32> = (1..=n as u32).collect();
    let mut images = Vec::with_capacity(n);
    for i in 1..=n {
        let rank = code.get(i) as usize;
        images.push(unused.remove(rank));
    }
    Permutation::canonical(images)
}

/// The Lehmer code `v_i = #{j > i : σ(j) < σ(i)}`, trailing zeros trimmed.
pub fn perm_to_code(sigma: &Permutation) -> Code {
    let images = &sigma.0;
    let entries = images
        .iter()
        .enumerate()
        .map(|(i, &si)| images[i + 1..].iter().filter(|&&sj| sj < si).count() as u32)
        .collect();
    Code::new(entries)
}

pub fn perm_length(sigma: &Permutation) -> u64 {
    let images = &sigma.0;
    let mut count = 0u64;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                count += 1;
            }
        }
    }
    count
}

/// Swap positions `i` and `k` (1-based, `i < k`). Positions beyond the stored
/// degree are fixed points, so no upper bound applies.
pub fn apply_transposition(sigma: &Permutation, i: usize, k: usize) -> Result<Permutation> {
    if i == 0 || k <= i {
        return Err(Error::IndexOutOfRange(format!(
            "transposition ({i},{k}) needs 1 <= i < k"
        )));
    }
    let mut images = sigma.embed(sigma.degree().max(k));
    images.swap(i - 1, k - 1);
    Ok(Permutation::canonical(images))
}

/// A Bruhat cover `σ ⋖ σ·τ_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub i: usize,
    pub k: usize,
    pub perm: Permutation,
}

/// Every cover of `σ` inside `S_n`, ordered by `(i, k)`.
pub fn bruhat_covers(sigma: &Permutation, n: usize) -> Vec<Cover> {
    let base = sigma.length();
    let mut covers = Vec::new();
    for i in 1..=n {
        for k in i + 1..=n {
            let perm = apply_transposition(sigma, i, k).expect("i < k by construction");
            if perm.length() == base + 1 {
                covers.push(Cover { i, k, perm });
            }
        }
    }
    covers
}

pub fn is_dominant(code: &Code) -> bool {
    code.is_dominant()
}

pub fn is_antidominant(code: &Code) -> bool {
    code.is_antidominant()
}

/// All codes of exactly the given weight with at most `max_len` entries.
pub fn codes_of_weight(weight: u32, max_len: usize) -> Vec<Code> {
    fn rec(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Code>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Code::new(prefix.clone()));
            }
            return;
        }
        for v in 0..=remaining {
            prefix.push(v);
            rec(remaining - v, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_len, &mut Vec::with_capacity(max_len), &mut out);
    out.sort();
    out
}

/// All permutations of `S_n` in lexicographic order of one-line notation.
pub fn permutations(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::canonical(prefix.clone()));
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v as u32);
                rec(n, prefix, used, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("{part:?}: {e}")))
        })
        .collect()
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (idx, v) in values.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}
