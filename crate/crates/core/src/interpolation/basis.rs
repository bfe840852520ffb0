use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Code;
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::schubert::{k_bound, schubert_eval, schubert_expand_transition};
use crate::schur::{schur_coefficient_bound, schur_eval, schur_expand};

type Poly = SparsePolynomial<BigInt>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Monomial,
    Schur,
    Schubert,
}

impl BasisKind {
    pub const ALL: [BasisKind; 3] = [BasisKind::Monomial, BasisKind::Schur, BasisKind::Schubert];

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Monomial => "monomial",
            BasisKind::Schur => "schur",
            BasisKind::Schubert => "schubert",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}")))
    }
}

/// An interpolation-friendly basis: each element `t_λ` has coefficient 1 at
/// `x^{e_λ}`, and for every positive `c` the functional `⟨Ac, ·⟩` is uniquely
/// maximized over the support of `t_λ` at `e_λ`.
pub trait Basis: Sync {
    fn kind(&self) -> BasisKind;

    /// The 0-1 matrix `A` for `n` variables.
    fn transform(&self, n: usize) -> Vec<Vec<u8>>;

    fn apply_transform(&self, c: &[u64]) -> Vec<u64> {
        self.transform(c.len())
            .iter()
            .map(|row| row.iter().zip(c).map(|(&a, &ci)| u64::from(a) * ci).sum())
            .collect()
    }

    /// `e_λ` padded to `n` entries.
    fn label_to_leading(&self, label: &Code, n: usize) -> Result<Vec<u32>> {
        self.check_label(label, n)?;
        Ok(label.padded(n))
    }

    /// Inverse of `label_to_leading`; `None` when `e` is not a leading exponent.
    fn leading_to_label(&self, e: &[u32]) -> Option<Code>;

    fn check_label(&self, label: &Code, n: usize) -> Result<()> {
        if label.len() > n {
            return Err(Error::InvalidArgument(format!(
                "label {label} needs more than {n} variables"
            )));
        }
        Ok(())
    }

    fn eval(&self, label: &Code, point: &[BigInt]) -> Result<BigInt>;

    /// `t_λ` in `n` variables.
    fn expand(&self, label: &Code, n: usize) -> Result<Poly>;

    /// Bound on the absolute monomial coefficients of `t_λ` in `n` variables.
    fn coefficient_bound(&self, label: &Code, n: usize) -> BigInt;
}

fn all_ones_triangle(n: usize, lower: bool) -> Vec<Vec<u8>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| u8::from(if lower { j <= i } else { j >= i }))
                .collect()
        })
        .collect()
}

pub struct MonomialBasis;
pub struct SchurBasis;
pub struct SchubertBasis;

impl Basis for MonomialBasis {
    fn kind(&self) -> BasisKind {
        BasisKind::Monomial
    }

    fn transform(&self, n: usize) -> Vec<Vec<u8>> {
        (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect()
    }

    fn leading_to_label(&self, e: &[u32]) -> Option<Code> {
        Some(Code::new(e.to_vec()))
    }

    fn eval(&self, label: &Code, point: &[BigInt]) -> Result<BigInt> {
        if point.len() < label.len() {
            return Err(Error::DimensionMismatch { expected: label.len(), got: point.len() });
        }
        Ok(label
            .entries()
            .iter()
            .zip(point)
            .fold(BigInt::one(), |acc, (&e, a)| acc * num_traits::pow(a.clone(), e as usize)))
    }

    fn expand(&self, label: &Code, n: usize) -> Result<Poly> {
        self.check_label(label, n)?;
        Ok(Poly::monomial(label.padded(n), BigInt::one()))
    }

    fn coefficient_bound(&self, _label: &Code, _n: usize) -> BigInt {
        BigInt::one()
    }
}

impl Basis for SchurBasis {
    fn kind(&self) -> BasisKind {
        BasisKind::Schur
    }

    fn transform(&self, n: usize) -> Vec<Vec<u8>> {
        all_ones_triangle(n, false)
    }

    fn leading_to_label(&self, e: &[u32]) -> Option<Code> {
        let label = Code::new(e.to_vec());
        label.is_dominant().then_some(label)
    }

    fn check_label(&self, label: &Code, n: usize) -> Result<()> {
        if !label.is_dominant() {
            return Err(Error::NotDominant(label.to_string()));
        }
        if label.len() > n {
            return Err(Error::InvalidArgument(format!(
                "label {label} needs more than {n} variables"
            )));
        }
        Ok(())
    }

    fn eval(&self, label: &Code, point: &[BigInt]) -> Result<BigInt> {
        schur_eval(label, point)
    }

    fn expand(&self, label: &Code, n: usize) -> Result<Poly> {
        schur_expand(label, n)
    }

    fn coefficient_bound(&self, label: &Code, _n: usize) -> BigInt {
        schur_coefficient_bound(label.weight())
    }
}

impl Basis for SchubertBasis {
    fn kind(&self) -> BasisKind {
        BasisKind::Schubert
    }

    fn transform(&self, n: usize) -> Vec<Vec<u8>> {
        all_ones_triangle(n, true)
    }

    fn leading_to_label(&self, e: &[u32]) -> Option<Code> {
        Some(Code::new(e.to_vec()))
    }

    fn eval(&self, label: &Code, point: &[BigInt]) -> Result<BigInt> {
        schubert_eval(label, point)
    }

    fn expand(&self, label: &Code, n: usize) -> Result<Poly> {
        self.check_label(label, n)?;
        if label.is_empty() {
            return Ok(Poly::one(n));
        }
        schubert_expand_transition::<BigInt>(label).with_nvars(n)
    }

    fn coefficient_bound(&self, label: &Code, n: usize) -> BigInt {
        k_bound(label, n)
    }
}

pub fn descriptor(kind: BasisKind) -> &'static dyn Basis {
    match kind {
        BasisKind::Monomial => &MonomialBasis,
        BasisKind::Schur => &SchurBasis,
        BasisKind::Schubert => &SchubertBasis,
    }
}

/// `Σ_λ a_λ t_λ`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expansion {
    pub basis: BasisKind,
    terms: BTreeMap<Code, BigInt>,
}

impl Expansion {
    pub fn new(basis: BasisKind) -> Self {
        Expansion { basis, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(basis: BasisKind, terms: I) -> Self
    where
        I: IntoIterator<Item = (Code, BigInt)>,
    {
        let mut out = Expansion::new(basis);
        for (label, c) in terms {
            out.add_term(label, c);
        }
        out
    }

    pub fn add_term(&mut self, label: Code, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Code, BigInt> {
        &self.terms
    }

    pub fn get(&self, label: &Code) -> Option<&BigInt> {
        self.terms.get(label)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest label length, i.e. the fewest variables the sum lives in.
    pub fn min_nvars(&self) -> usize {
        self.terms.keys().map(Code::len).max().unwrap_or(0)
    }

    /// Largest label weight.
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(Code::weight).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        let basis = descriptor(self.basis);
        let mut acc = BigInt::zero();
        for (label, c) in &self.terms {
            acc += c * basis.eval(label, point)?;
        }
        Ok(acc)
    }

    /// The monomial expansion in `n` variables.
    pub fn materialize(&self, n: usize) -> Result<Poly> {
        let basis = descriptor(self.basis);
        let mut out = Poly::zero(n);
        for (label, c) in &self.terms {
            for (e, coeff) in basis.expand(label, n)?.into_terms() {
                out.add_term(e, coeff * c);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::codes_of_weight;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn code(v: &[u32]) -> Code {
        Code::new(v.to_vec())
    }

    fn labels(kind: BasisKind, n: usize, max_weight: u32) -> Vec<Code> {
        (0..=max_weight)
            .flat_map(|w| codes_of_weight(w, n))
            .filter(|c| kind != BasisKind::Schur || c.is_dominant())
            .collect()
    }

    #[test]
    fn transforms() {
        assert_eq!(SchubertBasis.transform(3), vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]);
        assert_eq!(SchurBasis.transform(3), vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
        assert_eq!(MonomialBasis.transform(2), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(SchubertBasis.apply_transform(&[1, 2, 3]), vec![1, 3, 6]);
        assert_eq!(SchurBasis.apply_transform(&[1, 2, 3]), vec![6, 5, 3]);
    }

    #[test]
    fn label_round_trip() {
        for kind in BasisKind::ALL {
            let basis = descriptor(kind);
            for label in labels(kind, 3, 5) {
                let e = basis.label_to_leading(&label, 3).unwrap();
                assert_eq!(basis.leading_to_label(&e), Some(label));
            }
        }
        assert_eq!(SchurBasis.leading_to_label(&[0, 1]), None);
        assert!(SchurBasis.label_to_leading(&code(&[1, 2]), 2).is_err());
        assert!(SchubertBasis.label_to_leading(&code(&[0, 0, 1]), 2).is_err());
    }

    #[test]
    fn leading_exponent_is_the_unique_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kind in BasisKind::ALL {
            let basis = descriptor(kind);
            for n in 1..=3 {
                for label in labels(kind, n, 5) {
                    let t = basis.expand(&label, n).unwrap();
                    let lead = basis.label_to_leading(&label, n).unwrap();
                    assert_eq!(t.coeff(&lead), BigInt::one(), "{kind} {label}");
                    for _ in 0..10 {
                        let c: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=50)).collect();
                        let d = basis.apply_transform(&c);
                        let score = |e: &[u32]| -> u64 { d.iter().zip(e).map(|(&a, &b)| a * u64::from(b)).sum() };
                        let top = score(&lead);
                        for (e, _) in t.terms() {
                            assert!(e == &lead || score(e) < top, "{kind} {label}: {e:?} vs {lead:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eval_matches_expand() {
        let point: Vec<BigInt> = [3, 0, 5].iter().map(|&x| BigInt::from(x)).collect();
        for kind in BasisKind::ALL {
            let basis = descriptor(kind);
            for label in labels(kind, 3, 4) {
                let t = basis.expand(&label, 3).unwrap();
                assert_eq!(basis.eval(&label, &point).unwrap(), t.evaluate(&point).unwrap());
                let bound = basis.coefficient_bound(&label, 3);
                assert!(t.terms().all(|(_, c)| c.magnitude() <= bound.magnitude()));
            }
        }
    }

    #[test]
    fn expansion_bookkeeping() {
        let mut e = Expansion::new(BasisKind::Schubert);
        e.add_term(code(&[1]), BigInt::from(2));
        e.add_term(code(&[0, 1]), BigInt::from(3));
        e.add_term(code(&[1]), BigInt::from(-2));
        e.add_term(code(&[2]), BigInt::zero());
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&code(&[0, 1])), Some(&BigInt::from(3)));
        let p = e.materialize(2).unwrap();
        assert_eq!(p, &Poly::var(2, 1).scale(&BigInt::from(3)) + &Poly::var(2, 2).scale(&BigInt::from(3)));
    }

    #[test]
    fn basis_names() {
        for kind in BasisKind::ALL {
            assert_eq!(kind.to_string().parse::<BasisKind>().unwrap(), kind);
        }
        assert!("wrong".parse::<BasisKind>().is_err());
    }
}
