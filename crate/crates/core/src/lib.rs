//! Exact Schubert calculus and sparse interpolation.
//!
//! The crate is organised bottom-up:
//!
//! - [`combinatorics`]: Lehmer codes, permutations, lengths and Bruhat covers.
//! - [`poly`]: sparse multivariate polynomials and the divided difference operator.
//! - [`schur`]: complete homogeneous and Schur polynomials (Jacobi–Trudi).
//! - [`schubert`]: Schubert polynomials by transition and by divided differences.
//! - [`skew`]: labeled Bruhat order, increasing chains, skew Schubert polynomials
//!   and a boolean-sum arithmetization checker.
//! - [`interpolation`]: Klivans–Spielman vectors, univariate interpolation and the
//!   deterministic sparse interpolation algorithm over interpolation-friendly bases.
//! - [`lr`]: generalized Littlewood–Richardson coefficients.
//! - [`io`]: JSON file formats.
//!
//! Polynomial and evaluation routines are generic over a [`Scalar`] coefficient
//! ring; the aliases below fix the arbitrary-precision integer instantiation used
//! throughout the interpolation layer.

pub mod combinatorics;
pub mod error;
pub mod interpolation;
pub mod io;
pub mod lr;
pub mod poly;
pub mod scalar;
pub mod schubert;
pub mod schur;
pub mod skew;

pub use combinatorics::{Code, Permutation};
pub use error::{Error, Result};
pub use interpolation::{BasisKind, Expansion};
pub use poly::SparsePolynomial;
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Integer polynomial, the universal value type.
pub type Poly = SparsePolynomial<BigInt>;
/// Polynomial over the rationals.
pub type RatPoly = SparsePolynomial<BigRational>;
/// Machine-integer polynomial, handy for small exact checks.
pub type SmallPoly = SparsePolynomial<i64>;
/// A point with arbitrary-precision integer coordinates.
pub type Point = Vec<BigInt>;
