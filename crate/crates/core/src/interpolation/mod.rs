//! Sparse interpolation over interpolation-friendly bases.

mod basis;
mod ks;
mod sparse;
mod univariate;

pub use basis::{descriptor, Basis, BasisKind, Expansion, MonomialBasis, SchubertBasis, SchurBasis};
pub use ks::{first_primes, is_distinguishing, is_prime, ks_set, majority_threshold, next_prime_above, KsSet};
pub use sparse::{
    extract_leading, interpolate, interpolate_with_stats, phi_eval, phi_point, BlackBox, FnBlackBox,
    InterpolationStats,
};
pub use univariate::{dense_degree, dense_eval, univariate_interpolate, NewtonForm};
