use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{NumAssignRef, NumRef, Signed};

/// Coefficient ring for polynomials and evaluation.
///
/// Division is only ever used where the quotient is exact (fraction-free
/// elimination), so any integral domain with exact `/` on divisible inputs works.
pub trait Scalar:
    NumRef + NumAssignRef + Signed + PartialOrd + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_u64(value: u64) -> Self;
}

impl Scalar for BigInt {
    fn from_u64(value: u64) -> Self {
        BigInt::from(value)
    }
}

impl Scalar for BigRational {
    fn from_u64(value: u64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }
}

impl Scalar for i64 {
    fn from_u64(value: u64) -> Self {
        i64::try_from(value).expect("value exceeds i64")
    }
}

impl Scalar for i128 {
    fn from_u64(value: u64) -> Self {
        i128::from(value)
    }
}
