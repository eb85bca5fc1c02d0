//! Exact scalar fields.
//!
//! Every algorithm in this crate relies on exact zero tests, so the scalar
//! bound requires `Eq`. Floating-point types do not satisfy it and cannot be
//! plugged in by accident.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// An exact field element.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Num
    + Neg<Output = Self>
    + FromPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
    /// The integer `n` embedded in the field.
    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("every field of characteristic 0 contains the integers")
    }

    /// `num / den`; panics on a zero denominator.
    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::int(num) / Self::int(den)
    }
}

impl Scalar for Ratio<BigInt> {}
impl Scalar for Ratio<i64> {}
impl Scalar for Ratio<i128> {}
