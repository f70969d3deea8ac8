//! Coefficient rings used by the sparse vectors and exact linear algebra.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{Num, Signed};

/// A commutative ring that can carry web and tabloid coefficients.
///
/// Every action in this crate maps integer combinations to integer
/// combinations, so any signed ring with exact equality works.
pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Num + Signed + Send + Sync + 'static
{
    fn from_i64(value: i64) -> Self;
}

/// An integral domain with exact division and gcd, suitable for
/// fraction-free elimination. Rationals over it are `Ratio<Self>`.
pub trait ExactInteger: Coefficient + Integer {}

impl<T> ExactInteger for T where T: Coefficient + Integer {}

macro_rules! impl_coefficient {
    ($($t:ty),*) => {
        $(
            impl Coefficient for $t {
                #[inline]
                fn from_i64(value: i64) -> Self {
                    <$t>::try_from(value).expect("coefficient out of range")
                }
            }
        )*
    };
}

impl_coefficient!(i32, i64, i128);

impl Coefficient for num_bigint::BigInt {
    fn from_i64(value: i64) -> Self {
        num_bigint::BigInt::from(value)
    }
}

impl Coefficient for f64 {
    fn from_i64(value: i64) -> Self {
        value as f64
    }
}

impl Coefficient for f32 {
    fn from_i64(value: i64) -> Self {
        value as f32
    }
}

impl<T: ExactInteger> Coefficient for num_rational::Ratio<T> {
    fn from_i64(value: i64) -> Self {
        num_rational::Ratio::from_integer(T::from_i64(value))
    }
}
