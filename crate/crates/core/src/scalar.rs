//! Integer scalar abstraction shared by the exact-arithmetic modules.
//!
//! Slope arithmetic and integer normal forms are written against
//! [`IntScalar`] so the same code runs on machine integers and on
//! arbitrary-precision integers.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as a coefficient ring element.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("every IntScalar holds an i64")
    }
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive
{
}

/// Greatest common divisor, always nonnegative.
pub fn gcd<T: IntScalar>(a: &T, b: &T) -> T {
    a.gcd(b).abs()
}

/// gcd of a sequence; zero for an empty or all-zero sequence.
pub fn gcd_all<'a, T: IntScalar + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| gcd(&acc, v))
}
