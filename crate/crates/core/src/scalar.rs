//! Coefficient rings.
//!
//! Every structure constant computed by this crate is an integer, so ring
//! elements are generic over an exact, ordered, signed number type. `i64` is
//! the workhorse; `i128` and [`num_bigint::BigInt`] are available when sums
//! might overflow. Floating point types are deliberately not `Scalar`s: they
//! are neither `Ord` nor `Hash`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact coefficient type.
pub trait Scalar:
    Num + Signed + FromPrimitive + ToPrimitive + Clone + Ord + Hash + Debug + Display + Send + Sync
{
    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("every exact scalar type holds an i64")
    }

    /// `self / 2^k` when exact, `None` otherwise.
    fn div_pow2(&self, k: u32) -> Option<Self> {
        let mut out = self.clone();
        let two = Self::from_small(2);
        for _ in 0..k {
            if !(out.clone() % two.clone()).is_zero() {
                return None;
            }
            out = out / two.clone();
        }
        Some(out)
    }

    fn mul_pow2(&self, k: u32) -> Self {
        let two = Self::from_small(2);
        (0..k).fold(self.clone(), |acc, _| acc * two.clone())
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + ToPrimitive + Clone + Ord + Hash + Debug + Display + Send + Sync
{
}
