//! Integer kernels with an overflow-checked fixed-width fast path.
//!
//! Hot loops are written once against [`ExactInt`] and instantiated for
//! `i64`/`i128` first; a `None` anywhere means overflow and the caller reruns
//! the same kernel over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub trait ExactInt: Clone + Send + Sync + std::fmt::Debug + 'static {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;

    /// Least nonnegative residue modulo `p`.
    fn residue(&self, p: u64) -> u64;

    fn mul_add(&self, a: &Self, b: &Self) -> Option<Self> {
        self.add(&a.mul(b)?)
    }
}

macro_rules! fixed_width {
    ($t:ty, $to:ident) => {
        impl ExactInt for $t {
            fn zero() -> Self {
                0
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn from_big(v: &BigInt) -> Option<Self> {
                v.$to()
            }
            fn to_big(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn add(&self, rhs: &Self) -> Option<Self> {
                self.checked_add(*rhs)
            }
            fn sub(&self, rhs: &Self) -> Option<Self> {
                self.checked_sub(*rhs)
            }
            fn mul(&self, rhs: &Self) -> Option<Self> {
                self.checked_mul(*rhs)
            }
            fn residue(&self, p: u64) -> u64 {
                (*self as i128).rem_euclid(p as i128) as u64
            }
        }
    };
}

fixed_width!(i64, to_i64);
fixed_width!(i128, to_i128);

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn residue(&self, p: u64) -> u64 {
        self.mod_floor(&BigInt::from(p))
            .to_u64()
            .expect("residue below modulus")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_reported() {
        assert_eq!(ExactInt::mul(&i64::MAX, &2), None);
        assert!(ExactInt::mul(&BigInt::from(i64::MAX), &BigInt::from(2)).is_some());
    }

    #[test]
    fn residues_are_nonnegative() {
        assert_eq!((-3i64).residue(7), 4);
        assert_eq!(BigInt::from(-3).residue(7), 4);
        assert_eq!((-3i128).residue(7), 4);
    }
}
