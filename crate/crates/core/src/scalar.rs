//! Exact scalar traits shared by the lattice and polynomial layers.
//!
//! Everything here is exact: machine integers, big integers and their
//! fraction fields. Floating point types are deliberately not implemented.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};

/// An exact coefficient ring.
pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Eq + Hash + Send + Sync + num_traits::Num + std::ops::Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// Exact division, `None` when the quotient leaves the ring.
    fn checked_exact_div(&self, other: &Self) -> Option<Self>;

    fn is_integral(&self) -> bool;
}

/// Coefficients in which every nonzero element is invertible.
pub trait FieldCoefficient: Coefficient {
    fn inv(&self) -> Self;
}

/// Euclidean integers used by the lattice algorithms.
pub trait IntScalar: Coefficient + Integer + Signed + Ord {
    fn to_i64_checked(&self) -> Option<i64>;
}

macro_rules! prim_int {
    ($t:ty) => {
        impl Coefficient for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            fn checked_exact_div(&self, other: &Self) -> Option<Self> {
                if *other == 0 || self % other != 0 {
                    None
                } else {
                    Some(self / other)
                }
            }
            fn is_integral(&self) -> bool {
                true
            }
        }
        impl IntScalar for $t {
            fn to_i64_checked(&self) -> Option<i64> {
                i64::try_from(*self).ok()
            }
        }
    };
}

prim_int!(i64);
prim_int!(i128);

impl Coefficient for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn checked_exact_div(&self, other: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        if r == BigInt::from(0) {
            Some(q)
        } else {
            None
        }
    }
    fn is_integral(&self) -> bool {
        true
    }
}

impl IntScalar for BigInt {
    fn to_i64_checked(&self) -> Option<i64> {
        self.to_i64()
    }
}

impl<T> Coefficient for Ratio<T>
where
    T: IntScalar,
    Ratio<T>: Display,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v))
    }
    fn checked_exact_div(&self, other: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(other) {
            None
        } else {
            Some(self.clone() / other.clone())
        }
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl<T> FieldCoefficient for Ratio<T>
where
    T: IntScalar,
    Ratio<T>: Display,
{
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Formats a fraction as `p/q`, or `p` when integral.
pub fn fraction_string<T: IntScalar>(r: &Ratio<T>) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`.
pub fn parse_fraction<T: IntScalar + std::str::FromStr>(s: &str) -> Option<Ratio<T>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: T = p.trim().parse().ok()?;
            let q: T = q.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&q) {
                None
            } else {
                Some(Ratio::new(p, q))
            }
        }
        None => s.parse().ok().map(Ratio::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn exact_division() {
        assert_eq!(6i64.checked_exact_div(&3), Some(2));
        assert_eq!(7i64.checked_exact_div(&3), None);
        assert_eq!(BigInt::from(10).checked_exact_div(&BigInt::from(4)), None);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(!half.is_integral());
        assert_eq!(half.inv(), BigRational::from_i64(2));
    }

    #[test]
    fn fraction_round_trip() {
        let r = Ratio::new(-3i64, 9);
        let s = fraction_string(&r);
        assert_eq!(s, "-1/3");
        assert_eq!(parse_fraction::<i64>(&s), Some(r));
        assert_eq!(parse_fraction::<i64>("4"), Some(Ratio::from_integer(4)));
        assert_eq!(parse_fraction::<i64>("1/0"), None);
    }
}
