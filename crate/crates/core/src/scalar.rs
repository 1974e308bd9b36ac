//! Exact scalar types used for Euler contributions and surface constants.
//!
//! Everything that compares a rational quantity against a threshold is
//! generic over [`ExactScalar`]. Fixed-width rationals report overflow through
//! the checked operations instead of wrapping; [`num_rational::BigRational`]
//! never overflows.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

pub trait ExactScalar:
    Clone + Debug + Display + Ord + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv
{
    /// `numer / denom`, or `None` if the parts do not fit or `denom == 0`.
    fn from_fraction(numer: i64, denom: i64) -> Option<Self>;

    fn from_int(value: i64) -> Option<Self> {
        Self::from_fraction(value, 1)
    }

    /// ⌊self⌋ as an `i64`, if it fits.
    fn floor_i64(&self) -> Option<i64>;

    /// Numerator and denominator in lowest terms with a positive denominator.
    fn to_fraction(&self) -> Option<(i64, i64)>;
}

macro_rules! impl_fixed_ratio {
    ($($t:ty),*) => {$(
        impl ExactScalar for Ratio<$t> {
            fn from_fraction(numer: i64, denom: i64) -> Option<Self> {
                let numer = <$t>::try_from(numer).ok()?;
                let denom = <$t>::try_from(denom).ok()?;
                if denom == 0 {
                    return None;
                }
                // Ratio::new reduces with arithmetic that may overflow on MIN.
                if numer == <$t>::MIN || denom == <$t>::MIN {
                    return None;
                }
                Some(Ratio::new(numer, denom))
            }

            fn floor_i64(&self) -> Option<i64> {
                let (q, _) = self.numer().div_mod_floor(self.denom());
                i64::try_from(q).ok()
            }

            fn to_fraction(&self) -> Option<(i64, i64)> {
                Some((i64::try_from(*self.numer()).ok()?, i64::try_from(*self.denom()).ok()?))
            }
        }
    )*};
}

impl_fixed_ratio!(i8, i16, i32, i64, i128);

impl ExactScalar for Ratio<BigInt> {
    fn from_fraction(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Ratio::new(BigInt::from(numer), BigInt::from(denom)))
    }

    fn floor_i64(&self) -> Option<i64> {
        self.floor().to_integer().to_i64()
    }

    fn to_fraction(&self) -> Option<(i64, i64)> {
        debug_assert!(self.denom().is_positive());
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn floors_round_toward_negative_infinity() {
        assert_eq!(Rational64::from_fraction(22, 5).unwrap().floor_i64(), Some(4));
        assert_eq!(Rational64::from_fraction(-7, 2).unwrap().floor_i64(), Some(-4));
        assert_eq!(BigRational::from_fraction(-7, 2).unwrap().floor_i64(), Some(-4));
        assert_eq!(Ratio::<i8>::from_fraction(-8, 1).unwrap().floor_i64(), Some(-8));
    }

    #[test]
    fn construction_rejects_bad_parts() {
        assert!(Rational64::from_fraction(1, 0).is_none());
        assert!(Ratio::<i8>::from_fraction(300, 1).is_none());
        assert!(Ratio::<i8>::from_fraction(-128, 3).is_none());
        assert_eq!(Ratio::<i8>::from_fraction(6, -4).unwrap().to_fraction(), Some((-3, 2)));
    }

    #[test]
    fn checked_ops_detect_overflow() {
        let a = Ratio::<i8>::from_fraction(1, 11).unwrap();
        let b = Ratio::<i8>::from_fraction(1, 13).unwrap();
        assert!(a.checked_add(&b).is_none());
        let c = Rational64::from_fraction(1, 11).unwrap();
        let d = Rational64::from_fraction(1, 13).unwrap();
        assert_eq!(c.checked_add(&d).unwrap().to_fraction(), Some((24, 143)));
    }
}
