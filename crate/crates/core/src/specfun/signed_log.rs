use std::fmt;
use std::iter::Product;
use std::ops::{Mul, MulAssign, Neg};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A real number stored as `sign * exp(logmag)`.
///
/// `sign == 0` encodes exactly zero, in which case `logmag` is normalised to 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog<T> {
    sign: i8,
    logmag: T,
}

impl<T: Real> SignedLog<T> {
    /// Builds a value from its parts. Any nonzero `sign` is reduced to `±1`.
    pub fn new(sign: i8, logmag: T) -> Self {
        match sign.signum() {
            0 => Self::zero(),
            s => Self { sign: s, logmag },
        }
    }

    pub fn zero() -> Self {
        Self {
            sign: 0,
            logmag: T::zero(),
        }
    }

    pub fn one() -> Self {
        Self {
            sign: 1,
            logmag: T::zero(),
        }
    }

    pub fn from_real(x: T) -> Self {
        if x == T::zero() {
            Self::zero()
        } else if x < T::zero() {
            Self::new(-1, (-x).ln())
        } else {
            Self::new(1, x.ln())
        }
    }

    /// Converts back to a plain real; saturates to `±inf` / `0` outside range.
    pub fn to_real(self) -> T {
        match self.sign {
            0 => T::zero(),
            1 => self.logmag.exp(),
            _ => -self.logmag.exp(),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn logmag(&self) -> T {
        self.logmag
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn recip(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(Self::new(self.sign, -self.logmag))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        Ok(self * rhs.recip()?)
    }

    /// Integer power; `x^0 = 1` including for zero `x`.
    pub fn powu(self, k: u64) -> Self {
        if k == 0 {
            return Self::one();
        }
        if self.is_zero() {
            return Self::zero();
        }
        let sign = if self.sign < 0 && k % 2 == 1 { -1 } else { 1 };
        Self::new(sign, self.logmag * T::from_u64(k).expect("exponent fits"))
    }

    pub fn cast<U: Real>(self) -> SignedLog<U> {
        SignedLog::new(self.sign, U::from(self.logmag).expect("finite logmag"))
    }
}

impl<T: Real> Mul for SignedLog<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(self.sign * rhs.sign, self.logmag + rhs.logmag)
    }
}

impl<T: Real> MulAssign for SignedLog<T> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<T: Real> Neg for SignedLog<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.sign, self.logmag)
    }
}

impl<T: Real> Product for SignedLog<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl<T: Real> fmt::Display for SignedLog<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            1 => write!(f, "+exp({})", self.logmag),
            _ => write!(f, "-exp({})", self.logmag),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_is_normalised() {
        let z = SignedLog::new(0, 12.5_f64);
        assert_eq!(z.logmag(), 0.0);
        assert_eq!(z, SignedLog::zero());
        assert_eq!(SignedLog::from_real(0.0_f64), SignedLog::zero());
        assert_eq!((SignedLog::from_real(3.0_f64) * z).logmag(), 0.0);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = SignedLog::from_real(2.0_f64);
        assert_eq!(x.checked_div(SignedLog::zero()), Err(Error::ZeroDivision));
        assert_eq!(SignedLog::<f64>::zero().recip(), Err(Error::ZeroDivision));
    }

    #[test]
    fn signs_multiply_and_powers_alternate() {
        let a = SignedLog::from_real(-2.0_f64);
        let b = SignedLog::from_real(-3.0_f64);
        assert_eq!((a * b).sign(), 1);
        assert!(((a * b).to_real() - 6.0).abs() < 1e-14);
        assert_eq!(a.powu(3).sign(), -1);
        assert!((a.powu(3).to_real() + 8.0).abs() < 1e-13);
        assert_eq!(SignedLog::<f64>::zero().powu(0), SignedLog::one());
        assert_eq!((-a).sign(), 1);
    }

    #[test]
    fn values_beyond_f64_range_survive() {
        let big = SignedLog::new(1, 2000.0_f64);
        let small = SignedLog::new(1, -1990.0_f64);
        assert!(big.to_real().is_infinite());
        let r = (big * small).to_real();
        assert!((r / 10.0_f64.exp() - 1.0).abs() < 1e-12);
    }

    proptest! {
        // One ulp of logmag is worth |ln x| ulps of x, so the bound scales with |ln x|.
        #[test]
        fn real_round_trip(mant in 1.0f64..10.0, exp in -300i32..300, neg in any::<bool>()) {
            let x = if neg { -mant } else { mant } * 10f64.powi(exp);
            let back = SignedLog::from_real(x).to_real();
            let tol = 1e-15 * x.abs().ln().abs().max(1.0);
            prop_assert!(((back - x) / x).abs() <= tol, "x={x} back={back}");
        }
    }
}
