//! Scalar abstraction for the floating-point layer.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

/// Real scalar the float layer is generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in every Real")
    }

    fn from_index(k: i64) -> Self {
        Self::from_i64(k).expect("integer representable in every Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Integer type underlying the exact rational layer (`BigInt`, or `i64`/`i128`
/// for small problems).
pub trait ExactInt:
    Integer + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<I> ExactInt for I where
    I: Integer + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

pub(crate) fn rat<I: ExactInt>(k: i64) -> Ratio<I> {
    Ratio::from_integer(I::from_i64(k).expect("small integer representable"))
}

/// Absolute distance used to decide that an argument sits on a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// True when `x` lies within [`POLE_TOLERANCE`] of `0, -1, -2, ...`.
pub fn near_nonpositive_integer<T: Real>(x: T) -> bool {
    let r = x.round();
    r <= T::zero() && (x - r).abs() < T::lit(POLE_TOLERANCE)
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy)]
pub struct CompensatedSum<T> {
    sum: T,
    carry: T,
}

impl<T: Real> Default for CompensatedSum<T> {
    fn default() -> Self {
        Self {
            sum: T::zero(),
            carry: T::zero(),
        }
    }
}

impl<T: Real> CompensatedSum<T> {
    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry = self.carry + ((self.sum - t) + x);
        } else {
            self.carry = self.carry + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.carry
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_neighbourhoods() {
        assert!(near_nonpositive_integer(0.0_f64));
        assert!(near_nonpositive_integer(-3.0_f64 + 1e-13));
        assert!(!near_nonpositive_integer(-3.0_f64 + 1e-9));
        assert!(!near_nonpositive_integer(2.0_f64));
        assert!(!near_nonpositive_integer(-0.5_f32));
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::<f64>::default();
        s.add(1e16);
        for _ in 0..1000 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 1000.0);
    }
}
