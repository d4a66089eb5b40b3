use num_rational::Ratio;
use num_traits::One;

use crate::scalar::{rat, ExactInt};

/// `x (x-1) ... (x-m+1)`, i.e. `Γ(x+1) / Γ(x+1-m)`.
pub fn falling_factorial<I: ExactInt>(x: &Ratio<I>, m: usize) -> Ratio<I> {
    (0..m as i64).fold(Ratio::one(), |acc, k| acc * (x - rat::<I>(k)))
}

/// `x (x+1) ... (x+m-1)`, i.e. `Γ(x+m) / Γ(x)`.
pub fn rising_factorial<I: ExactInt>(x: &Ratio<I>, m: usize) -> Ratio<I> {
    (0..m as i64).fold(Ratio::one(), |acc, k| acc * (x + rat::<I>(k)))
}
