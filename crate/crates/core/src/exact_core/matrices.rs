use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Hyperplane, Result};
use crate::matrix::Matrix;
use crate::scalar::{rat, ExactInt};

use super::{falling_factorial, rising_factorial};

/// Fails if `x + m = 0` for some `m` in `1..=len`.
fn check_shifts<I: ExactInt>(
    x: &Ratio<I>,
    len: usize,
    plane: fn(i64) -> Hyperplane,
) -> Result<()> {
    for m in 1..=len as i64 {
        if (x + rat::<I>(m)).is_zero() {
            return Err(Error::DenominatorZero(plane(m)));
        }
    }
    Ok(())
}

/// Entry `(i, j)` of `M = [Γ(α+1)Γ(β+1) / (Γ(α+1-i+j) Γ(β+1+i-j))]`, written
/// without gamma functions as a ratio of falling and rising factorials.
///
/// Indices are 0-based; the entry only depends on `i - j`.
pub fn m_entry<I: ExactInt>(
    alpha: &Ratio<I>,
    beta: &Ratio<I>,
    i: usize,
    j: usize,
) -> Result<Ratio<I>> {
    if i >= j {
        let d = i - j;
        check_shifts(beta, d, Hyperplane::Beta)?;
        Ok(falling_factorial(alpha, d) / rising_factorial(&(beta + rat::<I>(1)), d))
    } else {
        let d = j - i;
        check_shifts(alpha, d, Hyperplane::Alpha)?;
        Ok(falling_factorial(beta, d) / rising_factorial(&(alpha + rat::<I>(1)), d))
    }
}

pub fn build_m_matrix<I: ExactInt>(
    alpha: &Ratio<I>,
    beta: &Ratio<I>,
    n: usize,
) -> Result<Matrix<Ratio<I>>> {
    // Fail on the first hyperplane hit, scanning the widest offsets first.
    if n > 1 {
        check_shifts(alpha, n - 1, Hyperplane::Alpha)?;
        check_shifts(beta, n - 1, Hyperplane::Beta)?;
    }
    Matrix::try_from_fn(n, |i, j| m_entry(alpha, beta, i, j))
}

/// The polynomial matrix with (1-based) entries
/// `∏_{l=1}^{n-j} (α - i + j + l) · ∏_{k=1}^{n-i} (β + i - j + k)`.
///
/// Storage is 0-based: stored `(r, c)` holds the entry for `i = r + 1`, `j = c + 1`.
pub fn build_d_matrix<I: ExactInt>(
    alpha: &Ratio<I>,
    beta: &Ratio<I>,
    n: usize,
) -> Result<Matrix<Ratio<I>>> {
    Matrix::from_fn(n, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let left = rising_factorial(&(alpha - rat::<I>(i) + rat::<I>(j) + rat::<I>(1)), n - c - 1);
        let right = rising_factorial(&(beta + rat::<I>(i) - rat::<I>(j) + rat::<I>(1)), n - r - 1);
        left * right
    })
}
