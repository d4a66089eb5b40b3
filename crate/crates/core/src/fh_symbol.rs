//! Fourier coefficients of `φ(z) = (1 - z)^α (1 - 1/z)^β` and the Toeplitz
//! matrices they generate.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{near_nonpositive_integer, Real, POLE_TOLERANCE};
use crate::specfun::{log_gamma_offset, log_gamma_signed};

/// The exponent pair `(α, β)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params<T> {
    pub alpha: T,
    pub beta: T,
}

impl<T> Params<T> {
    pub fn new(alpha: T, beta: T) -> Self {
        Self { alpha, beta }
    }

    pub fn swapped(self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}

/// Coefficients `φ_{-(n-1)}, ..., φ_{n-1}` of an order-`n` Toeplitz matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzSpec<T> {
    n: usize,
    coeffs: Vec<T>,
}

impl<T: Copy> ToeplitzSpec<T> {
    /// `coeffs[m]` holds `φ_{m-(n-1)}`; the length must be `2n - 1`.
    pub fn new(n: usize, coeffs: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if coeffs.len() != 2 * n - 1 {
            return Err(Error::Config(format!(
                "order {n} needs {} coefficients, got {}",
                2 * n - 1,
                coeffs.len()
            )));
        }
        Ok(Self { n, coeffs })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `φ_k` for `|k| < n`.
    pub fn coeff(&self, k: i64) -> T {
        self.coeffs[(k + self.n as i64 - 1) as usize]
    }
}

fn alternating<T: Real>(k: i64) -> T {
    if k.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// `φ_k = (-1)^k Γ(α+β+1) / (Γ(α+1-k) Γ(β+1+k))`.
///
/// Reciprocal gamma is entire, so a non-positive integer in either
/// denominator argument yields an exact zero. Only `α+β+1` on a pole is an
/// error.
pub fn fourier_coefficient<T: Real>(p: Params<T>, k: i64) -> Result<T> {
    let top = p.alpha + p.beta + T::one();
    if near_nonpositive_integer(top) {
        return Err(Error::Pole {
            term: "gamma(alpha+beta+1)",
            offset: 0,
            argument: top.to_f64().unwrap_or(f64::NAN),
        });
    }
    let kt = T::from_index(k);
    let a = p.alpha + T::one() - kt;
    let b = p.beta + T::one() + kt;
    if near_nonpositive_integer(a) || near_nonpositive_integer(b) {
        return Ok(T::zero());
    }
    let ga = log_gamma_offset(p.alpha + T::one(), -k)?;
    let gb = log_gamma_offset(p.beta + T::one(), k)?;
    let value = log_gamma_signed(top)? * (ga * gb).recip()?;
    Ok(alternating::<T>(k) * value.to_real())
}

fn is_reciprocal_gamma_zero<T: Real>(p: Params<T>, k: i64) -> bool {
    let kt = T::from_index(k);
    near_nonpositive_integer(p.alpha + T::one() - kt) || near_nonpositive_integer(p.beta + T::one() + kt)
}

/// All `2n - 1` coefficients needed for order `n`, generated outward from
/// `φ_0` with
///
/// ```text
/// φ_{k+1} = φ_k (k - α) / (β + k + 1),    φ_{k-1} = φ_k (β + k) / (k - 1 - α).
/// ```
///
/// Falls back to [`fourier_coefficient`] whenever a recurrence denominator is
/// below the pole tolerance or the running value has hit zero.
pub fn coefficient_sequence<T: Real>(p: Params<T>, n: usize) -> Result<ToeplitzSpec<T>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let tiny = T::lit(POLE_TOLERANCE);
    let last = n as i64 - 1;
    let mut coeffs = vec![T::zero(); 2 * n - 1];
    let centre = last as usize;
    let phi0 = fourier_coefficient(p, 0)?;
    coeffs[centre] = phi0;

    let mut cur = phi0;
    for k in 0..last {
        let next = k + 1;
        let denom = p.beta + T::from_index(k) + T::one();
        cur = if is_reciprocal_gamma_zero(p, next) {
            T::zero()
        } else if cur == T::zero() || denom.abs() < tiny {
            fourier_coefficient(p, next)?
        } else {
            cur * (T::from_index(k) - p.alpha) / denom
        };
        coeffs[centre + next as usize] = cur;
    }

    let mut cur = phi0;
    for k in (-last + 1..=0).rev() {
        let next = k - 1;
        let denom = T::from_index(k) - T::one() - p.alpha;
        cur = if is_reciprocal_gamma_zero(p, next) {
            T::zero()
        } else if cur == T::zero() || denom.abs() < tiny {
            fourier_coefficient(p, next)?
        } else {
            cur * (p.beta + T::from_index(k)) / denom
        };
        coeffs[(centre as i64 + next) as usize] = cur;
    }

    ToeplitzSpec::new(n, coeffs)
}

/// The dense matrix `(φ_{i-j})`.
pub fn toeplitz_matrix<T: Real>(spec: &ToeplitzSpec<T>) -> Matrix<T> {
    Matrix::from_fn(spec.order(), |i, j| spec.coeff(i as i64 - j as i64))
        .expect("ToeplitzSpec has order >= 1")
}

/// Replaces every `φ_k` by `(-1)^k φ_k`. The determinant is unchanged since
/// this is conjugation by `diag(1, -1, 1, ...)`.
pub fn strip_alternating_sign<T: Real>(spec: &ToeplitzSpec<T>) -> ToeplitzSpec<T> {
    let last = spec.order() as i64 - 1;
    let coeffs = spec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, &c)| alternating::<T>(m as i64 - last) * c)
        .collect();
    ToeplitzSpec {
        n: spec.order(),
        coeffs,
    }
}
