use crate::error::{Error, Result};
use crate::scalar::{near_nonpositive_integer, CompensatedSum, Real};

use super::SignedLog;

// Integers up to here take the factorial path (22! is the last exact f64 one).
const SMALL_FACTORIAL_MAX: f64 = 23.0;

// B_2k / (2k (2k-1)) for k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_MIN: f64 = 10.0;

fn stirling_tail<T: Real>(x: T) -> T {
    let r = x.recip();
    let r2 = r * r;
    STIRLING.iter().rev().fold(T::zero(), |acc, &c| acc * r2 + T::lit(c)) * r
}

/// Stirling series for x >= 10, truncated where the next term is below an ulp.
fn ln_gamma_stirling<T: Real>(x: T) -> T {
    let series = stirling_tail(x);
    let main = (x - T::lit(0.5)).mul_add(x.ln(), -x);
    main + (T::lit(HALF_LN_2PI) + series)
}

/// `ln Γ(x)` for `x >= 0.5`.
fn ln_gamma_upper<T: Real>(x: T) -> T {
    if x >= T::lit(STIRLING_MIN) {
        return ln_gamma_stirling(x);
    }
    // Γ(x) = Γ(x+m) / (x (x+1) ... (x+m-1))
    let mut z = x;
    let mut prod = T::one();
    while z < T::lit(STIRLING_MIN) {
        prod = prod * z;
        z = z + T::one();
    }
    ln_gamma_stirling(z) - prod.ln()
}

/// `sin(pi x)` with the argument reduced exactly to `[-1/2, 1/2]` first.
pub fn sin_pi<T: Real>(x: T) -> T {
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    // r in [-1, 1]; x - 2*round(x/2) is exact in binary floating point.
    let mut r = x - two * (x / two).round();
    if r > half {
        r = T::one() - r;
    } else if r < -half {
        r = -T::one() - r;
    }
    (T::PI() * r).sin()
}

/// Sign and natural log of `|Γ(x)|`.
///
/// Negative arguments go through the reflection `Γ(x)Γ(1-x) = π / sin(πx)`,
/// which makes the sign alternate from one integer cell to the next.
pub fn log_gamma_signed<T: Real>(x: T) -> Result<SignedLog<T>> {
    if near_nonpositive_integer(x) {
        return Err(Error::Pole {
            term: "gamma",
            offset: 0,
            argument: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    if x == x.round() && x <= T::lit(SMALL_FACTORIAL_MAX) {
        // Small positive integers: ln((x-1)!) directly, exact at x = 1, 2.
        let mut fact = T::one();
        let mut k = T::lit(2.0);
        while k < x {
            fact = fact * k;
            k = k + T::one();
        }
        return Ok(SignedLog::new(1, fact.ln()));
    }
    if x >= T::lit(0.5) {
        return Ok(SignedLog::new(1, ln_gamma_upper(x)));
    }
    let s = sin_pi(x);
    let logmag = T::PI().ln() - s.abs().ln() - ln_gamma_upper(T::one() - x);
    Ok(SignedLog::new(if s < T::zero() { -1 } else { 1 }, logmag))
}

/// `ln(G(x + n) / G(x)) = Σ_{j<n} ln Γ(x + j)` as a signed log.
///
/// Barnes G is never evaluated on its own; only these integer-offset ratios
/// are needed.
/// `ln|Γ(c + m)|` for an integer offset `m`.
///
/// When the sum lands left of 1/2 the reflection uses `sin(πc)` with the
/// parity of `m` instead of `sin(π(c+m))`, so a fractional part that the
/// addition would round away still sets the magnitude.
pub fn log_gamma_offset<T: Real>(c: T, m: i64) -> Result<SignedLog<T>> {
    let x = c + T::from_index(m);
    if x >= T::lit(0.5) || near_nonpositive_integer(x) {
        return log_gamma_signed(x);
    }
    let mut s = sin_pi(c);
    if m % 2 != 0 {
        s = -s;
    }
    if s == T::zero() {
        return log_gamma_signed(x);
    }
    let logmag = T::PI().ln() - s.abs().ln() - ln_gamma_upper(T::one() - x);
    Ok(SignedLog::new(if s < T::zero() { -1 } else { 1 }, logmag))
}

/// `ln[Γ(x+p0) Γ(x+p1) / (Γ(x+q0) Γ(x+q1))]` when `p0 + p1 = q0 + q1`.
///
/// The large `(z - 1/2) ln z - z` parts cancel analytically, leaving terms of
/// size `O(|shift|)`, so there is no cancellation between four large logs.
/// Returns `None` unless every argument is at least 10.
pub fn log_gamma_balanced<T: Real>(x: T, plus: [T; 2], minus: [T; 2]) -> Option<T> {
    let low = plus.iter().chain(&minus).fold(T::infinity(), |m, &c| m.min(c));
    let lowest = x + low;
    if lowest.is_nan() || lowest < T::lit(STIRLING_MIN) {
        return None;
    }
    let half = T::lit(0.5);
    let part = |c: T| (x + c - half) * (c / x).ln_1p() + stirling_tail(x + c);
    let mut sum = CompensatedSum::default();
    for &c in &plus {
        sum.add(part(c));
    }
    for &c in &minus {
        sum.add(-part(c));
    }
    Some(sum.value())
}

pub fn log_barnes_g_ratio<T: Real>(x: T, n: usize) -> Result<SignedLog<T>> {
    let mut sign = 1i8;
    let mut sum = CompensatedSum::default();
    for j in 0..n {
        let arg = x + T::from_index(j as i64);
        let g = log_gamma_signed(arg).map_err(|_| Error::Pole {
            term: "barnes_g_ratio",
            offset: j,
            argument: arg.to_f64().unwrap_or(f64::NAN),
        })?;
        sign *= g.sign();
        sum.add(g.logmag());
    }
    Ok(SignedLog::new(sign, sum.value()))
}
