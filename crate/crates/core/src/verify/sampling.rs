use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fh_symbol::Params;
use crate::scalar::rat;
use crate::BigRational;

/// Upper bound on parameter draws before a sample is given up.
pub const MAX_ATTEMPTS: usize = 100;

/// `p/q` with `p` in `[-64, 64]` and `q` in `[1, 16]`.
pub fn sample_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let p: i64 = rng.gen_range(-64..=64);
    let q: i64 = rng.gen_range(1..=16);
    BigRational::new(p.into(), q.into())
}

/// A rational strictly inside `(lo, hi)` with denominator at most 16.
pub fn sample_rational_in<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> BigRational {
    loop {
        let q: i64 = rng.gen_range(1..=16);
        let pmin = (lo * q as f64).floor() as i64 + 1;
        let pmax = (hi * q as f64).ceil() as i64 - 1;
        if pmin <= pmax {
            let p = rng.gen_range(pmin..=pmax);
            return BigRational::new(p.into(), q.into());
        }
    }
}

fn on_excluded_plane(alpha: &BigRational, beta: &BigRational, n: usize) -> bool {
    (1..n.max(2) as i64).any(|k| {
        let k = rat(k);
        (alpha + &k).is_zero() || (beta + &k).is_zero()
    })
}

/// Draws `(α, β)` with `draw`, rejecting exactly (by rational equality) any
/// point with `α+k = 0` or `β+k = 0` for `1 <= k < n`.
///
/// Returns the accepted point and the number of rejected draws.
pub fn sample_exact_params<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    mut draw: impl FnMut(&mut R) -> BigRational,
) -> Result<(Params<BigRational>, usize)> {
    for attempt in 0..MAX_ATTEMPTS {
        let alpha = draw(rng);
        let beta = draw(rng);
        if !on_excluded_plane(&alpha, &beta, n) {
            return Ok((Params::new(alpha, beta), attempt));
        }
    }
    Err(Error::Config(format!(
        "no admissible rational parameters after {MAX_ATTEMPTS} draws"
    )))
}

/// Uniform `(α, β)` in `(lo, hi)²`, rejecting `width`-neighbourhoods of
/// `α+k = 0`, `β+k = 0`, `α+β+k = 0` for `1 <= k <= max(1, n-1)`.
pub fn sample_real_params<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    lo: f64,
    hi: f64,
    width: f64,
) -> Result<(Params<f64>, usize)> {
    let kmax = n.saturating_sub(1).max(1);
    for attempt in 0..MAX_ATTEMPTS {
        let alpha = rng.gen_range(lo..hi);
        let beta = rng.gen_range(lo..hi);
        let bad = (1..=kmax).any(|k| {
            let k = k as f64;
            (alpha + k).abs() < width || (beta + k).abs() < width || (alpha + beta + k).abs() < width
        });
        if !bad {
            return Ok((Params::new(alpha, beta), attempt));
        }
    }
    Err(Error::Config(format!(
        "no admissible real parameters after {MAX_ATTEMPTS} draws"
    )))
}
