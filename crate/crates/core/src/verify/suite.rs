use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::determinants::log_tolerance;
use crate::error::{Error, Result};
use crate::fh_symbol::Params;
use crate::BigRational;

use super::checks::*;
use super::sampling::{
    sample_exact_params, sample_rational, sample_rational_in, sample_real_params, MAX_ATTEMPTS,
};
use super::VerifyOutcome;

/// Sizes and sample counts for [`run_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Exact checks run for every order `1..=nmax_exact`.
    pub nmax_exact: usize,
    /// Float checks run at orders `1, 2, 4, ...` up to (and including) this.
    pub nmax_float: usize,
    /// Samples per (check, order).
    pub samples: usize,
    /// Random `β` per `(n, k)` for the rank-drop check.
    pub rank_samples: usize,
    /// Total points for the row-operation identity (orders up to 8).
    pub row_op_points: usize,
    /// Parameter draws for the coefficient recurrence check.
    pub recurrence_samples: usize,
    /// Largest order for the `α = β = 1` closed-form check.
    pub tridiagonal_nmax: usize,
    /// Run the dense `α = t/17` sweep at `n = 6` (needs `nmax_exact >= 6`).
    pub dense_sweep: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            nmax_exact: 10,
            nmax_float: 64,
            samples: 25,
            rank_samples: 10,
            row_op_points: 100,
            recurrence_samples: 200,
            tridiagonal_nmax: 1000,
            dense_sweep: true,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let empty = [
            ("nmax_exact", self.nmax_exact),
            ("nmax_float", self.nmax_float),
            ("samples", self.samples),
        ];
        for (name, v) in empty {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }

    pub fn float_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = std::iter::successors(Some(1usize), |n| n.checked_mul(2))
            .take_while(|&n| n <= self.nmax_float)
            .collect();
        if orders.last() != Some(&self.nmax_float) {
            orders.push(self.nmax_float);
        }
        orders
    }
}

/// Independent stream per (check, order) so results do not depend on run order.
fn rng_for(seed: u64, check: u64, n: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(check << 32 | n as u64);
    rng
}

/// Runs `f` on fresh samples until it returns without a hyperplane error,
/// at most [`MAX_ATTEMPTS`] times.
fn with_resampling<P>(
    out: &mut VerifyOutcome,
    mut draw: impl FnMut() -> Result<(P, usize)>,
    mut check: impl FnMut(&P) -> Result<VerifyOutcome>,
) -> Result<()> {
    for _ in 0..MAX_ATTEMPTS {
        let (params, rejected) = match draw() {
            Ok(x) => x,
            Err(Error::Config(msg)) => {
                out.record(false, || msg);
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        out.resamples += rejected;
        match check(&params) {
            Ok(o) => {
                out.absorb(o);
                return Ok(());
            }
            Err(Error::DenominatorZero(_) | Error::Pole { .. }) => out.resamples += 1,
            Err(e) => return Err(e),
        }
    }
    out.record(false, || format!("resampling exhausted after {MAX_ATTEMPTS} attempts"));
    Ok(())
}

type ExactCheck = fn(&BigRational, &BigRational, usize) -> Result<VerifyOutcome>;

fn exact_sweep(
    name: &str,
    id: u64,
    seed: u64,
    orders: impl Iterator<Item = usize>,
    samples: usize,
    draw: fn(&mut ChaCha8Rng) -> BigRational,
    check: ExactCheck,
) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::new(name);
    for n in orders {
        let mut rng = rng_for(seed, id, n);
        for _ in 0..samples {
            with_resampling(
                &mut out,
                || sample_exact_params(&mut rng, n, draw),
                |p| check(&p.alpha, &p.beta, n),
            )?;
        }
    }
    Ok(out)
}

fn moderate_rational(rng: &mut ChaCha8Rng) -> BigRational {
    sample_rational_in(rng, -0.9, 3.0)
}

type FloatCheck = dyn Fn(Params<f64>, usize) -> Result<VerifyOutcome>;

fn float_sweep(
    name: &str,
    id: u64,
    seed: u64,
    orders: &[usize],
    samples: usize,
    check: &FloatCheck,
) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::new(name);
    for &n in orders {
        let mut rng = rng_for(seed, id, n);
        for _ in 0..samples {
            with_resampling(
                &mut out,
                || sample_real_params(&mut rng, n, -0.9, 3.0, 1e-3),
                |&p| check(p, n),
            )?;
        }
    }
    Ok(out)
}

/// Dense sweep `α = t/17`, `t = -200..=200`, at three fixed `β` and `n = 6`.
/// Far more points than the `n(n-1)` degree bound of the rational identity.
fn dense_product_sweep() -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::new("m_product_dense");
    let n = 6;
    for (bp, bq) in [(1, 3), (2, 5), (5, 2)] {
        let beta = BigRational::new(bp.into(), bq.into());
        for t in -200i64..=200 {
            let alpha = BigRational::new(t.into(), 17.into());
            match check_m_product(&alpha, &beta, n) {
                Ok(o) => out.absorb(o),
                Err(Error::DenominatorZero(_)) => out.resamples += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// Runs every check. The result is a pure function of `(seed, config)`.
pub fn run_suite(seed: u64, config: &SuiteConfig) -> Result<Vec<VerifyOutcome>> {
    config.validate()?;
    let exact = || 1..=config.nmax_exact;
    let s = config.samples;
    let float_orders = config.float_orders();
    let mut results = Vec::new();

    results.push(exact_sweep("m_product_formula", 1, seed, exact(), s, sample_rational, check_m_product)?);
    if config.dense_sweep && config.nmax_exact >= 6 {
        results.push(dense_product_sweep()?);
    } else {
        results.push(VerifyOutcome::new("m_product_dense"));
    }
    results.push(exact_sweep("d_closed_form", 2, seed, exact(), s, sample_rational, check_d_closed_form)?);
    results.push(exact_sweep(
        "proof2_recursion",
        3,
        seed,
        2..=config.nmax_exact,
        s,
        sample_rational,
        check_proof2_recursion,
    )?);
    results.push(exact_sweep("m_bridge", 4, seed, exact(), s, sample_rational, check_m_bridge)?);
    results.push(exact_sweep("exact_symmetry", 5, seed, exact(), s, sample_rational, check_m_symmetry)?);

    // Row-operation identity: a fixed number of points with random order.
    let mut row_op = VerifyOutcome::new("row_op_identity");
    let nmax_row = config.nmax_exact.min(8);
    let mut rng = rng_for(seed, 6, 0);
    for _ in 0..config.row_op_points {
        let n = rng.gen_range(1..=nmax_row);
        with_resampling(
            &mut row_op,
            || {
                // α + 1 must also stay off the hyperplanes, so sample for n + 1.
                sample_exact_params(&mut rng, n + 1, sample_rational)
            },
            |p| check_row_op_identity(&p.alpha, &p.beta, n),
        )?;
    }
    results.push(row_op);

    let mut rank = VerifyOutcome::new("rank_drop");
    for n in exact() {
        for k in 1..n {
            let mut rng = rng_for(seed, 7, n * 64 + k);
            for _ in 0..config.rank_samples {
                with_resampling(
                    &mut rank,
                    || Ok((sample_rational(&mut rng), 0)),
                    |beta| check_rank_drop(beta, k, n),
                )?;
            }
        }
    }
    results.push(rank);

    results.push(exact_sweep(
        "cross_layer",
        8,
        seed,
        1..=config.nmax_exact.min(16),
        s,
        moderate_rational,
        check_cross_layer,
    )?);

    results.push(float_sweep("closed_vs_lu", 9, seed, &float_orders, s, &|p, n| {
        check_closed_vs_lu(p, n, log_tolerance(n))
    })?);
    results.push(float_sweep("closed_vs_product", 10, seed, &float_orders, s, &check_closed_vs_product)?);
    results.push(float_sweep("float_symmetry", 11, seed, &float_orders, s, &check_float_symmetry)?);
    results.push(float_sweep("sign_irrelevance", 12, seed, &float_orders, s, &check_sign_irrelevance)?);
    results.push(float_sweep(
        "coefficient_recurrence",
        13,
        seed,
        &[65],
        config.recurrence_samples,
        &|p, _| check_coefficient_recurrence(p, 64),
    )?);

    let mut tri = VerifyOutcome::new("tridiagonal");
    for n in 1..=config.tridiagonal_nmax {
        tri.absorb(check_tridiagonal(n)?);
    }
    results.push(tri);

    results.push(float_sweep("triangular", 14, seed, &float_orders, s, &|p, n| {
        let mut o = check_triangular(Params::new(0.0, p.beta), n)?;
        o.absorb(check_triangular(Params::new(p.alpha, 0.0), n)?);
        Ok(o)
    })?);

    Ok(results)
}
