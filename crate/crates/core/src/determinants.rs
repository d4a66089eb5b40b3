//! Determinant engines for `D_n(φ)`.
//!
//! [`lu_det`] works on the explicit matrix; [`closed_form_det`] and
//! [`product_form_det`] use gamma-function identities only. The exact-backed
//! routes [`exact_m_det`] and [`proof2_det`] combine a float prefactor with an
//! exact rational determinant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Hyperplane, Result};
use crate::exact_core::{bareiss_det, build_d_matrix, build_m_matrix};
use crate::fh_symbol::{coefficient_sequence, toeplitz_matrix, Params};
use crate::matrix::Matrix;
use crate::scalar::{CompensatedSum, Real, POLE_TOLERANCE};
use crate::specfun::{log_barnes_g_ratio, log_gamma_balanced, log_gamma_offset, SignedLog};
use crate::{BigRational, LogValue};

/// Which engine produced a determinant value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Lu,
    ClosedForm,
    BareissM,
    ProductM,
    Proof2,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Lu,
        Method::ClosedForm,
        Method::ProductM,
        Method::BareissM,
        Method::Proof2,
    ];

    /// Short name used on the command line and in output records.
    pub fn name(self) -> &'static str {
        match self {
            Method::Lu => "lu",
            Method::ClosedForm => "closed",
            Method::ProductM => "product",
            Method::BareissM => "exact-m",
            Method::Proof2 => "proof2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }

    /// True for methods whose core is an exact rational determinant.
    pub fn is_exact(self) -> bool {
        matches!(self, Method::BareissM | Method::Proof2)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReportParams {
    Real(Params<f64>),
    Exact(Params<BigRational>),
}

/// A determinant value tagged with the method that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct DetReport {
    pub value: LogValue,
    pub method: Method,
    pub n: usize,
    pub params: ReportParams,
}

impl ReportParams {
    /// The pair as doubles; exact values are rounded.
    pub fn to_real(&self) -> Params<f64> {
        match self {
            ReportParams::Real(p) => *p,
            ReportParams::Exact(p) => real_params(&p.alpha, &p.beta),
        }
    }
}

/// Runs one method. Exact methods need [`ReportParams::Exact`]; float
/// methods accept either and round exact inputs to `f64`.
pub fn evaluate(method: Method, params: &ReportParams, n: usize) -> Result<DetReport> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let value = match (method, params) {
        (Method::BareissM, ReportParams::Exact(p)) => exact_m_det(&p.alpha, &p.beta, n)?,
        (Method::Proof2, ReportParams::Exact(p)) => proof2_det(&p.alpha, &p.beta, n)?,
        (Method::BareissM | Method::Proof2, ReportParams::Real(_)) => {
            return Err(Error::Config(format!("method {method} needs rational parameters")));
        }
        (Method::Lu, p) => lu_det(&toeplitz_matrix(&coefficient_sequence(p.to_real(), n)?)),
        (Method::ClosedForm, p) => closed_form_det(p.to_real(), n)?,
        (Method::ProductM, p) => product_form_det(p.to_real(), n)?,
    };
    Ok(DetReport { value, method, n, params: params.clone() })
}

/// The parameter hyperplane behind a pole or zero-denominator error.
pub fn error_hyperplane(err: &Error, p: Params<f64>) -> Option<Hyperplane> {
    let shift = |x: f64| -(x.round()) as i64;
    match err {
        Error::DenominatorZero(h) => Some(*h),
        Error::Pole { term, .. } if term.contains("alpha+beta") => Some(Hyperplane::AlphaBeta(shift(p.alpha + p.beta))),
        Error::Pole { term, .. } if term.contains("alpha") => Some(Hyperplane::Alpha(shift(p.alpha))),
        Error::Pole { term, .. } if term.contains("beta") => Some(Hyperplane::Beta(shift(p.beta))),
        _ => None,
    }
}

/// Partial-pivoting LU determinant, accumulating `ln|pivot|` step by step so
/// that orders in the hundreds neither overflow nor underflow.
pub fn lu_det<T: Real>(matrix: &Matrix<T>) -> SignedLog<T> {
    let n = matrix.order();
    let mut a = matrix.to_rows();
    let mut sign = 1i8;
    let mut logmag = CompensatedSum::default();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&r, &s| a[r][k].abs().partial_cmp(&a[s][k].abs()).expect("finite entries"))
            .expect("non-empty range");
        let pivot = a[p][k];
        if pivot == T::zero() {
            return SignedLog::zero();
        }
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        if pivot < T::zero() {
            sign = -sign;
        }
        logmag.add(pivot.abs().ln());
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let factor = row[k] / pivot;
            if factor == T::zero() {
                continue;
            }
            for j in k + 1..n {
                row[j] = row[j] - factor * pivot_row[j];
            }
            row[k] = T::zero();
        }
    }
    SignedLog::new(sign, logmag.value())
}

fn gamma_term<T: Real>(c: T, term: &'static str, offset: usize) -> Result<SignedLog<T>> {
    log_gamma_offset(c, offset as i64).map_err(|_| Error::Pole {
        term,
        offset,
        argument: (c + T::from_index(offset as i64)).to_f64().unwrap_or(f64::NAN),
    })
}

/// Barnes-G closed form, as one sum over offsets `j < n` of
/// `ln Γ(1+j) + ln Γ(α+β+1+j) - ln Γ(α+1+j) - ln Γ(β+1+j)`.
///
/// Each offset is a merged term of the four [`log_barnes_g_ratio`] streams
/// `G(n+1)/G(1)`, `G(α+β+n+1)/G(α+β+1)`, `G(α+n+1)/G(α+1)`, `G(β+n+1)/G(β+1)`.
/// Merging per offset keeps the huge individual stream sums from cancelling.
pub fn closed_form_det<T: Real>(p: Params<T>, n: usize) -> Result<SignedLog<T>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let one = T::one();
    let sum_ab = p.alpha + p.beta + one;
    let a1 = p.alpha + one;
    let b1 = p.beta + one;
    let mut sign = 1i8;
    let mut logmag = CompensatedSum::default();
    for j in 0..n {
        let x = T::from_index(j as i64 + 1);
        if let Some(v) = log_gamma_balanced(x, [T::zero(), p.alpha + p.beta], [p.alpha, p.beta]) {
            logmag.add(v);
            continue;
        }
        let fact = gamma_term(one, "gamma(1+j)", j)?;
        let top = gamma_term(sum_ab, "gamma(alpha+beta+1+j)", j)?;
        let ga = gamma_term(a1, "gamma(alpha+1+j)", j)?;
        let gb = gamma_term(b1, "gamma(beta+1+j)", j)?;
        sign *= fact.sign() * top.sign() * ga.sign() * gb.sign();
        logmag.add((fact.logmag() + top.logmag()) - (ga.logmag() + gb.logmag()));
    }
    Ok(SignedLog::new(sign, logmag.value()))
}

/// The closed form assembled literally from four Barnes-G ratios.
///
/// Mathematically equal to [`closed_form_det`], but each ratio is a sum of
/// `n` log-gammas, so the final subtraction loses digits for large `n`.
pub fn closed_form_det_by_ratios<T: Real>(p: Params<T>, n: usize) -> Result<SignedLog<T>> {
    let one = T::one();
    let num = log_barnes_g_ratio(one, n)? * log_barnes_g_ratio(p.alpha + p.beta + one, n)?;
    let den = log_barnes_g_ratio(p.alpha + one, n)? * log_barnes_g_ratio(p.beta + one, n)?;
    num.checked_div(den)
}

/// `(Γ(α+β+1) / (Γ(α+1) Γ(β+1)))`, the scalar pulled out of every coefficient.
fn coefficient_prefactor<T: Real>(p: Params<T>) -> Result<SignedLog<T>> {
    let one = T::one();
    let top = gamma_term(p.alpha + p.beta + one, "gamma(alpha+beta+1)", 0)?;
    let ga = gamma_term(p.alpha + one, "gamma(alpha+1)", 0)?;
    let gb = gamma_term(p.beta + one, "gamma(beta+1)", 0)?;
    top.checked_div(ga * gb)
}

/// `D_n = (Γ(α+β+1)/(Γ(α+1)Γ(β+1)))^n · ∏_{k=1}^{n-1} [k(α+β+k) / ((α+k)(β+k))]^{n-k}`.
pub fn product_form_det<T: Real>(p: Params<T>, n: usize) -> Result<SignedLog<T>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut acc = coefficient_prefactor(p)?.powu(n as u64);
    for k in 1..n {
        let kt = T::from_index(k as i64);
        let a = p.alpha + kt;
        let b = p.beta + kt;
        for (x, term) in [(a, "alpha+k"), (b, "beta+k")] {
            if x.abs() < T::lit(POLE_TOLERANCE) {
                return Err(Error::Pole {
                    term,
                    offset: k,
                    argument: x.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let factor = SignedLog::from_real(kt)
            * SignedLog::from_real(p.alpha + p.beta + kt)
            * (SignedLog::from_real(a) * SignedLog::from_real(b)).recip()?;
        acc *= factor.powu((n - k) as u64);
    }
    Ok(acc)
}

fn ln_abs_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("fits in f64").abs().ln()
    } else {
        let shift = bits - 64;
        (x.abs() >> shift).to_f64().expect("64-bit head").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Signed log of an exact rational, valid far outside the f64 range.
pub fn rational_to_log(q: &BigRational) -> LogValue {
    if q.is_zero() {
        return SignedLog::zero();
    }
    let sign = if q.is_negative() { -1 } else { 1 };
    SignedLog::new(sign, ln_abs_bigint(q.numer()) - ln_abs_bigint(q.denom()))
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn real_params(alpha: &BigRational, beta: &BigRational) -> Params<f64> {
    Params::new(rational_to_f64(alpha), rational_to_f64(beta))
}

/// `D_n(φ)` as the coefficient prefactor to the `n`-th power times the exact
/// Bareiss determinant of `M`.
pub fn exact_m_det(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<LogValue> {
    let m = build_m_matrix(alpha, beta, n)?;
    let prefactor = coefficient_prefactor(real_params(alpha, beta))?;
    Ok(prefactor.powu(n as u64) * rational_to_log(&bareiss_det(&m)))
}

/// `D_n(φ) = Γ(α+β+1)^n · G(α+1)/G(α+n+1) · G(β+1)/G(β+n+1) · D_n(α, β)` with
/// the polynomial determinant `D_n(α, β)` evaluated exactly.
pub fn proof2_det(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<LogValue> {
    let p = real_params(alpha, beta);
    let top = gamma_term(p.alpha + p.beta + 1.0, "gamma(alpha+beta+1)", 0)?;
    let rename = |term: &'static str| {
        move |e| match e {
            Error::Pole { offset, argument, .. } => Error::Pole { term, offset, argument },
            other => other,
        }
    };
    let ga = log_barnes_g_ratio(p.alpha + 1.0, n).map_err(rename("gamma(alpha+1+j)"))?;
    let gb = log_barnes_g_ratio(p.beta + 1.0, n).map_err(rename("gamma(beta+1+j)"))?;
    let d = bareiss_det(&build_d_matrix(alpha, beta, n)?);
    Ok(top.powu(n as u64).checked_div(ga * gb)? * rational_to_log(&d))
}

/// Distance from zero at which a factor `α+β+k` counts as degenerate.
pub const DEGENERATE_WIDTH: f64 = 1e-3;
/// Tolerance for the absolute comparison used near degenerate points.
pub const DEGENERATE_ABS_TOLERANCE: f64 = 1e-8;

/// Log-magnitude tolerance for comparing float engines at order `n`.
pub fn log_tolerance(n: usize) -> f64 {
    if n <= 32 {
        1e-9
    } else {
        1e-6
    }
}

/// True when some `α+β+k`, `1 <= k < n`, lies within [`DEGENERATE_WIDTH`] of zero.
pub fn near_degenerate<T: Real>(p: Params<T>, n: usize) -> bool {
    let w = T::lit(DEGENERATE_WIDTH);
    (1..n).any(|k| (p.alpha + p.beta + T::from_index(k as i64)).abs() < w)
}

/// Compares two determinant values.
///
/// Away from degenerate points: equal signs and `|Δ logmag| <= log_tol`.
/// Near them: `|a - b| <= 1e-8 · max(|a|, |b|)` on the real values.
pub fn values_agree(a: LogValue, b: LogValue, log_tol: f64, degenerate: bool) -> bool {
    if degenerate {
        let scale = match (a.is_zero(), b.is_zero()) {
            (true, true) => return true,
            (true, false) => b.logmag(),
            (false, true) => a.logmag(),
            (false, false) => a.logmag().max(b.logmag()),
        };
        let rescale = |x: LogValue| {
            if x.is_zero() {
                0.0
            } else {
                f64::from(x.sign()) * (x.logmag() - scale).exp()
            }
        };
        (rescale(a) - rescale(b)).abs() <= DEGENERATE_ABS_TOLERANCE
    } else {
        a.sign() == b.sign() && (a.is_zero() || (a.logmag() - b.logmag()).abs() <= log_tol)
    }
}
