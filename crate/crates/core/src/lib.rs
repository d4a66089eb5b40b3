//! Pure Fisher-Hartwig Toeplitz determinants.
//!
//! For the symbol `φ(z) = (1 - z)^α (1 - 1/z)^β` the determinant
//! `D_n(φ) = det(φ_{i-j})` has the Barnes-G closed form
//!
//! ```text
//! D_n = G(n+1) G(α+β+n+1) / G(α+β+1) · G(α+1) / G(α+n+1) · G(β+1) / G(β+n+1).
//! ```
//!
//! This crate evaluates it three independent ways and cross-checks them:
//!
//! * [`determinants::lu_det`] on the explicit Toeplitz matrix built by [`fh_symbol`],
//! * [`determinants::closed_form_det`] / [`determinants::product_form_det`] from log-gamma sums,
//! * exact rational determinants in [`exact_core`] of the reduced matrices `M` and `D_n(α, β)`.
//!
//! [`verify`] turns the individual reduction steps into executable checks.
//!
//! The float layer is generic over [`Real`] (`f32`, `f64`); the exact layer over
//! `Ratio<I>` for any [`ExactInt`]. The aliases below fix the usual choices.

pub mod determinants;
pub mod error;
pub mod exact_core;
pub mod fh_symbol;
pub mod matrix;
pub mod scalar;
pub mod specfun;
pub mod verify;

pub use error::{Error, Hyperplane, Result};
pub use matrix::Matrix;
pub use scalar::{ExactInt, Real, POLE_TOLERANCE};
pub use specfun::SignedLog;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Signed-log value in double precision.
pub type LogValue = SignedLog<f64>;
/// Dense real matrix in double precision.
pub type RealMatrix = Matrix<f64>;
/// Dense matrix of exact big rationals.
pub type RationalMatrix = Matrix<BigRational>;
/// Exponent pair `(α, β)` in double precision.
pub type RealParams = fh_symbol::Params<f64>;
/// Exponent pair `(α, β)` as exact big rationals.
pub type ExactParams = fh_symbol::Params<BigRational>;
/// Toeplitz coefficient window in double precision.
pub type RealToeplitzSpec = fh_symbol::ToeplitzSpec<f64>;
