//! Overflow-safe log-gamma and integer-offset Barnes-G ratios.
//!
//! Determinants of Fisher-Hartwig Toeplitz matrices grow and decay
//! super-exponentially in the order, so every value here is carried as a
//! [`SignedLog`]: a sign in `{-1, 0, +1}` and a natural-log magnitude.

mod gamma;
mod signed_log;

pub use gamma::{log_barnes_g_ratio, log_gamma_balanced, log_gamma_offset, log_gamma_signed, sin_pi};
pub use signed_log::SignedLog;
