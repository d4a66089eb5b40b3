//! Executable versions of the reduction steps behind the determinant
//! formula, plus cross-layer agreement checks, packaged as a seeded suite.

mod checks;
mod outcome;
mod sampling;
mod suite;

pub use checks::*;
pub use outcome::VerifyOutcome;
pub use sampling::{sample_exact_params, sample_rational, sample_real_params, MAX_ATTEMPTS};
pub use suite::{run_suite, SuiteConfig};
