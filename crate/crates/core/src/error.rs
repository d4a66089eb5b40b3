use std::fmt;

use thiserror::Error;

/// A hyperplane in parameter space on which a denominator vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hyperplane {
    /// `alpha + m = 0`
    Alpha(i64),
    /// `beta + m = 0`
    Beta(i64),
    /// `alpha + beta + m = 0`
    AlphaBeta(i64),
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, m) = match *self {
            Hyperplane::Alpha(m) => ("alpha", m),
            Hyperplane::Beta(m) => ("beta", m),
            Hyperplane::AlphaBeta(m) => ("alpha + beta", m),
        };
        match m.cmp(&0) {
            std::cmp::Ordering::Less => write!(f, "{name} - {} = 0", -m),
            std::cmp::Ordering::Equal => write!(f, "{name} = 0"),
            std::cmp::Ordering::Greater => write!(f, "{name} + {m} = 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma argument landed on (or within tolerance of) a non-positive integer.
    #[error("pole of gamma in term `{term}` at offset {offset} (argument {argument})")]
    Pole {
        term: &'static str,
        offset: usize,
        argument: f64,
    },

    #[error("denominator vanishes on the hyperplane {0}")]
    DenominatorZero(Hyperplane),

    #[error("division by a zero signed-log value")]
    ZeroDivision,

    #[error("matrix order must be at least 1")]
    EmptyOrder,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
