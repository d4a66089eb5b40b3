use serde::{Deserialize, Serialize};

/// Result of running one named check over one or more samples.
///
/// `failures == 0` exactly when `first_failure` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub check_name: String,
    pub samples: usize,
    pub failures: usize,
    /// Parameter draws rejected for landing on an excluded hyperplane.
    pub resamples: usize,
    pub first_failure: Option<String>,
}

impl VerifyOutcome {
    pub fn new(check_name: impl Into<String>) -> Self {
        Self {
            check_name: check_name.into(),
            samples: 0,
            failures: 0,
            resamples: 0,
            first_failure: None,
        }
    }

    /// Counts one sample; `describe` is only called for the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.samples += 1;
        self.fail_unless(ok, describe);
    }

    /// Like [`record`](Self::record) without counting a new sample.
    pub fn fail_unless(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok {
            if self.failures == 0 {
                self.first_failure = Some(describe());
            }
            self.failures += 1;
        }
    }

    /// Folds another outcome's counts into this one, keeping the earliest failure.
    pub fn absorb(&mut self, other: VerifyOutcome) {
        self.samples += other.samples;
        self.resamples += other.resamples;
        if self.failures == 0 {
            self.first_failure = other.first_failure;
        }
        self.failures += other.failures;
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}
