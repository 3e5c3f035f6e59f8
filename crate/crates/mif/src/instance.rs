//! Problem parameters.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One missing-item finding task: a stream of `r` elements of `1..=n`
/// arrives, and after any prefix the algorithm must name an element that has
/// not appeared. `delta` is the tolerated failure probability.
///
/// `r < n` is required so that a missing element always exists.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    n: u64,
    r: u64,
    delta: f64,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("n must be positive")]
    UniverseEmpty,
    #[error("r must be >= 1")]
    StreamEmpty,
    #[error("r must be < n")]
    StreamTooLong,
    #[error("delta must be in (0, 1]")]
    DeltaOutOfRange,
}

impl Instance {
    pub fn new(n: u64, r: u64, delta: f64) -> Result<Self, InstanceError> {
        if n == 0 {
            return Err(InstanceError::UniverseEmpty);
        }
        if r == 0 {
            return Err(InstanceError::StreamEmpty);
        }
        if r >= n {
            return Err(InstanceError::StreamTooLong);
        }
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(InstanceError::DeltaOutOfRange);
        }
        Ok(Instance { n, r, delta })
    }

    /// Universe size.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Stream length.
    pub fn r(&self) -> u64 {
        self.r
    }

    /// Target error probability.
    pub fn delta(&self) -> f64 {
        self.delta
    }
}
