//! Game execution, Monte Carlo estimation, space profiling, exhaustive
//! verification, and the one-way communication-game oracle.

pub mod avoid;
pub mod estimate;
pub mod exact;
pub mod exhaustive;
pub mod game;
pub mod profile;

pub use avoid::{avoid_min_messages, AvoidInstance};
pub use estimate::{estimate_error, run_trials, wilson_interval, ErrorEstimate, TrialSummary};
pub use exact::{binomial, exact_classical_failure};
pub use exhaustive::{exhaustive_verify, reachable_state_bits, VerifyOutcome, MAX_STREAMS};
pub use game::{play, GameError, GameRecord};
pub use profile::space_profile;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("search space of {streams} streams exceeds the guard of {max}")]
    SearchSpaceTooLarge { streams: u128, max: u64 },
    #[error("avoid instance needs 1 <= a, 1 <= b, a + b <= t")]
    InvalidAvoidInstance,
    #[error("state exploration exceeded {max} distinct states")]
    StateSpaceTooLarge { max: usize },
}
