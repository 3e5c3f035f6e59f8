//! Missing-item finding on data streams.
//!
//! A stream of `r` elements of `1..=n` arrives one at a time (repetitions
//! allowed, `r < n`), and after every prefix the algorithm must name an
//! element that has not appeared yet. The catch is space: remembering the
//! whole prefix is easy, so the interesting algorithms remember almost
//! nothing — and then the stream may be chosen *adaptively* by an adversary
//! watching every answer.
//!
//! This crate implements six algorithm lifecycles for the problem across
//! four randomness models (free oracle randomness, per-step tape, seed-only,
//! and deterministic), adversaries to play against them (fixed streams,
//! echoing outputs back, uniform noise, and an exhaustive-search adversary
//! that defeats any algorithm with too few reachable outputs), and a harness
//! that measures what the theory predicts: failure rates with confidence
//! intervals, bit-exact space profiles, exhaustive small-instance
//! verification, and an exact solver for the one-way communication game that
//! underlies the deterministic lower bound.
//!
//! Everything is deterministic given a 64-bit seed; trials are parallelized
//! with per-trial seeds so results do not depend on scheduling.
//!
//! The `examples/` directory walks through each capability; the `mif` binary
//! exposes the same functionality as subcommands (`run`, `estimate`,
//! `space`, `verify`, `avoid`, `params`).

pub mod adversaries;
pub mod algorithms;
pub mod bits;
pub mod cli;
pub mod contract;
pub mod harness;
pub mod instance;
pub mod random;
pub mod space;
pub mod transcript;

pub use bits::{BitString, BitVec};
pub use contract::{Abort, AdversaryError, Element, MifAdversary, MifAlgorithm};
pub use instance::{Instance, InstanceError};
pub use space::{CostMeasure, RandomnessModel, SpaceReport};
pub use transcript::{check_transcript, Transcript, TranscriptError, ValidityReport};
