//! Lifecycle contracts implemented by every algorithm and adversary.

use thiserror::Error;

use crate::bits::BitString;
use crate::space::{CostMeasure, RandomnessModel};

/// Stream elements are integers in `1..=n`.
pub type Element = u64;

/// Returned by `update` when an algorithm gives up rather than risk an
/// invalid output. Aborting is terminal: later updates keep failing and
/// `query` panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Abort;

/// A single-pass streaming algorithm for missing-item finding.
///
/// The lifecycle is `init` (a constructor taking an [`crate::Instance`] and a
/// seed), then at most `r` calls to [`update`](MifAlgorithm::update)
/// interleaved with any number of [`query`](MifAlgorithm::query) calls.
/// `query` is legal after any prefix, including the empty one, and never
/// mutates state.
pub trait MifAlgorithm: Send {
    /// Feed the next stream element (in `1..=n`).
    fn update(&mut self, element: Element) -> Result<(), Abort>;

    /// The current candidate for an element missing from the stream so far.
    ///
    /// Panics if called after an abort or when the update budget was
    /// exceeded; the harness never does either.
    fn query(&self) -> Element;

    /// Prefix-free encoding of the mutable state. Oracle-model algorithms
    /// exclude oracle randomness from this; seed-model algorithms include
    /// everything they retain.
    fn encode(&self) -> BitString;

    /// Length of [`encode`](MifAlgorithm::encode) in bits, without
    /// materializing it.
    fn encoded_len(&self) -> u64 {
        self.encode().len_bits()
    }

    fn model(&self) -> RandomnessModel;

    fn cost_measure(&self) -> CostMeasure {
        CostMeasure::Maximum
    }

    /// Oracle-model random bits drawn so far (not charged to state).
    fn oracle_random_bits(&self) -> u64 {
        0
    }

    /// Random bits drawn at initialization in the seed model.
    fn seed_bits(&self) -> u64 {
        0
    }

    fn clone_box(&self) -> Box<dyn MifAlgorithm>;
}

impl Clone for Box<dyn MifAlgorithm> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AdversaryError {
    #[error("static stream exhausted after {0} elements")]
    Exhausted(usize),
    #[error("echo adversary needs at least one prior output")]
    EmptyHistory,
    #[error("cover adversary limited to n <= {max_n}, r <= {max_r}; got n={n}, r={r}")]
    InstanceTooLarge {
        n: u64,
        r: u64,
        max_n: u64,
        max_r: u64,
    },
    #[error("the cover adversary wraps a concrete algorithm; build it directly")]
    CoverNeedsAlgorithm,
}

/// Chooses the next stream element from the algorithm's outputs.
///
/// `outputs` is every output seen so far, starting with the query made
/// before any element was sent; adversaries never see internal state. The
/// result must be a pure function of that history and the adversary's own
/// seed, though implementations may keep caches or replicas internally.
pub trait MifAdversary: Send {
    fn next(&mut self, outputs: &[Element]) -> Result<Element, AdversaryError>;
}
