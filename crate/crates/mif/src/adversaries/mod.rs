//! Stream-producing opponents for the adversarial game.
//!
//! Adversaries see only the algorithm's outputs (starting with the query
//! made before any element was sent), never its internal state.

pub mod cover;

pub use cover::CoverAdversary;

use crate::contract::{AdversaryError, Element, MifAdversary};
use crate::instance::Instance;
use crate::random::SeededSource;

/// Adversary selector for the harness and CLI. The cover adversary wraps a
/// concrete algorithm and is built through [`CoverAdversary::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdversaryKind {
    /// Replays a fixed stream, ignoring the outputs.
    Static(Vec<Element>),
    /// Feeds every output straight back into the stream.
    Echo,
    /// Uniform independent elements; a baseline load generator.
    UniformRandom,
    /// Exhaustive-search adversary over the algorithm's reachable outputs.
    Cover,
}

impl AdversaryKind {
    pub fn name(&self) -> &'static str {
        match self {
            AdversaryKind::Static(_) => "static",
            AdversaryKind::Echo => "echo",
            AdversaryKind::UniformRandom => "uniform",
            AdversaryKind::Cover => "cover",
        }
    }

    pub fn build(
        &self,
        instance: &Instance,
        seed: u64,
    ) -> Result<Box<dyn MifAdversary>, AdversaryError> {
        match self {
            AdversaryKind::Static(stream) => {
                Ok(Box::new(StaticAdversary::new(instance, stream.clone())))
            }
            AdversaryKind::Echo => Ok(Box::new(EchoAdversary)),
            AdversaryKind::UniformRandom => {
                Ok(Box::new(UniformAdversary::new(instance.n(), seed)))
            }
            AdversaryKind::Cover => Err(AdversaryError::CoverNeedsAlgorithm),
        }
    }
}

/// Plays a fixed stream: the i-th call returns the i-th element no matter
/// what the algorithm answered.
pub struct StaticAdversary {
    stream: Vec<Element>,
}

impl StaticAdversary {
    pub fn new(instance: &Instance, stream: Vec<Element>) -> Self {
        assert!(stream.len() as u64 <= instance.r(), "stream longer than r");
        assert!(
            stream.iter().all(|&e| (1..=instance.n()).contains(&e)),
            "stream element outside the universe"
        );
        StaticAdversary { stream }
    }
}

impl MifAdversary for StaticAdversary {
    fn next(&mut self, outputs: &[Element]) -> Result<Element, AdversaryError> {
        // `outputs` carries the pre-stream query plus one output per element
        // already sent, so the next element's 0-based index is len - 1.
        let idx = outputs.len().saturating_sub(1);
        self.stream
            .get(idx)
            .copied()
            .ok_or(AdversaryError::Exhausted(self.stream.len()))
    }
}

/// Feeds the algorithm's latest output back as the next element, forcing it
/// to keep naming fresh elements.
pub struct EchoAdversary;

impl MifAdversary for EchoAdversary {
    fn next(&mut self, outputs: &[Element]) -> Result<Element, AdversaryError> {
        outputs
            .last()
            .copied()
            .ok_or(AdversaryError::EmptyHistory)
    }
}

/// Uniform independent elements of `1..=n`, reproducible from its seed.
pub struct UniformAdversary {
    n: u64,
    src: SeededSource,
}

impl UniformAdversary {
    pub fn new(n: u64, seed: u64) -> Self {
        UniformAdversary {
            n,
            src: SeededSource::new(seed),
        }
    }
}

impl MifAdversary for UniformAdversary {
    fn next(&mut self, _outputs: &[Element]) -> Result<Element, AdversaryError> {
        Ok(self.src.uniform_below(self.n) + 1)
    }
}
