//! One full algorithm-versus-adversary game.

use std::collections::HashSet;
use thiserror::Error;

use crate::contract::{Abort, AdversaryError, Element, MifAdversary, MifAlgorithm};
use crate::instance::Instance;
use crate::space::{CostMeasure, RandomnessModel};
use crate::transcript::Transcript;

/// A transcript plus the per-step space observations the profiler needs.
#[derive(Clone, Debug)]
pub struct GameRecord {
    pub transcript: Transcript,
    /// Encoded-state length after initialization and after each surviving
    /// update (`steps + 1` entries for a run of `steps` updates).
    pub state_bits: Vec<u64>,
    pub model: RandomnessModel,
    pub cost_measure: CostMeasure,
    pub oracle_random_bits: u64,
    pub seed_bits: u64,
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error(transparent)]
    Adversary(#[from] AdversaryError),
    #[error("adversary produced {0}, outside the universe")]
    ElementOutOfRange(Element),
}

/// Run the full interaction: query, record the output, ask the adversary,
/// update — for `r` rounds or until the algorithm aborts. The output made
/// before any element is sent opens the history, matching the transcript
/// order `o_0, e_1, o_1, e_2, ...`.
pub fn play(
    algorithm: &mut dyn MifAlgorithm,
    adversary: &mut dyn MifAdversary,
    instance: &Instance,
) -> Result<GameRecord, GameError> {
    let r = instance.r();
    let mut history = Vec::with_capacity(r as usize + 1);
    history.push(algorithm.query());
    let mut state_bits = Vec::with_capacity(r as usize + 1);
    state_bits.push(algorithm.encoded_len());

    let mut inputs = Vec::with_capacity(r as usize);
    let mut outputs = Vec::with_capacity(r as usize);
    let mut seen: HashSet<Element> = HashSet::with_capacity(r as usize);
    let mut aborted_at = None;
    let mut first_failure = None;

    for i in 1..=r as usize {
        let element = adversary.next(&history)?;
        if element < 1 || element > instance.n() {
            return Err(GameError::ElementOutOfRange(element));
        }
        inputs.push(element);
        seen.insert(element);
        if let Err(Abort) = algorithm.update(element) {
            aborted_at = Some(i);
            break;
        }
        let output = algorithm.query();
        outputs.push(output);
        history.push(output);
        if first_failure.is_none() && seen.contains(&output) {
            first_failure = Some(i);
        }
        state_bits.push(algorithm.encoded_len());
    }

    let transcript = Transcript {
        initial_output: Some(history[0]),
        inputs,
        outputs,
        aborted_at,
        first_failure,
    };
    // two-path consistency: the incremental verdict must match a re-check
    debug_assert_eq!(
        crate::transcript::check_transcript(instance, &transcript)
            .expect("play produces well-formed transcripts")
            .first_failure,
        transcript.first_failure
    );

    Ok(GameRecord {
        transcript,
        state_bits,
        model: algorithm.model(),
        cost_measure: algorithm.cost_measure(),
        oracle_random_bits: algorithm.oracle_random_bits(),
        seed_bits: algorithm.seed_bits(),
    })
}
