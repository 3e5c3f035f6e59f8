//! Game records and validity checking.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

use crate::contract::Element;
use crate::instance::Instance;

/// Full record of one game.
///
/// `outputs[i-1]` (1-based step `i`) is the output produced after
/// `inputs[i-1]` was processed; `initial_output` is the query made before any
/// element arrived. On abort at step `k`, `inputs` still contains the
/// element that triggered it, so `inputs` has length `k` while `outputs` has
/// length `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub initial_output: Option<Element>,
    pub inputs: Vec<Element>,
    pub outputs: Vec<Element>,
    /// 1-based index of the update that aborted, if any.
    pub aborted_at: Option<usize>,
    /// Least 1-based `i` such that `outputs[i-1]` already appeared among the
    /// first `i` inputs, if any.
    pub first_failure: Option<usize>,
}

impl Transcript {
    /// Whole-sequence judgment: any invalid intermediate output or an abort
    /// fails the transcript. This is the adversarial-setting notion of error.
    pub fn failed(&self) -> bool {
        self.first_failure.is_some() || self.aborted_at.is_some()
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TranscriptError {
    #[error("inputs ({inputs}) and outputs ({outputs}) have inconsistent lengths")]
    LengthMismatch { inputs: usize, outputs: usize },
    #[error("transcript length {len} exceeds stream budget r = {r}")]
    TooLong { len: usize, r: u64 },
    #[error("element {0} is outside the universe")]
    ElementOutOfRange(Element),
    #[error("aborted_at = {0} is inconsistent with the recorded inputs")]
    BadAbortIndex(usize),
}

/// Verdicts under both error judgments.
///
/// The adversarial setting judges the whole output sequence; the static
/// setting judges only the output at stream end. Aborting counts as failure
/// under both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub first_failure: Option<usize>,
    pub aborted_at: Option<usize>,
    /// The last recorded output collides with some input (static judgment).
    pub final_output_invalid: bool,
}

impl ValidityReport {
    pub fn failed_adversarial(&self) -> bool {
        self.first_failure.is_some() || self.aborted_at.is_some()
    }

    pub fn failed_static(&self) -> bool {
        self.final_output_invalid || self.aborted_at.is_some()
    }
}

/// Recompute the failure structure of a transcript from scratch.
pub fn check_transcript(
    instance: &Instance,
    transcript: &Transcript,
) -> Result<ValidityReport, TranscriptError> {
    let inputs = &transcript.inputs;
    let outputs = &transcript.outputs;

    if inputs.len() as u64 > instance.r() {
        return Err(TranscriptError::TooLong {
            len: inputs.len(),
            r: instance.r(),
        });
    }
    match transcript.aborted_at {
        Some(k) => {
            if k == 0 || inputs.len() != k || outputs.len() != k - 1 {
                return Err(TranscriptError::BadAbortIndex(k));
            }
        }
        None => {
            if inputs.len() != outputs.len() {
                return Err(TranscriptError::LengthMismatch {
                    inputs: inputs.len(),
                    outputs: outputs.len(),
                });
            }
        }
    }
    for &e in inputs.iter().chain(outputs.iter()).chain(&transcript.initial_output) {
        if e < 1 || e > instance.n() {
            return Err(TranscriptError::ElementOutOfRange(e));
        }
    }

    let mut seen: HashSet<Element> = HashSet::with_capacity(inputs.len());
    let mut first_failure = None;
    for (i, &out) in outputs.iter().enumerate() {
        seen.insert(inputs[i]);
        if first_failure.is_none() && seen.contains(&out) {
            first_failure = Some(i + 1);
        }
    }
    seen.extend(inputs.iter().copied());
    let final_output_invalid = outputs.last().is_some_and(|last| seen.contains(last));

    Ok(ValidityReport {
        first_failure,
        aborted_at: transcript.aborted_at,
        final_output_invalid,
    })
}
