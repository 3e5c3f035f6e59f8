//! The missing-item finding algorithms.
//!
//! Six lifecycles behind one trait:
//!
//! | name         | mechanism                         | randomness    | can fail?            |
//! |--------------|-----------------------------------|---------------|----------------------|
//! | `trivial`    | bit vector over `1..=r`           | deterministic | never                |
//! | `classical`  | sampled candidate list            | oracle        | silently, on fixed streams |
//! | `hidden`     | hidden candidate list + cursor    | oracle        | abort only           |
//! | `zero`       | `hidden` with an unbounded set    | oracle        | never                |
//! | `pigeonhole` | staged digit elimination          | deterministic | never                |
//! | `batch`      | random blocks, list kept in state | seed          | abort only           |

pub mod batch_list;
pub mod classical;
pub mod hidden_list;
pub mod pigeonhole;
pub mod trivial;

pub use batch_list::{BatchList, BatchParams};
pub use classical::Classical;
pub use hidden_list::HiddenList;
pub use pigeonhole::{Pigeonhole, PigeonholeParams};
pub use trivial::Trivial;

use thiserror::Error;

use crate::contract::MifAlgorithm;
use crate::instance::Instance;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("encoded state too short")]
    Truncated,
    #[error("field {0} is out of range")]
    FieldOutOfRange(&'static str),
    #[error("trailing bits after decoding")]
    TrailingBits,
}

/// Algorithm selector; `parse` accepts the CLI names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgorithmKind {
    Trivial,
    Classical,
    HiddenList,
    ZeroError,
    Pigeonhole,
    BatchList,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 6] = [
        AlgorithmKind::Trivial,
        AlgorithmKind::Classical,
        AlgorithmKind::HiddenList,
        AlgorithmKind::ZeroError,
        AlgorithmKind::Pigeonhole,
        AlgorithmKind::BatchList,
    ];

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "trivial" => Some(AlgorithmKind::Trivial),
            "classical" => Some(AlgorithmKind::Classical),
            "hidden" => Some(AlgorithmKind::HiddenList),
            "zero" => Some(AlgorithmKind::ZeroError),
            "pigeonhole" => Some(AlgorithmKind::Pigeonhole),
            "batch" => Some(AlgorithmKind::BatchList),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgorithmKind::Trivial => "trivial",
            AlgorithmKind::Classical => "classical",
            AlgorithmKind::HiddenList => "hidden",
            AlgorithmKind::ZeroError => "zero",
            AlgorithmKind::Pigeonhole => "pigeonhole",
            AlgorithmKind::BatchList => "batch",
        }
    }

    /// Instantiate the algorithm. The `batch` kind transparently falls back
    /// to `trivial` when its parameter derivation says so.
    pub fn build(&self, instance: &Instance, seed: u64) -> Box<dyn MifAlgorithm> {
        match self {
            AlgorithmKind::Trivial => Box::new(Trivial::new(instance)),
            AlgorithmKind::Classical => Box::new(Classical::new(instance, seed)),
            AlgorithmKind::HiddenList => Box::new(HiddenList::robust(instance, seed)),
            AlgorithmKind::ZeroError => Box::new(HiddenList::zero_error(instance, seed)),
            AlgorithmKind::Pigeonhole => Box::new(Pigeonhole::new(instance)),
            AlgorithmKind::BatchList => match batch_list::params(instance) {
                BatchParams::Active { .. } => Box::new(BatchList::new(instance, seed)),
                BatchParams::Fallback => Box::new(Trivial::new(instance)),
            },
        }
    }

    /// Every algorithm except the classical sampler is sound: a non-aborted
    /// transcript never contains an invalid output.
    pub fn always_sound(&self) -> bool {
        !matches!(self, AlgorithmKind::Classical)
    }

    pub fn derived_params(&self, instance: &Instance) -> DerivedParams {
        match self {
            AlgorithmKind::Trivial => DerivedParams::None,
            AlgorithmKind::Classical => DerivedParams::T {
                t: classical::params(instance),
            },
            AlgorithmKind::HiddenList => DerivedParams::T {
                t: hidden_list::params(instance),
            },
            AlgorithmKind::ZeroError => DerivedParams::T { t: instance.r() },
            AlgorithmKind::Pigeonhole => {
                let p = pigeonhole::params(instance.n(), instance.r());
                DerivedParams::ST { s: p.s, t: p.t }
            }
            AlgorithmKind::BatchList => match batch_list::params(instance) {
                BatchParams::Active { w, t } => DerivedParams::WT { w, t },
                BatchParams::Fallback => DerivedParams::Fallback,
            },
        }
    }
}

/// Parameters derived from an instance, as exposed by the `params`
/// subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedParams {
    None,
    T { t: u64 },
    ST { s: u64, t: u64 },
    WT { w: u64, t: u64 },
    Fallback,
}
