//! Brute-force verification over every stream, and bounded exploration of
//! the reachable state space.

use std::collections::HashSet;

use crate::bits::BitString;
use crate::contract::{Element, MifAlgorithm};

use super::HarnessError;

/// Guard for `exhaustive_verify`: at most this many streams.
pub const MAX_STREAMS: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Pass,
    Fail { stream: Vec<Element> },
}

/// Run the algorithm on every stream in `[n]^r` and check every output —
/// each intermediate one and the final one — against the prefix it answers
/// for. Aborts count as failures. The factory must be deterministic or
/// fixed-seed so that each stream maps to one run.
///
/// Returns the first failing stream (as the prefix up to the failing step)
/// or `Pass`.
pub fn exhaustive_verify(
    factory: &(dyn Fn() -> Box<dyn MifAlgorithm> + '_),
    n: u64,
    r: u64,
) -> Result<VerifyOutcome, HarnessError> {
    assert!(n >= 2 && r >= 1 && r < n, "need 1 <= r < n");
    let total = (u128::from(n)).checked_pow(r as u32).unwrap_or(u128::MAX);
    if total > u128::from(MAX_STREAMS) {
        return Err(HarnessError::SearchSpaceTooLarge {
            streams: total,
            max: MAX_STREAMS,
        });
    }

    let mut stream = vec![1u64; r as usize];
    loop {
        let mut alg = factory();
        let mut seen: HashSet<Element> = HashSet::with_capacity(r as usize);
        let mut failed_at = None;
        for (i, &e) in stream.iter().enumerate() {
            seen.insert(e);
            if alg.update(e).is_err() {
                failed_at = Some(i);
                break;
            }
            if seen.contains(&alg.query()) {
                failed_at = Some(i);
                break;
            }
        }
        if let Some(i) = failed_at {
            return Ok(VerifyOutcome::Fail {
                stream: stream[..=i].to_vec(),
            });
        }
        // odometer
        let mut pos = stream.len();
        loop {
            if pos == 0 {
                return Ok(VerifyOutcome::Pass);
            }
            pos -= 1;
            if stream[pos] < n {
                stream[pos] += 1;
                break;
            }
            stream[pos] = 1;
        }
    }
}

/// Maximum encoded-state length over every state reachable within `depth`
/// updates, found by breadth-first search over the state graph. States are
/// identified by their encodings, which are injective on the reachable set
/// for the prefix-free codes used here. Stops with an error if more than
/// `max_states` distinct states appear.
pub fn reachable_state_bits(
    factory: &(dyn Fn() -> Box<dyn MifAlgorithm> + '_),
    n: u64,
    depth: u64,
    max_states: usize,
) -> Result<u64, HarnessError> {
    let initial = factory();
    let mut visited: HashSet<BitString> = HashSet::new();
    let mut max_bits = initial.encoded_len();
    visited.insert(initial.encode());
    let mut frontier: Vec<Box<dyn MifAlgorithm>> = vec![initial];

    for _ in 0..depth {
        let mut next: Vec<Box<dyn MifAlgorithm>> = Vec::new();
        for state in &frontier {
            for e in 1..=n {
                let mut branch = state.clone_box();
                if branch.update(e).is_err() {
                    continue;
                }
                let code = branch.encode();
                if visited.insert(code.clone()) {
                    if visited.len() > max_states {
                        return Err(HarnessError::StateSpaceTooLarge { max: max_states });
                    }
                    max_bits = max_bits.max(code.len_bits());
                    next.push(branch);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(max_bits)
}
