//! Sampled candidate list for fixed streams.
//!
//! Initialization draws a uniform repetition-free list of `t + 1` candidates
//! from the universe; updates mark the first `t` of them off as they appear,
//! and the query returns the first unmarked candidate, or the untracked spare
//! once all tracked ones were seen. The only way to answer incorrectly is
//! for the stream to contain the entire list, which on a fixed stream with
//! `d` distinct elements happens with probability `C(d, t+1) / C(n, t+1)`.
//! There is no abort: failures are silent.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;

use crate::bits::{BitString, BitVec};
use crate::contract::{Abort, Element, MifAlgorithm};
use crate::instance::Instance;
use crate::random::{sample_distinct_sequence, SeededSource};
use crate::space::RandomnessModel;

use super::DecodeError;

/// List length parameter: `t = min(r, floor(log(1/delta) / log(n/r)))`.
///
/// Computed in binary64 and then repaired against the exact integer
/// condition `delta * n^t <= r^t` (the floor is the largest `t` satisfying
/// it), so floating-point boundary cases cannot shift the result. When
/// `log(n/r)` is small enough that the quotient reaches `r`, the cap wins
/// and the exact check is skipped — at `t = r` the list has `r + 1` distinct
/// entries and can never be covered, whatever `delta` was.
pub fn params(instance: &Instance) -> u64 {
    let (n, r) = (instance.n(), instance.r());
    let delta = instance.delta();
    let log_ratio = (n as f64 / r as f64).log2();
    let log_inv_delta = -delta.log2(); // delta in (0, 1] makes this >= 0
    if log_ratio <= log_inv_delta / r as f64 {
        return r;
    }
    let estimate = (log_inv_delta / log_ratio).floor();
    let mut t = if estimate.is_finite() && estimate > 0.0 {
        (estimate as u64).min(r)
    } else {
        0
    };
    while t < r && cover_bound_holds(n, r, delta, t + 1) {
        t += 1;
    }
    while t > 0 && !cover_bound_holds(n, r, delta, t) {
        t -= 1;
    }
    t
}

/// Exact check of `delta * n^t <= r^t`, i.e. `(n/r)^t <= 1/delta`, with
/// `delta` taken as the dyadic rational its binary64 bits denote.
fn cover_bound_holds(n: u64, r: u64, delta: f64, t: u64) -> bool {
    let t = u32::try_from(t).expect("parameter t fits in 32 bits");
    let delta = BigRational::from_float(delta).expect("delta is finite");
    delta * BigInt::from(n).pow(t) <= BigRational::from_integer(BigInt::from(r).pow(t))
}

#[derive(Clone, Debug)]
pub struct Classical {
    n: u64,
    r: u64,
    t: u64,
    /// The `t + 1` candidates, oracle side: not part of the encoded state.
    list: Vec<Element>,
    /// Element -> 1-based position among the first `t` candidates.
    position: HashMap<Element, u64>,
    hits: BitVec,
    oracle_bits: u64,
    updates: u64,
}

impl Classical {
    pub fn new(instance: &Instance, seed: u64) -> Self {
        let t = params(instance);
        let mut src = SeededSource::new(seed);
        let list = sample_distinct_sequence(instance.n(), t + 1, &mut src)
            .expect("t + 1 <= r + 1 <= n");
        let oracle_bits = src.bits_consumed();
        Self::with_list(instance, t, list, oracle_bits)
    }

    fn with_list(instance: &Instance, t: u64, list: Vec<Element>, oracle_bits: u64) -> Self {
        assert_eq!(list.len() as u64, t + 1);
        let position = list[..t as usize]
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u64 + 1))
            .collect();
        Classical {
            n: instance.n(),
            r: instance.r(),
            t,
            list,
            position,
            hits: BitVec::zeros(t),
            oracle_bits,
            updates: 0,
        }
    }

    /// The sampled candidates; the last entry is the untracked spare.
    pub fn candidates(&self) -> &[Element] {
        &self.list
    }

    pub fn decode(instance: &Instance, seed: u64, bits: &BitString) -> Result<Self, DecodeError> {
        let mut alg = Classical::new(instance, seed);
        if bits.len_bits() != alg.t {
            return Err(DecodeError::Truncated);
        }
        for i in 0..alg.t {
            if bits.bit(i) {
                alg.hits.set(i);
            }
        }
        Ok(alg)
    }

    #[cfg(test)]
    pub(crate) fn for_test(instance: &Instance, t: u64, list: Vec<Element>) -> Self {
        Self::with_list(instance, t, list, 0)
    }
}

impl MifAlgorithm for Classical {
    fn update(&mut self, element: Element) -> Result<(), Abort> {
        debug_assert!((1..=self.n).contains(&element));
        assert!(self.updates < self.r, "stream budget exceeded");
        self.updates += 1;
        if let Some(&j) = self.position.get(&element) {
            self.hits.set(j - 1);
        }
        Ok(())
    }

    fn query(&self) -> Element {
        match self.hits.least_zero() {
            Some(j) => self.list[j as usize],
            None => self.list[self.t as usize],
        }
    }

    fn encode(&self) -> BitString {
        let mut bits = BitString::new();
        bits.push_bitvec(&self.hits);
        bits
    }

    fn encoded_len(&self) -> u64 {
        self.t
    }

    fn model(&self) -> RandomnessModel {
        RandomnessModel::Oracle
    }

    fn oracle_random_bits(&self) -> u64 {
        self.oracle_bits
    }

    fn clone_box(&self) -> Box<dyn MifAlgorithm> {
        Box::new(self.clone())
    }
}
