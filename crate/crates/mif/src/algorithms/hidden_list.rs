//! Hidden candidate list, robust against adaptive adversaries.
//!
//! Initialization draws a repetition-free list of `r + 1` candidates that the
//! adversary never sees. A cursor walks the list: the query always answers
//! the candidate under the cursor, and an update advances the cursor past the
//! arriving element and past every list position already known to collide
//! with the stream. Collisions with candidates *ahead* of the cursor must be
//! remembered; the set of remembered positions is the only part of the state
//! that grows, and the robust variant aborts once it exceeds its budget `t`.
//! Since the cursor only ever sits on a candidate that has not appeared,
//! non-aborted outputs are always valid.
//!
//! The zero-error variant sets the budget to `r`, which the set can never
//! reach, so it never aborts and never errs; its cost is judged on expected
//! rather than maximum space.

use std::collections::{BTreeSet, HashMap};

use crate::bits::{ceil_log2, BitString};
use crate::contract::{Abort, Element, MifAlgorithm};
use crate::instance::Instance;
use crate::random::{sample_distinct_sequence, SeededSource};
use crate::space::{CostMeasure, RandomnessModel};

use super::DecodeError;

/// Collision budget: `t = min(r, ceil(3 r^2 / n + ln(1/delta)))`.
///
/// Binary64 evaluation with a snap guard: a value within 1e-9 of an integer
/// is treated as that integer before taking the ceiling, so boundary cases
/// like `ln(1/e^-2) = 2 ± ulp` do not shift the result.
pub fn params(instance: &Instance) -> u64 {
    let (n, r) = (instance.n() as f64, instance.r() as f64);
    let x = 3.0 * r * r / n - instance.delta().ln();
    ceil_snapped(x).min(instance.r())
}

fn ceil_snapped(x: f64) -> u64 {
    debug_assert!(x >= 0.0);
    let nearest = x.round();
    if (x - nearest).abs() < 1e-9 {
        nearest as u64
    } else {
        x.ceil() as u64
    }
}

#[derive(Clone, Debug)]
pub struct HiddenList {
    n: u64,
    r: u64,
    /// Abort once the collision set exceeds this; `r` for the zero-error
    /// variant, which therefore never aborts.
    budget: u64,
    zero_error: bool,
    /// Candidate list of length `r + 1`, oracle side.
    list: Vec<Element>,
    /// Element -> 1-based position, first `r` candidates only. The spare
    /// `list[r]` is deliberately absent: it can never enter the collision
    /// set, which is what keeps the cursor within `1..=r+1`.
    position: HashMap<Element, u64>,
    /// Cursor `c`, 1-based.
    cursor: u64,
    /// Positions (1-based, ascending) of candidates ahead of the cursor at
    /// insertion time that have appeared in the stream.
    collisions: BTreeSet<u64>,
    cursor_width: u32,
    setsize_width: u32,
    index_width: u32,
    aborted: bool,
    oracle_bits: u64,
    updates: u64,
}

impl HiddenList {
    /// Robust variant: aborts with probability at most `delta`.
    pub fn robust(instance: &Instance, seed: u64) -> Self {
        Self::build(instance, seed, params(instance), false)
    }

    /// Zero-error variant: never aborts, never errs; expected-space cost.
    /// Its state encoding is the explicit layout `cursor`, then set size,
    /// then the collision positions, totalling
    /// `ceil_log2(r+1) + ceil_log2(r) * (1 + |set|)` bits.
    pub fn zero_error(instance: &Instance, seed: u64) -> Self {
        Self::build(instance, seed, instance.r(), true)
    }

    fn build(instance: &Instance, seed: u64, budget: u64, zero_error: bool) -> Self {
        let mut src = SeededSource::new(seed);
        let list = sample_distinct_sequence(instance.n(), instance.r() + 1, &mut src)
            .expect("r + 1 <= n");
        let oracle_bits = src.bits_consumed();
        Self::with_list(instance, budget, zero_error, list, oracle_bits)
    }

    fn with_list(
        instance: &Instance,
        budget: u64,
        zero_error: bool,
        list: Vec<Element>,
        oracle_bits: u64,
    ) -> Self {
        let r = instance.r();
        assert_eq!(list.len() as u64, r + 1);
        let position = list[..r as usize]
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u64 + 1))
            .collect();
        let setsize_width = if zero_error {
            ceil_log2(r) // |set| <= r - 1 always
        } else {
            ceil_log2(budget + 1)
        };
        HiddenList {
            n: instance.n(),
            r,
            budget,
            zero_error,
            list,
            position,
            cursor: 1,
            collisions: BTreeSet::new(),
            cursor_width: ceil_log2(r + 1),
            setsize_width,
            index_width: ceil_log2(r),
            aborted: false,
            oracle_bits,
            updates: 0,
        }
    }

    /// Current cursor position (1-based).
    pub fn cursor(&self) -> u64 {
        self.cursor
    }

    /// Number of remembered collisions, `|J|`.
    pub fn collision_count(&self) -> u64 {
        self.collisions.len() as u64
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn decode(
        instance: &Instance,
        seed: u64,
        zero_error: bool,
        bits: &BitString,
    ) -> Result<Self, DecodeError> {
        let mut alg = if zero_error {
            HiddenList::zero_error(instance, seed)
        } else {
            HiddenList::robust(instance, seed)
        };
        let mut reader = bits.reader();
        let cursor = reader
            .read_field(alg.cursor_width)
            .ok_or(DecodeError::Truncated)?
            + 1;
        if cursor > alg.r + 1 {
            return Err(DecodeError::FieldOutOfRange("cursor"));
        }
        let count = reader
            .read_field(alg.setsize_width)
            .ok_or(DecodeError::Truncated)?;
        let mut collisions = BTreeSet::new();
        for _ in 0..count {
            let idx = reader
                .read_field(alg.index_width)
                .ok_or(DecodeError::Truncated)?
                + 1;
            if idx > alg.r {
                return Err(DecodeError::FieldOutOfRange("collision position"));
            }
            collisions.insert(idx);
        }
        if reader.remaining() != 0 {
            return Err(DecodeError::TrailingBits);
        }
        alg.cursor = cursor;
        alg.collisions = collisions;
        Ok(alg)
    }

    #[cfg(test)]
    pub(crate) fn for_test(
        instance: &Instance,
        budget: u64,
        list: Vec<Element>,
    ) -> Self {
        Self::with_list(instance, budget, false, list, 0)
    }
}

impl MifAlgorithm for HiddenList {
    fn update(&mut self, element: Element) -> Result<(), Abort> {
        if self.aborted {
            return Err(Abort);
        }
        debug_assert!((1..=self.n).contains(&element));
        assert!(self.updates < self.r, "stream budget exceeded");
        self.updates += 1;

        loop {
            debug_assert!(self.cursor <= self.r + 1, "cursor escaped its range");
            let current = self.list[(self.cursor - 1) as usize];
            if element == current || self.collisions.contains(&self.cursor) {
                self.cursor += 1;
            } else {
                break;
            }
        }
        // each stream element pays for at most one cursor step, so c <= 1 + i
        debug_assert!(self.cursor <= self.updates + 1);

        if let Some(&pos) = self.position.get(&element) {
            if pos > self.cursor {
                self.collisions.insert(pos);
            }
        }
        if self.collision_count() > self.budget {
            self.aborted = true;
            return Err(Abort);
        }
        Ok(())
    }

    fn query(&self) -> Element {
        assert!(!self.aborted, "query on an aborted state");
        self.list[(self.cursor - 1) as usize]
    }

    fn encode(&self) -> BitString {
        assert!(!self.aborted, "encode on an aborted state");
        let mut bits = BitString::new();
        bits.push_field(self.cursor - 1, self.cursor_width);
        bits.push_field(self.collision_count(), self.setsize_width);
        for &pos in &self.collisions {
            bits.push_field(pos - 1, self.index_width);
        }
        bits
    }

    fn encoded_len(&self) -> u64 {
        u64::from(self.cursor_width)
            + u64::from(self.setsize_width)
            + self.collision_count() * u64::from(self.index_width)
    }

    fn model(&self) -> RandomnessModel {
        RandomnessModel::Oracle
    }

    fn cost_measure(&self) -> CostMeasure {
        if self.zero_error {
            CostMeasure::Expected
        } else {
            CostMeasure::Maximum
        }
    }

    fn oracle_random_bits(&self) -> u64 {
        self.oracle_bits
    }

    fn clone_box(&self) -> Box<dyn MifAlgorithm> {
        Box::new(self.clone())
    }
}
