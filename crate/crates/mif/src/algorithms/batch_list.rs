//! Random block list; all randomness is kept (and charged) in state.
//!
//! The universe is split into blocks of `w` consecutive elements and a
//! repetition-free list of `t` block ids is drawn at initialization — the
//! only random step, so this runs in the seed model and the list is part of
//! the encoded state. A cursor points at the current block; a `w`-bit vector
//! tracks which of its elements appeared, and the query answers the first
//! untracked one. Blocks ahead of the cursor that are touched by the stream
//! are remembered and skipped when the current block fills up. The cursor
//! moves at most once per `w` arrivals plus once per remembered block, so it
//! overruns `t` (the abort condition) only if the adversary keeps touching
//! unseen blocks — which it cannot reliably do.

use serde::Serialize;
use std::collections::HashMap;

use crate::bits::{ceil_log2, BitString, BitVec};
use crate::contract::{Abort, Element, MifAlgorithm};
use crate::instance::Instance;
use crate::random::{sample_distinct_sequence, SeededSource};
use crate::space::RandomnessModel;

use super::DecodeError;

/// Derived configuration, or the instruction to fall back to the trivial
/// tracker when the block construction cannot help.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BatchParams {
    Active { w: u64, t: u64 },
    Fallback,
}

/// Block size `w = floor(min(sqrt(r log2 n), n / (32 r), r / (6 ln(1/delta))))`
/// and list length `t = ceil(2 r / w)`.
///
/// Requires `r < n / 32` and `delta >= e^(-r/6)`; outside that regime the
/// trivial tracker is at least as good and `Fallback` is returned.
pub fn params(instance: &Instance) -> BatchParams {
    let (n, r) = (instance.n(), instance.r());
    let delta = instance.delta();
    if 32u128 * u128::from(r) >= u128::from(n) {
        return BatchParams::Fallback;
    }
    if delta < (-(r as f64) / 6.0).exp() {
        return BatchParams::Fallback;
    }
    let ln_inv_delta = -delta.ln();
    let slack = if ln_inv_delta == 0.0 {
        f64::INFINITY
    } else {
        r as f64 / (6.0 * ln_inv_delta)
    };
    let raw = ((r as f64) * (n as f64).log2())
        .sqrt()
        .min(n as f64 / (32.0 * r as f64))
        .min(slack);
    let w = floor_snapped(raw);
    assert!(w >= 1, "block size must be positive under the preconditions");
    BatchParams::Active {
        w,
        t: (2 * r).div_ceil(w),
    }
}

fn floor_snapped(x: f64) -> u64 {
    let nearest = x.round();
    if (x - nearest).abs() < 1e-9 {
        nearest as u64
    } else {
        x.floor() as u64
    }
}

#[derive(Clone, Debug)]
pub struct BatchList {
    n: u64,
    r: u64,
    w: u64,
    t: u64,
    /// Block ids in `1..=floor(n/w)`, drawn once; kept in state.
    blocks: Vec<u64>,
    /// Block id -> 1-based list position.
    position: HashMap<u64, u64>,
    /// Cursor `c` into the block list, 1-based.
    cursor: u64,
    /// Positions ahead of the cursor whose blocks contain stream elements.
    touched: Vec<bool>,
    /// Coverage of the current block.
    cover: BitVec,
    block_width: u32,
    cursor_width: u32,
    aborted: bool,
    seed_bits_used: u64,
    updates: u64,
}

impl BatchList {
    /// Panics when the instance needs the fallback path; use
    /// [`AlgorithmKind::build`](super::AlgorithmKind::build) for transparent
    /// routing.
    pub fn new(instance: &Instance, seed: u64) -> Self {
        match params(instance) {
            BatchParams::Active { w, t } => {
                let mut src = SeededSource::new(seed);
                let blocks = sample_distinct_sequence(instance.n() / w, t, &mut src)
                    .expect("t <= floor(n/w) under the preconditions");
                let seed_bits = src.bits_consumed();
                Self::with_blocks(instance, w, t, blocks, seed_bits)
            }
            BatchParams::Fallback => {
                panic!("parameters require the trivial fallback; use AlgorithmKind::build")
            }
        }
    }

    fn with_blocks(
        instance: &Instance,
        w: u64,
        t: u64,
        blocks: Vec<u64>,
        seed_bits_used: u64,
    ) -> Self {
        assert_eq!(blocks.len() as u64, t);
        let position = blocks
            .iter()
            .enumerate()
            .map(|(i, &b)| (b, i as u64 + 1))
            .collect();
        BatchList {
            n: instance.n(),
            r: instance.r(),
            w,
            t,
            blocks,
            position,
            cursor: 1,
            touched: vec![false; t as usize],
            cover: BitVec::zeros(w),
            block_width: ceil_log2(instance.n() / w),
            cursor_width: ceil_log2(t),
            aborted: false,
            seed_bits_used,
            updates: 0,
        }
    }

    pub fn cursor(&self) -> u64 {
        self.cursor
    }

    pub fn block_size(&self) -> u64 {
        self.w
    }

    pub fn list_len(&self) -> u64 {
        self.t
    }

    /// Decode from bits alone: seed-model states are self-contained.
    pub fn decode(instance: &Instance, bits: &BitString) -> Result<Self, DecodeError> {
        let BatchParams::Active { w, t } = params(instance) else {
            return Err(DecodeError::FieldOutOfRange("fallback instance"));
        };
        let block_width = ceil_log2(instance.n() / w);
        let cursor_width = ceil_log2(t);
        let mut reader = bits.reader();
        let mut blocks = Vec::with_capacity(t as usize);
        for _ in 0..t {
            let b = reader.read_field(block_width).ok_or(DecodeError::Truncated)? + 1;
            if b > instance.n() / w {
                return Err(DecodeError::FieldOutOfRange("block id"));
            }
            blocks.push(b);
        }
        let cursor = reader.read_field(cursor_width).ok_or(DecodeError::Truncated)? + 1;
        if cursor > t {
            return Err(DecodeError::FieldOutOfRange("cursor"));
        }
        let mut touched = vec![false; t as usize];
        for slot in touched.iter_mut() {
            *slot = reader.read_field(1).ok_or(DecodeError::Truncated)? == 1;
        }
        let mut cover = BitVec::zeros(w);
        for i in 0..w {
            if reader.read_field(1).ok_or(DecodeError::Truncated)? == 1 {
                cover.set(i);
            }
        }
        if reader.remaining() != 0 {
            return Err(DecodeError::TrailingBits);
        }
        let mut alg = Self::with_blocks(instance, w, t, blocks, 0);
        alg.cursor = cursor;
        alg.touched = touched;
        alg.cover = cover;
        Ok(alg)
    }

    #[cfg(test)]
    pub(crate) fn for_test(instance: &Instance, w: u64, t: u64, blocks: Vec<u64>) -> Self {
        Self::with_blocks(instance, w, t, blocks, 0)
    }
}

impl MifAlgorithm for BatchList {
    fn update(&mut self, element: Element) -> Result<(), Abort> {
        if self.aborted {
            return Err(Abort);
        }
        debug_assert!((1..=self.n).contains(&element));
        assert!(self.updates < self.r, "stream budget exceeded");
        self.updates += 1;

        let block = element.div_ceil(self.w);
        if let Some(&pos) = self.position.get(&block) {
            if pos > self.cursor {
                self.touched[(pos - 1) as usize] = true;
            }
        }
        if block == self.blocks[(self.cursor - 1) as usize] {
            self.cover.set(element - self.w * (block - 1) - 1);
        }
        if self.cover.all_ones() {
            self.cursor += 1;
            while self.cursor <= self.t && self.touched[(self.cursor - 1) as usize] {
                self.cursor += 1;
            }
            self.cover.clear_all();
        }
        if self.cursor > self.t {
            self.aborted = true;
            return Err(Abort);
        }
        Ok(())
    }

    fn query(&self) -> Element {
        assert!(!self.aborted, "query on an aborted state");
        let free = self.cover.least_zero().expect("a full cover advances the cursor");
        self.w * (self.blocks[(self.cursor - 1) as usize] - 1) + free + 1
    }

    fn encode(&self) -> BitString {
        assert!(!self.aborted, "encode on an aborted state");
        let mut bits = BitString::new();
        for &b in &self.blocks {
            bits.push_field(b - 1, self.block_width);
        }
        bits.push_field(self.cursor - 1, self.cursor_width);
        for &hit in &self.touched {
            bits.push_bit(hit);
        }
        bits.push_bitvec(&self.cover);
        bits
    }

    fn encoded_len(&self) -> u64 {
        self.t * u64::from(self.block_width) + u64::from(self.cursor_width) + self.t + self.w
    }

    fn model(&self) -> RandomnessModel {
        RandomnessModel::Seed
    }

    fn seed_bits(&self) -> u64 {
        self.seed_bits_used
    }

    fn clone_box(&self) -> Box<dyn MifAlgorithm> {
        Box::new(self.clone())
    }
}
