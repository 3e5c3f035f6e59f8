//! Bit-vector tracker.
//!
//! Marks which of `1..=r` appeared; since at most `r` elements arrive, one of
//! the `r + 1` slots `1..=r+1` always stays clear. Uses exactly `r` bits.

use crate::bits::{BitString, BitVec};
use crate::contract::{Abort, Element, MifAlgorithm};
use crate::instance::Instance;
use crate::space::RandomnessModel;

use super::DecodeError;

#[derive(Clone, Debug)]
pub struct Trivial {
    n: u64,
    r: u64,
    marks: BitVec,
    updates: u64,
}

impl Trivial {
    pub fn new(instance: &Instance) -> Self {
        Trivial {
            n: instance.n(),
            r: instance.r(),
            marks: BitVec::zeros(instance.r()),
            updates: 0,
        }
    }

    /// Rebuild a state from its encoding; verification aid for paired runs.
    pub fn decode(instance: &Instance, bits: &BitString) -> Result<Self, DecodeError> {
        let r = instance.r();
        if bits.len_bits() != r {
            return Err(DecodeError::Truncated);
        }
        let mut marks = BitVec::zeros(r);
        for i in 0..r {
            if bits.bit(i) {
                marks.set(i);
            }
        }
        Ok(Trivial {
            n: instance.n(),
            r,
            marks,
            updates: 0,
        })
    }
}

impl MifAlgorithm for Trivial {
    fn update(&mut self, element: Element) -> Result<(), Abort> {
        debug_assert!((1..=self.n).contains(&element));
        assert!(self.updates < self.r, "stream budget exceeded");
        self.updates += 1;
        if element <= self.r {
            self.marks.set(element - 1);
        }
        Ok(())
    }

    fn query(&self) -> Element {
        match self.marks.least_zero() {
            Some(i) => i + 1,
            None => self.r + 1,
        }
    }

    fn encode(&self) -> BitString {
        let mut bits = BitString::new();
        bits.push_bitvec(&self.marks);
        bits
    }

    fn encoded_len(&self) -> u64 {
        self.r
    }

    fn model(&self) -> RandomnessModel {
        RandomnessModel::Deterministic
    }

    fn clone_box(&self) -> Box<dyn MifAlgorithm> {
        Box::new(self.clone())
    }
}
