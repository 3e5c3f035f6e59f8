//! Bit-level building blocks for state encodings.
//!
//! Every algorithm in this crate serializes its mutable state into a
//! [`BitString`] whose length is the space charge for that step. The
//! encodings are prefix-free within each algorithm's reachable state set, so
//! bit lengths are meaningful space measures.

use std::fmt;

/// Smallest `w` such that every value in `0..x` fits in `w` bits.
///
/// Equivalently `ceil(log2(x))` for `x >= 1`; `ceil_log2(0)` and
/// `ceil_log2(1)` are both 0.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// `ceil_log2` over the wider domain used by state-index computations.
pub fn ceil_log2_u128(x: u128) -> u32 {
    if x <= 1 {
        0
    } else {
        128 - (x - 1).leading_zeros()
    }
}

/// Append-only bit sequence, stored least-significant-bit first in 64-bit
/// words. Unused tail bits of the last word are kept zero so that derived
/// equality and hashing see only the logical content.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    words: Vec<u64>,
    len: u64,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len_bits(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push_bit(&mut self, bit: bool) {
        self.push_field(bit as u64, 1);
    }

    /// Append the low `width` bits of `value`. Requires `value < 2^width`.
    pub fn push_field(&mut self, value: u64, width: u32) {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || value < (1u64 << width));
        if width == 0 {
            return;
        }
        let offset = (self.len % 64) as u32;
        self.len += u64::from(width);
        if offset == 0 {
            self.words.push(value);
        } else {
            *self.words.last_mut().expect("offset > 0 implies a word") |= value << offset;
            if offset + width > 64 {
                self.words.push(value >> (64 - offset));
            }
        }
    }

    /// Append every bit of a fixed-width set.
    pub fn push_bitvec(&mut self, bv: &BitVec) {
        let mut remaining = bv.len;
        for (i, word) in bv.words.iter().enumerate() {
            let take = remaining.min(64) as u32;
            debug_assert!(take > 0 || bv.len == 64 * i as u64);
            self.push_field(*word, take);
            remaining -= u64::from(take);
        }
        debug_assert_eq!(remaining, 0);
    }

    pub fn bit(&self, index: u64) -> bool {
        assert!(index < self.len, "bit index out of range");
        (self.words[(index / 64) as usize] >> (index % 64)) & 1 == 1
    }

    /// True when `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        if self.len > other.len {
            return false;
        }
        let full = (self.len / 64) as usize;
        if self.words[..full] != other.words[..full] {
            return false;
        }
        let tail = (self.len % 64) as u32;
        if tail == 0 {
            return true;
        }
        let mask = (1u64 << tail) - 1;
        self.words[full] & mask == other.words[full] & mask
    }

    pub fn reader(&self) -> BitReader<'_> {
        BitReader { bits: self, pos: 0 }
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString[{}]<", self.len)?;
        for i in 0..self.len.min(128) {
            write!(f, "{}", u8::from(self.bit(i)))?;
        }
        if self.len > 128 {
            write!(f, "…")?;
        }
        write!(f, ">")
    }
}

/// Sequential reader over a [`BitString`].
pub struct BitReader<'a> {
    bits: &'a BitString,
    pos: u64,
}

impl BitReader<'_> {
    pub fn remaining(&self) -> u64 {
        self.bits.len - self.pos
    }

    /// Read the next `width` bits as an integer, or `None` if exhausted.
    pub fn read_field(&mut self, width: u32) -> Option<u64> {
        debug_assert!(width <= 64);
        if width == 0 {
            return Some(0);
        }
        if self.pos + u64::from(width) > self.bits.len {
            return None;
        }
        let word = (self.pos / 64) as usize;
        let offset = (self.pos % 64) as u32;
        let mut value = self.bits.words[word] >> offset;
        if offset + width > 64 {
            value |= self.bits.words[word + 1] << (64 - offset);
        }
        if width < 64 {
            value &= (1u64 << width) - 1;
        }
        self.pos += u64::from(width);
        Some(value)
    }
}

/// Fixed-width set of bits with O(1) set/test and cheap least-zero scans.
/// Backs the mark vectors of the streaming algorithms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: u64,
    ones: u64,
}

impl BitVec {
    pub fn zeros(len: u64) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64) as usize],
            len,
            ones: 0,
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ones(&self) -> u64 {
        self.ones
    }

    pub fn all_ones(&self) -> bool {
        self.ones == self.len
    }

    /// Set bit `index` to one; idempotent.
    pub fn set(&mut self, index: u64) {
        assert!(index < self.len, "bit index out of range");
        let word = &mut self.words[(index / 64) as usize];
        let mask = 1u64 << (index % 64);
        if *word & mask == 0 {
            *word |= mask;
            self.ones += 1;
        }
    }

    pub fn get(&self, index: u64) -> bool {
        assert!(index < self.len, "bit index out of range");
        (self.words[(index / 64) as usize] >> (index % 64)) & 1 == 1
    }

    /// Index of the lowest zero bit, if any.
    pub fn least_zero(&self) -> Option<u64> {
        for (i, word) in self.words.iter().enumerate() {
            if *word != u64::MAX {
                let idx = 64 * i as u64 + u64::from((!*word).trailing_zeros());
                if idx < self.len {
                    return Some(idx);
                }
            }
        }
        None
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
        self.ones = 0;
    }

    /// In-place union; used by the set-cover search.
    pub fn or_with(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        let mut ones = 0;
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
            ones += u64::from(w.count_ones());
        }
        self.ones = ones;
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{}]<", self.len)?;
        for i in 0..self.len.min(128) {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, ">")
    }
}
