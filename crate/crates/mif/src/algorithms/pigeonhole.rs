//! Staged digit elimination; deterministic and always correct.
//!
//! Parameters `s, t` satisfy `s^t <= n` and `t (s - 1) >= r`. Element values
//! (minus one) are read as `t`-digit base-`s` numbers. Stage `l` watches
//! digit `l` with an `s`-bit vector; once only a single digit value has not
//! appeared during the stage, that value is locked into the accumulator and
//! the next stage starts with a cleared vector. A stage consumes at least
//! `s - 1` elements before it can end, so the `r`-element stream cannot push
//! past stage `t`, and the query can always name a value whose locked digits
//! avoid every element of the corresponding stage.

use crate::bits::{ceil_log2_u128, BitString, BitVec};
use crate::contract::{Abort, Element, MifAlgorithm};
use crate::instance::Instance;
use crate::space::RandomnessModel;

use super::DecodeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PigeonholeParams {
    /// Digit base; also the mark-vector width.
    pub s: u64,
    /// Number of stages.
    pub t: u64,
}

/// Derive `(s, t)` from `q = min(sqrt(r log2(r+1)), log2 n)`,
/// `t = floor(q / log2(r+1))` and `s = ceil(r/t) + 1`.
///
/// The binary64 estimate is repaired against the exact side conditions
/// `s^t <= n` and `t (s - 1) >= r` in integer arithmetic; `r < n` guarantees
/// the repair terminates at `t = 1`, `s = r + 1` in the worst case.
pub fn params(n: u64, r: u64) -> PigeonholeParams {
    let log_r1 = ((r + 1) as f64).log2();
    let q = ((r as f64) * log_r1).sqrt().min((n as f64).log2());
    let mut t = ((q / log_r1).floor() as u64).clamp(1, r);
    let mut s = r.div_ceil(t) + 1;
    while t > 1 && !pow_within(s, t, n) {
        t -= 1;
        s = r.div_ceil(t) + 1;
    }
    assert!(
        pow_within(s, t, n) && t * (s - 1) >= r,
        "derived parameters violate their side conditions"
    );
    PigeonholeParams { s, t }
}

/// `s^t <= n` without overflow.
fn pow_within(s: u64, t: u64, n: u64) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..t {
        acc = match acc.checked_mul(s) {
            Some(v) if v <= n => v,
            _ => return false,
        };
    }
    true
}

#[derive(Clone, Debug)]
pub struct Pigeonhole {
    n: u64,
    r: u64,
    s: u64,
    t: u64,
    /// Marks for digit values seen during the current stage.
    marks: BitVec,
    /// Current stage, `1..=t`.
    stage: u64,
    /// Locked digits of lower stages: accumulator value below `s^(stage-1)`.
    acc: u64,
    /// `s^(stage-1)`, maintained incrementally.
    stride: u64,
    /// Fixed width of the `(stage, acc)` index field.
    pair_width: u32,
    updates: u64,
}

impl Pigeonhole {
    pub fn new(instance: &Instance) -> Self {
        let p = params(instance.n(), instance.r());
        Self::with_params(instance, p)
    }

    pub fn with_params(instance: &Instance, p: PigeonholeParams) -> Self {
        assert!(p.s >= 2 && p.t >= 1);
        assert!(pow_within(p.s, p.t, instance.n()));
        assert!(p.t * (p.s - 1) >= instance.r());
        Pigeonhole {
            n: instance.n(),
            r: instance.r(),
            s: p.s,
            t: p.t,
            marks: BitVec::zeros(p.s),
            stage: 1,
            acc: 0,
            stride: 1,
            pair_width: ceil_log2_u128(pair_count(p.s, p.t)),
            updates: 0,
        }
    }

    pub fn stage(&self) -> u64 {
        self.stage
    }

    pub fn accumulator(&self) -> u64 {
        self.acc
    }

    pub fn decode(instance: &Instance, bits: &BitString) -> Result<Self, DecodeError> {
        Self::decode_with_params(instance, params(instance.n(), instance.r()), bits)
    }

    pub fn decode_with_params(
        instance: &Instance,
        p: PigeonholeParams,
        bits: &BitString,
    ) -> Result<Self, DecodeError> {
        let mut alg = Pigeonhole::with_params(instance, p);
        let mut reader = bits.reader();
        let mut marks = BitVec::zeros(alg.s);
        for i in 0..alg.s {
            match reader.read_field(1) {
                Some(1) => marks.set(i),
                Some(_) => {}
                None => return Err(DecodeError::Truncated),
            }
        }
        let mut index = u128::from(
            reader
                .read_field(alg.pair_width)
                .ok_or(DecodeError::Truncated)?,
        );
        if reader.remaining() != 0 {
            return Err(DecodeError::TrailingBits);
        }
        if index >= pair_count(alg.s, alg.t) {
            return Err(DecodeError::FieldOutOfRange("stage/accumulator index"));
        }
        let mut stage = 1u64;
        let mut level_size = u128::from(alg.s);
        while index >= level_size {
            index -= level_size;
            level_size *= u128::from(alg.s);
            stage += 1;
        }
        alg.marks = marks;
        alg.stage = stage;
        alg.acc = index as u64;
        alg.stride = alg.s.pow(u32::try_from(stage - 1).expect("stage fits"));
        Ok(alg)
    }
}

/// Number of `(stage, acc)` pairs: `sum_{j=1..=t} s^j`.
fn pair_count(s: u64, t: u64) -> u128 {
    let mut total = 0u128;
    let mut power = 1u128;
    for _ in 0..t {
        power *= u128::from(s);
        total += power;
    }
    total
}

impl MifAlgorithm for Pigeonhole {
    fn update(&mut self, element: Element) -> Result<(), Abort> {
        debug_assert!((1..=self.n).contains(&element));
        assert!(self.updates < self.r, "stream budget exceeded");
        self.updates += 1;

        let digit = ((element - 1) / self.stride) % self.s;
        self.marks.set(digit);
        if self.stage < self.t && self.marks.ones() == self.s - 1 {
            let survivor = self.marks.least_zero().expect("exactly one zero");
            // lock the surviving digit of the stage that just ended
            self.acc += survivor * self.stride;
            self.stage += 1;
            self.stride *= self.s;
            self.marks.clear_all();
        }
        debug_assert!(self.acc < self.stride, "accumulator escaped its stage bound");
        Ok(())
    }

    fn query(&self) -> Element {
        let free = self
            .marks
            .least_zero()
            .expect("a digit value survives every stage within the stream budget");
        self.acc + free * self.stride + 1
    }

    fn encode(&self) -> BitString {
        let mut bits = BitString::new();
        bits.push_bitvec(&self.marks);
        let mut index = 0u128;
        let mut level_size = u128::from(self.s);
        for _ in 1..self.stage {
            index += level_size;
            level_size *= u128::from(self.s);
        }
        index += u128::from(self.acc);
        bits.push_field(
            u64::try_from(index).expect("state index fits in 64 bits"),
            self.pair_width,
        );
        bits
    }

    fn encoded_len(&self) -> u64 {
        self.s + u64::from(self.pair_width)
    }

    fn model(&self) -> RandomnessModel {
        RandomnessModel::Deterministic
    }

    fn clone_box(&self) -> Box<dyn MifAlgorithm> {
        Box::new(self.clone())
    }
}
