//! Closed-form failure probability for the classical sampler.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashSet;

use crate::contract::Element;

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Probability that a uniformly drawn repetition-free candidate list of
/// length `t + 1` is entirely contained in the given fixed stream:
/// `C(d, t+1) / C(n, t+1)` where `d` is the number of distinct stream
/// elements, and zero whenever `d <= t`. This is exactly the chance that
/// the classical sampler answers incorrectly on that stream.
pub fn exact_classical_failure(n: u64, r: u64, t: u64, stream: &[Element]) -> BigRational {
    assert!(t < n, "list longer than the universe");
    assert!(stream.len() as u64 <= r, "stream longer than r");
    let distinct = stream.iter().collect::<HashSet<_>>().len() as u64;
    if distinct < t + 1 {
        return BigRational::zero();
    }
    BigRational::new(binomial(distinct, t + 1), binomial(n, t + 1))
}
