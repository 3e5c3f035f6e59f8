//! Exhaustive-search adversary.
//!
//! Keeps a private replica of the algorithm (which must be deterministic or
//! fixed-seed) and computes, by brute force over every continuation, the set
//! of outputs the algorithm could still produce at stream end. Once that set
//! is no larger than the remaining element budget, the adversary simply
//! feeds the whole set into the stream: the final output is then guaranteed
//! to collide with it. Until then it plays greedily, choosing the element
//! that shrinks the reachable-output set the most.
//!
//! Algorithms with more reachable outputs than the budget — which is what
//! the sound constructions guarantee — never enter the forcing phase and
//! survive; output-deficient ones (such as a fixed-seed candidate-list
//! sampler whose list fits in the stream) are defeated outright.

use std::collections::{BTreeSet, VecDeque};

use crate::contract::{AdversaryError, Element, MifAdversary, MifAlgorithm};

/// Exhaustive search explores n^r continuations; keep it at desk scale.
pub const MAX_COVER_N: u64 = 6;
pub const MAX_COVER_R: u64 = 5;

pub struct CoverAdversary {
    n: u64,
    r: u64,
    /// Replica of the algorithm under attack, advanced in lockstep.
    replica: Box<dyn MifAlgorithm>,
    sent: u64,
    /// Forcing queue: once the reachable-output set fits in the budget, its
    /// elements are played in ascending order.
    queue: VecDeque<Element>,
}

impl CoverAdversary {
    /// `factory` must rebuild exactly the instance being played (same
    /// parameters and seed), so the replica's states mirror the real run.
    pub fn new<F>(factory: F, n: u64, r: u64) -> Result<Self, AdversaryError>
    where
        F: FnOnce() -> Box<dyn MifAlgorithm>,
    {
        if n > MAX_COVER_N || r > MAX_COVER_R {
            return Err(AdversaryError::InstanceTooLarge {
                n,
                r,
                max_n: MAX_COVER_N,
                max_r: MAX_COVER_R,
            });
        }
        Ok(CoverAdversary {
            n,
            r,
            replica: factory(),
            sent: 0,
            queue: VecDeque::new(),
        })
    }
}

/// Outputs the algorithm can produce after exactly `depth` further
/// elements, by direct enumeration of all `n^depth` continuations.
/// Continuations on which the algorithm aborts contribute nothing.
pub fn reachable_outputs(
    algorithm: &dyn MifAlgorithm,
    n: u64,
    depth: u64,
) -> BTreeSet<Element> {
    let mut out = BTreeSet::new();
    if depth == 0 {
        out.insert(algorithm.query());
        return out;
    }
    for e in 1..=n {
        let mut branch = algorithm.clone_box();
        if branch.update(e).is_ok() {
            out.extend(reachable_outputs(&*branch, n, depth - 1));
        }
    }
    out
}

impl MifAdversary for CoverAdversary {
    fn next(&mut self, _outputs: &[Element]) -> Result<Element, AdversaryError> {
        if self.sent >= self.r {
            return Err(AdversaryError::Exhausted(self.r as usize));
        }
        let remaining = self.r - self.sent;
        let element = match self.queue.pop_front() {
            Some(e) => e,
            None => {
                let reachable = reachable_outputs(&*self.replica, self.n, remaining);
                if !reachable.is_empty() && reachable.len() as u64 <= remaining {
                    // Forcing phase: every possible final output will have
                    // been in the stream by the time the budget runs out.
                    let mut queue: VecDeque<Element> = reachable.into_iter().collect();
                    let first = queue.pop_front().expect("non-empty");
                    self.queue = queue;
                    first
                } else {
                    // Greedy phase: shrink the reachable set as far as
                    // possible; ties go to the smallest element.
                    (1..=self.n)
                        .min_by_key(|&e| {
                            let mut branch = self.replica.clone_box();
                            match branch.update(e) {
                                Ok(()) => {
                                    reachable_outputs(&*branch, self.n, remaining - 1).len()
                                }
                                Err(_) => usize::MAX,
                            }
                        })
                        .expect("universe is non-empty")
                }
            }
        };
        // keep the replica in lockstep; if it aborts, so does the real run
        let _ = self.replica.update(element);
        self.sent += 1;
        Ok(element)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{AlgorithmKind, Classical, Pigeonhole, Trivial};
    use crate::harness::play;
    use crate::instance::Instance;

    #[test]
    fn size_guard_rejects_large_instances() {
        let inst = Instance::new(100, 10, 0.5).unwrap();
        let err = CoverAdversary::new(|| AlgorithmKind::Trivial.build(&inst, 0), 100, 10);
        assert!(matches!(
            err,
            Err(AdversaryError::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn trivial_tracker_has_too_many_outputs_to_force() {
        // Over (n=4, r=2) the tracker can still answer any of {1, 2, 3}:
        // more than the 2-element budget, so no forcing phase exists and no
        // continuation defeats it.
        let inst = Instance::new(4, 2, 0.5).unwrap();
        let alg = Trivial::new(&inst);
        let reachable = reachable_outputs(&alg, 4, 2);
        assert_eq!(reachable, BTreeSet::from([1, 2, 3]));

        let mut adv = CoverAdversary::new(|| Box::new(Trivial::new(&inst)), 4, 2).unwrap();
        let mut target: Box<dyn MifAlgorithm> = Box::new(Trivial::new(&inst));
        let record = play(&mut *target, &mut adv, &inst).unwrap();
        assert!(!record.transcript.failed());
    }

    #[test]
    fn fixed_seed_candidate_list_is_defeated_on_every_seed() {
        // delta = 0.25 gives t = 2, so only t + 1 = 3 <= r outputs are ever
        // reachable: the adversary feeds the whole candidate list and wins.
        let inst = Instance::new(6, 3, 0.25).unwrap();
        for seed in 0..25 {
            let alg = Classical::new(&inst, seed);
            let candidates: BTreeSet<Element> = alg.candidates().iter().copied().collect();
            assert_eq!(candidates.len(), 3);
            assert_eq!(reachable_outputs(&alg, 6, 3), candidates);

            let mut adv =
                CoverAdversary::new(|| Box::new(Classical::new(&inst, seed)), 6, 3).unwrap();
            let mut target: Box<dyn MifAlgorithm> = Box::new(Classical::new(&inst, seed));
            let record = play(&mut *target, &mut adv, &inst).unwrap();
            assert!(record.transcript.failed(), "seed {seed} survived");
            let fed: BTreeSet<Element> = record.transcript.inputs.iter().copied().collect();
            assert_eq!(fed, candidates, "the forcing phase feeds the list");
        }
    }

    #[test]
    fn staged_elimination_survives_the_cover_adversary() {
        let inst = Instance::new(6, 3, 0.5).unwrap();
        let mut adv = CoverAdversary::new(|| Box::new(Pigeonhole::new(&inst)), 6, 3).unwrap();
        let mut target: Box<dyn MifAlgorithm> = Box::new(Pigeonhole::new(&inst));
        let record = play(&mut *target, &mut adv, &inst).unwrap();
        assert!(!record.transcript.failed());
    }

    #[test]
    fn replica_tracks_the_real_run() {
        // The adversary's internal replica must agree with a fresh replay of
        // the elements it chose, at every remaining depth.
        let inst = Instance::new(5, 3, 0.5).unwrap();
        let mut adv = CoverAdversary::new(|| Box::new(Trivial::new(&inst)), 5, 3).unwrap();
        let mut target: Box<dyn MifAlgorithm> = Box::new(Trivial::new(&inst));
        let record = play(&mut *target, &mut adv, &inst).unwrap();
        let mut replay: Box<dyn MifAlgorithm> = Box::new(Trivial::new(&inst));
        for (i, &e) in record.transcript.inputs.iter().enumerate() {
            replay.update(e).unwrap();
            let depth = (record.transcript.inputs.len() - 1 - i) as u64;
            let direct = reachable_outputs(&*replay, 5, depth);
            assert!(!direct.is_empty());
        }
    }
}
