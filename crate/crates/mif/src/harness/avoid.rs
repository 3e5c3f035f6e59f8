//! Exact minimum-message search for the one-way disjointness game.
//!
//! In the game, Alice holds an `a`-subset of `[t]`, sends one message, and
//! Bob must answer a `b`-subset disjoint from Alice's set. A deterministic
//! one-way protocol with `m` distinct messages is exactly an assignment of
//! one fixed `b`-set per message such that every `a`-set is disjoint from
//! the `b`-set of the message it triggers — i.e. a cover of all `a`-sets by
//! `m` "avoidance classes". The minimum `m` is therefore a minimum set
//! cover, solved here exactly by branch and bound; every instance must obey
//! `m >= a + 1`.

use crate::bits::BitVec;

use super::HarnessError;

/// Guard: the search is exact, so the universe of `a`-subsets stays small.
pub const MAX_ALICE_SETS: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AvoidInstance {
    t: u64,
    a: u64,
    b: u64,
}

impl AvoidInstance {
    pub fn new(t: u64, a: u64, b: u64) -> Result<Self, HarnessError> {
        if a == 0 || b == 0 || a + b > t {
            return Err(HarnessError::InvalidAvoidInstance);
        }
        let universe = count_subsets(t, a).ok_or(HarnessError::SearchSpaceTooLarge {
            streams: u128::MAX,
            max: MAX_ALICE_SETS,
        })?;
        if universe > u128::from(MAX_ALICE_SETS) {
            return Err(HarnessError::SearchSpaceTooLarge {
                streams: universe,
                max: MAX_ALICE_SETS,
            });
        }
        Ok(AvoidInstance { t, a, b })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

fn count_subsets(n: u64, k: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(u128::from(n - i))?;
        acc /= u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc)
}

/// All k-subsets of `0..n` in lexicographic order.
fn subsets(n: u64, k: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur: Vec<u64> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k as i64 - 1;
        while i >= 0 && cur[i as usize] == n - k + i as u64 {
            i -= 1;
        }
        if i < 0 {
            return out;
        }
        let i = i as usize;
        cur[i] += 1;
        for j in i + 1..k as usize {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Minimum number of distinct messages any deterministic one-way protocol
/// needs for the avoidance game, by exact search. Always at least `a + 1`.
pub fn avoid_min_messages(instance: &AvoidInstance) -> u64 {
    let (t, a, b) = (instance.t, instance.a, instance.b);
    let alice_sets = subsets(t, a);
    let bob_sets = subsets(t, b);
    let universe = alice_sets.len() as u64;

    // Coverage of each candidate message: the Alice sets disjoint from its
    // Bob set.
    let mut candidates: Vec<BitVec> = Vec::with_capacity(bob_sets.len());
    let mut in_bob = vec![false; t as usize];
    for bob in &bob_sets {
        for &e in bob {
            in_bob[e as usize] = true;
        }
        let mut mask = BitVec::zeros(universe);
        for (i, alice) in alice_sets.iter().enumerate() {
            if alice.iter().all(|&e| !in_bob[e as usize]) {
                mask.set(i as u64);
            }
        }
        if mask.ones() > 0 {
            candidates.push(mask);
        }
        for &e in bob {
            in_bob[e as usize] = false;
        }
    }

    let result = min_set_cover(universe, &candidates);
    assert!(
        result > a,
        "protocol with {result} messages contradicts the a + 1 lower bound"
    );
    result
}

/// Exact minimum set cover by depth-first branch and bound. Branches on the
/// uncovered element with the fewest covering candidates, which keeps the
/// tree narrow at these sizes.
fn min_set_cover(universe: u64, candidates: &[BitVec]) -> u64 {
    assert!(universe > 0);
    let per_element: Vec<Vec<usize>> = (0..universe)
        .map(|e| {
            let covering: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|(_, c)| c.get(e))
                .map(|(i, _)| i)
                .collect();
            assert!(
                !covering.is_empty(),
                "every Alice set admits a disjoint Bob set when a + b <= t"
            );
            covering
        })
        .collect();
    let max_coverage = candidates.iter().map(|c| c.ones()).max().unwrap_or(0);

    // greedy upper bound
    let mut best = {
        let mut covered = BitVec::zeros(universe);
        let mut count = 0u64;
        while !covered.all_ones() {
            let gain = |c: &BitVec| (0..universe).filter(|&e| c.get(e) && !covered.get(e)).count();
            let pick = candidates
                .iter()
                .max_by_key(|c| gain(c))
                .expect("candidates exist");
            covered.or_with(pick);
            count += 1;
        }
        count
    };

    fn dfs(
        universe: u64,
        candidates: &[BitVec],
        per_element: &[Vec<usize>],
        max_coverage: u64,
        covered: &BitVec,
        used: u64,
        best: &mut u64,
    ) {
        if covered.all_ones() {
            *best = (*best).min(used);
            return;
        }
        let uncovered = universe - covered.ones();
        let lower = used + uncovered.div_ceil(max_coverage);
        if lower >= *best {
            return;
        }
        // most constrained uncovered element
        let elem = (0..universe)
            .filter(|&e| !covered.get(e))
            .min_by_key(|&e| {
                per_element[e as usize]
                    .iter()
                    .filter(|&&c| {
                        // candidate still useful
                        (0..universe).any(|x| candidates[c].get(x) && !covered.get(x))
                    })
                    .count()
            })
            .expect("some element is uncovered");
        for &c in &per_element[elem as usize] {
            let mut next = covered.clone();
            next.or_with(&candidates[c]);
            dfs(universe, candidates, per_element, max_coverage, &next, used + 1, best);
        }
    }

    let covered = BitVec::zeros(universe);
    dfs(universe, candidates, &per_element, max_coverage, &covered, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(t: u64, a: u64, b: u64) -> u64 {
        avoid_min_messages(&AvoidInstance::new(t, a, b).unwrap())
    }

    /// Independent oracle: try every combination of k candidate answers for
    /// k = 1, 2, ... until one covers all Alice sets.
    fn brute_force(t: u64, a: u64, b: u64) -> u64 {
        let alice_sets = subsets(t, a);
        let bob_sets = subsets(t, b);
        let masks: Vec<Vec<bool>> = bob_sets
            .iter()
            .map(|bob| {
                alice_sets
                    .iter()
                    .map(|alice| alice.iter().all(|e| !bob.contains(e)))
                    .collect()
            })
            .collect();
        for k in 1..=bob_sets.len() as u64 {
            if combos_cover(&masks, k, 0, &vec![false; alice_sets.len()]) {
                return k;
            }
        }
        unreachable!("the full candidate family always covers")
    }

    fn combos_cover(masks: &[Vec<bool>], k: u64, from: usize, covered: &[bool]) -> bool {
        if covered.iter().all(|&c| c) {
            return true;
        }
        if k == 0 || from >= masks.len() {
            return false;
        }
        for pick in from..masks.len() {
            let mut next = covered.to_vec();
            for (slot, &hit) in next.iter_mut().zip(&masks[pick]) {
                *slot |= hit;
            }
            if combos_cover(masks, k - 1, pick + 1, &next) {
                return true;
            }
        }
        false
    }

    #[test]
    fn tiny_instances_match_brute_force() {
        for (t, a, b) in [(2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 2, 1), (4, 1, 2)] {
            assert_eq!(solve(t, a, b), brute_force(t, a, b), "({t}, {a}, {b})");
        }
    }

    #[test]
    fn singleton_answers_serve_multiple_alice_sets() {
        // B = {2} serves A = {1}; B = {1} serves A = {2} and A = {3}
        assert_eq!(solve(3, 1, 1), 2);
        assert_eq!(solve(2, 1, 1), 2);
    }

    #[test]
    fn singleton_answers_from_pairs() {
        // each singleton Bob answer serves exactly one of the three pairs
        assert_eq!(solve(3, 2, 1), 3);
    }

    #[test]
    fn lower_bound_holds_on_a_sweep() {
        for t in 2..=7u64 {
            for a in 1..t {
                for b in 1..=(t - a) {
                    assert!(solve(t, a, b) > a, "({t}, {a}, {b})");
                }
            }
        }
    }

    #[test]
    fn invalid_shapes_are_rejected() {
        assert!(AvoidInstance::new(3, 2, 2).is_err());
        assert!(AvoidInstance::new(3, 0, 1).is_err());
        assert!(AvoidInstance::new(50, 20, 1).is_err()); // C(50,20) too large
    }
}
