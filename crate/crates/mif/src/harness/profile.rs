//! Space profiling over seeded trials.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::contract::{MifAdversary, MifAlgorithm};
use crate::instance::Instance;
use crate::random::derive_trial_seed;
use crate::space::{CostMeasure, SpaceReport};

use super::game::{play, GameError};

#[derive(Clone, Copy, Default)]
struct Accumulator {
    max_bits: u64,
    sum_all_steps: u64,
    steps: u64,
    sum_trial_max: u64,
    trials: u64,
    oracle_bits_worst: u64,
    seed_bits_worst: u64,
}

impl Accumulator {
    fn absorb(mut self, other: Accumulator) -> Accumulator {
        self.max_bits = self.max_bits.max(other.max_bits);
        self.sum_all_steps += other.sum_all_steps;
        self.steps += other.steps;
        self.sum_trial_max += other.sum_trial_max;
        self.trials += other.trials;
        self.oracle_bits_worst = self.oracle_bits_worst.max(other.oracle_bits_worst);
        self.seed_bits_worst = self.seed_bits_worst.max(other.seed_bits_worst);
        self
    }
}

/// Measure encoded-state lengths across trials.
///
/// `max_state_bits` is the maximum over every step of every trial.
/// `mean_state_bits` follows the algorithm's cost measure: the mean of
/// per-trial maxima for worst-case algorithms, the mean over all steps for
/// expected-space ones. Random-bit counters report the worst trial, per the
/// model conventions on [`SpaceReport`].
pub fn space_profile<A, D>(
    alg_factory: &A,
    adv_factory: &D,
    instance: &Instance,
    trials: u64,
    master_seed: u64,
) -> Result<SpaceReport, GameError>
where
    A: Fn(u64) -> Box<dyn MifAlgorithm> + Sync,
    D: Fn(u64) -> Box<dyn MifAdversary> + Sync,
{
    assert!(trials >= 1, "at least one trial is required");
    let probe = alg_factory(derive_trial_seed(master_seed, 0));
    let model = probe.model();
    let cost = probe.cost_measure();
    drop(probe);

    let acc = (0..trials)
        .into_par_iter()
        .map(|i| {
            let trial_seed = derive_trial_seed(master_seed, i);
            let mut alg = alg_factory(derive_trial_seed(trial_seed, 0));
            let mut adv = adv_factory(derive_trial_seed(trial_seed, 1));
            let record = play(&mut *alg, &mut *adv, instance)?;
            let trial_max = record.state_bits.iter().copied().max().unwrap_or(0);
            Ok::<Accumulator, GameError>(Accumulator {
                max_bits: trial_max,
                sum_all_steps: record.state_bits.iter().sum(),
                steps: record.state_bits.len() as u64,
                sum_trial_max: trial_max,
                trials: 1,
                oracle_bits_worst: record.oracle_random_bits,
                seed_bits_worst: record.seed_bits,
            })
        })
        .try_reduce(Accumulator::default, |a, b| Ok(a.absorb(b)))?;

    let mean_state_bits = match cost {
        CostMeasure::Maximum => Ratio::new(acc.sum_trial_max, acc.trials),
        CostMeasure::Expected => Ratio::new(acc.sum_all_steps, acc.steps),
    };
    let report = SpaceReport {
        model,
        max_state_bits: acc.max_bits,
        mean_state_bits,
        oracle_random_bits: acc.oracle_bits_worst,
        seed_bits: acc.seed_bits_worst,
    };
    debug_assert!(report.consistent());
    Ok(report)
}
