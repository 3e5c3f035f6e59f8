//! Monte Carlo failure-rate estimation with Wilson confidence intervals.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::contract::{MifAdversary, MifAlgorithm};
use crate::instance::Instance;
use crate::random::derive_trial_seed;

use super::game::{play, GameError};

/// Aggregate trial outcomes. `failures` counts trials that failed under the
/// whole-sequence judgment (an abort counts); `aborts` and `wrong_outputs`
/// break that down, and a trial that does both is counted in each.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrialSummary {
    pub trials: u64,
    pub failures: u64,
    pub aborts: u64,
    pub wrong_outputs: u64,
}

impl TrialSummary {
    fn absorb(mut self, other: TrialSummary) -> TrialSummary {
        self.trials += other.trials;
        self.failures += other.failures;
        self.aborts += other.aborts;
        self.wrong_outputs += other.wrong_outputs;
        self
    }
}

/// Run `trials` independent games. Trial `i` seeds its algorithm and
/// adversary from `derive_trial_seed(master_seed, i)`, so the outcome is a
/// pure function of the arguments and the counts are schedule-independent
/// under any parallel execution.
pub fn run_trials<A, D>(
    alg_factory: &A,
    adv_factory: &D,
    instance: &Instance,
    trials: u64,
    master_seed: u64,
) -> Result<TrialSummary, GameError>
where
    A: Fn(u64) -> Box<dyn MifAlgorithm> + Sync,
    D: Fn(u64) -> Box<dyn MifAdversary> + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let trial_seed = derive_trial_seed(master_seed, i);
            let mut alg = alg_factory(derive_trial_seed(trial_seed, 0));
            let mut adv = adv_factory(derive_trial_seed(trial_seed, 1));
            let record = play(&mut *alg, &mut *adv, instance)?;
            let t = &record.transcript;
            Ok(TrialSummary {
                trials: 1,
                failures: u64::from(t.failed()),
                aborts: u64::from(t.aborted_at.is_some()),
                wrong_outputs: u64::from(t.first_failure.is_some()),
            })
        })
        .try_reduce(TrialSummary::default, |a, b| Ok(a.absorb(b)))
}

/// Failure-rate estimate over independent seeded trials.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorEstimate {
    pub trials: u64,
    pub failures: u64,
    /// Exact observed rate, `failures / trials`.
    pub point: Ratio<u64>,
    pub ci_low: f64,
    pub ci_high: f64,
    /// Interval construction; fixed.
    pub method: &'static str,
}

pub fn estimate_error<A, D>(
    alg_factory: &A,
    adv_factory: &D,
    instance: &Instance,
    trials: u64,
    master_seed: u64,
) -> Result<ErrorEstimate, GameError>
where
    A: Fn(u64) -> Box<dyn MifAlgorithm> + Sync,
    D: Fn(u64) -> Box<dyn MifAdversary> + Sync,
{
    assert!(trials >= 1, "at least one trial is required");
    let summary = run_trials(alg_factory, adv_factory, instance, trials, master_seed)?;
    let (ci_low, ci_high) = wilson_interval(summary.failures, summary.trials);
    Ok(ErrorEstimate {
        trials: summary.trials,
        failures: summary.failures,
        point: Ratio::new(summary.failures, summary.trials),
        ci_low,
        ci_high,
        method: "wilson",
    })
}

/// 95% Wilson score interval; well-behaved at zero observed failures.
pub fn wilson_interval(failures: u64, trials: u64) -> (f64, f64) {
    assert!(trials >= 1 && failures <= trials);
    const Z: f64 = 1.959963984540054; // 97.5th normal percentile
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // clamp away floating-point dust so ci_low <= point <= ci_high holds exactly
    ((center - half).max(0.0).min(p), (center + half).min(1.0).max(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversaries::AdversaryKind;
    use crate::algorithms::AlgorithmKind;
    use num_traits::ToPrimitive;

    #[test]
    fn deterministic_tracker_never_fails() {
        let inst = Instance::new(16, 8, 0.5).unwrap();
        let est = estimate_error(
            &|s| AlgorithmKind::Trivial.build(&inst, s),
            &|s| AdversaryKind::UniformRandom.build(&inst, s).unwrap(),
            &inst,
            200,
            99,
        )
        .unwrap();
        assert_eq!(est.failures, 0);
        assert_eq!(est.ci_low, 0.0);
        assert!(est.ci_high < 0.025);
        assert_eq!(est.method, "wilson");
    }

    #[test]
    fn wilson_interval_brackets_the_point() {
        for (f, n) in [(0u64, 10u64), (1, 10), (5, 10), (10, 10), (3, 1000)] {
            let (lo, hi) = wilson_interval(f, n);
            let p = f as f64 / n as f64;
            assert!((0.0..=1.0).contains(&lo));
            assert!((0.0..=1.0).contains(&hi));
            assert!(lo <= p + 1e-12 && p <= hi + 1e-12, "({f}, {n})");
        }
        assert_eq!(wilson_interval(0, 50).0, 0.0);
    }

    #[test]
    fn point_estimate_is_an_exact_ratio() {
        let est = ErrorEstimate {
            trials: 210,
            failures: 5,
            point: Ratio::new(5, 210),
            ci_low: 0.0,
            ci_high: 1.0,
            method: "wilson",
        };
        assert_eq!(est.point, Ratio::new(1, 42));
        assert!((est.point.to_f64().unwrap() - 0.023809523809523808).abs() < 1e-15);
    }

    #[test]
    fn sampler_failure_rate_matches_the_exact_oracle_roughly() {
        // Small-trial version of the exact-reproduction experiment: the
        // full-scale run lives in the acceptance suite.
        let inst = Instance::new(10, 5, 0.1).unwrap();
        let trials = 20_000u64;
        let est = estimate_error(
            &|s| AlgorithmKind::Classical.build(&inst, s),
            &|_| AdversaryKind::Static(vec![1, 2, 3, 4, 5]).build(&inst, 0).unwrap(),
            &inst,
            trials,
            7,
        )
        .unwrap();
        let exact = 5.0 / 210.0;
        let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
        let observed = est.point.to_f64().unwrap();
        assert!(
            (observed - exact).abs() <= 4.0 * sigma,
            "observed {observed}, exact {exact}"
        );
    }
}
