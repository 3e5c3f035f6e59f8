//! Cross-module invariants: prefix-free encodings, decode/resume
//! equivalence, reproducibility, and soundness spot checks.

use mif::adversaries::{AdversaryKind, EchoAdversary};
use mif::algorithms::{AlgorithmKind, BatchList, Classical, HiddenList, Pigeonhole, Trivial};
use mif::harness::{estimate_error, play, run_trials, space_profile};
use mif::random::{derive_trial_seed, SeededSource};
use mif::{check_transcript, BitString, Instance, MifAlgorithm};

/// Instances that exercise each algorithm's state growth.
fn workloads() -> Vec<(AlgorithmKind, Instance)> {
    vec![
        (AlgorithmKind::Trivial, Instance::new(12, 6, 0.5).unwrap()),
        (AlgorithmKind::Classical, Instance::new(40, 12, 0.05).unwrap()),
        (AlgorithmKind::HiddenList, Instance::new(40, 12, 0.9).unwrap()),
        (AlgorithmKind::ZeroError, Instance::new(40, 12, 0.9).unwrap()),
        (AlgorithmKind::Pigeonhole, Instance::new(64, 12, 0.5).unwrap()),
        (AlgorithmKind::BatchList, Instance::new(2000, 30, 0.5).unwrap()),
    ]
}

/// Sample encoded states from seeded games against uniform noise.
fn sample_encodings(kind: AlgorithmKind, instance: &Instance, games: u64) -> Vec<BitString> {
    let mut out = Vec::new();
    for g in 0..games {
        let mut alg = kind.build(instance, derive_trial_seed(11, g));
        let mut adv = AdversaryKind::UniformRandom
            .build(instance, derive_trial_seed(12, g))
            .unwrap();
        out.push(alg.encode());
        let record = play(&mut *alg, &mut *adv, instance).unwrap();
        // re-run to capture the intermediate encodings as well
        let mut replay = kind.build(instance, derive_trial_seed(11, g));
        for &e in &record.transcript.inputs[..record.transcript.outputs.len()] {
            replay.update(e).unwrap();
            let bits = replay.encode();
            assert_eq!(bits.len_bits(), replay.encoded_len(), "length shortcut lies");
            out.push(bits);
        }
    }
    out
}

#[test]
fn encodings_are_prefix_free_over_sampled_states() {
    for (kind, instance) in workloads() {
        let mut states = sample_encodings(kind, &instance, 25);
        states.sort_by_key(|b| b.len_bits());
        states.dedup();
        for i in 0..states.len() {
            for j in 0..states.len() {
                if i != j && states[i] != states[j] {
                    assert!(
                        !states[i].is_prefix_of(&states[j]),
                        "{}: one encoding is a prefix of another",
                        kind.name()
                    );
                }
            }
        }
    }
}

#[test]
fn decoded_states_behave_identically_from_any_prefix() {
    for (kind, instance) in workloads() {
        for g in 0..8u64 {
            let seed = derive_trial_seed(21, g);
            let mut alg = kind.build(&instance, seed);
            let mut noise = SeededSource::new(derive_trial_seed(22, g));
            let prefix_len = noise.uniform_below(instance.r()) as usize;
            let mut live = true;
            for _ in 0..prefix_len {
                if alg.update(noise.uniform_below(instance.n()) + 1).is_err() {
                    live = false;
                    break;
                }
            }
            if !live {
                continue;
            }
            let code = alg.encode();
            let mut twin: Box<dyn MifAlgorithm> = match kind {
                AlgorithmKind::Trivial => Box::new(Trivial::decode(&instance, &code).unwrap()),
                AlgorithmKind::Classical => {
                    Box::new(Classical::decode(&instance, seed, &code).unwrap())
                }
                AlgorithmKind::HiddenList => {
                    Box::new(HiddenList::decode(&instance, seed, false, &code).unwrap())
                }
                AlgorithmKind::ZeroError => {
                    Box::new(HiddenList::decode(&instance, seed, true, &code).unwrap())
                }
                AlgorithmKind::Pigeonhole => {
                    Box::new(Pigeonhole::decode(&instance, &code).unwrap())
                }
                AlgorithmKind::BatchList => {
                    Box::new(BatchList::decode(&instance, &code).unwrap())
                }
            };
            assert_eq!(alg.query(), twin.query(), "{}", kind.name());
            for _ in prefix_len as u64..instance.r() {
                let e = noise.uniform_below(instance.n()) + 1;
                let a = alg.update(e).is_ok();
                let b = twin.update(e).is_ok();
                assert_eq!(a, b, "{}: abort behavior diverged", kind.name());
                if !a {
                    break;
                }
                assert_eq!(alg.query(), twin.query(), "{}", kind.name());
                assert_eq!(alg.encode(), twin.encode(), "{}", kind.name());
            }
        }
    }
}

#[test]
fn play_verdict_matches_recheck_for_every_algorithm() {
    for (kind, instance) in workloads() {
        for g in 0..10u64 {
            let mut alg = kind.build(&instance, derive_trial_seed(31, g));
            let mut adv = AdversaryKind::UniformRandom
                .build(&instance, derive_trial_seed(32, g))
                .unwrap();
            let record = play(&mut *alg, &mut *adv, &instance).unwrap();
            let verdict = check_transcript(&instance, &record.transcript).unwrap();
            assert_eq!(verdict.first_failure, record.transcript.first_failure);
            assert_eq!(verdict.aborted_at, record.transcript.aborted_at);
            if kind.always_sound() {
                assert_eq!(record.transcript.first_failure, None, "{}", kind.name());
            }
        }
    }
}

#[test]
fn echo_adversary_only_replays_outputs() {
    for (kind, instance) in workloads() {
        let mut alg = kind.build(&instance, 5);
        let mut adv = EchoAdversary;
        let record = play(&mut *alg, &mut adv, &instance).unwrap();
        let t = &record.transcript;
        let mut available = vec![t.initial_output.unwrap()];
        for (i, &input) in t.inputs.iter().enumerate() {
            assert!(
                available.contains(&input),
                "{}: echo fed {input}, never output",
                kind.name()
            );
            if let Some(&o) = t.outputs.get(i) {
                available.push(o);
            }
        }
    }
}

#[test]
fn estimates_are_schedule_independent() {
    let instance = Instance::new(50, 10, 0.3).unwrap();
    let run_with = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                estimate_error(
                    &|s| AlgorithmKind::Classical.build(&instance, s),
                    &|s| AdversaryKind::UniformRandom.build(&instance, s).unwrap(),
                    &instance,
                    4000,
                    123,
                )
                .unwrap()
            })
    };
    let single = run_with(1);
    let multi = run_with(8);
    assert_eq!(single, multi);

    let summary = run_trials(
        &|s| AlgorithmKind::Classical.build(&instance, s),
        &|s| AdversaryKind::UniformRandom.build(&instance, s).unwrap(),
        &instance,
        4000,
        123,
    )
    .unwrap();
    assert_eq!(summary.failures, single.failures);
    assert_eq!(summary.aborts, 0, "the sampler never aborts");
}

#[test]
fn space_profiles_of_deterministic_algorithms_ignore_the_seed() {
    let instance = Instance::new(30, 9, 0.5).unwrap();
    for kind in [AlgorithmKind::Trivial, AlgorithmKind::Pigeonhole] {
        let profile = |master: u64| {
            space_profile(
                &|s| kind.build(&instance, s),
                &|s| AdversaryKind::UniformRandom.build(&instance, s).unwrap(),
                &instance,
                64,
                master,
            )
            .unwrap()
        };
        let a = profile(1);
        let b = profile(2);
        assert_eq!(a.max_state_bits, b.max_state_bits, "{}", kind.name());
        assert_eq!(a.mean_state_bits, b.mean_state_bits, "{}", kind.name());
        assert_eq!(a.oracle_random_bits, 0);
        assert_eq!(a.seed_bits, 0);
    }
}

#[test]
fn query_on_the_empty_prefix_is_valid_everywhere() {
    for (kind, instance) in workloads() {
        for seed in 0..10u64 {
            let alg = kind.build(&instance, seed);
            let out = alg.query();
            assert!(
                (1..=instance.n()).contains(&out),
                "{}: empty-prefix query out of range",
                kind.name()
            );
        }
    }
}
