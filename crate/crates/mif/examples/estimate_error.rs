//! Monte Carlo failure-rate estimation against the exact formula.
//!
//! On a fixed stream with `d` distinct elements, the classical sampler
//! fails exactly when its whole candidate list lands inside the stream,
//! which happens with probability `C(d, t+1) / C(n, t+1)`. The estimate
//! over seeded trials should match that number within statistical noise.
//!
//! ```bash
//! cargo run -p mif --example estimate_error
//! ```

use mif::adversaries::AdversaryKind;
use mif::algorithms::{classical, AlgorithmKind};
use mif::harness::{estimate_error, exact_classical_failure};
use mif::Instance;
use num_traits::ToPrimitive;

fn main() {
    let instance = Instance::new(10, 5, 0.1).unwrap();
    let t = classical::params(&instance);
    let stream = vec![1, 2, 3, 4, 5];
    let exact = exact_classical_failure(instance.n(), instance.r(), t, &stream);

    println!("instance: n = 10, r = 5, delta = 0.1 -> t = {t}");
    println!(
        "exact failure probability on stream {stream:?}: {}/{} = {:.6}",
        exact.numer(),
        exact.denom(),
        exact.to_f64().unwrap()
    );

    for trials in [1_000u64, 10_000, 100_000] {
        let est = estimate_error(
            &|s| AlgorithmKind::Classical.build(&instance, s),
            &|_| AdversaryKind::Static(stream.clone()).build(&instance, 0).unwrap(),
            &instance,
            trials,
            2024,
        )
        .unwrap();
        println!(
            "{trials:>7} trials: {:>5} failures, point {:.6}, 95% CI [{:.6}, {:.6}]",
            est.failures,
            est.point.to_f64().unwrap(),
            est.ci_low,
            est.ci_high
        );
    }
}
