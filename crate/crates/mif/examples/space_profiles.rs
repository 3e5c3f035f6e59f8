//! Bit-exact space accounting across all six algorithm lifecycles.
//!
//! Each algorithm runs the same workload; the report shows how its
//! randomness model books the bits. Oracle-model algorithms keep their
//! candidate lists off the books (reported separately), the seed-model one
//! carries its list in state, and the deterministic ones use no randomness
//! at all.
//!
//! ```bash
//! cargo run -p mif --example space_profiles
//! ```

use mif::adversaries::AdversaryKind;
use mif::algorithms::AlgorithmKind;
use mif::harness::space_profile;
use mif::Instance;
use num_traits::ToPrimitive;

fn main() {
    let instance = Instance::new(4096, 64, 0.05).unwrap();
    println!("workload: n = 4096, r = 64, delta = 0.05, uniform adversary, 200 trials");
    println!();
    println!(
        "{:<12} {:<14} {:>9} {:>10} {:>12} {:>10}",
        "alg", "model", "max bits", "mean bits", "oracle bits", "seed bits"
    );
    for kind in AlgorithmKind::ALL {
        let report = space_profile(
            &|s| kind.build(&instance, s),
            &|s| AdversaryKind::UniformRandom.build(&instance, s).unwrap(),
            &instance,
            200,
            7,
        )
        .unwrap();
        println!(
            "{:<12} {:<14} {:>9} {:>10.2} {:>12} {:>10}",
            kind.name(),
            report.model.tag(),
            report.max_state_bits,
            report.mean_state_bits.to_f64().unwrap(),
            report.oracle_random_bits,
            report.seed_bits
        );
    }
}
