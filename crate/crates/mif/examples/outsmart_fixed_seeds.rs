//! Why randomness must stay hidden: the cover adversary.
//!
//! The cover adversary simulates its opponent, enumerates every output the
//! opponent could still produce, and — once that set fits into the
//! remaining stream budget — feeds the whole set in. Any algorithm whose
//! reachable outputs are too few is defeated outright. A sampler with a
//! pinned seed has only `t + 1` possible answers, so it loses on every
//! seed; the deterministic staged elimination keeps enough options open and
//! survives.
//!
//! ```bash
//! cargo run -p mif --example outsmart_fixed_seeds
//! ```

use mif::adversaries::{cover::reachable_outputs, CoverAdversary};
use mif::algorithms::{AlgorithmKind, Classical};
use mif::harness::play;
use mif::{Instance, MifAlgorithm};

fn main() {
    let instance = Instance::new(6, 3, 0.25).unwrap();

    let mut defeated = 0;
    for seed in 0..20u64 {
        let probe = Classical::new(&instance, seed);
        let options = reachable_outputs(&probe, 6, 3);
        let mut adversary =
            CoverAdversary::new(|| Box::new(Classical::new(&instance, seed)), 6, 3).unwrap();
        let mut algorithm: Box<dyn MifAlgorithm> = Box::new(Classical::new(&instance, seed));
        let record = play(&mut *algorithm, &mut adversary, &instance).unwrap();
        if record.transcript.failed() {
            defeated += 1;
        }
        if seed < 3 {
            println!(
                "seed {seed}: reachable outputs {options:?}, stream {:?} -> failed: {}",
                record.transcript.inputs,
                record.transcript.failed()
            );
        }
    }
    println!("fixed-seed sampler defeated on {defeated}/20 seeds");

    let mut adversary =
        CoverAdversary::new(|| AlgorithmKind::Pigeonhole.build(&instance, 0), 6, 3).unwrap();
    let mut algorithm = AlgorithmKind::Pigeonhole.build(&instance, 0);
    let options = reachable_outputs(&*algorithm, 6, 3);
    let record = play(&mut *algorithm, &mut adversary, &instance).unwrap();
    println!(
        "staged elimination keeps {} outputs reachable (> budget 3) -> failed: {}",
        options.len(),
        record.transcript.failed()
    );
}
