//! Play a single game and inspect the transcript.
//!
//! The hidden-list algorithm faces the echo adversary, which feeds every
//! answer straight back into the stream. The transcript records both sides;
//! the final check recomputes the verdict from scratch.
//!
//! ```bash
//! cargo run -p mif --example play_one_game
//! ```

use mif::adversaries::EchoAdversary;
use mif::algorithms::AlgorithmKind;
use mif::harness::play;
use mif::{check_transcript, Instance};

fn main() {
    let instance = Instance::new(50, 12, 0.05).unwrap();
    let mut algorithm = AlgorithmKind::HiddenList.build(&instance, 42);
    let mut adversary = EchoAdversary;

    let record = play(&mut *algorithm, &mut adversary, &instance).unwrap();
    let t = &record.transcript;

    println!("before any element, the algorithm offered: {}", t.initial_output.unwrap());
    for (i, (input, output)) in t.inputs.iter().zip(&t.outputs).enumerate() {
        println!("step {:>2}: adversary sent {input:>2}, algorithm answered {output:>2}", i + 1);
    }

    let verdict = check_transcript(&instance, t).unwrap();
    println!();
    println!("aborted:             {:?}", t.aborted_at);
    println!("first invalid output: {:?}", verdict.first_failure);
    println!("failed (adversarial): {}", verdict.failed_adversarial());
    println!("failed (static):      {}", verdict.failed_static());
    println!("state sizes per step: {:?} bits", record.state_bits);
}
