//! Exact minimum message counts for the one-way avoidance game.
//!
//! Alice holds an `a`-subset of `[t]`, sends one message, and Bob must name
//! a `b`-subset disjoint from hers. The minimum number of distinct messages
//! any deterministic protocol needs is a minimum set cover, solved exactly
//! here; it can never be below `a + 1`. Streaming algorithms that reveal
//! too much through their outputs are implicitly playing this game, which
//! is what makes the bound interesting.
//!
//! ```bash
//! cargo run -p mif --example avoid_lower_bound
//! ```

use mif::harness::{avoid_min_messages, AvoidInstance};

fn main() {
    println!("{:>3} {:>3} {:>3} {:>13} {:>11}", "t", "a", "b", "min messages", "a + 1 floor");
    for (t, a, b) in [
        (2u64, 1u64, 1u64),
        (3, 1, 1),
        (3, 2, 1),
        (4, 2, 1),
        (4, 2, 2),
        (5, 3, 1),
        (6, 3, 2),
        (7, 3, 2),
    ] {
        let min = avoid_min_messages(&AvoidInstance::new(t, a, b).unwrap());
        let note = if min == a + 1 { "(tight)" } else { "" };
        println!("{t:>3} {a:>3} {b:>3} {min:>13} {:>11} {note}", a + 1);
    }
}
