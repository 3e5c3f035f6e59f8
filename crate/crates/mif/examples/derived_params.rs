//! How each algorithm sizes itself across parameter regimes.
//!
//! ```bash
//! cargo run -p mif --example derived_params
//! ```

use mif::algorithms::{AlgorithmKind, DerivedParams};
use mif::Instance;

fn show(kind: AlgorithmKind, instance: &Instance) -> String {
    match kind.derived_params(instance) {
        DerivedParams::None => "-".into(),
        DerivedParams::T { t } => format!("t={t}"),
        DerivedParams::ST { s, t } => format!("s={s}, t={t}"),
        DerivedParams::WT { w, t } => format!("w={w}, t={t}"),
        DerivedParams::Fallback => "fallback -> trivial".into(),
    }
}

fn main() {
    let configs = [
        ("sparse stream", Instance::new(1_000_000, 1_000, 0.05).unwrap()),
        ("dense stream", Instance::new(64, 40, 0.05).unwrap()),
        ("tiny error", Instance::new(10_000, 100, 1e-9).unwrap()),
        ("loose error", Instance::new(10_000, 100, 0.5).unwrap()),
    ];
    for (label, instance) in configs {
        println!(
            "{label}: n = {}, r = {}, delta = {}",
            instance.n(),
            instance.r(),
            instance.delta()
        );
        for kind in AlgorithmKind::ALL {
            println!("  {:<12} {}", kind.name(), show(kind, &instance));
        }
        println!();
    }
}
