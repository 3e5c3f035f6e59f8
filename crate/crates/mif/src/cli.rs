//! Command-line surface.
//!
//! Six subcommands print CSV rows or JSON documents on standard output; all
//! randomness flows from `--seed`. JSON documents carry a `schema_version`
//! field; CSV schemas are pinned by their header rows.

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

use crate::adversaries::AdversaryKind;
use crate::algorithms::{AlgorithmKind, DerivedParams};
use crate::contract::Element;
use crate::harness::{
    avoid_min_messages, estimate_error, exhaustive_verify, play, space_profile, AvoidInstance,
    VerifyOutcome,
};
use crate::instance::Instance;
use crate::random::derive_trial_seed;
use crate::transcript::check_transcript;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "mif",
    about = "Missing-item finding on data streams: run games, estimate error rates, profile space",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GameArgs {
    /// Algorithm: trivial|classical|hidden|zero|pigeonhole|batch
    #[arg(long)]
    alg: String,
    /// Adversary: static:<csv>|echo|uniform
    #[arg(long)]
    adv: String,
    /// Universe size
    #[arg(long)]
    n: u64,
    /// Stream length
    #[arg(long)]
    r: u64,
    /// Target error probability
    #[arg(long)]
    delta: f64,
    /// Master seed; the only source of randomness
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Play one game and print the transcript as JSON.
    Run {
        #[command(flatten)]
        game: GameArgs,
        /// Also write the transcript JSON to this path.
        #[arg(long)]
        dump_transcript: Option<PathBuf>,
    },
    /// Estimate the failure rate over seeded trials; prints one CSV row.
    Estimate {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        trials: u64,
        /// Worker threads; results are identical for any value.
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Profile encoded-state sizes over seeded trials; prints one CSV row.
    Space {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Exhaustively check an algorithm on every stream of every small
    /// instance (delta is fixed at 0.5 for parameter derivation).
    Verify {
        #[arg(long)]
        alg: String,
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        max_r: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact minimum message count for the one-way avoidance game.
    Avoid {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Print the parameters an algorithm derives from an instance, as JSON.
    Params {
        #[arg(long)]
        alg: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        delta: f64,
    },
}

fn parse_alg(name: &str) -> Result<AlgorithmKind, String> {
    AlgorithmKind::parse(name).ok_or_else(|| {
        format!("unknown algorithm '{name}' (expected trivial|classical|hidden|zero|pigeonhole|batch)")
    })
}

fn parse_adv(spec: &str) -> Result<AdversaryKind, String> {
    if let Some(csv) = spec.strip_prefix("static:") {
        let stream = csv
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse::<Element>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("bad static stream: {e}"))?;
        return Ok(AdversaryKind::Static(stream));
    }
    match spec {
        "echo" => Ok(AdversaryKind::Echo),
        "uniform" => Ok(AdversaryKind::UniformRandom),
        _ => Err(format!(
            "unknown adversary '{spec}' (expected static:<csv>|echo|uniform)"
        )),
    }
}

fn with_pool<T: Send>(parallel: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match parallel {
        None => f(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

/// Run with explicit arguments, writing to `out`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version through this path as well
            let _ = write!(out, "{e}");
            return i32::from(!e.use_stderr());
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    match cli.command {
        Command::Run {
            game,
            dump_transcript,
        } => {
            let alg_kind = parse_alg(&game.alg)?;
            let adv_kind = parse_adv(&game.adv)?;
            let instance =
                Instance::new(game.n, game.r, game.delta).map_err(|e| e.to_string())?;
            let mut alg = alg_kind.build(&instance, derive_trial_seed(game.seed, 0));
            let mut adv = adv_kind
                .build(&instance, derive_trial_seed(game.seed, 1))
                .map_err(|e| e.to_string())?;
            let record = play(&mut *alg, &mut *adv, &instance).map_err(|e| e.to_string())?;
            let verdict =
                check_transcript(&instance, &record.transcript).map_err(|e| e.to_string())?;
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "alg": alg_kind.name(),
                "adv": adv_kind.name(),
                "n": game.n,
                "r": game.r,
                "delta": game.delta,
                "seed": game.seed,
                "transcript": record.transcript,
                "failed_adversarial": verdict.failed_adversarial(),
                "failed_static": verdict.failed_static(),
            });
            let text = serde_json::to_string_pretty(&doc).expect("serializable");
            if let Some(path) = dump_transcript {
                std::fs::write(&path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            writeln!(out, "{text}").map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Estimate {
            game,
            trials,
            parallel,
        } => {
            let alg_kind = parse_alg(&game.alg)?;
            let adv_kind = parse_adv(&game.adv)?;
            let instance =
                Instance::new(game.n, game.r, game.delta).map_err(|e| e.to_string())?;
            if trials == 0 {
                return Err("--trials must be at least 1".into());
            }
            let est = with_pool(parallel, || {
                estimate_error(
                    &|s| alg_kind.build(&instance, s),
                    &|s| adv_kind.build(&instance, s).expect("CLI adversaries build"),
                    &instance,
                    trials,
                    game.seed,
                )
            })
            .map_err(|e| e.to_string())?;
            writeln!(out, "alg,adv,n,r,delta,trials,failures,point,ci_low,ci_high")
                .map_err(|e| e.to_string())?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                alg_kind.name(),
                adv_kind.name(),
                game.n,
                game.r,
                game.delta,
                est.trials,
                est.failures,
                est.point.to_f64().expect("ratio fits"),
                est.ci_low,
                est.ci_high
            )
            .map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Space {
            game,
            trials,
            parallel,
        } => {
            let alg_kind = parse_alg(&game.alg)?;
            let adv_kind = parse_adv(&game.adv)?;
            let instance =
                Instance::new(game.n, game.r, game.delta).map_err(|e| e.to_string())?;
            if trials == 0 {
                return Err("--trials must be at least 1".into());
            }
            let report = with_pool(parallel, || {
                space_profile(
                    &|s| alg_kind.build(&instance, s),
                    &|s| adv_kind.build(&instance, s).expect("CLI adversaries build"),
                    &instance,
                    trials,
                    game.seed,
                )
            })
            .map_err(|e| e.to_string())?;
            writeln!(
                out,
                "alg,model,max_state_bits,mean_state_bits,oracle_random_bits,seed_bits"
            )
            .map_err(|e| e.to_string())?;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                alg_kind.name(),
                report.model.tag(),
                report.max_state_bits,
                report.mean_state_bits.to_f64().expect("ratio fits"),
                report.oracle_random_bits,
                report.seed_bits
            )
            .map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Verify {
            alg,
            max_n,
            max_r,
            seed,
        } => {
            let alg_kind = parse_alg(&alg)?;
            let mut any_fail = false;
            for n in 2..=max_n {
                for r in 1..n.min(max_r + 1) {
                    let instance = Instance::new(n, r, 0.5).expect("r < n");
                    let outcome = exhaustive_verify(
                        &|| alg_kind.build(&instance, seed),
                        n,
                        r,
                    )
                    .map_err(|e| e.to_string())?;
                    match outcome {
                        VerifyOutcome::Pass => {
                            writeln!(out, "n={n},r={r},alg={}: pass", alg_kind.name())
                                .map_err(|e| e.to_string())?;
                        }
                        VerifyOutcome::Fail { stream } => {
                            any_fail = true;
                            writeln!(
                                out,
                                "n={n},r={r},alg={}: FAIL stream={stream:?}",
                                alg_kind.name()
                            )
                            .map_err(|e| e.to_string())?;
                        }
                    }
                }
            }
            Ok(i32::from(any_fail))
        }
        Command::Avoid { t, a, b } => {
            let instance = AvoidInstance::new(t, a, b).map_err(|e| e.to_string())?;
            let min = avoid_min_messages(&instance);
            writeln!(out, "t,a,b,min_messages,lower_bound_a_plus_1")
                .map_err(|e| e.to_string())?;
            writeln!(out, "{t},{a},{b},{min},{}", a + 1).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Params { alg, n, r, delta } => {
            let alg_kind = parse_alg(&alg)?;
            let instance = Instance::new(n, r, delta).map_err(|e| e.to_string())?;
            let params = match alg_kind.derived_params(&instance) {
                DerivedParams::None => json!({}),
                DerivedParams::T { t } => json!({ "t": t }),
                DerivedParams::ST { s, t } => json!({ "s": s, "t": t }),
                DerivedParams::WT { w, t } => json!({ "w": w, "t": t }),
                DerivedParams::Fallback => json!({ "fallback": true }),
            };
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "alg": alg_kind.name(),
                "n": n,
                "r": r,
                "delta": delta,
                "params": params,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                .map_err(|e| e.to_string())?;
            Ok(0)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> std::process::ExitCode {
    let mut stdout = std::io::stdout();
    let code = run(std::env::args_os(), &mut stdout);
    std::process::ExitCode::from(u8::try_from(code.clamp(0, 255)).unwrap_or(2))
}
