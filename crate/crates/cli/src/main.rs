//! Batch command-line surface for the decision-list PTF toolkit.
//!
//! Five subcommands cover the pipeline: `construct` builds and serializes a
//! sign representation, `verify` replays it exhaustively against its list,
//! `adversary` searches and rechecks weight-certificate chains, `learn` runs
//! the online learner, and `bench` emits the degree/weight tradeoff table.
//! Every command is deterministic given its flags; randomness is always
//! seeded, artifacts carry no timestamps, and files are written atomically.
//!
//! The environment variable `PTF_AMPLIFIER_CONSTANTS` points at an alternate
//! amplifier constants file.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use ptf_core::adversary::{
    recheck_chain, run_adversary, weight_certificate, BlockPlan, ChainRecord,
};
use ptf_core::amplifier;
use ptf_core::construct::{
    assemble_ball_ptf, assemble_cube_ptf, AssembledPTF, BuildReport, PtfRecord,
};
use ptf_core::dlist::{
    odd_max_bit, random_list, DecisionList, DecisionListRecord, Domain, DEFAULT_ENUM_CAP,
};
use ptf_core::poly::parse_rational;
use ptf_core::verify::verify_sign;
use ptf_core::winnow::{fitted_constant, run_online_with, LearnerState};

#[derive(Parser)]
#[command(
    name = "ptf",
    about = "Exact sign representations of decision lists",
    version
)]
struct Cli {
    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// Where the instance comes from.
#[derive(Args, Clone)]
struct InstanceArgs {
    /// Use the hardest list: output (-1)^i for the highest set bit i.
    #[arg(long, value_name = "N", conflicts_with_all = ["list", "random"])]
    omb: Option<u32>,

    /// Load a decision list from a JSON file.
    #[arg(long, value_name = "FILE", conflicts_with = "random")]
    list: Option<PathBuf>,

    /// Generate a seeded random list, as `n,h`.
    #[arg(long, value_name = "N,H")]
    random: Option<String>,

    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl InstanceArgs {
    fn load(&self) -> Result<DecisionList, String> {
        if let Some(n) = self.omb {
            return Ok(odd_max_bit(n));
        }
        if let Some(path) = &self.list {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let record: DecisionListRecord =
                serde_json::from_str(&text).map_err(|e| format!("bad list file: {e}"))?;
            return DecisionList::try_from(&record).map_err(|e| e.to_string());
        }
        if let Some(shape) = &self.random {
            let (n, h) = shape
                .split_once(',')
                .ok_or_else(|| "expected --random n,h".to_string())?;
            let n: u32 = n.trim().parse().map_err(|e| format!("bad n: {e}"))?;
            let h: usize = h.trim().parse().map_err(|e| format!("bad h: {e}"))?;
            return Ok(random_list(n, h, self.seed));
        }
        Err("no instance given: use --omb, --list, or --random".into())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a sign representation and write it to a file.
    Construct {
        #[command(flatten)]
        instance: InstanceArgs,

        /// Target domain.
        #[arg(long, default_value = "cube")]
        domain: String,

        /// Block size for the cube construction.
        #[arg(long)]
        h: Option<u32>,

        /// Ball radius; required when --domain ball.
        #[arg(long)]
        k: Option<u32>,

        /// Output path for the serialized polynomial.
        #[arg(long, value_name = "FILE")]
        out: PathBuf,

        /// Append one CSV row of construction figures here.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },

    /// Replay a serialized polynomial against its list over the full domain.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,

        /// Serialized polynomial from `construct`.
        #[arg(long, value_name = "FILE")]
        ptf: PathBuf,

        /// Enumeration cap override.
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        cap: u64,
    },

    /// Search a doubling witness chain, or recheck one from its file.
    Adversary {
        #[command(flatten)]
        instance: InstanceArgs,

        #[arg(long, value_name = "FILE")]
        ptf: PathBuf,

        /// Even block size of the search layout.
        #[arg(long, default_value_t = 8)]
        t: u32,

        /// Ball radius (must be at least the block size).
        #[arg(long)]
        k: Option<u32>,

        /// Degree the block size targets (informational).
        #[arg(long, default_value_t = 2)]
        d: u32,

        /// Where to write the chain.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,

        /// Recheck an existing chain file instead of searching.
        #[arg(long, value_name = "FILE")]
        recheck: Option<PathBuf>,

        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        cap: u64,
    },

    /// Run the online learner over the enumerated domain.
    Learn {
        #[command(flatten)]
        instance: InstanceArgs,

        /// Monomial expansion degree.
        #[arg(long)]
        d: u32,

        /// Pass limit.
        #[arg(long, default_value_t = 512)]
        passes: u32,

        /// Promotion factor (rational). The classical 2 can cycle on hard
        /// lists; 6/5 converges on every target shipped here.
        #[arg(long, default_value = "2")]
        alpha: String,

        /// Decision threshold (rational); defaults to the feature count.
        #[arg(long)]
        theta: Option<String>,

        /// Serialized polynomial whose weight anchors the summary's
        /// mistake-bound column.
        #[arg(long, value_name = "FILE")]
        ptf: Option<PathBuf>,

        /// Mistake-log CSV path.
        #[arg(long, value_name = "FILE")]
        out: PathBuf,

        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        cap: u64,
    },

    /// Sweep block sizes / radii and emit the degree-weight table.
    Bench {
        #[command(flatten)]
        instance: InstanceArgs,

        /// Comma-separated cube block sizes.
        #[arg(long, value_name = "H1,H2,..")]
        h: Option<String>,

        /// Comma-separated ball radii.
        #[arg(long, value_name = "K1,K2,..")]
        k: Option<String>,

        /// CSV output path.
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Write via a sibling temp file and rename, so readers never see a partial
/// artifact.
fn write_atomic(path: &Path, contents: &str) -> Result<(), String> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents).map_err(|e| format!("cannot write {}: {e}", tmp.display()))?;
    std::fs::rename(&tmp, path).map_err(|e| format!("cannot rename to {}: {e}", path.display()))
}

fn load_ptf(path: &Path) -> Result<PtfRecord, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("bad polynomial file: {e}"))
}

fn domain_for(record: &PtfRecord) -> Result<Domain, String> {
    match record.domain.as_str() {
        "cube" => Ok(Domain::FullCube(record.n)),
        "ball" => Ok(Domain::HammingBall {
            n: record.n,
            k: record.param,
        }),
        other => Err(format!("unknown domain {other:?} in polynomial file")),
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Construct {
            instance,
            domain,
            h,
            k,
            out,
            report,
        } => {
            let list = instance.load()?;
            let ptf: AssembledPTF = match domain.as_str() {
                "cube" => {
                    let h = h.unwrap_or_else(|| (list.len() as u32).max(1));
                    assemble_cube_ptf(&list, h).map_err(|e| e.to_string())?
                }
                "ball" => {
                    let k = k.ok_or("--domain ball requires --k")?;
                    assemble_ball_ptf(&list, k).map_err(|e| e.to_string())?
                }
                other => return Err(format!("unknown domain {other:?} (use cube or ball)")),
            };
            let record = PtfRecord::from(&ptf);
            write_atomic(&out, &serde_json::to_string_pretty(&record).unwrap())?;
            print!("{}", ptf.report_text());
            if let Some(report_path) = report {
                let mut csv = String::new();
                if !report_path.exists() {
                    csv.push_str(BuildReport::csv_header());
                }
                csv.push_str(&ptf.report.csv_row(ptf.size_param));
                append_atomic(&report_path, &csv)?;
            }
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { instance, ptf, cap } => {
            let list = instance.load()?;
            let record = load_ptf(&ptf)?;
            let dom = domain_for(&record)?;
            let poly = record.polynomial().map_err(|e| e.to_string())?;
            let out = verify_sign(poly.as_poly(), &list, &dom, cap).map_err(|e| e.to_string())?;
            print!("{}", out.to_text());
            Ok(if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }

        Command::Adversary {
            instance,
            ptf,
            t,
            k,
            d,
            out,
            recheck,
            cap,
        } => {
            let record = load_ptf(&ptf)?;
            let poly = record.polynomial().map_err(|e| e.to_string())?;
            if let Some(chain_path) = recheck {
                let json = std::fs::read_to_string(&chain_path)
                    .map_err(|e| format!("cannot read {}: {e}", chain_path.display()))?;
                let bound = recheck_chain(&json, &poly).map_err(|e| e.to_string())?;
                println!("certificate ok: weight >= {bound}");
                return Ok(ExitCode::SUCCESS);
            }
            let list = instance.load()?;
            let k = k.unwrap_or(t);
            let plan = BlockPlan::new(record.n, d, k, t).map_err(|e| e.to_string())?;
            let run = run_adversary(&poly, &plan, &list, cap).map_err(|e| e.to_string())?;
            let bound = weight_certificate(&run.chain, &poly).map_err(|e| e.to_string())?;
            println!(
                "chain length {} ({:?}); certified weight >= {bound}",
                run.chain.length(),
                run.status
            );
            if let Some(stopped) = run.exhausted_at {
                println!(
                    "no qualifying filling at extension block {stopped}; chain kept as prefix"
                );
            }
            if let Some(out) = out {
                let record = ChainRecord::from(&run.chain);
                write_atomic(&out, &serde_json::to_string_pretty(&record).unwrap())?;
                println!("wrote {}", out.display());
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Learn {
            instance,
            d,
            passes,
            alpha,
            theta,
            ptf,
            out,
            cap,
        } => {
            let list = instance.load()?;
            let dom = Domain::FullCube(list.n);
            let alpha: BigRational = parse_rational(&alpha).map_err(|e| e.to_string())?;
            let mut state = LearnerState::new(list.n, d)
                .and_then(|s| s.with_promotion(alpha))
                .map_err(|e| e.to_string())?;
            if let Some(theta) = theta {
                let theta = parse_rational(&theta).map_err(|e| e.to_string())?;
                state = state.with_threshold(theta).map_err(|e| e.to_string())?;
            }
            let (_, log) =
                run_online_with(&list, &dom, state, passes, cap).map_err(|e| e.to_string())?;
            let w_log2 = match ptf {
                Some(path) => {
                    let poly = load_ptf(&path)?.polynomial().map_err(|e| e.to_string())?;
                    log2_of(&poly.weight())
                }
                None => f64::NAN,
            };
            let c = fitted_constant(log.mistakes, w_log2, d, list.n);
            let mut csv = log.to_csv();
            csv.push_str(&log.summary_csv(list.n, d, w_log2, c));
            write_atomic(&out, &csv)?;
            match log.converged_pass {
                Some(p) => println!(
                    "converged on pass {p} with {} mistakes; log in {}",
                    log.mistakes,
                    out.display()
                ),
                None => println!(
                    "no mistake-free pass within {} passes ({} mistakes); log in {}",
                    log.passes_run,
                    log.mistakes,
                    out.display()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Bench {
            instance,
            h,
            k,
            out,
        } => {
            let list = instance.load()?;
            let n = list.n;
            let mut csv = String::from("n,domain,param,formal_degree,log2_weight,basis\n");
            let mut printed = String::new();
            if let Some(hs) = h {
                for h in parse_u32_list(&hs)? {
                    let ptf = assemble_cube_ptf(&list, h).map_err(|e| e.to_string())?;
                    let basis = n as f64 / h as f64 + (h as f64).sqrt() * (h as f64).log2();
                    csv.push_str(&format!(
                        "{n},cube,{h},{},{:.2},{:.3}\n",
                        ptf.report.formal_degree, ptf.report.log2_weight, basis
                    ));
                    printed.push_str(&format!(
                        "cube h={h}: degree {} log2-weight {:.1}\n",
                        ptf.report.formal_degree, ptf.report.log2_weight
                    ));
                }
            }
            if let Some(ks) = k {
                for k in parse_u32_list(&ks)? {
                    let ptf = assemble_ball_ptf(&list, k).map_err(|e| e.to_string())?;
                    let basis = (k as f64).sqrt() * (n as f64).log2();
                    csv.push_str(&format!(
                        "{n},ball,{k},{},{:.2},{:.3}\n",
                        ptf.report.formal_degree, ptf.report.log2_weight, basis
                    ));
                    printed.push_str(&format!(
                        "ball k={k}: degree {} log2-weight {:.1}\n",
                        ptf.report.formal_degree, ptf.report.log2_weight
                    ));
                }
            }
            write_atomic(&out, &csv)?;
            print!("{printed}");
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn append_atomic(path: &Path, contents: &str) -> Result<(), String> {
    let mut existing = if path.exists() {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
    } else {
        String::new()
    };
    existing.push_str(contents);
    write_atomic(path, &existing)
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad value {t:?}: {e}"))
        })
        .collect()
}

fn log2_of(v: &BigInt) -> f64 {
    amplifier::log2_bigint(v)
}
