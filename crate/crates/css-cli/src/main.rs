//! `css` — command-line front end for cubic soft set documents.
//!
//! Exit codes are part of the contract:
//!   0  success
//!   1  malformed JSON
//!   2  invariant violation, incompatible operands, bad usage, or an
//!      infeasible campaign
//!   3  a `cmp` relation that does not hold
//!   4  a verification campaign that found counterexamples

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cubic_soft::algebra::{self, CombineKind, OrderKind, ProductKind};
use cubic_soft::classify::{classify, BracketReading, TheoremId};
use cubic_soft::document::{load_cubic_soft_set, serialize_cubic_soft_set, DocumentError};
use cubic_soft::model::CubicSoftSet;
use cubic_soft::verify::{
    run_campaign_with_cap, CampaignError, CampaignMode, GridSpec, RandomSpec,
    DEFAULT_CAMPAIGN_CAP,
};

#[derive(Parser)]
#[command(
    name = "css",
    version,
    about = "Validate, classify, combine, compare, and verify cubic soft set documents",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a document parses and satisfies every invariant.
    Validate { file: PathBuf },
    /// Report internal/external classification with violation witnesses.
    Classify { file: PathBuf },
    /// Apply an operation and write the result document(s).
    Op(OpArgs),
    /// Test equality or a sub-set order between two documents.
    Cmp {
        /// One of: eq, p-sub, r-sub
        rel: String,
        a: PathBuf,
        b: PathBuf,
    },
    /// Run a verification campaign for one theorem.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OpArgs {
    /// One of: p-union, p-intersection, r-union, r-intersection,
    /// p-or, r-or, p-and, r-and, complement, star-swap
    name: String,
    a: PathBuf,
    b: Option<PathBuf>,
    /// Output path; star-swap appends .star-a and .star-b
    #[arg(short = 'o', long = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id, e.g. T-PU-ICSS
    theorem: String,
    /// Exhaustive mode: grid steps k
    #[arg(long)]
    grid: Option<u32>,
    /// Universe size (exhaustive: required with --grid; random: default 1)
    #[arg(long)]
    universe: Option<u32>,
    /// Shared parameter count (exhaustive: required with --grid; random: default 1)
    #[arg(long)]
    params: Option<u32>,
    /// Random mode: number of samples
    #[arg(long)]
    samples: Option<u64>,
    /// Random mode: campaign seed
    #[arg(long)]
    seed: Option<u64>,
    /// Random mode: rejection-sample to hypothesis-satisfying instances
    #[arg(long)]
    constrained: bool,
    /// Bracket interpretation: as-written, open-open, closed-closed
    #[arg(long, default_value = "as-written")]
    interp: String,
    /// Report output path
    #[arg(short = 'o', long = "out")]
    out: PathBuf,
}

/// Everything that terminates a command, with its exit code.
enum Outcome {
    Ok,
    MalformedJson(String),
    Invariant(String),
    RelationFalse,
    Counterexamples(u64),
}

impl Outcome {
    fn exit(self) -> ExitCode {
        match self {
            Outcome::Ok => ExitCode::from(0),
            Outcome::MalformedJson(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            Outcome::Invariant(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Outcome::RelationFalse => ExitCode::from(3),
            Outcome::Counterexamples(n) => {
                eprintln!("error: {n} counterexample(s) found");
                ExitCode::from(4)
            }
        }
    }
}

fn document_outcome(err: DocumentError) -> Outcome {
    if err.is_malformed_json() {
        Outcome::MalformedJson(err.to_string())
    } else {
        Outcome::Invariant(err.to_string())
    }
}

fn read_set(path: &Path) -> Result<CubicSoftSet, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::Invariant(format!("cannot read {}: {e}", path.display())))?;
    load_cubic_soft_set(&text).map_err(document_outcome)
}

fn write_text(path: &Path, text: &str) -> Result<(), Outcome> {
    std::fs::write(path, text)
        .map_err(|e| Outcome::Invariant(format!("cannot write {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes, anything else is a
            // usage error and lands in the invariant-violation bucket.
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    run(cli).unwrap_or_else(|o| o).exit()
}

fn run(cli: Cli) -> Result<Outcome, Outcome> {
    match cli.command {
        Command::Validate { file } => {
            read_set(&file)?;
            println!("ok");
            Ok(Outcome::Ok)
        }
        Command::Classify { file } => {
            let set = read_set(&file)?;
            let report = classify(&set);
            let mut text =
                serde_json_string(&report).map_err(|e| Outcome::Invariant(e.to_string()))?;
            text.push('\n');
            print!("{text}");
            Ok(Outcome::Ok)
        }
        Command::Op(args) => cmd_op(args),
        Command::Cmp { rel, a, b } => cmd_cmp(&rel, &a, &b),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn serde_json_string<T: serde::Serialize>(value: &T) -> Result<String, serde_json::Error> {
    serde_json::to_string_pretty(value)
}

fn cmd_op(args: OpArgs) -> Result<Outcome, Outcome> {
    let usage = |msg: String| Outcome::Invariant(msg);
    let unary = args.name == "complement";
    match (&args.b, unary) {
        (Some(_), true) => return Err(usage("complement takes one input".into())),
        (None, false) => return Err(usage(format!("{} takes two inputs", args.name))),
        _ => {}
    }
    let a = read_set(&args.a)?;
    let combine = |kind: CombineKind, b: &CubicSoftSet| {
        algebra::soft_combine(kind, &a, b).map_err(|e| Outcome::Invariant(e.to_string()))
    };
    let product = |kind: ProductKind, b: &CubicSoftSet| {
        algebra::soft_product(kind, &a, b).map_err(|e| Outcome::Invariant(e.to_string()))
    };
    if args.name == "star-swap" {
        let b = read_set(args.b.as_ref().expect("arity checked"))?;
        let (fs, gs) =
            algebra::star_swap(&a, &b).map_err(|e| Outcome::Invariant(e.to_string()))?;
        let base = args.out.display();
        write_text(
            &PathBuf::from(format!("{base}.star-a")),
            &serialize_cubic_soft_set(&fs),
        )?;
        write_text(
            &PathBuf::from(format!("{base}.star-b")),
            &serialize_cubic_soft_set(&gs),
        )?;
        return Ok(Outcome::Ok);
    }
    let result = if unary {
        algebra::soft_complement(&a)
    } else {
        let b = read_set(args.b.as_ref().expect("arity checked"))?;
        match args.name.as_str() {
            "p-union" => combine(CombineKind::PUnion, &b)?,
            "p-intersection" => combine(CombineKind::PIntersection, &b)?,
            "r-union" => combine(CombineKind::RUnion, &b)?,
            "r-intersection" => combine(CombineKind::RIntersection, &b)?,
            "p-or" => product(ProductKind::POr, &b)?,
            "r-or" => product(ProductKind::ROr, &b)?,
            "p-and" => product(ProductKind::PAnd, &b)?,
            "r-and" => product(ProductKind::RAnd, &b)?,
            other => return Err(usage(format!("unknown operation {other:?}"))),
        }
    };
    write_text(&args.out, &serialize_cubic_soft_set(&result))?;
    Ok(Outcome::Ok)
}

fn cmd_cmp(rel: &str, a: &Path, b: &Path) -> Result<Outcome, Outcome> {
    let left = read_set(a)?;
    let right = read_set(b)?;
    let holds = match rel {
        "eq" => algebra::soft_equal(&left, &right),
        "p-sub" => algebra::soft_suborder(OrderKind::P, &left, &right)
            .map_err(|e| Outcome::Invariant(e.to_string()))?,
        "r-sub" => algebra::soft_suborder(OrderKind::R, &left, &right)
            .map_err(|e| Outcome::Invariant(e.to_string()))?,
        other => return Err(Outcome::Invariant(format!("unknown relation {other:?}"))),
    };
    println!("{holds}");
    Ok(if holds {
        Outcome::Ok
    } else {
        Outcome::RelationFalse
    })
}

fn campaign_cap() -> Result<u128, Outcome> {
    match std::env::var("CSS_MAX_CAMPAIGN") {
        Err(_) => Ok(DEFAULT_CAMPAIGN_CAP),
        Ok(text) => text
            .parse::<u128>()
            .map_err(|_| Outcome::Invariant(format!("CSS_MAX_CAMPAIGN is not a number: {text:?}"))),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome, Outcome> {
    let theorem: TheoremId = args
        .theorem
        .parse()
        .map_err(|e: String| Outcome::Invariant(e))?;
    let reading: BracketReading = args
        .interp
        .parse()
        .map_err(|e: String| Outcome::Invariant(e))?;
    let mode = match (args.grid, args.samples) {
        (Some(_), Some(_)) => {
            return Err(Outcome::Invariant(
                "choose either --grid or --samples, not both".into(),
            ))
        }
        (Some(steps), None) => {
            if steps < 1 {
                return Err(Outcome::Invariant("--grid needs at least 1 step".into()));
            }
            let (universe_size, shared_params) = match (args.universe, args.params) {
                (Some(u), Some(p)) if u >= 1 && p >= 1 => (u, p),
                _ => {
                    return Err(Outcome::Invariant(
                        "--grid needs --universe N and --params M (both >= 1)".into(),
                    ))
                }
            };
            if args.seed.is_some() || args.constrained {
                return Err(Outcome::Invariant(
                    "--seed/--constrained apply to random mode only".into(),
                ));
            }
            CampaignMode::Exhaustive(GridSpec {
                steps,
                universe_size,
                shared_params,
            })
        }
        (None, Some(samples)) => {
            let seed = args.seed.ok_or_else(|| {
                Outcome::Invariant("random mode needs --seed R".into())
            })?;
            CampaignMode::Random(RandomSpec {
                samples,
                seed,
                constrained: args.constrained,
                universe_size: args.universe.unwrap_or(1).max(1),
                shared_params: args.params.unwrap_or(1).max(1),
            })
        }
        (None, None) => {
            return Err(Outcome::Invariant(
                "choose a mode: --grid K --universe N --params M, or --samples S --seed R".into(),
            ))
        }
    };
    let report = run_campaign_with_cap(theorem, &mode, reading, campaign_cap()?)
        .map_err(|err: CampaignError| Outcome::Invariant(err.to_string()))?;
    write_text(&args.out, &report.to_canonical_string())?;
    println!(
        "{} [{}]: {} instances, {} hypothesis, {} conclusions, {} counterexample(s)",
        report.theorem,
        report.interpretation,
        report.instances_tested,
        report.hypothesis_holds,
        report.conclusion_holds_given_hypothesis,
        report.counterexamples_total
    );
    Ok(if report.counterexamples_total > 0 {
        Outcome::Counterexamples(report.counterexamples_total)
    } else {
        Outcome::Ok
    })
}
