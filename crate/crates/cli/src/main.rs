//! `kronecker`: command-line front end for Kronecker products of `O(n)`,
//! `SO(n)` and `Sp(2m)` tensor irreps.
//!
//! Exit codes: 0 on success, 1 on malformed input, 2 when a verification
//! detects a mathematical mismatch.

mod batch;
mod request;

use std::fs::File;
use std::io::{self, BufReader, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kronecker_core::OracleLimits;

use request::{parse_label, Executor, InputError, Op, Request, Verdict};

const MAX_RANK_VAR: &str = "KRONECKER_MAX_RANK";
const MAX_BOXES_VAR: &str = "KRONECKER_MAX_BOXES";

#[derive(Parser)]
#[command(name = "kronecker", version, about = "Kronecker products of O(n), SO(n) and Sp(2m) tensor irreps")]
struct Cli {
    /// Print one JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Group family: O, SO or Sp
    #[arg(long)]
    family: Option<String>,
    /// Dimension n of the defining representation (n = 2m for Sp)
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson product of two labels, or c(a,b;nu) with three
    Lr {
        #[arg(num_args = 2..=3, required = true)]
        labels: Vec<String>,
    },
    /// Stable (large-n) product of two labels
    Stable { a: String, b: String },
    /// Kronecker product over a group, certified by characters when in range
    Decompose {
        #[command(flatten)]
        group: GroupArgs,
        /// Print the stable product instead of the group answer
        #[arg(long)]
        stable: bool,
        /// Show each nonstandard label and its strip removals
        #[arg(long)]
        trace: bool,
        a: String,
        b: String,
    },
    /// Rewrite a label as a signed standard label (or 0)
    Modify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        trace: bool,
        label: String,
    },
    /// Group dimension of a label
    Dim {
        #[command(flatten)]
        group: GroupArgs,
        label: String,
    },
    /// Brauer-algebra dimension of a label at a level
    BrauerDim {
        #[arg(long)]
        level: usize,
        label: String,
    },
    /// Induced-module dimension count h for two labels
    #[command(alias = "verify-eq11")]
    VerifyInduced { a: String, b: String },
    /// Exact character check of a decomposition
    VerifyCharacters {
        #[command(flatten)]
        group: GroupArgs,
        /// JSON claim (e.g. `decompose --json` output) or `-` for stdin;
        /// without it the computed product is checked
        #[arg(long)]
        claim: Option<String>,
        a: Option<String>,
        b: Option<String>,
    },
    /// Run line-delimited JSON requests from a file (`-` for stdin)
    Batch { path: String },
}

fn labels(raw: &[&String]) -> Result<Vec<Vec<i64>>, InputError> {
    raw.iter().map(|s| parse_label(s)).collect()
}

fn with_group(op: Op, group: GroupArgs, inputs: Vec<Vec<i64>>) -> Request {
    Request {
        family: group.family,
        n: group.n,
        inputs,
        ..Request::new(op)
    }
}

fn open(path: &str) -> Result<Box<dyn Read>, InputError> {
    if path == "-" {
        return Ok(Box::new(io::stdin()));
    }
    File::open(path)
        .map(|f| Box::new(f) as Box<dyn Read>)
        .map_err(|e| InputError(format!("cannot open {path}: {e}")))
}

fn read_claim(path: &str) -> Result<Request, InputError> {
    let mut text = String::new();
    open(path)?
        .read_to_string(&mut text)
        .map_err(|e| InputError(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{path}: {e}")))
}

fn build_request(command: Command) -> Result<Request, InputError> {
    Ok(match command {
        Command::Lr { labels: raw } => Request {
            inputs: labels(&raw.iter().collect::<Vec<_>>())?,
            ..Request::new(Op::Lr)
        },
        Command::Stable { a, b } => Request {
            inputs: labels(&[&a, &b])?,
            ..Request::new(Op::Stable)
        },
        Command::Decompose {
            group,
            stable,
            trace,
            a,
            b,
        } => Request {
            stable,
            trace,
            ..with_group(Op::Decompose, group, labels(&[&a, &b])?)
        },
        Command::Modify { group, trace, label } => Request {
            trace,
            ..with_group(Op::Modify, group, labels(&[&label])?)
        },
        Command::Dim { group, label } => with_group(Op::Dim, group, labels(&[&label])?),
        Command::BrauerDim { level, label } => Request {
            level: Some(level),
            inputs: labels(&[&label])?,
            ..Request::new(Op::BrauerDim)
        },
        Command::VerifyInduced { a, b } => Request {
            inputs: labels(&[&a, &b])?,
            ..Request::new(Op::VerifyInduced)
        },
        Command::VerifyCharacters { group, claim, a, b } => {
            let base = match &claim {
                Some(path) => read_claim(path)?,
                None => Request::new(Op::VerifyCharacters),
            };
            let operands: Vec<&String> = a.iter().chain(b.iter()).collect();
            Request {
                op: Op::VerifyCharacters,
                family: group.family.or(base.family),
                n: group.n.or(base.n),
                inputs: if operands.is_empty() { base.inputs } else { labels(&operands)? },
                terms: base.terms,
                ..Request::new(Op::VerifyCharacters)
            }
        }
        Command::Batch { .. } => unreachable!("batch is handled separately"),
    })
}

fn env_limit(var: &str, default: usize) -> Result<usize, InputError> {
    match std::env::var(var) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| InputError(format!("{var}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(default),
    }
}

fn limits() -> Result<OracleLimits, InputError> {
    let default = OracleLimits::default();
    Ok(OracleLimits {
        max_rank: env_limit(MAX_RANK_VAR, default.max_rank)?,
        max_boxes: env_limit(MAX_BOXES_VAR, default.max_boxes)?,
    })
}

fn run(cli: Cli) -> Result<u8, InputError> {
    let executor = Executor::new(limits()?);
    if let Command::Batch { path } = &cli.command {
        let input = BufReader::new(open(path)?);
        let summary = batch::run(&executor, input, io::stdout().lock())
            .map_err(|e| InputError(format!("cannot read {path}: {e}")))?;
        return Ok(summary.exit_code());
    }
    let request = build_request(cli.command)?;
    let outcome = executor.execute(&request)?;
    if cli.json {
        println!("{}", serde_json::to_string(&outcome.response).expect("responses serialize"));
    } else {
        println!("{}", outcome.text);
    }
    Ok(match outcome.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 2,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
