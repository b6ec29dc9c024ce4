//! `lrc`: decide, construct and verify optimal locally repairable codes.
//!
//! Exit codes: 0 success or exact decision, 1 verification failed,
//! 2 input error, 3 unresolved, 4 `d*` not achievable, 5 retries exhausted.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lrc_core::codec::{
    construct_observed, min_distance, verify_locality, AttemptOutcome, LinearCode, PrimeField,
};
use lrc_core::decider::{DecideOptions, Decider, Status, DEFAULT_ORACLE_LIMIT};
use lrc_core::extremal::{Oracle, Query};
use lrc_core::multigraph::ForbiddenFamily;
use lrc_core::sweep::sweep;
use lrc_core::{derive_params, Error};

#[derive(Parser)]
#[command(name = "lrc", version, about = "Optimal locally repairable codes")]
struct Cli {
    /// Worker threads for exhaustive searches.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether distance d* is achievable for (n, k, r).
    Decide {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        limit: LimitArgs,
        /// Skip the closed-form rules and search directly.
        #[arg(long)]
        oracle_only: bool,
    },
    /// Build and verify a parity-check matrix with distance d*.
    Construct {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        limit: LimitArgs,
        /// Prime field order; defaults to the smallest safe prime.
        #[arg(long)]
        field: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        retries: usize,
        /// Write the code here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recheck rank, locality and distance of a code file.
    Verify {
        #[arg(long)]
        code: PathBuf,
    },
    /// Exact extremal numbers for small orders.
    Oracle {
        #[command(subcommand)]
        query: OracleCommand,
    },
    /// Decide every valid (n, k, r) up to the given bounds.
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        r_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        limit: LimitArgs,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    r: u64,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest n1 handed to exhaustive search.
    #[arg(long, env = "LRC_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Multigraphs free of F_{order,size}.
    #[command(name = "eX")]
    Multi(FamilyArgs),
    /// Simple graphs free of F_{order,size}.
    #[command(name = "ex")]
    Simple(FamilyArgs),
    /// Simple graphs with girth above k.
    #[command(name = "girth-ex")]
    Girth {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        girth_k: usize,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    vertices: usize,
    #[arg(long)]
    forbid_order: usize,
    #[arg(long)]
    forbid_size: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Undecided => 3,
        Error::NotAchievable { .. } => 4,
        Error::RetriesExhausted { .. } => 5,
        Error::InvalidParams { .. }
        | Error::BadArgs(_)
        | Error::BadK { .. }
        | Error::EnvelopeExceeded { .. }
        | Error::Unbounded(_)
        | Error::NotPrime(_)
        | Error::FieldTooLarge
        | Error::Malformed(_)
        | Error::Json(_) => 2,
        _ => 1,
    }
}

fn decider(jobs: usize, limit: &LimitArgs, oracle_only: bool) -> Decider {
    Decider::new(DecideOptions {
        oracle_limit: limit.oracle_limit,
        oracle_only,
        jobs,
    })
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

#[derive(Serialize)]
struct ConstructSummary {
    q: u64,
    attempts: usize,
    distance: usize,
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct VerifyReport {
    rank: Check<usize>,
    locality: Check<bool>,
    distance: Check<usize>,
    pass: bool,
}

#[derive(Serialize)]
struct Check<T> {
    expected: T,
    found: T,
    pass: bool,
}

impl<T: PartialEq + Copy> Check<T> {
    fn new(expected: T, found: T) -> Self {
        Check {
            expected,
            found,
            pass: expected == found,
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Decide {
            params,
            limit,
            oracle_only,
        } => {
            let p = derive_params(params.n, params.k, params.r)?;
            let d = decider(cli.jobs, &limit, oracle_only).decide(&p)?;
            print_json(&d)?;
            Ok(if d.status == Status::Exact { 0 } else { 3 })
        }
        Command::Construct {
            params,
            limit,
            field,
            seed,
            retries,
            out,
        } => {
            let p = derive_params(params.n, params.k, params.r)?;
            let field = field.map(PrimeField::new).transpose()?;
            let built = construct_observed(
                &decider(cli.jobs, &limit, false),
                &p,
                field,
                seed,
                retries,
                |i, outcome| {
                    if outcome != AttemptOutcome::Verified {
                        eprintln!("attempt {i}: {}", serde_json::to_string(&outcome).unwrap());
                    }
                },
            )?;
            let json = serde_json::to_string_pretty(&built.code)?;
            match &out {
                Some(path) => fs::write(path, json + "\n")
                    .map_err(|e| Error::BadArgs(format!("cannot write {}: {e}", path.display())))?,
                None => println!("{json}"),
            }
            let summary = ConstructSummary {
                q: built.code.field.order(),
                attempts: built.attempts,
                distance: built.code.claimed_distance,
                out,
            };
            let line = serde_json::to_string(&summary)?;
            // keep stdout a single JSON document when the code goes there
            if summary.out.is_some() {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }
            Ok(0)
        }
        Command::Verify { code } => {
            let text = fs::read_to_string(&code)
                .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", code.display())))?;
            let c: LinearCode = serde_json::from_str(&text)?;
            let rank = Check::new(c.params.n - c.params.k, c.rank());
            let locality = Check::new(true, verify_locality(&c));
            let found = match min_distance(&c) {
                Ok(d) => d,
                Err(Error::DegenerateCode { .. }) => 0,
                Err(e) => return Err(e),
            };
            let distance = Check::new(c.claimed_distance, found);
            let pass = rank.pass && locality.pass && distance.pass;
            for (name, ok) in [("rank", rank.pass), ("locality", locality.pass), ("distance", distance.pass)] {
                eprintln!("{name}: {}", if ok { "pass" } else { "FAIL" });
            }
            print_json(&VerifyReport {
                rank,
                locality,
                distance,
                pass,
            })?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::Oracle { query } => {
            let (order, q) = match query {
                OracleCommand::Multi(a) => (
                    a.vertices,
                    Query::Multigraph {
                        family: ForbiddenFamily::new(a.forbid_order, a.forbid_size)?,
                    },
                ),
                OracleCommand::Simple(a) => (
                    a.vertices,
                    Query::Simple {
                        family: ForbiddenFamily::new(a.forbid_order, a.forbid_size)?,
                    },
                ),
                OracleCommand::Girth { vertices, girth_k } => (vertices, Query::Girth { k: girth_k }),
            };
            print_json(&Oracle::new(cli.jobs).max_size(order, q)?)?;
            Ok(0)
        }
        Command::Sweep {
            n_max,
            r_max,
            format,
            limit,
        } => {
            let rows = sweep(&decider(cli.jobs, &limit, false), n_max, r_max)?;
            match format {
                Format::Json => print_json(&rows)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
                    for row in &rows {
                        w.serialize(row)
                            .map_err(|e| Error::BadArgs(format!("csv output failed: {e}")))?;
                    }
                    w.flush().map_err(|e| Error::BadArgs(format!("csv output failed: {e}")))?;
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code)
}
