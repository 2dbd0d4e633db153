//! The `sl2prod` command line: argument parsing, configuration, the thread
//! pool and report rendering.

mod commands;
mod config;
mod report;
mod samples;
mod verify;

pub use commands::{certified_n, parse_cubic, parse_targets};
pub use config::{FileConfig, DEFAULT_BOUND, DEFAULT_COUNT, DEFAULT_L, DEFAULT_PRECISION};
pub use report::{Entry, Report, Value, Verdict};
pub use verify::{
    display_mismatches, verify_paper, VerifyInputs, DISPLAYED_PSI_P, DISPLAYED_PSI_Q,
};

use crate::construction::paper_generators;
use crate::error::{Error, Result};
use crate::linalg::RingMat2;
use crate::probe::DEFAULT_DEPTH_CAP;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(
    name = "sl2prod",
    version,
    about = "Exact checks for a free subgroup of SL(2,R) x SL(2,C)"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// TOML file with defaults for N, L, kappa, k, bound, count, threads.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce the displayed matrices, identities and certificates.
    VerifyPaper {
        #[arg(long = "N")]
        n: Option<u64>,
        #[arg(long = "L")]
        l: Option<u32>,
        /// Replace a generator: `P=<matrix>` or `Q=<matrix>`.
        #[arg(long = "override", value_name = "NAME=MATRIX")]
        overrides: Vec<String>,
    },
    /// Classify σ_k(A) for one embedding or all four.
    Classify {
        matrix: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print the regular representation Φ_κ(A).
    Repr {
        matrix: String,
        #[arg(long)]
        kappa: Option<u32>,
    },
    /// Discreteness margin of ⟨Pᴺ, Qᴺ⟩ for word lengths 1..=L.
    Margin {
        #[arg(long = "N")]
        n: Option<u64>,
        #[arg(long = "L")]
        l: Option<u32>,
    },
    /// Ping-pong certificate for the σ₂ views of Pᴺ, Qᴺ.
    Certify {
        #[arg(long = "N")]
        n: Option<u64>,
    },
    /// Search integer candidates for the limit construction.
    Search {
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        count: Option<usize>,
        /// JSON file `{"u": [...], "v": [...]}` with the target matrices.
        #[arg(long)]
        targets: Option<PathBuf>,
    },
    /// Closed forms for Qⁿ σ₂(A) Q⁻ⁿ.
    Conjugate {
        matrix: String,
        #[arg(long)]
        n: i64,
    },
    /// Evaluate the inequality probes on A.
    ProbeInequality {
        matrix: String,
        #[arg(long)]
        which: Option<u32>,
    },
}

/// Outcome of one invocation: exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage_error(msg: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: msg,
    }
}

fn parse_matrix(arg: &str, s: &str) -> Result<RingMat2> {
    RingMat2::parse(s).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos,
            msg: format!("{arg}: {msg}\n  {s}\n  {}^", " ".repeat(pos)),
        },
        e => e,
    })
}

fn generators_with(overrides: &[String]) -> Result<(RingMat2, RingMat2)> {
    let (mut p, mut q) = paper_generators();
    for o in overrides {
        match o.split_once('=') {
            Some(("P", m)) => p = parse_matrix("P", m)?,
            Some(("Q", m)) => q = parse_matrix("Q", m)?,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "--override expects P=<matrix> or Q=<matrix>, got '{o}'"
                )))
            }
        }
    }
    Ok((p, q))
}

fn dispatch(cmd: &Command, file: &FileConfig) -> Result<Report> {
    use config::pick;
    match cmd {
        Command::VerifyPaper { n, l, overrides } => {
            let (p, q) = generators_with(overrides)?;
            Ok(verify_paper(&VerifyInputs {
                p,
                q,
                l: pick(*l, file.l, DEFAULT_L),
                n: n.or(file.n),
            }))
        }
        Command::Classify { matrix, k } => {
            commands::classify_cmd(&parse_matrix("matrix", matrix)?, k.or(file.k))
        }
        Command::Repr { matrix, kappa } => commands::repr_cmd(matrix, pick(*kappa, file.kappa, 4)),
        Command::Margin { n, l } => commands::margin_cmd(
            n.or(file.n),
            pick(*l, file.l, DEFAULT_L),
            file.depth_cap.unwrap_or(DEFAULT_DEPTH_CAP),
        ),
        Command::Certify { n } => commands::certify_cmd(n.or(file.n)),
        Command::Search {
            bound,
            count,
            targets,
        } => {
            let targets = match targets {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
                    })?;
                    Some(parse_targets(&text)?)
                }
                None => None,
            };
            commands::search_cmd(
                pick(*bound, file.bound, DEFAULT_BOUND),
                pick(*count, file.count, DEFAULT_COUNT),
                targets,
            )
        }
        Command::Conjugate { matrix, n } => {
            commands::conjugate_cmd(&parse_matrix("matrix", matrix)?, *n)
        }
        Command::ProbeInequality { matrix, which } => {
            commands::probe_inequality_cmd(&parse_matrix("matrix", matrix)?, *which)
        }
    }
}

/// Runs the CLI on `args` (including the program name) without touching the
/// process streams.
pub fn run_captured<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                usage_error(text)
            };
        }
    };
    let file = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(f) => f,
            Err(e) => return usage_error(format!("error: {e}\n")),
        },
        None => FileConfig::default(),
    };
    let threads = cli.threads.or(file.threads).unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => return usage_error(format!("error: cannot start thread pool: {e}\n")),
    };
    let start = Instant::now();
    let result = pool.install(|| dispatch(&cli.command, &file));
    match result {
        Ok(mut rep) => {
            if cli.timing {
                rep.elapsed_ms = Some(start.elapsed().as_millis());
            }
            let mut stdout = if cli.json {
                rep.to_json()
            } else {
                rep.to_text()
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: rep.exit_code(),
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => usage_error(format!("error: {e}\n")),
    }
}

/// Entry point for the binary: prints and returns the exit code.
pub fn run() -> i32 {
    let out = run_captured(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
