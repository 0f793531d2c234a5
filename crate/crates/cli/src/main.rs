//! `cohint`: command-line front end for the cohint library.
//!
//! Exit codes: 0 success, 1 invalid input or exceeded bound, 2 invariant violation.

mod commands;
mod report;
mod schema;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cohint::facelat::Bounds;
use report::{provenance_comment, Envelope, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] cohint::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn status(&self) -> &'static str {
        match self {
            CliError::Core(e) if e.is_invariant_violation() => "invariant_violation",
            _ => "invalid",
        }
    }

    fn exit_code(&self) -> u8 {
        if self.status() == "invariant_violation" {
            2
        } else {
            1
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cohint",
    version,
    about = "Cohomological integrality computations for reductive groups, quivers and bundles"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized batteries.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct BoundArgs {
    /// Largest face dimension for chamber enumeration.
    #[arg(long, default_value_t = 4)]
    max_dim: usize,
    /// Largest number of hyperplanes in an arrangement.
    #[arg(long, default_value_t = 64)]
    max_hyperplanes: usize,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds { max_dim: self.max_dim, max_hyperplanes: self.max_hyperplanes }
    }

    fn json(&self) -> Value {
        json!({ "max_dim": self.max_dim, "max_hyperplanes": self.max_hyperplanes })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hyperplane arrangement, special faces, relative Weyl groups and signs.
    Faces {
        /// Inline JSON (starting with `{`) or a path.
        input: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Symmetry, orthogonality and irreducible decomposition of a representation.
    Sym { input: String },
    /// Cohomological induction of a polynomial from a face.
    Cohi {
        input: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Degree-by-degree integrality check for BG.
    BgCheck { input: String },
    /// BPS invariants of a quiver with zero potential.
    Bps {
        input: String,
        /// Dimension-vector box, one entry per vertex or a single entry for all.
        #[arg(long, value_delimiter = ',')]
        gamma_max: Vec<u32>,
        /// Window in powers of q.
        #[arg(long, env = "COHINT_WINDOW", default_value_t = 30)]
        window: u32,
        /// Compare against expected values; a mismatch exits with 2.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Record the computed values as a golden file.
        #[arg(long, conflicts_with = "golden")]
        write_golden: Option<PathBuf>,
    },
    /// Intersection Poincaré polynomial of the moduli of semistable bundles.
    BunIh {
        input: String,
        /// Print the Betti numbers as a LaTeX table.
        #[arg(long)]
        latex: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Faces { .. } => "faces",
            Command::Sym { .. } => "sym",
            Command::Cohi { .. } => "cohi",
            Command::BgCheck { .. } => "bg-check",
            Command::Bps { .. } => "bps",
            Command::BunIh { .. } => "bun-ih",
        }
    }

    fn input(&self) -> &str {
        match self {
            Command::Faces { input, .. }
            | Command::Sym { input }
            | Command::Cohi { input, .. }
            | Command::BgCheck { input }
            | Command::Bps { input, .. }
            | Command::BunIh { input, .. } => input,
        }
    }
}

fn read_input(arg: &str) -> Result<Vec<u8>, CliError> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.as_bytes().to_vec())
    } else {
        std::fs::read(arg).map_err(|e| CliError::Io(format!("cannot read `{arg}`: {e}")))
    }
}

fn run(cli: &Cli, raw: &str) -> (Value, Result<commands::Done, CliError>) {
    match &cli.command {
        Command::Faces { bounds, .. } => (bounds.json(), commands::faces(raw, bounds.bounds())),
        Command::Sym { .. } => (json!({ "weyl_bound": commands::weyl_bound() }), commands::sym(raw)),
        Command::Cohi { bounds, .. } => {
            let mut b = bounds.json();
            b["seed"] = json!(cli.seed);
            (b, commands::cohi(raw, bounds.bounds(), cli.seed))
        }
        Command::BgCheck { .. } => (json!({ "weyl_bound": commands::weyl_bound() }), commands::bg_check(raw)),
        Command::Bps { gamma_max, window, golden, .. } => {
            let bounds = json!({ "gamma_max": gamma_max, "window_q_powers": window });
            if !(1..=commands::MAX_WINDOW).contains(window) {
                let e = CliError::Invalid(format!("--window must lie in 1..={}", commands::MAX_WINDOW));
                return (bounds, Err(e));
            }
            let golden = match golden.as_ref().map(std::fs::read_to_string).transpose() {
                Ok(g) => g,
                Err(e) => return (bounds, Err(CliError::Io(format!("cannot read golden file: {e}")))),
            };
            (bounds, commands::bps(raw, gamma_max, *window, golden.as_deref()))
        }
        Command::BunIh { .. } => {
            (json!({ "max_rank": schema::MAX_BUN_RANK, "max_order": schema::MAX_BUN_ORDER }), commands::bun_ih(raw))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::BunIh { latex: true, .. } => Format::Latex,
        _ => cli.format,
    };
    let name = cli.command.name();

    let (raw, bounds, outcome) = match read_input(cli.command.input()) {
        Err(e) => (Vec::new(), Value::Null, Err(e)),
        Ok(bytes) => match String::from_utf8(bytes.clone()) {
            Err(_) => (bytes, Value::Null, Err(CliError::Invalid("input is not UTF-8".into()))),
            Ok(text) => {
                let (b, r) = run(&cli, &text);
                (bytes, b, r)
            }
        },
    };

    if let (Command::Bps { write_golden: Some(path), .. }, Ok(done)) = (&cli.command, &outcome) {
        if let Err(e) = std::fs::write(path, commands::golden_from(&done.result)) {
            eprintln!("error: cannot write golden file: {e}");
            return ExitCode::from(1);
        }
    }

    let mut env = Envelope::new(name, &raw, bounds);
    let (text, code) = match outcome {
        Ok(done) => {
            let code = if let Some(msg) = &done.violation {
                eprintln!("invariant violation: {msg}");
                env.status = "invariant_violation";
                env.error = Some(msg.clone());
                2
            } else {
                0
            };
            let text = match format {
                Format::Json => {
                    env.result = Some(done.result);
                    env.to_json()
                }
                Format::Csv => provenance_comment(&env, "#") + &done.table.to_csv(),
                Format::Latex => provenance_comment(&env, "%") + &done.table.to_latex(),
            };
            (Some(text), code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            env.status = e.status();
            env.error = Some(e.to_string());
            let text = (format == Format::Json).then(|| env.to_json());
            (text, e.exit_code())
        }
    };

    if let Some(text) = text {
        let written = match &cli.output {
            Some(path) => std::fs::write(path, text.as_bytes()),
            None => std::io::stdout().lock().write_all(text.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code)
}
