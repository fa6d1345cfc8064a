//! Command-line surface for `quiver-pi`.
//!
//! Exit codes: 0 success, 2 parse error, 3 invalid bound quiver, 4 rejected
//! substitution, 5 bad construction parameters, 6 failed operation,
//! 7 failed certification.

pub mod commands;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INVALID: u8 = 3;
pub const EXIT_SUBSTITUTION: u8 = 4;
pub const EXIT_PARAMS: u8 = 5;
pub const EXIT_OPERATION: u8 = 6;
pub const EXIT_CERTIFICATION: u8 = 7;

pub const DEFAULT_ORDER_CAP: usize = 100_000;

#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

/// What a command prints, and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

#[derive(Debug, Parser)]
#[command(name = "quiver-pi", version, about = "Fundamental groups of bound quiver presentations")]
pub struct Cli {
    /// Worker threads for the relation engine (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fundamental group of a bound quiver file.
    Pi1(Pi1Args),
    /// Apply a substitution and write the kernel presentation.
    Change(ChangeArgs),
    /// Emit one of the built-in bound quivers.
    Construct(ConstructArgs),
    /// Coproduct, product or orbit quotient of bound quiver files.
    Op(OpArgs),
    /// One quiver with one presentation per group.
    Assemble(AssembleArgs),
    /// Validate a bound quiver file and summarize its structure.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct Pi1Args {
    pub path: PathBuf,
    /// Basepoint vertex, overriding the file.
    #[arg(long)]
    pub base: Option<String>,
    /// Also print the simplified presentation.
    #[arg(long)]
    pub simplify: bool,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ChangeArgs {
    pub quiver: PathBuf,
    /// Substitution JSON file.
    #[arg(required_unless_present = "builtin")]
    pub substitution: Option<PathBuf>,
    /// Built-in substitution: example1, ladder_trivializer, qg_trivializer, loop_freeer.
    #[arg(long, conflicts_with = "substitution")]
    pub builtin: Option<String>,
    /// Parameters of the built-in (ladder index, loop orders).
    #[arg(long, value_delimiter = ',')]
    pub param: Vec<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: ConstructKind,
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleIdeal {
    I1,
    I2,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// `Q_G` from a group presentation file.
    Qg {
        group: PathBuf,
    },
    Ladder {
        n: usize,
    },
    LadderCover {
        n: usize,
        /// Where to write the covering action.
        #[arg(long)]
        action_out: Option<PathBuf>,
    },
    /// Loops at one vertex with the given orders, e.g. `2,3`.
    Loops {
        #[arg(value_delimiter = ',', required = true)]
        orders: Vec<usize>,
    },
    /// Three vertices, two parallel arrows.
    Parallel {
        #[arg(long, value_enum, default_value = "i1")]
        ideal: ExampleIdeal,
    },
}

#[derive(Debug, Args)]
pub struct OpArgs {
    #[command(subcommand)]
    pub kind: OpKind,
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum OpKind {
    Coproduct {
        left: PathBuf,
        right: PathBuf,
        /// Glue vertices as `left,right`.
        #[arg(long)]
        at: String,
    },
    Product {
        left: PathBuf,
        right: PathBuf,
    },
    Quotient {
        quiver: PathBuf,
        action: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Group presentation files.
    A,
    /// Group expressions such as `(Z_2 x Z_3)`.
    B,
}

#[derive(Debug, Args)]
pub struct AssembleArgs {
    #[arg(value_enum)]
    pub theorem: Theorem,
    #[arg(required = true)]
    pub inputs: Vec<String>,
    /// Directory for the quiver, ideal and report files.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub json: bool,
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Pi1(a) => commands::cmd_pi1(a),
        Command::Change(a) => commands::cmd_change(a),
        Command::Construct(a) => commands::cmd_construct(a),
        Command::Op(a) => commands::cmd_op(a),
        Command::Assemble(a) => commands::cmd_assemble(a),
        Command::Check(a) => commands::cmd_check(a),
    }
}

/// Parses arguments and runs; clap usage errors map to exit 2.
pub fn run_args<I, T>(args: I) -> (Output, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match execute(&cli) {
            Ok(out) => (out, String::new()),
            Err(e) => (Output { stdout: String::new(), code: e.code }, format!("error: {}\n", e.message)),
        },
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                (Output::ok(text), String::new())
            } else {
                (Output { stdout: String::new(), code }, text)
            }
        }
    }
}
