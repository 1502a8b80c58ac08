//! `arcgrid`: build, convert, decide and verify circular-arc and grid-path
//! representations from the command line.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use report::error_json;

#[derive(Parser, Debug)]
#[command(name = "arcgrid", version, about = "Circular-arc graphs as paths on grids and rectangles")]
pub struct Cli {
    /// Seed for the random generators
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the produced file here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    B3epg,
    B4epr,
    B2epr,
    B1epr,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a family member as .arcs, .graph or .paths
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Convert arc models into grid or rectangle path models
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        /// One or more .arcs files
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Write one .paths file per input into this directory
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Report normality, the Helly property, four points and chordality of
    /// an arc model, or evaluate the containment criterion
    #[command(group(ArgGroup::new("what").required(true).multiple(true).args(["input", "criterion"])))]
    Analyze {
        input: Option<PathBuf>,
        /// Does C_N^K contain C_{4T-1}^T as an induced subgraph?
        #[arg(long, num_args = 3, value_names = ["N", "K", "T"])]
        criterion: Option<Vec<u64>>,
    },
    /// Decide whether the graph of an arc model has a one-bend rectangle model
    Decide { input: PathBuf },
    /// Search for an induced copy of a family member
    Subgraph {
        /// A .arcs or .graph file
        input: PathBuf,
        #[arg(long, num_args = 3, value_names = ["FAMILY", "N", "K"], required = true)]
        target: Vec<String>,
    },
    /// Check a .paths file against the graph of a .arcs or .graph file
    Verify {
        paths: PathBuf,
        #[arg(long)]
        against: PathBuf,
        #[arg(long)]
        max_bends: Option<usize>,
        /// Require a valid rectangle model
        #[arg(long)]
        epr: bool,
        /// Require the rectangle model to read back as a normal Helly model
        #[arg(long)]
        nh: bool,
    },
    /// Draw a .paths file
    #[command(group(ArgGroup::new("style").required(true).args(["svg", "ascii"])))]
    Render {
        input: PathBuf,
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        ascii: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// The k-th power of the n-cycle
    CyclePower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Emit the canonical arc model instead of the graph
        #[arg(long)]
        model: bool,
    },
    /// The thick spider on 2n vertices
    Spider {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        model: bool,
    },
    /// A random arc model with uniformly shuffled endpoints
    RandomCa {
        #[arg(long)]
        n: usize,
    },
    /// A random model whose arcs avoid point 0
    Interval {
        #[arg(long)]
        n: usize,
    },
    /// A hand-derived spider path model
    Fixture {
        #[arg(long, value_parser = ["s3-b1epg", "s6-b2epr", "s7-b3epr", "s7-b2epg"])]
        which: String,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let command = argv[1..].to_vec();
    match commands::run(&cli) {
        Ok(mut report) => {
            report.command = command;
            let wrote = match (&cli.out, &report.artifact) {
                (Some(path), Some(artifact)) => {
                    if let Err(e) = std::fs::write(path, artifact) {
                        return input_error(&cli, &report.command, &format!("{}: {e}", path.display()));
                    }
                    true
                }
                _ => false,
            };
            match cli.format {
                Format::Json => {
                    let v = report.to_json(!wrote);
                    emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("reports serialize")));
                }
                Format::Text => match (&report.artifact, wrote) {
                    (Some(artifact), false) => {
                        emit(artifact);
                        eprint!("{}", report.to_text());
                    }
                    _ => emit(&report.to_text()),
                },
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(message) => input_error(&cli, &command, &message),
    }
}

/// Writes to standard output, ignoring a reader that went away.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn input_error(cli: &Cli, command: &[String], message: &str) -> ExitCode {
    if cli.format == Format::Json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&error_json(command, message)).expect("reports serialize")));
    }
    eprintln!("error: {message}");
    ExitCode::from(2)
}
