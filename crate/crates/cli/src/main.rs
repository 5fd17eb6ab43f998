use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use treedist::{Format, DEFAULT_CLASS_CAP};
use treedist_cli::commands::{self, AnalyzeOptions, ColorOptions, CountOptions};
use treedist_cli::report::AnalysisReport;
use treedist_cli::{exit, retain_heap, Failure, Input};

/// Distinguishing colorings of trees: parameters, exact counts, witnesses.
#[derive(Debug, Parser)]
#[command(name = "treedist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    /// One edge per line: two labels separated by whitespace.
    EdgeList,
    /// Balanced parentheses, one pair per vertex.
    Parens,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Format {
        match f {
            InputFormat::EdgeList => Format::EdgeList,
            InputFormat::Parens => Format::Parens,
        }
    }
}

#[derive(Debug, Args)]
struct Common {
    /// Tree file; stdin when absent or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: InputFormat,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

impl Common {
    fn read(&self) -> Result<Input, Failure> {
        commands::read_input(self.input.as_deref(), self.format.into())
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// D, chi_D, the certificate, and optionally witnesses and counts.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Also print a distinguishing and a proper distinguishing coloring.
        #[arg(long)]
        witness: bool,
        /// Also print the exact class counts for K colors.
        #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
        counts: Option<u64>,
        /// Analyze every file in DIR, in file name order, in parallel.
        #[arg(long, value_name = "DIR", conflicts_with = "input")]
        batch: Option<PathBuf>,
    },
    /// Count classes of (proper, list) distinguishing colorings.
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
        #[arg(long)]
        proper: bool,
        /// List file, `label: c1,c2,...` per line.
        #[arg(long, value_name = "FILE")]
        list: Option<PathBuf>,
        /// Bound on representative classes per vertex in list mode.
        #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
        class_cap: usize,
    },
    /// Print a witness coloring, or the class with a given index.
    Color {
        #[command(flatten)]
        common: Common,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
        #[arg(long)]
        proper: bool,
        #[arg(long, value_name = "FILE")]
        list: Option<PathBuf>,
        /// Zero-based class index on the rooted tree.
        #[arg(long, value_name = "I")]
        index: Option<BigUint>,
        #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
        class_cap: usize,
    },
    /// Print the certificate for chi_D = D + 1, if there is one.
    Certify {
        #[command(flatten)]
        common: Common,
    },
    /// Check a coloring given as `label color` lines.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        /// Also require the coloring to be proper.
        #[arg(long)]
        proper: bool,
    },
    /// Run the built-in acceptance checks.
    Selftest {
        /// Cap the exhaustive sweeps at N vertices.
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn emit<R: Serialize>(
    json: bool,
    report: &R,
    text: impl FnOnce(&R) -> String,
) -> Result<(), Failure> {
    if json {
        let s = serde_json::to_string_pretty(report).map_err(|e| Failure::new(exit::INPUT, e))?;
        println!("{s}");
    } else {
        print!("{}", text(report));
    }
    Ok(())
}

fn read_optional(path: Option<&Path>) -> Result<Option<String>, Failure> {
    path.map(|p| commands::read_text(Some(p))).transpose()
}

fn batch(
    dir: &Path,
    common: &Common,
    opts: AnalyzeOptions,
) -> Result<Vec<AnalysisReport>, Failure> {
    let read = |e: std::io::Error| {
        Failure::new(
            exit::INPUT,
            anyhow!(e).context(format!("reading {}", dir.display())),
        )
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(read)? {
        let path = entry.map_err(read)?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    let format = common.format.into();
    files
        .par_iter()
        .map(|p| {
            let input = commands::read_input(Some(p), format)
                .map_err(|f| Failure::new(f.code, f.error.context(p.display().to_string())))?;
            commands::analyze(&input, opts)
        })
        .collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze {
            common,
            witness,
            counts,
            batch: dir,
        } => {
            let opts = AnalyzeOptions { witness, counts };
            match dir {
                Some(dir) => {
                    let reports = batch(&dir, &common, opts)?;
                    emit(common.json, &reports, |rs| {
                        rs.iter()
                            .map(AnalysisReport::text)
                            .collect::<Vec<_>>()
                            .join("\n")
                    })?;
                }
                None => emit(
                    common.json,
                    &commands::analyze(&common.read()?, opts)?,
                    AnalysisReport::text,
                )?,
            }
        }
        Command::Count {
            common,
            k,
            proper,
            list,
            class_cap,
        } => {
            let opts = CountOptions {
                k,
                proper,
                lists: read_optional(list.as_deref())?,
                class_cap,
            };
            let report = commands::count(&common.read()?, &opts)?;
            emit(common.json, &report, |r| r.text())?;
        }
        Command::Color {
            common,
            k,
            proper,
            list,
            index,
            class_cap,
        } => {
            let opts = ColorOptions {
                k,
                proper,
                lists: read_optional(list.as_deref())?,
                index,
                class_cap,
            };
            let report = commands::color(&common.read()?, &opts)?;
            emit(common.json, &report, |r| r.text())?;
        }
        Command::Certify { common } => {
            emit(common.json, &commands::certify(&common.read()?)?, |r| {
                r.text()
            })?;
        }
        Command::Verify {
            common,
            coloring,
            proper,
        } => {
            let text = commands::read_text(Some(&coloring))?;
            let report = commands::verify(&common.read()?, &text, proper)?;
            emit(common.json, &report, |r| r.text())?;
            if !report.passed {
                return Ok(exit::FAILED);
            }
        }
        Command::Selftest { max_n, json } => {
            retain_heap();
            let report = commands::selftest(max_n);
            emit(json, &report, |r| r.text())?;
            if !report.passed {
                return Ok(exit::FAILED);
            }
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
