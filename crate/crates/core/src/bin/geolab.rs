use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use geolab::dsl::{check_text, RunOptions, DEFAULT_SAMPLES, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "geolab", version, about = "Exact checks for structures on E^1(M)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every check of a scene file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        report: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Treat generic-pass as failure.
        #[arg(long)]
        strict: bool,
        /// Record per-check wall-clock time in `ms`.
        #[arg(long)]
        timings: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Cmd::Check { file, report, out, seed, samples, strict, timings } = cli.cmd;
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("geolab: {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let rep = match check_text(&text, &RunOptions { seed, samples, timings }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            return ExitCode::from(2);
        }
    };
    let body = match report {
        Format::Json => rep.to_json(),
        Format::Text => rep.to_text(),
    };
    match out {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, body) {
                eprintln!("geolab: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    ExitCode::from(rep.exit_code(strict) as u8)
}
