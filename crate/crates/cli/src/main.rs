//! `spfkit` command line.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on a usage
//! or precondition error.

mod commands;
mod output;
mod parse;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use serde_json::Value;

use commands::Command;
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "spfkit", version, about = "Simple partial fractions: construction, approximation and checks")]
struct Cli {
    /// JSON file holding a command and its arguments; flags given here win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for the randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Default)]
struct Config {
    out: Option<PathBuf>,
    format: Option<Format>,
    seed: Option<u64>,
    command: Option<Command>,
}

fn load_config(path: &Path) -> Result<Config> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let map = v.as_object_mut().ok_or_else(|| anyhow!("config must be a JSON object"))?;
    let out = map.remove("out").map(serde_json::from_value).transpose()?;
    let format = map.remove("format").map(serde_json::from_value).transpose()?;
    let seed = map.remove("seed").map(serde_json::from_value).transpose()?;
    let command = if map.contains_key("command") {
        Some(serde_json::from_value(v).context("config command")?)
    } else {
        None
    };
    Ok(Config { out, format, seed, command })
}

fn init_threads() -> Result<()> {
    if let Ok(s) = std::env::var("SPFKIT_THREADS") {
        let n: usize = s.parse().with_context(|| format!("SPFKIT_THREADS must be a positive integer, got {s:?}"))?;
        if n == 0 {
            bail!("SPFKIT_THREADS must be a positive integer, got 0");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    init_threads()?;
    let cfg = match &cli.config {
        Some(p) => load_config(p)?,
        None => Config::default(),
    };
    let command = cli
        .command
        .or(cfg.command)
        .ok_or_else(|| anyhow!("no command given; pass a subcommand or a config file with a \"command\" field"))?;
    let seed = cli.seed.or(cfg.seed).unwrap_or(42);
    let format = cli.format.or(cfg.format).unwrap_or_default();
    let report = command.run(seed)?;
    match cli.out.or(cfg.out) {
        Some(path) => {
            let mut w = BufWriter::new(File::create(&path).with_context(|| format!("creating {}", path.display()))?);
            report.write(format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            report.write(format, &mut w)?;
            w.flush()?;
        }
    }
    for c in report.checks.iter().filter(|c| !c.passed) {
        eprintln!("check failed: {}: {}", c.name, c.detail);
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
