use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use s6quartic::harness::{
    emit_report, exit_code, parse_alphabet, parse_rational, run_checks, OutputFormat, RunConfig,
    Selection, USAGE_EXIT_CODE,
};
use s6quartic::multipoly::parse;
use s6quartic::varieties::{is_node, scan_alphabet};
use s6quartic::{Eis, Point};

#[derive(Parser)]
#[command(
    name = "s6quartic",
    version,
    about = "Exact checks on an S6-invariant quartic family"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered checks and print a report.
    Verify {
        /// Check id to run; repeatable. Defaults to every non-exploratory check.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Config file with [run], [caps] and [alphabets] sections.
        #[arg(long)]
        config: Option<PathBuf>,
        /// `text` or `json`.
        #[arg(long)]
        format: Option<String>,
        /// Family parameter for exploratory scans; repeatable.
        #[arg(long = "t")]
        t_values: Vec<String>,
        /// Enumeration cap for alphabet scans.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// List points of Sing(X_t) whose coordinates come from an alphabet.
    Scan {
        #[arg(long = "t")]
        t: String,
        /// A configured alphabet name or a comma-separated list such as `1,-1,w`.
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Evaluate a polynomial at a point given as `[c0, ..., c5]`.
    Eval {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        point: String,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_EXIT_CODE as u8)
}

fn load_config(path: Option<&PathBuf>) -> Result<RunConfig, String> {
    match path {
        None => Ok(RunConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            RunConfig::from_config_text(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            checks,
            config,
            format,
            t_values,
            cap,
        } => {
            let mut cfg = match load_config(config.as_ref()) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            if !checks.is_empty() {
                cfg.selected = Selection::Only(checks);
            }
            if let Some(f) = format {
                match f.parse::<OutputFormat>() {
                    Ok(f) => cfg.output = f,
                    Err(e) => return usage(e),
                }
            }
            if !t_values.is_empty() {
                match t_values.iter().map(|s| parse_rational(s)).collect() {
                    Ok(ts) => cfg.t_values = ts,
                    Err(e) => return usage(e),
                }
            }
            if let Some(c) = cap {
                cfg.caps.enumeration = c;
            }
            match run_checks(&cfg) {
                Ok(records) => {
                    print!("{}", emit_report(&records, cfg.output));
                    ExitCode::from(exit_code(&records) as u8)
                }
                Err(e) => usage(e),
            }
        }
        Command::Scan { t, alphabet, cap } => {
            let cfg = RunConfig::default();
            let t = match parse_rational(&t) {
                Ok(t) => t,
                Err(e) => return usage(e),
            };
            let letters = match cfg.alphabets.get(&alphabet) {
                Some(a) => a.clone(),
                None => match parse_alphabet(&alphabet) {
                    Ok(a) if !a.is_empty() => a,
                    Ok(_) => return usage("empty alphabet"),
                    Err(e) => return usage(e),
                },
            };
            let found = match scan_alphabet(&t, &letters, cap.unwrap_or(cfg.caps.enumeration)) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            for p in &found {
                let kind = match is_node(&t, p) {
                    Ok(true) => "node",
                    Ok(false) => "non-node",
                    Err(_) => "unclassified",
                };
                println!("{p}  {kind}");
            }
            println!("{} singular point(s) on X_{t}", found.len());
            ExitCode::SUCCESS
        }
        Command::Eval { poly, point } => {
            let f = match parse::<Eis>(&poly) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let p = match Point::parse(&point) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            println!("{}", f.evaluate(p.coords()));
            ExitCode::SUCCESS
        }
    }
}
