use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cli_reports::{emit_report, parse_suites, parse_tolerance, run_suite, Format, Suite, SuiteConfig};
use manifold_core::manifold::BUILTIN_NAMES;
use manifold_core::ChartedManifold;

#[derive(Parser)]
#[command(name = "akv", version, about = "Almost-Kahler current algebra and BRST verifier")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run identity and algebra suites on a built-in manifold
    Verify {
        #[arg(long)]
        manifold: String,
        /// comma-separated suite names, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// <suite>=<value>, repeatable
        #[arg(long)]
        tolerance: Vec<String>,
        #[arg(long, value_enum, default_value_t = Fmt::Text)]
        format: Fmt,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Built-in manifolds
    Manifolds {
        #[command(subcommand)]
        cmd: ManifoldCmd,
    },
}

#[derive(Subcommand)]
enum ManifoldCmd {
    List,
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Text,
    Json,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("akv: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Manifolds { cmd: ManifoldCmd::List } => {
            for n in BUILTIN_NAMES {
                println!("{n}");
            }
            ExitCode::SUCCESS
        }
        Cmd::Manifolds { cmd: ManifoldCmd::Show { name } } => match ChartedManifold::builtin(&name) {
            Ok(m) => {
                print!("{}", show(&m));
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Cmd::Verify { manifold, suite, points, seed, tolerance, format, out } => {
            let suites: Vec<Suite> = match parse_suites(&suite) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let mut overrides = BTreeMap::new();
            for t in &tolerance {
                match parse_tolerance(t) {
                    Ok((s, v)) => {
                        overrides.insert(s, v);
                    }
                    Err(e) => return usage(e),
                }
            }
            let cfg = SuiteConfig { manifold, suites, points, seed, tolerance_overrides: overrides };
            let report = match run_suite(&cfg) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let fmt = match format {
                Fmt::Text => Format::Text,
                Fmt::Json => Format::Json,
            };
            let written = match &out {
                Some(p) => File::create(p).and_then(|mut f| emit_report(&report, fmt, &mut f)),
                None => emit_report(&report, fmt, &mut io::stdout().lock()),
            };
            if let Err(e) = written {
                eprintln!("akv: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if out.is_some() && matches!(fmt, Format::Json) {
                let _ = io::stdout().write_all(report.to_text().lines().last().unwrap_or("").as_bytes());
                println!();
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn show(m: &ChartedManifold) -> String {
    let mut s = format!("{} (dim {})\ncoordinates:", m.name, m.dim);
    for (c, (lo, hi)) in m.coordinate_names.iter().zip(&m.sample_domain) {
        s += &format!(" {c} in [{lo}, {hi}]");
    }
    s += "\n";
    for (label, f) in &m.tensor_fields {
        s += &format!("{label} ({},{}):\n", f.valence.0, f.valence.1);
        let row = if f.rank() == 2 { m.dim } else { f.sources.len().max(1) };
        for chunk in f.sources.chunks(row) {
            s += &format!("  [{}]\n", chunk.join(", "));
        }
    }
    s
}
