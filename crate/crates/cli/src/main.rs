use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use parared::report::print_report;
use parared::run::{run, Command, Overrides};
use parared::CliError;

#[derive(Parser)]
#[command(name = "parared", version, about = "Formal reduction of connections and Higgs fields over exact rationals")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Cut the input series at this exponent.
    #[arg(long, global = true)]
    truncation: Option<i64>,
    #[arg(long, global = true)]
    max_ramification: Option<i64>,
    #[arg(long, global = true)]
    budget_iterations: Option<usize>,
    /// Largest cocharacter entry tried by `borel`.
    #[arg(long, global = true)]
    search_bound: Option<i64>,
    /// Recorded in the report; the engines themselves are deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Also write the replay document (input, certificate, final form) here.
    #[arg(long, global = true, value_name = "FILE")]
    emit_certificate: Option<PathBuf>,
    /// Treat the input as a Higgs field.
    #[arg(long, global = true)]
    higgs: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce to a canonical form.
    Reduce { job: String },
    /// Highest slope.
    Slope { job: String },
    /// Regularity verdict with a parahoric witness.
    Regular { job: String },
    /// Regularity relative to the diagonal template.
    Relreg { job: String },
    /// Borel-shaped form through a bounded search.
    Borel { job: String },
    /// Leading index and the canonical representation.
    Order { job: String },
    /// Residue of the leading datum.
    Residue { job: String },
    /// Replay the certificate in a report or replay document.
    Verify { report: String },
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let (cmd, path) = match &cli.command {
        Cmd::Reduce { job } => (Command::Reduce, job),
        Cmd::Slope { job } => (Command::Slope, job),
        Cmd::Regular { job } => (Command::Regular, job),
        Cmd::Relreg { job } => (Command::Relreg, job),
        Cmd::Borel { job } => (Command::Borel, job),
        Cmd::Order { job } => (Command::Order, job),
        Cmd::Residue { job } => (Command::Residue, job),
        Cmd::Verify { report } => (Command::Verify, report),
    };
    let o = Overrides {
        truncation: cli.truncation,
        max_ramification: cli.max_ramification,
        budget_iterations: cli.budget_iterations,
        search_bound: cli.search_bound,
        seed: cli.seed,
        higgs: cli.higgs,
    };
    let text = read_input(path)?;
    let out = run(cmd, &text, &o)?;
    if let Some(file) = &cli.emit_certificate {
        let replay = out
            .report
            .replay
            .as_ref()
            .ok_or_else(|| CliError::Io(format!("{} produces no certificate", cmd.name())))?;
        let mut s = serde_json::to_string_pretty(replay).expect("replay serializes");
        s.push('\n');
        std::fs::write(file, s).map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    }
    print!("{}", print_report(&out.report));
    Ok(out.status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            print!("{}", e.record());
            eprintln!("parared: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
