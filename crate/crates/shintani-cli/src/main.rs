use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use shintani_cli::commands::{
    cmd_classnumber, cmd_decompose, cmd_table, cmd_validate, parse_wk_map, precision_cap, ClassNumberArgs, Done,
    TableArgs, TableFormat,
};
use shintani_cli::selftest::{selftest, SelftestOptions};
use shintani_cli::CliError;

/// Shintani domains, Hecke L-value decompositions and class numbers of F(sqrt(-p)).
///
/// Exit codes: 0 success, 1 self-test mismatch or internal error, 2 parse or validation
/// failure, 3 violated hypothesis, 4 undecided sign at the precision cap, 5 non-integral h_K.
#[derive(Parser)]
#[command(name = "shintani", version)]
struct Cli {
    /// Cap in bits for adaptive sign determination [env: SHINTANI_PRECISION_CAP, default 4096]
    #[arg(long, global = true)]
    precision_cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a field file and print the validation report.
    Validate {
        #[arg(long)]
        field: PathBuf,
    },
    /// Evaluate the class number formula for K = F(sqrt(-p)) with every intermediate table.
    Classnumber {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        prime: u64,
        /// Number of roots of unity in K.
        #[arg(long = "wk")]
        w_k: u64,
        /// Unit index; computed from the fundamental units when omitted.
        #[arg(long)]
        q1: Option<u64>,
        /// Hasse unit index; the field file's value (default 1) when omitted.
        #[arg(long)]
        q2: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the Shintani zeta terms of the character chi_k of order d modulo pO_F.
    Decompose {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long = "char-k")]
        k: u64,
        #[arg(long = "char-d")]
        d: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Class numbers for every covered inert prime p = 3 (mod 4) in a range.
    Table {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        pmin: u64,
        #[arg(long)]
        pmax: u64,
        /// JSON object mapping each prime to w_K or to {"w_k": .., "q1": .., "q2": ..}.
        #[arg(long)]
        wk_map: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the embedded examples and the n = 1 battery against stored values.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn emit(done: &Done, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, &done.doc)?,
        None => std::io::stdout().write_all(done.doc.as_bytes())?,
    }
    if let Some(m) = &done.message {
        eprintln!("{m}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cap = precision_cap(cli.precision_cap)?;
    let (done, out) = match cli.command {
        Command::Validate { field } => (cmd_validate(&field, cap)?, None),
        Command::Classnumber { field, prime, w_k, q1, q2, out } => {
            (cmd_classnumber(&field, &ClassNumberArgs { prime, w_k, q1, q2, cap })?, out)
        }
        Command::Decompose { field, prime, k, d, out } => (cmd_decompose(&field, prime, k, d, cap)?, out),
        Command::Table { field, pmin, pmax, wk_map, format, jobs, out } => {
            let text = std::fs::read_to_string(&wk_map)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", wk_map.display())))?;
            let format = match format {
                Format::Csv => TableFormat::Csv,
                Format::Json => TableFormat::Json,
            };
            let args = TableArgs { pmin, pmax, wk_map: parse_wk_map(&text)?, format, jobs, cap };
            (cmd_table(&field, &args)?, out)
        }
        Command::Selftest => {
            for line in selftest(&SelftestOptions::default())? {
                println!("{line}");
            }
            println!("selftest passed");
            return Ok(0);
        }
    };
    emit(&done, out.as_ref())?;
    Ok(done.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
