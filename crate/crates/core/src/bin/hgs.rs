//! Command-line front end. Exit codes: 0 success, 2 a check failed,
//! 3 bad input.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopf_galois::report::{cmd_discover, cmd_hamiltonian, cmd_paper_example, Report};

#[derive(Parser)]
#[command(name = "hgs", version, about = "Hopf-Galois structures on separable extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Degree-8 example: S4 acting on the cosets of a 3-cycle subgroup.
    PaperExample {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Structures for a group and subgroup given by generators.
    Discover {
        /// Generators in cycle notation separated by ';', e.g. "(1,2,3,4);(1,2)".
        #[arg(long)]
        group: String,
        /// Generators of the subgroup; empty for the trivial subgroup.
        #[arg(long, default_value = "")]
        subgroup: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// λ(Q8) against ρ(Q8).
    Hamiltonian {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn emit(report: &Report, format: Format) -> ExitCode {
    let body = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    if let Some(c) = report.first_failure() {
        eprintln!("check failed: {}: {}", c.name, c.detail);
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(3);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let (result, failure_code, format) = match cli.command {
        Command::PaperExample { format } => (cmd_paper_example(), 2, format),
        Command::Hamiltonian { format } => (cmd_hamiltonian(), 2, format),
        Command::Discover {
            group,
            subgroup,
            format,
        } => (cmd_discover(&group, &subgroup), 3, format),
    };
    match result {
        Ok(report) => emit(&report, format),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(failure_code)
        }
    }
}
