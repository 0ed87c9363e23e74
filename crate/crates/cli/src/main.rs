use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rootloci::moduli::{presentation, ModuliError};
use rootloci::partition::{partitions, Partition};
use rootloci::thom::{hilbert_degree, projective_degree, tp_reduce};
use rootloci_cli::moduli_output::{self, SpaceChoice};
use rootloci_cli::record::{run_tp, MethodChoice, RecordError, TpRecord};
use rootloci_cli::size_warning;
use rootloci_cli::verify::{run_verify, Suite};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "rootloci",
    version,
    about = "Thom polynomials of coincident root loci and cohomology of binary-form quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Thom polynomial of one locus.
    Tp {
        /// Partition, as "3,1,1,1" or "1^3 3".
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodChoice,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Degree of the projectivized locus.
    Degree {
        #[arg(long)]
        lambda: String,
    },
    /// Thom polynomials of every partition of d.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Presentation and Poincaré series of a moduli space.
    Moduli {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        d: u64,
        #[arg(long, value_enum)]
        space: SpaceChoice,
        /// Highest degree of the series check (default 2d).
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check every algorithm and identity up to max-d.
    Verify {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        max_d: u64,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Worker threads; 0 uses every available core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn failure(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_VERIFICATION)
}

fn warn_size(d: usize) {
    if let Some(w) = size_warning(d) {
        eprintln!("{w}");
    }
}

fn parse_lambda(text: &str) -> Result<Partition, ExitCode> {
    Partition::parse(text).map_err(|e| usage(format!("invalid partition {text:?}: {e}")))
}

fn record_failure(e: RecordError) -> ExitCode {
    failure(e)
}

fn cmd_tp(lambda: &str, method: MethodChoice, format: Format) -> ExitCode {
    let lambda = match parse_lambda(lambda) {
        Ok(l) => l,
        Err(code) => return code,
    };
    warn_size(lambda.d());
    match run_tp(&lambda, method) {
        Ok(rec) => {
            match format {
                Format::Text => print!("{}", rec.to_text()),
                Format::Json => println!("{}", rec.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => record_failure(e),
    }
}

fn cmd_degree(lambda: &str) -> ExitCode {
    let lambda = match parse_lambda(lambda) {
        Ok(l) => l,
        Err(code) => return code,
    };
    warn_size(lambda.d());
    let degree = match tp_reduce(&lambda).and_then(|tp| projective_degree(&tp)) {
        Ok(deg) => deg,
        Err(e) => return failure(e),
    };
    let expected = hilbert_degree(&lambda);
    if degree != expected {
        return failure(format!(
            "degree {degree} differs from the Hilbert formula {expected}"
        ));
    }
    println!("{degree}");
    ExitCode::SUCCESS
}

fn cmd_table(d: usize, format: Format) -> ExitCode {
    warn_size(d);
    let mut records: Vec<TpRecord> = Vec::new();
    for lambda in partitions(d) {
        match run_tp(&lambda, MethodChoice::All) {
            Ok(rec) => records.push(rec),
            Err(e) => return record_failure(e),
        }
    }
    match format {
        Format::Text => {
            println!("lambda\tcodim\ttp\tdegree");
            for rec in &records {
                println!("{}", rec.to_row());
            }
        }
        Format::Json => {
            for rec in &records {
                println!("{}", rec.to_json());
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_moduli(d: usize, space: SpaceChoice, bound: Option<usize>, format: Format) -> ExitCode {
    let pres = match presentation(d, space.into(), bound.unwrap_or(2 * d)) {
        Ok(p) => p,
        Err(e @ ModuliError::Unsupported { .. }) => {
            let hint = if d % 2 == 1 && matches!(space, SpaceChoice::Stable) {
                "; for odd d every semistable form is stable, use --space ss-quotient"
            } else {
                ""
            };
            return usage(format!("{e}{hint}"));
        }
        Err(e) => return failure(e),
    };
    match format {
        Format::Text => print!("{}", moduli_output::to_text(&pres)),
        Format::Json => println!("{}", moduli_output::to_json(&pres)),
    }
    if pres.series_verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION)
    }
}

fn cmd_verify(max_d: usize, suite: Suite, jobs: usize) -> ExitCode {
    warn_size(max_d);
    let summary = match run_verify(max_d, suite, jobs) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    for f in &summary.failures {
        println!("FAIL {} {}: {}", f.check, f.subject, f.detail);
    }
    println!(
        "{}",
        serde_json::to_string(&summary).expect("summary serializes")
    );
    if summary.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Tp {
            lambda,
            method,
            format,
        } => cmd_tp(&lambda, method, format),
        Command::Degree { lambda } => cmd_degree(&lambda),
        Command::Table { d, format } => cmd_table(d as usize, format),
        Command::Moduli {
            d,
            space,
            bound,
            format,
        } => cmd_moduli(d as usize, space, bound, format),
        Command::Verify { max_d, suite, jobs } => cmd_verify(max_d as usize, suite, jobs),
    }
}
