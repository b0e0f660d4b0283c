use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use pasf_cli::report::error_json;
use pasf_cli::{commands, CliError, EXIT_INPUT};

#[derive(Parser)]
#[command(
    name = "pasf",
    version,
    about = "Check and construct approximate Schauder frames on finite-dimensional lp spaces"
)]
struct Cli {
    /// Relative singularity and comparison tolerance.
    #[arg(long, global = true, env = "PASF_TOL", default_value_t = 1e-9, value_parser = parse_tol)]
    tol: f64,
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the frame property and report optimal bounds.
    Validate { file: PathBuf },
    /// Compute the canonical dual (f_k S^-1, S^-1 tau_k).
    CanonicalDual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether the second frame is a dual of the first.
    CheckDual { file1: PathBuf, file2: PathBuf },
    /// Check whether two frames are orthogonal.
    CheckOrthogonal { file1: PathBuf, file2: PathBuf },
    /// Decide similarity and print the witnesses.
    Similarity { file1: PathBuf, file2: PathBuf },
    /// Stitch two orthogonal Parseval frames with scalars a,b,c,d (ca + db = 1).
    Interpolate {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_parser = parse_scalars, allow_hyphen_values = true)]
        scalars: [f64; 4],
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw duals from the (U, V) parameterization.
    SampleDuals {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Factor the frame operator as S = VU through the sequence space.
    Factorize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("expected a positive number, found {s:?}")),
    }
}

fn parse_scalars(s: &str) -> Result<[f64; 4], String> {
    let parts: Result<Vec<f64>, _> = s.split(',').map(|p| p.trim().parse::<f64>()).collect();
    match parts {
        Ok(v) if v.len() == 4 && v.iter().all(|x| x.is_finite()) => Ok([v[0], v[1], v[2], v[3]]),
        _ => Err(format!(
            "expected four comma-separated numbers a,b,c,d, found {s:?}"
        )),
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::CanonicalDual { .. } => "canonical-dual",
            Command::CheckDual { .. } => "check-dual",
            Command::CheckOrthogonal { .. } => "check-orthogonal",
            Command::Similarity { .. } => "similarity",
            Command::Interpolate { .. } => "interpolate",
            Command::SampleDuals { .. } => "sample-duals",
            Command::Factorize { .. } => "factorize",
        }
    }

    fn inputs(&self) -> Vec<String> {
        let files: Vec<&PathBuf> = match self {
            Command::Validate { file }
            | Command::CanonicalDual { file, .. }
            | Command::SampleDuals { file, .. }
            | Command::Factorize { file, .. } => vec![file],
            Command::CheckDual { file1, file2 }
            | Command::CheckOrthogonal { file1, file2 }
            | Command::Similarity { file1, file2 }
            | Command::Interpolate { file1, file2, .. } => vec![file1, file2],
        };
        files.into_iter().map(|p| p.display().to_string()).collect()
    }

    fn run(&self, tol: f64) -> Result<pasf_cli::report::Report, CliError> {
        match self {
            Command::Validate { file } => commands::validate(file, tol),
            Command::CanonicalDual { file, out } => commands::canonical(file, out.as_deref(), tol),
            Command::CheckDual { file1, file2 } => commands::check_dual(file1, file2, tol),
            Command::CheckOrthogonal { file1, file2 } => {
                commands::check_orthogonal(file1, file2, tol)
            }
            Command::Similarity { file1, file2 } => commands::similarity(file1, file2, tol),
            Command::Interpolate {
                file1,
                file2,
                scalars,
                out,
            } => commands::interpolate(file1, file2, *scalars, out.as_deref(), tol),
            Command::SampleDuals {
                file,
                count,
                seed,
                out_dir,
            } => commands::sample_duals(file, *count, *seed, out_dir.as_deref(), tol),
            Command::Factorize { file, out } => commands::factorize(file, out.as_deref(), tol),
        }
    }
}

// A closed pipe (e.g. `pasf ... | head`) must not turn into a panic.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INPUT),
            };
        }
    };
    match cli.command.run(cli.tol) {
        Ok(report) => {
            if cli.json {
                write_stdout(&format!("{}\n", report.to_json()));
            } else {
                write_stdout(&report.to_human());
            }
            ExitCode::from(report.exit_code)
        }
        Err(err) => {
            if cli.json {
                let envelope = error_json(cli.command.name(), &cli.command.inputs(), cli.tol, &err);
                write_stdout(&format!("{envelope}\n"));
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(err.exit_code())
        }
    }
}
