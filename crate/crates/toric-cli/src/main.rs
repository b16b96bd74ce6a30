//! `toric` — exact invariants and containment verification for rational
//! polyhedral cones from the command line.
//!
//! Exit codes: 0 success, 1 verification failure (a serialized
//! counterexample is in the report), 2 input error, 3 internal invariant
//! breach.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use toric_cli::analyze::{analyze, VerifyOptions};
use toric_cli::family_io::{
    build_family, check_predictions, cone_spec, predictions_file, predictions_path,
    to_json_string, FamilyName,
};
use toric_cli::spec_file::ConeSpecFile;
use toric_cli::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "toric",
    about = "Exact toric-cone analysis: Hilbert bases, containment multipliers, \
             class groups, F-signatures, and machine verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Pretty-print JSON output.
    #[arg(long)]
    pretty: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a cone file: classification, Hilbert basis, multipliers,
    /// class group, and F-signature.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Analyze and additionally machine-check the containment theorem and
    /// the sharpness witness.
    Verify {
        file: PathBuf,
        /// Largest power r to verify containments for.
        #[arg(long, default_value_t = 3)]
        rmax: u32,
        /// Override the containment multiplier (negative testing).
        #[arg(long)]
        multiplier: Option<u64>,
        /// Degree budget for the saturation-search oracle.
        #[arg(long)]
        search_degree: Option<u64>,
        /// Seed for the randomized oracle spot checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit a named example family as a cone file plus a predictions
    /// sidecar.
    Family {
        /// veronese, hypersurface, or segre-veronese.
        kind: String,
        /// Degree parameter(s): one value, or a comma list for
        /// segre-veronese.
        #[arg(long = "E", value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Variable count for veronese/hypersurface.
        #[arg(long = "n")]
        n: Option<u32>,
        /// Variable counts for segre-veronese (comma list).
        #[arg(long = "m", value_delimiter = ',')]
        m: Option<Vec<u32>>,
        /// Path of the emitted cone file.
        #[arg(long)]
        out: PathBuf,
        /// Re-analyze the emitted cone and diff it against the predictions.
        #[arg(long)]
        check: bool,
        /// Pretty-print the emitted JSON.
        #[arg(long)]
        pretty: bool,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run() -> CliResult<u8> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { file, output } => {
            let spec = ConeSpecFile::load(&file)?;
            let outcome = analyze(&spec, None)?;
            emit(&outcome.report.to_json(output.pretty), output.out.as_ref())?;
            if let Some(breach) = outcome.internal_breach {
                return Err(CliError::Internal(breach));
            }
            Ok(0)
        }
        Command::Verify {
            file,
            rmax,
            multiplier,
            search_degree,
            seed,
            output,
        } => {
            let spec = ConeSpecFile::load(&file)?;
            let opts = VerifyOptions {
                r_max: rmax,
                multiplier_override: multiplier,
                search_degree,
                seed,
            };
            let outcome = analyze(&spec, Some(&opts))?;
            emit(&outcome.report.to_json(output.pretty), output.out.as_ref())?;
            if let Some(breach) = outcome.internal_breach {
                return Err(CliError::Internal(breach));
            }
            Ok(if outcome.verification_failed { 1 } else { 0 })
        }
        Command::Family {
            kind,
            degrees,
            n,
            m,
            out,
            check,
            pretty,
        } => {
            let kind = FamilyName::parse(&kind)?;
            let vars: Vec<u32> = match (n, m) {
                (Some(n), None) => vec![n],
                (None, Some(m)) => m,
                (None, None) => {
                    return Err(CliError::Input("supply --n or --m".into()));
                }
                (Some(_), Some(_)) => {
                    return Err(CliError::Input("--n and --m are mutually exclusive".into()));
                }
            };
            let (cone, family) = build_family(kind, &degrees, &vars)?;
            let spec = cone_spec(kind, &degrees, &vars, &cone)?;
            let predictions = predictions_file(kind, &degrees, &vars, &family)?;
            let sidecar = predictions_path(&out);
            std::fs::write(&out, to_json_string(&spec, pretty))
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
            std::fs::write(&sidecar, to_json_string(&predictions, pretty))
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", sidecar.display())))?;
            println!("wrote {} and {}", out.display(), sidecar.display());
            if check {
                let diffs = check_predictions(&spec, &predictions)?;
                if diffs.is_empty() {
                    println!("predictions confirmed");
                } else {
                    for d in &diffs {
                        eprintln!("prediction mismatch: {d}");
                    }
                    return Ok(1);
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            match e {
                CliError::Input(_) => ExitCode::from(2),
                CliError::Internal(_) => ExitCode::from(3),
            }
        }
    }
}
