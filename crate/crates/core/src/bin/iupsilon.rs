use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use involutive_upsilon::job::{self, Engine, JobSpec, OutputFormat, Stage};
use involutive_upsilon::upsilon::{NuEngine, COSET_GUARD};
use involutive_upsilon::verify::{self, VerifyOptions};
use involutive_upsilon::Error;

#[derive(Parser)]
#[command(name = "iupsilon", version, about = "Involutive Upsilon invariants of staircase knot complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants for one or more knots.
    Compute {
        /// torus:p,q | -torus:p,q | steps:±:a1,...,an | file:PATH (repeatable)
        #[arg(long = "knot", required = true, allow_hyphen_values = true)]
        knots: Vec<String>,
        /// Comma-separated subset of classic,folded,upper,lower,v0 (or all).
        #[arg(long = "invariant", default_value = "upper,lower")]
        invariants: Vec<String>,
        /// generic | closed-form | both
        #[arg(long, default_value = "generic")]
        engine: String,
        /// table | csv | svg
        #[arg(long, default_value = "table")]
        output: String,
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
        /// Drop acyclic components after reducing the cone.
        #[arg(long)]
        strip_acyclic: bool,
        /// Use the ordered sweep instead of coset enumeration for ν.
        #[arg(long)]
        sweep: bool,
        /// Largest coset dimension the enumeration accepts.
        #[arg(long, default_value_t = COSET_GUARD)]
        coset_guard: usize,
    },
    /// Run the cross-check suites; exit 0 only if every check passes.
    Verify {
        /// Largest total step length of the symmetric staircases compared.
        #[arg(long, default_value_t = 8)]
        max_steps: u32,
        /// Denominator of the rational t-grid for pointwise checks.
        #[arg(long, default_value_t = 12)]
        grid_denominator: i64,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = VerifyOptions::default().trials)]
        trials: usize,
    },
    /// Print the complex JSON of one pipeline stage.
    DumpComplex {
        #[arg(long, allow_hyphen_values = true)]
        knot: String,
        /// base | folded | cone | reduced | closed-form
        #[arg(long, default_value = "base")]
        stage: String,
        #[arg(long)]
        strip_acyclic: bool,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Compute {
            knots,
            invariants,
            engine,
            output,
            output_dir,
            strip_acyclic,
            sweep,
            coset_guard,
        } => {
            let job = JobSpec {
                knots,
                invariants: job::parse_invariants(&invariants.join(","))?,
                engine: engine.parse::<Engine>()?,
                output: output.parse::<OutputFormat>()?,
                output_dir,
                strip_acyclic,
                nu_engine: if sweep {
                    NuEngine::Sweep
                } else {
                    NuEngine::Enumerate { guard: coset_guard }
                },
            };
            let (stdout, _) = job::run(&job)?;
            print!("{stdout}");
            Ok(true)
        }
        Command::Verify {
            max_steps,
            grid_denominator,
            seed,
            trials,
        } => {
            let opts = VerifyOptions {
                max_steps,
                grid_denominator,
                seed,
                trials,
                ..VerifyOptions::default()
            };
            let mut ok = true;
            for report in verify::run_all(&opts) {
                println!("{report}");
                let _ = std::io::stdout().flush();
                ok &= report.passed();
            }
            println!("{}", if ok { "all checks passed" } else { "some checks FAILED" });
            Ok(ok)
        }
        Command::DumpComplex {
            knot,
            stage,
            strip_acyclic,
            out,
        } => {
            let text = job::dump_complex(&knot, stage.parse::<Stage>()?, strip_acyclic)?;
            print!("{}", job::emit(text, out.as_deref())?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
