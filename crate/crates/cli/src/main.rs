mod commands;
mod report;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Format, Report};

#[derive(Parser)]
#[command(name = "cubic27", version, about = "Cubic surfaces over GF(2^k): lines, automorphisms, quadric models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
pub struct Opts {
    /// Base field, written GF(2^k).
    #[arg(long, global = true, default_value = "GF(2^1)")]
    pub field: String,
    /// Cubic form in x, y, z, t, e.g. "x^3+y^3+z^3+t^3".
    #[arg(long, global = true)]
    pub cubic: Option<String>,
    /// Second cubic form, for `iso`.
    #[arg(long, global = true)]
    pub cubic2: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Model::Split)]
    pub model: Model,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub out: Format,
    /// Include the slow suites in `verify`.
    #[arg(long, global = true)]
    pub extended: bool,
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Add wall-clock time to the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Split,
    Weil,
}

#[derive(Subcommand)]
enum Command {
    /// The 27 lines, their splitting field and labels.
    Lines,
    /// Automorphism group over the base field.
    Aut,
    /// Frobenius action on the lines.
    Galois,
    /// Whether --cubic and --cubic2 are projectively equivalent.
    Iso,
    /// Order-5 orbits on a quadric model, up to equivalence.
    Orbits,
    /// Blow down five lines permuted by an order-5 automorphism.
    Blowdown,
    /// Blow up the standard order-5 orbit on a quadric model.
    Blowup,
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

/// Exit code and message for a failed command.
pub enum Failure {
    /// A checked property does not hold (exit 1).
    Violation(String),
    /// Unusable input (exit 2).
    BadInput(String),
}

impl Failure {
    pub fn bad(e: impl std::fmt::Display) -> Self {
        Failure::BadInput(e.to_string())
    }

    pub fn violation(e: impl std::fmt::Display) -> Self {
        Failure::Violation(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let opts = cli.opts;
    if let Some(n) = opts.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("cubic27: {e}");
            return ExitCode::from(2);
        }
    }
    let name = match &cli.command {
        Command::Lines => "lines",
        Command::Aut => "aut",
        Command::Galois => "galois",
        Command::Iso => "iso",
        Command::Orbits => "orbits",
        Command::Blowdown => "blowdown",
        Command::Blowup => "blowup",
        Command::Verify { .. } => "verify",
    };
    let mut report = Report::new(name);
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Lines => commands::lines(&opts, &mut report),
        Command::Aut => commands::aut(&opts, &mut report),
        Command::Galois => commands::galois(&opts, &mut report),
        Command::Iso => commands::iso(&opts, &mut report),
        Command::Orbits => commands::orbits(&opts, &mut report),
        Command::Blowdown => commands::blowdown(&opts, &mut report),
        Command::Blowup => commands::blowup(&opts, &mut report),
        Command::Verify { suite } => verify::run(suite, &opts, &mut report),
    };
    if opts.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let code = match outcome {
        Ok(()) => 0,
        Err(Failure::Violation(msg)) => {
            if report.status == "ok" {
                report.status = "fail".into();
            }
            report.result("error", msg);
            1
        }
        Err(Failure::BadInput(msg)) => {
            report.status = "error".into();
            report.result("error", msg);
            2
        }
    };
    print!("{}", report.render(opts.out));
    ExitCode::from(code)
}
