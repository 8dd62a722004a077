mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::Output;

#[derive(Parser, Debug)]
#[command(name = "absub", version, about = "Boolean-subalgebra posets, lattice reconstruction and Jordan maps")]
struct Cli {
    /// Upper bound on lattice sizes handled by enumerations.
    #[arg(long, global = true, default_value_t = absub::pipeline::DEFAULT_MAX_LATTICE)]
    max_size: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an OML, Greechie diagram or algebra file.
    Verify { path: PathBuf },
    /// List the Boolean subalgebras of an OML.
    Bsub {
        path: PathBuf,
        /// Write the Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compare two OMLs and their Boolean-subalgebra posets.
    Iso { left: PathBuf, right: PathBuf },
    /// Reconstruct lattice isomorphisms from a BSub isomorphism file.
    Reconstruct { path: PathBuf },
    /// Run the reconstruction pipeline on an instance file.
    Pipeline {
        path: PathBuf,
        /// Report every candidate map instead of failing on ambiguity.
        #[arg(long)]
        diagnostic: bool,
    },
    /// Compare Boolean-subalgebra counts of 2^n-element Boolean algebras with Bell numbers.
    BellCheck {
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Demonstrate the ambiguous 2x2 instance.
    Counterexample {
        /// Also write the instance file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let max = cli.max_size;
    let out = match &cli.command {
        Command::Verify { path } => commands::verify(path),
        Command::Bsub { path, dot } => commands::bsub(path, dot.as_deref(), max),
        Command::Iso { left, right } => commands::iso(left, right, max),
        Command::Reconstruct { path } => commands::reconstruct(path, max),
        Command::Pipeline { path, diagnostic } => commands::pipeline(path, *diagnostic, max),
        Command::BellCheck { max: n } => commands::bell_check(*n, max),
        Command::Counterexample { out } => commands::counterexample(out.as_deref(), max),
    };
    emit(&out, cli.format);
    ExitCode::from(out.code)
}

/// Write errors (a closed pipe, for instance) are ignored.
fn emit(out: &Output, format: Format) {
    let mut stdout = std::io::stdout().lock();
    match format {
        Format::Text => {
            for line in &out.lines {
                if writeln!(stdout, "{line}").is_err() {
                    return;
                }
            }
        }
        Format::Machine => {
            let mut v = out.json.clone();
            v["exit_code"] = out.code.into();
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }
}
