use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use maxpi::cli::{run, OutputFormat, RunConfig, EXIT_OTHER};
use maxpi::solver::Mode;

/// Maximum induced subgraph in a chordal or interval class.
#[derive(Parser, Debug)]
#[command(name = "maxpi", version, about)]
struct Args {
    /// Graph file (`p edge <n> <m>` header, `e <u> <v>` lines, 1-indexed).
    #[arg(long)]
    input: PathBuf,

    /// chordal, interval, chordal+F or interval+F.
    #[arg(long, default_value = "chordal")]
    class: String,

    /// Graph file of a forbidden overlay member; repeat for a family.
    #[arg(long)]
    overlay: Vec<PathBuf>,

    /// auto, structured, brute, forced-B1 or forced-B2.
    #[arg(long, default_value = "auto")]
    mode: Mode,

    /// Constant schedule file with `key = value` lines.
    #[arg(long)]
    constants: Option<PathBuf>,

    /// Print one JSON object instead of text.
    #[arg(long)]
    json: bool,

    /// Write branch events as JSON lines to stderr.
    #[arg(long)]
    trace: bool,

    /// Compare the optimum size with brute force (up to MAXPI_ORACLE_CAP vertices).
    #[arg(long)]
    oracle_check: bool,

    /// Worker threads; results do not depend on it.
    #[arg(long)]
    threads: Option<usize>,

    /// Recorded in the trace; the solver is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(threads) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_OTHER as u8);
        }
    }
    let config = RunConfig {
        input: args.input,
        class: args.class,
        overlays: args.overlay,
        mode: args.mode,
        constants: args.constants,
        format: if args.json { OutputFormat::Json } else { OutputFormat::Human },
        trace: args.trace,
        oracle_check: args.oracle_check,
        seed: args.seed,
    };
    let code = run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code as u8)
}
