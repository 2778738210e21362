//! Batch runner behind the `maxpi` binary. Vertex ids are 1-indexed only
//! here, at the boundary.

use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;

use crate::classes::PiClass;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_graph;
use crate::oracle::{brute_force_max_induced_capped, oracle_cap};
use crate::solver::{solve_with, BranchStats, ConstantSchedule, Mode, SolveOptions, Tracer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_CONSTANTS: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Human,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub class: String,
    pub overlays: Vec<PathBuf>,
    pub mode: Mode,
    pub constants: Option<PathBuf>,
    pub format: OutputFormat,
    pub trace: bool,
    pub oracle_check: bool,
    /// Echoed in the trace; the solver itself is deterministic.
    pub seed: u64,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        RunConfig {
            input: input.into(),
            class: "chordal".into(),
            overlays: Vec::new(),
            mode: Mode::Auto,
            constants: None,
            format: OutputFormat::Human,
            trace: false,
            oracle_check: false,
            seed: 0,
        }
    }
}

/// The JSON document written with `--json`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub mode: String,
    pub class: String,
    pub n: usize,
    pub m: usize,
    pub optimum_size: usize,
    pub vertices: Vec<usize>,
    pub branches: BranchStats,
    pub candidates_enumerated: u64,
    pub two_table_columns: u64,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleVerdict>,
}

#[derive(Debug, Serialize)]
pub struct OracleVerdict {
    /// `None` when the graph is above the oracle cap.
    pub optimum_size: Option<usize>,
    pub agrees: Option<bool>,
}

/// Runs one configuration, writing results to `out` and diagnostics (and
/// trace lines) to `err`. Returns the process exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidConstants(_) => EXIT_CONSTANTS,
        Error::Parse { .. } => EXIT_PARSE,
        _ => EXIT_OTHER,
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    parse_graph(&read(path)?).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", path.display()) },
        other => other,
    })
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&config.input)?;
    let family = config.overlays.iter().map(read_graph).collect::<Result<Vec<_>>>()?;
    let class = PiClass::from_name(&config.class, family)?;
    let constants = match &config.constants {
        Some(path) => ConstantSchedule::parse(&read(path)?)?,
        None => ConstantSchedule::default(),
    };
    let opts = SolveOptions { mode: config.mode, constants, ..SolveOptions::default() };

    let mut trace_buf = TraceBuffer::default();
    let tracer = if config.trace { Tracer::to_writer(Box::new(trace_buf.clone())) } else { Tracer::disabled() };
    if config.trace {
        tracer.emit("config", serde_json::json!({"seed": config.seed, "input": config.input.display().to_string()}));
    }
    let result = solve_with(&g, &class, &opts, &tracer);
    drop(tracer);
    let _ = err.write_all(&trace_buf.take());
    let sol = result?;

    let oracle = if config.oracle_check {
        let cap = oracle_cap();
        match brute_force_max_induced_capped(&g, &class, cap) {
            Ok(best) => Some(OracleVerdict { optimum_size: Some(best.len()), agrees: Some(best.len() == sol.size()) }),
            Err(Error::CapExceeded { .. }) => Some(OracleVerdict { optimum_size: None, agrees: None }),
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let disagree = oracle.as_ref().is_some_and(|o| o.agrees == Some(false));

    let report = Report {
        mode: config.mode.name().into(),
        class: class.name(),
        n: g.n(),
        m: g.edge_count(),
        optimum_size: sol.size(),
        vertices: sol.vertices.iter().map(|v| v + 1).collect(),
        branches: sol.stats.branches,
        candidates_enumerated: sol.stats.candidates_enumerated,
        two_table_columns: sol.stats.two_table_columns,
        elapsed_ms: sol.stats.elapsed_ms,
        oracle,
    };
    let written = match config.format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("report serialises")),
        OutputFormat::Human => write_human(out, &report),
    };
    written.map_err(|e| Error::Precondition(format!("cannot write output: {e}")))?;
    Ok(if disagree { EXIT_DISAGREE } else { EXIT_OK })
}

fn write_human(out: &mut dyn Write, r: &Report) -> std::io::Result<()> {
    writeln!(out, "size {}", r.optimum_size)?;
    let ids: Vec<String> = r.vertices.iter().map(usize::to_string).collect();
    writeln!(out, "vertices {}", ids.join(" "))?;
    writeln!(out, "mode {} class {} n {} m {}", r.mode, r.class, r.n, r.m)?;
    let b = &r.branches;
    writeln!(
        out,
        "branches step1 {} step2 {} step3 {} step4 {} step5 {} caseA {} b11 {} b12 {} b13 {} b2 {}",
        b.step1, b.step2, b.step3, b.step4, b.step5, b.case_a, b.b11, b.b12, b.b13, b.b2
    )?;
    writeln!(
        out,
        "candidates {} two_table_columns {} elapsed_ms {}",
        r.candidates_enumerated, r.two_table_columns, r.elapsed_ms
    )?;
    if let Some(o) = &r.oracle {
        match (o.optimum_size, o.agrees) {
            (Some(opt), Some(true)) => writeln!(out, "oracle agree {opt}")?,
            (Some(opt), _) => writeln!(out, "oracle disagree {opt}")?,
            _ => writeln!(out, "oracle skipped (n above cap)")?,
        }
    }
    Ok(())
}

/// Collects trace lines so they can be forwarded to the caller's writer.
#[derive(Clone, Default)]
struct TraceBuffer(std::sync::Arc<std::sync::Mutex<Vec<u8>>>);

impl TraceBuffer {
    fn take(&mut self) -> Vec<u8> {
        std::mem::take(&mut *self.0.lock().unwrap_or_else(|e| e.into_inner()))
    }
}

impl Write for TraceBuffer {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        self.0.lock().unwrap_or_else(|e| e.into_inner()).extend_from_slice(buf);
        Ok(buf.len())
    }

    fn flush(&mut self) -> std::io::Result<()> {
        Ok(())
    }
}
