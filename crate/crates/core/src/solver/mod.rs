//! The exact solver: structured algorithm, its branches run in isolation,
//! and a brute-force reference.

mod b1;
mod b2;
pub mod brute;
mod case_a;
mod constants;
mod stats;
mod step2;
mod trace;

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::branching::finite_deletion_solve;
use crate::classes::PiClass;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use b1::solve_branch_b1;
pub use b2::solve_branch_b2;
pub use brute::brute_force_inner;
pub use case_a::solve_case_a;
pub use constants::{validate_constants, validate_forced, ConstantSchedule};
pub use stats::{BranchStats, Counters, Stats};
pub use step2::{solve_step2_band, BandResult};
pub use trace::Tracer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Whole graph if it is a member, otherwise the structured algorithm.
    Auto,
    Structured,
    Brute,
    /// Only branch B.1, levels tried from the largest size down.
    ForcedB1,
    /// Only branch B.2, on ℓ-free inputs.
    ForcedB2,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Auto => "auto",
            Mode::Structured => "structured",
            Mode::Brute => "brute",
            Mode::ForcedB1 => "forced-B1",
            Mode::ForcedB2 => "forced-B2",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Mode::Auto),
            "structured" => Ok(Mode::Structured),
            "brute" => Ok(Mode::Brute),
            "forced-B1" => Ok(Mode::ForcedB1),
            "forced-B2" => Ok(Mode::ForcedB2),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub vertices: VertexSet,
    pub stats: Stats,
}

impl Solution {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    pub mode: Mode,
    pub constants: ConstantSchedule,
    /// The deletion wrapper brute-forces once more than `(1 - cutoff) n`
    /// vertices are decided.
    pub deletion_cutoff: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { mode: Mode::Auto, constants: ConstantSchedule::default(), deletion_cutoff: 0.5 }
    }
}

/// `true` if `w` beats `best`: larger, or equally large and
/// lexicographically smaller.
pub fn better(w: &VertexSet, best: Option<&VertexSet>) -> bool {
    match best {
        None => true,
        Some(b) => w.len() > b.len() || (w.len() == b.len() && w < b),
    }
}

pub(crate) fn pick(a: Option<VertexSet>, b: Option<VertexSet>) -> Option<VertexSet> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if better(&b, Some(&a)) { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    }
}

/// Shared state of one run.
pub(crate) struct Ctx<'a> {
    pub class: &'a PiClass,
    pub c: &'a ConstantSchedule,
    pub counters: &'a Counters,
    pub tracer: &'a Tracer,
}

impl Ctx<'_> {
    pub fn member(&self, g: &Graph, w: &VertexSet) -> bool {
        stats::bump(&self.counters.membership_tests);
        self.class.contains_set(g, w)
    }

    pub fn trace(&self, event: &str, fields: serde_json::Value) {
        if self.tracer.enabled() {
            self.tracer.emit(event, fields);
        }
    }
}

pub fn solve(g: &Graph, class: &PiClass, constants: &ConstantSchedule, mode: Mode) -> Result<Solution> {
    let opts = SolveOptions { mode, constants: *constants, ..SolveOptions::default() };
    solve_with(g, class, &opts, &Tracer::disabled())
}

pub fn solve_with(g: &Graph, class: &PiClass, opts: &SolveOptions, tracer: &Tracer) -> Result<Solution> {
    let start = Instant::now();
    let counters = Counters::default();
    let ctx = Ctx { class, c: &opts.constants, counters: &counters, tracer };
    ctx.trace("start", json!({"mode": opts.mode.name(), "class": class.name(), "n": g.n(), "m": g.edge_count()}));
    let vertices = match opts.mode {
        Mode::Brute => brute_force_inner(g, class),
        Mode::Auto => {
            check_constants(validate_constants(&opts.constants))?;
            if ctx.member(g, &g.vertices()) {
                g.vertices()
            } else {
                structured(&ctx, g, opts.deletion_cutoff)?
            }
        }
        Mode::Structured => {
            check_constants(validate_constants(&opts.constants))?;
            structured(&ctx, g, opts.deletion_cutoff)?
        }
        Mode::ForcedB1 => {
            check_constants(validate_forced(&opts.constants, false))?;
            b1::forced_levels(&ctx, g)?
        }
        Mode::ForcedB2 => {
            check_constants(validate_forced(&opts.constants, true))?;
            forced_b2(&ctx, g)?
        }
    };
    if !class.contains_set(g, &vertices) {
        return Err(Error::Verification(format!("{} returned a set outside the class", opts.mode)));
    }
    let elapsed = start.elapsed().as_millis() as u64;
    ctx.trace("done", json!({"size": vertices.len(), "elapsed_ms": elapsed}));
    Ok(Solution { vertices, stats: counters.snapshot(elapsed) })
}

fn check_constants(violations: Vec<String>) -> Result<()> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidConstants(violations))
    }
}

/// Deletion wrapper for small obstructions (including overlay members),
/// then the base-class algorithm on what remains.
fn structured(ctx: &Ctx<'_>, g: &Graph, cutoff: f64) -> Result<VertexSet> {
    let base = ctx.class.base_class();
    let inner_ctx = Ctx { class: &base, c: ctx.c, counters: ctx.counters, tracer: ctx.tracer };
    let ell = ctx.c.ell().max(ctx.class.overlay_max_size());
    let mut inner = |h: &Graph| inner_solve(&inner_ctx, h);
    finite_deletion_solve(g, ctx.class, ell, &mut inner, cutoff)
}

/// Steps 1 to 5 on a graph of the base class' ℓ-free part.
fn inner_solve(ctx: &Ctx<'_>, g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    stats::bump(&ctx.counters.step1);
    let k = g.maximum_clique();
    ctx.trace("step1", json!({"n": n, "clique": k.len()}));
    if k.len() as f64 >= ctx.c.alpha * n as f64 {
        stats::bump(&ctx.counters.case_a);
        return case_a::case_a(ctx, g, &k);
    }
    stats::bump(&ctx.counters.step2);
    let best_low = match step2::band(ctx, g, ctx.c.beta) {
        BandResult::Terminal(w) => return Ok(w),
        BandResult::Continue { best_low } => best_low,
    };
    let (lo, hi) = step2::band_limits(n, ctx.c.beta);
    let cliques = g.cliques_up_to((ctx.c.alpha * n as f64).floor() as usize);
    let found = cliques
        .par_iter()
        .map(|s| -> Result<Option<VertexSet>> {
            stats::bump(&ctx.counters.step3);
            ctx.trace("step3", json!({"s": s.to_vec()}));
            let mut best = None;
            let mut state = b1::B1State::new(g, s);
            for t in lo.max(s.len())..hi {
                for (x1, x2) in b1::balanced_splits(t, s.len()) {
                    stats::bump(&ctx.counters.step4);
                    best = pick(best, state.run(ctx, x1, x2, true)?);
                }
            }
            stats::bump(&ctx.counters.step4);
            best = pick(best, b2::branch(ctx, g, s)?);
            Ok(best)
        })
        .try_reduce(|| None, |a, b| Ok(pick(a, b)))?;
    Ok(pick(Some(best_low), found).unwrap_or_default())
}

fn forced_b2(ctx: &Ctx<'_>, g: &Graph) -> Result<VertexSet> {
    let ell = ctx.c.ell().max(ctx.class.overlay_max_size());
    if let Some(w) = ctx.class.find_forbidden(g, ell) {
        return Err(Error::Precondition(format!(
            "forced-B2 needs an input without forbidden subgraphs of at most {ell} vertices, found {:?}",
            w.to_vec()
        )));
    }
    let cliques = g.cliques_up_to((ctx.c.alpha * g.n() as f64).floor() as usize);
    let found = cliques
        .par_iter()
        .map(|s| {
            stats::bump(&ctx.counters.step3);
            b2::branch(ctx, g, s)
        })
        .try_reduce(|| None, |a, b| Ok(pick(a, b)))?;
    Ok(found.unwrap_or_default())
}

/// Runs a branch function with fresh counters and wraps its answer.
pub(crate) fn standalone<T>(
    class: &PiClass,
    c: &ConstantSchedule,
    run: impl FnOnce(&Ctx<'_>) -> Result<T>,
) -> Result<(T, Stats)> {
    let start = Instant::now();
    let counters = Counters::default();
    let tracer = Tracer::disabled();
    let ctx = Ctx { class, c, counters: &counters, tracer: &tracer };
    let out = run(&ctx)?;
    Ok((out, counters.snapshot(start.elapsed().as_millis() as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn better_orders_by_size_then_lex() {
        let a: VertexSet = [0, 2].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        let c: VertexSet = [0, 1, 2].into_iter().collect();
        assert!(better(&a, None));
        assert!(better(&a, Some(&b)));
        assert!(!better(&b, Some(&a)));
        assert!(better(&c, Some(&a)));
        assert!(!better(&a, Some(&a)));
    }

    #[test]
    fn modes_parse() {
        for m in [Mode::Auto, Mode::Structured, Mode::Brute, Mode::ForcedB1, Mode::ForcedB2] {
            assert_eq!(m.name().parse::<Mode>().unwrap(), m);
        }
        assert!("fast".parse::<Mode>().is_err());
    }

    #[test]
    fn auto_returns_members_whole() {
        let c = ConstantSchedule::default();
        let sol = solve(&Graph::path(6), &PiClass::interval(), &c, Mode::Auto).unwrap();
        assert_eq!(sol.vertices, VertexSet::full(6));
        let sol = solve(&Graph::cycle(5), &PiClass::chordal(), &c, Mode::Auto).unwrap();
        assert_eq!(sol.size(), 4);
        assert_eq!(sol.vertices, [0, 1, 2, 3].into_iter().collect());
    }

    #[test]
    fn invalid_constants_rejected() {
        let c = ConstantSchedule { alpha: 0.5, ..ConstantSchedule::default() };
        assert!(matches!(
            solve(&Graph::path(3), &PiClass::chordal(), &c, Mode::Structured),
            Err(Error::InvalidConstants(_))
        ));
    }
}
