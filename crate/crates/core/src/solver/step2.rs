use serde_json::json;

use crate::classes::PiClass;
use crate::graph::Graph;
use crate::solver::{standalone, ConstantSchedule, Ctx};
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

/// Outcome of the size-band test around `n/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BandResult {
    /// The answer is known: a member of size at least the upper band
    /// limit exists, or none of the lower limit does.
    Terminal(VertexSet),
    /// The optimum lies in the band; `best_low` is a member of the lower
    /// limit's size.
    Continue { best_low: VertexSet },
}

/// `(⌊n/2 - βn⌋, ⌈n/2 + βn⌉)`, clamped to `0..=n + 1`.
pub(crate) fn band_limits(n: usize, beta: f64) -> (usize, usize) {
    let half = n as f64 / 2.0;
    let lo = (half - beta * n as f64).floor().max(0.0) as usize;
    let hi = ((half + beta * n as f64).ceil() as usize).min(n + 1);
    (lo, hi)
}

pub fn solve_step2_band(g: &Graph, class: &PiClass, beta: f64) -> BandResult {
    let c = ConstantSchedule { beta, ..ConstantSchedule::default() };
    standalone(class, &c, |ctx| Ok(band(ctx, g, beta))).map(|(r, _)| r).expect("band test cannot fail")
}

pub(crate) fn band(ctx: &Ctx<'_>, g: &Graph, beta: f64) -> BandResult {
    let n = g.n();
    let (lo, hi) = band_limits(n, beta);
    let result = match first_member_between(ctx, g, hi, n) {
        Some(w) => BandResult::Terminal(w),
        None => match first_member_between(ctx, g, lo, lo) {
            Some(best_low) => BandResult::Continue { best_low },
            None => BandResult::Terminal(first_member_between(ctx, g, 0, lo.saturating_sub(1)).unwrap_or_default()),
        },
    };
    let (kind, size) = match &result {
        BandResult::Terminal(w) => ("terminal", w.len()),
        BandResult::Continue { best_low } => ("continue", best_low.len()),
    };
    ctx.trace("step2", json!({"lo": lo, "hi": hi, "result": kind, "size": size}));
    result
}

/// Lexicographically first member of the largest size in `low..=high`.
fn first_member_between(ctx: &Ctx<'_>, g: &Graph, low: usize, high: usize) -> Option<VertexSet> {
    let all = g.vertices();
    for size in (low..=high.min(g.n())).rev() {
        let mut found = None;
        for_each_subset_of_size(&all, size, |w| {
            if ctx.member(g, w) {
                found = Some(w.clone());
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits() {
        assert_eq!(band_limits(10, 0.06), (4, 6));
        assert_eq!(band_limits(0, 0.06), (0, 0));
        assert_eq!(band_limits(1, 0.0), (0, 1));
    }

    #[test]
    fn member_graph_is_terminal() {
        let g = Graph::path(6);
        assert_eq!(solve_step2_band(&g, &PiClass::interval(), 0.06), BandResult::Terminal(VertexSet::full(6)));
    }

    #[test]
    fn large_member_above_band_is_terminal() {
        // K_{4,4}: induced forests are stars plus one side, so the optimum is 5 >= hi
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in 4..8 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        assert_eq!(band_limits(8, 0.06), (3, 5));
        let expected: VertexSet = [0, 1, 2, 3, 4].into_iter().collect();
        assert_eq!(solve_step2_band(&g, &PiClass::chordal(), 0.06), BandResult::Terminal(expected));
    }
}
