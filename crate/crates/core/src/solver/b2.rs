use std::collections::BTreeSet;

use serde_json::json;

use crate::branching::for_each_small_side_candidate;
use crate::classes::PiClass;
use crate::enumeration::enumerate_connected_supersets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{better, standalone, stats, ConstantSchedule, Ctx, Solution};
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

/// Branch B.2 for one clique `S`: `X` is the union of the large components
/// of `W - S` (each more than `C` vertices, at most `⌊γn / L⌋` of them),
/// `Y` the small-component part, found among the small-side candidates of
/// `R = G - S - N[X]`.
pub fn solve_branch_b2(g: &Graph, class: &PiClass, s: &VertexSet, c: &ConstantSchedule) -> Result<Option<Solution>> {
    g.check_set(s)?;
    if !g.is_clique(s) {
        return Err(Error::NotAClique);
    }
    let (found, stats) = standalone(class, c, |ctx| branch(ctx, g, s))?;
    Ok(found.map(|vertices| Solution { vertices, stats }))
}

pub(crate) fn branch(ctx: &Ctx<'_>, g: &Graph, s: &VertexSet) -> Result<Option<VertexSet>> {
    let gp = g.induced_unchecked(&g.vertices().difference(s));
    let ids = gp.parent_ids().to_vec();
    let n = g.n() as f64;
    let c = ctx.c.c();
    let sigma = ctx.c.sigma();
    let all = gp.vertices();
    let m = gp.n();
    let r_max = (ctx.c.gamma * n / ctx.c.big_l).floor() as usize;

    let mut large_parts: BTreeSet<VertexSet> = BTreeSet::new();
    large_parts.insert(VertexSet::new());
    for r in 1..=r_max.min(m) {
        let mut failure = None;
        for_each_subset_of_size(&all, r, |guess| {
            for size in r..=m {
                for nbr in 0..=m - size {
                    match enumerate_connected_supersets(&gp, guess, size, nbr) {
                        Ok(sets) => {
                            stats::add(&ctx.counters.candidates, sets.len() as u64);
                            large_parts.extend(
                                sets.into_iter()
                                    .filter(|x| gp.components_unchecked(x).iter().all(|k| k.len() as f64 > c)),
                            );
                        }
                        Err(e) => {
                            failure = Some(e);
                            return false;
                        }
                    }
                }
            }
            true
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }

    let mut best: Option<VertexSet> = None;
    for x in &large_parts {
        stats::bump(&ctx.counters.step5);
        stats::bump(&ctx.counters.b2);
        let closed = gp.neighborhood_unchecked(x, true);
        let r = gp.induced_unchecked(&all.difference(&closed));
        if (r.n() as f64) < ctx.c.gamma * n / 2.0 {
            continue;
        }
        let r_ids = r.parent_ids().to_vec();
        let base = s.union(&x.map(&ids));
        for_each_small_side_candidate(&r, c, &sigma, |y| {
            stats::bump(&ctx.counters.candidates);
            let w = base.union(&y.map(&r_ids).map(&ids));
            if better(&w, best.as_ref()) && ctx.member(g, &w) {
                best = Some(w);
            }
            true
        });
        ctx.trace("b2", json!({"s": s.to_vec(), "x": x.map(&ids).to_vec(), "rest": r.n()}));
    }
    Ok(best)
}
