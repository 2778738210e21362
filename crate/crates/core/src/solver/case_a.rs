use serde_json::json;

use crate::branching::max_clique_extension;
use crate::classes::PiClass;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{better, standalone, stats, ConstantSchedule, Ctx, Solution};
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

/// Case A on its own: the best member among `P ∪ (subset of K)` over all
/// members `P ⊆ V \ K`, where `K` is a clique.
pub fn solve_case_a(g: &Graph, class: &PiClass, k: &VertexSet) -> Result<Solution> {
    g.check_set(k)?;
    if !g.is_clique(k) {
        return Err(Error::NotAClique);
    }
    let (vertices, stats) = standalone(class, &ConstantSchedule::default(), |ctx| case_a(ctx, g, k))?;
    Ok(Solution { vertices, stats })
}

/// Guesses `P = W \ K` from the largest size down and extends each member
/// guess into `K`. Stops once no remaining guess can reach the best size.
pub(crate) fn case_a(ctx: &Ctx<'_>, g: &Graph, k: &VertexSet) -> Result<VertexSet> {
    let rest = g.vertices().difference(k);
    let mut best: Option<VertexSet> = None;
    let mut failure = None;
    for p_size in (0..=rest.len()).rev() {
        if best.as_ref().is_some_and(|b| b.len() > p_size + k.len()) {
            break;
        }
        for_each_subset_of_size(&rest, p_size, |p| {
            stats::bump(&ctx.counters.candidates);
            if !ctx.member(g, p) {
                return true;
            }
            match max_clique_extension(g, p, k, ctx.class) {
                Ok(w) => {
                    if better(&w, best.as_ref()) {
                        best = Some(w);
                    }
                    true
                }
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    let best = best.unwrap_or_default();
    ctx.trace("caseA", json!({"clique": k.len(), "size": best.len()}));
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::brute_force_inner;

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let cases = [
            Graph::cycle(5),
            Graph::cycle(4).disjoint_union(&Graph::complete(3)),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in &cases {
            for class in [PiClass::chordal(), PiClass::interval()] {
                let k = g.maximum_clique();
                let sol = solve_case_a(g, &class, &k).unwrap();
                assert_eq!(sol.size(), brute_force_inner(g, &class).len());
                assert!(class.contains_set(g, &sol.vertices));
            }
        }
    }

    #[test]
    fn rejects_non_clique() {
        let k: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(solve_case_a(&Graph::path(3), &PiClass::chordal(), &k), Err(Error::NotAClique));
    }
}
