use crate::classes::PiClass;
use crate::error::Result;
use crate::graph::Graph;
use crate::solver::brute::best_extension;
use crate::vertex_set::{for_each_subset, VertexSet};

/// Maximum `W` with `G[W] ∈ Π`, reducing to graphs without small forbidden
/// subgraphs.
///
/// Keeps disjoint sets `A` (assumed in) and `D` (assumed out). While
/// `G - D` has a forbidden set `S` of at most `max_size` vertices, some
/// vertex of `S \ A` must go to `D`; every split of `S \ A` with a
/// non-empty `D` part becomes a branch. Without such `S`, `inner(G - D)`
/// finishes the branch (dropping the requirement `A ⊆ W`). Once
/// `|A ∪ D| > (1 - eps) n` the rest is brute-forced on top of `A`.
///
/// `inner` receives an induced subgraph and returns vertex ids local to it.
pub fn finite_deletion_solve<F>(
    g: &Graph,
    class: &PiClass,
    max_size: usize,
    inner: &mut F,
    eps: f64,
) -> Result<VertexSet>
where
    F: FnMut(&Graph) -> Result<VertexSet>,
{
    let mut best = None;
    let mut run = Deletion { g, class, max_size, eps, inner, best: &mut best };
    run.branch(VertexSet::new(), VertexSet::new())?;
    Ok(best.unwrap_or_default())
}

struct Deletion<'a, F> {
    g: &'a Graph,
    class: &'a PiClass,
    max_size: usize,
    eps: f64,
    inner: &'a mut F,
    best: &'a mut Option<VertexSet>,
}

impl<F> Deletion<'_, F>
where
    F: FnMut(&Graph) -> Result<VertexSet>,
{
    fn offer(&mut self, w: VertexSet) {
        if crate::solver::better(&w, self.best.as_ref()) {
            *self.best = Some(w);
        }
    }

    fn branch(&mut self, a: VertexSet, d: VertexSet) -> Result<()> {
        let n = self.g.n();
        let decided = a.len() + d.len();
        if decided as f64 > (1.0 - self.eps) * n as f64 {
            let pool = self.g.vertices().difference(&a).difference(&d);
            if let Some(w) = best_extension(self.g, self.class, &a, &pool) {
                self.offer(w);
            }
            return Ok(());
        }
        let rest = self.g.vertices().difference(&d);
        let sub = self.g.induced_unchecked(&rest);
        let ids = sub.parent_ids().to_vec();
        let Some(local) = self.class.find_forbidden(&sub, self.max_size) else {
            let w = (self.inner)(&sub)?;
            self.offer(w.map(&ids));
            return Ok(());
        };
        let s = local.map(&ids);
        let open = s.difference(&a);
        if open.is_empty() {
            return Ok(());
        }
        let mut splits = Vec::new();
        for_each_subset(&open, |to_d| {
            if !to_d.is_empty() {
                splits.push(to_d.clone());
            }
        });
        for to_d in splits {
            let next_a = a.union(&open.difference(&to_d));
            let next_d = d.union(&to_d);
            self.branch(next_a, next_d)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::brute::brute_force_inner;

    fn brute(class: &PiClass) -> impl FnMut(&Graph) -> Result<VertexSet> + '_ {
        move |h: &Graph| Ok(brute_force_inner(h, class))
    }

    #[test]
    fn cycles() {
        let chordal = PiClass::chordal();
        let w = finite_deletion_solve(&Graph::cycle(4), &chordal, 4, &mut brute(&chordal), 0.3).unwrap();
        assert_eq!(w.len(), 3);
        let w = finite_deletion_solve(&Graph::cycle(5), &chordal, 5, &mut brute(&chordal), 0.3).unwrap();
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn forbidden_free_input_calls_inner_once() {
        let chordal = PiClass::chordal();
        let mut calls = 0;
        let mut inner = |h: &Graph| {
            calls += 1;
            Ok(brute_force_inner(h, &chordal))
        };
        let g = Graph::path(6);
        let w = finite_deletion_solve(&g, &chordal, 6, &mut inner, 0.5).unwrap();
        assert_eq!(w, g.vertices());
        assert_eq!(calls, 1);
    }
}
