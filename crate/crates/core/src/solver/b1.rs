use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::json;

use crate::classes::PiClass;
use crate::enumeration::{enumerate_connected_supersets, two_table_solve_counted, TableInstance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{better, pick, standalone, stats, ConstantSchedule, Ctx, Solution};
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

/// Branch B.1 for one clique `S` and side sizes `(|X1|, |X2|)`: the best
/// member `S ∪ X1 ∪ X2` found, if any. Every guess of neighbourhood sizes
/// is tried; no band or level restriction applies.
pub fn solve_branch_b1(
    g: &Graph,
    class: &PiClass,
    s: &VertexSet,
    c: &ConstantSchedule,
    sizes: (usize, usize),
) -> Result<Option<Solution>> {
    g.check_set(s)?;
    if !g.is_clique(s) {
        return Err(Error::NotAClique);
    }
    let (found, stats) = standalone(class, c, |ctx| B1State::new(g, s).run(ctx, sizes.0, sizes.1, false))?;
    Ok(found.map(|vertices| Solution { vertices, stats }))
}

/// Side sizes `x1 <= x2` with `|S| + x1 + x2 = t` and both sides within
/// two thirds of `t`.
pub(crate) fn balanced_splits(t: usize, s: usize) -> Vec<(usize, usize)> {
    let Some(rem) = t.checked_sub(s) else {
        return Vec::new();
    };
    (0..=rem / 2).map(|x1| (x1, rem - x1)).filter(|&(_, x2)| 3 * x2 <= 2 * t).collect()
}

/// B.1 alone, searching sizes from `n` down and returning at the first size
/// with a hit. Only defined for the base classes: the table step pairs
/// sides that are members separately, which says nothing about overlay
/// copies spanning both sides.
pub(crate) fn forced_levels(ctx: &Ctx<'_>, g: &Graph) -> Result<VertexSet> {
    if !ctx.class.overlay().is_empty() {
        return Err(Error::Precondition("forced-B1 supports the chordal and interval base classes only".into()));
    }
    let n = g.n();
    let mut states: Vec<B1State<'_>> = g.cliques_up_to(n).iter().map(|s| B1State::new(g, s)).collect();
    for t in (0..=n).rev() {
        let level = states
            .par_iter_mut()
            .filter(|st| st.s.len() <= t)
            .map(|st| -> Result<Option<VertexSet>> {
                stats::bump(&ctx.counters.step3);
                let mut best = None;
                for (x1, x2) in balanced_splits(t, st.s.len()) {
                    stats::bump(&ctx.counters.step4);
                    best = pick(best, st.run(ctx, x1, x2, false)?);
                }
                Ok(best)
            })
            .try_reduce(|| None, |a, b| Ok(pick(a, b)))?;
        ctx.trace("level", json!({"t": t, "hit": level.is_some()}));
        if let Some(w) = level {
            return Ok(w);
        }
    }
    Ok(VertexSet::new())
}

type Guesses = Arc<Vec<(VertexSet, VertexSet)>>;
type SepList = Arc<Vec<SideCandidate>>;

struct SideCandidate {
    x: VertexSet,
    open: VertexSet,
    closed: VertexSet,
}

/// Per-clique state of B.1. Vertex sets inside are ids of `G' = G - S`;
/// enumeration results are cached across side sizes.
pub(crate) struct B1State<'g> {
    g: &'g Graph,
    pub(crate) s: VertexSet,
    gp: Graph,
    ids: Vec<usize>,
    guesses: HashMap<(usize, usize), Guesses>,
    separable: HashMap<usize, SepList>,
}

impl<'g> B1State<'g> {
    pub(crate) fn new(g: &'g Graph, s: &VertexSet) -> Self {
        let gp = g.induced_unchecked(&g.vertices().difference(s));
        let ids = gp.parent_ids().to_vec();
        B1State { g, s: s.clone(), gp, ids, guesses: HashMap::new(), separable: HashMap::new() }
    }

    /// Best member `S ∪ X1 ∪ X2` with `|X1| = x1`, `|X2| = x2`, in ids of `G`.
    pub(crate) fn run(&mut self, ctx: &Ctx<'_>, x1: usize, x2: usize, zeta_skip: bool) -> Result<Option<VertexSet>> {
        let m = self.gp.n();
        if x1 + x2 > m {
            return Ok(None);
        }
        let n = self.g.n() as f64;
        let rest = m - x1 - x2;
        let mut best = None;
        for a1 in 0..=if x1 == 0 { 0 } else { rest } {
            for a2 in 0..=if x2 == 0 { 0 } else { rest } {
                for a12 in 0..=a1.min(a2) {
                    if a1 + a2 - a12 > rest {
                        continue;
                    }
                    let found = if a1.abs_diff(x1) as f64 >= ctx.c.delta * n {
                        stats::bump(&ctx.counters.b11);
                        self.one_side_heavy(ctx, (x1, a1), (x2, a2), a12)?
                    } else if a2.abs_diff(x2) as f64 >= ctx.c.delta * n {
                        stats::bump(&ctx.counters.b11);
                        self.one_side_heavy(ctx, (x2, a2), (x1, a1), a12)?
                    } else if a12 as f64 >= ctx.c.epsilon * n {
                        stats::bump(&ctx.counters.b12);
                        self.shared_heavy(ctx, (x1, a1), (x2, a2), a12)?
                    } else {
                        let none = rest + a12 - a1 - a2;
                        if zeta_skip && none as f64 > ctx.c.zeta() * n {
                            continue;
                        }
                        stats::bump(&ctx.counters.b13);
                        self.tables(ctx, x1, x2, a12, none)?
                    };
                    if let Some(w) = found {
                        if better(&w, best.as_ref()) {
                            best = Some(w);
                        }
                    }
                }
            }
        }
        Ok(best)
    }

    fn offer(&self, ctx: &Ctx<'_>, local: &VertexSet, best: &mut Option<VertexSet>) {
        stats::bump(&ctx.counters.candidates);
        let w = self.s.union(&local.map(&self.ids));
        if better(&w, best.as_ref()) && ctx.member(self.g, &w) {
            *best = Some(w);
        }
    }

    /// `X ⊆ V(G')` with `|X| = x`, `|N'(X)| = a` and at most `⌊γn⌋`
    /// components, found from every guess `P` of one vertex per component.
    fn guesses(&mut self, ctx: &Ctx<'_>, x: usize, a: usize) -> Result<Guesses> {
        if let Some(hit) = self.guesses.get(&(x, a)) {
            return Ok(hit.clone());
        }
        let p_max = ((ctx.c.gamma * self.g.n() as f64).floor() as usize).min(x);
        let found = connected_guesses(ctx, &self.gp, x, a, p_max)?;
        let list: Vec<(VertexSet, VertexSet)> = found
            .into_iter()
            .map(|set| {
                let open = self.gp.neighborhood_unchecked(&set, false);
                (set, open)
            })
            .collect();
        let list = Arc::new(list);
        self.guesses.insert((x, a), list.clone());
        Ok(list)
    }

    /// B.1.1: side `a` has a neighbourhood far from its size, so it is
    /// enumerated; side `b` is brute-forced outside `N'[X_a]`.
    fn one_side_heavy(
        &mut self,
        ctx: &Ctx<'_>,
        (xa, aa): (usize, usize),
        (xb, ab): (usize, usize),
        a12: usize,
    ) -> Result<Option<VertexSet>> {
        let mut best = None;
        let all = self.gp.vertices();
        for (set_a, open_a) in self.guesses(ctx, xa, aa)?.iter() {
            let pool = all.difference(set_a).difference(open_a);
            for_each_subset_of_size(&pool, xb, |set_b| {
                let open_b = self.gp.neighborhood_unchecked(set_b, false);
                if open_b.len() == ab && open_b.intersection_len(open_a) == a12 {
                    self.offer(ctx, &set_a.union(set_b), &mut best);
                }
                true
            });
        }
        ctx.trace("b11", json!({"s": self.s.to_vec(), "xa": xa, "aa": aa, "xb": xb, "ab": ab, "a12": a12}));
        Ok(best)
    }

    /// B.1.2: the sides share many neighbours; both are enumerated, `X2`
    /// inside `G' - N'[X1]` where it has `a2 - a12` neighbours.
    fn shared_heavy(
        &mut self,
        ctx: &Ctx<'_>,
        (x1, a1): (usize, usize),
        (x2, a2): (usize, usize),
        a12: usize,
    ) -> Result<Option<VertexSet>> {
        let mut best = None;
        let p_max = ((ctx.c.gamma * self.g.n() as f64).floor() as usize).min(x2);
        for (set1, open1) in self.guesses(ctx, x1, a1)?.iter() {
            let keep = self.gp.vertices().difference(set1).difference(open1);
            let sub = self.gp.induced_unchecked(&keep);
            let sub_ids = sub.parent_ids().to_vec();
            for set2 in connected_guesses(ctx, &sub, x2, a2 - a12, p_max)? {
                let set2 = set2.map(&sub_ids);
                let open2 = self.gp.neighborhood_unchecked(&set2, false);
                if open2.len() == a2 && open2.intersection_len(open1) == a12 {
                    self.offer(ctx, &set1.union(&set2), &mut best);
                }
            }
        }
        ctx.trace("b12", json!({"s": self.s.to_vec(), "x1": x1, "a1": a1, "x2": x2, "a2": a2, "a12": a12}));
        Ok(best)
    }

    /// Sets `X` of size `x` with `G[S ∪ X]` passing the separator test.
    fn separable(&mut self, ctx: &Ctx<'_>, x: usize) -> Result<SepList> {
        if let Some(hit) = self.separable.get(&x) {
            return Ok(hit.clone());
        }
        let mut list = Vec::new();
        let mut failure = None;
        for_each_subset_of_size(&self.gp.vertices(), x, |set| {
            stats::bump(&ctx.counters.candidates);
            let host_set = self.s.union(&set.map(&self.ids));
            let host = self.g.induced_unchecked(&host_set);
            let s_local: VertexSet =
                host.parent_ids().iter().enumerate().filter(|(_, p)| self.s.contains(**p)).map(|(i, _)| i).collect();
            match ctx.class.separator_test(&host, &s_local) {
                Ok(true) => {
                    let open = self.gp.neighborhood_unchecked(set, false);
                    let closed = open.union(set);
                    list.push(SideCandidate { x: set.clone(), open, closed });
                    true
                }
                Ok(false) => true,
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let list = Arc::new(list);
        self.separable.insert(x, list.clone());
        Ok(list)
    }

    /// B.1.3: guess `U_both` (neighbours of both sides) and `U_none`
    /// (neighbours of neither); on the rest `I` every vertex is in exactly
    /// one closed side neighbourhood, which the table search matches.
    fn tables(&mut self, ctx: &Ctx<'_>, x1: usize, x2: usize, a12: usize, none: usize) -> Result<Option<VertexSet>> {
        let side1 = self.separable(ctx, x1)?;
        let side2 = self.separable(ctx, x2)?;
        let all = self.gp.vertices();
        let mut best = None;
        let mut failure = None;
        for_each_subset_of_size(&all, a12, |both| {
            for_each_subset_of_size(&all.difference(both), none, |neither| {
                let inner = all.difference(both).difference(neither);
                let order = inner.to_vec();
                let pick_side = |side: &[SideCandidate]| -> (Vec<usize>, Vec<Vec<u8>>) {
                    side.iter()
                        .enumerate()
                        .filter(|(_, c)| {
                            c.x.is_subset(&inner) && c.open.is_disjoint(neither) && both.is_subset(&c.open)
                        })
                        .map(|(i, c)| (i, order.iter().map(|&v| u8::from(c.closed.contains(v))).collect()))
                        .unzip()
                };
                let (idx1, cols1) = pick_side(&side1);
                let (idx2, cols2) = pick_side(&side2);
                if cols1.is_empty() || cols2.is_empty() {
                    return true;
                }
                stats::add(&ctx.counters.two_table_columns, (cols1.len() + cols2.len()) as u64);
                let inst = TableInstance { k: order.len(), cols1, cols2, target: vec![1; order.len()] };
                match two_table_solve_counted(&inst) {
                    Ok(run) => {
                        if let Some((i, j)) = run.pair {
                            let local = side1[idx1[i]].x.union(&side2[idx2[j]].x);
                            self.offer(ctx, &local, &mut best);
                        }
                        true
                    }
                    Err(e) => {
                        failure = Some(e);
                        false
                    }
                }
            });
            failure.is_none()
        });
        if let Some(e) = failure {
            return Err(e);
        }
        ctx.trace("b13", json!({"s": self.s.to_vec(), "x1": x1, "x2": x2, "a12": a12, "none": none}));
        Ok(best)
    }
}

/// `X ⊆ V(h)` of size `x` with `|N(X)| = a` whose components each contain a
/// vertex of some guess `P` with `1 <= |P| <= p_max`. The empty set stands
/// for itself.
pub(crate) fn connected_guesses(
    ctx: &Ctx<'_>,
    h: &Graph,
    x: usize,
    a: usize,
    p_max: usize,
) -> Result<BTreeSet<VertexSet>> {
    let mut found = BTreeSet::new();
    if x == 0 {
        if a == 0 {
            found.insert(VertexSet::new());
        }
        return Ok(found);
    }
    let all = h.vertices();
    let mut failure = None;
    for p in 1..=p_max.min(x) {
        for_each_subset_of_size(&all, p, |guess| match enumerate_connected_supersets(h, guess, x, a) {
            Ok(sets) => {
                stats::add(&ctx.counters.candidates, sets.len() as u64);
                found.extend(sets);
                true
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::brute_force_inner;

    fn forced() -> ConstantSchedule {
        ConstantSchedule { gamma: 1.0, delta: 0.15, epsilon: 0.1, ..ConstantSchedule::default() }
    }

    #[test]
    fn splits_are_balanced() {
        assert_eq!(balanced_splits(6, 0), vec![(2, 4), (3, 3)]);
        assert_eq!(balanced_splits(3, 1), vec![(0, 2), (1, 1)]);
        assert_eq!(balanced_splits(1, 1), vec![(0, 0)]);
        assert!(balanced_splits(1, 2).is_empty());
    }

    #[test]
    fn two_components_meet_in_the_table() {
        // two disjoint triangles with S empty: only B.1.3 fits
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let c = ConstantSchedule { gamma: 1.0, delta: 0.9, epsilon: 0.5, ..ConstantSchedule::default() };
        let sol = solve_branch_b1(&g, &PiClass::chordal(), &VertexSet::new(), &c, (3, 3)).unwrap().unwrap();
        assert_eq!(sol.vertices, VertexSet::full(6));
        assert!(sol.stats.branches.b13 > 0);
        assert!(sol.stats.two_table_columns > 0);
    }

    #[test]
    fn level_search_matches_brute_force() {
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::cycle(4).disjoint_union(&Graph::path(3)),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap(),
        ];
        for g in &graphs {
            for class in [PiClass::chordal(), PiClass::interval()] {
                let sol = crate::solver::solve(g, &class, &forced(), crate::solver::Mode::ForcedB1).unwrap();
                assert_eq!(sol.size(), brute_force_inner(g, &class).len(), "{class} {:?}", g.edges());
            }
        }
    }

    #[test]
    fn rejects_overlays() {
        let class = PiClass::with_overlay(&PiClass::chordal(), vec![Graph::star(3)]).unwrap();
        let err = crate::solver::solve(&Graph::path(3), &class, &forced(), crate::solver::Mode::ForcedB1);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }
}
