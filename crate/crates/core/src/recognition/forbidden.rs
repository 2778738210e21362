//! Bounded-size forbidden induced subgraph finders.

use crate::graph::Graph;
use crate::recognition::chordal::shortest_hole;
use crate::recognition::interval::is_interval;
use crate::vertex_set::VertexSet;

/// A shortest hole on at most `max_size` vertices.
pub fn find_forbidden_chordal(g: &Graph, max_size: usize) -> Option<VertexSet> {
    shortest_hole(g, max_size)
}

/// A vertex set of size at most `max_size` inducing a minimal non-interval
/// graph (bipartite claw, umbrella, net, tent or hole).
///
/// A minimal witness is first obtained by greedy vertex deletion. If it is
/// too large, the five shapes are searched for directly, which decides
/// whether any small witness exists.
pub fn find_forbidden_interval(g: &Graph, max_size: usize) -> Option<VertexSet> {
    if is_interval(g) {
        return None;
    }
    let witness = minimal_non_interval(g);
    if witness.len() <= max_size {
        return Some(witness);
    }
    let mut best = Best { limit: max_size, set: None };
    if let Some(h) = shortest_hole(g, max_size) {
        best.offer(h);
    }
    search_bipartite_claws(g, &mut best);
    search_umbrellas(g, &mut best);
    search_nets(g, &mut best);
    search_tents(g, &mut best);
    best.set
}

/// Deletes vertices in id order while the rest stays non-interval.
fn minimal_non_interval(g: &Graph) -> VertexSet {
    let mut keep = g.vertices();
    for v in 0..g.n() {
        keep.remove(v);
        if is_interval(&g.induced_unchecked(&keep)) {
            keep.insert(v);
        }
    }
    keep
}

struct Best {
    limit: usize,
    set: Option<VertexSet>,
}

impl Best {
    fn offer(&mut self, s: VertexSet) {
        if s.len() > self.limit {
            return;
        }
        let better = match &self.set {
            None => true,
            Some(b) => (s.len(), &s) < (b.len(), b),
        };
        if better {
            self.set = Some(s);
        }
    }

    /// Largest size still worth finding.
    fn cap(&self) -> usize {
        self.set.as_ref().map_or(self.limit, |b| b.len().min(self.limit))
    }
}

/// Extends `path` by induced-path steps inside `allowed`, up to
/// `max_vertices` vertices. `visit` sees every path of length at least two
/// and returns whether to keep extending it.
fn grow_paths<F>(g: &Graph, path: &mut Vec<usize>, allowed: &VertexSet, max_vertices: usize, visit: &mut F)
where
    F: FnMut(&[usize]) -> bool,
{
    if path.len() >= max_vertices {
        return;
    }
    let last = *path.last().expect("path starts non-empty");
    let earlier: VertexSet = path[..path.len() - 1].iter().collect();
    let blocked = g.neighborhood_unchecked(&earlier, true);
    let mut next = g.neighbors(last).intersection(allowed);
    next.difference_with(&blocked);
    for v in next.iter() {
        path.push(v);
        if visit(path) {
            grow_paths(g, path, allowed, max_vertices, visit);
        }
        path.pop();
    }
}

/// Vertices adjacent to `to` and to none of `avoid`, excluding `avoid`.
fn private_neighbors(g: &Graph, to: usize, avoid: &VertexSet) -> VertexSet {
    let mut out = g.neighbors(to).clone();
    out.difference_with(&g.neighborhood_unchecked(avoid, true));
    out
}

fn search_bipartite_claws(g: &Graph, best: &mut Best) {
    if best.cap() < 7 {
        return;
    }
    for c in 0..g.n() {
        let nb = g.neighbors(c).to_vec();
        for (i, &a1) in nb.iter().enumerate() {
            for (j, &a2) in nb.iter().enumerate().skip(i + 1) {
                if g.adjacent(a1, a2) {
                    continue;
                }
                for &a3 in &nb[j + 1..] {
                    if g.adjacent(a1, a3) || g.adjacent(a2, a3) {
                        continue;
                    }
                    let arms = [a1, a2, a3];
                    let core: VertexSet = [c, a1, a2, a3].iter().collect();
                    let leaves: Vec<VertexSet> = arms
                        .iter()
                        .map(|&a| {
                            let others: VertexSet = core.iter().filter(|&x| x != a).collect();
                            private_neighbors(g, a, &others)
                        })
                        .collect();
                    for b1 in &leaves[0] {
                        for b2 in leaves[1].iter().filter(|&b| !g.adjacent(b1, b)) {
                            for b3 in leaves[2].iter().filter(|&b| !g.adjacent(b1, b) && !g.adjacent(b2, b)) {
                                let mut s = core.clone();
                                s.extend([b1, b2, b3]);
                                best.offer(s);
                            }
                        }
                    }
                }
            }
        }
    }
}

fn search_umbrellas(g: &Graph, best: &mut Best) {
    if best.cap() < 7 {
        return;
    }
    for u in 0..g.n() {
        let allowed = g.neighbors(u).clone();
        for start in allowed.iter() {
            let mut path = vec![start];
            grow_paths(g, &mut path, &allowed, 5, &mut |p| {
                if p.len() == 5 {
                    let c = p[2];
                    let mut avoid: VertexSet = p.iter().filter(|&&x| x != c).collect();
                    avoid.insert(u);
                    for b in private_neighbors(g, c, &avoid).iter() {
                        let mut s: VertexSet = p.iter().collect();
                        s.insert(u);
                        s.insert(b);
                        best.offer(s);
                    }
                }
                true
            });
        }
    }
}

fn search_nets(g: &Graph, best: &mut Best) {
    if best.cap() < 6 {
        return;
    }
    for u1 in 0..g.n() {
        let allowed = g.neighbors(u1).clone();
        for start in allowed.iter() {
            let mut path = vec![start];
            let max_path = best.cap().saturating_sub(4);
            grow_paths(g, &mut path, &allowed, max_path, &mut |p| {
                if p.len() + 4 > best.cap() {
                    return false;
                }
                let on_path: VertexSet = p.iter().collect();
                let (first, last) = (p[0], p[p.len() - 1]);
                let u2s = {
                    let mut s = allowed.clone();
                    s.difference_with(&g.neighborhood_unchecked(&on_path, true));
                    s
                };
                let mut avoid_first = on_path.clone();
                avoid_first.remove(first);
                avoid_first.insert(u1);
                let mut avoid_last = on_path.clone();
                avoid_last.remove(last);
                avoid_last.insert(u1);
                let lls = private_neighbors(g, first, &avoid_first);
                let rrs = private_neighbors(g, last, &avoid_last);
                for u2 in u2s.iter() {
                    for ll in lls.iter().filter(|&x| !g.adjacent(u2, x)) {
                        for rr in rrs.iter().filter(|&x| x != ll && !g.adjacent(u2, x) && !g.adjacent(ll, x)) {
                            let mut s = on_path.clone();
                            s.extend([u1, u2, ll, rr]);
                            best.offer(s);
                        }
                    }
                }
                true
            });
        }
    }
}

fn search_tents(g: &Graph, best: &mut Best) {
    if best.cap() < 6 {
        return;
    }
    for l in 0..g.n() {
        for r in g.neighbors(l).iter() {
            let common = g.neighbors(l).intersection(g.neighbors(r));
            let mut lr = VertexSet::singleton(l);
            lr.insert(r);
            let starts = private_neighbors(g, l, &VertexSet::singleton(r));
            let ends = private_neighbors(g, r, &VertexSet::singleton(l));
            let allowed = common.union(&ends);
            for b1 in starts.iter() {
                let mut path = vec![b1];
                let max_path = best.cap().saturating_sub(3);
                grow_paths(g, &mut path, &allowed, max_path, &mut |p| {
                    let tail = p[p.len() - 1];
                    if !ends.contains(tail) {
                        return true;
                    }
                    if p.len() >= 3 {
                        let on_path: VertexSet = p.iter().collect();
                        let mut us = common.clone();
                        us.difference_with(&g.neighborhood_unchecked(&on_path, true));
                        if let Some(u) = us.first() {
                            let mut s = on_path;
                            s.union_with(&lr);
                            s.insert(u);
                            best.offer(s);
                        }
                    }
                    false
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::for_each_subset_of_size;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bipartite_claw() -> Graph {
        Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    pub(crate) fn umbrella() -> Graph {
        // path 0-1-2-3-4 under apex 5, pendant 6 on the middle vertex
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (2, 6)]).unwrap()
    }

    fn net(k: usize) -> Graph {
        // u1 = 0, u2 = 1, path 2..2+k, pendants ll, rr
        let mut e = vec![(0, 1)];
        for i in 0..k {
            e.push((0, 2 + i));
            if i > 0 {
                e.push((1 + i, 2 + i));
            }
        }
        e.push((2, k + 2));
        e.push((k + 1, k + 3));
        Graph::from_edges(k + 4, &e).unwrap()
    }

    fn tent(k: usize) -> Graph {
        // u = 0, l = 1, r = 2, path 3..3+k
        let mut e = vec![(0, 1), (0, 2), (1, 2)];
        for i in 0..k {
            let b = 3 + i;
            if i > 0 {
                e.push((b - 1, b));
            }
            if i + 1 < k {
                e.push((1, b));
            }
            if i > 0 {
                e.push((2, b));
            }
        }
        Graph::from_edges(k + 3, &e).unwrap()
    }

    fn exhaustive_has_forbidden(g: &Graph, max_size: usize, chordal_only: bool) -> bool {
        let mut found = false;
        for k in 4..=max_size.min(g.n()) {
            for_each_subset_of_size(&g.vertices(), k, |w| {
                let h = g.induced_unchecked(w);
                found = if chordal_only { !crate::recognition::chordal::is_chordal(&h) } else { !is_interval(&h) };
                !found
            });
            if found {
                break;
            }
        }
        found
    }

    #[test]
    fn spec_examples() {
        assert_eq!(find_forbidden_chordal(&Graph::cycle(4), 10), Some(VertexSet::full(4)));
        assert_eq!(find_forbidden_chordal(&Graph::cycle(12), 10), None);
        assert_eq!(find_forbidden_chordal(&Graph::complete(5), 10), None);
        assert_eq!(find_forbidden_interval(&bipartite_claw(), 7), Some(VertexSet::full(7)));
        assert_eq!(find_forbidden_interval(&Graph::cycle(4), 4), Some(VertexSet::full(4)));
        assert_eq!(find_forbidden_interval(&Graph::path(6), 10), None);
    }

    #[test]
    fn shapes_are_minimal_non_interval() {
        let shapes = [umbrella(), net(2), net(3), net(4), tent(3), tent(4), tent(5), bipartite_claw()];
        for g in shapes {
            assert!(crate::recognition::chordal::is_chordal(&g));
            assert!(!is_interval(&g));
            for v in 0..g.n() {
                assert!(is_interval(&g.without(&VertexSet::singleton(v))));
            }
            assert_eq!(find_forbidden_interval(&g, g.n()), Some(g.vertices()));
            assert_eq!(find_forbidden_interval(&g, g.n() - 1), None);
        }
    }

    #[test]
    fn shape_search_finds_small_copy_behind_large_greedy_witness() {
        // greedy deletion breaks the low-id net first and keeps the long hole
        let big = net(2).disjoint_union(&Graph::cycle(9));
        assert_eq!(minimal_non_interval(&big).len(), 9);
        let w = find_forbidden_interval(&big, 6).unwrap();
        assert_eq!(w, (0..6).collect());
        let tents = tent(3).disjoint_union(&Graph::cycle(10));
        assert_eq!(find_forbidden_interval(&tents, 7).unwrap().len(), 6);
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..300 {
            let n = rng.gen_range(4..=8);
            let p = [0.2, 0.35, 0.5][rng.gen_range(0..3)];
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.link(u, v);
                    }
                }
            }
            for max_size in 4..=8 {
                let found = find_forbidden_interval(&g, max_size);
                assert_eq!(found.is_some(), exhaustive_has_forbidden(&g, max_size, false), "{:?}", g.edges());
                if let Some(w) = found {
                    assert!(w.len() <= max_size);
                    assert!(!is_interval(&g.induced_unchecked(&w)));
                }
                let hole = find_forbidden_chordal(&g, max_size);
                assert_eq!(hole.is_some(), exhaustive_has_forbidden(&g, max_size, true));
            }
        }
    }
}
