use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Outcome of a chordality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// Chordal, with a perfect elimination ordering.
    Chordal(Vec<usize>),
    /// Not chordal; the set induces a chordless cycle of length at least 4.
    Hole(VertexSet),
}

/// Maximum cardinality search visit order (ties to the smallest id).
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Checks chordality via maximum cardinality search and verification of the
/// reversed visit order as a perfect elimination ordering.
pub fn check_chordal(g: &Graph) -> Chordality {
    let mut peo = mcs_order(g);
    peo.reverse();
    match first_peo_violation(g, &peo) {
        None => Chordality::Chordal(peo),
        Some((v, x, y)) => {
            let hole = hole_through(g, v, x, y)
                .unwrap_or_else(|| shortest_hole(g, usize::MAX).expect("non-chordal graph has a hole"));
            Chordality::Hole(hole)
        }
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    matches!(check_chordal(g), Chordality::Chordal(_))
}

/// Finds `v` whose later neighbours are not a clique, reporting the
/// earliest later neighbour `x` and a later neighbour `y` not adjacent to it.
fn first_peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        let Some(&x) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        if let Some(&y) = later.iter().find(|&&u| u != x && !g.adjacent(x, u)) {
            return Some((v, x, y));
        }
    }
    None
}

/// Closes `x - v - y` (x, y non-adjacent) into a hole with a shortest
/// `x`-`y` path avoiding `N[v]`, when one exists.
fn hole_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<VertexSet> {
    let mut allowed = g.vertices().difference(&g.neighborhood_unchecked(&VertexSet::singleton(v), true));
    allowed.insert(x);
    allowed.insert(y);
    let path = shortest_path(g, x, y, &allowed, usize::MAX)?;
    let mut hole: VertexSet = path.into_iter().collect();
    hole.insert(v);
    Some(hole)
}

/// Shortest `s`-`t` path inside `allowed` with at most `max_vertices`
/// vertices; parents are chosen by smallest id.
pub(crate) fn shortest_path(
    g: &Graph,
    s: usize,
    t: usize,
    allowed: &VertexSet,
    max_vertices: usize,
) -> Option<Vec<usize>> {
    let mut layers = vec![VertexSet::singleton(s)];
    let mut seen = VertexSet::singleton(s);
    while !seen.contains(t) {
        if layers.len() >= max_vertices {
            return None;
        }
        let mut next = g.neighborhood_unchecked(layers.last().unwrap(), false);
        next.intersect_with(allowed);
        next.difference_with(&seen);
        if next.is_empty() {
            return None;
        }
        seen.union_with(&next);
        layers.push(next);
    }
    let mut path = vec![t];
    let mut cur = t;
    for layer in layers.iter().rev().skip(1) {
        cur = layer.intersection(g.neighbors(cur)).first().expect("bfs parent");
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// A shortest chordless cycle of length in `[4, max_len]`; ties go to the
/// lexicographically smallest vertex set.
///
/// Every hole through `v` with neighbours `x`, `y` on it is `v` plus an
/// induced `x`-`y` path avoiding `N[v]`, so minimising a BFS path over all
/// such triples yields the minimum hole length.
pub fn shortest_hole(g: &Graph, max_len: usize) -> Option<VertexSet> {
    let mut best: Option<VertexSet> = None;
    for v in 0..g.n() {
        let nb = g.neighbors(v).to_vec();
        let closed = g.neighborhood_unchecked(&VertexSet::singleton(v), true);
        let base = g.vertices().difference(&closed);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let limit = best.as_ref().map_or(max_len, |b| b.len().min(max_len));
                if limit < 4 {
                    return best;
                }
                let mut allowed = base.clone();
                allowed.insert(x);
                allowed.insert(y);
                if let Some(path) = shortest_path(g, x, y, &allowed, limit - 1) {
                    let mut hole: VertexSet = path.into_iter().collect();
                    hole.insert(v);
                    let better = match &best {
                        None => true,
                        Some(b) => (hole.len(), &hole) < (b.len(), b),
                    };
                    if better {
                        best = Some(hole);
                    }
                }
            }
        }
    }
    best
}

/// Maximal cliques of a chordal graph, sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    let Chordality::Chordal(peo) = check_chordal(g) else {
        return Err(Error::NotChordal);
    };
    Ok(maximal_cliques_from_peo(g, &peo))
}

pub(crate) fn maximal_cliques_from_peo(g: &Graph, peo: &[usize]) -> Vec<VertexSet> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<VertexSet> = peo
        .iter()
        .map(|&v| {
            let mut c: VertexSet = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
            c.insert(v);
            c
        })
        .collect();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut out: Vec<VertexSet> = Vec::new();
    for c in candidates {
        if !out.iter().any(|m| c.is_subset(m)) {
            out.push(c);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn is_hole(g: &Graph, w: &VertexSet) -> bool {
        let h = g.induced_subgraph(w).unwrap();
        w.len() >= 4 && h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
    }

    #[test]
    fn c4_is_not_chordal() {
        assert_eq!(check_chordal(&Graph::cycle(4)), Chordality::Hole(VertexSet::full(4)));
    }

    #[test]
    fn trees_are_chordal() {
        let t = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        assert!(is_chordal(&t));
        assert!(is_chordal(&Graph::star(5)));
        assert!(is_chordal(&Graph::empty(0)));
    }

    #[test]
    fn c5_with_chord_has_c4_witness() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        match check_chordal(&g) {
            Chordality::Hole(w) => {
                assert_eq!(w, set(&[0, 2, 3, 4]));
                assert!(is_hole(&g, &w));
            }
            other => panic!("expected hole, got {other:?}"),
        }
    }

    #[test]
    fn shortest_hole_respects_bound() {
        assert_eq!(shortest_hole(&Graph::cycle(12), 10), None);
        assert_eq!(shortest_hole(&Graph::cycle(12), 12), Some(VertexSet::full(12)));
        assert_eq!(shortest_hole(&Graph::cycle(4), 10), Some(VertexSet::full(4)));
        assert_eq!(shortest_hole(&Graph::complete(6), 10), None);
    }

    #[test]
    fn maximal_cliques_of_small_graphs() {
        assert_eq!(maximal_cliques(&Graph::complete(3)).unwrap(), vec![set(&[0, 1, 2])]);
        assert_eq!(maximal_cliques(&Graph::path(3)).unwrap(), vec![set(&[0, 1]), set(&[1, 2])]);
        assert_eq!(maximal_cliques(&Graph::cycle(4)), Err(Error::NotChordal));
        assert_eq!(maximal_cliques(&Graph::empty(2)).unwrap(), vec![set(&[0]), set(&[1])]);
    }
}
