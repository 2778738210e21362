use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All connected `B` with `v ∈ B`, `|B| = b + 1` and `|N(B)| = f`, in
/// lexicographic order. There are at most `C(b + f, b)` of them.
pub fn enumerate_connected_sets(g: &Graph, v: usize, b: usize, f: usize) -> Result<Vec<VertexSet>> {
    g.check_vertex(v)?;
    let mut out = Vec::new();
    let mut search = Grow { g, size: b + 1, f, forced: VertexSet::new(), out: &mut out };
    search.run(VertexSet::singleton(v), VertexSet::new());
    out.sort();
    Ok(out)
}

/// All `B ⊇ P` with `|B| = size`, `|N(B)| = nbr_size` and every component of
/// `G[B]` meeting `P`, in lexicographic order.
///
/// A new vertex adjacent to all of `P` turns these into connected sets
/// through it; the vertices of `P` are never excluded, which is the same as
/// dropping the sets that miss `P` afterwards. Once `P ⊆ B` the new vertex
/// has no neighbours outside `B`, so neighbourhood sizes agree with `G`.
pub fn enumerate_connected_supersets(g: &Graph, p: &VertexSet, size: usize, nbr_size: usize) -> Result<Vec<VertexSet>> {
    g.check_set(p)?;
    if p.is_empty() {
        return Err(Error::Precondition("P must be non-empty".into()));
    }
    if size < p.len() {
        return Err(Error::Precondition(format!("size {size} is smaller than |P| = {}", p.len())));
    }
    let (host, apex) = g.with_apex(p);
    let mut found = Vec::new();
    let mut search = Grow { g: &host, size: size + 1, f: nbr_size, forced: p.clone(), out: &mut found };
    search.run(VertexSet::singleton(apex), VertexSet::new());
    let mut out: Vec<VertexSet> = found
        .into_iter()
        .map(|mut b| {
            b.remove(apex);
            b
        })
        .filter(|b| p.is_subset(b) && g.neighborhood_unchecked(b, false).len() == nbr_size)
        .collect();
    out.sort();
    Ok(out)
}

/// Include/exclude branching on the smallest frontier vertex. Excluded
/// vertices are neighbours of the current set forever, so a branch dies as
/// soon as more than `f` of them accumulate.
struct Grow<'a> {
    g: &'a Graph,
    size: usize,
    f: usize,
    forced: VertexSet,
    out: &'a mut Vec<VertexSet>,
}

impl Grow<'_> {
    fn run(&mut self, b: VertexSet, excluded: VertexSet) {
        if excluded.len() > self.f {
            return;
        }
        if b.len() == self.size {
            if self.g.neighborhood_unchecked(&b, false).len() == self.f {
                self.out.push(b);
            }
            return;
        }
        let mut frontier = self.g.neighborhood_unchecked(&b, false);
        frontier.difference_with(&excluded);
        let Some(u) = frontier.first() else {
            return;
        };
        let mut with_u = b.clone();
        with_u.insert(u);
        self.run(with_u, excluded.clone());
        if !self.forced.contains(u) {
            let mut without_u = excluded;
            without_u.insert(u);
            self.run(b, without_u);
        }
    }
}

/// `C(n, k)` as a float, exact for the small arguments used in tests.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn star_examples() {
        let star = Graph::star(3); // centre 0
        assert_eq!(enumerate_connected_sets(&star, 1, 1, 2).unwrap(), vec![set(&[0, 1])]);
        let from_centre = enumerate_connected_sets(&star, 0, 1, 2).unwrap();
        assert_eq!(from_centre, vec![set(&[0, 1]), set(&[0, 2]), set(&[0, 3])]);
        assert_eq!(from_centre.len() as f64, binomial(3, 1));
        assert_eq!(enumerate_connected_sets(&star, 0, 0, 3).unwrap(), vec![set(&[0])]);
        assert!(enumerate_connected_sets(&star, 0, 0, 2).unwrap().is_empty());
        assert!(enumerate_connected_sets(&star, 9, 0, 0).is_err());
    }

    #[test]
    fn superset_examples() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(enumerate_connected_supersets(&g, &set(&[0, 2]), 2, 2).unwrap(), vec![set(&[0, 2])]);
        assert!(enumerate_connected_supersets(&g, &set(&[0, 2]), 2, 1).unwrap().is_empty());
        assert_eq!(enumerate_connected_supersets(&g, &set(&[0]), 2, 0).unwrap(), vec![set(&[0, 1])]);
        assert!(enumerate_connected_supersets(&g, &set(&[0, 1]), 1, 0).is_err());
        assert!(enumerate_connected_supersets(&g, &VertexSet::new(), 1, 0).is_err());
    }

    #[test]
    fn singleton_supersets_match_connected_sets() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        for v in 0..6 {
            for b in 0..6 {
                for f in 0..6 {
                    assert_eq!(
                        enumerate_connected_supersets(&g, &VertexSet::singleton(v), b + 1, f).unwrap(),
                        enumerate_connected_sets(&g, v, b, f).unwrap()
                    );
                }
            }
        }
    }
}
