use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::tree::clique_tree;
use crate::vertex_set::VertexSet;

/// A clique `s` splitting the remaining vertices into `x1`, `x2` with no
/// edge across and each side at most two thirds of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorSplit {
    pub s: VertexSet,
    pub x1: VertexSet,
    pub x2: VertexSet,
}

impl SeparatorSplit {
    pub fn is_valid_for(&self, h: &Graph) -> bool {
        let n = h.n();
        let parts = [&self.s, &self.x1, &self.x2];
        let disjoint = self.s.is_disjoint(&self.x1) && self.s.is_disjoint(&self.x2) && self.x1.is_disjoint(&self.x2);
        let covers = parts.iter().fold(VertexSet::new(), |acc, p| acc.union(p)) == h.vertices();
        let no_cross = self.x1.iter().all(|v| h.neighbors(v).is_disjoint(&self.x2));
        disjoint
            && covers
            && no_cross
            && h.is_clique(&self.s)
            && 3 * self.x1.len() <= 2 * n
            && 3 * self.x2.len() <= 2 * n
    }
}

/// Finds a 2/3-balanced clique separator of a chordal graph.
///
/// Candidates are tried in the order: the empty set, the minimal separators
/// on clique-tree edges, then the bags themselves, each group by size and
/// then lexicographically. Some bag always works, so the search succeeds on
/// every chordal input.
pub fn balanced_clique_separator(h: &Graph) -> Result<SeparatorSplit> {
    if h.n() == 0 {
        return Err(Error::Precondition("graph must have at least one vertex".into()));
    }
    let tree = clique_tree(h)?;
    let mut seps: Vec<VertexSet> =
        tree.edges.iter().map(|&(a, b)| tree.bags[a].intersection(&tree.bags[b])).filter(|s| !s.is_empty()).collect();
    seps.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    seps.dedup();
    let mut bags = tree.bags.clone();
    bags.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));

    let candidates = std::iter::once(VertexSet::new()).chain(seps).chain(bags);
    for s in candidates {
        if let Some(split) = split_around(h, &s) {
            return Ok(split);
        }
    }
    Err(Error::Precondition("no balanced clique separator found".into()))
}

/// Groups the components of `H - S` into two sides minimising the larger
/// one; accepts when that side is within two thirds of `|V(H)|`.
fn split_around(h: &Graph, s: &VertexSet) -> Option<SeparatorSplit> {
    let n = h.n();
    let comps = h.components_unchecked(&h.vertices().difference(s));
    let total: usize = comps.iter().map(VertexSet::len).sum();
    // reach[t] = index of the component that first reached sum t
    let mut reach: Vec<Option<usize>> = vec![None; total + 1];
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    for (i, c) in comps.iter().enumerate() {
        for t in (c.len()..=total).rev() {
            if !reachable[t] && reachable[t - c.len()] {
                reachable[t] = true;
                reach[t] = Some(i);
            }
        }
    }
    let target = (0..=total / 2).rev().find(|&t| reachable[t])?;
    if 3 * (total - target) > 2 * n {
        return None;
    }
    let mut x1 = VertexSet::new();
    let mut t = target;
    while t > 0 {
        let i = reach[t].expect("reachable sum has a witness");
        x1.union_with(&comps[i]);
        t -= comps[i].len();
    }
    let x2 = h.vertices().difference(s).difference(&x1);
    let (x1, x2) = if x2.first() < x1.first() && !x2.is_empty() && !x1.is_empty() { (x2, x1) } else { (x1, x2) };
    Some(SeparatorSplit { s: s.clone(), x1, x2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn path_on_three_vertices() {
        let split = balanced_clique_separator(&Graph::path(3)).unwrap();
        assert_eq!(split, SeparatorSplit { s: set(&[1]), x1: set(&[0]), x2: set(&[2]) });
    }

    #[test]
    fn complete_graph_split_is_valid() {
        let k4 = Graph::complete(4);
        let split = balanced_clique_separator(&k4).unwrap();
        assert!(split.is_valid_for(&k4));
    }

    #[test]
    fn two_triangles_need_no_separator() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let split = balanced_clique_separator(&g).unwrap();
        assert_eq!(split, SeparatorSplit { s: VertexSet::new(), x1: set(&[0, 1, 2]), x2: set(&[3, 4, 5]) });
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(balanced_clique_separator(&Graph::cycle(4)), Err(Error::NotChordal));
        assert!(balanced_clique_separator(&Graph::empty(0)).is_err());
    }
}
