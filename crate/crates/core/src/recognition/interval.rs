use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::chordal::{check_chordal, maximal_cliques_from_peo, Chordality};
use crate::vertex_set::VertexSet;

/// An ordering of the maximal cliques in which every vertex occupies a
/// consecutive run of bags, or `None` when the graph is not interval.
pub fn clique_path(g: &Graph) -> Option<Vec<VertexSet>> {
    let Chordality::Chordal(peo) = check_chordal(g) else {
        return None;
    };
    let bags = maximal_cliques_from_peo(g, &peo);
    let mut path = Vec::with_capacity(bags.len());
    // components are independent; concatenating their clique paths is valid
    for comp in g.components_unchecked(&g.vertices()) {
        let local: Vec<VertexSet> = bags.iter().filter(|b| b.is_subset(&comp)).cloned().collect();
        let order = consecutive_order(&local)?;
        path.extend(order.into_iter().map(|i| local[i].clone()));
    }
    Some(path)
}

pub fn is_interval(g: &Graph) -> bool {
    clique_path(g).is_some()
}

/// Searches for a linear order of `bags` with the consecutive-ones property
/// on vertices. A partial order is summarised by the set of placed bags and
/// the last bag, which fixes the closed vertices (placed, not in the last
/// bag) and the open ones that must continue; failed states are memoised.
pub(crate) fn consecutive_order(bags: &[VertexSet]) -> Option<Vec<usize>> {
    let k = bags.len();
    if k <= 2 {
        return Some((0..k).collect());
    }
    let universe = bags.iter().map(VertexSet::bound).max().unwrap_or(0);
    let mut count = vec![0usize; universe];
    for b in bags {
        for v in b {
            count[v] += 1;
        }
    }
    let mut search = OrderSearch {
        bags,
        remaining: count,
        covered: VertexSet::new(),
        placed: VertexSet::new(),
        order: Vec::with_capacity(k),
        failed: HashSet::new(),
    };
    for start in 0..k {
        search.place(start);
        if search.extend() {
            return Some(search.order);
        }
        search.unplace(start);
    }
    None
}

struct OrderSearch<'a> {
    bags: &'a [VertexSet],
    remaining: Vec<usize>,
    covered: VertexSet,
    placed: VertexSet,
    order: Vec<usize>,
    failed: HashSet<(VertexSet, usize)>,
}

impl OrderSearch<'_> {
    fn place(&mut self, b: usize) {
        for v in &self.bags[b] {
            self.remaining[v] -= 1;
        }
        self.placed.insert(b);
        self.order.push(b);
        self.recompute_cover();
    }

    fn unplace(&mut self, b: usize) {
        for v in &self.bags[b] {
            self.remaining[v] += 1;
        }
        self.placed.remove(b);
        self.order.pop();
        self.recompute_cover();
    }

    fn recompute_cover(&mut self) {
        self.covered = self.placed.iter().fold(VertexSet::new(), |acc, i| acc.union(&self.bags[i]));
    }

    fn extend(&mut self) -> bool {
        if self.order.len() == self.bags.len() {
            return true;
        }
        let last = *self.order.last().expect("non-empty order");
        let key = (self.placed.clone(), last);
        if self.failed.contains(&key) {
            return false;
        }
        let open: VertexSet = self.bags[last].iter().filter(|&v| self.remaining[v] > 0).collect();
        for b in 0..self.bags.len() {
            if self.placed.contains(b) {
                continue;
            }
            let bag = &self.bags[b];
            // no closed vertex may reappear, and open vertices must continue
            if !bag.intersection(&self.covered).is_subset(&self.bags[last]) || !open.is_subset(bag) {
                continue;
            }
            self.place(b);
            if self.extend() {
                return true;
            }
            self.unplace(b);
        }
        self.failed.insert(key);
        false
    }
}

/// Separator-compatibility test for chordal graphs: `S` must be a clique, the answer is
/// plain chordality.
pub fn separator_test_chordal(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !g.is_clique(s) {
        return Err(Error::NotAClique);
    }
    Ok(crate::recognition::chordal::is_chordal(g))
}

/// Separator-compatibility test for interval graphs: does `G` have a clique path with
/// `S` inside an end bag? Decided by hanging a pendant path `v - v'` off `S`
/// (v adjacent to all of `S`) and testing intervality.
pub fn separator_test_interval(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !g.is_clique(s) {
        return Err(Error::NotAClique);
    }
    let (with_v, v) = g.with_apex(s);
    let (forced, _) = with_v.with_apex(&VertexSet::singleton(v));
    Ok(is_interval(&forced))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    pub(crate) fn bipartite_claw() -> Graph {
        Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn basic_membership() {
        assert!(!is_interval(&Graph::cycle(4)));
        for n in 0..9 {
            assert!(is_interval(&Graph::path(n)));
        }
        assert!(!is_interval(&bipartite_claw()));
        assert!(is_interval(&Graph::star(6)));
    }

    #[test]
    fn clique_path_is_consecutive() {
        // caterpillar: spine 0-1-2 with leaves
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (1, 4), (1, 5), (2, 6)]).unwrap();
        let path = clique_path(&g).unwrap();
        for v in 0..g.n() {
            let idx: Vec<usize> = (0..path.len()).filter(|&i| path[i].contains(v)).collect();
            assert!(idx.windows(2).all(|w| w[1] == w[0] + 1), "vertex {v} in {idx:?}");
        }
    }

    #[test]
    fn end_bag_tests() {
        assert!(separator_test_interval(&Graph::path(2), &set(&[0])).unwrap());
        assert!(separator_test_interval(&Graph::path(3), &set(&[1])).unwrap());
        assert!(!separator_test_interval(&Graph::path(5), &set(&[2])).unwrap());
        assert!(separator_test_interval(&Graph::path(5), &set(&[0, 1])).unwrap());
        assert!(separator_test_interval(&Graph::path(5), &VertexSet::new()).unwrap());
        assert_eq!(separator_test_interval(&Graph::path(3), &set(&[0, 2])), Err(Error::NotAClique));
    }

    #[test]
    fn chordal_separator_test() {
        assert!(separator_test_chordal(&Graph::complete(3), &set(&[0])).unwrap());
        assert!(!separator_test_chordal(&Graph::cycle(4), &VertexSet::new()).unwrap());
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(separator_test_chordal(&tree, &set(&[1, 3])).unwrap());
        assert_eq!(separator_test_chordal(&Graph::cycle(4), &set(&[0, 2])), Err(Error::NotAClique));
    }
}
