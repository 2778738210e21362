use crate::classes::PiClass;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{for_each_subset, for_each_subset_of_size, VertexSet};

/// `P ∪ X` for a largest `X ⊆ K` with `G[P ∪ X] ∈ Π`.
///
/// Every non-empty `W ⊆ K` with `|W| ≤ ℵ` is coloured red when
/// `G[P ∪ W] ∈ Π`. Since no minimal forbidden graph holds a clique of size
/// `ℵ + 1`, `G[P ∪ X] ∈ Π` exactly when all small subsets of `X` are red.
/// A largest such `X` is found by branching on a non-red `W` avoiding the
/// current `D`: each split of `W \ A` except "all into `A`" is a branch.
///
/// For overlay classes ℵ is the base value, so the answer is only
/// guaranteed when no overlay member contains a clique of size `ℵ + 1`.
pub fn max_clique_extension(g: &Graph, p: &VertexSet, k: &VertexSet, class: &PiClass) -> Result<VertexSet> {
    g.check_set(p)?;
    if !g.is_clique(k) {
        return Err(Error::NotAClique);
    }
    if !p.is_disjoint(k) {
        return Err(Error::Precondition("P and K must be disjoint".into()));
    }
    if !class.contains_set(g, p) {
        return Err(Error::Precondition("G[P] is not in the class".into()));
    }
    let non_red = non_red_sets(g, p, k, class);
    let mut best = VertexSet::new();
    extend(k, &non_red, VertexSet::new(), VertexSet::new(), &mut best);
    Ok(p.union(&best))
}

/// The non-empty `W ⊆ K` with `|W| ≤ ℵ` and `G[P ∪ W] ∉ Π`, by size then
/// lexicographically.
pub fn non_red_sets(g: &Graph, p: &VertexSet, k: &VertexSet, class: &PiClass) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for size in 1..=class.aleph().min(k.len()) {
        for_each_subset_of_size(k, size, |w| {
            if !class.contains_set(g, &p.union(w)) {
                out.push(w.clone());
            }
            true
        });
    }
    out
}

fn extend(k: &VertexSet, non_red: &[VertexSet], a: VertexSet, d: VertexSet, best: &mut VertexSet) {
    let alive = k.difference(&d);
    if alive.len() < best.len() || (alive.len() == best.len() && alive >= *best) {
        return;
    }
    let Some(w) = non_red.iter().find(|w| w.is_disjoint(&d)) else {
        *best = alive;
        return;
    };
    let open = w.difference(&a);
    if open.is_empty() {
        return;
    }
    let mut splits = Vec::new();
    for_each_subset(&open, |to_d| {
        if !to_d.is_empty() {
            splits.push(to_d.clone());
        }
    });
    for to_d in splits {
        extend(k, non_red, a.union(&open.difference(&to_d)), d.union(&to_d), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn examples() {
        let k3 = Graph::complete(3);
        let chordal = PiClass::chordal();
        assert_eq!(max_clique_extension(&k3, &VertexSet::new(), &k3.vertices(), &chordal).unwrap(), k3.vertices());

        // path 0-1-2-3 plus 4 adjacent to 0 and 3
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (3, 4)]).unwrap();
        let p = set(&[0, 1, 2, 3]);
        assert_eq!(max_clique_extension(&g, &p, &set(&[4]), &chordal).unwrap(), p);
    }

    #[test]
    fn rejects_bad_inputs() {
        let c4 = Graph::cycle(4);
        let chordal = PiClass::chordal();
        assert_eq!(max_clique_extension(&c4, &VertexSet::new(), &set(&[0, 2]), &chordal), Err(Error::NotAClique));
        assert!(max_clique_extension(&c4, &set(&[0, 1, 2, 3]), &VertexSet::new(), &chordal).is_err());
        assert!(max_clique_extension(&c4, &set(&[0]), &set(&[0, 1]), &chordal).is_err());
    }
}
