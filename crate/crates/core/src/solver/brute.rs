use crate::classes::PiClass;
use crate::graph::Graph;
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

/// Largest `base ∪ Z` with `Z ⊆ pool` inducing a member of the class, by
/// descending size with the lexicographically first hit at each size.
/// `None` when `base` itself is not a member.
pub fn best_extension(g: &Graph, class: &PiClass, base: &VertexSet, pool: &VertexSet) -> Option<VertexSet> {
    if !class.contains_set(g, base) {
        return None;
    }
    let pool = pool.difference(base);
    for size in (0..=pool.len()).rev() {
        let mut found = None;
        for_each_subset_of_size(&pool, size, |z| {
            let w = base.union(z);
            if class.contains_set(g, &w) {
                found = Some(w);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Exact optimum by trying all subsets, largest first.
pub fn brute_force_inner(g: &Graph, class: &PiClass) -> VertexSet {
    best_extension(g, class, &VertexSet::new(), &g.vertices()).unwrap_or_default()
}
