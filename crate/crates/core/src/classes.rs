//! Target classes: chordal, interval, and either one with a finite family of
//! extra forbidden induced subgraphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{
    find_forbidden_chordal, find_forbidden_interval, is_chordal, is_interval, separator_test_chordal,
    separator_test_interval,
};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseClass {
    Chordal,
    Interval,
}

impl BaseClass {
    pub fn name(self) -> &'static str {
        match self {
            BaseClass::Chordal => "chordal",
            BaseClass::Interval => "interval",
        }
    }
}

/// A hereditary subclass of chordal graphs: membership, the bound ℵ such
/// that no minimal forbidden graph has a clique of size ℵ + 1, the
/// clique-separator test and a bounded forbidden-subgraph finder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiClass {
    base: BaseClass,
    overlay: Vec<Graph>,
    disconnected_overlay: bool,
}

impl PiClass {
    pub fn chordal() -> Self {
        PiClass { base: BaseClass::Chordal, overlay: Vec::new(), disconnected_overlay: false }
    }

    pub fn interval() -> Self {
        PiClass { base: BaseClass::Interval, overlay: Vec::new(), disconnected_overlay: false }
    }

    /// `base` restricted to graphs with no induced copy of any member of
    /// `family`. Members must have at least one vertex. Disconnected members
    /// are accepted but reported through [`PiClass::has_disconnected_overlay`].
    pub fn with_overlay(base: &PiClass, family: Vec<Graph>) -> Result<Self> {
        if family.iter().any(|f| f.n() == 0) {
            return Err(Error::Precondition("forbidden family members must be non-empty".into()));
        }
        let mut overlay = base.overlay.clone();
        overlay.extend(family);
        let disconnected_overlay = overlay.iter().any(|f| !f.is_connected());
        Ok(PiClass { base: base.base, overlay, disconnected_overlay })
    }

    /// Resolves "chordal", "interval", "chordal+F" or "interval+F"; the
    /// `+F` forms require a non-empty family, the plain forms an empty one.
    pub fn from_name(name: &str, family: Vec<Graph>) -> Result<Self> {
        let (base, wants_family) = match name {
            "chordal" => (PiClass::chordal(), false),
            "interval" => (PiClass::interval(), false),
            "chordal+F" => (PiClass::chordal(), true),
            "interval+F" => (PiClass::interval(), true),
            other => return Err(Error::UnknownClass(other.to_string())),
        };
        match (wants_family, family.is_empty()) {
            (false, true) => Ok(base),
            (true, false) => PiClass::with_overlay(&base, family),
            (false, false) => Err(Error::Precondition(format!("class `{name}` takes no overlay family"))),
            (true, true) => Err(Error::Precondition(format!("class `{name}` needs at least one overlay graph"))),
        }
    }

    pub fn base(&self) -> BaseClass {
        self.base
    }

    /// The class without its overlay family.
    pub fn base_class(&self) -> PiClass {
        PiClass { base: self.base, overlay: Vec::new(), disconnected_overlay: false }
    }

    pub fn overlay(&self) -> &[Graph] {
        &self.overlay
    }

    pub fn has_disconnected_overlay(&self) -> bool {
        self.disconnected_overlay
    }

    /// Largest overlay member, 0 without overlay.
    pub fn overlay_max_size(&self) -> usize {
        self.overlay.iter().map(Graph::n).max().unwrap_or(0)
    }

    pub fn name(&self) -> String {
        if self.overlay.is_empty() {
            self.base.name().to_string()
        } else {
            format!("{}+F", self.base.name())
        }
    }

    /// ℵ: 2 for chordal, 4 for interval; overlays keep the base value.
    pub fn aleph(&self) -> usize {
        match self.base {
            BaseClass::Chordal => 2,
            BaseClass::Interval => 4,
        }
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let base_ok = match self.base {
            BaseClass::Chordal => is_chordal(g),
            BaseClass::Interval => is_interval(g),
        };
        base_ok && self.overlay.iter().all(|f| find_induced_copy(g, f).is_none())
    }

    /// `G[W] ∈ Π` without materialising the check at call sites.
    pub fn contains_set(&self, g: &Graph, w: &VertexSet) -> bool {
        self.contains(&g.induced_unchecked(w))
    }

    /// The base class's clique-separator test; `S` must be a clique.
    pub fn separator_test(&self, g: &Graph, s: &VertexSet) -> Result<bool> {
        match self.base {
            BaseClass::Chordal => separator_test_chordal(g, s),
            BaseClass::Interval => separator_test_interval(g, s),
        }
    }

    /// A vertex set of size at most `max_size` inducing a forbidden graph of
    /// the class: a base obstruction or a copy of an overlay member.
    pub fn find_forbidden(&self, g: &Graph, max_size: usize) -> Option<VertexSet> {
        let base = match self.base {
            BaseClass::Chordal => find_forbidden_chordal(g, max_size),
            BaseClass::Interval => find_forbidden_interval(g, max_size),
        };
        if base.is_some() {
            return base;
        }
        self.overlay.iter().filter(|f| f.n() <= max_size).find_map(|f| find_induced_copy(g, f))
    }
}

impl fmt::Display for PiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Vertices of `host` inducing a copy of `pattern`, or `None`.
///
/// Backtracking over pattern vertices in decreasing degree order; a host
/// vertex is a candidate only if its degree is large enough and its
/// adjacencies to already mapped vertices match exactly.
pub fn find_induced_copy(host: &Graph, pattern: &Graph) -> Option<VertexSet> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| pattern.degree(b).cmp(&pattern.degree(a)).then(a.cmp(&b)));
    let mut image = vec![usize::MAX; k];
    let mut used = VertexSet::new();
    if embed(host, pattern, &order, 0, &mut image, &mut used) {
        Some(image.into_iter().collect())
    } else {
        None
    }
}

fn embed(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    for h in 0..host.n() {
        if used.contains(h) || host.degree(h) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&q| pattern.adjacent(p, q) == host.adjacent(h, image[q]));
        if !consistent {
            continue;
        }
        image[p] = h;
        used.insert(h);
        if embed(host, pattern, order, depth + 1, image, used) {
            return true;
        }
        used.remove(h);
    }
    image[p] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn umbrella() -> Graph {
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (2, 6)]).unwrap()
    }

    fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn built_in_classes() {
        let chordal = PiClass::chordal();
        assert!(!chordal.contains(&Graph::cycle(4)));
        assert_eq!(chordal.aleph(), 2);
        assert!(chordal.contains(&Graph::complete(40)));
        let interval = PiClass::interval();
        assert_eq!(interval.aleph(), 4);
        assert!(!interval.contains(&umbrella()));
        let caterpillar = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (1, 6), (3, 7)]).unwrap();
        assert!(interval.contains(&caterpillar));
    }

    #[test]
    fn overlays() {
        let claw = Graph::star(3);
        let proper = PiClass::with_overlay(&PiClass::interval(), vec![claw.clone()]).unwrap();
        assert!(!proper.contains(&claw));
        assert!(proper.contains(&Graph::path(5)));
        assert_eq!(proper.aleph(), 4);

        let same = PiClass::with_overlay(&PiClass::chordal(), vec![]).unwrap();
        assert_eq!(same, PiClass::chordal());

        let triangle_free = PiClass::with_overlay(&PiClass::chordal(), vec![Graph::complete(3)]).unwrap();
        assert!(triangle_free.contains(&Graph::path(4)));
        assert!(!triangle_free.contains(&Graph::complete(3)));
        assert_eq!(triangle_free.find_forbidden(&Graph::complete(4), 3), Some(VertexSet::full(3)));

        assert!(PiClass::with_overlay(&PiClass::chordal(), vec![Graph::empty(0)]).is_err());
        let two_k1 = PiClass::with_overlay(&PiClass::chordal(), vec![Graph::empty(2)]).unwrap();
        assert!(two_k1.has_disconnected_overlay());
    }

    #[test]
    fn names_resolve() {
        assert_eq!(PiClass::from_name("chordal", vec![]).unwrap(), PiClass::chordal());
        assert_eq!(PiClass::from_name("interval+F", vec![Graph::star(3)]).unwrap().name(), "interval+F");
        assert_eq!(PiClass::from_name("perfect", vec![]), Err(Error::UnknownClass("perfect".into())));
        assert!(PiClass::from_name("chordal+F", vec![]).is_err());
    }

    #[test]
    fn finder_absent_iff_member() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let classes = [
            PiClass::chordal(),
            PiClass::interval(),
            PiClass::with_overlay(&PiClass::interval(), vec![Graph::star(3)]).unwrap(),
        ];
        for _ in 0..400 {
            let n = rng.gen_range(0..=8);
            let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
            for class in &classes {
                let member = class.contains(&g);
                let found = class.find_forbidden(&g, n.max(4));
                assert_eq!(found.is_none(), member, "{} on {:?}", class, g.edges());
                if let Some(w) = found {
                    assert!(!class.contains_set(&g, &w));
                }
            }
        }
    }

    #[test]
    fn membership_is_hereditary() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut checked = 0;
        while checked < 200 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(n, rng.gen_range(0.1..0.6), &mut rng);
            for class in [PiClass::chordal(), PiClass::interval()] {
                if class.contains(&g) {
                    let w: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                    assert!(class.contains_set(&g, &w));
                    checked += 1;
                }
            }
        }
    }

    #[test]
    fn induced_copy_respects_non_edges() {
        // C4 contains P3 as an induced subgraph but not K3
        assert!(find_induced_copy(&Graph::cycle(4), &Graph::path(3)).is_some());
        assert!(find_induced_copy(&Graph::cycle(4), &Graph::complete(3)).is_none());
        // K4 contains P3 as a subgraph but never induced
        assert!(find_induced_copy(&Graph::complete(4), &Graph::path(3)).is_none());
    }
}
