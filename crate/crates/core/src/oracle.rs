//! Brute-force references and seeded instance generators.
//!
//! Nothing here calls into the solver, the branching code or the
//! recognition algorithms: membership is decided on bitmasks by simplicial
//! elimination (chordal) and by the asteroidal-triple characterisation
//! (interval = chordal without asteroidal triples).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{BaseClass, PiClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_CAP: usize = 22;
const CONNECTED_SETS_CAP: usize = 16;

/// `MAXPI_ORACLE_CAP` if set to a number, otherwise 22.
pub fn oracle_cap() -> usize {
    std::env::var("MAXPI_ORACLE_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ORACLE_CAP)
}

/// Adjacency bitmasks; the oracle's own graph representation.
#[derive(Clone, Debug)]
struct Masks {
    adj: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | (1 << u))).collect();
        Masks { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn is_chordal(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let simplicial = bits(rest).find(|&v| {
                let nb = self.adj[v] & rest;
                bits(nb).all(|u| nb & !(1 << u) & !self.adj[u] == 0)
            });
            match simplicial {
                Some(v) => rest &= !(1 << v),
                None => return false,
            }
        }
        true
    }

    /// Three pairwise non-adjacent vertices, each pair joined by a path
    /// avoiding the closed neighbourhood of the third.
    fn has_asteroidal_triple(&self, mask: u64) -> bool {
        let vs: Vec<usize> = bits(mask).collect();
        let closed = |v: usize| self.adj[v] | (1 << v);
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.adj[a] & (1 << b) != 0 {
                    continue;
                }
                for &c in &vs[j + 1..] {
                    if (self.adj[a] | self.adj[b]) & (1 << c) != 0 {
                        continue;
                    }
                    let ab = self.reach(a, mask & !closed(c)) & (1 << b) != 0;
                    let ac = self.reach(a, mask & !closed(b)) & (1 << c) != 0;
                    let bc = self.reach(b, mask & !closed(a)) & (1 << c) != 0;
                    if ab && ac && bc {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn contains_copy(&self, mask: u64, pattern: &Masks) -> bool {
        let k = pattern.n();
        let mut image = vec![0usize; k];
        fn place(host: &Masks, mask: u64, pattern: &Masks, depth: usize, used: u64, image: &mut [usize]) -> bool {
            if depth == pattern.n() {
                return true;
            }
            for h in bits(mask & !used) {
                let ok = (0..depth).all(|q| {
                    let want = pattern.adj[depth] & (1 << q) != 0;
                    let have = host.adj[h] & (1 << image[q]) != 0;
                    want == have
                });
                if ok {
                    image[depth] = h;
                    if place(host, mask, pattern, depth + 1, used | (1 << h), image) {
                        return true;
                    }
                }
            }
            false
        }
        place(self, mask, pattern, 0, 0, &mut image)
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

struct Membership {
    host: Masks,
    base: BaseClass,
    overlay: Vec<Masks>,
}

impl Membership {
    fn new(g: &Graph, class: &PiClass) -> Self {
        Membership {
            host: Masks::new(g),
            base: class.base(),
            overlay: class.overlay().iter().map(Masks::new).collect(),
        }
    }

    fn test(&self, mask: u64) -> bool {
        let base = self.host.is_chordal(mask)
            && match self.base {
                BaseClass::Chordal => true,
                BaseClass::Interval => !self.host.has_asteroidal_triple(mask),
            };
        base && self.overlay.iter().all(|f| !self.host.contains_copy(mask, f))
    }
}

/// Does `G` itself belong to the class?
pub fn oracle_is_member(g: &Graph, class: &PiClass) -> Result<bool> {
    check_cap(g.n(), 64)?;
    Ok(Membership::new(g, class).test(full_mask(g.n())))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Exact optimum under the cap from [`oracle_cap`].
pub fn brute_force_max_induced(g: &Graph, class: &PiClass) -> Result<VertexSet> {
    brute_force_max_induced_capped(g, class, oracle_cap())
}

/// Sizes from `n` down, subsets of each size in lexicographic order; the
/// first member found is the answer.
pub fn brute_force_max_induced_capped(g: &Graph, class: &PiClass, cap: usize) -> Result<VertexSet> {
    let n = g.n();
    check_cap(n, cap.min(64))?;
    let member = Membership::new(g, class);
    for k in (0..=n).rev() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &v| m | (1 << v));
            if member.test(mask) {
                return Ok(idx.into_iter().collect());
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(VertexSet::new())
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// All `B` with `v ∈ B`, `|B| = b + 1`, `G[B]` connected and `|N(B)| = f`,
/// by filtering every subset; sorted.
pub fn brute_force_connected_sets(g: &Graph, v: usize, b: usize, f: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    check_cap(n, CONNECTED_SETS_CAP)?;
    g.check_vertex(v)?;
    let m = Masks::new(g);
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask & (1 << v) == 0 || mask.count_ones() as usize != b + 1 {
            continue;
        }
        if m.reach(v, mask) != mask {
            continue;
        }
        let nbr = bits(mask).fold(0u64, |acc, u| acc | m.adj[u]) & !mask;
        if nbr.count_ones() as usize == f {
            out.push(bits(mask).collect::<VertexSet>());
        }
    }
    out.sort();
    Ok(out)
}

/// Every labelled graph on `n` vertices, by edge mask over pairs `(u, v)`,
/// `u < v`, in lexicographic pair order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many labelled graphs on {n} vertices");
    (0u64..(1 << pairs.len())).map(move |mask| graph_from_pair_mask(n, &pairs, mask))
}

fn graph_from_pair_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = bits(mask).map(|i| pairs[i]).collect();
    Graph::from_edges(n, &edges).expect("pairs are valid")
}

/// One graph per isomorphism class on `n` vertices: the labelled graphs
/// whose edge mask is minimal over all relabellings.
pub fn isomorphism_class_representatives(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many labelled graphs on {n} vertices");
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut reps = Vec::new();
    'graphs: for mask in 0u64..(1 << pairs.len()) {
        for p in &perms {
            let image = bits(mask).fold(0u64, |m, i| {
                let (u, v) = pairs[i];
                m | (1 << index[p[u]][p[v]])
            });
            if image < mask {
                continue 'graphs;
            }
        }
        reps.push(graph_from_pair_mask(n, &pairs, mask));
    }
    reps
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Every graph on `k + 1` vertices up to isomorphism: each class
/// representative on `k` vertices plus a new vertex with every possible
/// neighbourhood. Classes repeat, but none is missed.
pub fn one_vertex_extensions(k: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for base in isomorphism_class_representatives(k) {
        for nbrs in 0u64..(1 << k) {
            let edges: Vec<(usize, usize)> = bits(nbrs).map(|u| (u, k)).collect();
            out.push(base.extended(1, &edges).expect("valid extension"));
        }
    }
    out
}

pub fn random_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Chordal by construction: vertex `v` joins a random clique of the graph on
/// `0..v` (or stays isolated), so the reverse order is a perfect
/// elimination ordering.
pub fn random_chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj = vec![0u64; n];
    for v in 1..n {
        if rng.gen_bool(0.15) {
            continue;
        }
        let anchor = rng.gen_range(0..v);
        let mut clique = 1u64 << anchor;
        for (u, &nbrs) in adj.iter().enumerate().take(v) {
            if u != anchor && clique & !nbrs & !(1 << u) == 0 && rng.gen_bool(0.5) {
                clique |= 1 << u;
            }
        }
        for u in bits(clique) {
            edges.push((u, v));
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Intersection graph of random integer intervals in `[0, 2n]`.
pub fn random_interval(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let span = 2 * n.max(1);
    let iv: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span);
            let len = rng.gen_range(0..=n.max(1) / 2 + 1);
            (l, l + len)
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if iv[u].0 <= iv[v].1 && iv[v].0 <= iv[u].1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Reproducible instance description.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceKind {
    /// Every labelled graph on `n` vertices.
    AllLabeled {
        n: usize,
    },
    RandomGnp {
        n: usize,
        p: f64,
    },
    /// Two random chordal sides joined through a clique of size `clique`,
    /// each clique vertex adjacent to each side vertex with probability
    /// `attach`.
    PlantedSeparator {
        side1: usize,
        side2: usize,
        clique: usize,
        attach: f64,
    },
    /// Disjoint random trees of the given sizes plus a clique of size
    /// `apex`, each apex vertex adjacent to each component vertex with
    /// probability `attach`.
    PlantedSmallComponents {
        components: Vec<usize>,
        apex: usize,
        attach: f64,
    },
}

/// The graphs described by `spec`. Pure in `(kind, seed)`.
pub fn generate_graphs(spec: &InstanceSpec) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match &spec.kind {
        InstanceKind::AllLabeled { n } => all_labeled_graphs(*n).collect(),
        InstanceKind::RandomGnp { n, p } => vec![random_gnp(*n, *p, &mut rng)],
        InstanceKind::PlantedSeparator { side1, side2, clique, attach } => {
            let a = random_chordal(*side1, &mut rng);
            let b = random_chordal(*side2, &mut rng);
            let mut g = a.disjoint_union(&b);
            attach_clique(&mut g, *clique, *attach, &mut rng);
            vec![g]
        }
        InstanceKind::PlantedSmallComponents { components, apex, attach } => {
            let mut g = Graph::empty(0);
            for &size in components {
                g = g.disjoint_union(&random_tree(size, &mut rng));
            }
            attach_clique(&mut g, *apex, *attach, &mut rng);
            vec![g]
        }
    }
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).expect("valid edges")
}

fn attach_clique(g: &mut Graph, size: usize, attach: f64, rng: &mut ChaCha8Rng) {
    let base = g.n();
    let mut edges = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            edges.push((base + i, base + j));
        }
        for v in 0..base {
            if rng.gen_bool(attach) {
                edges.push((v, base + i));
            }
        }
    }
    *g = g.extended(size, &edges).expect("valid edges");
}

/// A planted instance together with its optimum, checked by the oracle
/// before it is returned.
#[derive(Clone, Debug, PartialEq)]
pub struct PlantedInstance {
    pub graph: Graph,
    pub optimum: usize,
    pub witness: VertexSet,
}

/// Planted instance for the small-components branch under the default cap.
pub fn generate_planted_b2_instance(spec: &InstanceSpec, class: &PiClass) -> Result<PlantedInstance> {
    generate_planted_b2_instance_capped(spec, class, oracle_cap())
}

/// The construction's claimed optimum is a lower bound from the planted
/// witness (all vertices when the graph is a member); the oracle must agree
/// with the witness being optimal or the call fails.
pub fn generate_planted_b2_instance_capped(
    spec: &InstanceSpec,
    class: &PiClass,
    cap: usize,
) -> Result<PlantedInstance> {
    let graph = match &spec.kind {
        InstanceKind::PlantedSmallComponents { .. } | InstanceKind::PlantedSeparator { .. } => {
            generate_graphs(spec).pop().expect("one graph")
        }
        other => return Err(Error::Precondition(format!("{other:?} is not a planted kind"))),
    };
    let planted = planted_witness(&graph, class, spec)?;
    let exact = brute_force_max_induced_capped(&graph, class, cap)?;
    if exact.len() != planted.len() {
        return Err(Error::Verification(format!(
            "planted witness has {} vertices, oracle optimum is {}",
            planted.len(),
            exact.len()
        )));
    }
    Ok(PlantedInstance { optimum: exact.len(), graph, witness: planted })
}

/// The whole graph if it is a member, otherwise the graph without the
/// planted clique (a forest, hence a member of both base classes whenever
/// it is one of the class at all).
fn planted_witness(g: &Graph, class: &PiClass, spec: &InstanceSpec) -> Result<VertexSet> {
    let member = Membership::new(g, class);
    if member.test(full_mask(g.n())) {
        return Ok(g.vertices());
    }
    let clique = match &spec.kind {
        InstanceKind::PlantedSmallComponents { apex, .. } => *apex,
        InstanceKind::PlantedSeparator { clique, .. } => *clique,
        _ => 0,
    };
    let body: VertexSet = (0..g.n() - clique).collect();
    let mask = body.iter().fold(0u64, |m, v| m | (1 << v));
    if !member.test(mask) {
        return Err(Error::Verification("planted body is not a member".into()));
    }
    // the best member is at least the body, possibly body plus clique vertices
    let mut best = body.clone();
    let extra: Vec<usize> = (g.n() - clique..g.n()).collect();
    for sub in 1u64..(1 << extra.len()) {
        let add = bits(sub).fold(mask, |m, i| m | (1 << extra[i]));
        if add.count_ones() as usize > best.len() && member.test(add) {
            best = bits(add).collect();
        }
    }
    Ok(best)
}
