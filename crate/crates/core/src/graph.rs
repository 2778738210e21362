//! Immutable undirected simple graphs over `0..n`.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Undirected simple graph with bitset adjacency rows.
///
/// Graphs are values: every deletion produces a new graph through
/// [`Graph::induced_subgraph`], which records the id each new vertex had in
/// the graph it was taken from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    parent: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(); n], parent: (0..n).collect() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.link(n - 1, 0);
        }
        g
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.link(0, v);
        }
        g
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// A copy with extra vertices appended; `edges` may refer to new ids.
    pub fn extended(&self, extra: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = self.n() + extra;
        let mut g = Graph { adj: self.adj.clone(), parent: (0..n).collect() };
        g.adj.resize(n, VertexSet::new());
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = Graph::empty(shift + other.n());
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + shift, v + shift);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Id of each vertex in the graph this one was induced from.
    pub fn parent_ids(&self) -> &[usize] {
        &self.parent
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, w: &VertexSet) -> Result<()> {
        match w.last() {
            Some(v) if v >= self.n() => Err(Error::InvalidVertex { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    /// `G[W]`; vertex `i` of the result is the `i`-th smallest member of `W`.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph> {
        self.check_set(w)?;
        Ok(self.induced_unchecked(w))
    }

    pub(crate) fn induced_unchecked(&self, w: &VertexSet) -> Graph {
        let ids = w.to_vec();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let adj = ids.iter().map(|&v| self.adj[v].intersection(w).iter().map(|u| pos[u]).collect()).collect();
        Graph { adj, parent: ids }
    }

    /// `G \ X`.
    pub fn without(&self, x: &VertexSet) -> Graph {
        self.induced_unchecked(&self.vertices().difference(x))
    }

    /// `N(W)` when `closed` is false, `N[W]` otherwise.
    pub fn neighborhood(&self, w: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_set(w)?;
        Ok(self.neighborhood_unchecked(w, closed))
    }

    pub(crate) fn neighborhood_unchecked(&self, w: &VertexSet, closed: bool) -> VertexSet {
        let mut out = VertexSet::new();
        for v in w {
            out.union_with(&self.adj[v]);
        }
        if closed {
            out.union_with(w);
        } else {
            out.difference_with(w);
        }
        out
    }

    /// Components of `G[W]`, ordered by smallest member.
    pub fn connected_components(&self, w: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(w)?;
        Ok(self.components_unchecked(w))
    }

    pub(crate) fn components_unchecked(&self, w: &VertexSet) -> Vec<VertexSet> {
        let mut left = w.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach(start, &left);
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.neighborhood_unchecked(&frontier, false);
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected_set(&self, w: &VertexSet) -> bool {
        match w.first() {
            None => true,
            Some(v) => self.reach(v, w).len() == w.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.vertices())
    }

    /// True iff every pair in `S` is adjacent. Members outside the graph
    /// make the answer false.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        if self.check_set(s).is_err() {
            return false;
        }
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// A maximum clique; among those, the lexicographically smallest.
    ///
    /// Branch and bound over candidates in increasing id order, pruned by a
    /// greedy colouring bound. Preorder of this search tree is the
    /// lexicographic order of sorted member lists, and a branch is cut only
    /// when it cannot strictly beat the incumbent, so the first maximum
    /// found is the smallest one.
    pub fn maximum_clique(&self) -> VertexSet {
        let mut best = VertexSet::new();
        let mut current = VertexSet::new();
        self.clique_search(&mut current, self.vertices(), &mut best);
        best
    }

    fn clique_search(&self, current: &mut VertexSet, cand: VertexSet, best: &mut VertexSet) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if current.len() + self.colour_bound(&cand) <= best.len() {
            return;
        }
        for v in cand.iter() {
            let mut next = cand.intersection(&self.adj[v]);
            // candidates larger than v only
            next = next.iter().filter(|&u| u > v).collect();
            current.insert(v);
            self.clique_search(current, next, best);
            current.remove(v);
            let remaining = cand.iter().filter(|&u| u > v).count();
            if current.len() + remaining <= best.len() {
                break;
            }
        }
    }

    /// Number of colours in a greedy colouring of `G[cand]`.
    fn colour_bound(&self, cand: &VertexSet) -> usize {
        let mut left = cand.clone();
        let mut colours = 0;
        while !left.is_empty() {
            colours += 1;
            let mut avail = left.clone();
            while let Some(v) = avail.first() {
                left.remove(v);
                avail.remove(v);
                avail.difference_with(&self.adj[v]);
            }
        }
        colours
    }

    /// Every clique of size at most `max_size` (including the empty set),
    /// in lexicographic order.
    pub fn cliques_up_to(&self, max_size: usize) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new()];
        if max_size == 0 {
            return out;
        }
        fn rec(g: &Graph, cur: &mut VertexSet, cand: &VertexSet, max: usize, out: &mut Vec<VertexSet>) {
            for v in cand.iter() {
                cur.insert(v);
                out.push(cur.clone());
                if cur.len() < max {
                    let next: VertexSet = cand.intersection(&g.adj[v]).iter().filter(|&u| u > v).collect();
                    rec(g, cur, &next, max, out);
                }
                cur.remove(v);
            }
        }
        let mut cur = VertexSet::new();
        rec(self, &mut cur, &self.vertices(), max_size, &mut out);
        out
    }

    /// Adds a vertex adjacent to exactly `targets`; returns the new graph
    /// and the new vertex id.
    pub fn with_apex(&self, targets: &VertexSet) -> (Graph, usize) {
        let a = self.n();
        let mut g = Graph { adj: self.adj.clone(), parent: (0..=a).collect() };
        g.adj.push(VertexSet::new());
        for t in targets {
            g.link(a, t);
        }
        (g, a)
    }
}
