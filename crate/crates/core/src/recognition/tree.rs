use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::chordal::{check_chordal, maximal_cliques_from_peo, Chordality};
use crate::vertex_set::VertexSet;

/// Clique tree of a chordal graph: maximal cliques as bags, joined so that
/// the bags holding any vertex form a subtree. Disconnected graphs get
/// empty-intersection edges between their parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    /// Checks maximality of every bag and the running-intersection property.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.bags.len();
        if self.edges.len() + 1 != k.max(1) {
            return false;
        }
        for bag in &self.bags {
            if !g.is_clique(bag) {
                return false;
            }
            let ext = (0..g.n()).any(|v| !bag.contains(v) && bag.is_subset(g.neighbors(v)));
            if ext {
                return false;
            }
        }
        let covered = self.bags.iter().fold(VertexSet::new(), |acc, b| acc.union(b));
        if covered != g.vertices() {
            return false;
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return false;
            }
        }
        // the bags containing v induce a connected subtree
        for v in 0..g.n() {
            let holding: VertexSet = (0..k).filter(|&i| self.bags[i].contains(v)).collect();
            let tree_edges: Vec<(usize, usize)> =
                self.edges.iter().copied().filter(|&(a, b)| holding.contains(a) && holding.contains(b)).collect();
            if tree_edges.len() + 1 != holding.len() {
                return false;
            }
        }
        true
    }
}

/// Maximum-weight spanning tree of the clique intersection graph.
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    let Chordality::Chordal(peo) = check_chordal(g) else {
        return Err(Error::NotChordal);
    };
    let bags = maximal_cliques_from_peo(g, &peo);
    let k = bags.len();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((bags[i].intersection_len(&bags[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut root: Vec<usize> = (0..k).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    let mut edges = Vec::new();
    for (_, i, j) in pairs {
        let (ri, rj) = (find(&mut root, i), find(&mut root, j));
        if ri != rj {
            root[ri] = rj;
            edges.push((i, j));
        }
    }
    Ok(CliqueTree { bags, edges })
}
