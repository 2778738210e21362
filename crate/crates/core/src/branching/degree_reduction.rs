use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

/// Branching constants: `2^σ' = 1.89` bounds the share of subsets of size at
/// most a third, `σ` is the least value with `2^σ (2^σ - 1) = 2^σ'`, and
/// `ρ = (3 + σ) / 4`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SigmaConstants {
    pub sigma_prime: f64,
    pub sigma: f64,
    pub rho: f64,
}

impl SigmaConstants {
    pub fn standard() -> Self {
        let base = 1.89f64;
        let sigma_prime = base.log2();
        // 2^σ is the positive root of x^2 - x - 1.89
        let sigma = ((1.0 + (1.0 + 4.0 * base).sqrt()) / 2.0).log2();
        SigmaConstants { sigma_prime, sigma, rho: (3.0 + sigma) / 4.0 }
    }

    /// Checks `σ' < σ < 1`, `2^σ (2^σ - 1) ≥ 2^σ'` (up to rounding) and the
    /// formula for `ρ`.
    pub fn is_consistent(&self) -> bool {
        let x = self.sigma.exp2();
        self.sigma_prime < self.sigma
            && self.sigma < 1.0
            && x * (x - 1.0) >= self.sigma_prime.exp2() - 1e-12
            && (self.rho - (3.0 + self.sigma) / 4.0).abs() < 1e-15
    }
}

impl Default for SigmaConstants {
    fn default() -> Self {
        SigmaConstants::standard()
    }
}

/// An `(A, D)` pair over a host graph on `host_size` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchPair {
    pub a: VertexSet,
    pub d: VertexSet,
    pub host_size: usize,
}

impl BranchPair {
    pub fn undecided(&self) -> usize {
        self.host_size - self.a.len() - self.d.len()
    }

    /// `φ = 2^{σ · |V(R) \ (A ∪ D)|}`.
    pub fn potential(&self, sigma: &SigmaConstants) -> f64 {
        (sigma.sigma * self.undecided() as f64).exp2()
    }

    /// `|A| + |D| ≥ |V(R)| / 4`.
    pub fn is_small_side(&self) -> bool {
        4 * (self.a.len() + self.d.len()) >= self.host_size
    }
}

/// Vertices of degree at least `3C` in `R - D` are heavy.
pub fn heavy_threshold(c: f64) -> usize {
    (3.0 * c).ceil() as usize
}

/// Branches until `R - D` has only light vertices.
///
/// The smallest heavy `v` is resolved as follows: unless `v ∈ A`, one branch
/// puts `v` into `D`; the other branches put `v` into `A`, send at most
/// `⌊m / 3⌋` of the `m` undecided neighbours `N_{R-D}(v) \ A` to `A` and
/// the rest to `D`, keeping fewer than `C` neighbours of `v` in `A`. A
/// branch where `v ∈ A` already has `C` neighbours in `A` is dropped.
pub fn degree_reduction_branch(r: &Graph, c: f64, sigma: &SigmaConstants) -> Vec<BranchPair> {
    let _ = sigma;
    let mut out = Vec::new();
    reduce(r, c, VertexSet::new(), VertexSet::new(), &mut out);
    out
}

fn reduce(r: &Graph, c: f64, a: VertexSet, d: VertexSet, out: &mut Vec<BranchPair>) {
    let alive = r.vertices().difference(&d);
    let threshold = heavy_threshold(c);
    let heavy = alive.iter().find(|&v| r.neighbors(v).intersection_len(&alive) >= threshold);
    let Some(v) = heavy else {
        out.push(BranchPair { a, d, host_size: r.n() });
        return;
    };
    let nbrs = r.neighbors(v).intersection(&alive);
    let in_a = nbrs.intersection_len(&a);
    let open = nbrs.difference(&a);
    if !a.contains(v) {
        let mut d2 = d.clone();
        d2.insert(v);
        reduce(r, c, a.clone(), d2, out);
    } else if in_a as f64 >= c {
        return;
    }
    let mut a_v = a;
    a_v.insert(v);
    let most = open.len() / 3;
    for k in 0..=most {
        if (in_a + k) as f64 >= c {
            break;
        }
        for_each_subset_of_size(&open, k, |to_a| {
            let next_a = a_v.union(to_a);
            let next_d = d.union(&open.difference(to_a));
            reduce(r, c, next_a, next_d, out);
            true
        });
    }
}

/// Calls `visit` on every candidate of the small-side enumeration, in pair
/// order and with repetitions across pairs.
///
/// For a pair with `|A| + |D| ≥ |V(R)| / 4` every `A ∪ Y'` with
/// `Y' ⊆ Q = V(R) \ (A ∪ D)` is a candidate; for the other pairs only those
/// with `|Y'| ≥ ⌈2|Q| / 3⌉`.
pub fn for_each_small_side_candidate<F>(r: &Graph, c: f64, sigma: &SigmaConstants, mut visit: F)
where
    F: FnMut(&VertexSet) -> bool,
{
    for pair in degree_reduction_branch(r, c, sigma) {
        let q = r.vertices().difference(&pair.a).difference(&pair.d);
        let min_size = if pair.is_small_side() { 0 } else { (2 * q.len()).div_ceil(3) };
        let mut keep_going = true;
        for size in (min_size..=q.len()).rev() {
            for_each_subset_of_size(&q, size, |y| {
                keep_going = visit(&pair.a.union(y));
                keep_going
            });
            if !keep_going {
                return;
            }
        }
    }
}

/// Deduplicated, sorted small-side candidates.
pub fn enumerate_small_side_candidates(r: &Graph, c: f64, sigma: &SigmaConstants) -> Vec<VertexSet> {
    let mut seen = BTreeSet::new();
    for_each_small_side_candidate(r, c, sigma, |y| {
        seen.insert(y.clone());
        true
    });
    seen.into_iter().collect()
}
