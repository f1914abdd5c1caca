//! Seeded samplers for `G(n, p)` and uniform random `d`-regular graphs.
//!
//! Vertices are `0..n`. Edges are kept as a sorted list of pairs `(u, v)` with
//! `u < v`, so two graphs with the same edge set compare equal and iterate in
//! the same order.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::eigensolve::SymMatrix;
use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

/// Largest degree sampled with the exact (rejection) pairing model.
pub const EXACT_PAIRING_MAX_DEGREE: usize = 8;

/// How a regular graph was drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularSampler {
    /// Configuration model, rejecting every non-simple pairing. Exactly uniform.
    ExactPairing,
    /// Sequential stub matching that refuses loops and repeated edges and
    /// restarts when stuck. Uniform only asymptotically.
    StubMatching,
}

/// Where a graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphModel {
    Gnp {
        p: f64,
        seed: u64,
    },
    Gnd {
        d: usize,
        seed: u64,
        sampler: RegularSampler,
    },
    External,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    model: GraphModel,
}

impl Graph {
    /// Builds a graph from an arbitrary list of pairs. Pairs are normalized to
    /// `u < v` and sorted; loops, duplicates and out-of-range vertices are
    /// rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, model: GraphModel) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::invalid(format!("edge ({a}, {b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::invalid(format!("self-loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Graph { n, edges: list, model })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            model: GraphModel::External,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        Graph {
            n,
            edges,
            model: GraphModel::External,
        }
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("a cycle needs at least 3 vertices"));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), GraphModel::External)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn model(&self) -> &GraphModel {
        &self.model
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

/// Samples `G(n, p)`. Pairs are visited in row-major order (`i < j`, `i`
/// ascending, then `j`) and each consumes exactly one uniform draw.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("p = {p} is not a probability")));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph {
        n,
        edges,
        model: GraphModel::Gnp { p, seed },
    })
}

/// Samples a simple `d`-regular graph on `n` vertices.
///
/// When `d > (n - 1) / 2` the complementary `(n - 1 - d)`-regular graph is
/// drawn instead and complemented, which preserves uniformity. Degrees up to
/// [`EXACT_PAIRING_MAX_DEGREE`] use the exact rejection pairing model; larger
/// degrees use stub matching with restarts. The model records which one ran.
pub fn sample_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 || d >= n {
        return Err(Error::invalid(format!("need 0 <= d < n, got d = {d}, n = {n}")));
    }
    if (n * d) % 2 == 1 {
        return Err(Error::invalid(format!("n * d must be even, got n = {n}, d = {d}")));
    }
    let flip = n - 1 - d < d;
    let target = if flip { n - 1 - d } else { d };
    let mut rng = rng_from_seed(seed);
    let mut adj = BitAdjacency::new(n);
    let sampler = if target <= EXACT_PAIRING_MAX_DEGREE {
        exact_pairing(n, target, &mut rng, &mut adj);
        RegularSampler::ExactPairing
    } else {
        stub_matching(n, target, &mut rng, &mut adj);
        RegularSampler::StubMatching
    };
    let mut edges = Vec::with_capacity(n * d / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            if adj.contains(i, j) != flip {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph {
        n,
        edges,
        model: GraphModel::Gnd { d, seed, sampler },
    })
}

struct BitAdjacency {
    n: usize,
    words: Vec<u64>,
}

impl BitAdjacency {
    fn new(n: usize) -> Self {
        BitAdjacency {
            n,
            words: vec![0; (n * n).div_ceil(64)],
        }
    }

    fn contains(&self, u: usize, v: usize) -> bool {
        let k = u * self.n + v;
        self.words[k / 64] >> (k % 64) & 1 == 1
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        for k in [u * self.n + v, v * self.n + u] {
            if on {
                self.words[k / 64] |= 1 << (k % 64);
            } else {
                self.words[k / 64] &= !(1 << (k % 64));
            }
        }
    }

    fn clear(&mut self) {
        self.words.fill(0);
    }
}

/// Uniform perfect matching of the `n * d` stubs, retried until simple.
///
/// The stub at position `i` is matched to a uniformly chosen later position;
/// any rule that fixes the next stub before drawing its partner yields a
/// uniform matching, so the array does not need resetting between attempts.
fn exact_pairing(n: usize, d: usize, rng: &mut impl Rng, adj: &mut BitAdjacency) {
    let total = n * d;
    let mut stubs: Vec<usize> = (0..total).map(|k| k / d).collect();
    let mut placed: Vec<(usize, usize)> = Vec::with_capacity(total / 2);
    loop {
        let mut simple = true;
        for i in (0..total).step_by(2) {
            let j = rng.random_range(i + 1..total);
            stubs.swap(i + 1, j);
            let (u, v) = (stubs[i], stubs[i + 1]);
            if u == v || adj.contains(u, v) {
                simple = false;
                break;
            }
            adj.set(u, v, true);
            placed.push((u, v));
        }
        if simple {
            return;
        }
        for (u, v) in placed.drain(..) {
            adj.set(u, v, false);
        }
    }
}

/// Steger–Wormald style matching: draw two remaining stubs at random, keep
/// the pair if it forms a new non-loop edge, and restart from scratch when no
/// admissible pair is left.
fn stub_matching(n: usize, d: usize, rng: &mut impl Rng, adj: &mut BitAdjacency) {
    const CHECK_AFTER_FAILURES: usize = 64;
    'restart: loop {
        adj.clear();
        let mut stubs: Vec<usize> = (0..n * d).map(|k| k / d).collect();
        let mut failures = 0;
        while !stubs.is_empty() {
            let a = rng.random_range(0..stubs.len());
            let b = rng.random_range(0..stubs.len());
            let (u, v) = (stubs[a], stubs[b]);
            if a != b && u != v && !adj.contains(u, v) {
                adj.set(u, v, true);
                let (hi, lo) = (a.max(b), a.min(b));
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                failures = 0;
                continue;
            }
            failures += 1;
            if failures >= CHECK_AFTER_FAILURES {
                if !admissible_pair_exists(&stubs, adj) {
                    continue 'restart;
                }
                failures = 0;
            }
        }
        return;
    }
}

fn admissible_pair_exists(stubs: &[usize], adj: &BitAdjacency) -> bool {
    let mut vertices: Vec<usize> = stubs.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    vertices
        .iter()
        .enumerate()
        .any(|(i, &u)| vertices[i + 1..].iter().any(|&v| !adj.contains(u, v)))
}

/// The simple-graph complement: every non-adjacent pair of distinct vertices
/// becomes an edge.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n;
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2 - g.edges.len());
    let mut present = g.edges.iter().peekable();
    for i in 0..n {
        for j in (i + 1)..n {
            if present.peek() == Some(&&(i, j)) {
                present.next();
            } else {
                edges.push((i, j));
            }
        }
    }
    Graph {
        n,
        edges,
        model: GraphModel::External,
    }
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut deg = vec![0; g.n];
    for &(u, v) in &g.edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// 0/1 adjacency matrix with zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n);
    for &(u, v) in &g.edges {
        m.set_sym(u, v, 1.0);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_degenerate_probabilities() {
        let empty = sample_gnp(3, 0.0, 7).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = sample_gnp(3, 1.0, 7).unwrap();
        assert_eq!(full.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn gnp_rejects_bad_arguments() {
        assert!(matches!(sample_gnp(0, 0.5, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(sample_gnp(5, 1.5, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(sample_gnp(5, f64::NAN, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = sample_gnp(60, 0.3, 99).unwrap();
        let b = sample_gnp(60, 0.3, 99).unwrap();
        let c = sample_gnp(60, 0.3, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn gnp_edge_count_matches_binomial() {
        // Binomial(C(2000, 2), 0.2): mean 399_800, sd ~ 565.6.
        let g = sample_gnp(2000, 0.2, 5).unwrap();
        let pairs = 2000.0 * 1999.0 / 2.0;
        let mean = pairs * 0.2;
        let sd = (pairs * 0.2 * 0.8_f64).sqrt();
        assert!((g.edge_count() as f64 - mean).abs() <= 4.0 * sd);
    }

    #[test]
    fn regular_rejects_bad_arguments() {
        assert!(matches!(sample_regular(5, 3, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(sample_regular(4, 4, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(sample_regular(4, 7, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn regular_forced_cases() {
        let k4 = sample_regular(4, 3, 1).unwrap();
        assert_eq!(k4.edges(), Graph::complete(4).edges());
        assert_eq!(sample_regular(7, 0, 3).unwrap().edge_count(), 0);
        for seed in 0..20 {
            let c = sample_regular(5, 2, seed).unwrap();
            assert_eq!(degree_sequence(&c), vec![2; 5]);
            // a 2-regular graph on 5 vertices can only be a single 5-cycle
            let adj = c.neighbors();
            let (mut prev, mut cur, mut len) = (0, adj[0][0], 1);
            while cur != 0 {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            assert_eq!(len, 5);
        }
    }

    #[test]
    fn regular_samplers_produce_simple_regular_graphs() {
        for (n, d) in [(30, 3), (40, 8), (50, 9), (60, 20), (21, 16), (12, 11), (100, 50)] {
            let g = sample_regular(n, d, 17).unwrap();
            assert_eq!(degree_sequence(&g), vec![d; n], "n = {n}, d = {d}");
            let expected = if d.min(n - 1 - d) <= EXACT_PAIRING_MAX_DEGREE {
                RegularSampler::ExactPairing
            } else {
                RegularSampler::StubMatching
            };
            assert_eq!(g.model(), &GraphModel::Gnd { d, seed: 17, sampler: expected });
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&Graph::complete(4)).edge_count(), 0);
        assert_eq!(complement(&Graph::empty(5)).edges(), Graph::complete(5).edges());
        let c5 = complement(&Graph::cycle(5).unwrap());
        assert_eq!(degree_sequence(&c5), vec![2; 5]);
        assert_eq!(complement(&Graph::empty(1)).edge_count(), 0);
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(degree_sequence(&Graph::complete(3)), vec![2, 2, 2]);
        assert_eq!(degree_sequence(&Graph::empty(4)), vec![0; 4]);
        let path = Graph::from_edges(3, [(1, 0), (2, 1)], GraphModel::External).unwrap();
        assert_eq!(degree_sequence(&path), vec![1, 2, 1]);
    }

    #[test]
    fn from_edges_validation() {
        assert!(Graph::from_edges(3, [(0, 0)], GraphModel::External).is_err());
        assert!(Graph::from_edges(3, [(0, 3)], GraphModel::External).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)], GraphModel::External).is_err());
        let g = Graph::from_edges(4, [(3, 2), (0, 1)], GraphModel::External).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn adjacency_examples() {
        let k2 = adjacency_matrix(&Graph::complete(2));
        assert_eq!(k2.row(0), &[0.0, 1.0]);
        assert_eq!(k2.row(1), &[1.0, 0.0]);
        assert!(adjacency_matrix(&Graph::empty(2)).as_slice().iter().all(|&x| x == 0.0));
        let c4 = adjacency_matrix(&Graph::cycle(4).unwrap());
        for i in 0..4 {
            for j in 0..4 {
                let off = (4 + j - i) % 4;
                let expected = if off == 1 || off == 3 { 1.0 } else { 0.0 };
                assert_eq!(c4.get(i, j), expected);
            }
        }
    }
}
