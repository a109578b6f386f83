//! Graph families and random fixtures for tests and benchmarks.

use crate::graph::Graph;

/// Deterministic splitmix64 stream; seeds reproduce across platforms and
/// releases, which keeps randomized test corpora stable.
#[derive(Debug, Clone)]
pub struct Prng {
    state: u64,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_index_edges(n, &edges).expect("path edges are simple")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_index_edges(n, &edges).expect("cycle edges are simple")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_index_edges(n, &edges).expect("complete-graph edges are simple")
}

/// Star with one center (index 0) and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_index_edges(leaves + 1, &edges).expect("star edges are simple")
}

/// Hypercube of dimension `dim`: binary-string labels, edges between
/// strings differing in one bit.
pub fn hypercube(dim: usize) -> Graph {
    let n = 1usize << dim;
    let labels: Vec<String> = (0..n).map(|v| format!("{v:0dim$b}")).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..dim {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(labels, &edges).expect("hypercube edges are simple")
}

/// Uniform random recursive tree: vertex `v` attaches to a uniform earlier
/// vertex.
pub fn random_tree(n: usize, rng: &mut Prng) -> Graph {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        edges.push((rng.below(v), v));
    }
    Graph::from_index_edges(n, &edges).expect("tree edges are simple")
}

/// Random connected graph: a random tree plus up to `extra` additional
/// distinct edges.
pub fn random_connected(n: usize, extra: usize, rng: &mut Prng) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges = tree.edges();
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let max_edges = n * (n - 1) / 2;
    let mut budget = extra.min(max_edges - edges.len());
    let mut attempts = 0;
    while budget > 0 && attempts < 100 * extra.max(1) {
        attempts += 1;
        let u = rng.below(n);
        let v = rng.below(n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if present.insert(key) {
            edges.push(key);
            budget -= 1;
        }
    }
    Graph::from_index_edges(n, &edges).expect("augmented tree is simple")
}

/// Every labeled connected graph on `n` vertices, by exhaustive enumeration
/// of edge subsets. Practical for `n <= 6`.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "exhaustive enumeration is for tiny n");
    let mut slots = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            slots.push((u, v));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        let edges: Vec<_> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_index_edges(n, &edges).expect("enumerated edges are simple");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
