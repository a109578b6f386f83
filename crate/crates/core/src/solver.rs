//! Decides whether two players can cover a connected graph while keeping a
//! required distance, and maximizes that distance over all six variants
//! (movement rules x coverage goal).
//!
//! The existence check builds the subgraph of `H (*) H` induced on the
//! pairs at distance `>= D` and looks for a connected component whose two
//! projections cover `H`. The product kind follows the movement rules:
//! strong for traditional, direct for active, Cartesian for lazy.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, EdgeList, Graph};
use crate::products::{pair_index, PairEdge, ProductKind};
use crate::witness::WitnessComponent;

/// Per-step movement constraint for the two players.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveRules {
    /// Each player independently moves to a neighbor or stays.
    Traditional,
    /// Both players must move to a neighbor.
    Active,
    /// Exactly one player moves to a neighbor.
    Lazy,
}

impl MoveRules {
    /// The product whose connected subgraphs encode walks under these rules.
    pub fn product_kind(self) -> ProductKind {
        match self {
            MoveRules::Traditional => ProductKind::Strong,
            MoveRules::Active => ProductKind::Direct,
            MoveRules::Lazy => ProductKind::Cartesian,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveRules::Traditional => "traditional",
            MoveRules::Active => "active",
            MoveRules::Lazy => "lazy",
        }
    }

    pub const ALL: [MoveRules; 3] = [MoveRules::Traditional, MoveRules::Active, MoveRules::Lazy];
}

/// What both players must cover during the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Goal {
    /// Visit every vertex of the graph.
    Vertex,
    /// Traverse every edge of the graph (and hence visit every vertex).
    Edge,
}

impl Goal {
    pub fn name(self) -> &'static str {
        match self {
            Goal::Vertex => "vertex",
            Goal::Edge => "edge",
        }
    }

    pub const ALL: [Goal; 2] = [Goal::Vertex, Goal::Edge];
}

/// How `span` searches the interval `[0, rad(H)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Binary search, justified by monotonicity of the existence check.
    #[default]
    Binary,
    /// Downward scan from the radius, one existence check per value.
    Linear,
}

/// Result of one span computation.
#[derive(Debug, Clone)]
pub struct SpanResult {
    pub value: u32,
    pub rules: MoveRules,
    pub goal: Goal,
    /// Qualifying product component realizing the value; present iff
    /// `value >= 1`.
    pub witness: Option<WitnessComponent>,
}

/// The distance-filtered induced subgraph of a product, with the map from
/// its vertex indices back to factor pairs.
#[derive(Debug, Clone)]
pub struct FilteredProduct {
    pub graph: Graph,
    pub pairs: Vec<(usize, usize)>,
}

/// Subgraph of `H (*) H` induced on the pairs `(u, v)` with
/// `d_H(u, v) >= d`, where the product kind follows `rules`. Pairs appear
/// in ascending pair-index order.
pub fn filtered_product(h: &Graph, d: u32, rules: MoveRules) -> FilteredProduct {
    filtered_product_with(h, &h.all_pairs_distances(), d, rules)
}

fn filtered_product_with(
    h: &Graph,
    dist: &DistanceMatrix,
    d: u32,
    rules: MoveRules,
) -> FilteredProduct {
    let n = h.vertex_count();
    let kind = rules.product_kind();
    let mut pairs = Vec::new();
    let mut local = vec![usize::MAX; n * n];
    for u in 0..n {
        for v in 0..n {
            if dist.get(u, v).at_least(d) {
                local[pair_index(u, v, n)] = pairs.len();
                pairs.push((u, v));
            }
        }
    }
    let mut edges = Vec::new();
    for (i, &(u, v)) in pairs.iter().enumerate() {
        for (u2, v2) in kind.pair_neighbors(h, u, v) {
            let j = local[pair_index(u2, v2, n)];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    // Index-based pair labels: immune to whatever characters the factor's
    // labels contain.
    let labels = pairs.iter().map(|&(u, v)| format!("{u}|{v}")).collect();
    let graph = Graph::new(labels, &edges).expect("filtered product is simple");
    FilteredProduct { graph, pairs }
}

/// Whether a connected component of a filtered product projects onto all of
/// `h` (Vertex goal: every vertex appears as a first and as a second
/// coordinate) or onto `h` including its edges (Edge goal: additionally,
/// every edge is the non-collapsed image of some component edge under each
/// projection).
pub fn projections_surjective(
    h: &Graph,
    pairs: &[(usize, usize)],
    edges: &[PairEdge],
    goal: Goal,
) -> bool {
    projections_surjective_with(h, &EdgeList::new(h), pairs, edges, goal)
}

fn projections_surjective_with(
    h: &Graph,
    edge_ids: &EdgeList,
    pairs: &[(usize, usize)],
    edges: &[PairEdge],
    goal: Goal,
) -> bool {
    let n = h.vertex_count();
    let mut seen_first = vec![false; n];
    let mut seen_second = vec![false; n];
    for &(u, v) in pairs {
        seen_first[u] = true;
        seen_second[v] = true;
    }
    if !(seen_first.iter().all(|&s| s) && seen_second.iter().all(|&s| s)) {
        return false;
    }
    if goal == Goal::Vertex {
        return true;
    }
    let mut covered_first = vec![false; edge_ids.len()];
    let mut covered_second = vec![false; edge_ids.len()];
    for &((u, v), (u2, v2)) in edges {
        if u != u2 {
            let e = edge_ids.index_of(u, u2).expect("projection of a product edge");
            covered_first[e] = true;
        }
        if v != v2 {
            let e = edge_ids.index_of(v, v2).expect("projection of a product edge");
            covered_second[e] = true;
        }
    }
    covered_first.iter().all(|&c| c) && covered_second.iter().all(|&c| c)
}

/// Shared context for span queries on one graph: the distance matrix and
/// canonical edge list are computed once and reused by all six variants.
pub struct Solver<'a> {
    graph: &'a Graph,
    dist: DistanceMatrix,
    edge_ids: EdgeList,
    radius: u32,
}

impl<'a> Solver<'a> {
    pub fn new(graph: &'a Graph) -> Result<Self> {
        if graph.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let dist = graph.all_pairs_distances();
        let radius = dist.radius()?;
        Ok(Solver {
            graph,
            dist,
            edge_ids: EdgeList::new(graph),
            radius,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// First qualifying component (ascending minimum pair index) of the
    /// filtered product, as a witness, or None.
    fn qualifying_component(
        &self,
        d: u32,
        rules: MoveRules,
        goal: Goal,
    ) -> Option<WitnessComponent> {
        let fp = filtered_product_with(self.graph, &self.dist, d, rules);
        let partition = fp.graph.connected_components();
        let groups = partition.groups();
        for members in groups {
            let pairs: Vec<(usize, usize)> = members.iter().map(|&i| fp.pairs[i]).collect();
            let mut edges = Vec::new();
            for &i in &members {
                for &j in fp.graph.neighbors(i) {
                    if i < j {
                        edges.push((fp.pairs[i], fp.pairs[j]));
                    }
                }
            }
            if projections_surjective_with(self.graph, &self.edge_ids, &pairs, &edges, goal) {
                return Some(WitnessComponent::new(
                    rules.product_kind(),
                    self.graph.vertex_count(),
                    pairs,
                    edges,
                    &self.dist,
                ));
            }
        }
        None
    }

    /// Existence of a covering walk pair keeping distance `>= d`.
    pub fn exists_safe_walk(&self, d: u32, rules: MoveRules, goal: Goal) -> bool {
        self.qualifying_component(d, rules, goal).is_some()
    }

    pub fn span(&self, rules: MoveRules, goal: Goal) -> SpanResult {
        self.span_with(rules, goal, SearchStrategy::default())
    }

    pub fn span_with(&self, rules: MoveRules, goal: Goal, strategy: SearchStrategy) -> SpanResult {
        let value = match strategy {
            SearchStrategy::Linear => {
                let mut found = 0;
                for d in (1..=self.radius).rev() {
                    if self.exists_safe_walk(d, rules, goal) {
                        found = d;
                        break;
                    }
                }
                found
            }
            SearchStrategy::Binary => {
                // Existence is monotone in d and always holds at d = 0.
                let mut lo = 0;
                let mut hi = self.radius;
                while lo < hi {
                    let mid = lo + (hi - lo).div_ceil(2);
                    if self.exists_safe_walk(mid, rules, goal) {
                        lo = mid;
                    } else {
                        hi = mid - 1;
                    }
                }
                lo
            }
        };
        let witness = if value >= 1 {
            let w = self
                .qualifying_component(value, rules, goal)
                .expect("a qualifying component exists at the span value");
            debug_assert_eq!(w.epsilon, value, "witness must realize the span exactly");
            Some(w)
        } else {
            None
        };
        SpanResult {
            value,
            rules,
            goal,
            witness,
        }
    }

    /// All six variants in the fixed order (Traditional, Active, Lazy) x
    /// (Vertex, Edge), matching strong, direct, Cartesian products.
    pub fn all_spans(&self) -> [SpanResult; 6] {
        self.all_spans_with(SearchStrategy::default())
    }

    pub fn all_spans_with(&self, strategy: SearchStrategy) -> [SpanResult; 6] {
        let mut out = Vec::with_capacity(6);
        for rules in MoveRules::ALL {
            for goal in Goal::ALL {
                out.push(self.span_with(rules, goal, strategy));
            }
        }
        out.try_into().expect("exactly six variants")
    }
}

/// Convenience wrapper: existence check on a fresh solver context.
pub fn exists_safe_walk(h: &Graph, d: u32, rules: MoveRules, goal: Goal) -> Result<bool> {
    Ok(Solver::new(h)?.exists_safe_walk(d, rules, goal))
}

/// Convenience wrapper: one span value with its witness.
pub fn span(h: &Graph, rules: MoveRules, goal: Goal) -> Result<SpanResult> {
    Ok(Solver::new(h)?.span(rules, goal))
}

/// Convenience wrapper: all six variants.
pub fn all_spans(h: &Graph) -> Result<[SpanResult; 6]> {
    Ok(Solver::new(h)?.all_spans())
}
