//! Turns a qualifying product component into an explicit pair of player
//! itineraries, and validates arbitrary itinerary pairs against the
//! movement rules, the coverage goal, and a required distance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Distance, DistanceMatrix, Graph};
use crate::products::{pair_index, PairEdge, ProductKind};
use crate::solver::{Goal, MoveRules};

/// A connected subgraph of a product whose projections cover the base
/// graph; the solver reports one per positive span value.
#[derive(Debug, Clone)]
pub struct WitnessComponent {
    pub product_kind: ProductKind,
    /// Vertex count of the base graph; fixes the row-major pair indexing.
    pub base_n: usize,
    /// Component pairs `(u, v)`, ascending by pair index `u * base_n + v`.
    pub pairs: Vec<(usize, usize)>,
    /// Component edges as pair tuples, each normalized so the smaller pair
    /// index comes first.
    pub edges: Vec<PairEdge>,
    /// Minimum base-graph distance over the component's pairs.
    pub epsilon: u32,
}

impl WitnessComponent {
    pub fn new(
        product_kind: ProductKind,
        base_n: usize,
        mut pairs: Vec<(usize, usize)>,
        mut edges: Vec<PairEdge>,
        dist: &DistanceMatrix,
    ) -> Self {
        let key = |&(u, v): &(usize, usize)| pair_index(u, v, base_n);
        pairs.sort_unstable_by_key(key);
        for e in &mut edges {
            if key(&e.0) > key(&e.1) {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable_by_key(|e| (key(&e.0), key(&e.1)));
        let epsilon = pairs
            .iter()
            .map(|&(u, v)| dist.get(u, v))
            .min()
            .and_then(Distance::finite)
            .unwrap_or(0);
        WitnessComponent {
            product_kind,
            base_n,
            pairs,
            edges,
            epsilon,
        }
    }
}

/// Two equal-length vertex itineraries, one per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkPair {
    pub alice: Vec<usize>,
    pub bob: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WalkPairJson {
    alice: Vec<String>,
    bob: Vec<String>,
}

impl WalkPair {
    /// Serializes as two label arrays: `{"alice": [...], "bob": [...]}`.
    pub fn to_json(&self, h: &Graph) -> String {
        let repr = WalkPairJson {
            alice: self.alice.iter().map(|&v| h.label(v).to_string()).collect(),
            bob: self.bob.iter().map(|&v| h.label(v).to_string()).collect(),
        };
        serde_json::to_string_pretty(&repr).expect("label arrays serialize")
    }

    pub fn from_json(h: &Graph, text: &str) -> Result<WalkPair> {
        let repr: WalkPairJson =
            serde_json::from_str(text).map_err(|e| Error::WalkJson(e.to_string()))?;
        let resolve = |labels: &[String]| -> Result<Vec<usize>> {
            labels
                .iter()
                .map(|l| {
                    h.index_of(l).ok_or_else(|| Error::UnknownLabel {
                        label: l.clone(),
                    })
                })
                .collect()
        };
        Ok(WalkPair {
            alice: resolve(&repr.alice)?,
            bob: resolve(&repr.bob)?,
        })
    }

    pub fn len(&self) -> usize {
        self.alice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alice.is_empty()
    }
}

/// One step at which an itinerary pair breaks the movement rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepViolation {
    pub step: usize,
    pub reason: String,
}

/// Outcome of checking an itinerary pair against rules, goal, and a
/// required distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub alice_weak_hom: bool,
    pub bob_weak_hom: bool,
    pub rules_ok: bool,
    pub coverage_ok: bool,
    /// Worst-moment distance between the players.
    pub min_distance: Distance,
    pub required_distance: u32,
    pub first_violation: Option<StepViolation>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.rules_ok && self.coverage_ok && self.min_distance.at_least(self.required_distance)
    }
}

/// A closed walk through the witness component, starting at its
/// minimal-index pair. Vertex goal: the walk visits every component pair.
/// Edge goal: it additionally traverses every component edge. Length is at
/// most `2 * |edges| + 1`.
pub fn covering_walk(z: &WitnessComponent, goal: Goal) -> Result<Vec<(usize, usize)>> {
    if z.pairs.is_empty() {
        return Err(Error::EmptyWitness);
    }
    let k = z.pairs.len();
    let key = |&(u, v): &(usize, usize)| pair_index(u, v, z.base_n);
    let local = |p: &(usize, usize)| -> usize {
        z.pairs
            .binary_search_by_key(&key(p), key)
            .expect("edge endpoints belong to the component")
    };
    // Local adjacency, neighbors ascending by pair index (pairs are sorted).
    let mut adj = vec![Vec::new(); k];
    for (a, b) in &z.edges {
        let (i, j) = (local(a), local(b));
        adj[i].push(j);
        adj[j].push(i);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }

    const UNVISITED: usize = usize::MAX;
    let mut order = vec![UNVISITED; k];
    let mut next_order = 0usize;
    let mut walk = vec![0usize];
    order[0] = next_order;
    next_order += 1;
    // Depth-first double traversal: every tree edge is walked down and up.
    // Under the edge goal, each non-tree edge becomes a there-and-back
    // detour emitted at its first endpoint in visit order; the later
    // endpoint skips it, so every edge is traversed exactly once per
    // direction it needs.
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(&mut (x, ref mut next)) = stack.last_mut() {
        if *next < adj[x].len() {
            let q = adj[x][*next];
            *next += 1;
            if order[q] == UNVISITED {
                order[q] = next_order;
                next_order += 1;
                walk.push(q);
                stack.push((q, 0));
            } else if goal == Goal::Edge && order[x] < order[q] {
                walk.push(q);
                walk.push(x);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _)) = stack.last() {
                walk.push(parent);
            }
        }
    }
    debug_assert!(walk.len() <= 2 * z.edges.len() + 1);
    Ok(walk.into_iter().map(|i| z.pairs[i]).collect())
}

/// Splits a pair-vertex walk into the two player itineraries. Consecutive
/// entries must be equal or product-adjacent, i.e. each coordinate stays
/// or moves along an edge of `h`.
pub fn extract_walk_pair(h: &Graph, walk: &[(usize, usize)]) -> Result<WalkPair> {
    if walk.is_empty() {
        return Err(Error::EmptyWalk);
    }
    let n = h.vertex_count();
    for &(u, v) in walk {
        if u >= n {
            return Err(Error::VertexOutOfRange { index: u, n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, n });
        }
    }
    for (step, pair) in walk.windows(2).enumerate() {
        let ((u, v), (u2, v2)) = (pair[0], pair[1]);
        let first_ok = u == u2 || h.has_edge(u, u2);
        let second_ok = v == v2 || h.has_edge(v, v2);
        if !(first_ok && second_ok) {
            return Err(Error::NonAdjacentStep { step });
        }
    }
    Ok(WalkPair {
        alice: walk.iter().map(|&(u, _)| u).collect(),
        bob: walk.iter().map(|&(_, v)| v).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Stay,
    Along,
    Jump,
}

fn classify(h: &Graph, from: usize, to: usize) -> Move {
    if from == to {
        Move::Stay
    } else if h.has_edge(from, to) {
        Move::Along
    } else {
        Move::Jump
    }
}

/// Checks an itinerary pair step by step: weak-homomorphism condition per
/// player, the per-step movement rules, coverage of the goal, and the
/// worst-moment distance against `required_distance`.
pub fn validate_walk_pair(
    h: &Graph,
    wp: &WalkPair,
    rules: MoveRules,
    goal: Goal,
    required_distance: u32,
) -> Result<ValidationReport> {
    if wp.alice.is_empty() || wp.bob.is_empty() {
        return Err(Error::EmptyWalk);
    }
    if wp.alice.len() != wp.bob.len() {
        return Err(Error::WalkLengthMismatch {
            alice: wp.alice.len(),
            bob: wp.bob.len(),
        });
    }
    let n = h.vertex_count();
    for &v in wp.alice.iter().chain(wp.bob.iter()) {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, n });
        }
    }

    let dm = h.all_pairs_distances();
    let mut alice_weak_hom = true;
    let mut bob_weak_hom = true;
    let mut rules_ok = true;
    let mut first_violation = None;
    for t in 0..wp.len() - 1 {
        let a = classify(h, wp.alice[t], wp.alice[t + 1]);
        let b = classify(h, wp.bob[t], wp.bob[t + 1]);
        if a == Move::Jump {
            alice_weak_hom = false;
        }
        if b == Move::Jump {
            bob_weak_hom = false;
        }
        let step_problem = if a == Move::Jump {
            Some("alice moved to a non-adjacent vertex".to_string())
        } else if b == Move::Jump {
            Some("bob moved to a non-adjacent vertex".to_string())
        } else {
            match rules {
                MoveRules::Traditional => None,
                MoveRules::Active => match (a, b) {
                    (Move::Along, Move::Stay) => Some("bob stayed while alice moved".to_string()),
                    (Move::Stay, Move::Along) => Some("alice stayed while bob moved".to_string()),
                    _ => None,
                },
                MoveRules::Lazy => match (a, b) {
                    (Move::Along, Move::Along) => Some("both players moved".to_string()),
                    (Move::Stay, Move::Stay) => Some("neither player moved".to_string()),
                    _ => None,
                },
            }
        };
        if let Some(reason) = step_problem {
            rules_ok = false;
            if first_violation.is_none() {
                first_violation = Some(StepViolation { step: t, reason });
            }
        }
    }

    let coverage_ok = match goal {
        Goal::Vertex => {
            let covers = |walk: &[usize]| {
                let mut seen = vec![false; n];
                for &v in walk {
                    seen[v] = true;
                }
                seen.into_iter().all(|s| s)
            };
            covers(&wp.alice) && covers(&wp.bob)
        }
        Goal::Edge => {
            let edge_ids = crate::graph::EdgeList::new(h);
            let covers = |walk: &[usize]| {
                let mut seen = vec![false; edge_ids.len()];
                for t in 0..walk.len() - 1 {
                    if walk[t] != walk[t + 1] {
                        if let Some(e) = edge_ids.index_of(walk[t], walk[t + 1]) {
                            seen[e] = true;
                        }
                    }
                }
                seen.into_iter().all(|s| s)
            };
            covers(&wp.alice) && covers(&wp.bob)
        }
    };

    let min_distance = (0..wp.len())
        .map(|t| dm.get(wp.alice[t], wp.bob[t]))
        .min()
        .expect("itineraries are nonempty");

    Ok(ValidationReport {
        alice_weak_hom,
        bob_weak_hom,
        rules_ok,
        coverage_ok,
        min_distance,
        required_distance,
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::solver::{self, Solver};

    fn fig1_graph() -> Graph {
        Graph::parse_edge_list("r1 r2\nr2 r3\nr3 r4\nr2 r4").unwrap()
    }

    fn witness_of(pairs: Vec<(usize, usize)>, edges: Vec<PairEdge>, h: &Graph) -> WitnessComponent {
        WitnessComponent::new(
            ProductKind::Strong,
            h.vertex_count(),
            pairs,
            edges,
            &h.all_pairs_distances(),
        )
    }

    #[test]
    fn covering_walk_single_pair() {
        let k2 = generators::complete(2);
        let z = witness_of(vec![(0, 1)], vec![], &k2);
        assert_eq!(covering_walk(&z, Goal::Vertex).unwrap(), vec![(0, 1)]);
    }

    #[test]
    fn covering_walk_doubles_the_single_edge() {
        let k2 = generators::complete(2);
        let z = witness_of(vec![(0, 1), (1, 0)], vec![((0, 1), (1, 0))], &k2);
        assert_eq!(
            covering_walk(&z, Goal::Edge).unwrap(),
            vec![(0, 1), (1, 0), (0, 1)]
        );
    }

    #[test]
    fn covering_walk_triangle_bound() {
        let c3 = generators::cycle(3);
        // Triangle of pairs: (0,1), (1,2), (2,0) pairwise strong-adjacent.
        let pairs = vec![(0, 1), (1, 2), (2, 0)];
        let edges = vec![
            ((0, 1), (1, 2)),
            ((1, 2), (2, 0)),
            ((0, 1), (2, 0)),
        ];
        let z = witness_of(pairs.clone(), edges, &c3);
        let walk = covering_walk(&z, Goal::Vertex).unwrap();
        assert!(walk.len() <= 7);
        for p in &pairs {
            assert!(walk.contains(p));
        }
        assert_eq!(walk.first(), walk.last(), "walk is closed");
    }

    #[test]
    fn covering_walk_rejects_empty_component() {
        let k2 = generators::complete(2);
        let z = witness_of(vec![], vec![], &k2);
        assert_eq!(covering_walk(&z, Goal::Vertex), Err(Error::EmptyWitness));
    }

    #[test]
    fn extract_projects_each_side() {
        let k2 = generators::complete(2);
        let wp = extract_walk_pair(&k2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(wp.alice, vec![0, 1]);
        assert_eq!(wp.bob, vec![1, 0]);

        let wp = extract_walk_pair(&k2, &[(0, 1)]).unwrap();
        assert_eq!(wp.alice, vec![0]);
        assert_eq!(wp.bob, vec![1]);
    }

    #[test]
    fn extract_the_gallery_walk() {
        let g = fig1_graph();
        let r = |l: &str| g.index_of(l).unwrap();
        let walk = vec![
            (r("r1"), r("r3")),
            (r("r2"), r("r3")),
            (r("r3"), r("r4")),
            (r("r3"), r("r2")),
            (r("r4"), r("r1")),
        ];
        let wp = extract_walk_pair(&g, &walk).unwrap();
        let labels = |seq: &[usize]| -> Vec<&str> { seq.iter().map(|&v| g.label(v)).collect() };
        assert_eq!(labels(&wp.alice), vec!["r1", "r2", "r3", "r3", "r4"]);
        assert_eq!(labels(&wp.bob), vec!["r3", "r3", "r4", "r2", "r1"]);
    }

    #[test]
    fn extract_rejects_teleports() {
        let p4 = generators::path(4);
        let err = extract_walk_pair(&p4, &[(0, 3), (2, 3)]).unwrap_err();
        assert_eq!(err, Error::NonAdjacentStep { step: 0 });
        assert_eq!(extract_walk_pair(&p4, &[]), Err(Error::EmptyWalk));
    }

    fn gallery_pair(g: &Graph) -> WalkPair {
        let r = |l: &str| g.index_of(l).unwrap();
        WalkPair {
            alice: vec![r("r1"), r("r2"), r("r3"), r("r3"), r("r4")],
            bob: vec![r("r3"), r("r3"), r("r4"), r("r2"), r("r1")],
        }
    }

    #[test]
    fn gallery_pair_is_valid_traditionally() {
        let g = fig1_graph();
        let wp = gallery_pair(&g);
        let report = validate_walk_pair(&g, &wp, MoveRules::Traditional, Goal::Vertex, 1).unwrap();
        assert!(report.valid(), "report: {report:?}");
        assert_eq!(report.min_distance, Distance::Finite(1));
    }

    #[test]
    fn gallery_pair_breaks_active_rules_at_step_zero() {
        let g = fig1_graph();
        let wp = gallery_pair(&g);
        let report = validate_walk_pair(&g, &wp, MoveRules::Active, Goal::Vertex, 1).unwrap();
        assert!(!report.valid());
        let v = report.first_violation.unwrap();
        assert_eq!(v.step, 0);
        assert!(v.reason.contains("stayed"), "reason: {}", v.reason);
    }

    #[test]
    fn gallery_pair_breaks_lazy_rules_at_step_one() {
        let g = fig1_graph();
        let wp = gallery_pair(&g);
        let report = validate_walk_pair(&g, &wp, MoveRules::Lazy, Goal::Vertex, 1).unwrap();
        assert!(!report.valid());
        let v = report.first_violation.unwrap();
        assert_eq!(v.step, 1);
        assert_eq!(v.reason, "both players moved");
    }

    #[test]
    fn validation_errors() {
        let g = fig1_graph();
        let wp = WalkPair {
            alice: vec![0, 1],
            bob: vec![0],
        };
        assert_eq!(
            validate_walk_pair(&g, &wp, MoveRules::Traditional, Goal::Vertex, 0),
            Err(Error::WalkLengthMismatch { alice: 2, bob: 1 })
        );
        let wp = WalkPair {
            alice: vec![0, 9],
            bob: vec![0, 1],
        };
        assert_eq!(
            validate_walk_pair(&g, &wp, MoveRules::Traditional, Goal::Vertex, 0),
            Err(Error::VertexOutOfRange { index: 9, n: 4 })
        );
    }

    #[test]
    fn walk_pair_json_round_trip() {
        let g = fig1_graph();
        let wp = gallery_pair(&g);
        let json = wp.to_json(&g);
        let back = WalkPair::from_json(&g, &json).unwrap();
        assert_eq!(back, wp);

        assert!(matches!(
            WalkPair::from_json(&g, "{\"alice\": [\"zz\"], \"bob\": [\"r1\"]}"),
            Err(Error::UnknownLabel { .. })
        ));
        assert!(matches!(
            WalkPair::from_json(&g, "not json"),
            Err(Error::WalkJson(_))
        ));
    }

    /// Round trip on every connected graph with 2..=4 vertices: witnesses
    /// of positive spans extract to itineraries that validate at the span.
    #[test]
    fn witness_round_trip_small_graphs() {
        for n in 2..=4 {
            for h in generators::all_connected_graphs(n) {
                let solver = Solver::new(&h).unwrap();
                let rad = solver.radius();
                for rules in MoveRules::ALL {
                    for goal in Goal::ALL {
                        let r = solver.span(rules, goal);
                        let Some(w) = &r.witness else {
                            assert_eq!(r.value, 0);
                            continue;
                        };
                        let walk = covering_walk(w, goal).unwrap();
                        let wp = extract_walk_pair(&h, &walk).unwrap();
                        let report =
                            validate_walk_pair(&h, &wp, rules, goal, r.value).unwrap();
                        assert!(report.valid(), "graph {:?} {:?} {:?}", h.edges(), rules, goal);
                        assert_eq!(report.min_distance, Distance::Finite(r.value));
                        assert!(report.min_distance.at_least(1));
                        // The worst-moment distance of any valid surjective
                        // pair never exceeds the radius.
                        assert!(Distance::Finite(rad) >= report.min_distance);
                        // Each itinerary's image is a connected subgraph.
                        for walk in [&wp.alice, &wp.bob] {
                            assert!(image_is_connected(walk));
                        }
                    }
                }
            }
        }
    }

    /// Connectivity of the itinerary's image: visited vertices plus
    /// non-collapsed traversed edges.
    fn image_is_connected(walk: &[usize]) -> bool {
        let mut verts: Vec<usize> = walk.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let local: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges: Vec<(usize, usize)> = walk
            .windows(2)
            .filter(|w| w[0] != w[1])
            .map(|w| {
                let (a, b) = (local[&w[0]], local[&w[1]]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let image = Graph::from_index_edges(verts.len(), &edges).unwrap();
        image.is_connected()
    }

    #[test]
    fn one_vertex_graph_has_no_witness() {
        let p1 = generators::path(1);
        for rules in MoveRules::ALL {
            for goal in Goal::ALL {
                let r = solver::span(&p1, rules, goal).unwrap();
                assert_eq!(r.value, 0);
                assert!(r.witness.is_none());
            }
        }
    }
}
