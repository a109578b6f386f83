//! Brute-force reference solver: breadth-first search over
//! (positions, coverage-mask) states. It never builds a product graph, so
//! it is an independent check of the product-based solver on small inputs.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph};
use crate::solver::{Goal, MoveRules};

/// Widest coverage mask the oracle supports.
pub const MASK_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct State {
    a: usize,
    b: usize,
    cover_a: u32,
    cover_b: u32,
}

/// Visited set over packed states. A flat bit vector when the index space
/// is small enough, a hash set otherwise.
enum Visited {
    Bits { words: Vec<u64>, width: u32, n: usize },
    Hash(HashSet<u64>),
}

impl Visited {
    fn new(n: usize, width: usize) -> Self {
        // A flat bit vector up to 256 MB of index space; beyond that the
        // hash set only pays for states actually reached.
        let bits_needed = (n * n) as u128 * (1u128 << (2 * width));
        if bits_needed <= 1 << 31 {
            Visited::Bits {
                words: vec![0u64; (bits_needed as usize).div_ceil(64)],
                width: width as u32,
                n,
            }
        } else {
            Visited::Hash(HashSet::new())
        }
    }

    fn insert(&mut self, s: State) -> bool {
        match self {
            Visited::Bits { words, width, n } => {
                let idx = (((s.a * *n + s.b) as u64) << (2 * *width))
                    | ((s.cover_a as u64) << *width)
                    | s.cover_b as u64;
                let (word, bit) = ((idx / 64) as usize, idx % 64);
                let fresh = words[word] & (1 << bit) == 0;
                words[word] |= 1 << bit;
                fresh
            }
            Visited::Hash(set) => {
                let key = ((s.a as u64) << 48)
                    | ((s.b as u64) << 40)
                    | ((s.cover_a as u64) << 20)
                    | s.cover_b as u64;
                set.insert(key)
            }
        }
    }
}

struct Search<'a> {
    graph: &'a Graph,
    dist_ok: Vec<bool>,
    edge_ids: &'a EdgeList,
    goal: Goal,
    full: u32,
}

impl<'a> Search<'a> {
    fn start_cover(&self, v: usize) -> u32 {
        match self.goal {
            Goal::Vertex => 1 << v,
            Goal::Edge => 0,
        }
    }

    fn step_cover(&self, cover: u32, from: usize, to: usize) -> u32 {
        match self.goal {
            Goal::Vertex => cover | 1 << to,
            Goal::Edge => {
                if from == to {
                    cover
                } else {
                    let e = self
                        .edge_ids
                        .index_of(from, to)
                        .expect("moves follow edges of the graph");
                    cover | 1 << e
                }
            }
        }
    }

    fn is_goal(&self, s: State) -> bool {
        s.cover_a == self.full && s.cover_b == self.full
    }
}

/// True when two players can visit all vertices (or traverse all edges)
/// of connected `h` under `rules` while staying at distance `>= d` at every
/// moment, decided by exhaustive search over masked states.
pub fn oracle_exists(h: &Graph, d: u32, rules: MoveRules, goal: Goal) -> Result<bool> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let edge_ids = EdgeList::new(h);
    let width = match goal {
        Goal::Vertex => n,
        Goal::Edge => edge_ids.len(),
    };
    if width > MASK_LIMIT {
        return Err(Error::MaskWidthExceeded {
            required: width,
            limit: MASK_LIMIT,
        });
    }

    let dm = h.all_pairs_distances();
    let mut dist_ok = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            dist_ok[a * n + b] = dm.get(a, b).at_least(d);
        }
    }

    let search = Search {
        graph: h,
        dist_ok,
        edge_ids: &edge_ids,
        goal,
        full: if width == 0 { 0 } else { (1u32 << width) - 1 },
    };

    let mut visited = Visited::new(n, width);
    let mut queue = VecDeque::new();
    for a in 0..n {
        for b in 0..n {
            if !search.dist_ok[a * n + b] {
                continue;
            }
            let s = State {
                a,
                b,
                cover_a: search.start_cover(a),
                cover_b: search.start_cover(b),
            };
            if search.is_goal(s) {
                return Ok(true);
            }
            if visited.insert(s) {
                queue.push_back(s);
            }
        }
    }

    let push = |s: State, visited: &mut Visited, queue: &mut VecDeque<State>| -> bool {
        if search.is_goal(s) {
            return true;
        }
        if visited.insert(s) {
            queue.push_back(s);
        }
        false
    };

    while let Some(s) = queue.pop_front() {
        debug_assert!(search.dist_ok[s.a * n + s.b], "search left the safe region");
        let moves_a = search.graph.neighbors(s.a);
        let moves_b = search.graph.neighbors(s.b);
        match rules {
            MoveRules::Traditional => {
                // Either or both move; stay-stay is a no-op and skipped.
                for &a2 in moves_a.iter().chain(std::iter::once(&s.a)) {
                    for &b2 in moves_b.iter().chain(std::iter::once(&s.b)) {
                        if a2 == s.a && b2 == s.b {
                            continue;
                        }
                        if !search.dist_ok[a2 * n + b2] {
                            continue;
                        }
                        let next = State {
                            a: a2,
                            b: b2,
                            cover_a: search.step_cover(s.cover_a, s.a, a2),
                            cover_b: search.step_cover(s.cover_b, s.b, b2),
                        };
                        if push(next, &mut visited, &mut queue) {
                            return Ok(true);
                        }
                    }
                }
            }
            MoveRules::Active => {
                for &a2 in moves_a {
                    for &b2 in moves_b {
                        if !search.dist_ok[a2 * n + b2] {
                            continue;
                        }
                        let next = State {
                            a: a2,
                            b: b2,
                            cover_a: search.step_cover(s.cover_a, s.a, a2),
                            cover_b: search.step_cover(s.cover_b, s.b, b2),
                        };
                        if push(next, &mut visited, &mut queue) {
                            return Ok(true);
                        }
                    }
                }
            }
            MoveRules::Lazy => {
                for &a2 in moves_a {
                    if !search.dist_ok[a2 * n + s.b] {
                        continue;
                    }
                    let next = State {
                        a: a2,
                        b: s.b,
                        cover_a: search.step_cover(s.cover_a, s.a, a2),
                        cover_b: s.cover_b,
                    };
                    if push(next, &mut visited, &mut queue) {
                        return Ok(true);
                    }
                }
                for &b2 in moves_b {
                    if !search.dist_ok[s.a * n + b2] {
                        continue;
                    }
                    let next = State {
                        a: s.a,
                        b: b2,
                        cover_a: s.cover_a,
                        cover_b: search.step_cover(s.cover_b, s.b, b2),
                    };
                    if push(next, &mut visited, &mut queue) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Largest `d` in `[0, rad(h)]` for which [`oracle_exists`] holds. For a
/// connected graph every variant succeeds at `d = 0`.
pub fn oracle_span(h: &Graph, rules: MoveRules, goal: Goal) -> Result<u32> {
    let radius = h.radius()?;
    for d in (1..=radius).rev() {
        if oracle_exists(h, d, rules, goal)? {
            return Ok(d);
        }
    }
    Ok(0)
}
