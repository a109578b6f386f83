//! Strong, direct, and Cartesian products of a graph with itself, plus the
//! pair-index layout and projection maps shared with the solver.
//!
//! Pair `(i, j)` of a factor on `n` vertices lives at index `i * n + j`;
//! the row-major layout is part of the public contract so that witnesses
//! serialize stably.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest factor for which [`build_product`] will materialize all `n^2`
/// pair-vertices. The solver itself never materializes a full product; it
/// only builds distance-filtered induced subgraphs.
pub const MATERIALIZE_LIMIT: usize = 64;

/// A product edge written out as its two factor pairs.
pub type PairEdge = ((usize, usize), (usize, usize));

/// Which of the three products to build. Each kind encodes one set of
/// movement rules: Strong for traditional, Direct for active, Cartesian
/// for lazy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Strong,
    Direct,
    Cartesian,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Strong => "strong",
            ProductKind::Direct => "direct",
            ProductKind::Cartesian => "cartesian",
        }
    }

    /// Whether `(u1, v1)(u2, v2)` is an edge of `H (*) H` for this kind,
    /// given the factor `H`.
    pub fn is_product_edge(
        self,
        h: &Graph,
        (u1, v1): (usize, usize),
        (u2, v2): (usize, usize),
    ) -> bool {
        let cartesian =
            (u1 == u2 && h.has_edge(v1, v2)) || (h.has_edge(u1, u2) && v1 == v2);
        let direct = h.has_edge(u1, u2) && h.has_edge(v1, v2);
        match self {
            ProductKind::Cartesian => cartesian,
            ProductKind::Direct => direct,
            ProductKind::Strong => cartesian || direct,
        }
    }

    /// Product neighbors of the pair `(u, v)`, in ascending pair-index order.
    pub fn pair_neighbors(self, h: &Graph, u: usize, v: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        match self {
            ProductKind::Cartesian => {
                for &u2 in h.neighbors(u) {
                    out.push((u2, v));
                }
                for &v2 in h.neighbors(v) {
                    out.push((u, v2));
                }
            }
            ProductKind::Direct => {
                for &u2 in h.neighbors(u) {
                    for &v2 in h.neighbors(v) {
                        out.push((u2, v2));
                    }
                }
            }
            ProductKind::Strong => {
                for &u2 in h.neighbors(u) {
                    out.push((u2, v));
                    for &v2 in h.neighbors(v) {
                        out.push((u2, v2));
                    }
                }
                for &v2 in h.neighbors(v) {
                    out.push((u, v2));
                }
            }
        }
        let n = h.vertex_count();
        out.sort_unstable_by_key(|&(a, b)| a * n + b);
        out
    }
}

/// Projection side: first or second coordinate of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Row-major index of the pair `(i, j)` in a product over `n` vertices.
pub fn pair_index(i: usize, j: usize, n: usize) -> usize {
    i * n + j
}

/// Inverse of [`pair_index`].
pub fn unpair(index: usize, n: usize) -> (usize, usize) {
    (index / n, index % n)
}

/// Projects a pair index onto one factor coordinate.
pub fn project(index: usize, n: usize, side: Side) -> Result<usize> {
    let limit = n * n;
    if index >= limit {
        return Err(Error::PairOutOfRange { index, limit });
    }
    Ok(match side {
        Side::First => index / n,
        Side::Second => index % n,
    })
}

/// A fully materialized product `H (*) H`.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    base: Graph,
    kind: ProductKind,
    graph: Graph,
}

impl ProductGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    /// The product as an ordinary graph on `n^2` pair-vertices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        pair_index(i, j, self.base.vertex_count())
    }

    pub fn project(&self, index: usize, side: Side) -> Result<usize> {
        project(index, self.base.vertex_count(), side)
    }
}

/// Materializes `H (*) H` for factors up to [`MATERIALIZE_LIMIT`] vertices.
pub fn build_product(h: &Graph, kind: ProductKind) -> Result<ProductGraph> {
    build_product_with_limit(h, kind, MATERIALIZE_LIMIT)
}

/// As [`build_product`] with a caller-chosen size limit.
pub fn build_product_with_limit(h: &Graph, kind: ProductKind, limit: usize) -> Result<ProductGraph> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limit {
        return Err(Error::ProductTooLarge { n, limit });
    }
    // Pair-vertices are labeled by factor indices, not factor labels:
    // index digits cannot contain the separator, so the labels stay
    // distinct whatever the factor's labels look like.
    let labels: Vec<String> = (0..n * n)
        .map(|p| {
            let (i, j) = unpair(p, n);
            format!("{i}|{j}")
        })
        .collect();
    let mut edges = Vec::new();
    for p in 0..n * n {
        let (u, v) = unpair(p, n);
        for (u2, v2) in kind.pair_neighbors(h, u, v) {
            let q = pair_index(u2, v2, n);
            if p < q {
                edges.push((p, q));
            }
        }
    }
    let graph = Graph::new(labels, &edges).expect("product edges are simple");
    Ok(ProductGraph {
        base: h.clone(),
        kind,
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Brute-force edge rule straight from the product definitions; used to
    /// cross-check the neighbor-based construction.
    fn definition_edge(kind: ProductKind, h: &Graph, p: usize, q: usize) -> bool {
        let n = h.vertex_count();
        let (u1, v1) = unpair(p, n);
        let (u2, v2) = unpair(q, n);
        let cart = (u1 == u2 && h.has_edge(v1, v2)) || (h.has_edge(u1, u2) && v1 == v2);
        let dir = h.has_edge(u1, u2) && h.has_edge(v1, v2);
        match kind {
            ProductKind::Cartesian => cart,
            ProductKind::Direct => dir,
            ProductKind::Strong => cart || dir,
        }
    }

    #[test]
    fn k2_products_are_the_textbook_graphs() {
        let k2 = generators::complete(2);

        let strong = build_product(&k2, ProductKind::Strong).unwrap();
        assert_eq!(strong.graph().vertex_count(), 4);
        assert_eq!(strong.graph().edge_count(), 6); // K_4

        let direct = build_product(&k2, ProductKind::Direct).unwrap();
        assert_eq!(direct.graph().edge_count(), 2); // two disjoint edges
        assert!(direct.graph().has_edge(
            direct.pair_index(0, 1),
            direct.pair_index(1, 0)
        ));
        assert!(direct.graph().has_edge(
            direct.pair_index(0, 0),
            direct.pair_index(1, 1)
        ));

        let cartesian = build_product(&k2, ProductKind::Cartesian).unwrap();
        assert_eq!(cartesian.graph().edge_count(), 4); // C_4
        assert!(cartesian.graph().is_connected());
        for p in 0..4 {
            assert_eq!(cartesian.graph().degree(p), 2);
        }
    }

    #[test]
    fn projections_of_pair_indices() {
        assert_eq!(project(2 * 8 + 5, 8, Side::First).unwrap(), 2);
        assert_eq!(project(2 * 8 + 5, 8, Side::Second).unwrap(), 5);
        assert_eq!(project(0, 8, Side::First).unwrap(), 0);
        assert_eq!(project(0, 8, Side::Second).unwrap(), 0);
        assert_eq!(
            project(64, 8, Side::First),
            Err(Error::PairOutOfRange { index: 64, limit: 64 })
        );
    }

    #[test]
    fn strong_edges_split_into_cartesian_and_direct_exhaustively() {
        for n in 1..=5 {
            for h in generators::all_connected_graphs(n) {
                let strong = build_product(&h, ProductKind::Strong).unwrap();
                let cart = build_product(&h, ProductKind::Cartesian).unwrap();
                let dir = build_product(&h, ProductKind::Direct).unwrap();
                let total = n * n;
                for p in 0..total {
                    for q in (p + 1)..total {
                        let s = strong.graph().has_edge(p, q);
                        let c = cart.graph().has_edge(p, q);
                        let d = dir.graph().has_edge(p, q);
                        assert_eq!(s, c || d);
                        assert!(!(c && d), "cartesian and direct edges are disjoint");
                        assert_eq!(s, definition_edge(ProductKind::Strong, &h, p, q));
                    }
                }
            }
        }
    }

    #[test]
    fn edge_counts_match_the_product_formulas() {
        let mut rng = generators::Prng::new(11);
        for _ in 0..20 {
            let n = 2 + rng.below(6);
            let h = generators::random_connected(n, rng.below(4), &mut rng);
            let m = h.edge_count();
            let cart = build_product(&h, ProductKind::Cartesian).unwrap();
            assert_eq!(cart.graph().edge_count(), 2 * n * m);
            let dir = build_product(&h, ProductKind::Direct).unwrap();
            assert_eq!(dir.graph().edge_count(), 2 * m * m);
            let strong = build_product(&h, ProductKind::Strong).unwrap();
            assert_eq!(strong.graph().edge_count(), 2 * n * m + 2 * m * m);
        }
    }

    #[test]
    fn strong_and_cartesian_products_of_connected_factors_are_connected() {
        let mut rng = generators::Prng::new(23);
        for _ in 0..10 {
            let n = 2 + rng.below(6);
            let h = generators::random_connected(n, rng.below(5), &mut rng);
            for kind in [ProductKind::Strong, ProductKind::Cartesian] {
                let p = build_product(&h, kind).unwrap();
                assert_eq!(p.graph().connected_components().count(), 1);
            }
        }
    }

    #[test]
    fn oversized_factor_is_rejected() {
        let big = generators::path(65);
        assert_eq!(
            build_product(&big, ProductKind::Strong).unwrap_err(),
            Error::ProductTooLarge { n: 65, limit: 64 }
        );
        // Raising the limit makes it work.
        assert!(build_product_with_limit(&big, ProductKind::Cartesian, 100).is_ok());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            /// Both projections are weak homomorphisms: every product edge
            /// maps to an edge of the factor or collapses to one vertex.
            #[test]
            fn projections_are_weak_homomorphisms(seed in 0u64..500) {
                let mut rng = generators::Prng::new(seed);
                let n = 2 + rng.below(5);
                let h = generators::random_connected(n, rng.below(4), &mut rng);
                for kind in [ProductKind::Strong, ProductKind::Direct, ProductKind::Cartesian] {
                    let prod = build_product(&h, kind).unwrap();
                    for (p, q) in prod.graph().edges() {
                        for side in [Side::First, Side::Second] {
                            let a = prod.project(p, side).unwrap();
                            let b = prod.project(q, side).unwrap();
                            prop_assert!(a == b || h.has_edge(a, b));
                        }
                    }
                }
            }
        }
    }
}
