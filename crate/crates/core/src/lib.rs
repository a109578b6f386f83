//! Spans of connected graphs: the maximal safety distance two players can
//! keep at all times while both visit every vertex (or traverse every
//! edge), under traditional, active, or lazy movement rules.
//!
//! The six variants (three rule sets times two coverage goals) reduce to a
//! search over connected subgraphs of the strong, direct, or Cartesian
//! product of the graph with itself: the span at distance `d` is feasible
//! exactly when some component of the product restricted to pairs at
//! distance `>= d` projects onto the whole graph on both coordinates.
//!
//! The crate provides:
//! - [`graph`]: parsing, distances, metric invariants, components;
//! - [`products`]: the three products and their projections;
//! - [`solver`]: the existence check and span search, with witnesses;
//! - [`witness`]: explicit player itineraries and their validation;
//! - [`oracle`]: an independent brute-force verifier for small graphs;
//! - [`generators`]: graph families and deterministic random fixtures.

pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod products;
pub mod solver;
pub mod witness;

pub use error::{Error, ParseError};
pub use graph::{Distance, DistanceMatrix, EdgeList, Graph, Partition};
pub use oracle::{oracle_exists, oracle_span};
pub use products::{build_product, ProductGraph, ProductKind, Side};
pub use solver::{
    all_spans, exists_safe_walk, filtered_product, projections_surjective, span, FilteredProduct,
    Goal, MoveRules, SearchStrategy, SpanResult, Solver,
};
pub use witness::{
    covering_walk, extract_walk_pair, validate_walk_pair, ValidationReport, WalkPair,
    WitnessComponent,
};
