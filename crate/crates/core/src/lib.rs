//! Weak-odd edge colorings of digraphs: deciding and constructing
//! colorings, computing the defect through the matching formula, and
//! building 2-edge coverings of tournaments.
//!
//! An arc coloring is *weak-odd* when every vertex has some color
//! appearing an odd number of times on each of its nonempty semi-cuts,
//! the same color for both. The minimum number of colors never exceeds
//! three. This crate provides:
//!
//! - [`digraph`]: the digraph representation with semi-cut queries and
//!   strong-component decomposition;
//! - [`parity`]: the generic engine deciding 2-colorability, computing the
//!   defect, and constructing witnesses for arbitrary digraphs;
//! - [`split`]: the bipartite representation and partial split backing the
//!   engine;
//! - [`classes`]: closed-form classifiers and fast constructions for
//!   tournaments, semicomplete digraphs, and extended tournaments, plus
//!   tournament coverings;
//! - [`hamilton`]: Hamiltonian dipaths and dicycles of semicomplete
//!   digraphs used by the constructions;
//! - [`oracle`]: brute-force ground truth at small sizes;
//! - [`gen`]: seeded, reproducible instance generators;
//! - [`io`]: arc-list documents, analysis reports, and DOT export;
//! - [`selftest`]: the oracle-equivalence sweep behind `weakodd selftest`.

pub mod classes;
pub mod digraph;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod oracle;
pub mod parity;
pub mod selftest;
pub mod split;

#[cfg(test)]
pub(crate) mod testutil;

pub use classes::{
    blow_up, classify_extended_tournament, classify_semicomplete, classify_tournament,
    et_defect, et_defect_coloring, et_v2_is_even, is_bad_et, semicomplete_defect_coloring,
    semicomplete_two_coloring, tournament_covering, BadEtWitness, EtClassification,
    ExtendedTournament, SemicompleteClass,
};
pub use digraph::{
    Digraph, Direction, PeripheralKind, SemiCut, StrongComponentDecomposition, VertexId,
};
pub use error::{Error, Result};
pub use gen::{enumerate_tournaments, gen, GenClass, GenSpec, Generated, SplitMix64};
pub use graph::{maximum_matching, s_join, Graph, SJoinRequest};
pub use hamilton::{hamiltonian_dicycle, hamiltonian_dipath, spanning_component_path, Dicycle, Dipath};
pub use oracle::{
    brute_chromatic_index, brute_covering_exists, brute_defect, brute_maximum_matching,
    CoveringSearch, OracleBudget,
};
pub use parity::{
    chromatic_index, chromatic_index_witness, construct_two_coloring, decide_two_colorable,
    defect, defect_coloring, extend_coloring, three_coloring, verify_coloring, verify_covering,
    ArcColoring, ArcCovering, SatisfactionReport,
};
pub use split::{
    bipartite_representation, build_bad_component_graph, partial_split, BadComponentGraph,
    PartialSplit, SplitClass, SplitEdge, SplitKind, SplitVertex,
};
