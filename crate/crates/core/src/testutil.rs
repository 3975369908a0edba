//! Shared fixtures for unit tests.

use crate::digraph::Digraph;
use crate::graph::Graph;

/// The directed triangle 0 -> 1 -> 2 -> 0.
pub fn c3() -> Digraph {
    Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
}

/// The transitive tournament on three vertices.
pub fn tt3() -> Digraph {
    Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
}

/// A digon: both arcs between two vertices.
pub fn k2_digon() -> Digraph {
    Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap()
}

/// A strong tournament on four vertices.
pub fn strong4() -> Digraph {
    Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap()
}

/// The strong 4-tournament plus a dominated fifth vertex: an even
/// tournament of odd order whose only peripheral vertex is the sink 4.
pub fn t5_sink() -> Digraph {
    let mut arcs = strong4().arcs().to_vec();
    for v in 0..4 {
        arcs.push((v, 4));
    }
    Digraph::from_arcs(5, arcs).unwrap()
}

/// The Petersen graph; it has a perfect matching.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges).unwrap()
}
