//! Bipartite representation and partial split of a digraph.
//!
//! Each vertex `v` contributes an out-half and an in-half; an arc `uv`
//! becomes the undirected edge between the out-half of `u` and the in-half
//! of `v`. The partial split re-identifies the two halves of every vertex
//! whose semi-degrees are both odd. Parallel edges can arise between two
//! merged vertices joined by a digon, so edges keep their arc identity.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, VertexId};
use crate::graph::{maximum_matching, Graph};

/// Which side of the split a vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    OutHalf,
    InHalf,
    Merged,
}

/// A vertex of `BG(D)` or `PS(D)` with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitVertex {
    pub kind: SplitKind,
    pub origin: VertexId,
}

/// The three-way partition of the split vertices: merged vertices,
/// non-merged vertices of even degree, non-merged vertices of odd degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitClass {
    V1,
    V2,
    V3,
}

/// One split edge; `arc` is the index of the originating arc in the
/// digraph's sorted arc list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitEdge {
    pub a: usize,
    pub b: usize,
    pub arc: usize,
}

/// The split graph with vertex classes and connected components.
#[derive(Debug, Clone)]
pub struct PartialSplit {
    vertices: Vec<SplitVertex>,
    out_id: Vec<usize>,
    in_id: Vec<usize>,
    edges: Vec<SplitEdge>,
    adj: Vec<Vec<(usize, usize)>>,
    degree: Vec<usize>,
    class_of: Vec<SplitClass>,
    /// Components sorted internally and listed by smallest member id, so
    /// component order follows the smallest contained origin vertex.
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

/// Bipartite representation `BG(D)`: no merging, classes by degree.
pub fn bipartite_representation(d: &Digraph) -> PartialSplit {
    build(d, false)
}

/// Partial split `PS(D)`: halves of every odd-odd vertex re-identified.
pub fn partial_split(d: &Digraph) -> PartialSplit {
    build(d, true)
}

fn build(d: &Digraph, merge: bool) -> PartialSplit {
    let n = d.n();
    let mut vertices = Vec::new();
    let mut out_id = vec![0; n];
    let mut in_id = vec![0; n];
    for v in 0..n {
        let odd_odd = d.out_degree(v) % 2 == 1 && d.in_degree(v) % 2 == 1;
        if merge && odd_odd {
            out_id[v] = vertices.len();
            in_id[v] = vertices.len();
            vertices.push(SplitVertex {
                kind: SplitKind::Merged,
                origin: v,
            });
        } else {
            out_id[v] = vertices.len();
            vertices.push(SplitVertex {
                kind: SplitKind::OutHalf,
                origin: v,
            });
            in_id[v] = vertices.len();
            vertices.push(SplitVertex {
                kind: SplitKind::InHalf,
                origin: v,
            });
        }
    }

    let m = vertices.len();
    let mut edges = Vec::with_capacity(d.arc_count());
    let mut adj = vec![Vec::new(); m];
    let mut degree = vec![0; m];
    for (idx, &(u, v)) in d.arcs().iter().enumerate() {
        let a = out_id[u];
        let b = in_id[v];
        edges.push(SplitEdge { a, b, arc: idx });
        adj[a].push((b, idx));
        adj[b].push((a, idx));
        degree[a] += 1;
        degree[b] += 1;
    }
    for l in &mut adj {
        l.sort_unstable();
    }

    let class_of = (0..m)
        .map(|s| {
            if vertices[s].kind == SplitKind::Merged {
                SplitClass::V1
            } else if degree[s] % 2 == 0 {
                SplitClass::V2
            } else {
                SplitClass::V3
            }
        })
        .collect();

    // Connected components by BFS in split-id order.
    let mut component_of = vec![usize::MAX; m];
    let mut components = Vec::new();
    for s in 0..m {
        if component_of[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut comp = vec![s];
        component_of[s] = id;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &(w, _) in &adj[v] {
                if component_of[w] == usize::MAX {
                    component_of[w] = id;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }

    PartialSplit {
        vertices,
        out_id,
        in_id,
        edges,
        adj,
        degree,
        class_of,
        components,
        component_of,
    }
}

impl PartialSplit {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[SplitVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[SplitEdge] {
        &self.edges
    }

    /// Split id of the out-half of `v` (the merged vertex if merged).
    pub fn out_id(&self, v: VertexId) -> usize {
        self.out_id[v]
    }

    /// Split id of the in-half of `v` (the merged vertex if merged).
    pub fn in_id(&self, v: VertexId) -> usize {
        self.in_id[v]
    }

    pub fn is_merged(&self, v: VertexId) -> bool {
        self.out_id[v] == self.in_id[v]
    }

    pub fn class_of(&self, split_id: usize) -> SplitClass {
        self.class_of[split_id]
    }

    pub fn degree(&self, split_id: usize) -> usize {
        self.degree[split_id]
    }

    /// Neighbors as `(split id, arc index)` pairs, ascending.
    pub fn adjacency(&self, split_id: usize) -> &[(usize, usize)] {
        &self.adj[split_id]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, split_id: usize) -> usize {
        self.component_of[split_id]
    }

    /// A component is nontrivial when it spans at least one edge.
    pub fn is_nontrivial(&self, component: usize) -> bool {
        self.components[component].len() >= 2
    }

    pub fn members_in_class(&self, component: usize, class: SplitClass) -> Vec<usize> {
        self.components[component]
            .iter()
            .copied()
            .filter(|&s| self.class_of[s] == class)
            .collect()
    }

    /// A nontrivial component with an odd number of V2 members and no V3
    /// member cannot host the required parity join.
    pub fn is_bad_component(&self, component: usize) -> bool {
        self.is_nontrivial(component)
            && self.members_in_class(component, SplitClass::V2).len() % 2 == 1
            && self.members_in_class(component, SplitClass::V3).is_empty()
    }

    /// Ids of all bad components, ascending.
    pub fn bad_components(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&k| self.is_bad_component(k))
            .collect()
    }

    /// Total count of V2 split vertices (including isolated ones).
    pub fn v2_count(&self) -> usize {
        self.class_of
            .iter()
            .filter(|&&c| c == SplitClass::V2)
            .count()
    }
}

/// The graph on bad components: two components are adjacent when they
/// contain the two halves of a common vertex. `matching` is a maximum
/// matching, as index pairs into `component_ids`.
#[derive(Debug, Clone)]
pub struct BadComponentGraph {
    pub component_ids: Vec<usize>,
    pub graph: Graph,
    /// For each graph edge (i, j) with i < j, the smallest origin vertex
    /// whose halves witness the adjacency.
    pub edge_witness: BTreeMap<(usize, usize), VertexId>,
    pub matching: Vec<(usize, usize)>,
}

pub fn build_bad_component_graph(d: &Digraph, ps: &PartialSplit) -> BadComponentGraph {
    let component_ids = ps.bad_components();
    let mut bad_index = BTreeMap::new();
    for (i, &k) in component_ids.iter().enumerate() {
        bad_index.insert(k, i);
    }
    let mut edge_witness: BTreeMap<(usize, usize), VertexId> = BTreeMap::new();
    for v in 0..d.n() {
        if ps.is_merged(v) {
            continue;
        }
        let ka = ps.component_of(ps.out_id(v));
        let kb = ps.component_of(ps.in_id(v));
        if ka == kb {
            continue;
        }
        if let (Some(&i), Some(&j)) = (bad_index.get(&ka), bad_index.get(&kb)) {
            let key = (i.min(j), i.max(j));
            edge_witness.entry(key).or_insert(v);
        }
    }
    let graph = Graph::from_edges(component_ids.len(), edge_witness.keys().copied())
        .expect("bad-component edges are simple");
    let matching = maximum_matching(&graph);
    BadComponentGraph {
        component_ids,
        graph,
        edge_witness,
        matching,
    }
}
