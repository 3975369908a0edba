//! Loop-free digraphs with dense vertex ids.
//!
//! Digons (a pair of mutually opposite arcs) are allowed, parallel arcs in
//! the same direction are not. Arc iteration order is always sorted by
//! (tail, head) so every downstream witness is reproducible.

use crate::error::{Error, Result};

/// Vertices are dense indices in `[0, n)`.
pub type VertexId = usize;

/// One of the two semi-cut directions of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Out,
    In,
}

/// The set of arcs leaving (`Out`) or entering (`In`) a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiCut {
    pub vertex: VertexId,
    pub direction: Direction,
    pub arcs: Vec<(VertexId, VertexId)>,
}

/// How a vertex with an empty semi-cut is peripheral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeripheralKind {
    /// `d^-(v) = 0`, `d^+(v) > 0`.
    Source,
    /// `d^+(v) = 0`, `d^-(v) > 0`.
    Sink,
    /// Both semi-degrees are zero.
    Isolated,
}

/// Strong components in acyclic order: every arc between distinct
/// components goes from an earlier component to a later one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongComponentDecomposition {
    /// Vertex sets, each sorted, listed in topological order.
    pub components: Vec<Vec<VertexId>>,
    /// `component_of[v]` is the index of the component containing `v`.
    pub component_of: Vec<usize>,
}

impl StrongComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn initial(&self) -> &[VertexId] {
        &self.components[0]
    }

    pub fn terminal(&self) -> &[VertexId] {
        &self.components[self.components.len() - 1]
    }
}

/// An immutable digraph. Safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(VertexId, VertexId)>,
    has: Vec<bool>,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl Digraph {
    /// Builds a digraph on `n` vertices from an arc list. Rejects loops,
    /// duplicate arcs, and out-of-range endpoints.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut has = vec![false; n * n];
        let mut sorted = Vec::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "arc ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop arc ({u}, {v})")));
            }
            if has[u * n + v] {
                return Err(Error::InvalidInput(format!("duplicate arc ({u}, {v})")));
            }
            has[u * n + v] = true;
            sorted.push((u, v));
        }
        sorted.sort_unstable();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &sorted {
            out_adj[u].push(v);
        }
        // reverse arcs sorted by (head, tail) give sorted in-lists
        let mut rev: Vec<(VertexId, VertexId)> = sorted.iter().map(|&(u, v)| (v, u)).collect();
        rev.sort_unstable();
        for &(v, u) in &rev {
            in_adj[v].push(u);
        }
        Ok(Digraph {
            n,
            arcs: sorted,
            has,
            out_adj,
            in_adj,
        })
    }

    /// Digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Digraph::from_arcs(n, std::iter::empty()).expect("empty arc set is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// All arcs sorted by (tail, head).
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.has[u * self.n + v]
    }

    /// Position of arc `(u, v)` in the sorted arc list.
    pub fn arc_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        if !self.has_arc(u, v) {
            return None;
        }
        self.arcs.binary_search(&(u, v)).ok()
    }

    /// Out-neighbors of `v`, ascending.
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    /// In-neighbors of `v`, ascending.
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    /// Total degree `d(v) = d^+(v) + d^-(v)`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Size of the out or in semi-cut of `v`.
    pub fn semi_degree(&self, v: VertexId, dir: Direction) -> Result<usize> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        Ok(match dir {
            Direction::Out => self.out_degree(v),
            Direction::In => self.in_degree(v),
        })
    }

    /// The semi-cut of `v` as an explicit arc set.
    pub fn semi_cut(&self, v: VertexId, dir: Direction) -> Result<SemiCut> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        let arcs = match dir {
            Direction::Out => self.out_adj[v].iter().map(|&w| (v, w)).collect(),
            Direction::In => self.in_adj[v].iter().map(|&u| (u, v)).collect(),
        };
        Ok(SemiCut {
            vertex: v,
            direction: dir,
            arcs,
        })
    }

    /// All vertices with an empty semi-cut, annotated sink/source/isolated.
    pub fn peripheral_vertices(&self) -> Vec<(VertexId, PeripheralKind)> {
        (0..self.n)
            .filter_map(|v| {
                let out0 = self.out_degree(v) == 0;
                let in0 = self.in_degree(v) == 0;
                match (out0, in0) {
                    (true, true) => Some((v, PeripheralKind::Isolated)),
                    (true, false) => Some((v, PeripheralKind::Sink)),
                    (false, true) => Some((v, PeripheralKind::Source)),
                    (false, false) => None,
                }
            })
            .collect()
    }

    /// Arcs with tail in `X` and head in `Y`.
    pub fn arcs_between(&self, x: &[VertexId], y: &[VertexId]) -> Vec<(VertexId, VertexId)> {
        let mut in_x = vec![false; self.n];
        let mut in_y = vec![false; self.n];
        for &v in x {
            in_x[v] = true;
        }
        for &v in y {
            in_y[v] = true;
        }
        self.arcs
            .iter()
            .copied()
            .filter(|&(u, v)| in_x[u] && in_y[v])
            .collect()
    }

    /// Every unordered pair of vertices joined by at least one arc.
    pub fn is_semicomplete(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_arc(u, v) && !self.has_arc(v, u) {
                    return false;
                }
            }
        }
        true
    }

    /// Exactly one arc per unordered pair (an orientation of K_n).
    pub fn is_tournament(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_arc(u, v) == self.has_arc(v, u) {
                    return false;
                }
            }
        }
        true
    }

    /// Every vertex has even total degree.
    pub fn is_even(&self) -> bool {
        (0..self.n).all(|v| self.degree(v).is_multiple_of(2))
    }

    /// True if every vertex reaches every other vertex. Trivial digraphs
    /// (n <= 1) count as strong.
    pub fn is_strong(&self) -> bool {
        self.strong_components().len() <= 1
    }

    /// Tarjan's algorithm; components are reported in topological order of
    /// the condensation, each sorted by vertex id.
    pub fn strong_components(&self) -> StrongComponentDecomposition {
        struct State<'a> {
            g: &'a Digraph,
            index: usize,
            idx: Vec<Option<usize>>,
            low: Vec<usize>,
            stack: Vec<usize>,
            on_stack: Vec<bool>,
            comps: Vec<Vec<usize>>,
        }

        fn connect(v: usize, st: &mut State) {
            st.idx[v] = Some(st.index);
            st.low[v] = st.index;
            st.index += 1;
            st.stack.push(v);
            st.on_stack[v] = true;
            for &w in st.g.out_neighbors(v) {
                if st.idx[w].is_none() {
                    connect(w, st);
                    st.low[v] = st.low[v].min(st.low[w]);
                } else if st.on_stack[w] {
                    st.low[v] = st.low[v].min(st.idx[w].unwrap());
                }
            }
            if st.low[v] == st.idx[v].unwrap() {
                let mut comp = Vec::new();
                loop {
                    let w = st.stack.pop().unwrap();
                    st.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                st.comps.push(comp);
            }
        }

        let mut st = State {
            g: self,
            index: 0,
            idx: vec![None; self.n],
            low: vec![0; self.n],
            stack: Vec::new(),
            on_stack: vec![false; self.n],
            comps: Vec::new(),
        };
        for v in 0..self.n {
            if st.idx[v].is_none() {
                connect(v, &mut st);
            }
        }
        // Tarjan emits components in reverse topological order.
        st.comps.reverse();
        let mut component_of = vec![0; self.n];
        for (i, comp) in st.comps.iter().enumerate() {
            for &v in comp {
                component_of[v] = i;
            }
        }
        StrongComponentDecomposition {
            components: st.comps,
            component_of,
        }
    }

    /// Induced subdigraph on `keep` (which must be sorted and duplicate
    /// free). Returns the digraph plus the map from new ids to old ids.
    pub fn induced(&self, keep: &[VertexId]) -> (Digraph, Vec<VertexId>) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_of[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX)
            .map(|&(u, v)| (new_of[u], new_of[v]));
        let g = Digraph::from_arcs(keep.len(), arcs).expect("induced arcs are valid");
        (g, keep.to_vec())
    }

    /// Deletes one vertex; remaining ids are re-densified. The returned
    /// vector maps new ids back to the original ids.
    pub fn delete_vertex(&self, v: VertexId) -> Result<(Digraph, Vec<VertexId>)> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        let keep: Vec<VertexId> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph::from_arcs(self.n, self.arcs.iter().map(|&(u, v)| (v, u)))
            .expect("reversal preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn construction_rejects_bad_arcs() {
        assert!(matches!(
            Digraph::from_arcs(3, [(0, 0)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Digraph::from_arcs(3, [(0, 1), (0, 1)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Digraph::from_arcs(2, [(0, 2)]),
            Err(Error::InvalidInput(_))
        ));
        // digon is fine
        assert!(Digraph::from_arcs(2, [(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn semi_degrees() {
        assert_eq!(c3().semi_degree(0, Direction::Out).unwrap(), 1);
        assert_eq!(tt3().semi_degree(0, Direction::In).unwrap(), 0);
        assert_eq!(k2_digon().semi_degree(1, Direction::Out).unwrap(), 1);
        assert!(c3().semi_degree(7, Direction::Out).is_err());
        for d in [c3(), tt3(), t5_sink(), k2_digon()] {
            for v in 0..d.n() {
                assert_eq!(
                    d.semi_degree(v, Direction::Out).unwrap()
                        + d.semi_degree(v, Direction::In).unwrap(),
                    d.degree(v)
                );
            }
        }
    }

    #[test]
    fn semi_cuts_are_explicit_arc_sets() {
        let d = tt3();
        let out = d.semi_cut(0, Direction::Out).unwrap();
        assert_eq!(out.arcs, vec![(0, 1), (0, 2)]);
        let inn = d.semi_cut(2, Direction::In).unwrap();
        assert_eq!(inn.arcs, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn peripheral_vertices_annotated() {
        assert!(c3().peripheral_vertices().is_empty());
        assert_eq!(
            tt3().peripheral_vertices(),
            vec![(0, PeripheralKind::Source), (2, PeripheralKind::Sink)]
        );
        assert_eq!(
            t5_sink().peripheral_vertices(),
            vec![(4, PeripheralKind::Sink)]
        );
        let iso = Digraph::from_arcs(2, [] as [(usize, usize); 0]).unwrap();
        assert_eq!(
            iso.peripheral_vertices(),
            vec![(0, PeripheralKind::Isolated), (1, PeripheralKind::Isolated)]
        );
    }

    #[test]
    fn strong_components_examples() {
        assert_eq!(c3().strong_components().components, vec![vec![0, 1, 2]]);
        assert_eq!(
            tt3().strong_components().components,
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            t5_sink().strong_components().components,
            vec![vec![0, 1, 2, 3], vec![4]]
        );
    }

    #[test]
    fn strong_component_order_is_acyclic() {
        let mut rng = crate::gen::SplitMix64::new(11);
        for _ in 0..100 {
            let n = 1 + (rng.below(7) as usize);
            let d = crate::gen::random_digraph(n, 0.4, &mut rng);
            let scc = d.strong_components();
            for &(u, v) in d.arcs() {
                assert!(scc.component_of[u] <= scc.component_of[v]);
            }
            let mut all: Vec<usize> = scc.components.concat();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn semicomplete_components_fully_dominate() {
        let mut rng = crate::gen::SplitMix64::new(12);
        for _ in 0..100 {
            let n = 2 + (rng.below(6) as usize);
            let d = crate::gen::random_semicomplete(n, 0.3, &mut rng);
            let scc = d.strong_components();
            for i in 0..scc.len() {
                for j in (i + 1)..scc.len() {
                    let fwd = d.arcs_between(&scc.components[i], &scc.components[j]);
                    let back = d.arcs_between(&scc.components[j], &scc.components[i]);
                    assert!(back.is_empty());
                    assert_eq!(
                        fwd.len(),
                        scc.components[i].len() * scc.components[j].len()
                    );
                }
            }
        }
    }

    #[test]
    fn arcs_between_examples() {
        assert_eq!(tt3().arcs_between(&[0], &[1, 2]), vec![(0, 1), (0, 2)]);
        assert!(c3().arcs_between(&[0], &[0]).is_empty());
        assert_eq!(
            t5_sink().arcs_between(&[0, 1, 2, 3], &[4]),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn class_predicates() {
        assert!(k2_digon().is_semicomplete());
        assert!(!k2_digon().is_tournament());
        assert!(t5_sink().is_tournament());
        assert!(t5_sink().is_even());
        let c3_plus = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
        assert!(c3_plus.is_semicomplete());
        assert!(!c3_plus.is_even());
    }

    #[test]
    fn delete_vertex_examples() {
        let (d, map) = t5_sink().delete_vertex(4).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!(d, strong4());

        let (d, _) = k2_digon().delete_vertex(0).unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.arc_count(), 0);

        let (d, map) = tt3().delete_vertex(1).unwrap();
        assert_eq!(map, vec![0, 2]);
        assert_eq!(d.arcs(), &[(0, 1)]);
    }

    #[test]
    fn deletion_preserves_other_semi_degrees() {
        let mut rng = crate::gen::SplitMix64::new(13);
        for _ in 0..50 {
            let n = 2 + (rng.below(6) as usize);
            let d = crate::gen::random_digraph(n, 0.5, &mut rng);
            let v = rng.below(n as u64) as usize;
            let (d2, map) = d.delete_vertex(v).unwrap();
            for (new, &old) in map.iter().enumerate() {
                let lost_out = usize::from(d.has_arc(old, v));
                let lost_in = usize::from(d.has_arc(v, old));
                assert_eq!(d2.out_degree(new), d.out_degree(old) - lost_out);
                assert_eq!(d2.in_degree(new), d.in_degree(old) - lost_in);
            }
        }
    }
}
