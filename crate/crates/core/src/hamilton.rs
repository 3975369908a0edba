//! Constructive Hamiltonian machinery for semicomplete digraphs.

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};

/// A directed path given by its vertex sequence; consecutive vertices are
/// joined by arcs in the stated direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dipath {
    pub vertices: Vec<VertexId>,
}

impl Dipath {
    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Checks that every consecutive pair is an arc of `d` and no vertex
    /// repeats.
    pub fn validate(&self, d: &Digraph) -> bool {
        let mut seen = vec![false; d.n()];
        for &v in &self.vertices {
            if v >= d.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.arcs().all(|(u, v)| d.has_arc(u, v))
    }
}

/// A directed cycle given by its cyclic vertex sequence (length >= 2; a
/// digon is the 2-cycle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dicycle {
    pub vertices: Vec<VertexId>,
}

impl Dicycle {
    /// Number of vertices (and arcs); cycles are never shorter than 2.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn validate(&self, d: &Digraph) -> bool {
        if self.vertices.len() < 2 {
            return false;
        }
        let mut seen = vec![false; d.n()];
        for &v in &self.vertices {
            if v >= d.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.arcs().all(|(u, v)| d.has_arc(u, v))
    }

    /// Rotates the sequence so it starts at the smallest vertex.
    fn canonicalize(&mut self) {
        let pos = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .expect("cycles are nonempty");
        self.vertices.rotate_left(pos);
    }
}

fn require_semicomplete(d: &Digraph, what: &str) -> Result<()> {
    if !d.is_semicomplete() {
        return Err(Error::ContractViolation(format!(
            "{what} requires a semicomplete digraph"
        )));
    }
    Ok(())
}

/// Spanning dipath of a semicomplete digraph, by insertion: each vertex
/// goes to the front, the back, or the first consecutive pair (a, b) with
/// a -> v and v -> b. Vertices are inserted in ascending id order.
pub fn hamiltonian_dipath(d: &Digraph) -> Result<Dipath> {
    require_semicomplete(d, "hamiltonian dipath")?;
    if d.n() == 0 {
        return Err(Error::ContractViolation(
            "hamiltonian dipath requires at least one vertex".into(),
        ));
    }
    let mut path = vec![0];
    for v in 1..d.n() {
        if d.has_arc(v, path[0]) {
            path.insert(0, v);
            continue;
        }
        let mut placed = false;
        for j in 0..path.len() - 1 {
            if d.has_arc(path[j], v) && d.has_arc(v, path[j + 1]) {
                path.insert(j + 1, v);
                placed = true;
                break;
            }
        }
        if !placed {
            // No crossing point means the last vertex dominates v.
            debug_assert!(d.has_arc(*path.last().unwrap(), v));
            path.push(v);
        }
    }
    let p = Dipath { vertices: path };
    debug_assert!(p.validate(d));
    Ok(p)
}

/// Spanning dicycle of a strong nontrivial semicomplete digraph, by cycle
/// extension: start from a digon or 3-dicycle, then repeatedly either
/// insert an outside vertex between a consecutive dominating pair or
/// splice through an outside arc when the remainder splits into a part
/// dominated by the cycle and a part dominating it.
pub fn hamiltonian_dicycle(d: &Digraph) -> Result<Dicycle> {
    require_semicomplete(d, "hamiltonian dicycle")?;
    if d.n() < 2 {
        return Err(Error::ContractViolation(
            "hamiltonian dicycle requires at least two vertices".into(),
        ));
    }
    if !d.is_strong() {
        return Err(Error::ContractViolation(
            "hamiltonian dicycle requires a strong digraph".into(),
        ));
    }

    let mut cycle = initial_short_cycle(d)?;
    let mut outside: Vec<VertexId> = (0..d.n()).filter(|v| !cycle.contains(v)).collect();

    while !outside.is_empty() {
        let mut progressed = false;

        'insert: for (wi, &w) in outside.iter().enumerate() {
            for i in 0..cycle.len() {
                let a = cycle[i];
                let b = cycle[(i + 1) % cycle.len()];
                if d.has_arc(a, w) && d.has_arc(w, b) {
                    cycle.insert(i + 1, w);
                    outside.remove(wi);
                    progressed = true;
                    break 'insert;
                }
            }
        }
        if progressed {
            continue;
        }

        // No vertex is insertable, so every outside vertex either sends no
        // arc to the cycle or receives none from it. Strongness forces an
        // arc from the first group into the second; splice it in.
        let sends_none = |w: VertexId| cycle.iter().all(|&c| !d.has_arc(w, c));
        let receives_none = |w: VertexId| cycle.iter().all(|&c| !d.has_arc(c, w));
        let dominated: Vec<VertexId> = outside.iter().copied().filter(|&w| sends_none(w)).collect();
        let dominating: Vec<VertexId> = outside
            .iter()
            .copied()
            .filter(|&w| receives_none(w))
            .collect();
        let mut spliced = None;
        'splice: for &u in &dominated {
            for &v in &dominating {
                if d.has_arc(u, v) {
                    spliced = Some((u, v));
                    break 'splice;
                }
            }
        }
        let (u, v) = spliced.ok_or_else(|| {
            Error::ContractViolation("cycle extension stalled on a non-strong input".into())
        })?;
        cycle.insert(1, v);
        cycle.insert(1, u);
        outside.retain(|&w| w != u && w != v);
    }

    let mut c = Dicycle { vertices: cycle };
    c.canonicalize();
    debug_assert!(c.validate(d));
    Ok(c)
}

fn initial_short_cycle(d: &Digraph) -> Result<Vec<VertexId>> {
    for u in 0..d.n() {
        for v in (u + 1)..d.n() {
            if d.has_arc(u, v) && d.has_arc(v, u) {
                return Ok(vec![u, v]);
            }
        }
    }
    for u in 0..d.n() {
        for &v in d.out_neighbors(u) {
            for &w in d.out_neighbors(v) {
                if w != u && d.has_arc(w, u) {
                    return Ok(vec![u, v, w]);
                }
            }
        }
    }
    Err(Error::ContractViolation(
        "no short dicycle: input is not strong and nontrivial".into(),
    ))
}

/// Dipath from the initial strong component to the terminal one that
/// visits every vertex of every intermediate component. A skipped endpoint
/// component contributes exactly one vertex (its smallest); an unskipped
/// one contributes a Hamiltonian dipath of itself. Consecutive segments
/// link up because earlier components fully dominate later ones.
pub fn spanning_component_path(
    d: &Digraph,
    skip_initial: bool,
    skip_terminal: bool,
) -> Result<Dipath> {
    require_semicomplete(d, "spanning component path")?;
    let scc = d.strong_components();
    if scc.len() < 2 {
        return Err(Error::ContractViolation(
            "spanning component path requires distinct initial and terminal components".into(),
        ));
    }
    let last = scc.len() - 1;
    let mut vertices = Vec::with_capacity(d.n());
    for (i, comp) in scc.components.iter().enumerate() {
        let skip = (i == 0 && skip_initial) || (i == last && skip_terminal);
        if skip || comp.len() == 1 {
            vertices.push(comp[0]);
        } else {
            let (sub, old_of) = d.induced(comp);
            let inner = hamiltonian_dipath(&sub)?;
            vertices.extend(inner.vertices.iter().map(|&v| old_of[v]));
        }
    }
    let p = Dipath { vertices };
    debug_assert!(p.validate(d));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn dipath_examples() {
        assert_eq!(hamiltonian_dipath(&tt3()).unwrap().vertices, vec![0, 1, 2]);
        let p = hamiltonian_dipath(&c3()).unwrap();
        assert!(p.validate(&c3()) && p.vertices.len() == 3);
        let single = Digraph::empty(1);
        let p = hamiltonian_dipath(&single).unwrap();
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn dipath_rejects_non_semicomplete() {
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        assert!(matches!(
            hamiltonian_dipath(&d),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn dicycle_examples() {
        assert_eq!(hamiltonian_dicycle(&c3()).unwrap().vertices, vec![0, 1, 2]);
        assert_eq!(hamiltonian_dicycle(&k2_digon()).unwrap().vertices, vec![0, 1]);
        assert_eq!(
            hamiltonian_dicycle(&strong4()).unwrap().vertices,
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn dicycle_rejects_bad_inputs() {
        assert!(matches!(
            hamiltonian_dicycle(&tt3()),
            Err(Error::ContractViolation(_))
        ));
        assert!(matches!(
            hamiltonian_dicycle(&Digraph::empty(1)),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn component_path_examples() {
        assert_eq!(
            spanning_component_path(&tt3(), false, false).unwrap().vertices,
            vec![0, 1, 2]
        );
        let p = spanning_component_path(&t5_sink(), true, false).unwrap();
        assert_eq!(p.vertices, vec![0, 4]);

        // three components: {0}, a digon {1,2}, {3}
        let d = Digraph::from_arcs(
            4,
            [(0, 1), (0, 2), (0, 3), (1, 2), (2, 1), (1, 3), (2, 3)],
        )
        .unwrap();
        let p = spanning_component_path(&d, false, false).unwrap();
        assert!(p.vertices == vec![0, 1, 2, 3] || p.vertices == vec![0, 2, 1, 3]);
        assert!(p.validate(&d));
    }

    #[test]
    fn component_path_rejects_strong_inputs() {
        assert!(matches!(
            spanning_component_path(&c3(), true, true),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn component_path_restriction_is_hamiltonian_per_component() {
        let mut rng = crate::gen::SplitMix64::new(31);
        let mut checked = 0;
        while checked < 40 {
            let n = 3 + rng.below(5) as usize;
            let d = crate::gen::random_semicomplete(n, 0.25, &mut rng);
            let scc = d.strong_components();
            if scc.len() < 3 {
                continue;
            }
            checked += 1;
            let p = spanning_component_path(&d, true, true).unwrap();
            for comp in &scc.components[1..scc.len() - 1] {
                let segment: Vec<_> = p
                    .vertices
                    .iter()
                    .copied()
                    .filter(|v| comp.contains(v))
                    .collect();
                assert_eq!(segment.len(), comp.len());
                for w in segment.windows(2) {
                    assert!(d.has_arc(w[0], w[1]));
                }
            }
        }
    }

    #[test]
    fn random_semicomplete_constructions_verify() {
        let mut rng = crate::gen::SplitMix64::new(32);
        for _ in 0..200 {
            let n = 1 + rng.below(9) as usize;
            let d = crate::gen::random_semicomplete(n, 0.3, &mut rng);
            let p = hamiltonian_dipath(&d).unwrap();
            assert!(p.validate(&d));
            assert_eq!(p.vertices.len(), n);
            if n >= 2 && d.is_strong() {
                let c = hamiltonian_dicycle(&d).unwrap();
                assert!(c.validate(&d));
                assert_eq!(c.len(), n);
            }
        }
    }
}
