//! The weak-odd parity engine, valid for every digraph: the verifier, the
//! 2-colorability decision and witness, the defect formula and a
//! defect-optimal coloring, coloring extension after vertex reinsertion,
//! and a 3-coloring fallback.
//!
//! Everything reduces to parity joins in the partial split: a 2-coloring
//! corresponds to the edge set carrying color 1, and a vertex satisfies
//! the weak-odd condition exactly when each of its even-degree positive
//! halves has odd join degree while a merged vertex has even join degree.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::graph::tree_parity_join;
use crate::split::{build_bad_component_graph, partial_split, PartialSplit, SplitClass};

/// Total arc coloring with colors `1..=k`, indexed by the digraph's sorted
/// arc order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcColoring {
    k: u8,
    colors: Vec<u8>,
}

impl ArcColoring {
    pub fn new(k: u8, colors: Vec<u8>) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidInput(format!(
                "color {c} outside 1..={k}"
            )));
        }
        Ok(ArcColoring { k, colors })
    }

    /// The empty coloring of an arcless digraph.
    pub fn empty() -> Self {
        ArcColoring {
            k: 0,
            colors: Vec::new(),
        }
    }

    /// Every arc gets the same color.
    pub fn uniform(d: &Digraph, color: u8, k: u8) -> Self {
        ArcColoring {
            k,
            colors: vec![color; d.arc_count()],
        }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, arc_index: usize) -> u8 {
        self.colors[arc_index]
    }

    pub fn set_color(&mut self, arc_index: usize, color: u8) {
        debug_assert!(color >= 1 && color <= self.k);
        self.colors[arc_index] = color;
    }

    /// Reinterprets the coloring with a larger palette.
    pub fn widen(&self, k: u8) -> Self {
        debug_assert!(k >= self.k);
        ArcColoring {
            k,
            colors: self.colors.clone(),
        }
    }

    /// Exchanges colors 1 and 2.
    pub fn swap_first_two(&mut self) {
        for c in &mut self.colors {
            if *c == 1 {
                *c = 2;
            } else if *c == 2 {
                *c = 1;
            }
        }
    }
}

/// Assignment of a nonempty subset of {1, 2} to every arc, stored as a
/// bitmask: 1 = {1}, 2 = {2}, 3 = {1, 2}. An arc contributes one
/// occurrence to each color it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCovering {
    masks: Vec<u8>,
}

impl ArcCovering {
    pub fn new(masks: Vec<u8>) -> Result<Self> {
        if let Some(&m) = masks.iter().find(|&&m| m == 0 || m > 3) {
            return Err(Error::InvalidInput(format!(
                "covering mask {m} is not a nonempty subset of {{1,2}}"
            )));
        }
        Ok(ArcCovering { masks })
    }

    pub fn from_coloring(c: &ArcColoring) -> Result<Self> {
        if c.k > 2 {
            return Err(Error::InvalidInput(
                "coverings use colors 1 and 2 only".into(),
            ));
        }
        ArcCovering::new(c.colors.iter().map(|&c| 1u8 << (c - 1)).collect())
    }

    pub fn masks(&self) -> &[u8] {
        &self.masks
    }

    pub fn mask(&self, arc_index: usize) -> u8 {
        self.masks[arc_index]
    }

    pub fn set_mask(&mut self, arc_index: usize, mask: u8) {
        debug_assert!((1..=3).contains(&mask));
        self.masks[arc_index] = mask;
    }

    /// Number of arcs assigned both colors.
    pub fn doubly_colored(&self) -> usize {
        self.masks.iter().filter(|&&m| m == 3).count()
    }
}

/// Which vertices satisfy the weak-odd condition under a coloring or
/// covering. `witness_color[v]` is the smallest color serving both
/// nonempty semi-cuts of a satisfied vertex (`None` only when there are no
/// colors at all).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatisfactionReport {
    pub satisfied: Vec<VertexId>,
    pub failing: Vec<VertexId>,
    pub witness_color: Vec<Option<u8>>,
}

impl SatisfactionReport {
    pub fn all_satisfied(&self) -> bool {
        self.failing.is_empty()
    }
}

fn satisfaction(d: &Digraph, masks: &[u8], k: u8) -> SatisfactionReport {
    let n = d.n();
    let mut out_cnt = vec![[0usize; 4]; n];
    let mut in_cnt = vec![[0usize; 4]; n];
    for (idx, &(u, v)) in d.arcs().iter().enumerate() {
        let m = masks[idx];
        for c in 1..=3u8 {
            if m >> (c - 1) & 1 == 1 {
                out_cnt[u][c as usize] += 1;
                in_cnt[v][c as usize] += 1;
            }
        }
    }
    let mut satisfied = Vec::new();
    let mut failing = Vec::new();
    let mut witness_color = vec![None; n];
    for v in 0..n {
        let out_empty = d.out_degree(v) == 0;
        let in_empty = d.in_degree(v) == 0;
        let mut ok = false;
        if out_empty && in_empty {
            ok = true;
            if k >= 1 {
                witness_color[v] = Some(1);
            }
        } else {
            for c in 1..=k {
                let out_ok = out_empty || out_cnt[v][c as usize] % 2 == 1;
                let in_ok = in_empty || in_cnt[v][c as usize] % 2 == 1;
                if out_ok && in_ok {
                    ok = true;
                    witness_color[v] = Some(c);
                    break;
                }
            }
        }
        if ok {
            satisfied.push(v);
        } else {
            failing.push(v);
        }
    }
    SatisfactionReport {
        satisfied,
        failing,
        witness_color,
    }
}

/// Checks the weak-odd condition at every vertex: some color must appear
/// an odd number of times on each nonempty semi-cut, the same color for
/// both. Vertices with both semi-cuts empty are vacuously satisfied.
pub fn verify_coloring(d: &Digraph, c: &ArcColoring) -> Result<SatisfactionReport> {
    if c.colors.len() != d.arc_count() {
        return Err(Error::InvalidInput(format!(
            "coloring covers {} arcs, digraph has {}",
            c.colors.len(),
            d.arc_count()
        )));
    }
    let masks: Vec<u8> = c.colors.iter().map(|&c| 1u8 << (c - 1)).collect();
    Ok(satisfaction(d, &masks, c.k.max(1)))
}

/// Weak-odd check for a covering; a doubly-colored arc counts once toward
/// each color.
pub fn verify_covering(d: &Digraph, c: &ArcCovering) -> Result<SatisfactionReport> {
    if c.masks.len() != d.arc_count() {
        return Err(Error::InvalidInput(format!(
            "covering covers {} arcs, digraph has {}",
            c.masks.len(),
            d.arc_count()
        )));
    }
    Ok(satisfaction(d, &c.masks, 2))
}

/// True when `color` alone serves both nonempty semi-cuts of `v`.
pub fn color_satisfies(d: &Digraph, c: &ArcColoring, v: VertexId, color: u8) -> bool {
    let out = d
        .out_neighbors(v)
        .iter()
        .filter(|&&w| c.color(d.arc_index(v, w).unwrap()) == color)
        .count();
    let inn = d
        .in_neighbors(v)
        .iter()
        .filter(|&&u| c.color(d.arc_index(u, v).unwrap()) == color)
        .count();
    (d.out_degree(v) == 0 || out % 2 == 1) && (d.in_degree(v) == 0 || inn % 2 == 1)
}

/// A digraph is weak-odd 2-edge colorable exactly when no partial-split
/// component is bad.
pub fn decide_two_colorable(d: &Digraph) -> bool {
    partial_split(d).bad_components().is_empty()
}

/// Builds the color-1 arc set from per-component parity joins: each
/// nontrivial component needs its even-degree halves odd in the join, with
/// one odd-degree half added when the count is odd.
pub fn construct_two_coloring(d: &Digraph) -> Result<ArcColoring> {
    let ps = partial_split(d);
    let mut odd_sets = Vec::new();
    for k in 0..ps.components().len() {
        if !ps.is_nontrivial(k) {
            continue;
        }
        let mut set = ps.members_in_class(k, SplitClass::V2);
        if set.len() % 2 == 1 {
            let v3 = ps.members_in_class(k, SplitClass::V3);
            let pad = v3.first().ok_or_else(|| {
                Error::ContractViolation(
                    "digraph is not weak-odd 2-edge colorable".into(),
                )
            })?;
            set.push(*pad);
        }
        odd_sets.push((k, set));
    }
    Ok(coloring_from_joins(d, &ps, &odd_sets))
}

/// Turns per-component odd sets into a 2-coloring: arcs whose split edge
/// lands in the parity join get color 1, the rest color 2.
pub(crate) fn coloring_from_joins(
    d: &Digraph,
    ps: &PartialSplit,
    odd_sets: &[(usize, Vec<usize>)],
) -> ArcColoring {
    let mut colors = vec![2u8; d.arc_count()];
    for (component, set) in odd_sets {
        let mut want_odd = vec![false; ps.vertex_count()];
        for &s in set {
            want_odd[s] = true;
        }
        let members = &ps.components()[*component];
        let chosen = tree_parity_join(
            ps.vertex_count(),
            |s| ps.adjacency(s).iter().copied(),
            &want_odd,
            members,
        );
        for arc in chosen {
            colors[arc] = 1;
        }
    }
    ArcColoring { k: 2, colors }
}

/// The defect: number of bad components minus the maximum matching of the
/// bad-component graph.
pub fn defect(d: &Digraph) -> usize {
    let ps = partial_split(d);
    let bcg = build_bad_component_graph(d, &ps);
    bcg.component_ids.len() - bcg.matching.len()
}

/// A 2-coloring attaining the defect. Each matched pair of bad components
/// drops the two halves of one shared vertex (only that vertex fails);
/// each unmatched bad component drops its largest even-degree half.
pub fn defect_coloring(d: &Digraph) -> (ArcColoring, SatisfactionReport) {
    let ps = partial_split(d);
    let bcg = build_bad_component_graph(d, &ps);
    let expected = bcg.component_ids.len() - bcg.matching.len();

    let mut removals: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut matched = vec![false; bcg.component_ids.len()];
    for &(i, j) in &bcg.matching {
        matched[i] = true;
        matched[j] = true;
        let v = bcg.edge_witness[&(i.min(j), i.max(j))];
        removals
            .entry(ps.component_of(ps.out_id(v)))
            .or_default()
            .push(ps.out_id(v));
        removals
            .entry(ps.component_of(ps.in_id(v)))
            .or_default()
            .push(ps.in_id(v));
    }
    for (i, &k) in bcg.component_ids.iter().enumerate() {
        if !matched[i] {
            let largest = *ps
                .members_in_class(k, SplitClass::V2)
                .last()
                .expect("bad components have V2 members");
            removals.entry(k).or_default().push(largest);
        }
    }

    let mut odd_sets = Vec::new();
    for k in 0..ps.components().len() {
        if !ps.is_nontrivial(k) {
            continue;
        }
        let mut set = ps.members_in_class(k, SplitClass::V2);
        if let Some(drop) = removals.get(&k) {
            set.retain(|s| !drop.contains(s));
        }
        if set.len() % 2 == 1 {
            let v3 = ps.members_in_class(k, SplitClass::V3);
            let pad = v3
                .first()
                .expect("components left odd are not bad, so they have a V3 member");
            set.push(*pad);
        }
        odd_sets.push((k, set));
    }

    let coloring = coloring_from_joins(d, &ps, &odd_sets);
    let report = verify_coloring(d, &coloring).expect("constructed coloring is total");
    debug_assert_eq!(report.failing.len(), expected);
    (coloring, report)
}

/// Extends a weak-odd 2-edge coloring of `d` minus `v` to all of `d`.
/// Every vertex except possibly `v` stays satisfied: each arc between a
/// neighbor `u` and `v` takes the opposite of `u`'s satisfying color when
/// the corresponding semi-cut of `u` was nonempty before reinsertion, and
/// that color itself otherwise.
pub fn extend_coloring(d: &Digraph, v: VertexId, inner: &ArcColoring) -> Result<ArcColoring> {
    if v >= d.n() {
        return Err(Error::InvalidInput(format!(
            "vertex {v} out of range for n = {}",
            d.n()
        )));
    }
    if inner.k > 2 {
        return Err(Error::InvalidInput(
            "extension expects a 2-edge coloring".into(),
        ));
    }
    let (inner_d, old_of) = d.delete_vertex(v)?;
    let report = verify_coloring(&inner_d, &inner.widen(2))?;
    if !report.all_satisfied() {
        return Err(Error::ContractViolation(format!(
            "inner coloring fails at {:?} on the reduced digraph",
            report.failing
        )));
    }
    let mut new_of = vec![usize::MAX; d.n()];
    for (new, &old) in old_of.iter().enumerate() {
        new_of[old] = new;
    }
    let mut colors = vec![0u8; d.arc_count()];
    for (idx, &(a, b)) in d.arcs().iter().enumerate() {
        if a != v && b != v {
            let inner_idx = inner_d
                .arc_index(new_of[a], new_of[b])
                .expect("arc survives deletion");
            colors[idx] = inner.color(inner_idx);
            continue;
        }
        let u = if a == v { b } else { a };
        let nu = new_of[u];
        let i = report.witness_color[nu].unwrap_or(1);
        colors[idx] = if a == u {
            // arc u -> v
            if inner_d.out_degree(nu) > 0 {
                3 - i
            } else {
                i
            }
        } else {
            // arc v -> u
            if inner_d.in_degree(nu) > 0 {
                3 - i
            } else {
                i
            }
        };
    }
    ArcColoring::new(2, colors)
}

/// The weak-odd chromatic index: 0 without arcs, 1 when every semi-degree
/// is odd or zero, 2 when two colors suffice, 3 otherwise.
pub fn chromatic_index(d: &Digraph) -> u8 {
    if d.arc_count() == 0 {
        return 0;
    }
    let odd_or_zero = (0..d.n()).all(|v| {
        (d.out_degree(v) % 2 == 1 || d.out_degree(v) == 0)
            && (d.in_degree(v) % 2 == 1 || d.in_degree(v) == 0)
    });
    if odd_or_zero {
        return 1;
    }
    if decide_two_colorable(d) {
        return 2;
    }
    3
}

/// Index plus a verified witness coloring.
pub fn chromatic_index_witness(d: &Digraph) -> Result<(u8, ArcColoring)> {
    let index = chromatic_index(d);
    let witness = match index {
        0 => ArcColoring::empty(),
        1 => ArcColoring::uniform(d, 1, 1),
        2 => construct_two_coloring(d)?,
        _ => three_coloring(d)?,
    };
    debug_assert!(verify_coloring(d, &witness)?.all_satisfied());
    Ok((index, witness))
}

const EXHAUSTIVE_REPAIR_ARCS: usize = 14;

/// A weak-odd 3-edge coloring: start from a defect-optimal 2-coloring and
/// repair each failing vertex by recoloring one or two incident arcs to
/// color 3, verifying after every step; falls back to an exhaustive sweep
/// on small arc sets.
pub fn three_coloring(d: &Digraph) -> Result<ArcColoring> {
    let (two, report) = defect_coloring(d);
    let mut current = two.widen(3);
    let mut failing = report.failing;

    while let Some(&v) = failing.first() {
        match repair_vertex(d, &current, v, &failing) {
            Some((next, next_failing)) => {
                current = next;
                failing = next_failing;
            }
            None => break,
        }
    }
    if failing.is_empty() {
        return Ok(current);
    }

    if d.arc_count() <= EXHAUSTIVE_REPAIR_ARCS {
        if let Some(c) = exhaustive_coloring(d, 3) {
            return Ok(c);
        }
    }
    Err(Error::Unconstructed(format!(
        "local repair left {:?} failing and {} arcs exceed the exhaustive limit {}",
        failing,
        d.arc_count(),
        EXHAUSTIVE_REPAIR_ARCS
    )))
}

/// Tries single-arc then arc-pair recolorings to color 3 around `v`.
/// Accepts the first attempt that satisfies `v` without breaking any
/// currently satisfied vertex.
fn repair_vertex(
    d: &Digraph,
    current: &ArcColoring,
    v: VertexId,
    failing: &[VertexId],
) -> Option<(ArcColoring, Vec<VertexId>)> {
    let out_arcs: Vec<usize> = d
        .out_neighbors(v)
        .iter()
        .map(|&w| d.arc_index(v, w).unwrap())
        .collect();
    let in_arcs: Vec<usize> = d
        .in_neighbors(v)
        .iter()
        .map(|&u| d.arc_index(u, v).unwrap())
        .collect();

    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for &a in out_arcs.iter().chain(&in_arcs) {
        candidates.push(vec![a]);
    }
    for &a in &out_arcs {
        for &b in &in_arcs {
            candidates.push(vec![a, b]);
        }
    }

    for arcs in candidates {
        let mut attempt = current.clone();
        for &a in &arcs {
            attempt.set_color(a, 3);
        }
        let report = verify_coloring(d, &attempt).expect("total coloring");
        let fixed_v = !report.failing.contains(&v);
        let no_new = report.failing.iter().all(|f| failing.contains(f));
        if fixed_v && no_new && report.failing.len() < failing.len() {
            return Some((attempt, report.failing));
        }
    }
    None
}

/// Depth-first sweep over all k-colorings in lexicographic arc order,
/// pruning as soon as a vertex with all incident arcs colored fails.
fn exhaustive_coloring(d: &Digraph, k: u8) -> Option<ArcColoring> {
    let m = d.arc_count();
    let mut remaining: Vec<usize> = (0..d.n()).map(|v| d.degree(v)).collect();
    let mut colors = vec![0u8; m];

    fn vertex_ok(d: &Digraph, colors: &[u8], v: VertexId, k: u8) -> bool {
        for c in 1..=k {
            let out_ok = d.out_degree(v) == 0
                || d.out_neighbors(v)
                    .iter()
                    .filter(|&&w| colors[d.arc_index(v, w).unwrap()] == c)
                    .count()
                    % 2
                    == 1;
            let in_ok = d.in_degree(v) == 0
                || d.in_neighbors(v)
                    .iter()
                    .filter(|&&u| colors[d.arc_index(u, v).unwrap()] == c)
                    .count()
                    % 2
                    == 1;
            if out_ok && in_ok {
                return true;
            }
        }
        false
    }

    fn descend(
        d: &Digraph,
        idx: usize,
        colors: &mut Vec<u8>,
        remaining: &mut Vec<usize>,
        k: u8,
    ) -> bool {
        if idx == d.arc_count() {
            return true;
        }
        let (u, v) = d.arcs()[idx];
        for c in 1..=k {
            colors[idx] = c;
            remaining[u] -= 1;
            remaining[v] -= 1;
            let settled_ok = (remaining[u] > 0 || vertex_ok(d, colors, u, k))
                && (remaining[v] > 0 || vertex_ok(d, colors, v, k));
            if settled_ok && descend(d, idx + 1, colors, remaining, k) {
                return true;
            }
            remaining[u] += 1;
            remaining[v] += 1;
        }
        colors[idx] = 0;
        false
    }

    if descend(d, 0, &mut colors, &mut remaining, k) {
        Some(ArcColoring { k, colors })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{s_join, SJoinRequest};
    use crate::testutil::*;

    #[test]
    fn verify_examples() {
        let all1 = ArcColoring::uniform(&c3(), 1, 1);
        assert!(verify_coloring(&c3(), &all1).unwrap().all_satisfied());

        let all1 = ArcColoring::uniform(&tt3(), 1, 1);
        let report = verify_coloring(&tt3(), &all1).unwrap();
        assert!(report.failing.contains(&0));
        assert!(report.failing.contains(&2));
        assert!(!report.failing.contains(&1));

        let empty = Digraph::empty(3);
        let report = verify_coloring(&empty, &ArcColoring::empty()).unwrap();
        assert!(report.all_satisfied());
    }

    #[test]
    fn verify_rejects_partial_colorings() {
        let c = ArcColoring::new(2, vec![1, 2]).unwrap();
        assert!(matches!(
            verify_coloring(&c3(), &c),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn decide_examples() {
        assert!(decide_two_colorable(&tt3()));
        assert!(!decide_two_colorable(&t5_sink()));
        assert!(decide_two_colorable(&c3()));
    }

    #[test]
    fn construct_round_trip() {
        for d in [c3(), tt3(), k2_digon(), strong4()] {
            assert!(decide_two_colorable(&d));
            let c = construct_two_coloring(&d).unwrap();
            assert!(verify_coloring(&d, &c).unwrap().all_satisfied());
        }
        assert!(matches!(
            construct_two_coloring(&t5_sink()),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn construct_round_trip_random() {
        let mut rng = crate::gen::SplitMix64::new(51);
        for _ in 0..200 {
            let n = 1 + rng.below(7) as usize;
            let d = crate::gen::random_digraph(n, 0.4, &mut rng);
            if decide_two_colorable(&d) {
                let c = construct_two_coloring(&d).unwrap();
                assert!(verify_coloring(&d, &c).unwrap().all_satisfied());
            }
        }
    }

    #[test]
    fn decide_matches_brute_force() {
        let budget = crate::oracle::OracleBudget::default();
        let mut rng = crate::gen::SplitMix64::new(52);
        for _ in 0..150 {
            let n = 1 + rng.below(6) as usize;
            let d = crate::gen::random_digraph(n, 0.4, &mut rng);
            if d.arc_count() > budget.max_arcs_2color {
                continue;
            }
            let brute2 = crate::oracle::brute_chromatic_index(&d, &budget).unwrap() <= 2;
            assert_eq!(decide_two_colorable(&d), brute2);
            assert_eq!(decide_two_colorable(&d), defect(&d) == 0);
        }
    }

    #[test]
    fn defect_examples() {
        assert_eq!(defect(&tt3()), 0);
        assert_eq!(defect(&t5_sink()), 1);

        let base = t5_sink();
        let mut arcs: Vec<(usize, usize)> = base.arcs().to_vec();
        arcs.extend(base.arcs().iter().map(|&(u, v)| (u + 5, v + 5)));
        let two = Digraph::from_arcs(10, arcs).unwrap();
        assert_eq!(defect(&two), 2);
    }

    #[test]
    fn defect_matches_brute_force() {
        let budget = crate::oracle::OracleBudget::default();
        let mut rng = crate::gen::SplitMix64::new(53);
        for _ in 0..120 {
            let n = 1 + rng.below(6) as usize;
            let d = crate::gen::random_digraph(n, 0.35, &mut rng);
            if d.arc_count() > 12 {
                continue;
            }
            assert_eq!(defect(&d), crate::oracle::brute_defect(&d, &budget).unwrap());
        }
    }

    #[test]
    fn defect_coloring_attains_defect() {
        let (_, report) = defect_coloring(&t5_sink());
        assert_eq!(report.failing.len(), 1);

        let (_, report) = defect_coloring(&tt3());
        assert!(report.all_satisfied());

        let (c, report) = defect_coloring(&c3());
        assert!(report.all_satisfied());
        assert!(verify_coloring(&c3(), &c).unwrap().all_satisfied());

        let mut rng = crate::gen::SplitMix64::new(54);
        for _ in 0..150 {
            let n = 1 + rng.below(7) as usize;
            let d = crate::gen::random_digraph(n, 0.4, &mut rng);
            let (c, report) = defect_coloring(&d);
            assert_eq!(report.failing.len(), defect(&d));
            assert_eq!(verify_coloring(&d, &c).unwrap(), report);
        }
    }

    #[test]
    fn even_digraph_with_odd_peripheral_count_is_not_two_colorable() {
        // an even digraph with a single sink
        let d = t5_sink();
        assert!(d.is_even());
        assert_eq!(d.peripheral_vertices().len(), 1);
        assert!(!decide_two_colorable(&d));

        // three disjoint copies keep degrees even and peripheral count odd
        let mut arcs = Vec::new();
        for copy in 0..3 {
            arcs.extend(d.arcs().iter().map(|&(u, v)| (u + 5 * copy, v + 5 * copy)));
        }
        let three = Digraph::from_arcs(15, arcs).unwrap();
        assert!(three.is_even());
        assert_eq!(three.peripheral_vertices().len(), 3);
        assert!(!decide_two_colorable(&three));
    }

    #[test]
    fn extension_examples() {
        // digon: reinsert vertex 1 into the single-vertex remainder
        let d = k2_digon();
        let inner = ArcColoring::new(2, vec![]).unwrap();
        let c = extend_coloring(&d, 1, &inner).unwrap();
        let report = verify_coloring(&d, &c).unwrap();
        assert!(report.satisfied.contains(&0));

        // transitive triangle: reinsert the sink
        let d = tt3();
        let inner = ArcColoring::new(2, vec![1]).unwrap();
        let c = extend_coloring(&d, 2, &inner).unwrap();
        let report = verify_coloring(&d, &c).unwrap();
        assert!(report.satisfied.contains(&0) && report.satisfied.contains(&1));

        // reinsert the sink of the bad 5-tournament
        let d = t5_sink();
        let inner = construct_two_coloring(&strong4()).unwrap();
        let c = extend_coloring(&d, 4, &inner).unwrap();
        let report = verify_coloring(&d, &c).unwrap();
        for v in 0..4 {
            assert!(report.satisfied.contains(&v));
        }
    }

    #[test]
    fn extension_rejects_invalid_inner() {
        // deleting the pendant vertex 3 leaves the transitive triangle,
        // where the all-1 coloring fails at the source and the sink
        let d4 = Digraph::from_arcs(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let (red4, _) = d4.delete_vertex(3).unwrap();
        let failing_inner = ArcColoring::uniform(&red4, 1, 2);
        assert!(!verify_coloring(&red4, &failing_inner)
            .unwrap()
            .all_satisfied());
        assert!(matches!(
            extend_coloring(&d4, 3, &failing_inner),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn extension_fails_at_most_at_the_new_vertex() {
        let mut rng = crate::gen::SplitMix64::new(55);
        let mut checked = 0;
        while checked < 100 {
            let n = 2 + rng.below(6) as usize;
            let d = crate::gen::random_digraph(n, 0.4, &mut rng);
            let v = rng.below(n as u64) as usize;
            let (reduced, _) = d.delete_vertex(v).unwrap();
            if !decide_two_colorable(&reduced) {
                continue;
            }
            checked += 1;
            let inner = construct_two_coloring(&reduced).unwrap();
            let c = extend_coloring(&d, v, &inner).unwrap();
            let report = verify_coloring(&d, &c).unwrap();
            assert!(report.failing.iter().all(|&f| f == v));
        }
    }

    #[test]
    fn chromatic_index_examples() {
        assert_eq!(chromatic_index(&Digraph::empty(4)), 0);
        assert_eq!(chromatic_index(&c3()), 1);
        assert_eq!(chromatic_index(&t5_sink()), 3);
        for d in [Digraph::empty(2), c3(), tt3(), t5_sink(), k2_digon()] {
            let (index, witness) = chromatic_index_witness(&d).unwrap();
            assert_eq!(index, chromatic_index(&d));
            assert!(verify_coloring(&d, &witness).unwrap().all_satisfied());
        }
    }

    #[test]
    fn chromatic_index_witness_verifies_on_randoms() {
        let mut rng = crate::gen::SplitMix64::new(57);
        for _ in 0..150 {
            let n = 1 + rng.below(7) as usize;
            let d = crate::gen::random_digraph(n, 0.45, &mut rng);
            let (index, witness) = chromatic_index_witness(&d).unwrap();
            assert!(index <= 3);
            assert!(witness.k() <= index.max(1));
            assert!(verify_coloring(&d, &witness).unwrap().all_satisfied());
            if index == 1 {
                let all1 = ArcColoring::uniform(&d, 1, 1);
                assert!(verify_coloring(&d, &all1).unwrap().all_satisfied());
            }
        }
    }

    #[test]
    fn three_coloring_examples() {
        let c = three_coloring(&t5_sink()).unwrap();
        assert!(verify_coloring(&t5_sink(), &c).unwrap().all_satisfied());

        // a three-color blow-up of order 5
        let t4 = Digraph::from_arcs(4, [(0, 1), (0, 2), (1, 2), (3, 0), (1, 3), (2, 3)]).unwrap();
        let et = crate::classes::blow_up(&t4, &[1, 1, 1, 2]).unwrap();
        assert_eq!(chromatic_index(et.graph()), 3);
        let c = three_coloring(et.graph()).unwrap();
        assert!(verify_coloring(et.graph(), &c).unwrap().all_satisfied());

        let mut rng = crate::gen::SplitMix64::new(56);
        let mut found = 0;
        while found < 30 {
            let n = 4 + rng.below(3) as usize;
            let d = crate::gen::random_digraph(n, 0.5, &mut rng);
            if chromatic_index(&d) != 3 {
                continue;
            }
            found += 1;
            let c = three_coloring(&d).unwrap();
            assert!(verify_coloring(&d, &c).unwrap().all_satisfied());
        }
    }

    #[test]
    fn s_join_request_surface() {
        let g = crate::graph::Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let h = s_join(&SJoinRequest {
            graph: g,
            odd_set: vec![0, 2],
        })
        .unwrap();
        assert_eq!(h.len(), 2);
    }
}
