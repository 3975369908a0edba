//! Brute-force ground truth at desk scale. The sweeps here check the
//! weak-odd condition directly from its definition and never consult the
//! engine, so they stay an independent route for every decision.

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::{ArcColoring, ArcCovering};

/// Limits for the exponential sweeps. Exceeding a limit is an explicit
/// refusal, never a silent truncation.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Maximum arc count for `2^m` coloring sweeps.
    pub max_arcs_2color: usize,
    /// Maximum arc count for `3^m` covering sweeps.
    pub max_arcs_3color: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_arcs_2color: 14,
            max_arcs_3color: 14,
        }
    }
}

fn check_budget(arcs: usize, allowed: usize) -> Result<()> {
    if arcs > allowed {
        return Err(Error::BudgetExceeded {
            required: arcs,
            allowed,
        });
    }
    Ok(())
}

/// Shared sweep state: per-vertex per-color semi-cut counts plus how many
/// incident arcs are still uncolored. A vertex is checked the moment its
/// last incident arc receives a mask.
struct Sweep<'a> {
    d: &'a Digraph,
    out_cnt: Vec<[usize; 3]>,
    in_cnt: Vec<[usize; 3]>,
    remaining: Vec<usize>,
}

impl<'a> Sweep<'a> {
    fn new(d: &'a Digraph) -> Self {
        Sweep {
            d,
            out_cnt: vec![[0; 3]; d.n()],
            in_cnt: vec![[0; 3]; d.n()],
            remaining: (0..d.n()).map(|v| d.degree(v)).collect(),
        }
    }

    fn apply(&mut self, arc: usize, mask: u8) {
        let (u, v) = self.d.arcs()[arc];
        for c in 0..2 {
            if mask >> c & 1 == 1 {
                self.out_cnt[u][c] += 1;
                self.in_cnt[v][c] += 1;
            }
        }
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
    }

    fn undo(&mut self, arc: usize, mask: u8) {
        let (u, v) = self.d.arcs()[arc];
        for c in 0..2 {
            if mask >> c & 1 == 1 {
                self.out_cnt[u][c] -= 1;
                self.in_cnt[v][c] -= 1;
            }
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }

    fn vertex_satisfied(&self, v: VertexId) -> bool {
        let out_empty = self.d.out_degree(v) == 0;
        let in_empty = self.d.in_degree(v) == 0;
        if out_empty && in_empty {
            return true;
        }
        (0..2).any(|c| {
            (out_empty || self.out_cnt[v][c] % 2 == 1)
                && (in_empty || self.in_cnt[v][c] % 2 == 1)
        })
    }

    /// Vertices among {u, v} whose incident arcs are now all colored and
    /// which fail the weak-odd condition.
    fn settled_failures(&self, arc: usize) -> usize {
        let (u, v) = self.d.arcs()[arc];
        let mut fails = 0;
        if self.remaining[u] == 0 && !self.vertex_satisfied(u) {
            fails += 1;
        }
        if v != u && self.remaining[v] == 0 && !self.vertex_satisfied(v) {
            fails += 1;
        }
        fails
    }
}

/// Minimum k in {0, 1, 2, 3} admitting a weak-odd k-edge coloring. The
/// 3 answer needs no sweep: three colors always suffice, which the engine
/// re-derives constructively elsewhere.
pub fn brute_chromatic_index(d: &Digraph, budget: &OracleBudget) -> Result<u8> {
    if d.arc_count() == 0 {
        return Ok(0);
    }
    if uniform_coloring_valid(d) {
        return Ok(1);
    }
    check_budget(d.arc_count(), budget.max_arcs_2color)?;
    if exists_valid_two_coloring(d) {
        return Ok(2);
    }
    Ok(3)
}

fn uniform_coloring_valid(d: &Digraph) -> bool {
    (0..d.n()).all(|v| {
        (d.out_degree(v) == 0 || d.out_degree(v) % 2 == 1)
            && (d.in_degree(v) == 0 || d.in_degree(v) % 2 == 1)
    })
}

fn exists_valid_two_coloring(d: &Digraph) -> bool {
    fn descend(sweep: &mut Sweep, arc: usize) -> bool {
        if arc == sweep.d.arc_count() {
            return true;
        }
        for mask in [1u8, 2] {
            sweep.apply(arc, mask);
            if sweep.settled_failures(arc) == 0 && descend(sweep, arc + 1) {
                sweep.undo(arc, mask);
                return true;
            }
            sweep.undo(arc, mask);
        }
        false
    }
    let mut sweep = Sweep::new(d);
    descend(&mut sweep, 0)
}

/// Minimum number of failing vertices over all 2-edge colorings.
pub fn brute_defect(d: &Digraph, budget: &OracleBudget) -> Result<usize> {
    check_budget(d.arc_count(), budget.max_arcs_2color)?;

    fn descend(sweep: &mut Sweep, arc: usize, fails: usize, best: &mut usize) {
        if fails >= *best {
            return;
        }
        if arc == sweep.d.arc_count() {
            *best = fails;
            return;
        }
        for mask in [1u8, 2] {
            sweep.apply(arc, mask);
            let extra = sweep.settled_failures(arc);
            descend(sweep, arc + 1, fails + extra, best);
            sweep.undo(arc, mask);
        }
    }

    let mut sweep = Sweep::new(d);
    let mut best = d.n() + 1;
    descend(&mut sweep, 0, 0, &mut best);
    Ok(best)
}

/// Result of the exhaustive covering sweep.
#[derive(Debug, Clone)]
pub struct CoveringSearch {
    pub exists: bool,
    /// A covering attaining the minimum number of doubly-colored arcs.
    pub witness: Option<ArcCovering>,
    /// Minimum number of arcs assigned both colors among valid coverings.
    pub min_doubly_colored: Option<usize>,
}

/// Sweeps all `3^m` weak-odd 2-edge coverings, reporting existence and the
/// minimum number of doubly-colored arcs.
pub fn brute_covering_exists(d: &Digraph, budget: &OracleBudget) -> Result<CoveringSearch> {
    check_budget(d.arc_count(), budget.max_arcs_3color)?;

    struct Best {
        doubly: usize,
        masks: Vec<u8>,
    }

    fn descend(
        sweep: &mut Sweep,
        arc: usize,
        masks: &mut Vec<u8>,
        doubly: usize,
        best: &mut Option<Best>,
    ) {
        // Doubly counts only grow along a branch, so equal-or-worse
        // prefixes cannot improve on the incumbent.
        if let Some(b) = best.as_ref() {
            if doubly >= b.doubly {
                return;
            }
        }
        if arc == sweep.d.arc_count() {
            *best = Some(Best {
                doubly,
                masks: masks.clone(),
            });
            return;
        }
        for mask in [1u8, 2, 3] {
            let extra_doubly = usize::from(mask == 3);
            masks.push(mask);
            sweep.apply(arc, mask);
            if sweep.settled_failures(arc) == 0 {
                descend(sweep, arc + 1, masks, doubly + extra_doubly, best);
            }
            sweep.undo(arc, mask);
            masks.pop();
        }
    }

    let mut sweep = Sweep::new(d);
    let mut best: Option<Best> = None;
    descend(&mut sweep, 0, &mut Vec::new(), 0, &mut best);
    Ok(match best {
        Some(b) => CoveringSearch {
            exists: true,
            witness: Some(ArcCovering::new(b.masks).expect("masks are valid")),
            min_doubly_colored: Some(b.doubly),
        },
        None => CoveringSearch {
            exists: false,
            witness: None,
            min_doubly_colored: None,
        },
    })
}

const MATCHING_EDGE_BUDGET: usize = 20;

/// Exact maximum matching size by branch and bound over the edge list.
pub fn brute_maximum_matching(g: &Graph) -> Result<usize> {
    if g.edges().len() > MATCHING_EDGE_BUDGET {
        return Err(Error::BudgetExceeded {
            required: g.edges().len(),
            allowed: MATCHING_EDGE_BUDGET,
        });
    }

    fn descend(
        edges: &[(usize, usize)],
        idx: usize,
        used: &mut Vec<bool>,
        count: usize,
        free: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(count);
        if idx == edges.len() {
            return;
        }
        let bound = count + (edges.len() - idx).min(free / 2);
        if bound <= *best {
            return;
        }
        let (a, b) = edges[idx];
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            descend(edges, idx + 1, used, count + 1, free - 2, best);
            used[a] = false;
            used[b] = false;
        }
        descend(edges, idx + 1, used, count, free, best);
    }

    let mut best = 0;
    let mut used = vec![false; g.n()];
    descend(g.edges(), 0, &mut used, 0, g.n(), &mut best);
    Ok(best)
}

/// Exhaustively checks a coloring witness against the sweep machinery;
/// used by tests to cross-validate the verifier.
pub fn coloring_valid(d: &Digraph, c: &ArcColoring) -> bool {
    crate::parity::verify_coloring(d, c).is_ok_and(|r| r.all_satisfied())
}
