//! Seeded random and exhaustive instance generation.
//!
//! Randomness comes from SplitMix64 so instances reproduce bit-for-bit in
//! any language given the same seed. The generator is fully specified by
//! its constants:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! Bounded draws take the high 64 bits of `output * bound`; probabilities
//! compare `output >> 11` against `p * 2^53`.

use crate::classes::{blow_up, ExtendedTournament};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// SplitMix64, seeded directly with the 64-bit seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// True with probability `p`.
    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) < p * 9_007_199_254_740_992.0
    }
}

/// Which instance class to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenClass {
    Tournament,
    Semicomplete,
    ExtendedTournament,
    Arbitrary,
}

/// A reproducible generation request: identical specs yield identical
/// instances.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub class: GenClass,
    pub n: usize,
    pub seed: u64,
    /// Probability of a digon per pair (semicomplete only).
    pub digon_prob: f64,
    /// Probability of each ordered arc (arbitrary only).
    pub arc_prob: f64,
    /// Block sizes are drawn uniformly from `1..=max_block` unless `sizes`
    /// pins them (extended tournaments only).
    pub max_block: usize,
    pub sizes: Option<Vec<usize>>,
}

impl GenSpec {
    pub fn new(class: GenClass, n: usize, seed: u64) -> Self {
        GenSpec {
            class,
            n,
            seed,
            digon_prob: 0.3,
            arc_prob: 0.5,
            max_block: 3,
            sizes: None,
        }
    }
}

/// Output of `gen`: a digraph or an extended tournament.
#[derive(Debug, Clone)]
pub enum Generated {
    Digraph(Digraph),
    Et(ExtendedTournament),
}

/// Generates one instance of the requested class.
pub fn gen(spec: &GenSpec) -> Result<Generated> {
    if spec.n == 0 {
        return Err(Error::InvalidInput("generation needs n >= 1".into()));
    }
    let mut rng = SplitMix64::new(spec.seed);
    Ok(match spec.class {
        GenClass::Tournament => Generated::Digraph(random_tournament(spec.n, &mut rng)),
        GenClass::Semicomplete => {
            Generated::Digraph(random_semicomplete(spec.n, spec.digon_prob, &mut rng))
        }
        GenClass::Arbitrary => Generated::Digraph(random_digraph(spec.n, spec.arc_prob, &mut rng)),
        GenClass::ExtendedTournament => {
            let base = random_tournament(spec.n, &mut rng);
            let sizes = match &spec.sizes {
                Some(s) => {
                    if s.len() != spec.n || s.contains(&0) {
                        return Err(Error::InvalidInput(format!(
                            "need {} positive sizes",
                            spec.n
                        )));
                    }
                    s.clone()
                }
                None => (0..spec.n)
                    .map(|_| 1 + rng.below(spec.max_block as u64) as usize)
                    .collect(),
            };
            Generated::Et(blow_up(&base, &sizes)?)
        }
    })
}

/// Uniformly oriented complete graph: pair (i, j) with i < j points
/// forward on a zero draw.
pub fn random_tournament(n: usize, rng: &mut SplitMix64) -> Digraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.below(2) == 0 {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("orientation is valid")
}

/// Each pair becomes a digon with the given probability, otherwise a
/// uniformly oriented single arc.
pub fn random_semicomplete(n: usize, digon_prob: f64, rng: &mut SplitMix64) -> Digraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.chance(digon_prob) {
                arcs.push((i, j));
                arcs.push((j, i));
            } else if rng.below(2) == 0 {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("semicomplete arcs are valid")
}

/// Every ordered pair carries an arc independently with probability
/// `arc_prob`; digons arise naturally.
pub fn random_digraph(n: usize, arc_prob: f64, rng: &mut SplitMix64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.chance(arc_prob) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("random arcs are valid")
}

/// Random simple graph with each edge present independently.
pub fn random_graph(n: usize, edge_prob: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.chance(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random edges are valid")
}

/// Random connected simple graph: draws until connected, then returns.
pub fn random_connected_graph(n: usize, edge_prob: f64, rng: &mut SplitMix64) -> Graph {
    loop {
        let g = random_graph(n, edge_prob, rng);
        if g.is_connected() {
            return g;
        }
    }
}

const ENUM_MAX_N: usize = 6;

/// Streams every labeled tournament on `n` vertices exactly once, in
/// lexicographic orientation order: bit `k` of the counter orients the
/// k-th pair (i, j), i < j, forward on zero.
pub fn enumerate_tournaments(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > ENUM_MAX_N {
        return Err(Error::BudgetExceeded {
            required: n,
            allowed: ENUM_MAX_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let arcs = pairs.iter().enumerate().map(|(k, &(i, j))| {
            if mask >> k & 1 == 0 {
                (i, j)
            } else {
                (j, i)
            }
        });
        Digraph::from_arcs(n, arcs).expect("orientation is valid")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_reproducible() {
        let spec = GenSpec::new(GenClass::Tournament, 3, 77);
        let a = match gen(&spec).unwrap() {
            Generated::Digraph(d) => d,
            _ => unreachable!(),
        };
        let b = match gen(&spec).unwrap() {
            Generated::Digraph(d) => d,
            _ => unreachable!(),
        };
        assert_eq!(a, b);
    }

    #[test]
    fn generated_instances_match_their_class() {
        for seed in 0..30 {
            let t = match gen(&GenSpec::new(GenClass::Tournament, 5, seed)).unwrap() {
                Generated::Digraph(d) => d,
                _ => unreachable!(),
            };
            assert!(t.is_tournament());
            let s = match gen(&GenSpec::new(GenClass::Semicomplete, 5, seed)).unwrap() {
                Generated::Digraph(d) => d,
                _ => unreachable!(),
            };
            assert!(s.is_semicomplete());
            let et = match gen(&GenSpec::new(GenClass::ExtendedTournament, 4, seed)).unwrap() {
                Generated::Et(et) => et,
                _ => unreachable!(),
            };
            assert!(et.base().is_tournament());
        }
    }

    #[test]
    fn digon_probability_one_gives_the_full_digon_pair() {
        let mut spec = GenSpec::new(GenClass::Semicomplete, 2, 5);
        spec.digon_prob = 1.0;
        let d = match gen(&spec).unwrap() {
            Generated::Digraph(d) => d,
            _ => unreachable!(),
        };
        assert_eq!(d.arcs(), &[(0, 1), (1, 0)]);
    }

    #[test]
    fn forced_sizes_are_respected() {
        let mut spec = GenSpec::new(GenClass::ExtendedTournament, 4, 9);
        spec.sizes = Some(vec![1, 1, 1, 2]);
        let et = match gen(&spec).unwrap() {
            Generated::Et(et) => et,
            _ => unreachable!(),
        };
        assert_eq!(et.q(), 5);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tournaments(2).unwrap().count(), 2);
        let all3: Vec<Digraph> = enumerate_tournaments(3).unwrap().collect();
        assert_eq!(all3.len(), 8);
        let dicycles = all3
            .iter()
            .filter(|t| t.peripheral_vertices().is_empty())
            .count();
        assert_eq!(dicycles, 2);
        assert_eq!(enumerate_tournaments(4).unwrap().count(), 64);
        assert!(matches!(
            enumerate_tournaments(7),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let mut seen = std::collections::HashSet::new();
        for t in enumerate_tournaments(4).unwrap() {
            assert!(t.is_tournament());
            assert!(seen.insert(t.arcs().to_vec()));
        }
        assert_eq!(seen.len(), 64);
    }
}
