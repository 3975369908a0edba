//! The acceptance sweep behind `weakodd selftest`: every classifier,
//! construction, and formula is cross-checked against the brute-force
//! oracle and the structural invariants, at desk scale.

use crate::classes::{
    blow_up, classify_extended_tournament, classify_semicomplete, classify_tournament, et_defect,
    et_defect_coloring, et_v2_is_even, semicomplete_defect_coloring, semicomplete_two_coloring,
    tournament_covering, SemicompleteClass,
};
use crate::digraph::Digraph;
use crate::gen::{
    enumerate_tournaments, random_connected_graph, random_digraph, random_graph,
    random_semicomplete, random_tournament, SplitMix64,
};
use crate::graph::{maximum_matching, s_join, SJoinRequest};
use crate::hamilton::{hamiltonian_dicycle, hamiltonian_dipath, spanning_component_path};
use crate::oracle::{
    brute_chromatic_index, brute_covering_exists, brute_defect, brute_maximum_matching,
    OracleBudget,
};
use crate::parity::{chromatic_index, decide_two_colorable, defect, verify_coloring, verify_covering};

/// Sweep parameters. Defaults match the full acceptance run.
#[derive(Debug, Clone)]
pub struct SelftestConfig {
    /// Exhaustive tournament sweeps cover all orders up to this bound.
    pub max_n: usize,
    /// Base sample count for the seeded random suites.
    pub samples: usize,
    pub budget: OracleBudget,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_n: 5,
            samples: 500,
            budget: OracleBudget::default(),
        }
    }
}

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "{}: {} — {}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.details
        )
    }
}

struct Recorder {
    checked: usize,
    failures: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(describe());
        }
    }

    fn outcome(self, name: &'static str, what: &str) -> CriterionOutcome {
        if self.failures.is_empty() {
            CriterionOutcome {
                name,
                passed: true,
                details: format!("{} {what} checked", self.checked),
            }
        } else {
            CriterionOutcome {
                name,
                passed: false,
                details: self.failures.join("; "),
            }
        }
    }
}

/// Runs all criteria in order.
pub fn run_all(cfg: &SelftestConfig) -> Vec<CriterionOutcome> {
    vec![
        criterion_tournament_classification(cfg),
        criterion_defect_formula(cfg),
        criterion_semicomplete_constructions(cfg),
        criterion_extended_tournaments(cfg),
        criterion_tournament_coverings(cfg),
        criterion_property_suites(cfg),
    ]
}

/// Every labeled tournament up to the bound: the closed-form classifier,
/// the parity engine, and the brute-force sweep agree exactly.
pub fn criterion_tournament_classification(cfg: &SelftestConfig) -> CriterionOutcome {
    let mut rec = Recorder::new();
    for n in 1..=cfg.max_n {
        for t in enumerate_tournaments(n).expect("sweep bound fits enumeration") {
            let classifier = classify_tournament(&t).expect("enumerated tournaments are valid");
            let engine = chromatic_index(&t);
            let oracle = brute_chromatic_index(&t, &cfg.budget)
                .expect("sweep instances fit the oracle budget");
            rec.check(classifier.index() == engine && engine == oracle, || {
                format!(
                    "index disagreement on {:?}: classifier {} engine {} oracle {}",
                    t.arcs(),
                    classifier.index(),
                    engine,
                    oracle
                )
            });
        }
    }
    rec.outcome("tournament-classification-sweep", "tournaments")
}

/// The matching formula for the defect agrees with the brute-force
/// minimum over all 2-colorings, on the tournament sweep and on seeded
/// arbitrary digraphs; three-color tournaments have defect exactly 1.
pub fn criterion_defect_formula(cfg: &SelftestConfig) -> CriterionOutcome {
    let mut rec = Recorder::new();
    for n in 1..=cfg.max_n {
        for t in enumerate_tournaments(n).expect("sweep bound fits enumeration") {
            let formula = defect(&t);
            let brute = brute_defect(&t, &cfg.budget).expect("sweep fits the budget");
            rec.check(formula == brute, || {
                format!("defect {} vs brute {} on {:?}", formula, brute, t.arcs())
            });
            if chromatic_index(&t) == 3 {
                rec.check(formula == 1, || {
                    format!("three-color tournament with defect {formula}: {:?}", t.arcs())
                });
            }
        }
    }
    let mut rng = SplitMix64::new(0xD5FEC7);
    let mut produced = 0;
    while produced < cfg.samples {
        let n = 1 + rng.below(6) as usize;
        let d = random_digraph(n, 0.35, &mut rng);
        if d.arc_count() > 12 {
            continue;
        }
        produced += 1;
        let formula = defect(&d);
        let brute = brute_defect(&d, &cfg.budget).expect("12 arcs fit the budget");
        rec.check(formula == brute, || {
            format!("defect {} vs brute {} on {:?}", formula, brute, d.arcs())
        });
    }
    rec.outcome("defect-formula", "instances")
}

/// Seeded semicomplete digraphs: the classifier matches the engine; good
/// instances get verified structural 2-colorings; bad instances get
/// defect colorings failing at exactly one vertex, prescribable to any
/// vertex.
pub fn criterion_semicomplete_constructions(cfg: &SelftestConfig) -> CriterionOutcome {
    let mut rec = Recorder::new();
    let mut rng = SplitMix64::new(0x5E31);
    for sample in 0..cfg.samples {
        let n = 1 + rng.below(6) as usize;
        let digon = if sample % 2 == 0 { 0.2 } else { 0.5 };
        let d = random_semicomplete(n, digon, &mut rng);
        let class = classify_semicomplete(&d).expect("generated input is semicomplete");
        rec.check(class.index() == chromatic_index(&d), || {
            format!(
                "classifier {} vs engine {} on {:?}",
                class.index(),
                chromatic_index(&d),
                d.arcs()
            )
        });
        match class {
            SemicompleteClass::Trivial => {}
            SemicompleteClass::Bad => {
                match semicomplete_defect_coloring(&d, None) {
                    Ok((_, report)) => rec.check(report.failing.len() == 1, || {
                        format!("bad instance failed at {:?}: {:?}", report.failing, d.arcs())
                    }),
                    Err(e) => rec.check(false, || format!("defect coloring error {e} on {:?}", d.arcs())),
                }
                for x in 0..d.n() {
                    match semicomplete_defect_coloring(&d, Some(x)) {
                        Ok((_, report)) => {
                            rec.check(report.failing.iter().all(|&f| f == x), || {
                                format!(
                                    "prescribed {x} but failing {:?} on {:?}",
                                    report.failing,
                                    d.arcs()
                                )
                            });
                        }
                        Err(e) => rec.check(false, || {
                            format!("prescribed coloring error {e} on {:?}", d.arcs())
                        }),
                    }
                }
            }
            _ => match semicomplete_two_coloring(&d) {
                Ok(c) => {
                    let ok = verify_coloring(&d, &c)
                        .map(|r| r.all_satisfied())
                        .unwrap_or(false);
                    rec.check(ok, || format!("2-coloring failed on {:?}", d.arcs()));
                }
                Err(e) => rec.check(false, || format!("2-coloring error {e} on {:?}", d.arcs())),
            },
        }
    }
    rec.outcome("semicomplete-constructions", "semicomplete digraphs")
}

/// Seeded blow-ups of tournaments: the classifier matches the engine, the
/// even-half-count invariant holds, all-odd blow-ups inherit the base's
/// index, bad extensions really admit no 2-coloring, the defect matches
/// the oracle, and prescribed colorings fail only where asked.
pub fn criterion_extended_tournaments(cfg: &SelftestConfig) -> CriterionOutcome {
    let mut rec = Recorder::new();
    let mut rng = SplitMix64::new(0xE7);
    let mut produced = 0;
    while produced < cfg.samples {
        let n = 1 + rng.below(6) as usize;
        let base = random_tournament(n, &mut rng);
        let sizes: Vec<usize> = (0..n).map(|_| 1 + rng.below(3) as usize).collect();
        let q: usize = sizes.iter().sum();
        if q > 10 {
            continue;
        }
        produced += 1;
        let et = blow_up(&base, &sizes).expect("generated blow-up is valid");
        let classification = classify_extended_tournament(&et);
        let engine = chromatic_index(et.graph());
        rec.check(classification.index == engine, || {
            format!(
                "classifier {} vs engine {} on base {:?} sizes {:?}",
                classification.index,
                engine,
                base.arcs(),
                sizes
            )
        });
        rec.check(et_v2_is_even(&et), || {
            format!("odd V2 count on base {:?} sizes {:?}", base.arcs(), sizes)
        });
        if et.all_blocks_odd() {
            let base_index = classify_tournament(&base).expect("base is a tournament").index();
            rec.check(engine == base_index, || {
                format!(
                    "all-odd blow-up index {} differs from base index {} ({:?}, {:?})",
                    engine,
                    base_index,
                    base.arcs(),
                    sizes
                )
            });
        }
        if classification.index == 3 && et.graph().arc_count() <= cfg.budget.max_arcs_2color {
            let brute = brute_chromatic_index(et.graph(), &cfg.budget)
                .expect("within budget");
            rec.check(brute == 3, || {
                format!(
                    "three-color extension admits a brute 2-coloring: {:?} {:?}",
                    base.arcs(),
                    sizes
                )
            });
        }
        rec.check(et_defect(&et) == defect(et.graph()), || {
            format!(
                "classifier defect {} vs engine {} on base {:?} sizes {:?}",
                et_defect(&et),
                defect(et.graph()),
                base.arcs(),
                sizes
            )
        });
        if et.graph().arc_count() <= cfg.budget.max_arcs_2color {
            let brute = brute_defect(et.graph(), &cfg.budget).expect("within budget");
            rec.check(et_defect(&et) == brute, || {
                format!(
                    "defect {} vs brute {} on base {:?} sizes {:?}",
                    et_defect(&et),
                    brute,
                    base.arcs(),
                    sizes
                )
            });
        }
        if classification.index == 3 {
            let x = rng.below(et.q() as u64) as usize;
            match et_defect_coloring(&et, x) {
                Ok((_, report)) => rec.check(report.failing.iter().all(|&f| f == x), || {
                    format!(
                        "prescribed {x} but failing {:?} on base {:?} sizes {:?}",
                        report.failing,
                        base.arcs(),
                        sizes
                    )
                }),
                Err(e) => rec.check(false, || {
                    format!(
                        "prescribed coloring error {e} on base {:?} sizes {:?}",
                        base.arcs(),
                        sizes
                    )
                }),
            }
        }
    }
    rec.outcome("extended-tournament-suite", "blow-ups")
}

/// Every three-color tournament in the sweep gets a verified covering
/// with at most one doubly-colored arc, confirmed to exist independently
/// by the exhaustive covering sweep; larger seeded three-color
/// tournaments get the construction check alone.
pub fn criterion_tournament_coverings(cfg: &SelftestConfig) -> CriterionOutcome {
    let mut rec = Recorder::new();
    for n in 1..=cfg.max_n {
        for t in enumerate_tournaments(n).expect("sweep bound fits enumeration") {
            if classify_tournament(&t).expect("valid tournament").index() != 3 {
                continue;
            }
            match tournament_covering(&t) {
                Ok(c) => {
                    let ok = verify_covering(&t, &c)
                        .map(|r| r.all_satisfied())
                        .unwrap_or(false);
                    rec.check(ok && c.doubly_colored() <= 1, || {
                        format!(
                            "covering invalid or {} doubly-colored arcs on {:?}",
                            c.doubly_colored(),
                            t.arcs()
                        )
                    });
                }
                Err(e) => rec.check(false, || format!("covering error {e} on {:?}", t.arcs())),
            }
            if t.arc_count() <= cfg.budget.max_arcs_3color {
                let search = brute_covering_exists(&t, &cfg.budget).expect("within budget");
                rec.check(search.exists, || {
                    format!("exhaustive sweep found no covering on {:?}", t.arcs())
                });
            }
        }
    }
    let seeded = (cfg.samples / 10).max(1);
    let mut rng = SplitMix64::new(0xC0FE);
    let mut produced = 0;
    let mut attempts = 0;
    while produced < seeded && attempts < 100_000 {
        attempts += 1;
        let t = random_tournament(7, &mut rng);
        if classify_tournament(&t).expect("valid tournament").index() != 3 {
            continue;
        }
        produced += 1;
        match tournament_covering(&t) {
            Ok(c) => {
                let ok = verify_covering(&t, &c)
                    .map(|r| r.all_satisfied())
                    .unwrap_or(false);
                rec.check(ok && c.doubly_colored() <= 1, || {
                    format!("covering failed on 7-tournament {:?}", t.arcs())
                });
            }
            Err(e) => rec.check(false, || format!("covering error {e} on {:?}", t.arcs())),
        }
    }
    rec.outcome("tournament-coverings", "three-color tournaments")
}

/// Structural property suites: parity joins have the requested odd set,
/// the matching implementation is exact, even digraphs with oddly many
/// peripheral vertices are never 2-colorable, and the Hamiltonian
/// constructions always verify.
pub fn criterion_property_suites(cfg: &SelftestConfig) -> CriterionOutcome {
    let mut rec = Recorder::new();
    let prop_samples = (cfg.samples * 2 / 5).max(1);

    // parity joins
    let mut rng = SplitMix64::new(0x50C1A1);
    for _ in 0..cfg.samples {
        let n = 2 + rng.below(11) as usize;
        let g = random_connected_graph(n, 0.3, &mut rng);
        let mut odd: Vec<usize> = (0..n).filter(|_| rng.below(2) == 1).collect();
        if odd.len() % 2 == 1 {
            odd.pop();
        }
        match s_join(&SJoinRequest {
            graph: g.clone(),
            odd_set: odd.clone(),
        }) {
            Ok(h) => {
                let mut deg = vec![0usize; g.n()];
                for &e in &h {
                    let (a, b) = g.edges()[e];
                    deg[a] += 1;
                    deg[b] += 1;
                }
                let ok = (0..g.n()).all(|v| (deg[v] % 2 == 1) == odd.contains(&v));
                rec.check(ok, || format!("parity join missed its odd set on {:?}", g.edges()));
            }
            Err(e) => rec.check(false, || format!("parity join error {e}")),
        }
    }

    // matching vs brute force
    let mut rng = SplitMix64::new(0x3A7C);
    let mut produced = 0;
    while produced < cfg.samples {
        let n = 1 + rng.below(10) as usize;
        let g = random_graph(n, 0.35, &mut rng);
        if g.edges().len() > 20 {
            continue;
        }
        produced += 1;
        let fast = maximum_matching(&g).len();
        let brute = brute_maximum_matching(&g).expect("edge count fits the budget");
        rec.check(fast == brute, || {
            format!("matching {} vs brute {} on {:?}", fast, brute, g.edges())
        });
    }

    // even digraphs with oddly many peripheral vertices are three-color
    let mut rng = SplitMix64::new(0x0BB5);
    let mut produced = 0;
    let mut attempts = 0;
    while produced < prop_samples && attempts < 200_000 {
        attempts += 1;
        let d = if produced % 2 == 0 {
            // blow up a three-color tournament with odd blocks
            let base = random_tournament(5, &mut rng);
            if classify_tournament(&base).expect("valid").index() != 3 {
                continue;
            }
            let sizes: Vec<usize> =
                (0..5).map(|_| 1 + 2 * rng.below(2) as usize).collect();
            blow_up(&base, &sizes).expect("valid blow-up").graph().clone()
        } else {
            // disjoint union of three such tournaments
            let mut arcs = Vec::new();
            let mut offset = 0;
            let mut found = 0;
            while found < 3 {
                let t = random_tournament(5, &mut rng);
                if classify_tournament(&t).expect("valid").index() != 3 {
                    continue;
                }
                arcs.extend(t.arcs().iter().map(|&(u, v)| (u + offset, v + offset)));
                offset += 5;
                found += 1;
            }
            Digraph::from_arcs(offset, arcs).expect("shifted arcs are valid")
        };
        produced += 1;
        let peripheral = d.peripheral_vertices().len();
        rec.check(d.is_even() && peripheral % 2 == 1, || {
            "constructed instance is not an even digraph with oddly many peripheral vertices"
                .to_string()
        });
        rec.check(!decide_two_colorable(&d), || {
            format!(
                "even digraph with {peripheral} peripheral vertices admits a 2-coloring: {:?}",
                d.arcs()
            )
        });
        rec.check(chromatic_index(&d) == 3, || {
            format!("expected index 3, got {}", chromatic_index(&d))
        });
    }

    // hamiltonian constructions
    let mut rng = SplitMix64::new(0x4A11);
    for _ in 0..prop_samples {
        let n = 1 + rng.below(9) as usize;
        let d = random_semicomplete(n, 0.3, &mut rng);
        match hamiltonian_dipath(&d) {
            Ok(p) => rec.check(p.validate(&d) && p.vertices.len() == n, || {
                format!("invalid spanning dipath on {:?}", d.arcs())
            }),
            Err(e) => rec.check(false, || format!("dipath error {e} on {:?}", d.arcs())),
        }
        let scc = d.strong_components();
        if scc.len() == 1 && n >= 2 {
            match hamiltonian_dicycle(&d) {
                Ok(c) => rec.check(c.validate(&d) && c.len() == n, || {
                    format!("invalid spanning dicycle on {:?}", d.arcs())
                }),
                Err(e) => rec.check(false, || format!("dicycle error {e} on {:?}", d.arcs())),
            }
        }
        if scc.len() >= 2 {
            for (skip_i, skip_t) in [(false, false), (true, false), (false, true), (true, true)] {
                match spanning_component_path(&d, skip_i, skip_t) {
                    Ok(p) => rec.check(p.validate(&d), || {
                        format!("invalid component path on {:?}", d.arcs())
                    }),
                    Err(e) => rec.check(false, || format!("component path error {e}")),
                }
            }
        }
    }

    rec.outcome("property-suites", "property checks")
}
