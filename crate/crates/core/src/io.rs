//! Text formats: arc-list documents, analysis reports, witness documents,
//! and DOT export. Instances are tiny, so everything is human-diffable
//! plain text with deterministic byte-for-byte output.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::classes::{
    blow_up, classify_extended_tournament, classify_semicomplete, classify_tournament, et_defect,
    ExtendedTournament,
};
use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::classes::semicomplete_two_coloring;
use crate::parity::{
    chromatic_index, construct_two_coloring, defect, three_coloring, verify_coloring,
    verify_covering, ArcColoring, ArcCovering, SatisfactionReport,
};

/// A parsed instance file: either a digraph or an extended tournament
/// (base tournament plus block sizes).
#[derive(Debug, Clone)]
pub enum Document {
    Digraph(Digraph),
    Et(ExtendedTournament),
}

impl Document {
    /// The digraph the analysis runs on: the blow-up for extended
    /// tournaments.
    pub fn effective_graph(&self) -> &Digraph {
        match self {
            Document::Digraph(d) => d,
            Document::Et(et) => et.graph(),
        }
    }
}

/// Parses an arc-list document. The header is either `digraph n=<N>` or
/// `et n=<N> sizes=<s1,...,sn>`; each following nonempty line holds one
/// arc `<u> <v>`. Errors carry the 1-based offending line.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut lines = text.lines().enumerate();
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "empty document".into(),
        })?;
    let header_no = header_line + 1;
    let tokens: Vec<&str> = header.split_whitespace().collect();

    let parse_n = |tok: &str, line: usize| -> Result<usize> {
        tok.strip_prefix("n=")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                line,
                message: format!("expected n=<count>, found {tok:?}"),
            })
    };

    enum Kind {
        Plain(usize),
        Et(usize, Vec<usize>),
    }
    let kind = match tokens.as_slice() {
        ["digraph", n_tok] => Kind::Plain(parse_n(n_tok, header_no)?),
        ["et", n_tok, sizes_tok] => {
            let n = parse_n(n_tok, header_no)?;
            let sizes: Vec<usize> = sizes_tok
                .strip_prefix("sizes=")
                .and_then(|s| s.split(',').map(|x| x.parse().ok()).collect::<Option<_>>())
                .ok_or_else(|| Error::Parse {
                    line: header_no,
                    message: format!("expected sizes=<s1,...,sn>, found {sizes_tok:?}"),
                })?;
            if sizes.len() != n || sizes.contains(&0) {
                return Err(Error::Parse {
                    line: header_no,
                    message: format!("need {n} positive sizes"),
                });
            }
            Kind::Et(n, sizes)
        }
        _ => {
            return Err(Error::Parse {
                line: header_no,
                message: format!("unrecognized header {header:?}"),
            })
        }
    };
    let n = match &kind {
        Kind::Plain(n) => *n,
        Kind::Et(n, _) => *n,
    };

    let mut arcs = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let arc = (|| -> Option<(usize, usize)> {
            let u = parts.next()?.parse().ok()?;
            let v = parts.next()?.parse().ok()?;
            if parts.next().is_some() {
                return None;
            }
            Some((u, v))
        })()
        .ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected an arc line `<u> <v>`, found {trimmed:?}"),
        })?;
        let (u, v) = arc;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: line_no,
                message: format!("arc ({u}, {v}) out of range for n = {n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                message: format!("loop arc ({u}, {v})"),
            });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate arc ({u}, {v})"),
            });
        }
        arcs.push((u, v));
    }

    match kind {
        Kind::Plain(n) => Ok(Document::Digraph(
            Digraph::from_arcs(n, arcs).expect("arc lines are pre-validated"),
        )),
        Kind::Et(n, sizes) => {
            let base = Digraph::from_arcs(n, arcs).expect("arc lines are pre-validated");
            if !base.is_tournament() {
                return Err(Error::Parse {
                    line: header_no,
                    message: "base arcs do not form a tournament".into(),
                });
            }
            Ok(Document::Et(blow_up(&base, &sizes)?))
        }
    }
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph n={}\n", d.n());
    for &(u, v) in d.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn serialize_et(et: &ExtendedTournament) -> String {
    let sizes: Vec<String> = et.sizes().iter().map(|s| s.to_string()).collect();
    let mut out = format!("et n={} sizes={}\n", et.base().n(), sizes.join(","));
    for &(u, v) in et.base().arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn serialize_document(doc: &Document) -> String {
    match doc {
        Document::Digraph(d) => serialize_digraph(d),
        Document::Et(et) => serialize_et(et),
    }
}

/// A witness attached to a report: a coloring or a covering.
#[derive(Debug, Clone)]
pub enum Witness {
    Coloring(ArcColoring),
    Covering(ArcCovering),
}

impl Witness {
    pub fn verify(&self, d: &Digraph) -> Result<SatisfactionReport> {
        match self {
            Witness::Coloring(c) => verify_coloring(d, c),
            Witness::Covering(c) => verify_covering(d, c),
        }
    }
}

/// Machine-readable analysis result. `failing` lists the vertices at
/// which the attached witness violates the weak-odd condition (empty for
/// a full witness).
#[derive(Debug, Clone)]
pub struct Report {
    pub class: String,
    pub n: usize,
    pub arcs: usize,
    pub index: u8,
    pub case: String,
    pub defect: usize,
    pub failing: Vec<VertexId>,
    pub provenance: String,
    pub witness: Option<Witness>,
    /// Extra key-value lines appended verbatim (oracle cross-checks).
    pub extra: Vec<(String, String)>,
}

/// Renders a report; arc lines follow the digraph's sorted arc order.
pub fn render_report(d: &Digraph, report: &Report) -> String {
    let mut out = String::from("weakodd-report v1\n");
    let _ = writeln!(out, "class = {}", report.class);
    let _ = writeln!(out, "n = {}", report.n);
    let _ = writeln!(out, "arcs = {}", report.arcs);
    let _ = writeln!(out, "index = {}", report.index);
    let _ = writeln!(out, "case = {}", report.case);
    let _ = writeln!(out, "defect = {}", report.defect);
    let failing: Vec<String> = report.failing.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "failing = {}", failing.join(" "));
    let _ = writeln!(out, "provenance = {}", report.provenance);
    for (key, value) in &report.extra {
        let _ = writeln!(out, "{key} = {value}");
    }
    match &report.witness {
        None => {
            let _ = writeln!(out, "witness = none");
        }
        Some(Witness::Coloring(c)) => {
            let _ = writeln!(out, "witness = coloring k={}", c.k());
            for (idx, &(u, v)) in d.arcs().iter().enumerate() {
                let _ = writeln!(out, "arc {u} {v} = {}", c.color(idx));
            }
        }
        Some(Witness::Covering(c)) => {
            let _ = writeln!(out, "witness = covering");
            for (idx, &(u, v)) in d.arcs().iter().enumerate() {
                let set = match c.mask(idx) {
                    1 => "1",
                    2 => "2",
                    _ => "1,2",
                };
                let _ = writeln!(out, "arc {u} {v} = {set}");
            }
        }
    }
    out
}

/// Witness data recovered from a stored report: per-arc color sets plus
/// the declared failing vertices, when present.
#[derive(Debug, Clone)]
pub struct StoredWitness {
    pub arcs: Vec<(VertexId, VertexId, u8)>,
    pub declared_failing: Option<Vec<VertexId>>,
    pub is_covering: bool,
}

/// Extracts the witness from a report document: `arc u v = <set>` lines
/// plus the optional `failing =` declaration.
pub fn parse_witness_document(text: &str) -> Result<StoredWitness> {
    let mut arcs = Vec::new();
    let mut declared_failing = None;
    let mut is_covering = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("witness = ") {
            is_covering = rest.trim() == "covering";
        } else if let Some(rest) = line.strip_prefix("failing =") {
            let vs: std::result::Result<Vec<usize>, _> =
                rest.split_whitespace().map(|t| t.parse()).collect();
            declared_failing = Some(vs.map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad failing list {rest:?}"),
            })?);
        } else if let Some(rest) = line.strip_prefix("arc ") {
            let (pair, set) = rest.split_once('=').ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected `arc u v = set`, found {line:?}"),
            })?;
            let ids: Vec<&str> = pair.split_whitespace().collect();
            let parse_id = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad vertex id {s:?}"),
                })
            };
            if ids.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two vertex ids, found {pair:?}"),
                });
            }
            let (u, v) = (parse_id(ids[0])?, parse_id(ids[1])?);
            let mask = match set.trim() {
                "1" => 1u8,
                "2" => 2,
                "3" => 4,
                "1,2" => 3,
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("bad color set {other:?}"),
                    })
                }
            };
            arcs.push((u, v, mask));
        }
    }
    if arcs.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "no arc lines found in witness document".into(),
        });
    }
    Ok(StoredWitness {
        arcs,
        declared_failing,
        is_covering,
    })
}

impl StoredWitness {
    /// Reassembles the witness against a digraph, checking the arc set
    /// matches exactly.
    pub fn bind(&self, d: &Digraph) -> Result<Witness> {
        if self.arcs.len() != d.arc_count() {
            return Err(Error::InvalidInput(format!(
                "witness covers {} arcs, digraph has {}",
                self.arcs.len(),
                d.arc_count()
            )));
        }
        let mut per_arc = vec![0u8; d.arc_count()];
        for &(u, v, mask) in &self.arcs {
            let idx = d.arc_index(u, v).ok_or_else(|| {
                Error::InvalidInput(format!("witness arc ({u}, {v}) is not in the digraph"))
            })?;
            if per_arc[idx] != 0 {
                return Err(Error::InvalidInput(format!(
                    "witness repeats arc ({u}, {v})"
                )));
            }
            per_arc[idx] = mask;
        }
        if self.is_covering {
            Ok(Witness::Covering(ArcCovering::new(per_arc)?))
        } else {
            let colors: Vec<u8> = per_arc
                .iter()
                .map(|&m| match m {
                    1 => Ok(1u8),
                    2 => Ok(2),
                    4 => Ok(3),
                    _ => Err(Error::InvalidInput(
                        "coloring witness carries a color set".into(),
                    )),
                })
                .collect::<Result<_>>()?;
            let k = colors.iter().copied().max().unwrap_or(1).max(1);
            Ok(Witness::Coloring(ArcColoring::new(k, colors)?))
        }
    }
}

/// Graphviz export: color 1 solid, color 2 dashed, color 3 dotted, and
/// doubly-colored arcs bold. Output is deterministic byte for byte.
pub fn export_dot(d: &Digraph, witness: &Witness) -> String {
    let mut out = String::from("digraph weakodd {\n  rankdir=LR;\n");
    for v in 0..d.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (idx, &(u, v)) in d.arcs().iter().enumerate() {
        let style = match witness {
            Witness::Coloring(c) => match c.color(idx) {
                1 => "solid",
                2 => "dashed",
                _ => "dotted",
            },
            Witness::Covering(c) => match c.mask(idx) {
                1 => "solid",
                2 => "dashed",
                _ => "bold",
            },
        };
        let _ = writeln!(out, "  {u} -> {v} [style={style}];");
    }
    out.push_str("}\n");
    out
}

fn generic_case_label(index: u8) -> &'static str {
    match index {
        0 => "no arcs",
        1 => "every semi-degree odd or zero",
        2 => "no bad component in the partial split",
        _ => "bad component in the partial split",
    }
}

/// Index witness for an arbitrary digraph via the generic engine.
fn engine_witness(d: &Digraph, index: u8) -> Result<Witness> {
    Ok(Witness::Coloring(match index {
        0 => ArcColoring::empty(),
        1 => ArcColoring::uniform(d, 1, 1),
        2 => construct_two_coloring(d)?,
        _ => three_coloring(d)?,
    }))
}

/// Full analysis of a digraph: class detection, classification with its
/// case label, defect, and an index witness. Closed-form classifiers
/// answer for tournaments and semicomplete digraphs; the parity engine
/// answers for everything else.
pub fn analyze_digraph(d: &Digraph) -> Result<Report> {
    let (class, case, index, provenance) = if d.is_tournament() {
        let c = classify_tournament(d)?;
        ("tournament", c.case_label().to_string(), c.index(), "classifier")
    } else if d.is_semicomplete() {
        let c = classify_semicomplete(d)?;
        (
            "semicomplete",
            c.case_label().to_string(),
            c.index(),
            "classifier",
        )
    } else {
        let index = chromatic_index(d);
        (
            "digraph",
            generic_case_label(index).to_string(),
            index,
            "engine",
        )
    };
    let witness = match (provenance, index) {
        ("classifier", 2) => Some(Witness::Coloring(semicomplete_two_coloring(d)?)),
        _ => match engine_witness(d, index) {
            Ok(w) => Some(w),
            Err(Error::Unconstructed(_)) => None,
            Err(e) => return Err(e),
        },
    };
    let failing = match &witness {
        Some(w) => w.verify(d)?.failing,
        None => Vec::new(),
    };
    Ok(Report {
        class: class.to_string(),
        n: d.n(),
        arcs: d.arc_count(),
        index,
        case,
        defect: defect(d),
        failing,
        provenance: provenance.to_string(),
        witness,
        extra: Vec::new(),
    })
}

/// Full analysis of an extended tournament via the blow-up classifier.
pub fn analyze_et(et: &ExtendedTournament) -> Result<Report> {
    let classification = classify_extended_tournament(et);
    let g = et.graph();
    let witness = match engine_witness(g, classification.index) {
        Ok(w) => Some(w),
        Err(Error::Unconstructed(_)) => None,
        Err(e) => return Err(e),
    };
    let failing = match &witness {
        Some(w) => w.verify(g)?.failing,
        None => Vec::new(),
    };
    Ok(Report {
        class: "extended-tournament".to_string(),
        n: g.n(),
        arcs: g.arc_count(),
        index: classification.index,
        case: classification.case.to_string(),
        defect: et_defect(et),
        failing,
        provenance: "classifier".to_string(),
        witness,
        extra: Vec::new(),
    })
}

pub fn analyze_document(doc: &Document) -> Result<Report> {
    match doc {
        Document::Digraph(d) => analyze_digraph(d),
        Document::Et(et) => analyze_et(et),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let doc = parse_document("digraph n=3\n0 1\n1 2\n2 0\n").unwrap();
        match doc {
            Document::Digraph(d) => assert_eq!(d, c3()),
            _ => panic!("expected a digraph"),
        }

        let doc = parse_document("et n=3 sizes=1,1,2\n0 1\n0 2\n1 2\n").unwrap();
        match doc {
            Document::Et(et) => {
                assert_eq!(et.base(), &tt3());
                assert_eq!(et.q(), 4);
            }
            _ => panic!("expected an extended tournament"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_document("digraph n=3\n0 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected a loop error, got {other:?}"),
        }
        match parse_document("digraph n=3\n0 1\n0 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a duplicate error, got {other:?}"),
        }
        match parse_document("digraph n=2\n0 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected a range error, got {other:?}"),
        }
        assert!(parse_document("et n=2 sizes=1\n0 1\n").is_err());
        assert!(parse_document("et n=2 sizes=1,1\n").is_err());
        assert!(parse_document("").is_err());
    }

    #[test]
    fn round_trip_fixed_instances() {
        for d in [c3(), tt3(), t5_sink(), Digraph::empty(4)] {
            let text = serialize_digraph(&d);
            match parse_document(&text).unwrap() {
                Document::Digraph(back) => assert_eq!(back, d),
                _ => panic!("expected a digraph"),
            }
        }
        let et = crate::classes::blow_up(&tt3(), &[1, 1, 2]).unwrap();
        let text = serialize_et(&et);
        match parse_document(&text).unwrap() {
            Document::Et(back) => assert_eq!(&back, &et),
            _ => panic!("expected an extended tournament"),
        }
    }

    proptest! {
        #[test]
        fn round_trip_random_digraphs(seed in 0u64..500) {
            let mut rng = crate::gen::SplitMix64::new(seed);
            let n = 1 + rng.below(7) as usize;
            let d = crate::gen::random_digraph(n, 0.4, &mut rng);
            let text = serialize_digraph(&d);
            match parse_document(&text).unwrap() {
                Document::Digraph(back) => prop_assert_eq!(back, d),
                _ => prop_assert!(false, "expected a digraph"),
            }
        }
    }

    #[test]
    fn report_witnesses_reverify() {
        let d = t5_sink();
        let report = analyze_digraph(&d).unwrap();
        assert_eq!(report.index, 3);
        assert_eq!(report.defect, 1);
        assert_eq!(report.provenance, "classifier");
        let text = render_report(&d, &report);
        let stored = parse_witness_document(&text).unwrap();
        let witness = stored.bind(&d).unwrap();
        let check = witness.verify(&d).unwrap();
        assert_eq!(check.failing, stored.declared_failing.unwrap());
    }

    #[test]
    fn covering_witness_round_trips() {
        let t = t5_sink();
        let covering = crate::classes::tournament_covering(&t).unwrap();
        let report = Report {
            class: "tournament".into(),
            n: t.n(),
            arcs: t.arc_count(),
            index: 3,
            case: "covering".into(),
            defect: 1,
            failing: vec![],
            provenance: "classifier".into(),
            witness: Some(Witness::Covering(covering.clone())),
            extra: vec![],
        };
        let text = render_report(&t, &report);
        let stored = parse_witness_document(&text).unwrap();
        assert!(stored.is_covering);
        match stored.bind(&t).unwrap() {
            Witness::Covering(back) => assert_eq!(back.masks(), covering.masks()),
            _ => panic!("expected a covering"),
        }
    }

    #[test]
    fn dot_export_examples() {
        let d = c3();
        let w = Witness::Coloring(ArcColoring::uniform(&d, 1, 1));
        let dot = export_dot(&d, &w);
        assert_eq!(dot.matches("style=solid").count(), 3);
        assert_eq!(export_dot(&d, &w), dot);

        let d = tt3();
        let c = crate::classes::semicomplete_two_coloring(&d).unwrap();
        let dot = export_dot(&d, &Witness::Coloring(c));
        assert_eq!(dot.matches("style=solid").count(), 2);
        assert_eq!(dot.matches("style=dashed").count(), 1);

        let t = t5_sink();
        let covering = crate::classes::tournament_covering(&t).unwrap();
        let dot = export_dot(&t, &Witness::Covering(covering));
        assert!(dot.matches("style=bold").count() <= 1);
    }

    #[test]
    fn analyze_detects_classes() {
        let report = analyze_digraph(&c3()).unwrap();
        assert_eq!(report.class, "tournament");
        assert_eq!(report.index, 1);

        let report = analyze_digraph(&k2_digon()).unwrap();
        assert_eq!(report.class, "semicomplete");

        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let report = analyze_digraph(&d).unwrap();
        assert_eq!(report.class, "digraph");
        assert_eq!(report.provenance, "engine");

        let et = crate::classes::blow_up(&tt3(), &[1, 1, 2]).unwrap();
        let report = analyze_et(&et).unwrap();
        assert_eq!(report.class, "extended-tournament");
        assert_eq!(report.index, 2);
        assert!(report.failing.is_empty());
    }

    #[test]
    fn analyze_handles_generic_three_color_digraphs() {
        // two disjoint copies of the bad 5-tournament: not semicomplete,
        // index 3, defect 2
        let base = t5_sink();
        let mut arcs = base.arcs().to_vec();
        arcs.extend(base.arcs().iter().map(|&(u, v)| (u + 5, v + 5)));
        let d = Digraph::from_arcs(10, arcs).unwrap();
        let report = analyze_digraph(&d).unwrap();
        assert_eq!(report.class, "digraph");
        assert_eq!(report.provenance, "engine");
        assert_eq!(report.index, 3);
        assert_eq!(report.defect, 2);
        let witness = report.witness.expect("three-coloring witness");
        assert!(witness.verify(&d).unwrap().all_satisfied());
    }
}
