//! `weakodd`: analyze weak-odd edge colorings of digraphs from arc-list
//! files, construct witnesses and coverings, generate instances, and run
//! the acceptance sweep.
//!
//! Exit codes: 0 success, 1 invalid input, 2 infeasible request,
//! 3 oracle budget refusal, 4 selftest failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use weakodd::io::{
    analyze_document, export_dot, parse_document, parse_witness_document, render_report,
    serialize_document, Document, Report, Witness,
};
use weakodd::selftest::{run_all, SelftestConfig};
use weakodd::{
    brute_chromatic_index, brute_defect, chromatic_index_witness, defect_coloring,
    tournament_covering, Error, GenClass, GenSpec, Generated, OracleBudget,
};

#[derive(Parser)]
#[command(
    name = "weakodd",
    version,
    about = "Weak-odd edge colorings, defects, and 2-edge coverings of digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: class, chromatic index, case, defect, witness
    Analyze {
        file: PathBuf,
        /// Cross-check the index and defect against the brute-force
        /// oracle (refuses over budget)
        #[arg(long)]
        oracle: bool,
        /// Write the witness as Graphviz DOT to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Construct a weak-odd k-edge coloring or explain why none exists
    Color {
        file: PathBuf,
        #[arg(short)]
        k: u8,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Defect value with a defect-optimal coloring and its failing set
    Defect {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Weak-odd 2-edge covering of a tournament
    Cover {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate an instance document on stdout
    Gen {
        #[arg(long)]
        class: InstanceClass,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Explicit block sizes for extended tournaments, e.g. 1,1,2
        #[arg(long)]
        sizes: Option<String>,
        /// Digon probability for semicomplete instances
        #[arg(long, default_value_t = 0.3)]
        digon_prob: f64,
        /// Arc probability for arbitrary instances
        #[arg(long, default_value_t = 0.5)]
        arc_prob: f64,
        /// Blocks are drawn from 1..=max-block when sizes are not given
        #[arg(long, default_value_t = 3)]
        max_block: usize,
    },
    /// Re-run the verifier on a stored witness document
    Verify { file: PathBuf, witness: PathBuf },
    /// Run the full acceptance sweep
    Selftest {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InstanceClass {
    Tournament,
    Semicomplete,
    #[value(alias = "et")]
    ExtendedTournament,
    Arbitrary,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn infeasible(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidInput(_) | Error::Parse { .. } => 1,
            Error::ContractViolation(_) | Error::Unconstructed(_) => 2,
            Error::BudgetExceeded { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn budget_from_env() -> OracleBudget {
    let mut budget = OracleBudget::default();
    if let Ok(value) = std::env::var("WEAKODD_ORACLE_MAX_ARCS") {
        if let Ok(max) = value.parse::<usize>() {
            budget.max_arcs_2color = max;
            budget.max_arcs_3color = max;
        }
    }
    budget
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_document(&text)?)
}

fn emit(
    doc: &Document,
    report: &Report,
    dot: &Option<PathBuf>,
) -> Result<(), Failure> {
    let graph = doc.effective_graph();
    print!("{}", render_report(graph, report));
    if let Some(path) = dot {
        match &report.witness {
            Some(w) => std::fs::write(path, export_dot(graph, w))?,
            None => {
                return Err(Failure::infeasible(
                    "no witness available for DOT export",
                ))
            }
        }
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Analyze { file, oracle, dot } => {
            let doc = load(&file)?;
            let mut report = analyze_document(&doc)?;
            if oracle {
                let budget = budget_from_env();
                let g = doc.effective_graph();
                let oracle_index = brute_chromatic_index(g, &budget)?;
                let oracle_defect = brute_defect(g, &budget)?;
                report
                    .extra
                    .push(("oracle-index".into(), oracle_index.to_string()));
                report
                    .extra
                    .push(("oracle-defect".into(), oracle_defect.to_string()));
                if oracle_index != report.index || oracle_defect != report.defect {
                    emit(&doc, &report, &dot)?;
                    return Err(Failure::infeasible(
                        "oracle disagrees with the reported analysis",
                    ));
                }
            }
            emit(&doc, &report, &dot)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Color { file, k, dot } => {
            if !(1..=3).contains(&k) {
                return Err(Failure {
                    code: 1,
                    message: format!("k must be 1, 2, or 3, got {k}"),
                });
            }
            let doc = load(&file)?;
            let mut report = analyze_document(&doc)?;
            if k < report.index {
                return Err(Failure::infeasible(format!(
                    "no weak-odd {k}-edge coloring exists: the index is {} ({})",
                    report.index, report.case
                )));
            }
            let witness = match report.witness.take() {
                Some(Witness::Coloring(c)) => c.widen(k.max(c.k())),
                _ => {
                    let (_, c) = chromatic_index_witness(doc.effective_graph())?;
                    c.widen(k.max(c.k()))
                }
            };
            report.witness = Some(Witness::Coloring(witness));
            report.failing = Vec::new();
            emit(&doc, &report, &dot)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Defect { file, dot } => {
            let doc = load(&file)?;
            let g = doc.effective_graph();
            let (coloring, satisfaction) = defect_coloring(g);
            let mut report = analyze_document(&doc)?;
            report.failing = satisfaction.failing.clone();
            report.witness = Some(Witness::Coloring(coloring));
            report
                .extra
                .push(("witness-role".into(), "defect-optimal 2-coloring".into()));
            emit(&doc, &report, &dot)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover { file, dot } => {
            let doc = load(&file)?;
            let g = doc.effective_graph();
            if !g.is_tournament() {
                return Err(Failure::infeasible(
                    "weak-odd 2-edge coverings are implemented for tournaments only; \
                     whether every digraph admits one is an open question",
                ));
            }
            let covering = tournament_covering(g)?;
            let mut report = analyze_document(&doc)?;
            report.failing = Vec::new();
            report.extra.push((
                "doubly-colored".into(),
                covering.doubly_colored().to_string(),
            ));
            report.witness = Some(Witness::Covering(covering));
            emit(&doc, &report, &dot)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            class,
            n,
            seed,
            sizes,
            digon_prob,
            arc_prob,
            max_block,
        } => {
            let class = match class {
                InstanceClass::Tournament => GenClass::Tournament,
                InstanceClass::Semicomplete => GenClass::Semicomplete,
                InstanceClass::ExtendedTournament => GenClass::ExtendedTournament,
                InstanceClass::Arbitrary => GenClass::Arbitrary,
            };
            let mut spec = GenSpec::new(class, n, seed);
            spec.digon_prob = digon_prob;
            spec.arc_prob = arc_prob;
            spec.max_block = max_block;
            if let Some(sizes) = sizes {
                let parsed: Option<Vec<usize>> =
                    sizes.split(',').map(|s| s.trim().parse().ok()).collect();
                spec.sizes = Some(parsed.ok_or(Failure {
                    code: 1,
                    message: format!("bad sizes list {sizes:?}"),
                })?);
            }
            let doc = match weakodd::gen::gen(&spec)? {
                Generated::Digraph(d) => Document::Digraph(d),
                Generated::Et(et) => Document::Et(et),
            };
            print!("{}", serialize_document(&doc));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, witness } => {
            let doc = load(&file)?;
            let g = doc.effective_graph();
            let text = std::fs::read_to_string(&witness)?;
            let stored = parse_witness_document(&text)?;
            let declared = stored.declared_failing.clone().unwrap_or_default();
            let bound = stored.bind(g)?;
            let satisfaction = bound.verify(g)?;
            let failing: Vec<String> =
                satisfaction.failing.iter().map(|v| v.to_string()).collect();
            println!("failing = {}", failing.join(" "));
            if satisfaction.failing == declared {
                println!("witness = confirmed");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("witness = mismatch (declared failing = {declared:?})");
                Err(Failure::infeasible(
                    "stored witness does not verify as declared",
                ))
            }
        }
        Command::Selftest { max_n, samples } => {
            let cfg = SelftestConfig {
                max_n,
                samples,
                budget: budget_from_env(),
            };
            let mut all_passed = true;
            for outcome in run_all(&cfg) {
                println!("{}", outcome.line());
                all_passed &= outcome.passed;
            }
            if all_passed {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Failure {
                    code: 4,
                    message: "selftest failed".into(),
                })
            }
        }
    }
}
