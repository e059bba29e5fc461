//! `hrad`: index reports, bound checks, family sweeps, f(x, y) grid minimization
//! and reduction traces, printed as JSON (optionally also CSV).
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a checked claim was
//! violated.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use harmonic_radius::bounds::{self, Claim, Status, ALL_CLAIMS};
use harmonic_radius::enumerate::{sweep, Family, FamilySpec, SweepOptions};
use harmonic_radius::format::{parse_edge_list, parse_graph6, to_graph6};
use harmonic_radius::indices::{harmonic_index, index_report};
use harmonic_radius::transforms::reduction_steps;
use harmonic_radius::Graph;
use serde_json::json;

pub mod report;

pub use report::{CommandResults, ReduceRow, ReportEnvelope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hrad", version, about = "Harmonic / Randić index versus radius: checks and exhaustive sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write a flat CSV to this path.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph as a graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Edge-list file: "n m" header, then m lines "u v".
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Harmonic index, Randić index, radius, cyclomatic number and class.
    Index {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Evaluate claims on one graph (default: every claim that applies).
    Check {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        claims: Option<String>,
    },
    /// Run claims over an exhaustively enumerated family.
    Sweep {
        /// connected | trees | unicyclic
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// One representative per isomorphism class (connected only).
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        claims: String,
        /// Permit n above the family's default cap.
        #[arg(long)]
        allow_oversize: bool,
        #[arg(long, default_value_t = 1000)]
        max_certificates: usize,
    },
    /// Exact minimization of f(x, y) over [2, xmax] x [2, ymax].
    Lemma2 {
        #[arg(long)]
        xmax: u64,
        #[arg(long)]
        ymax: u64,
    },
    /// Cycle-edge deletions down to a spanning unicyclic subgraph.
    Reduce {
        #[command(flatten)]
        graph: GraphInput,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn load_graph(input: &GraphInput, inputs: &mut BTreeMap<String, serde_json::Value>) -> Result<Graph, Failure> {
    match (&input.g6, &input.edges) {
        (Some(s), _) => {
            inputs.insert("g6".into(), json!(s));
            Ok(parse_graph6(s)?)
        }
        (None, Some(path)) => {
            inputs.insert("edges".into(), json!(path.display().to_string()));
            let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            Ok(parse_edge_list(&text)?)
        }
        (None, None) => Err(Failure("a graph input is required".into())),
    }
}

fn execute(cli: &Cli) -> Result<(ReportEnvelope, bool), Failure> {
    let mut inputs = BTreeMap::new();
    let (name, results, violated) = match &cli.command {
        Command::Index { graph } => {
            let g = load_graph(graph, &mut inputs)?;
            let report = index_report(&g)?;
            ("index", CommandResults::Index { graph6: to_graph6(&g), report }, false)
        }
        Command::Check { graph, claims } => {
            let g = load_graph(graph, &mut inputs)?;
            let facts = bounds::graph_facts(&g)?;
            let claims = match claims {
                Some(list) => {
                    inputs.insert("claims".into(), json!(list));
                    bounds::parse_claims(list)?
                }
                None => ALL_CLAIMS.into_iter().filter(|c| c.applies_to(&facts.class)).collect(),
            };
            let checks = claims
                .into_iter()
                .map(|c| bounds::evaluate(c, &facts, &g))
                .collect::<Result<Vec<_>, _>>()?;
            let violated = checks.iter().any(|c| c.status == Status::Violated);
            ("check", CommandResults::Check { graph6: to_graph6(&g), checks }, violated)
        }
        Command::Sweep { family, n, dedup, jobs, claims, allow_oversize, max_certificates } => {
            let family: Family = family.parse()?;
            let spec = FamilySpec::new(family, *n).dedup(*dedup).allow_oversize(*allow_oversize);
            let claim_list = bounds::parse_claims(claims)?;
            inputs.insert("family".into(), json!(family.name()));
            inputs.insert("n".into(), json!(n));
            inputs.insert("dedup".into(), json!(dedup));
            inputs.insert("jobs".into(), json!(jobs));
            inputs.insert("claims".into(), json!(claim_list.iter().map(Claim::name).collect::<Vec<_>>()));
            let options = SweepOptions { jobs: (*jobs).max(1), max_certificates: *max_certificates };
            let report = sweep(&spec, &claim_list, &options)?;
            let violated = report.total_violations() > 0;
            ("sweep", CommandResults::Sweep { report }, violated)
        }
        Command::Lemma2 { xmax, ymax } => {
            inputs.insert("xmax".into(), json!(xmax));
            inputs.insert("ymax".into(), json!(ymax));
            let result = bounds::lemma2_minimize(*xmax, *ymax)?;
            ("lemma2", CommandResults::Lemma2 { result }, false)
        }
        Command::Reduce { graph } => {
            let g = load_graph(graph, &mut inputs)?;
            let mut steps = vec![ReduceRow {
                step: 0,
                removed_edge: None,
                delta: None,
                harmonic: harmonic_index(&g),
                radius: g.radius()?,
                cyclomatic: g.cyclomatic_number()?,
                graph6: to_graph6(&g),
            }];
            for (i, s) in reduction_steps(&g)?.into_iter().enumerate() {
                steps.push(ReduceRow {
                    step: i + 1,
                    removed_edge: Some(s.deletion.edge),
                    delta: Some(s.deletion.delta),
                    harmonic: s.harmonic,
                    radius: s.radius,
                    cyclomatic: s.cyclomatic,
                    graph6: to_graph6(&s.graph),
                });
            }
            ("reduce", CommandResults::Reduce { graph6: to_graph6(&g), steps }, false)
        }
    };
    Ok((ReportEnvelope::new(name, inputs, results), violated))
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit code. JSON goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let (envelope, violated) = match execute(&cli) {
        Ok(done) => done,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    if let Some(path) = &cli.csv {
        if let Err(e) = envelope.write_csv(path) {
            let _ = writeln!(err, "error: writing {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let json = serde_json::to_string_pretty(&envelope).expect("reports serialize");
    if writeln!(out, "{json}").is_err() {
        return EXIT_USAGE;
    }
    if violated {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}
