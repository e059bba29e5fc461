use std::collections::BTreeMap;
use std::path::Path;

use harmonic_radius::bounds::{BoundCheckResult, Lemma2Minimum};
use harmonic_radius::enumerate::{SweepReport, Witness};
use harmonic_radius::indices::IndexReport;
use harmonic_radius::Rational;
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Top-level JSON document every subcommand prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub results: CommandResults,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommandResults {
    Index { graph6: String, report: IndexReport },
    Check { graph6: String, checks: Vec<BoundCheckResult> },
    Sweep { report: SweepReport },
    Lemma2 { result: Lemma2Minimum },
    Reduce { graph6: String, steps: Vec<ReduceRow> },
}

/// One row of a reduction trace; step 0 is the input graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReduceRow {
    pub step: usize,
    pub removed_edge: Option<(usize, usize)>,
    /// `H(before) - H(after)` for the removed edge.
    pub delta: Option<Rational>,
    pub harmonic: Rational,
    pub radius: usize,
    pub cyclomatic: usize,
    pub graph6: String,
}

impl ReportEnvelope {
    pub fn new(command: &str, inputs: BTreeMap<String, serde_json::Value>, results: CommandResults) -> Self {
        ReportEnvelope { command: command.to_string(), inputs, results, tool_version: TOOL_VERSION.to_string() }
    }

    /// Flat CSV, one row per (graph, claim) where claims are involved.
    pub fn write_csv(&self, path: &Path) -> csv::Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        match &self.results {
            CommandResults::Index { graph6, report } => {
                w.write_record(["graph6", "n", "m", "harmonic", "randic", "radius", "diameter", "cyclomatic", "class"])?;
                w.write_record([
                    graph6.clone(),
                    report.n.to_string(),
                    report.m.to_string(),
                    report.harmonic.to_string(),
                    report.randic.to_string(),
                    report.radius.to_string(),
                    report.diameter.to_string(),
                    report.cyclomatic.to_string(),
                    report.class.name().to_string(),
                ])?;
            }
            CommandResults::Check { graph6, checks } => {
                w.write_record(["graph6", "claim", "status", "bound", "actual", "slack"])?;
                for c in checks {
                    w.write_record(check_row(graph6, c))?;
                }
            }
            CommandResults::Sweep { report } => {
                w.write_record(["role", "graph6", "claim", "status", "bound", "actual", "slack"])?;
                let extremal = report.summaries.iter().filter_map(|s| s.extremal.as_ref()).map(|w| ("extremal", w));
                let violations = report.violations.iter().map(|v| ("violation", &v.0));
                for (role, witness) in extremal.chain(violations) {
                    let Witness { graph6, result, .. } = witness;
                    let mut row = vec![role.to_string()];
                    row.extend(check_row(graph6, result));
                    w.write_record(row)?;
                }
            }
            CommandResults::Lemma2 { result } => {
                w.write_record(["role", "x", "y", "value"])?;
                let (x, y) = result.argmin;
                w.write_record(["argmin".to_string(), x.to_string(), y.to_string(), result.min_value.to_string()])?;
                for ((x, y), value) in &result.small_values {
                    w.write_record(["point".to_string(), x.to_string(), y.to_string(), value.to_string()])?;
                }
            }
            CommandResults::Reduce { steps, .. } => {
                w.write_record(["step", "removed_u", "removed_v", "delta", "harmonic", "radius", "cyclomatic", "graph6"])?;
                for r in steps {
                    let (u, v) = r.removed_edge.map_or((String::new(), String::new()), |(u, v)| (u.to_string(), v.to_string()));
                    w.write_record([
                        r.step.to_string(),
                        u,
                        v,
                        r.delta.as_ref().map(ToString::to_string).unwrap_or_default(),
                        r.harmonic.to_string(),
                        r.radius.to_string(),
                        r.cyclomatic.to_string(),
                        r.graph6.clone(),
                    ])?;
                }
            }
        }
        w.flush()?;
        Ok(())
    }
}

fn check_row(graph6: &str, c: &BoundCheckResult) -> Vec<String> {
    let status = serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
    vec![graph6.to_string(), c.claim.to_string(), status, c.bound.to_string(), c.actual.to_string(), c.slack.to_string()]
}
