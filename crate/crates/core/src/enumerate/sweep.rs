use std::cmp::Ordering;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::{Family, FamilySpec};
use crate::bounds::{check_claim, evaluate, graph_facts, BoundCheckResult, Claim, Status, Value};
use crate::format::to_graph6;
use crate::{Error, Graph, Result};

// Fixed partition count: results must not depend on the worker count.
const MAX_CHUNKS: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Violation certificates kept in the report (the tallies count all).
    pub max_certificates: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { jobs: 1, max_certificates: 1000 }
    }
}

/// A graph and the check result that made it notable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    pub graph: Graph,
    pub result: BoundCheckResult,
}

impl Witness {
    fn new(graph: Graph, result: BoundCheckResult) -> Self {
        Witness { graph6: to_graph6(&graph), graph, result }
    }
}

/// A violating graph with the verdict it produced; rebuild and recheck with
/// [`ViolationCertificate::replay`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ViolationCertificate(pub Witness);

impl ViolationCertificate {
    /// Re-runs the claim's checker on the recorded graph.
    pub fn replay(&self) -> Result<BoundCheckResult> {
        let graph = Graph::new(self.0.graph.n(), self.0.graph.edges())?;
        check_claim(&graph, self.0.result.claim)
    }

    pub fn replays_identically(&self) -> bool {
        self.replay().is_ok_and(|r| r == self.0.result)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ClaimTally {
    pub holds: u64,
    pub holds_with_equality: u64,
    pub exempt: u64,
    pub violated: u64,
    /// Graphs of the family outside the claim's domain.
    pub skipped: u64,
}

impl ClaimTally {
    fn record(&mut self, status: Status) {
        match status {
            Status::Holds => self.holds += 1,
            Status::HoldsWithEquality => self.holds_with_equality += 1,
            Status::Exempt => self.exempt += 1,
            Status::Violated => self.violated += 1,
        }
    }

    fn absorb(&mut self, other: &ClaimTally) {
        self.holds += other.holds;
        self.holds_with_equality += other.holds_with_equality;
        self.exempt += other.exempt;
        self.violated += other.violated;
        self.skipped += other.skipped;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub claim: Claim,
    #[serde(flatten)]
    pub tally: ClaimTally,
    /// Non-exempt graph with the smallest slack; ties go to the smaller edge
    /// bitmask.
    pub extremal: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub spec: FamilySpec,
    pub claims: Vec<Claim>,
    pub graphs_examined: u64,
    pub summaries: Vec<ClaimSummary>,
    pub violations: Vec<ViolationCertificate>,
    pub violations_truncated: bool,
}

impl SweepReport {
    pub fn total_violations(&self) -> u64 {
        self.summaries.iter().map(|s| s.tally.violated).sum()
    }

    pub fn summary(&self, claim: Claim) -> Option<&ClaimSummary> {
        self.summaries.iter().find(|s| s.claim == claim)
    }
}

fn claim_fits_family(claim: Claim, family: Family) -> bool {
    match claim {
        Claim::Theorem1 => family != Family::UnicyclicGraphs,
        Claim::Theorem2 | Claim::Theorem3 => family != Family::LabeledTrees,
        _ => true,
    }
}

struct Best {
    mask: u128,
    graph: Graph,
    result: BoundCheckResult,
}

impl Best {
    fn beaten_by(&self, slack: &Value, mask: u128) -> bool {
        match slack.total_cmp(&self.result.slack) {
            Ordering::Less => true,
            Ordering::Equal => mask < self.mask,
            Ordering::Greater => false,
        }
    }
}

struct Partial {
    examined: u64,
    tallies: Vec<ClaimTally>,
    best: Vec<Option<Best>>,
    violations: Vec<ViolationCertificate>,
    truncated: bool,
}

impl Partial {
    fn empty(claims: usize) -> Self {
        Partial {
            examined: 0,
            tallies: vec![ClaimTally::default(); claims],
            best: (0..claims).map(|_| None).collect(),
            violations: Vec::new(),
            truncated: false,
        }
    }

    fn offer(slot: &mut Option<Best>, candidate: Best) {
        if slot.as_ref().is_none_or(|b| b.beaten_by(&candidate.result.slack, candidate.mask)) {
            *slot = Some(candidate);
        }
    }

    fn push_violation(&mut self, cert: ViolationCertificate, cap: usize) {
        if self.violations.len() < cap {
            self.violations.push(cert);
        } else {
            self.truncated = true;
        }
    }

    // `other` covers the range right after `self`.
    fn merge(mut self, other: Partial, cap: usize) -> Partial {
        self.examined += other.examined;
        for (t, o) in self.tallies.iter_mut().zip(&other.tallies) {
            t.absorb(o);
        }
        for (slot, candidate) in self.best.iter_mut().zip(other.best) {
            if let Some(c) = candidate {
                Self::offer(slot, c);
            }
        }
        self.truncated |= other.truncated;
        for v in other.violations {
            self.push_violation(v, cap);
        }
        self
    }
}

fn process(spec: &FamilySpec, claims: &[Claim], range: Range<u64>, cap: usize) -> Result<Partial> {
    let mut partial = Partial::empty(claims.len());
    for g in spec.graphs_in(range) {
        partial.examined += 1;
        let facts = graph_facts(&g)?;
        let mask = g.edge_mask().expect("enumerated graphs fit a mask");
        for (i, &claim) in claims.iter().enumerate() {
            if !claim.applies_to(&facts.class) {
                partial.tallies[i].skipped += 1;
                continue;
            }
            let result = evaluate(claim, &facts, &g)?;
            partial.tallies[i].record(result.status);
            if result.status == Status::Violated {
                partial.push_violation(ViolationCertificate(Witness::new(g.clone(), result.clone())), cap);
            }
            if result.status != Status::Exempt && partial.best[i].as_ref().is_none_or(|b| b.beaten_by(&result.slack, mask)) {
                partial.best[i] = Some(Best { mask, graph: g.clone(), result });
            }
        }
    }
    Ok(partial)
}

fn chunk_ranges(units: u64) -> Vec<Range<u64>> {
    let chunks = units.clamp(1, MAX_CHUNKS);
    (0..chunks)
        .map(|i| {
            let at = |k: u64| (units as u128 * k as u128 / chunks as u128) as u64;
            at(i)..at(i + 1)
        })
        .collect()
}

#[cfg(feature = "parallel")]
fn run_chunks(spec: &FamilySpec, claims: &[Claim], ranges: Vec<Range<u64>>, options: &SweepOptions) -> Result<Vec<Partial>> {
    use rayon::prelude::*;
    if options.jobs <= 1 {
        return ranges.into_iter().map(|r| process(spec, claims, r, options.max_certificates)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        ranges
            .into_par_iter()
            .map(|r| process(spec, claims, r, options.max_certificates))
            .collect()
    })
}

#[cfg(not(feature = "parallel"))]
fn run_chunks(spec: &FamilySpec, claims: &[Claim], ranges: Vec<Range<u64>>, options: &SweepOptions) -> Result<Vec<Partial>> {
    ranges.into_iter().map(|r| process(spec, claims, r, options.max_certificates)).collect()
}

/// Applies each claim's checker to every graph of the family and aggregates
/// tallies, violation certificates and minimum-slack witnesses.
///
/// The unit space is cut into a fixed set of contiguous ranges that are
/// reduced in order, so the report is identical for any `jobs`.
pub fn sweep(spec: &FamilySpec, claims: &[Claim], options: &SweepOptions) -> Result<SweepReport> {
    spec.validate()?;
    if claims.is_empty() {
        return Err(Error::domain("sweep needs at least one claim"));
    }
    if let Some(&claim) = claims.iter().find(|&&c| !claim_fits_family(c, spec.family)) {
        return Err(Error::InapplicableClaim { claim: claim.to_string(), family: spec.family.to_string() });
    }
    let mut claims = claims.to_vec();
    claims.dedup();
    let partials = run_chunks(spec, &claims, chunk_ranges(spec.units()), options)?;
    let total = partials
        .into_iter()
        .reduce(|a, b| a.merge(b, options.max_certificates))
        .unwrap_or_else(|| Partial::empty(claims.len()));
    let summaries = claims
        .iter()
        .zip(total.tallies)
        .zip(total.best)
        .map(|((&claim, tally), best)| ClaimSummary {
            claim,
            tally,
            extremal: best.map(|b| Witness::new(b.graph, b.result)),
        })
        .collect();
    Ok(SweepReport {
        spec: *spec,
        claims,
        graphs_examined: total.examined,
        summaries,
        violations: total.violations,
        violations_truncated: total.truncated,
    })
}
