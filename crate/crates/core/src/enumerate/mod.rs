//! Exhaustive generators for small graph families and the sweep harness.
//!
//! Every family is indexed by a dense `u64` unit space (edge masks for
//! connected graphs, Prüfer indices for trees and unicyclic graphs), so the
//! sweep can split work into contiguous ranges and merge results in range
//! order.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::pair_count;
use crate::{Error, Graph, Result};

mod canon;
mod connected;
mod sweep;
mod trees;
mod unicyclic;

pub use canon::{canonical_mask, is_canonical};
pub use connected::{labeled_connected_count, ConnectedGraphs};
pub use sweep::{sweep, ClaimSummary, SweepOptions, SweepReport, ViolationCertificate, Witness};
pub use trees::{cayley_count, prufer_decode, LabeledTrees};
pub use unicyclic::{unicyclic_count, UnicyclicGraphs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    ConnectedGraphs,
    LabeledTrees,
    UnicyclicGraphs,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::ConnectedGraphs => "connected_graphs",
            Family::LabeledTrees => "labeled_trees",
            Family::UnicyclicGraphs => "unicyclic_graphs",
        }
    }

    /// Largest `n` enumerated without an explicit override.
    pub fn default_cap(&self) -> usize {
        match self {
            Family::ConnectedGraphs => 8,
            Family::LabeledTrees => 10,
            Family::UnicyclicGraphs => 9,
        }
    }

    // Beyond this the unit space no longer fits the index type.
    fn hard_cap(&self) -> usize {
        match self {
            Family::ConnectedGraphs => 11,
            Family::LabeledTrees | Family::UnicyclicGraphs => 16,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "connected" | "connected_graphs" => Ok(Family::ConnectedGraphs),
            "trees" | "tree" | "labeled_trees" => Ok(Family::LabeledTrees),
            "unicyclic" | "unicyclic_graphs" => Ok(Family::UnicyclicGraphs),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    /// Emit one canonical representative per isomorphism class.
    pub dedup: bool,
    /// Allow `n` above the family's default cap.
    #[serde(default)]
    pub allow_oversize: bool,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec { family, n, dedup: false, allow_oversize: false }
    }

    pub fn dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn allow_oversize(mut self, allow: bool) -> Self {
        self.allow_oversize = allow;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let too_big = |cap| Error::AboveCap { family: self.family.name(), n: self.n, cap };
        if self.n == 0 {
            return Err(Error::domain("families need n >= 1"));
        }
        if self.n > self.family.hard_cap() {
            return Err(too_big(self.family.hard_cap()));
        }
        if self.n > self.family.default_cap() && !self.allow_oversize {
            return Err(too_big(self.family.default_cap()));
        }
        if self.dedup && self.family != Family::ConnectedGraphs {
            return Err(Error::domain("dedup is only available for connected_graphs"));
        }
        Ok(())
    }

    /// Size of the index space the family is enumerated over.
    pub fn units(&self) -> u64 {
        match self.family {
            Family::ConnectedGraphs => 1u64 << pair_count(self.n),
            Family::LabeledTrees | Family::UnicyclicGraphs => cayley_count(self.n),
        }
    }

    /// The graphs whose index lies in `range`, in index order.
    pub fn graphs_in(&self, range: Range<u64>) -> FamilyIter {
        let Range { start, end } = range;
        match self.family {
            Family::ConnectedGraphs => FamilyIter::Connected(ConnectedGraphs::new(self.n, self.dedup, start, end)),
            Family::LabeledTrees => FamilyIter::Trees(LabeledTrees::new(self.n, start, end)),
            Family::UnicyclicGraphs => FamilyIter::Unicyclic(UnicyclicGraphs::new(self.n, start, end)),
        }
    }

    pub fn graphs(&self) -> Result<FamilyIter> {
        self.validate()?;
        Ok(self.graphs_in(0..self.units()))
    }

    /// Number of graphs the family yields without dedup.
    pub fn labeled_cardinality(&self) -> u128 {
        match self.family {
            Family::ConnectedGraphs => labeled_connected_count(self.n),
            Family::LabeledTrees => cayley_count(self.n) as u128,
            Family::UnicyclicGraphs => unicyclic_count(self.n) as u128,
        }
    }
}

pub enum FamilyIter {
    Connected(ConnectedGraphs),
    Trees(LabeledTrees),
    Unicyclic(UnicyclicGraphs),
}

impl Iterator for FamilyIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            FamilyIter::Connected(it) => it.next(),
            FamilyIter::Trees(it) => it.next(),
            FamilyIter::Unicyclic(it) => it.next(),
        }
    }
}

fn expect_family(spec: &FamilySpec, family: Family) -> Result<FamilyIter> {
    if spec.family != family {
        return Err(Error::domain(format!("expected family {family}, got {}", spec.family)));
    }
    spec.graphs()
}

/// Every labeled connected graph on `spec.n` vertices (or one per
/// isomorphism class with `dedup`).
pub fn connected_graphs(spec: &FamilySpec) -> Result<FamilyIter> {
    expect_family(spec, Family::ConnectedGraphs)
}

/// All `n^(n-2)` labeled trees, by Prüfer decoding.
pub fn labeled_trees(spec: &FamilySpec) -> Result<FamilyIter> {
    expect_family(spec, Family::LabeledTrees)
}

/// Every labeled connected graph with `m = n`.
pub fn unicyclic_graphs(spec: &FamilySpec) -> Result<FamilyIter> {
    if spec.n < 3 {
        return Err(Error::domain("unicyclic graphs need n >= 3"));
    }
    expect_family(spec, Family::UnicyclicGraphs)
}
