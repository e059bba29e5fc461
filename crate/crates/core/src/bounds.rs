use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::classify_connected;
use crate::indices::{harmonic_index, randic_enclosure, randic_index, IndexReport};
use crate::{Error, Graph, GraphClass, Rational, Result};

/// Margin applied to every Randić-side comparison. A Randić claim is only
/// reported violated when the rigorous upper enclosure of `R(G)` falls below
/// the bound by more than this.
pub const RANDIC_TOLERANCE: f64 = 1e-9;

/// The inequalities this crate can check on a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Trees other than even paths: `H > r + 1/15`.
    Theorem1,
    /// Unicyclic graphs: `H >= r`, with equality exactly on even cycles.
    Theorem2,
    /// Cyclomatic number `k >= 1`: `H >= r - (31/105)(k - 1)`.
    Theorem3,
    /// Connected graphs: `R >= r - 1`.
    Conjecture1,
    /// Connected graphs other than even paths: `R >= r`.
    Conjecture2,
    /// Connected graphs other than even paths: `H >= r`.
    Conjecture3,
    /// `R >= H`.
    RGeH,
}

pub const ALL_CLAIMS: [Claim; 7] = [
    Claim::Theorem1,
    Claim::Theorem2,
    Claim::Theorem3,
    Claim::Conjecture1,
    Claim::Conjecture2,
    Claim::Conjecture3,
    Claim::RGeH,
];

impl Claim {
    pub fn name(&self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::Theorem3 => "theorem3",
            Claim::Conjecture1 => "conjecture1",
            Claim::Conjecture2 => "conjecture2",
            Claim::Conjecture3 => "conjecture3",
            Claim::RGeH => "r_ge_h",
        }
    }

    /// Whether the claim says anything about a connected graph of this class.
    pub fn applies_to(&self, class: &GraphClass) -> bool {
        match self {
            Claim::Theorem1 => class.is_tree(),
            Claim::Theorem2 => class.is_unicyclic(),
            Claim::Theorem3 => class.cyclomatic() >= 1,
            _ => true,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Claim::Theorem1 | Claim::Theorem2 | Claim::Theorem3 | Claim::Conjecture3)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        ALL_CLAIMS
            .into_iter()
            .find(|c| c.name() == key || (key == "rgeh" && *c == Claim::RGeH))
            .ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

/// Parses a comma-separated claim list such as `"theorem1,conjecture3"`.
pub fn parse_claims(list: &str) -> Result<Vec<Claim>> {
    let claims = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Claim>>>()?;
    if claims.is_empty() {
        return Err(Error::Parse("empty claim list".into()));
    }
    Ok(claims)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    HoldsWithEquality,
    Exempt,
    Violated,
}

impl Status {
    pub fn is_holding(&self) -> bool {
        matches!(self, Status::Holds | Status::HoldsWithEquality)
    }
}

/// Exact value for Harmonic-side claims, double for Randić-side ones.
/// Serializes as a `"p/q"` string or a JSON number respectively.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64(),
            Value::Approx(x) => *x,
        }
    }

    /// Total order within one variant; exact values sort before floats.
    pub fn total_cmp(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a.cmp(b),
            (Value::Approx(a), Value::Approx(b)) => a.total_cmp(b),
            (Value::Exact(_), Value::Approx(_)) => Ordering::Less,
            (Value::Approx(_), Value::Exact(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(x) => write!(f, "{x}"),
        }
    }
}

/// One claim evaluated on one graph. `slack = actual - bound`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheckResult {
    pub claim: Claim,
    pub status: Status,
    pub bound: Value,
    pub actual: Value,
    pub slack: Value,
}

/// `f(x,y) = 4/x - 8/(x+1) + 2/(x+2) + 4/y - 8/(y+1) + 2/(y+2) + 2/(x+y)`,
/// the worst-case Harmonic change from deleting a cycle edge whose endpoints
/// have degrees `x, y >= 2`.
pub fn lemma2_f(x: u64, y: u64) -> Result<Rational> {
    if x < 2 || y < 2 {
        return Err(Error::domain(format!("f(x, y) needs x, y >= 2, got ({x}, {y})")));
    }
    Ok(endpoint_part(x) + endpoint_part(y) + Rational::new(2, (x + y) as i64))
}

// 4/x - 8/(x+1) + 2/(x+2)
fn endpoint_part(x: u64) -> Rational {
    let x = x as i64;
    Rational::new(4, x) - Rational::new(8, x + 1) + Rational::new(2, x + 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Minimum {
    pub x_max: u64,
    pub y_max: u64,
    pub argmin: (u64, u64),
    pub min_value: Rational,
    /// `f` strictly increases in each coordinate at every grid step with
    /// `x, y >= 5`.
    pub monotone_tail: bool,
    /// `f(x, y)` for `2 <= x <= y <= 5`.
    pub small_values: Vec<((u64, u64), Rational)>,
}

// Float evaluation of f; each term is within an ulp of values below 4, so the
// total error stays under 1e-14 on any grid.
fn lemma2_f_approx(x: u64, y: u64) -> f64 {
    let part = |v: f64| 4.0 / v - 8.0 / (v + 1.0) + 2.0 / (v + 2.0);
    let (x, y) = (x as f64, y as f64);
    part(x) + part(y) + 2.0 / (x + y)
}

// Gap above which the float comparison is trusted.
const LEMMA2_FILTER: f64 = 1e-9;

// Exact ordering of f at two grid points, via floats when they are far apart.
fn lemma2_cmp(a: (u64, u64), fa: f64, b: (u64, u64), fb: f64) -> Ordering {
    if (fa - fb).abs() > LEMMA2_FILTER {
        return fa.total_cmp(&fb);
    }
    let exact = |(x, y)| lemma2_f(x, y).expect("grid points are >= 2");
    exact(a).cmp(&exact(b))
}

/// Exhaustive minimization of [`lemma2_f`] over `[2, x_max] x [2, y_max]`
/// plus the discrete monotonicity check on the `x, y >= 5` quadrant. Ties go to
/// the lexicographically smallest point.
///
/// Every comparison is exact: doubles decide only when two values differ by
/// more than `1e-9`, far beyond their rounding error, and rationals decide
/// the rest.
pub fn lemma2_minimize(x_max: u64, y_max: u64) -> Result<Lemma2Minimum> {
    if x_max < 5 || y_max < 5 {
        return Err(Error::domain(format!("grid must reach (5, 5), got ({x_max}, {y_max})")));
    }
    let mut best = ((2u64, 2u64), lemma2_f_approx(2, 2));
    let mut monotone_tail = true;
    let mut previous_row: Vec<f64> = Vec::new();
    for y in 2..=y_max {
        let row: Vec<f64> = (2..=x_max).map(|x| lemma2_f_approx(x, y)).collect();
        for (i, &value) in row.iter().enumerate() {
            let x = i as u64 + 2;
            if x >= 5 && y >= 5 {
                if let Some(&next) = row.get(i + 1) {
                    monotone_tail &= lemma2_cmp((x + 1, y), next, (x, y), value) == Ordering::Greater;
                }
                if y > 5 {
                    monotone_tail &= lemma2_cmp((x, y), value, (x, y - 1), previous_row[i]) == Ordering::Greater;
                }
            }
            let (point, best_value) = best;
            let better = match lemma2_cmp((x, y), value, point, best_value) {
                Ordering::Less => true,
                Ordering::Equal => (x, y) < point,
                Ordering::Greater => false,
            };
            if better {
                best = ((x, y), value);
            }
        }
        previous_row = row;
    }
    let argmin = best.0;
    let small_values = (2..=5u64)
        .flat_map(|x| (x..=5).map(move |y| (x, y)))
        .map(|(x, y)| ((x, y), lemma2_f(x, y).expect("points are >= 2")))
        .collect();
    Ok(Lemma2Minimum { x_max, y_max, argmin, min_value: lemma2_f(argmin.0, argmin.1)?, monotone_tail, small_values })
}

/// Computes the facts every checker needs in one pass over a connected graph.
pub fn graph_facts(g: &Graph) -> Result<IndexReport> {
    let profile = g.distance_profile()?;
    let cyclomatic = g.m() + 1 - g.n();
    let class = classify_connected(g.n(), cyclomatic, g.max_degree(), g.is_regular());
    Ok(IndexReport {
        n: g.n(),
        m: g.m(),
        harmonic: harmonic_index(g),
        randic: randic_index(g),
        radius: profile.radius,
        diameter: profile.diameter,
        cyclomatic,
        class,
    })
}

/// Evaluates `claim` given precomputed facts for `g`. The graph itself is
/// only consulted to certify a Randić-side violation.
pub fn evaluate(claim: Claim, facts: &IndexReport, g: &Graph) -> Result<BoundCheckResult> {
    if !claim.applies_to(&facts.class) {
        return Err(Error::domain(format!("{claim} does not apply to a {} graph", facts.class.name())));
    }
    let r = Rational::from_integer(facts.radius as i64);
    let h = &facts.harmonic;
    let even_path = facts.class == GraphClass::EvenPath;
    let exact = |status: Status, bound: Rational, slack: Rational| BoundCheckResult {
        claim,
        status,
        bound: Value::Exact(bound),
        actual: Value::Exact(h.clone()),
        slack: Value::Exact(slack),
    };
    let result = match claim {
        Claim::Theorem1 => {
            let bound = &r + &Rational::new(1, 15);
            let slack = h - &bound;
            let status = if even_path {
                // exempt, but the path identity H = r - 1/6 must still hold
                if *h == &r - &Rational::new(1, 6) {
                    Status::Exempt
                } else {
                    Status::Violated
                }
            } else if slack.is_positive() {
                Status::Holds
            } else {
                Status::Violated
            };
            exact(status, bound, slack)
        }
        Claim::Theorem2 => {
            let slack = h - &r;
            let even_cycle = facts.class == GraphClass::EvenCycle;
            let status = match (slack.is_negative(), slack.is_zero(), even_cycle) {
                (true, _, _) => Status::Violated,
                (_, true, true) => Status::HoldsWithEquality,
                (_, false, false) => Status::Holds,
                // equality off the even cycles, or strict slack on one
                _ => Status::Violated,
            };
            exact(status, r, slack)
        }
        Claim::Theorem3 => {
            let penalty = Rational::new(31 * (facts.cyclomatic as i64 - 1), 105);
            let bound = &r - &penalty;
            let slack = h - &bound;
            exact(exact_status(&slack), bound, slack)
        }
        Claim::Conjecture3 => {
            let slack = h - &r;
            let status = if even_path { Status::Exempt } else { exact_status(&slack) };
            exact(status, r, slack)
        }
        Claim::Conjecture1 | Claim::Conjecture2 | Claim::RGeH => {
            let bound = match claim {
                Claim::Conjecture1 => facts.radius as f64 - 1.0,
                Claim::Conjecture2 => facts.radius as f64,
                _ => h.to_f64(),
            };
            let status = if claim == Claim::Conjecture2 && even_path {
                Status::Exempt
            } else if facts.randic - bound < -RANDIC_TOLERANCE && randic_enclosure(g).1 - bound < -RANDIC_TOLERANCE {
                Status::Violated
            } else {
                Status::Holds
            };
            BoundCheckResult {
                claim,
                status,
                bound: Value::Approx(bound),
                actual: Value::Approx(facts.randic),
                slack: Value::Approx(facts.randic - bound),
            }
        }
    };
    Ok(result)
}

fn exact_status(slack: &Rational) -> Status {
    if slack.is_negative() {
        Status::Violated
    } else if slack.is_zero() {
        Status::HoldsWithEquality
    } else {
        Status::Holds
    }
}

/// Checks one claim on a connected graph; errors if the claim does not apply.
pub fn check_claim(g: &Graph, claim: Claim) -> Result<BoundCheckResult> {
    evaluate(claim, &graph_facts(g)?, g)
}

/// `H(T) > r(T) + 1/15` for trees; even paths are exempt.
pub fn check_tree_bound(g: &Graph) -> Result<BoundCheckResult> {
    check_claim(g, Claim::Theorem1)
}

/// `H(G) >= r(G)` for unicyclic graphs, equality exactly on even cycles.
pub fn check_unicyclic_bound(g: &Graph) -> Result<BoundCheckResult> {
    check_claim(g, Claim::Theorem2)
}

/// `H(G) >= r(G) - (31/105)(k-1)` for cyclomatic number `k >= 1`.
pub fn check_cyclomatic_bound(g: &Graph) -> Result<BoundCheckResult> {
    check_claim(g, Claim::Theorem3)
}

/// Conjectures 1-3 on a connected graph, in that order.
pub fn check_conjectures(g: &Graph) -> Result<Vec<BoundCheckResult>> {
    let facts = graph_facts(g)?;
    [Claim::Conjecture1, Claim::Conjecture2, Claim::Conjecture3]
        .into_iter()
        .map(|c| evaluate(c, &facts, g))
        .collect()
}
