use serde::{Deserialize, Serialize};

use crate::rational::UnitFractionTally;
use crate::{Error, Graph, GraphClass, Rational, Result};

/// Exact Harmonic index: sum over edges of `2 / (d_u + d_v)`.
///
/// Defined for any graph; isolated vertices and the empty edge set add 0.
pub fn harmonic_index(g: &Graph) -> Rational {
    let mut tally = UnitFractionTally::new();
    for (u, v) in g.edges() {
        tally.add(2, g.degree(u) + g.degree(v));
    }
    tally.to_rational()
}

/// Randić index: sum over edges of `1 / sqrt(d_u d_v)`, summed in sorted edge
/// order so the result is reproducible bit for bit.
pub fn randic_index(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

/// Rigorous enclosure `[lo, hi]` of the true Randić index.
///
/// Every correctly rounded operation is widened by one ulp in the outward
/// direction, so the real value lies inside the interval.
pub fn randic_enclosure(g: &Graph) -> (f64, f64) {
    let mut lo = 0.0f64;
    let mut hi = 0.0f64;
    for (u, v) in g.edges() {
        let root = ((g.degree(u) * g.degree(v)) as f64).sqrt();
        let term_lo = (1.0 / root.next_up()).next_down();
        let term_hi = (1.0 / root.next_down()).next_up();
        lo = (lo + term_lo).next_down();
        hi = (hi + term_hi).next_up();
    }
    (lo.max(0.0), hi)
}

/// `H(P_n) = n/2 - 1/6`, valid for `n >= 3`.
pub fn path_harmonic_closed_form(n: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::domain(format!("path closed form needs n >= 3, got {n}")));
    }
    Ok(Rational::new(3 * n as i64 - 1, 6))
}

/// The indices, radius and structure of one connected graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub harmonic: Rational,
    pub randic: f64,
    pub radius: usize,
    pub diameter: usize,
    pub cyclomatic: usize,
    pub class: GraphClass,
}

pub fn index_report(g: &Graph) -> Result<IndexReport> {
    let profile = g.distance_profile()?;
    let class = g.classify()?;
    Ok(IndexReport {
        n: g.n(),
        m: g.m(),
        harmonic: harmonic_index(g),
        randic: randic_index(g),
        radius: profile.radius,
        diameter: profile.diameter,
        cyclomatic: class.cyclomatic(),
        class,
    })
}
