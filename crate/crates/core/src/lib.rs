//! Exact Harmonic-index and floating-point Randić-index computation for small
//! simple graphs, together with executable versions of radius lower bounds
//! and exhaustive sweeps that verify them (or hunt for counterexamples) over
//! complete labeled families.
//!
//! ```
//! use harmonic_radius::{Graph, indices, bounds};
//!
//! let p4 = Graph::path(4);
//! assert_eq!(indices::harmonic_index(&p4).to_string(), "11/6");
//! let check = bounds::check_tree_bound(&p4).unwrap();
//! assert_eq!(check.status, bounds::Status::Exempt);
//! ```

// Graph representation, traversal, radius, classification.
pub mod graph;

// Exact fractions for Harmonic-index values and bound constants.
pub mod rational;

// Harmonic and Randić indices.
pub mod indices;

// Pendant addition, edge deletion deltas, cycle-edge reduction.
pub mod transforms;

// The f(x, y) bound function and per-graph claim checkers.
pub mod bounds;

// Exhaustive generators and the sweep harness.
pub mod enumerate;

// graph6 and edge-list text formats.
pub mod format;

mod error;

pub use error::{Error, Result};
pub use graph::{DistanceProfile, Graph, GraphClass};
pub use rational::Rational;
