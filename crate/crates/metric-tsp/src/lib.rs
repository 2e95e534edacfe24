//! Approximate traveling-salesman tours on metric instances and shortest
//! covering walks on arbitrary connected graphs.
//!
//! The solver chains a minimum spanning tree, a minimum-weight perfect
//! matching on the tree's odd-degree vertices, an Eulerian circuit of their
//! union, and a shortcutting pass. On any instance whose weights satisfy the
//! triangle inequality the resulting tour is strictly shorter than 3/2 times
//! the optimal tour. Covering-walk instances on arbitrary connected graphs are
//! solved through their shortest-path closure and re-expanded, with the same
//! guarantee against the optimal covering walk.
//!
//! The [`oracle`] module holds exact reference solvers (dynamic programming
//! over vertex subsets, brute-force enumeration, bounded walk search) that are
//! only feasible at desk scale; the test suites use them to check the
//! guarantee and every intermediate inequality on generated corpora.

pub mod batch;
pub mod closure;
pub mod corpus;
pub mod error;
pub mod euler;
pub mod instance;
pub mod jsonio;
pub mod matching;
pub mod mst;
pub mod oracle;
pub mod pipeline;
pub mod tsplib;

pub use closure::{expand_walk, metric_closure, MetricClosure};
pub use error::{Error, ErrorKind};
pub use instance::{GeneralInstance, MetricInstance, MetricViolation, Tour, Walk};
pub use pipeline::{solve_problem_a, solve_problem_b, SolveOptions, SolveReport};

/// Relative slack used when comparing floating-point sums that are equal as
/// reals but may have been accumulated in different orders.
pub const TAU_FP: f64 = 1e-9;

/// Absolute comparison tolerance at a given magnitude.
///
/// The floor at 1.0 keeps the tolerance meaningful for sums near zero.
pub fn fp_tolerance(scale: f64) -> f64 {
    TAU_FP * scale.abs().max(1.0)
}
