//! Fourier analysis on the regular hexagon.
//!
//! The crate works in homogeneous coordinates `t = (t1, t2, t3)` with
//! `t1 + t2 + t3 = 0`. The fundamental domain is the hexagon
//! `Omega = { -1 <= t1, t2, -t3 < 1 }`, and the exponentials
//! `phi_j(t) = exp((2 pi i / 3) <j, t>)` indexed by sum-zero integer
//! triples form an orthonormal basis of the periodic functions on it.
//!
//! Modules build on each other in layers:
//!
//! - [`hexcoord`]: coordinates, the hexagon, folding, the hex norm
//! - [`basis`]: index sets `H_n`, rings, exponentials
//! - [`kernels`]: Dirichlet, Cesaro, and Abel-Poisson kernels
//! - [`quadrature`]: equal-weight lattice rule on the hexagon
//! - [`means`]: partial sums, Cesaro means, Abel-Poisson means
//! - [`analysis`]: kernel norms, moduli of continuity, error sweeps
//! - [`report`]: deterministic CSV/JSON experiment reports
//! - [`parse`]: small parsers for CLI-style inputs
//! - [`cli`]: command definitions and dispatch for the `hexfourier` binary
//!
//! # Example
//!
//! ```
//! use hexfourier::hexcoord::HomogeneousPoint;
//! use hexfourier::kernels::{dirichlet, SingularityPolicy};
//!
//! let origin = HomogeneousPoint::new(0.0, 0.0);
//! let d3 = dirichlet(3, origin, SingularityPolicy::default());
//! assert!((d3 - 37.0).abs() < 1e-12);
//! ```

pub mod analysis;
pub mod basis;
pub mod cli;
pub mod hexcoord;
pub mod kernels;
pub mod means;
pub mod parse;
pub mod quadrature;
pub mod report;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter is outside the domain of the requested operation.
    #[error("invalid {name}: {reason}")]
    InvalidParameter {
        /// Name of the offending parameter.
        name: &'static str,
        /// Why the value was rejected.
        reason: String,
    },
    /// A degree exceeds what a coefficient table can serve.
    #[error("degree {requested} exceeds table degree {available}")]
    DegreeOutOfRange {
        /// Degree asked for.
        requested: u32,
        /// Largest degree held by the table.
        available: u32,
    },
    /// Evaluating a sampled function failed at one grid node.
    #[error("evaluation failed at node {index}: {message}")]
    SampleFailure {
        /// Index of the node in grid order.
        index: usize,
        /// Underlying failure description.
        message: String,
    },
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
