//! Prabhakar-type fractional calculus.
//!
//! Numerical building blocks around the three-parameter Mittag-Leffler
//! kernel e^γ_{ρ,μ,ω}(t) = t^{μ-1} E^γ_{ρ,μ}(ω t^ρ):
//!
//! * [`specfun`] — scalar special functions (reciprocal Gamma, E^γ_{ρ,μ},
//!   Wright φ, spectral kernel, uniform bound constant);
//! * [`grid`] — uniform-grid sampled functions, interpolation and
//!   finite-difference derivatives;
//! * [`operators`] — discretized fractional operators (Prabhakar integral
//!   by product integration with exact kernel moments, the derivative
//!   variants, Hilfer-Prabhakar compositions, classical special cases);
//! * [`oracles`] — closed-form identities used as ground truth;
//! * [`bounds`] — norm-bound and Opial/Hardy inequality constants and
//!   numerical verifiers;
//! * [`probability`] — Wright-type densities, their Laplace transforms and
//!   the spectral normalization;
//! * [`report`] — JSON-serializable verification reports.

// negated comparisons (`!(x > 0.0)`) are deliberate: they reject NaN where
// `x <= 0.0` would let it through
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// reference values are frozen with their full oracle digits
#![allow(clippy::excessive_precision)]
// index loops double as node-coordinate arithmetic
#![allow(clippy::needless_range_loop)]

mod dd;
pub mod error;
pub mod specfun;
pub mod grid;
pub mod quad;
pub mod operators;
pub mod oracles;
pub mod bounds;
pub mod probability;
pub mod report;

pub use error::{Error, Result};
pub use grid::{SampledFn, UniformGrid};
pub use operators::{NodeFlag, OperatorOutput, OperatorSpec};
pub use specfun::{EvalConfig, MLValue, PrabhakarParams};
