//! Exact solvers for open-boundary integrable exclusion processes.
//!
//! The crate constructs the Markov generators of three families of stochastic
//! lattice gases with boundary reservoirs (single-species totally asymmetric
//! exclusion, symmetric exclusion with pair evaporation/condensation, and a
//! two-species totally asymmetric exclusion), computes their stationary
//! states by three independent routes, and mechanically verifies the
//! integrability structure behind them:
//!
//! - exact rational null space of the sparse generator ([`steady`]),
//! - matrix-product evaluation through quadratic-algebra rewriting or a
//!   truncated oscillator representation ([`ansatz`]),
//! - continuous-time Monte Carlo with statistical error bars ([`sim`]),
//! - Yang-Baxter / reflection-equation checks, derivative links between
//!   spectral and local matrices, and double-row transfer-matrix identities
//!   ([`integrability`]).
//!
//! All algebra is exact: scalars are arbitrary-precision rationals and
//! spectral matrices carry single-variable rational functions. Floats appear
//! only in the simulator and in shadow comparisons.

pub mod ansatz;
pub mod error;
pub mod exact;
pub mod integrability;
pub mod model;
pub mod sim;
pub mod steady;

pub use error::{AnsatzError, ExactError, ModelError, SimError, SteadyError};
