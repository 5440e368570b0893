//! Error types shared across the toolkit.

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExactError {
    #[error("bad rational literal {0:?} (expected \"p\" or \"p/q\")")]
    BadRationalLiteral(String),
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("pole: denominator vanishes at x = {0}")]
    Pole(String),
    #[error("zero denominator polynomial")]
    ZeroDenominator,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular linear system")]
    SingularSystem,
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
}

/// Errors raised when building models and generators.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModelError {
    #[error("negative rate: {name} = {value}")]
    NegativeRate { name: &'static str, value: String },
    #[error("rate out of range: {0}")]
    RateOutOfRange(String),
    #[error("kappa must be positive for the diffusion-dissipation process")]
    NonPositiveKappa,
    #[error("unknown model name {0:?}")]
    UnknownModel(String),
    #[error("state space too large: {dim} > cap {cap} (raise the cap to override)")]
    CapacityExceeded { dim: usize, cap: usize },
    #[error("vector length {got} does not match state-space dimension {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("site index {site} out of range for L = {l}")]
    SiteOutOfRange { site: usize, l: usize },
    #[error("{0}")]
    Exact(#[from] ExactError),
    #[error("operation not defined for model {0}")]
    UnsupportedModel(&'static str),
    #[error("invalid model document: {0}")]
    BadDocument(String),
}

/// Errors from the exact stationary-state solver and observables.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum SteadyError {
    #[error("null space has dimension {0}, expected 1 (reducible generator?)")]
    NullSpaceDimension(usize),
    #[error("stationary vector has mixed signs; generator is not a valid Markov matrix")]
    MixedSigns,
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("{0}")]
    Exact(#[from] ExactError),
}

/// Errors from the matrix-ansatz engines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum AnsatzError {
    #[error("cannot parse word {0:?}")]
    BadWord(String),
    #[error("word uses letter {letter:?} outside alphabet {alphabet}")]
    WrongAlphabet { letter: String, alphabet: &'static str },
    #[error(
        "truncated evaluation did not converge: N = {n} gives {at_n}, N = {n_next} gives {at_next} (rel. diff {diff:e})"
    )]
    NotConverged {
        n: usize,
        n_next: usize,
        at_n: f64,
        at_next: f64,
        diff: f64,
    },
    #[error("representation requires c != 0 and d != 0 (got c = {c}, d = {d})")]
    DegenerateBoundary { c: String, d: String },
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("{0}")]
    Exact(#[from] ExactError),
}

/// Errors from the stochastic simulator.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum SimError {
    #[error("time horizon must exceed burn-in (horizon = {horizon}, burn_in = {burn_in})")]
    BadHorizon { horizon: f64, burn_in: f64 },
    #[error("replica seeds must be pairwise distinct (duplicate seed {0})")]
    DuplicateSeed(u64),
    #[error("need at least one replica")]
    NoReplicas,
    #[error("absorbing state reached: total rate is zero in configuration {0}")]
    AbsorbingState(String),
    #[error("{0}")]
    Model(#[from] ModelError),
}
