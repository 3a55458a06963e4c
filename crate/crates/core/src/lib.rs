//! Entropic uncertainty and certainty relations for the three Pauli observables
//! on a qubit, in terms of Rényi and Tsallis entropies of order `α ∈ (0, 1]`.
//!
//! The crate is split into the analytic side and the checking side:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`distributions`] | probability vectors, `Φ_α`, Rényi/Shannon/min/Tsallis entropies, `ln_α` |
//! | [`qubit`] | angle parametrization, Bloch vectors, spectral form, seeded samplers |
//! | [`pauli_measure`] | Born-rule outcome distributions for `σx`, `σy`, `σz` |
//! | [`bounds`] | `F_α`, `f_α`, `g_α`, series coefficients, `ρ̂_α`, `ĥ_α`, band bounds, saturation checks |
//! | [`verify`] | brute-force grid and sampling oracles producing [`verify::VerificationReport`]s |
//!
//! For every pure or mixed qubit state and every `α ∈ (0, 1]`:
//!
//! ```text
//! 2 ln 2  <=  R_α(σx) + R_α(σy) + R_α(σz)  <=  3 ln 2
//! ```
//!
//! and for pure states the upper end tightens to `3 ρ̂_α`, where `ρ̂_α` is the
//! Rényi entropy of the pair `(1 ± 1/√3)/2`.
//!
//! ```
//! use pauli_renyi::{bounds, pauli_measure, qubit, EntropyOrder};
//!
//! let alpha = EntropyOrder::new(0.5).unwrap();
//! let state = qubit::pauli_eigenstate(qubit::Axis::Z, qubit::Sign::Plus);
//! let triple = pauli_measure::measure_pure(&state);
//! let sum = bounds::entropic_sum_renyi(&triple, alpha).unwrap();
//! assert!((sum - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
//! ```

use thiserror::Error;

pub mod bounds;
pub mod distributions;
pub mod pauli_measure;
pub mod qubit;
mod summation;
pub mod verify;

pub use bounds::{BandPoint, DomainPoint, SaturationKind, SaturationReport};
pub use distributions::{EntropyOrder, ProbabilityDistribution};
pub use pauli_measure::PauliTriple;
pub use qubit::{Axis, BlochVector, PureStateAngles, Sign, SpectralDecomposition};
pub use verify::{GridDomain, GridSpec, VerificationReport};

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distribution is empty")]
    EmptyDistribution,

    #[error("negative probability {value} at index {index}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("probabilities sum to {0}, expected 1 within 1e-12")]
    NotNormalized(f64),

    #[error("distributions have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("non-finite value for {0}")]
    NonFinite(&'static str),

    #[error("entropy order must be positive and finite, got {0}")]
    InvalidOrder(f64),

    #[error("entropy order {alpha} outside the supported range ({min}, {max}]")]
    OrderOutOfRange { alpha: f64, min: f64, max: f64 },

    #[error("{name} = {value} outside its admissible range")]
    ArgumentOutOfRange { name: &'static str, value: f64 },

    #[error("Bloch vector norm {0} exceeds 1")]
    OutsideBlochBall(f64),

    #[error("invalid spectral decomposition: {0}")]
    InvalidSpectral(String),

    #[error("outcome probability {0} outside [0, 1] beyond rounding")]
    ProbabilityOutOfRange(f64),

    #[error("point (tau = {tau}, phi = {phi}) lies outside the reduced domain [0, pi/4]^2")]
    OutsideDomain { tau: f64, phi: f64 },

    #[error("state is not pure (squared Bloch norm {0})")]
    NotPure(f64),

    #[error("{bound} bound violated by {excess:e} nats")]
    BoundViolated { bound: &'static str, excess: f64 },

    #[error("equality reached without the predicted state structure: {0}")]
    EqualityConditionViolated(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("malformed report line: {0}")]
    MalformedReport(String),

    #[error("sample count must be at least 1")]
    EmptySample,
}

pub type Result<T> = std::result::Result<T, Error>;
