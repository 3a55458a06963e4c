//! State-independent bounds on the sum of the three Pauli entropies.
//!
//! For a qubit state measured in the three Pauli eigenbases and `α ∈ (0, 1]`:
//!
//! * the Rényi sum is at least `2 ln 2`, with equality exactly at the six Pauli
//!   eigenstates;
//! * it is at most `3 ln 2`, reached only by the completely mixed state;
//! * for pure states it is at most `3 ρ̂_α`, reached when all three outcome
//!   distributions are `(1 ± 1/√3)/2` up to order.
//!
//! On pure states `Σ R_α = ln F_α(τ, φ) / (1 − α)` with
//! `F_α = Φ_α(p) Φ_α(q) Φ_α(r)`, and `F_α` over the full angle range takes the
//! same values as on `D = [0, π/4]²` (see [`symmetry_reduce`]).

mod saturation;
pub mod series;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};

use crate::distributions::{
    alpha_log, phi_alpha, renyi_entropy, tsallis_entropy, EntropyOrder, ProbabilityDistribution,
};
use crate::pauli_measure::{measure_pure, PauliTriple};
use crate::qubit::PureStateAngles;
use crate::{Error, Result};

pub use saturation::{
    check_lower, check_upper, upper_pattern_tolerance, SaturationKind, SaturationReport,
    DEFAULT_SATURATION_TOLERANCE,
};
pub use series::{
    f_func, f_over_g, f_series, g_func, g_series, series_coeffs_f, series_coeffs_g, SERIES_SWITCH,
};

/// Orders at or below this are rejected by the bound operations.
pub const MIN_ORDER: f64 = 1e-6;

/// The rescaled lower bound `2 ln 2 / (3 ln 2)` shared by the Rényi and Tsallis bands.
pub const BAND_LOWER: f64 = 2.0 / 3.0;

/// `2 ln 2`.
pub fn lower_bound() -> f64 {
    2.0 * LN_2
}

/// `3 ln 2`, the ceiling over all (mixed) states.
pub fn mixed_ceiling() -> f64 {
    3.0 * LN_2
}

/// Restricts an order to `(MIN_ORDER, 1]`, the range the bounds hold on.
pub fn bound_order(a: EntropyOrder) -> Result<EntropyOrder> {
    if a.value() <= MIN_ORDER || (a.value() > 1.0 && !a.is_one()) {
        return Err(Error::OrderOutOfRange { alpha: a.value(), min: MIN_ORDER, max: 1.0 });
    }
    Ok(a)
}

/// As [`bound_order`] but excluding the Shannon point.
pub(crate) fn open_order(a: EntropyOrder) -> Result<EntropyOrder> {
    let a = bound_order(a)?;
    if a.is_one() {
        return Err(Error::OrderOutOfRange { alpha: a.value(), min: MIN_ORDER, max: 1.0 - 1e-9 });
    }
    Ok(a)
}

/// A point of the reduced domain `D = [0, π/4] × [0, π/4]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainPoint {
    tau: f64,
    phi: f64,
}

impl DomainPoint {
    pub fn new(tau: f64, phi: f64) -> Result<Self> {
        let inside = |x: f64| (0.0..=FRAC_PI_4).contains(&x);
        if !(inside(tau) && inside(phi)) {
            return Err(Error::OutsideDomain { tau, phi });
        }
        Ok(Self { tau, phi })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

impl From<DomainPoint> for PureStateAngles {
    fn from(d: DomainPoint) -> Self {
        PureStateAngles::new(d.tau, d.phi).expect("domain points are finite")
    }
}

/// One row of the band table: the rescaled lower bound and the two upper bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandPoint {
    pub alpha: f64,
    pub lower: f64,
    /// `B(α) = ρ̂_α / ln 2`
    pub b_upper: f64,
    /// `A(α) = ĥ_α / ln_α 2`
    pub a_upper: f64,
}

impl BandPoint {
    /// `(B − A)/B`.
    pub fn relative_gap(&self) -> f64 {
        (self.b_upper - self.a_upper) / self.b_upper
    }
}

/// `R_α(σx) + R_α(σy) + R_α(σz)` in nats.
pub fn entropic_sum_renyi(t: &PauliTriple, a: EntropyOrder) -> Result<f64> {
    let a = bound_order(a)?;
    Ok(t.distributions().iter().map(|d| renyi_entropy(d, a)).sum())
}

/// `H_α(σx) + H_α(σy) + H_α(σz)`.
pub fn entropic_sum_tsallis(t: &PauliTriple, a: EntropyOrder) -> Result<f64> {
    let a = bound_order(a)?;
    Ok(t.distributions().iter().map(|d| tsallis_entropy(d, a)).sum())
}

/// `F_α(τ, φ) = Φ_α(p) Φ_α(q) Φ_α(r)` on `D`, for `α ∈ (0, 1)`.
pub fn big_f(d: &DomainPoint, a: EntropyOrder) -> Result<f64> {
    big_f_at(&PureStateAngles::from(*d), a)
}

/// `F_α` at arbitrary angles.
pub fn big_f_at(s: &PureStateAngles, a: EntropyOrder) -> Result<f64> {
    let a = open_order(a)?;
    let t = measure_pure(s);
    Ok(t.distributions().iter().map(|d| phi_alpha(d, a)).product())
}

/// Maps any angles onto `D` without changing `F_α`:
/// `φ ↦ φ − π` (φ > π), `φ ↦ π − φ` (φ > π/2), `φ ↦ π/2 − φ` (φ > π/4),
/// `τ ↦ π/2 − τ` (τ > π/4). Input is canonicalized first.
pub fn symmetry_reduce(tau: f64, phi: f64) -> Result<DomainPoint> {
    let s = PureStateAngles::new(tau, phi)?;
    let (mut tau, mut phi) = (s.tau(), s.phi());
    if phi > PI {
        phi -= PI;
    }
    if phi > FRAC_PI_2 {
        phi = PI - phi;
    }
    if phi > FRAC_PI_4 {
        phi = FRAC_PI_2 - phi;
    }
    if tau > FRAC_PI_4 {
        tau = FRAC_PI_2 - tau;
    }
    DomainPoint::new(tau.clamp(0.0, FRAC_PI_4), phi.clamp(0.0, FRAC_PI_4))
}

/// The pair `((1 + 1/√3)/2, (1 − 1/√3)/2)` that saturates the pure-state upper bound.
pub fn saturating_pair() -> ProbabilityDistribution {
    let s = 1.0 / 3f64.sqrt();
    ProbabilityDistribution::pair((1.0 + s) / 2.0, (1.0 - s) / 2.0).expect("normalized")
}

/// `ρ̂_α`, the Rényi entropy of [`saturating_pair`].
pub fn rho_hat(a: EntropyOrder) -> Result<f64> {
    let a = bound_order(a)?;
    Ok(renyi_entropy(&saturating_pair(), a))
}

/// `ĥ_α`, the Tsallis entropy of [`saturating_pair`].
pub fn h_hat(a: EntropyOrder) -> Result<f64> {
    let a = bound_order(a)?;
    Ok(tsallis_entropy(&saturating_pair(), a))
}

/// `(2/3, B(α), A(α))`.
pub fn band_bounds(a: EntropyOrder) -> Result<BandPoint> {
    let a = bound_order(a)?;
    Ok(BandPoint {
        alpha: a.value(),
        lower: BAND_LOWER,
        b_upper: rho_hat(a)? / LN_2,
        a_upper: h_hat(a)? / alpha_log(2.0, a)?,
    })
}

/// Rescaled average `Σ R_α / (3 ln 2)`.
pub fn rescaled_renyi(t: &PauliTriple, a: EntropyOrder) -> Result<f64> {
    Ok(entropic_sum_renyi(t, a)? / (3.0 * LN_2))
}

/// Rescaled average `Σ H_α / (3 ln_α 2)`.
pub fn rescaled_tsallis(t: &PauliTriple, a: EntropyOrder) -> Result<f64> {
    Ok(entropic_sum_tsallis(t, a)? / (3.0 * alpha_log(2.0, a)?))
}
