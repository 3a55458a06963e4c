//! Finite probability distributions and the entropy functionals evaluated on them.
//!
//! All entropies are in nats. Orders within [`EXACT_ONE_TOLERANCE`] of 1 are
//! dispatched to the Shannon formula. For other orders the Rényi and Tsallis
//! entropies are computed from the excess `Φ_α(p) − 1`, accumulated term by term
//! as `p·expm1((α−1) ln p)`, which keeps full relative precision as `α → 1`.

use crate::summation::compensated_sum;
use crate::{Error, Result};

/// Orders with `|α − 1|` at or below this are treated as exactly 1.
pub const EXACT_ONE_TOLERANCE: f64 = 1e-9;

/// Absolute tolerance on `Σ p_j = 1`.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

/// A nonnegative vector summing to one.
///
/// Input is validated, never renormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probs: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        for (index, &value) in probs.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite("probability"));
            }
            if value < 0.0 {
                return Err(Error::NegativeProbability { index, value });
            }
        }
        let total = compensated_sum(probs.iter().copied());
        if (total - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized(total));
        }
        Ok(Self { probs })
    }

    /// Two-outcome distribution `(plus, minus)`.
    pub fn pair(plus: f64, minus: f64) -> Result<Self> {
        Self::new(vec![plus, minus])
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDistribution);
        }
        Ok(Self { probs: vec![1.0 / n as f64; n] })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn max_prob(&self) -> f64 {
        self.probs.iter().copied().fold(0.0, f64::max)
    }

    pub fn min_prob(&self) -> f64 {
        self.probs.iter().copied().fold(1.0, f64::min)
    }

    /// The convex combination `λ·self + (1−λ)·other`.
    pub fn mix(&self, lambda: f64, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::ArgumentOutOfRange { name: "lambda", value: lambda });
        }
        let probs = self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(&a, &b)| lambda * a + (1.0 - lambda) * b)
            .collect();
        Self::new(probs)
    }
}

/// Order `α > 0` of a Rényi or Tsallis entropy.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropyOrder(f64);

impl EntropyOrder {
    pub const ONE: EntropyOrder = EntropyOrder(1.0);

    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidOrder(alpha));
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_one(self) -> bool {
        (self.0 - 1.0).abs() <= EXACT_ONE_TOLERANCE
    }

    /// `1 − α`; exactly zero when the order is flagged as one.
    pub fn one_minus(self) -> f64 {
        if self.is_one() {
            0.0
        } else {
            1.0 - self.0
        }
    }
}

impl TryFrom<f64> for EntropyOrder {
    type Error = Error;

    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

/// `Φ_α(p) = Σ p_j^α` with `0^α = 0`.
pub fn phi_alpha(p: &ProbabilityDistribution, a: EntropyOrder) -> f64 {
    if a.is_one() {
        return 1.0;
    }
    let alpha = a.value();
    compensated_sum(p.probs().iter().filter(|&&x| x > 0.0).map(|&x| x.powf(alpha)))
}

/// `Φ_α(p) − 1`, accumulated as `Σ (p_j^α − p_j)`.
fn phi_excess(p: &ProbabilityDistribution, a: EntropyOrder) -> f64 {
    let exponent = a.value() - 1.0;
    compensated_sum(
        p.probs()
            .iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| x * (exponent * x.ln()).exp_m1()),
    )
}

/// Shannon entropy `−Σ p_j ln p_j` with `0·ln 0 = 0`.
pub fn shannon_entropy(p: &ProbabilityDistribution) -> f64 {
    let h = -compensated_sum(p.probs().iter().filter(|&&x| x > 0.0).map(|&x| x * x.ln()));
    h.max(0.0)
}

/// Rényi entropy `ln Φ_α(p) / (1 − α)`; Shannon at order one.
pub fn renyi_entropy(p: &ProbabilityDistribution, a: EntropyOrder) -> f64 {
    if a.is_one() {
        return shannon_entropy(p);
    }
    (phi_excess(p, a).ln_1p() / (1.0 - a.value())).max(0.0)
}

/// Min-entropy `−ln max_j p_j`.
pub fn min_entropy(p: &ProbabilityDistribution) -> f64 {
    (-p.max_prob().ln()).max(0.0)
}

/// Tsallis entropy `(Φ_α(p) − 1) / (1 − α)`; Shannon at order one.
pub fn tsallis_entropy(p: &ProbabilityDistribution, a: EntropyOrder) -> f64 {
    if a.is_one() {
        return shannon_entropy(p);
    }
    (phi_excess(p, a) / (1.0 - a.value())).max(0.0)
}

/// The α-logarithm `(ξ^{1−α} − 1) / (1 − α)`; `ln ξ` at order one.
pub fn alpha_log(xi: f64, a: EntropyOrder) -> Result<f64> {
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::ArgumentOutOfRange { name: "xi", value: xi });
    }
    if a.is_one() {
        return Ok(xi.ln());
    }
    let k = 1.0 - a.value();
    Ok((k * xi.ln()).exp_m1() / k)
}
