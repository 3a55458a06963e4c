//! Born-rule outcome distributions of `σx`, `σy`, `σz`.
//!
//! Each distribution is ordered `(+1, −1)` and built as `((1 + c)/2, (1 − c)/2)`
//! from the matching Bloch component `c`.

use crate::distributions::ProbabilityDistribution;
use crate::qubit::{Axis, BlochVector, PureStateAngles, PURITY_TOLERANCE};
use crate::{Error, Result};

/// Rounding slack allowed when an outcome probability lands just outside `[0, 1]`.
pub const CLAMP_TOLERANCE: f64 = 1e-15;

/// Outcome distributions `p` (σx), `q` (σy), `r` (σz).
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTriple {
    p: ProbabilityDistribution,
    q: ProbabilityDistribution,
    r: ProbabilityDistribution,
}

impl PauliTriple {
    pub fn new(
        p: ProbabilityDistribution,
        q: ProbabilityDistribution,
        r: ProbabilityDistribution,
    ) -> Result<Self> {
        for d in [&p, &q, &r] {
            if d.len() != 2 {
                return Err(Error::LengthMismatch(d.len(), 2));
            }
        }
        Ok(Self { p, q, r })
    }

    pub fn p(&self) -> &ProbabilityDistribution {
        &self.p
    }

    pub fn q(&self) -> &ProbabilityDistribution {
        &self.q
    }

    pub fn r(&self) -> &ProbabilityDistribution {
        &self.r
    }

    pub fn get(&self, axis: Axis) -> &ProbabilityDistribution {
        match axis {
            Axis::X => &self.p,
            Axis::Y => &self.q,
            Axis::Z => &self.r,
        }
    }

    pub fn distributions(&self) -> [&ProbabilityDistribution; 3] {
        [&self.p, &self.q, &self.r]
    }

    /// `p_+ − p_−` etc., i.e. the Bloch vector the triple was measured on.
    pub fn contrasts(&self) -> [f64; 3] {
        self.distributions().map(|d| d.probs()[0] - d.probs()[1])
    }

    pub fn contrast_norm(&self) -> f64 {
        self.contrasts().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_pure(&self) -> bool {
        self.contrast_norm() >= 1.0 - PURITY_TOLERANCE
    }
}

fn clamp_probability(x: f64) -> Result<f64> {
    if x < 0.0 {
        if x >= -CLAMP_TOLERANCE {
            return Ok(0.0);
        }
        return Err(Error::ProbabilityOutOfRange(x));
    }
    if x > 1.0 {
        if x <= 1.0 + CLAMP_TOLERANCE {
            return Ok(1.0);
        }
        return Err(Error::ProbabilityOutOfRange(x));
    }
    Ok(x)
}

/// `((1 + c)/2, (1 − c)/2)`.
pub fn outcome_pair(contrast: f64) -> Result<ProbabilityDistribution> {
    let plus = clamp_probability((1.0 + contrast) / 2.0)?;
    let minus = clamp_probability((1.0 - contrast) / 2.0)?;
    ProbabilityDistribution::pair(plus, minus)
}

/// Outcome distributions for `cos τ|0⟩ + e^{iφ} sin τ|1⟩`.
pub fn measure_pure(s: &PureStateAngles) -> PauliTriple {
    let (s2, c2) = (2.0 * s.tau()).sin_cos();
    let (sp, cp) = s.phi().sin_cos();
    let pair = |c: f64| outcome_pair(c).expect("trigonometric contrast within [-1, 1]");
    PauliTriple { p: pair(s2 * cp), q: pair(s2 * sp), r: pair(c2) }
}

pub fn measure_mixed(b: &BlochVector) -> Result<PauliTriple> {
    Ok(PauliTriple { p: outcome_pair(b.x())?, q: outcome_pair(b.y())?, r: outcome_pair(b.z())? })
}
