//! Classification of a measured triple against the lower and pure-state upper bounds.

use std::fmt;

use super::{entropic_sum_renyi, lower_bound, rho_hat, saturating_pair, bound_order};
use crate::distributions::EntropyOrder;
use crate::pauli_measure::PauliTriple;
use crate::qubit::Axis;
use crate::{Error, Result};

/// Default saturation tolerance, in nats.
pub const DEFAULT_SATURATION_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaturationKind {
    LowerSaturated,
    UpperSaturated,
    Interior,
}

impl fmt::Display for SaturationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SaturationKind::LowerSaturated => "lower-saturated",
            SaturationKind::UpperSaturated => "upper-saturated",
            SaturationKind::Interior => "interior",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaturationReport {
    pub kind: SaturationKind,
    /// The deterministic measurement when the lower bound is reached.
    pub witness_axis: Option<Axis>,
    /// Distance to the bound in nats, floored at zero.
    pub gap: f64,
}

fn check_tolerance(tol: f64) -> Result<()> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(Error::ArgumentOutOfRange { name: "tol", value: tol })
    }
}

/// Compares the Rényi sum with `2 ln 2`.
///
/// Within `tol` of the bound exactly one distribution must be deterministic
/// (smaller probability at most `tol`) and the other two uniform. For a pure
/// state the squared deviations from 1/2 of the two uniform ones sum to
/// `p_min (1 − p_min)`, so they are checked against `√tol`.
pub fn check_lower(t: &PauliTriple, a: EntropyOrder, tol: f64) -> Result<SaturationReport> {
    let a = bound_order(a)?;
    check_tolerance(tol)?;
    let gap = entropic_sum_renyi(t, a)? - lower_bound();
    if gap < -tol {
        return Err(Error::BoundViolated { bound: "lower", excess: -gap });
    }
    if gap > tol {
        return Ok(SaturationReport { kind: SaturationKind::Interior, witness_axis: None, gap });
    }
    let deterministic: Vec<Axis> =
        Axis::ALL.into_iter().filter(|&ax| t.get(ax).min_prob() <= tol).collect();
    let uniform_tol = tol.sqrt();
    let [axis] = deterministic[..] else {
        return Err(Error::EqualityConditionViolated(format!(
            "{} deterministic distributions at gap {gap:e}",
            deterministic.len()
        )));
    };
    for other in Axis::ALL.into_iter().filter(|&ax| ax != axis) {
        let dev = (t.get(other).probs()[0] - 0.5).abs();
        if dev > uniform_tol {
            return Err(Error::EqualityConditionViolated(format!(
                "sigma_{other} distribution deviates from uniform by {dev:e}"
            )));
        }
    }
    Ok(SaturationReport {
        kind: SaturationKind::LowerSaturated,
        witness_axis: Some(axis),
        gap: gap.max(0.0),
    })
}

/// Allowed deviation of each outcome probability from `(1 + 1/√3)/2` when the
/// upper bound is met within `tol`.
///
/// Near the maximizer the gap grows quadratically, `gap ≥ κ·δ²`, with a
/// curvature `κ` that shrinks like `α` for small orders; `3.6·min(α, 1/4)` is a
/// floor for it over `(0, 1]`. A factor of two is applied on top.
pub fn upper_pattern_tolerance(tol: f64, a: EntropyOrder) -> f64 {
    2.0 * (tol / (3.6 * a.value().min(0.25))).sqrt()
}

/// Compares the Rényi sum of a pure-state triple with `3 ρ̂_α`.
pub fn check_upper(t: &PauliTriple, a: EntropyOrder, tol: f64) -> Result<SaturationReport> {
    let a = bound_order(a)?;
    check_tolerance(tol)?;
    if !t.is_pure() {
        let n = t.contrast_norm();
        return Err(Error::NotPure(n * n));
    }
    let gap = 3.0 * rho_hat(a)? - entropic_sum_renyi(t, a)?;
    if gap < -tol {
        return Err(Error::BoundViolated { bound: "pure-state upper", excess: -gap });
    }
    if gap > tol {
        return Ok(SaturationReport { kind: SaturationKind::Interior, witness_axis: None, gap });
    }
    let target = saturating_pair().probs()[0];
    let pattern_tol = upper_pattern_tolerance(tol, a);
    for axis in Axis::ALL {
        let dev = (t.get(axis).max_prob() - target).abs();
        if dev > pattern_tol {
            return Err(Error::EqualityConditionViolated(format!(
                "sigma_{axis} distribution is {dev:e} away from (1 ± 1/√3)/2"
            )));
        }
    }
    Ok(SaturationReport {
        kind: SaturationKind::UpperSaturated,
        witness_axis: None,
        gap: gap.max(0.0),
    })
}
