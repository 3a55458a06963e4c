use std::f64::consts::{FRAC_PI_4, FRAC_PI_8, LN_2};

use super::grid::{renyi_extremum, tsallis_extremum, GridSpec};
use super::oracle;
use super::report::{Comparison, VerificationReport};
use crate::bounds::{band_bounds, lower_bound, open_order, rho_hat, bound_order, BandPoint};
use crate::distributions::{renyi_entropy, EntropyOrder, ProbabilityDistribution};
use crate::qubit::{sample_mixed, Axis};
use crate::{Error, Result};

/// The relative gap `(B − A)/B` is claimed never to exceed this.
pub const RELATIVE_GAP_CLAIM: f64 = 0.025;

/// Sampled mixed states are shrunk by this factor to stay off the sphere.
pub const MIXED_RADIUS_CAP: f64 = 0.999;

/// Central-difference step.
pub const DERIVATIVE_STEP: f64 = 1e-6;

/// Derivatives this close to zero count as having either sign.
pub const SIGN_TOLERANCE: f64 = 1e-10;

/// Rounding slack when a grid extremum is compared one-sidedly with its bound.
const ROUNDING: f64 = 1e-12;

const BAND_ENDPOINT: f64 = 0.744;

#[derive(Debug, Clone, PartialEq)]
pub struct BandSweep {
    pub points: Vec<BandPoint>,
    pub reports: Vec<VerificationReport>,
}

/// Band table for `alphas` plus checks of its shape and of the grid maxima of
/// the rescaled averages against the upper bounds.
pub fn sweep_band(alphas: &[f64], g: GridSpec) -> Result<BandSweep> {
    if alphas.is_empty() {
        return Err(Error::ArgumentOutOfRange { name: "alpha count", value: 0.0 });
    }
    let mut points = Vec::with_capacity(alphas.len());
    let mut reports = Vec::new();
    for &alpha in alphas {
        let a = bound_order(EntropyOrder::new(alpha)?)?;
        let bp = band_bounds(a)?;
        let (r_max, i, j) = renyi_extremum(&g, a.value(), true);
        reports.push(
            VerificationReport::new(
                "band_renyi_max",
                a.value(),
                bp.b_upper,
                r_max / (3.0 * LN_2),
                Comparison::AtMost,
                ROUNDING,
            )
            .with_location(g.tau_at(i), g.phi_at(j))
            .with_grid(g),
        );
        let (t_max, i, j) = tsallis_extremum(&g, a.value(), true);
        reports.push(
            VerificationReport::new(
                "band_tsallis_max",
                a.value(),
                bp.a_upper,
                t_max / (3.0 * oracle::alpha_log_two(a.value())),
                Comparison::AtMost,
                ROUNDING,
            )
            .with_location(g.tau_at(i), g.phi_at(j))
            .with_grid(g),
        );
        points.push(bp);
    }

    let (worst, worst_gap) = points
        .iter()
        .map(|p| (p.alpha, p.relative_gap()))
        .fold((f64::NAN, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
    reports.push(
        VerificationReport::new(
            "band_relative_gap",
            worst,
            RELATIVE_GAP_CLAIM,
            worst_gap,
            Comparison::AtMost,
            0.0,
        )
        .with_detail("argmax_alpha", worst)
        .with_detail("points", points.len()),
    );

    let ordering = points
        .iter()
        .filter(|p| !(p.lower <= p.a_upper && p.a_upper <= p.b_upper))
        .count();
    reports.push(VerificationReport::new(
        "band_ordering",
        f64::NAN,
        0.0,
        ordering as f64,
        Comparison::Within,
        0.0,
    ));

    if points.len() > 1 {
        let mut sorted = points.clone();
        sorted.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
        for (name, column) in [
            ("band_b_decreasing", sorted.iter().map(|p| p.b_upper).collect::<Vec<_>>()),
            ("band_a_decreasing", sorted.iter().map(|p| p.a_upper).collect()),
        ] {
            let rises = column.windows(2).filter(|w| w[1] >= w[0]).count();
            reports.push(VerificationReport::new(
                name,
                f64::NAN,
                0.0,
                rises as f64,
                Comparison::Within,
                0.0,
            ));
        }
    }

    if let Some(p) = points.iter().find(|p| p.alpha == 1.0) {
        reports.push(
            VerificationReport::new(
                "band_endpoint_equal",
                1.0,
                p.b_upper,
                p.a_upper,
                Comparison::Within,
                1e-9,
            ),
        );
        reports.push(VerificationReport::new(
            "band_endpoint_value",
            1.0,
            BAND_ENDPOINT,
            p.b_upper,
            Comparison::Within,
            1e-3,
        ));
    }
    Ok(BandSweep { points, reports })
}

/// Mixed states sampled uniformly from the ball (radius capped at
/// [`MIXED_RADIUS_CAP`]) must stay strictly above `2 ln 2`, and each must obey
/// `S(ρ) ≥ λ₊ S(ψ₊) + λ₋ S(ψ₋)` for its spectral decomposition.
pub fn impurity_gap_scan(a: EntropyOrder, seed: u64, count: usize) -> Result<Vec<VerificationReport>> {
    let alpha = open_order(a)?.value();
    let samples = sample_mixed(seed, count)?;
    let mut min_gap = f64::INFINITY;
    let mut min_slack = f64::INFINITY;
    for b in &samples {
        let r = b.scaled(MIXED_RADIUS_CAP)?.components();
        let sum = oracle::renyi_sum_bloch(r, alpha);
        min_gap = min_gap.min(sum - lower_bound());

        let n = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        let dir = if n > 0.0 { [r[0] / n, r[1] / n, r[2] / n] } else { [0.0, 0.0, 1.0] };
        let plus = oracle::renyi_sum_bloch(dir, alpha);
        let minus = oracle::renyi_sum_bloch(dir.map(|c| -c), alpha);
        let chain = (1.0 + n) / 2.0 * plus + (1.0 - n) / 2.0 * minus;
        min_slack = min_slack.min(sum - chain);
    }
    Ok(vec![
        VerificationReport::new("impurity_min_gap", alpha, 0.0, min_gap, Comparison::Above, 0.0)
            .with_seed(seed)
            .with_detail("samples", count),
        VerificationReport::new(
            "impurity_concavity",
            alpha,
            0.0,
            min_slack,
            Comparison::AtLeast,
            ROUNDING,
        )
        .with_seed(seed)
        .with_detail("samples", count),
    ])
}

/// `a^α − b^α` given `d = a − b`, without cancellation.
fn pow_diff(b: f64, d: f64, alpha: f64) -> f64 {
    if b == 0.0 {
        return d.powf(alpha);
    }
    b.powf(alpha) * (alpha * (d / b).ln_1p()).exp_m1()
}

/// `Φ_α` of the outcome pair for contrast `c`.
fn phi_pair(c: f64, alpha: f64) -> f64 {
    oracle::power_sum(oracle::pair(c), alpha)
}

/// `Φ_α(c₁) − Φ_α(c₀)` given `dc = c₁ − c₀`.
fn phi_pair_diff(c0: f64, dc: f64, alpha: f64) -> f64 {
    let [p, m] = oracle::pair(c0);
    pow_diff(p, dc / 2.0, alpha) + pow_diff(m, -dc / 2.0, alpha)
}

/// Central difference of `F_α` along `φ`. The increments of the contrasts are
/// formed from product-to-sum identities so the difference of the two `F`
/// values carries no cancellation.
fn df_dphi(tau: f64, phi: f64, alpha: f64) -> f64 {
    let h = DERIVATIVE_STEP;
    let s = (2.0 * tau).sin();
    let x0 = s * (phi - h).cos();
    let y0 = s * (phi - h).sin();
    let dx = -2.0 * s * phi.sin() * h.sin();
    let dy = 2.0 * s * phi.cos() * h.sin();
    let fz = phi_pair((2.0 * tau).cos(), alpha);
    let d = phi_pair_diff(x0, dx, alpha) * phi_pair(s * (phi + h).sin(), alpha)
        + phi_pair(x0, alpha) * phi_pair_diff(y0, dy, alpha);
    fz * d / (2.0 * h)
}

/// Central difference of `F_α` along `τ` on the line `φ = 0`.
fn df_dtau_phi0(tau: f64, alpha: f64) -> f64 {
    let h = DERIVATIVE_STEP;
    let x0 = (2.0 * (tau - h)).sin();
    let z0 = (2.0 * (tau - h)).cos();
    let dx = 2.0 * (2.0 * tau).cos() * (2.0 * h).sin();
    let dz = -2.0 * (2.0 * tau).sin() * (2.0 * h).sin();
    let fy = phi_pair(0.0, alpha);
    let d = phi_pair_diff(x0, dx, alpha) * phi_pair((2.0 * (tau + h)).cos(), alpha)
        + phi_pair(x0, alpha) * phi_pair_diff(z0, dz, alpha);
    fy * d / (2.0 * h)
}

/// Low-discrepancy points in `[0, 1)²`.
fn r2_sequence(n: usize) -> impl Iterator<Item = (f64, f64)> {
    const PLASTIC: f64 = 1.324_717_957_244_746;
    let (a1, a2) = (1.0 / PLASTIC, 1.0 / (PLASTIC * PLASTIC));
    (0..n).map(move |k| ((0.5 + a1 * k as f64).fract(), (0.5 + a2 * k as f64).fract()))
}

/// Finite-difference sign checks of `F_α` on `D`:
/// `∂F/∂φ ≥ 0` inside and on `τ = π/4`, `∂F/∂φ = 0` on `τ = 0`, and along
/// `φ = 0` the sign of `∂F/∂τ` flips from `+` to `−` at `τ = π/8`.
pub fn derivative_sign_check(a: EntropyOrder, n_points: usize) -> Result<Vec<VerificationReport>> {
    let alpha = open_order(a)?.value();
    if n_points == 0 {
        return Err(Error::EmptySample);
    }
    let margin = 1e-3;
    let span = FRAC_PI_4 - 2.0 * margin;

    let mut worst = (f64::INFINITY, 0.0, 0.0);
    for (u, v) in r2_sequence(n_points) {
        let (tau, phi) = (margin + u * span, margin + v * span);
        let d = df_dphi(tau, phi, alpha);
        if d < worst.0 {
            worst = (d, tau, phi);
        }
    }
    let interior = VerificationReport::new(
        "dF_dphi_interior",
        alpha,
        0.0,
        worst.0,
        Comparison::AtLeast,
        SIGN_TOLERANCE,
    )
    .with_location(worst.1, worst.2)
    .with_detail("points", n_points);

    let boundary_phis = (0..n_points).map(|k| (k as f64 + 0.5) * FRAC_PI_4 / n_points as f64);
    let at_zero = boundary_phis
        .clone()
        .map(|phi| df_dphi(0.0, phi, alpha).abs())
        .fold(0.0, f64::max);
    let at_quarter = boundary_phis
        .map(|phi| df_dphi(FRAC_PI_4, phi, alpha))
        .fold(f64::INFINITY, f64::min);

    let mut flips = f64::INFINITY;
    let mut flip_at = 0.0;
    for i in 0..n_points {
        let tau = (i as f64 + 0.5) * FRAC_PI_4 / n_points as f64;
        if (tau - FRAC_PI_8).abs() < 1e-6 {
            continue;
        }
        let expected = if tau < FRAC_PI_8 { 1.0 } else { -1.0 };
        let signed = expected * df_dtau_phi0(tau, alpha);
        if signed < flips {
            flips = signed;
            flip_at = tau;
        }
    }

    let (mut lo, mut hi) = (FRAC_PI_8 - 0.1, FRAC_PI_8 + 0.1);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if df_dtau_phi0(mid, alpha) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);

    Ok(vec![
        interior,
        VerificationReport::new("dF_dphi_tau0", alpha, 0.0, at_zero, Comparison::Within, 1e-9),
        VerificationReport::new(
            "dF_dphi_tau_quarter",
            alpha,
            0.0,
            at_quarter,
            Comparison::AtLeast,
            SIGN_TOLERANCE,
        ),
        VerificationReport::new(
            "dF_dtau_sign_phi0",
            alpha,
            0.0,
            flips,
            Comparison::AtLeast,
            SIGN_TOLERANCE,
        )
        .with_location(flip_at, 0.0)
        .with_detail("points", n_points),
        VerificationReport::new("dF_dtau_root_phi0", alpha, FRAC_PI_8, root, Comparison::Within, 1e-4)
            .with_location(root, 0.0),
    ])
}

/// States `λ₊|ψ₊⟩⟨ψ₊| + λ₋|ψ₋⟩⟨ψ₋|` diagonal in a Pauli eigenbasis: the sum must be
/// `2 ln 2 + R_α({λ₊, λ₋})` and exceed `2 ln 2` unless `λ₊ ∈ {0, 1}`.
pub fn diagonal_family_check(a: EntropyOrder, lambdas: &[f64]) -> Result<Vec<VerificationReport>> {
    let a = bound_order(a)?;
    if lambdas.is_empty() {
        return Err(Error::EmptySample);
    }
    let alpha = a.value();
    let mut worst_err = (0.0, f64::NAN, Axis::X);
    let mut min_gap = (f64::INFINITY, f64::NAN);
    for &lambda in lambdas {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::ArgumentOutOfRange { name: "lambda", value: lambda });
        }
        let claimed =
            lower_bound() + renyi_entropy(&ProbabilityDistribution::pair(lambda, 1.0 - lambda)?, a);
        for axis in Axis::ALL {
            let r = axis.unit().map(|c| c * (2.0 * lambda - 1.0));
            let sum = oracle::renyi_sum_bloch(r, alpha);
            let err = (sum - claimed).abs();
            if err > worst_err.0 {
                worst_err = (err, lambda, axis);
            }
            let gap = sum - lower_bound();
            if lambda > 0.0 && lambda < 1.0 && gap < min_gap.0 {
                min_gap = (gap, lambda);
            }
        }
    }
    let mut out = vec![VerificationReport::new(
        "diagonal_family_sum",
        alpha,
        0.0,
        worst_err.0,
        Comparison::Within,
        ROUNDING,
    )
    .with_detail("worst_lambda", worst_err.1)
    .with_detail("worst_axis", worst_err.2)];
    if min_gap.0.is_finite() {
        out.push(
            VerificationReport::new("diagonal_family_gap", alpha, 0.0, min_gap.0, Comparison::Above, 0.0)
                .with_detail("worst_lambda", min_gap.1),
        );
    }
    Ok(out)
}

/// `3 ρ̂₁` from the Shannon branch against the oracle sum at `α = 1 − 10⁻⁴`.
pub fn shannon_limit_check() -> Result<VerificationReport> {
    let alpha = 1.0 - 1e-4;
    let claimed = 3.0 * rho_hat(EntropyOrder::ONE)?;
    let c = 1.0 / 3f64.sqrt();
    let observed = 3.0 * oracle::renyi(oracle::pair(c), alpha);
    Ok(VerificationReport::new("shannon_limit", alpha, claimed, observed, Comparison::Within, 1e-4))
}
