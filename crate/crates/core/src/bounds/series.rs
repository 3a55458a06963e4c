//! The auxiliary functions
//!
//! ```text
//! f_α(u) = ((1 − u)^{α−1} − (1 + u)^{α−1}) / u
//! g_α(u) = (1 + u)^α + (1 − u)^α
//! ```
//!
//! and their even power series about `u = 0`:
//!
//! ```text
//! f_α(u) = 2(1 − α) + 2 Σ_{k≥1} C(2k+1−α, 2k+1) u^{2k}
//! g_α(u) = 2 − 2 Σ_{k≥1} c_{2k} u^{2k},   c_{2k} = α (2k−1−α)···(1−α) / (2k)!
//! ```
//!
//! Every series coefficient is positive for `α ∈ (0, 1)`, so `f_α` increases and
//! `g_α` decreases on `[0, 1]`, and `f_α/g_α` increases. The sign of `∂F_α/∂φ`
//! and of `∂F_α(τ, 0)/∂τ` is governed by that ratio.

use super::bound_order;
use crate::distributions::EntropyOrder;
use crate::{Error, Result};

/// Below this `f_α` is evaluated from its series.
pub const SERIES_SWITCH: f64 = 1e-4;

/// Number of series terms past the constant used below [`SERIES_SWITCH`] (through `u^10`).
pub const SWITCH_TERMS: usize = 5;

fn check_u(u: f64, upper_open: bool) -> Result<()> {
    let ok = if upper_open { (0.0..1.0).contains(&u) } else { (0.0..=1.0).contains(&u) };
    if ok {
        Ok(())
    } else {
        Err(Error::ArgumentOutOfRange { name: "u", value: u })
    }
}

/// `f_α(u)` for `u ∈ [0, 1)`; `u = 1` is a pole of `(1 − u)^{α−1}`.
pub fn f_func(u: f64, a: EntropyOrder) -> Result<f64> {
    let a = bound_order(a)?;
    check_u(u, true)?;
    if a.is_one() {
        return Ok(0.0);
    }
    if u < SERIES_SWITCH {
        return f_series(u, a, SWITCH_TERMS);
    }
    // (e^b − e^c)/u with b, c the log-powers; written with expm1 so the
    // difference keeps its relative precision for moderate u.
    let e = a.value() - 1.0;
    let b = e * (-u).ln_1p();
    let c = e * u.ln_1p();
    Ok(-b.exp() * (c - b).exp_m1() / u)
}

/// `g_α(u)` for `u ∈ [0, 1]`.
pub fn g_func(u: f64, a: EntropyOrder) -> Result<f64> {
    let a = bound_order(a)?;
    check_u(u, false)?;
    let alpha = a.value();
    Ok((1.0 + u).powf(alpha) + (1.0 - u).powf(alpha))
}

/// `f_α(u) / g_α(u)`.
pub fn f_over_g(u: f64, a: EntropyOrder) -> Result<f64> {
    Ok(f_func(u, a)? / g_func(u, a)?)
}

/// `2·C(2k+1−α, 2k+1)` for `k = 1..=k_max`, via the rising product
/// `(2k+1−α)···(2−α)(1−α)/(2k+1)!`.
pub fn series_coeffs_f(a: EntropyOrder, k_max: usize) -> Result<Vec<f64>> {
    let a = bound_order(a)?;
    if k_max == 0 {
        return Err(Error::ArgumentOutOfRange { name: "k_max", value: 0.0 });
    }
    let alpha = a.value();
    let mut binom = a.one_minus();
    let mut out = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let (m, n) = ((2 * k) as f64, (2 * k + 1) as f64);
        binom *= (m - alpha) * (n - alpha) / (m * n);
        out.push(2.0 * binom);
    }
    Ok(out)
}

/// `c_{2k} = α (2k−1−α)···(1−α) / (2k)!` for `k = 1..=k_max`.
pub fn series_coeffs_g(a: EntropyOrder, k_max: usize) -> Result<Vec<f64>> {
    let a = bound_order(a)?;
    if k_max == 0 {
        return Err(Error::ArgumentOutOfRange { name: "k_max", value: 0.0 });
    }
    let alpha = a.value();
    let mut c = alpha * a.one_minus() / 2.0;
    let mut out = Vec::with_capacity(k_max);
    out.push(c);
    for k in 2..=k_max {
        let (m, n) = ((2 * k - 2) as f64, (2 * k - 1) as f64);
        c *= (m - alpha) * (n - alpha) / (n * (2 * k) as f64);
        out.push(c);
    }
    Ok(out)
}

/// Partial sum of the `f_α` series through `u^{2·terms}`.
pub fn f_series(u: f64, a: EntropyOrder, terms: usize) -> Result<f64> {
    let a = bound_order(a)?;
    let mut sum = 2.0 * a.one_minus();
    if terms == 0 {
        return Ok(sum);
    }
    let u2 = u * u;
    let mut power = 1.0;
    for c in series_coeffs_f(a, terms)? {
        power *= u2;
        sum += c * power;
    }
    Ok(sum)
}

/// Partial sum of the `g_α` series through `u^{2·terms}`.
pub fn g_series(u: f64, a: EntropyOrder, terms: usize) -> Result<f64> {
    let a = bound_order(a)?;
    if terms == 0 {
        return Ok(2.0);
    }
    let u2 = u * u;
    let mut power = 1.0;
    let mut tail = 0.0;
    for c in series_coeffs_g(a, terms)? {
        power *= u2;
        tail += c * power;
    }
    Ok(2.0 - 2.0 * tail)
}
