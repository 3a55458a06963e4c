//! Entropic sums evaluated straight from the state: probabilities from the Born
//! rule, then powers, then logarithms. Plain left-to-right arithmetic, no
//! compensated sums, no `expm1` rewrites, no shared code with the library path.

use std::f64::consts::LN_2;

const SHANNON_WINDOW: f64 = 1e-9;

fn is_shannon(alpha: f64) -> bool {
    (alpha - 1.0).abs() <= SHANNON_WINDOW
}

/// Outcome pair `((1 + c)/2, (1 − c)/2)` for a Pauli expectation value `c`.
pub fn pair(c: f64) -> [f64; 2] {
    [(1.0 + c) / 2.0, (1.0 - c) / 2.0]
}

/// Pauli expectation values `⟨σx⟩, ⟨σy⟩, ⟨σz⟩` of `cos τ|0⟩ + e^{iφ} sin τ|1⟩`.
pub fn expectations(tau: f64, phi: f64) -> [f64; 3] {
    let s = (2.0 * tau).sin();
    [s * phi.cos(), s * phi.sin(), (2.0 * tau).cos()]
}

/// `Σ p^α` over the positive entries.
pub fn power_sum(p: [f64; 2], alpha: f64) -> f64 {
    let mut s = 0.0;
    for x in p {
        if x > 0.0 {
            s += x.powf(alpha);
        }
    }
    s
}

pub fn shannon(p: [f64; 2]) -> f64 {
    let mut h = 0.0;
    for x in p {
        if x > 0.0 {
            h -= x * x.ln();
        }
    }
    h
}

pub fn renyi(p: [f64; 2], alpha: f64) -> f64 {
    if is_shannon(alpha) {
        shannon(p)
    } else {
        power_sum(p, alpha).ln() / (1.0 - alpha)
    }
}

pub fn tsallis(p: [f64; 2], alpha: f64) -> f64 {
    if is_shannon(alpha) {
        shannon(p)
    } else {
        (power_sum(p, alpha) - 1.0) / (1.0 - alpha)
    }
}

/// `ln_α 2`.
pub fn alpha_log_two(alpha: f64) -> f64 {
    if is_shannon(alpha) {
        LN_2
    } else {
        (2f64.powf(1.0 - alpha) - 1.0) / (1.0 - alpha)
    }
}

/// Rényi sum over the three Pauli measurements of the state with Bloch vector `b`.
pub fn renyi_sum_bloch(b: [f64; 3], alpha: f64) -> f64 {
    b.iter().map(|&c| renyi(pair(c), alpha)).sum()
}

pub fn tsallis_sum_bloch(b: [f64; 3], alpha: f64) -> f64 {
    b.iter().map(|&c| tsallis(pair(c), alpha)).sum()
}

pub fn renyi_sum(tau: f64, phi: f64, alpha: f64) -> f64 {
    renyi_sum_bloch(expectations(tau, phi), alpha)
}

pub fn tsallis_sum(tau: f64, phi: f64, alpha: f64) -> f64 {
    tsallis_sum_bloch(expectations(tau, phi), alpha)
}

/// `F_α(τ, φ) = Φ_α(p) Φ_α(q) Φ_α(r)`.
pub fn big_f(tau: f64, phi: f64, alpha: f64) -> f64 {
    expectations(tau, phi).iter().map(|&c| power_sum(pair(c), alpha)).product()
}
