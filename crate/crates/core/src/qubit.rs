//! Qubit states: the `(τ, φ)` angle form `cos τ|0⟩ + e^{iφ} sin τ|1⟩`, Bloch
//! vectors, spectral decompositions, Pauli eigenstates and seeded samplers.
//!
//! The Bloch vector is the working representation; every Pauli outcome
//! probability is affine in it.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Identifier of the generator behind [`sample_pure`] and [`sample_mixed`],
/// written into every seeded report. Bump the suffix if the sampling scheme changes.
pub const SAMPLER_ID: &str = "chacha8-v1";

/// Slack on the unit-ball constraint `|r|² ≤ 1`.
pub const BALL_TOLERANCE: f64 = 1e-12;

/// States with Bloch norm at or above `1 − PURITY_TOLERANCE` count as pure.
pub const PURITY_TOLERANCE: f64 = 1e-9;

/// Angles `(τ, φ)` of a pure state, canonicalized to `τ ∈ [0, π/2]`, `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureStateAngles {
    tau: f64,
    phi: f64,
}

impl PureStateAngles {
    /// Accepts any finite angles and maps them to the canonical representative
    /// of the same ray.
    pub fn new(tau: f64, phi: f64) -> Result<Self> {
        if !tau.is_finite() {
            return Err(Error::NonFinite("tau"));
        }
        if !phi.is_finite() {
            return Err(Error::NonFinite("phi"));
        }
        // τ ↦ τ + π flips the sign of both amplitudes (global phase -1).
        let mut tau = tau.rem_euclid(PI);
        let mut phi = phi;
        // cos τ < 0 < sin τ: multiply by -1, giving cos(π−τ)|0⟩ + e^{i(φ+π)} sin(π−τ)|1⟩.
        if tau > FRAC_PI_2 {
            tau = PI - tau;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self { tau, phi })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The orthogonal state, whose Bloch vector is the antipode.
    pub fn orthogonal(&self) -> Self {
        Self::new(FRAC_PI_2 - self.tau, self.phi + PI).expect("finite angles")
    }
}

/// `(r_x, r_y, r_z)` with `ρ = (I + r·σ)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    x: f64,
    y: f64,
    z: f64,
}

impl BlochVector {
    /// The completely mixed state `I/2`.
    pub const ZERO: BlochVector = BlochVector { x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite("Bloch component"));
        }
        let b = Self { x, y, z };
        if b.norm_squared() > 1.0 + BALL_TOLERANCE {
            return Err(Error::OutsideBlochBall(b.norm()));
        }
        Ok(b)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Component along a Pauli axis.
    pub fn along(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    pub fn norm_squared(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn is_pure(&self) -> bool {
        self.norm() >= 1.0 - PURITY_TOLERANCE
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(factor * self.x, factor * self.y, factor * self.z)
    }

    /// Angles of the pure state pointing along this vector; `None` at the origin.
    pub fn direction(&self) -> Option<PureStateAngles> {
        let rho = self.x.hypot(self.y);
        if rho == 0.0 && self.z == 0.0 {
            return None;
        }
        let tau = rho.atan2(self.z) / 2.0;
        let phi = self.y.atan2(self.x);
        Some(PureStateAngles::new(tau, phi).expect("finite angles"))
    }

    /// Eigen-decomposition `λ_+|ψ_+⟩⟨ψ_+| + λ_−|ψ_−⟩⟨ψ_−|`, with `λ_± = (1 ± |r|)/2`
    /// and `ψ_+` along `r`. The completely mixed state gets `ψ_+ = |0⟩`.
    pub fn spectral(&self) -> SpectralDecomposition {
        let norm = self.norm().min(1.0);
        let psi_plus = self
            .direction()
            .unwrap_or_else(|| pauli_eigenstate(Axis::Z, Sign::Plus));
        SpectralDecomposition::from_eigenstate((1.0 + norm) / 2.0, psi_plus)
            .expect("eigenvalue in [0, 1]")
    }
}

/// `ρ = λ_+|ψ_+⟩⟨ψ_+| + λ_−|ψ_−⟩⟨ψ_−|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDecomposition {
    lambda_plus: f64,
    lambda_minus: f64,
    psi_plus: PureStateAngles,
    psi_minus: PureStateAngles,
}

impl SpectralDecomposition {
    pub fn new(
        lambda_plus: f64,
        lambda_minus: f64,
        psi_plus: PureStateAngles,
        psi_minus: PureStateAngles,
    ) -> Result<Self> {
        for (name, l) in [("lambda_plus", lambda_plus), ("lambda_minus", lambda_minus)] {
            if !(0.0..=1.0).contains(&l) {
                return Err(Error::InvalidSpectral(format!("{name} = {l} outside [0, 1]")));
            }
        }
        if (lambda_plus + lambda_minus - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidSpectral(format!(
                "eigenvalues sum to {}",
                lambda_plus + lambda_minus
            )));
        }
        let a = angles_to_bloch(&psi_plus);
        let b = angles_to_bloch(&psi_minus);
        let gap = (a.x + b.x).hypot(a.y + b.y).hypot(a.z + b.z);
        if gap > 1e-9 {
            return Err(Error::InvalidSpectral(format!(
                "eigenstates are not orthogonal (antipodal defect {gap:e})"
            )));
        }
        Ok(Self { lambda_plus, lambda_minus, psi_plus, psi_minus })
    }

    /// Builds the decomposition from `λ_+` and `ψ_+`; `ψ_−` is the orthogonal state.
    pub fn from_eigenstate(lambda_plus: f64, psi_plus: PureStateAngles) -> Result<Self> {
        Self::new(lambda_plus, 1.0 - lambda_plus, psi_plus, psi_plus.orthogonal())
    }

    pub fn lambda_plus(&self) -> f64 {
        self.lambda_plus
    }

    pub fn lambda_minus(&self) -> f64 {
        self.lambda_minus
    }

    pub fn psi_plus(&self) -> PureStateAngles {
        self.psi_plus
    }

    pub fn psi_minus(&self) -> PureStateAngles {
        self.psi_minus
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn unit(self) -> [f64; 3] {
        match self {
            Axis::X => [1.0, 0.0, 0.0],
            Axis::Y => [0.0, 1.0, 0.0],
            Axis::Z => [0.0, 0.0, 1.0],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `(sin 2τ cos φ, sin 2τ sin φ, cos 2τ)`.
pub fn angles_to_bloch(s: &PureStateAngles) -> BlochVector {
    let (s2, c2) = (2.0 * s.tau).sin_cos();
    let (sp, cp) = s.phi.sin_cos();
    BlochVector { x: s2 * cp, y: s2 * sp, z: c2 }
}

/// `(λ_+ − λ_−)` times the Bloch vector of `ψ_+`.
pub fn spectral_to_bloch(d: &SpectralDecomposition) -> BlochVector {
    let b = angles_to_bloch(&d.psi_plus);
    let w = d.lambda_plus - d.lambda_minus;
    BlochVector { x: w * b.x, y: w * b.y, z: w * b.z }
}

/// The eigenstate of `σ_axis` with eigenvalue `sign`.
pub fn pauli_eigenstate(axis: Axis, sign: Sign) -> PureStateAngles {
    let (tau, phi) = match (axis, sign) {
        (Axis::Z, Sign::Plus) => (0.0, 0.0),
        (Axis::Z, Sign::Minus) => (FRAC_PI_2, 0.0),
        (Axis::X, Sign::Plus) => (FRAC_PI_4, 0.0),
        (Axis::X, Sign::Minus) => (FRAC_PI_4, PI),
        (Axis::Y, Sign::Plus) => (FRAC_PI_4, FRAC_PI_2),
        (Axis::Y, Sign::Minus) => (FRAC_PI_4, 3.0 * FRAC_PI_2),
    };
    PureStateAngles { tau, phi }
}

/// `count` Haar-random pure states: `cos 2τ` uniform on `[−1, 1]`, `φ` uniform on `[0, 2π)`.
pub fn sample_pure(seed: u64, count: usize) -> Result<Vec<PureStateAngles>> {
    if count == 0 {
        return Err(Error::EmptySample);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let cos2tau: f64 = 2.0 * rng.random::<f64>() - 1.0;
            let phi = TAU * rng.random::<f64>();
            PureStateAngles::new(cos2tau.acos() / 2.0, phi).expect("finite angles")
        })
        .collect())
}

/// `count` Bloch vectors uniform in the open unit ball.
pub fn sample_mixed(seed: u64, count: usize) -> Result<Vec<BlochVector>> {
    if count == 0 {
        return Err(Error::EmptySample);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let z: f64 = 2.0 * rng.random::<f64>() - 1.0;
        let phi = TAU * rng.random::<f64>();
        let radius = rng.random::<f64>().cbrt();
        let rho = (1.0 - z * z).max(0.0).sqrt();
        let (sp, cp) = phi.sin_cos();
        let b = BlochVector { x: radius * rho * cp, y: radius * rho * sp, z: radius * z };
        // cube roots of values just below 1 can round up to the sphere
        if b.norm_squared() < 1.0 {
            out.push(b);
        }
    }
    Ok(out)
}
