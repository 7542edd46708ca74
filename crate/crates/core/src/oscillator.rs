//! Two identical harmonic oscillators coupled by a spring.
//!
//! `H = (p₁² + p₂²)/2m + ½{K(x₁² + x₂²) + 2C x₁x₂}` separates under the 45°
//! rotation `y₁ = (x₁ − x₂)/√2`, `y₂ = (x₁ + x₂)/√2`. The coupling strength
//! is summarized by `e^η = sqrt((K + C)/(K − C))`, and in units where
//! `(mK)^{1/4} = 1` the ground state is the squeezed Gaussian
//! `ψ_η = π^{-1/2} exp{−(e^η y₁² + e^{-η} y₂²)/2}`.
//!
//! Expanded in products of single-oscillator eigenfunctions the ground state
//! is diagonal,
//!
//! ```text
//! ψ_η(x₁, x₂) = Σ_k c_k φ_k(x₁) φ_k(x₂),   c_k = tanh^k(η/2) / cosh(η/2),
//! ```
//!
//! with `Σ c_k² = 1`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::hermite::hermite_functions;
use crate::rapidity::CouplingRapidity;

/// Hard ceiling on automatically chosen series orders.
pub const MAX_KMAX: usize = 100_000;

/// Tail weight the automatic truncation order aims for.
pub const SERIES_TAIL_TARGET: f64 = 1e-16;

/// Mass, spring constant `K` and coupling constant `C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoupledSystem {
    mass: f64,
    spring_k: f64,
    coupling_c: f64,
}

impl CoupledSystem {
    pub fn new(mass: f64, spring_k: f64, coupling_c: f64) -> Result<Self> {
        ensure_finite("mass", mass)?;
        ensure_finite("spring constant", spring_k)?;
        ensure_finite("coupling constant", coupling_c)?;
        if mass <= 0.0 {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        if spring_k <= 0.0 {
            return Err(Error::Domain(format!(
                "spring constant must be positive, got {spring_k}"
            )));
        }
        if coupling_c.abs() >= spring_k {
            return Err(Error::Domain(format!(
                "|C| = {} must be below K = {spring_k}; a normal-mode frequency vanishes",
                coupling_c.abs()
            )));
        }
        Ok(Self {
            mass,
            spring_k,
            coupling_c,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn spring_k(&self) -> f64 {
        self.spring_k
    }

    pub fn coupling_c(&self) -> f64 {
        self.coupling_c
    }

    /// Stiffnesses of the `y₁` and `y₂` modes: `K − C` and `K + C`.
    pub fn normal_mode_stiffness(&self) -> (f64, f64) {
        (
            self.spring_k - self.coupling_c,
            self.spring_k + self.coupling_c,
        )
    }

    /// Angular frequencies `sqrt(k_i / m)` of the two normal modes.
    pub fn normal_mode_frequencies(&self) -> (f64, f64) {
        let (k1, k2) = self.normal_mode_stiffness();
        ((k1 / self.mass).sqrt(), (k2 / self.mass).sqrt())
    }

    /// Energy in the original coordinates.
    pub fn energy(&self, x1: f64, x2: f64, p1: f64, p2: f64) -> f64 {
        let kinetic = (p1 * p1 + p2 * p2) / (2.0 * self.mass);
        let potential =
            0.5 * (self.spring_k * (x1 * x1 + x2 * x2) + 2.0 * self.coupling_c * x1 * x2);
        kinetic + potential
    }

    /// Energy in normal coordinates, with the potential written through the
    /// coupling rapidity: `K ∓ C = sqrt(K² − C²) e^{∓η}`. The momenta are the
    /// normal-mode momenta; the rotation leaves the kinetic term unchanged.
    pub fn energy_normal(&self, y: NormalCoords, p1: f64, p2: f64) -> f64 {
        let eta = coupling_eta(self).value();
        let k0 = (self.spring_k * self.spring_k - self.coupling_c * self.coupling_c).sqrt();
        let kinetic = (p1 * p1 + p2 * p2) / (2.0 * self.mass);
        kinetic + 0.5 * k0 * ((-eta).exp() * y.y1 * y.y1 + eta.exp() * y.y2 * y.y2)
    }
}

/// `η = ln sqrt((K + C)/(K − C))`, with the sign of `C`.
pub fn coupling_eta(system: &CoupledSystem) -> CouplingRapidity {
    // atanh(C/K) == ½ ln((K+C)/(K−C)) without cancellation at small C
    CouplingRapidity::coupling((system.coupling_c / system.spring_k).atanh())
}

/// Coordinates after the 45° rotation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalCoords {
    pub y1: f64,
    pub y2: f64,
}

impl NormalCoords {
    /// Back to `(x₁, x₂)`.
    pub fn to_original(self) -> (f64, f64) {
        (
            FRAC_1_SQRT_2 * (self.y2 + self.y1),
            FRAC_1_SQRT_2 * (self.y2 - self.y1),
        )
    }
}

pub fn to_normal_coords(x1: f64, x2: f64) -> NormalCoords {
    NormalCoords {
        y1: FRAC_1_SQRT_2 * (x1 - x2),
        y2: FRAC_1_SQRT_2 * (x1 + x2),
    }
}

/// Closed-form ground state at coupling `eta`, dimensionless coordinates.
pub fn ground_state_amplitude(eta: CouplingRapidity, x1: f64, x2: f64) -> f64 {
    let y = to_normal_coords(x1, x2);
    let e = eta.value().exp();
    PI.powf(-0.5) * (-0.5 * (e * y.y1 * y.y1 + y.y2 * y.y2 / e)).exp()
}

/// `tanh(η/2)`.
pub(crate) fn squeeze_ratio(eta: CouplingRapidity) -> f64 {
    (0.5 * eta.value()).tanh()
}

/// Schmidt amplitude `c_k = tanh^k(η/2) / cosh(η/2)`.
pub fn schmidt_weight(eta: CouplingRapidity, k: usize) -> f64 {
    let t = squeeze_ratio(eta);
    let pow = if k == 0 {
        1.0
    } else {
        t.powi(k.min(i32::MAX as usize) as i32)
    };
    pow / (0.5 * eta.value()).cosh()
}

/// Truncation order used when the caller does not pick one.
///
/// At least `ceil(30 + 20|η|)`, raised until the discarded weight
/// `tanh^{2(K+1)}(η/2)` is below [`SERIES_TAIL_TARGET`], and capped at
/// [`MAX_KMAX`].
pub fn default_kmax(eta: CouplingRapidity) -> usize {
    let eta_abs = eta.value().abs();
    if !eta_abs.is_finite() {
        return MAX_KMAX;
    }
    let floor = (30.0 + 20.0 * eta_abs).ceil();
    let t2 = squeeze_ratio(eta).powi(2);
    let by_tail = if t2 >= 1.0 {
        f64::INFINITY
    } else if t2 > 0.0 {
        (SERIES_TAIL_TARGET.ln() / t2.ln()).ceil()
    } else {
        0.0
    };
    let k = floor.max(by_tail);
    if k >= MAX_KMAX as f64 {
        MAX_KMAX
    } else {
        k as usize
    }
}

/// `Σ_{k ≤ k_max} c_k φ_k(x₁) φ_k(x₂)`.
pub fn schmidt_series(eta: CouplingRapidity, k_max: usize, x1: f64, x2: f64) -> f64 {
    let t = squeeze_ratio(eta);
    let a = hermite_functions(x1, k_max);
    let b = hermite_functions(x2, k_max);
    let mut pow = 1.0;
    let mut sum = 0.0;
    for (fa, fb) in a.iter().zip(&b) {
        sum += pow * fa * fb;
        pow *= t;
    }
    sum / (0.5 * eta.value()).cosh()
}
