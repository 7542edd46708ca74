//! The reduced density matrix left after integrating out the second
//! oscillator, and the observables that measure how mixed it is.
//!
//! Tracing the coupled ground state over `x₂` gives a thermal-form density
//! matrix diagonal in the Hermite basis,
//!
//! ```text
//! ρ(x, x') = Σ_k p_k φ_k(x) φ_k(x'),   p_k = (1/cosh²(η/2)) tanh^{2k}(η/2),
//! ```
//!
//! so purity, entropy and temperature are all functions of `η` alone. The
//! series can be checked against direct quadrature of the partial trace.
//! Units: `ħ = k_B = 1`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::hermite::{hermite_derivatives, hermite_functions};
use crate::oscillator::{default_kmax, ground_state_amplitude, squeeze_ratio};
use crate::quadrature::Integrator;
use crate::rapidity::CouplingRapidity;

/// Eigen-weights of the reduced density matrix, truncated at `k_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedState {
    eta: CouplingRapidity,
    k_max: usize,
    weights: Vec<f64>,
}

impl ReducedState {
    pub fn new(eta: CouplingRapidity, k_max: usize) -> Self {
        let half = 0.5 * eta.value();
        let sech2 = 1.0 / half.cosh().powi(2);
        let t2 = half.tanh().powi(2);
        let mut weights = Vec::with_capacity(k_max + 1);
        let mut pow = 1.0;
        for _ in 0..=k_max {
            weights.push(sech2 * pow);
            pow *= t2;
        }
        Self {
            eta,
            k_max,
            weights,
        }
    }

    /// Truncated at [`default_kmax`].
    pub fn with_default_kmax(eta: CouplingRapidity) -> Self {
        Self::new(eta, default_kmax(eta))
    }

    pub fn eta(&self) -> CouplingRapidity {
        self.eta
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `1 − Σ_{k ≤ k_max} p_k`, the weight lost to truncation.
    pub fn trace_deficit(&self) -> f64 {
        // closed form of the geometric tail, exact up to rounding
        let t2 = squeeze_ratio(self.eta).powi(2);
        t2.powf(self.k_max as f64 + 1.0)
    }

    /// `ρ(x, x')` from the truncated eigen-expansion.
    pub fn density(&self, x: f64, xp: f64) -> f64 {
        let a = hermite_functions(x, self.k_max);
        if x == xp {
            return a.iter().zip(&self.weights).map(|(f, p)| p * f * f).sum();
        }
        let b = hermite_functions(xp, self.k_max);
        a.iter()
            .zip(&b)
            .zip(&self.weights)
            .map(|((fa, fb), p)| p * fa * fb)
            .sum()
    }

    /// `Σ p_k²` over the stored weights.
    pub fn purity_from_weights(&self) -> f64 {
        self.weights.iter().map(|p| p * p).sum()
    }

    /// `−Σ p_k ln p_k` over the stored weights.
    pub fn entropy_from_weights(&self) -> f64 {
        let half = 0.5 * self.eta.value();
        let ln_sech2 = -2.0 * half.cosh().ln();
        let ln_t2 = 2.0 * half.tanh().abs().ln();
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0.0)
            .map(|(k, &p)| {
                let ln_p = if k == 0 {
                    ln_sech2
                } else {
                    ln_sech2 + k as f64 * ln_t2
                };
                -p * ln_p
            })
            .sum()
    }

    /// `∫ ρ(x, x) dx` by adaptive quadrature.
    pub fn trace_quadrature(&self, integrator: &Integrator) -> Result<f64> {
        let l = diagonal_extent(self.eta);
        Ok(integrator.integrate(|x| self.density(x, x), -l, l)?.value)
    }

    /// `⟨x²⟩ = ∫ x² ρ(x, x) dx` by adaptive quadrature.
    pub fn position_variance_quadrature(&self, integrator: &Integrator) -> Result<f64> {
        let l = diagonal_extent(self.eta);
        Ok(integrator
            .integrate(|x| x * x * self.density(x, x), -l, l)?
            .value)
    }

    /// `⟨p²⟩ = ∫ [∂_x ∂_{x'} ρ(x, x')]_{x' = x} dx = ∫ Σ p_k φ_k'(x)² dx`.
    pub fn momentum_variance_quadrature(&self, integrator: &Integrator) -> Result<f64> {
        let l = diagonal_extent(self.eta);
        let weights = &self.weights;
        Ok(integrator
            .integrate(
                |x| {
                    hermite_derivatives(x, self.k_max)
                        .iter()
                        .zip(weights)
                        .map(|(d, p)| p * d * d)
                        .sum()
                },
                -l,
                l,
            )?
            .value)
    }
}

/// Half-width that holds the diagonal `ρ(x, x)`, a Gaussian of variance
/// `cosh η / 2`, down to `e^{-50}`.
fn diagonal_extent(eta: CouplingRapidity) -> f64 {
    10.0 * (0.5 * eta.value().abs().cosh()).sqrt() + 4.0
}

/// `Σ_{k ≤ k_max} p_k φ_k(x) φ_k(x')`.
pub fn density_series(state: &ReducedState, x: f64, xp: f64) -> f64 {
    state.density(x, xp)
}

/// Quadrature settings for the partial trace over `x₂` at these arguments:
/// the integrand is a Gaussian in `x₂` of width `1/sqrt(2 cosh η)` centred at
/// `tanh η (x + x')/2`, integrated over `|x₂| ≤ 6 e^{|η|/2} + |x + x'|/2`.
pub fn partial_trace_domain(eta: CouplingRapidity, x: f64, xp: f64) -> (f64, usize) {
    let e = eta.value().abs();
    let l = 6.0 * (0.5 * e).exp() + 0.5 * (x + xp).abs();
    let sigma = 1.0 / (2.0 * e.cosh()).sqrt();
    let panels = (l / sigma).ceil().max(1.0) as usize;
    (l, panels)
}

/// `ρ(x, x') = ∫ ψ_η(x, x₂) ψ_η(x', x₂) dx₂` by adaptive quadrature to an
/// absolute tolerance of `1e-10`.
pub fn density_quadrature(eta: CouplingRapidity, x: f64, xp: f64) -> Result<f64> {
    density_quadrature_with(eta, x, xp, &Integrator::default())
}

/// As [`density_quadrature`] with caller-chosen tolerances. The number of
/// initial panels is raised to resolve the integrand's width.
pub fn density_quadrature_with(
    eta: CouplingRapidity,
    x: f64,
    xp: f64,
    integrator: &Integrator,
) -> Result<f64> {
    let (l, panels) = partial_trace_domain(eta, x, xp);
    let q = integrator.with_initial_panels(integrator.initial_panels.max(panels));
    Ok(q.integrate(
        |x2| ground_state_amplitude(eta, x, x2) * ground_state_amplitude(eta, xp, x2),
        -l,
        l,
    )?
    .value)
}

/// `Tr ρ² = 1/cosh η`.
pub fn purity(eta: CouplingRapidity) -> f64 {
    1.0 / eta.value().cosh()
}

/// `Tr ρ² = (1/cosh(η/2))⁴ Σ_{k ≤ k_max} tanh^{4k}(η/2)`, summed term by term.
pub fn purity_series(eta: CouplingRapidity, k_max: usize) -> f64 {
    let half = 0.5 * eta.value();
    let t4 = half.tanh().powi(4);
    let mut pow = 1.0;
    let mut sum = 0.0;
    for _ in 0..=k_max {
        sum += pow;
        pow *= t4;
    }
    sum / half.cosh().powi(4)
}

/// Von Neumann entropy of the reduced state,
/// `cosh²(η/2) ln cosh²(η/2) − sinh²(η/2) ln sinh²(η/2)`.
///
/// Evaluated as `ln cosh²(η/2) + sinh²(η/2) ln(1 + 1/sinh²(η/2))`, the same
/// quantity without the cancellation between two large terms. Even in `η`.
pub fn entropy(eta: CouplingRapidity) -> f64 {
    let half = 0.5 * eta.value().abs();
    if half == 0.0 {
        return 0.0;
    }
    let s2 = half.sinh().powi(2);
    2.0 * half.cosh().ln() + s2 * (1.0 / s2).ln_1p()
}

/// Normal-mode frequency and the temperature at which a thermal oscillator
/// has the same density matrix: `tanh(η/2) = exp(−ω/T)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalMap {
    pub omega: f64,
    pub temperature: f64,
}

impl ThermalMap {
    /// `exp(−ω/T)`, equal to `tanh(|η|/2)` by construction.
    pub fn boltzmann_factor(&self) -> f64 {
        if self.temperature == 0.0 {
            0.0
        } else {
            (-self.omega / self.temperature).exp()
        }
    }

    /// Ratio `p_{k+1}/p_k` of consecutive eigen-weights. The weights go as
    /// `tanh^{2k}(η/2)`, so this is the square of [`Self::boltzmann_factor`],
    /// `exp(−2ω/T)`.
    pub fn weight_ratio(&self) -> f64 {
        self.boltzmann_factor().powi(2)
    }
}

fn check_omega(omega: f64) -> Result<f64> {
    ensure_finite("omega", omega)?;
    if omega <= 0.0 {
        return Err(Error::Domain(format!(
            "omega must be positive, got {omega}"
        )));
    }
    Ok(omega)
}

/// `T = ω / (−ln tanh(|η|/2))`. Zero coupling maps to `T = 0`; negative `η`
/// uses `|η|`, since every weight depends on `tanh²(η/2)`.
pub fn effective_temperature(eta: CouplingRapidity, omega: f64) -> Result<ThermalMap> {
    let omega = check_omega(omega)?;
    let e = ensure_finite("eta", eta.value())?.abs();
    if e == 0.0 {
        return Ok(ThermalMap {
            omega,
            temperature: 0.0,
        });
    }
    // ln tanh(η/2) = ln(1 − e^{−η}) − ln(1 + e^{−η})
    let q = (-e).exp();
    let neg_ln_tanh = q.ln_1p() - (-q).ln_1p();
    Ok(ThermalMap {
        omega,
        temperature: omega / neg_ln_tanh,
    })
}

/// Inverse of [`effective_temperature`]: `η = 2 artanh(exp(−ω/T)) ≥ 0`.
pub fn eta_from_temperature(temperature: f64, omega: f64) -> Result<CouplingRapidity> {
    let omega = check_omega(omega)?;
    ensure_finite("temperature", temperature)?;
    if temperature < 0.0 {
        return Err(Error::Domain(format!(
            "temperature must be non-negative, got {temperature}"
        )));
    }
    if temperature == 0.0 {
        return Ok(CouplingRapidity::coupling(0.0));
    }
    let r = omega / temperature;
    // 2 artanh(y) = ln(1 + y) − ln(1 − y), with 1 − y = −expm1(−r)
    let y = (-r).exp();
    Ok(CouplingRapidity::coupling(
        y.ln_1p() - (-(-r).exp_m1()).ln(),
    ))
}

/// `Δx Δp` of the reduced state, `cosh η / 2`.
///
/// Both variances equal `Σ p_k (k + ½) = ½ + sinh²(η/2)`; see
/// [`ReducedState::position_variance_quadrature`] and
/// [`ReducedState::momentum_variance_quadrature`] for the moment integrals.
pub fn uncertainty_product(eta: CouplingRapidity) -> f64 {
    0.5 * eta.value().cosh()
}
