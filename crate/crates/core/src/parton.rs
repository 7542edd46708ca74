//! Observables of a boosted hadron in the parton regime.
//!
//! Under a boost of rapidity `η` the elliptic space-time distribution of the
//! quarks is stretched by `e^η` along one light-cone axis and contracted by
//! `e^{-η}` along the other. The internal oscillation period grows like
//! `e^η`, while an external signal crossing the hadron along the contracted
//! axis sees an interaction time shrinking like `e^{-η}`; their ratio
//! `e^{-2η}` is the decoherence measure computed here. Dropping the
//! unobserved time-separation variable costs entropy, exactly as tracing out
//! the second coupled oscillator does.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::covariant::{from_light_cone, LightConePoint, SpacetimePoint};
use crate::error::{ensure_finite, Error, Result};
use crate::rapidity::{BoostRapidity, Bridge};
use crate::reduced::entropy;

/// Proton rest energy in GeV.
pub const PROTON_MASS_GEV: f64 = 0.938272;

/// Beam energy and particle mass, both in GeV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeamSpec {
    pub energy: f64,
    pub mass: f64,
}

impl BeamSpec {
    pub fn new(energy: f64, mass: f64) -> Result<Self> {
        ensure_finite("energy", energy)?;
        ensure_finite("mass", mass)?;
        if mass <= 0.0 {
            return Err(Error::Domain(format!(
                "mass must be positive, got {mass} GeV"
            )));
        }
        if energy < mass {
            return Err(Error::Domain(format!(
                "energy {energy} GeV is below the rest energy {mass} GeV"
            )));
        }
        Ok(Self { energy, mass })
    }

    pub fn proton(energy: f64) -> Result<Self> {
        Self::new(energy, PROTON_MASS_GEV)
    }

    /// `γ = E / m`.
    pub fn gamma(&self) -> f64 {
        self.energy / self.mass
    }
}

/// Axes of the 1-σ ellipse of the boosted distribution. The major axis lies
/// along `u = (z + t)/√2`, the minor along `v = (z − t)/√2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeEllipse {
    pub eta: BoostRapidity,
    pub major: f64,
    pub minor: f64,
}

impl SqueezeEllipse {
    pub fn area(&self) -> f64 {
        PI * self.major * self.minor
    }
}

pub fn axis_scales(eta: BoostRapidity) -> SqueezeEllipse {
    let e = eta.value();
    SqueezeEllipse {
        eta,
        major: e.exp(),
        minor: (-e).exp(),
    }
}

/// Interaction time with an external signal over the internal oscillation
/// period, `e^{-2η}`.
pub fn interaction_time_ratio(eta: BoostRapidity) -> f64 {
    (-2.0 * eta.value()).exp()
}

/// `η = arccosh(E/m)`.
pub fn rapidity_from_energy(beam: &BeamSpec) -> Result<BoostRapidity> {
    let gamma = beam.gamma();
    if gamma.is_nan() || gamma < 1.0 {
        return Err(Error::Domain(format!("E/m = {gamma} is below 1")));
    }
    Ok(BoostRapidity::boost(gamma.acosh()))
}

/// Entropy gained by ignoring the time-separation variable: the coupled
/// oscillator entropy at the coupling rapidity `bridge` assigns to `eta`.
pub fn boost_entropy(eta: BoostRapidity, bridge: Bridge) -> f64 {
    entropy(eta.to_coupling(bridge))
}

/// `n` points on the 1-σ contour `e^{-2η} u² + e^{2η} v² = 1` of `|ψ_η|²`,
/// at equal steps of the parametric angle starting on the positive `u` axis.
pub fn ellipse_samples(eta: BoostRapidity, n: usize) -> Result<Vec<SpacetimePoint>> {
    if n < 8 {
        return Err(Error::Domain(format!(
            "need at least 8 ellipse samples, got {n}"
        )));
    }
    let s = axis_scales(eta);
    Ok((0..n)
        .map(|i| {
            let (sin, cos) = (TAU * i as f64 / n as f64).sin_cos();
            from_light_cone(LightConePoint::new(s.major * cos, s.minor * sin))
        })
        .collect())
}

/// The same contour for the momentum-energy wave function, as `(q_z, q₀)`
/// pairs. Uses `(q_z, q₀) = (−t, z)`, which maps `(u, v)` onto `(q_u, q_v)`.
pub fn momentum_ellipse_samples(eta: BoostRapidity, n: usize) -> Result<Vec<(f64, f64)>> {
    Ok(ellipse_samples(eta, n)?
        .into_iter()
        .map(|p| (-p.t, p.z))
        .collect())
}
