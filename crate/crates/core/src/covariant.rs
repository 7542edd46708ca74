//! Light-cone kinematics and the Lorentz-squeezed covariant oscillator.
//!
//! Units `c = 1`, metric `(+, −)` on the `(t, z)` plane; transverse
//! coordinates are dropped throughout. A boost along `z` acts on the
//! light-cone variables `u = (z + t)/√2`, `v = (z − t)/√2` as the squeeze
//! `u → e^η u`, `v → e^{-η} v`, and turns the ground-state Gaussian
//! `π^{-1/2} exp{−(z² + t²)/2}` into
//!
//! ```text
//! ψ_η(z, t) = π^{-1/2} exp{−(e^{-2η} u² + e^{2η} v²)/2}.
//! ```
//!
//! The momentum-energy wave function has the same form in
//! `q_u = (q₀ − q_z)/√2`, `q_v = (q₀ + q_z)/√2`. Note the opposite sign of
//! `q_z` against `z` in the light-cone combinations: it is what makes the
//! ordinary two-dimensional Fourier transform of `ψ_η` land on the same `η`.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::quadrature::Integrator;
use crate::rapidity::BoostRapidity;

/// Space-time or energy-momentum four-vector `(t, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    /// Minkowski square `t² − x² − y² − z²`.
    pub fn minkowski_square(&self) -> f64 {
        self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.t * s, self.x * s, self.y * s, self.z * s)
    }
}

/// Point in the longitudinal `(z, t)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub z: f64,
    pub t: f64,
}

impl SpacetimePoint {
    pub const fn new(z: f64, t: f64) -> Self {
        Self { z, t }
    }

    /// `z² − t²`.
    pub fn interval(&self) -> f64 {
        self.z * self.z - self.t * self.t
    }
}

/// Light-cone coordinates `u = (z + t)/√2`, `v = (z − t)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl LightConePoint {
    pub const fn new(u: f64, v: f64) -> Self {
        Self { u, v }
    }
}

pub fn lorentz_boost(p: SpacetimePoint, eta: BoostRapidity) -> SpacetimePoint {
    let (sh, ch) = (eta.value().sinh(), eta.value().cosh());
    SpacetimePoint {
        z: p.z * ch + p.t * sh,
        t: p.z * sh + p.t * ch,
    }
}

pub fn to_light_cone(p: SpacetimePoint) -> LightConePoint {
    LightConePoint {
        u: FRAC_1_SQRT_2 * (p.z + p.t),
        v: FRAC_1_SQRT_2 * (p.z - p.t),
    }
}

pub fn from_light_cone(p: LightConePoint) -> SpacetimePoint {
    SpacetimePoint {
        z: FRAC_1_SQRT_2 * (p.u + p.v),
        t: FRAC_1_SQRT_2 * (p.u - p.v),
    }
}

/// The boost in light-cone form: `u → e^η u`, `v → e^{-η} v`.
pub fn boost_light_cone(p: LightConePoint, eta: BoostRapidity) -> LightConePoint {
    let e = eta.value().exp();
    LightConePoint {
        u: p.u * e,
        v: p.v / e,
    }
}

/// Space-time positions of the two quarks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarkPair {
    pub x_a: FourVector,
    pub x_b: FourVector,
}

/// Hadron coordinate `X = (x_a + x_b)/2` and quark separation
/// `x = (x_a − x_b)/(2√2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HadronCoords {
    pub center: FourVector,
    pub separation: FourVector,
}

impl HadronCoords {
    /// `x_a = X + √2 x`, `x_b = X − √2 x`.
    pub fn to_quark_pair(&self) -> QuarkPair {
        let d = self.separation * SQRT_2;
        QuarkPair {
            x_a: self.center + d,
            x_b: self.center - d,
        }
    }
}

pub fn hadron_variables(pair: &QuarkPair) -> HadronCoords {
    HadronCoords {
        center: (pair.x_a + pair.x_b) * 0.5,
        separation: (pair.x_a - pair.x_b) * (0.5 * FRAC_1_SQRT_2),
    }
}

/// Four-momenta of the two quarks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentumPair {
    pub p_a: FourVector,
    pub p_b: FourVector,
}

/// `P = p_a + p_b`, `q = √2 (p_a − p_b)` and the light-cone components of
/// `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentumVariables {
    pub total: FourVector,
    pub separation: FourVector,
    pub q_u: f64,
    pub q_v: f64,
}

pub fn momentum_variables(pair: &MomentumPair) -> MomentumVariables {
    let q = (pair.p_a - pair.p_b) * SQRT_2;
    let (q_u, q_v) = momentum_light_cone(q.z, q.t);
    MomentumVariables {
        total: pair.p_a + pair.p_b,
        separation: q,
        q_u,
        q_v,
    }
}

/// `(q_u, q_v) = ((q₀ − q_z)/√2, (q₀ + q_z)/√2)`.
pub fn momentum_light_cone(qz: f64, q0: f64) -> (f64, f64) {
    (FRAC_1_SQRT_2 * (q0 - qz), FRAC_1_SQRT_2 * (q0 + qz))
}

/// Inverse of [`momentum_light_cone`]: `(q_z, q₀)`.
pub fn momentum_from_light_cone(q_u: f64, q_v: f64) -> (f64, f64) {
    (FRAC_1_SQRT_2 * (q_v - q_u), FRAC_1_SQRT_2 * (q_u + q_v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    SpaceTime,
    MomentumEnergy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// `z` or `q_z`.
    Longitudinal,
    /// `t` or `q₀`.
    Timelike,
}

/// Which squeezed Gaussian, and how hard it is boosted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionParams {
    pub eta: BoostRapidity,
    pub space: Space,
}

impl WavefunctionParams {
    pub const fn spacetime(eta: BoostRapidity) -> Self {
        Self {
            eta,
            space: Space::SpaceTime,
        }
    }

    pub const fn momentum(eta: BoostRapidity) -> Self {
        Self {
            eta,
            space: Space::MomentumEnergy,
        }
    }

    /// Wave function at `(longitudinal, timelike)` = `(z, t)` or `(q_z, q₀)`.
    pub fn eval(&self, longitudinal: f64, timelike: f64) -> f64 {
        match self.space {
            Space::SpaceTime => spacetime_wavefunction(self.eta, longitudinal, timelike),
            Space::MomentumEnergy => momentum_wavefunction(self.eta, longitudinal, timelike),
        }
    }
}

fn squeezed_gaussian(eta: f64, a: f64, b: f64) -> f64 {
    let e2 = (2.0 * eta).exp();
    PI.powf(-0.5) * (-0.5 * (a * a / e2 + e2 * b * b)).exp()
}

/// Boosted ground state `ψ_η(z, t)`.
pub fn spacetime_wavefunction(eta: BoostRapidity, z: f64, t: f64) -> f64 {
    let lc = to_light_cone(SpacetimePoint::new(z, t));
    squeezed_gaussian(eta.value(), lc.u, lc.v)
}

/// Boosted ground state in momentum-energy space, `φ_η(q_z, q₀)`.
pub fn momentum_wavefunction(eta: BoostRapidity, qz: f64, q0: f64) -> f64 {
    let (q_u, q_v) = momentum_light_cone(qz, q0);
    squeezed_gaussian(eta.value(), q_u, q_v)
}

/// Standard deviation of the `|ψ|²` marginal along `axis`:
/// `sqrt(cosh(2η)/2)` in either space and along either axis.
pub fn marginal_width(params: &WavefunctionParams, _axis: Axis) -> f64 {
    (0.5 * (2.0 * params.eta.value()).cosh()).sqrt()
}

/// Integration box and resolution for `|ψ_η|²`: half-width `5 e^{|η|} + 1`
/// on both axes, with inner panels no wider than the narrow light-cone
/// width `e^{-|η|}`.
fn squeeze_box(eta: BoostRapidity, tol: f64) -> (f64, Integrator, Integrator) {
    let e = eta.value().abs();
    let l = 5.0 * e.exp() + 1.0;
    let panels = (2.0 * l * e.exp()).ceil() as usize;
    let outer = Integrator::default()
        .with_abs_tol(tol)
        .with_initial_panels(8);
    let inner = Integrator::default()
        .with_abs_tol(tol / (2.0 * l))
        .with_initial_panels(panels)
        .with_max_intervals(4 * panels + 4000);
    (l, outer, inner)
}

fn check_tol(tol: f64) -> Result<f64> {
    ensure_finite("tolerance", tol)?;
    if tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(tol)
}

/// `∫∫ |ψ|² d(longitudinal) d(timelike)` by nested adaptive quadrature.
pub fn normalization_quadrature(params: &WavefunctionParams, tol: f64) -> Result<f64> {
    let tol = check_tol(tol)?;
    let (l, outer, inner) = squeeze_box(params.eta, tol);
    outer
        .integrate_2d(&inner, |a, b| params.eval(a, b).powi(2), (-l, l), (-l, l))
        .map(|e| e.value)
}

/// Variance of the `|ψ|²` marginal along `axis`, by nested adaptive
/// quadrature of the second moment (the first moment vanishes by symmetry).
pub fn marginal_variance_quadrature(
    params: &WavefunctionParams,
    axis: Axis,
    tol: f64,
) -> Result<f64> {
    let tol = check_tol(tol)?;
    let (l, outer, inner) = squeeze_box(params.eta, tol);
    outer
        .integrate_2d(
            &inner,
            |a, b| {
                let s = match axis {
                    Axis::Longitudinal => a,
                    Axis::Timelike => b,
                };
                s * s * params.eval(a, b).powi(2)
            },
            (-l, l),
            (-l, l),
        )
        .map(|e| e.value)
}

/// Square root of [`marginal_variance_quadrature`].
pub fn marginal_width_quadrature(params: &WavefunctionParams, axis: Axis, tol: f64) -> Result<f64> {
    marginal_variance_quadrature(params, axis, tol).map(f64::sqrt)
}

/// `(1/2π) ∫∫ ψ_η(z, t) e^{−i(q_z z + q₀ t)} dz dt` by nested quadrature.
/// `ψ_η` is real and even, so only the cosine part survives.
pub fn spacetime_fourier_transform(eta: BoostRapidity, qz: f64, q0: f64, tol: f64) -> Result<f64> {
    let tol = check_tol(tol)?;
    let (l, outer, inner) = squeeze_box(eta, tol);
    outer
        .integrate_2d(
            &inner,
            |z, t| spacetime_wavefunction(eta, z, t) * (qz * z + q0 * t).cos(),
            (-l, l),
            (-l, l),
        )
        .map(|e| e.value / (2.0 * PI))
}

/// Sampling for the finite-difference check of the oscillator equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FkrGrid {
    /// Grid spacing in both `z` and `t`.
    pub step: f64,
    /// The grid spans `[-half_width, half_width]²`.
    pub half_width: f64,
    /// Fail with [`Error::Grid`] when the residual exceeds this.
    pub residual_tol: Option<f64>,
}

impl FkrGrid {
    /// Smallest square grid accepted at `eta`: half-width `4 e^{|η|}`.
    pub fn covering(eta: BoostRapidity, step: f64) -> Self {
        Self {
            step,
            half_width: 4.0 * eta.value().abs().exp(),
            residual_tol: None,
        }
    }

    pub fn with_residual_tol(mut self, tol: f64) -> Self {
        self.residual_tol = Some(tol);
        self
    }
}

/// Outcome of [`fkr_residual`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FkrEstimate {
    /// Least-squares eigenvalue `Σ ψ Lψ / Σ ψ²`.
    pub lambda: f64,
    /// `max |Lψ − λψ|` over the fitted points.
    pub max_residual: f64,
    pub points: usize,
}

/// Amplitude below which grid points are left out of the fit.
pub const FKR_FIT_FLOOR: f64 = 1e-6;

/// Applies `L = ½{(t² − z²) − (∂_t² − ∂_z²)}`, the `(z, t)` restriction of
/// the Lorentz-invariant oscillator operator, to `ψ_η` on a square grid with
/// the second-order five-point stencil, and fits `Lψ = λψ`.
///
/// The normalizable ground state has `λ = 0` for every `η`: in light-cone
/// variables `L = ∂_u ∂_v − uv`, and `∂_u ∂_v ψ_η = uv ψ_η` exactly.
pub fn fkr_residual(eta: BoostRapidity, grid: &FkrGrid) -> Result<FkrEstimate> {
    let h = grid.step;
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Grid(format!("step must be positive, got {h}")));
    }
    let need = 4.0 * eta.value().abs().exp();
    if grid.half_width.is_nan() || grid.half_width < need * (1.0 - 1e-12) {
        return Err(Error::Grid(format!(
            "half-width {} does not cover |z|, |t| <= {need}",
            grid.half_width
        )));
    }
    let n_side = (grid.half_width / h + 1e-9).floor() as usize;
    if n_side < 2 {
        return Err(Error::Grid(format!(
            "step {h} leaves fewer than two points per half-axis"
        )));
    }
    let n = 2 * n_side + 1;
    let coord = |i: usize| (i as f64 - n_side as f64) * h;
    let mut psi = vec![0.0; n * n];
    for i in 0..n {
        let z = coord(i);
        for j in 0..n {
            psi[i * n + j] = spacetime_wavefunction(eta, z, coord(j));
        }
    }

    let inv_h2 = 1.0 / (h * h);
    let mut samples = Vec::new();
    let (mut num, mut den) = (0.0, 0.0);
    for i in 1..n - 1 {
        let z = coord(i);
        for j in 1..n - 1 {
            let c = psi[i * n + j];
            if c.abs() <= FKR_FIT_FLOOR {
                continue;
            }
            let t = coord(j);
            // ∂_t² − ∂_z²: the centre terms cancel
            let wave = (psi[i * n + j + 1] + psi[i * n + j - 1]
                - psi[(i + 1) * n + j]
                - psi[(i - 1) * n + j])
                * inv_h2;
            let l_psi = 0.5 * ((t * t - z * z) * c - wave);
            num += c * l_psi;
            den += c * c;
            samples.push((c, l_psi));
        }
    }
    if samples.is_empty() {
        return Err(Error::Grid("no grid point above the fit floor".into()));
    }
    let lambda = num / den;
    let max_residual = samples
        .iter()
        .map(|(c, l)| (l - lambda * c).abs())
        .fold(0.0, f64::max);
    if let Some(tol) = grid.residual_tol {
        if max_residual > tol {
            return Err(Error::Grid(format!(
                "step {h} gives residual {max_residual:e}, above the requested {tol:e}"
            )));
        }
    }
    Ok(FkrEstimate {
        lambda,
        max_residual,
        points: samples.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn b(v: f64) -> BoostRapidity {
        BoostRapidity::boost(v)
    }

    #[test]
    fn boost_examples() {
        let p = lorentz_boost(SpacetimePoint::new(1.0, 0.0), b(0.0));
        assert_eq!(p, SpacetimePoint::new(1.0, 0.0));
        let p = lorentz_boost(SpacetimePoint::new(1.0, 1.0), b(0.7));
        assert_relative_eq!(p.z, 0.7f64.exp(), max_relative = 1e-15);
        assert_relative_eq!(p.t, 0.7f64.exp(), max_relative = 1e-15);
        let p = lorentz_boost(SpacetimePoint::new(1.0, 0.0), b(1.0));
        assert_relative_eq!(p.z, 1.543_080_634_815_243_7, max_relative = 1e-15);
        assert_relative_eq!(p.t, 1.175_201_193_643_801_4, max_relative = 1e-15);
    }

    #[test]
    fn light_cone_examples() {
        let lc = to_light_cone(SpacetimePoint::new(1.0, 1.0));
        assert_relative_eq!(lc.u, SQRT_2, max_relative = 1e-15);
        assert_eq!(lc.v, 0.0);
        let lc = to_light_cone(SpacetimePoint::new(1.0, -1.0));
        assert_eq!(lc.u, 0.0);
        assert_relative_eq!(lc.v, SQRT_2, max_relative = 1e-15);
        let q = boost_light_cone(LightConePoint::new(1.0, 1.0), b(std::f64::consts::LN_2));
        assert_relative_eq!(q.u, 2.0, max_relative = 1e-15);
        assert_relative_eq!(q.v, 0.5, max_relative = 1e-15);
        assert_eq!(
            boost_light_cone(LightConePoint::new(0.3, -2.0), b(0.0)),
            LightConePoint::new(0.3, -2.0)
        );
    }

    #[test]
    fn hadron_variable_examples() {
        let xa = FourVector::new(0.5, 1.0, -2.0, 3.0);
        let h = hadron_variables(&QuarkPair { x_a: xa, x_b: xa });
        assert_eq!(h.center, xa);
        assert_eq!(h.separation, FourVector::default());

        let h = hadron_variables(&QuarkPair {
            x_a: FourVector::new(0.0, 0.0, 0.0, 1.0),
            x_b: FourVector::new(0.0, 0.0, 0.0, -1.0),
        });
        assert_eq!(h.center, FourVector::default());
        assert_relative_eq!(h.separation.z, FRAC_1_SQRT_2, max_relative = 1e-15);
        assert_eq!(
            (h.separation.t, h.separation.x, h.separation.y),
            (0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn momentum_variable_examples() {
        let p = FourVector::new(3.0, 0.1, 0.2, 1.0);
        let m = momentum_variables(&MomentumPair { p_a: p, p_b: p });
        assert_eq!(m.separation, FourVector::default());
        assert_eq!(m.total, p * 2.0);
        // q₀ = q_z puts q on the light cone
        let m = momentum_variables(&MomentumPair {
            p_a: FourVector::new(2.0, 0.0, 0.0, 2.0),
            p_b: FourVector::default(),
        });
        assert_eq!(m.q_u, 0.0);
        assert_relative_eq!(m.q_v, 4.0, max_relative = 1e-15);
    }

    #[test]
    fn wavefunction_prefactor_and_rest_frame() {
        assert_relative_eq!(
            spacetime_wavefunction(b(0.0), 0.0, 0.0),
            0.564_189_583_547_756_3,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            momentum_wavefunction(b(0.0), 0.0, 0.0),
            0.564_189_583_547_756_3,
            max_relative = 1e-15
        );
        for &(z, t) in &[(0.4, 1.1), (-2.0, 0.5), (3.0, -3.0)] {
            let rest = (-(z * z + t * t) / 2.0f64).exp() / PI.sqrt();
            assert_relative_eq!(
                spacetime_wavefunction(b(0.0), z, t),
                rest,
                max_relative = 1e-14
            );
            assert_relative_eq!(
                momentum_wavefunction(b(0.0), z, t),
                rest,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn momentum_form_is_spacetime_form_with_axes_swapped() {
        for &eta in &[0.0, 0.4, 1.2] {
            for &(qz, q0) in &[(0.3, 1.0), (-1.5, 0.2), (2.0, 2.5)] {
                let m = momentum_wavefunction(b(eta), qz, q0);
                // q_u = u and q_v = v under z = q₀, t = −q_z
                assert_relative_eq!(
                    m,
                    spacetime_wavefunction(b(eta), q0, -qz),
                    max_relative = 1e-14
                );
                // or: same labels, opposite boost
                assert_relative_eq!(
                    m,
                    spacetime_wavefunction(b(-eta), qz, q0),
                    max_relative = 1e-14
                );
            }
        }
    }

    #[test]
    fn closed_form_width() {
        let p = WavefunctionParams::spacetime(b(1.0));
        assert_relative_eq!(
            marginal_width(&p, Axis::Longitudinal),
            1.371_531_204_727_699_8,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            marginal_width(&WavefunctionParams::momentum(b(0.0)), Axis::Timelike),
            FRAC_1_SQRT_2,
            max_relative = 1e-15
        );
    }

    #[test]
    fn fkr_grid_errors() {
        let eta = b(0.5);
        assert!(matches!(
            fkr_residual(eta, &FkrGrid::covering(eta, 0.0)),
            Err(Error::Grid(_))
        ));
        let mut g = FkrGrid::covering(eta, 0.05);
        g.half_width = 2.0;
        assert!(matches!(fkr_residual(eta, &g), Err(Error::Grid(_))));
        let g = FkrGrid::covering(eta, 0.5).with_residual_tol(1e-12);
        assert!(matches!(fkr_residual(eta, &g), Err(Error::Grid(_))));
        assert!(fkr_residual(eta, &FkrGrid::covering(eta, 0.05).with_residual_tol(1e-1)).is_ok());
    }

    #[test]
    fn tolerance_must_be_positive() {
        let p = WavefunctionParams::spacetime(b(0.0));
        assert!(normalization_quadrature(&p, 0.0).is_err());
        assert!(normalization_quadrature(&p, f64::NAN).is_err());
    }
}
