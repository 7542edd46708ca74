//! Numerical integration: globally adaptive Gauss–Kronrod (7/15) on finite
//! intervals, a nested two-dimensional driver, and Gauss–Hermite rules.
//!
//! The adaptive driver follows the QUADPACK `qag` scheme: keep every
//! subinterval in a max-heap keyed by its error estimate and bisect the worst
//! one until the summed estimate is below tolerance.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::hermite::hermite_functions;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

/// Adaptive Gauss–Kronrod integrator configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrator {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Uniform panels the interval is cut into before adapting. Raise this
    /// when the integrand has features much narrower than the interval.
    pub initial_panels: usize,
    pub max_intervals: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 0.0,
            initial_panels: 1,
            max_intervals: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        scaled = res_asc * (200.0 * scaled / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut f1 = [0.0; 7];
    let mut f2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let (lo, hi) = (f(center - dx), f(center + dx));
        f1[j] = lo;
        f2[j] = hi;
        res_k += WGK[j] * (lo + hi);
        res_abs += WGK[j] * (lo.abs() + hi.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (lo + hi);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((f1[j] - mean).abs() + (f2[j] - mean).abs());
    }
    let scale = half.abs();
    Panel {
        a,
        b,
        value: res_k * half,
        error: rescale_error((res_k - res_g) * half, res_abs * scale, res_asc * scale),
    }
}

impl Integrator {
    pub fn with_abs_tol(mut self, tol: f64) -> Self {
        self.abs_tol = tol;
        self
    }

    pub fn with_rel_tol(mut self, tol: f64) -> Self {
        self.rel_tol = tol;
        self
    }

    pub fn with_initial_panels(mut self, panels: usize) -> Self {
        self.initial_panels = panels.max(1);
        self
    }

    pub fn with_max_intervals(mut self, n: usize) -> Self {
        self.max_intervals = n;
        self
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }

    /// `∫_a^b f(x) dx`.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64, a: f64, b: f64) -> Result<Estimate> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain(format!(
                "integration limits must be finite, got [{a}, {b}]"
            )));
        }
        if !(self.abs_tol > 0.0 || self.rel_tol > 0.0) {
            return Err(Error::Domain(
                "integration tolerance must be positive".into(),
            ));
        }
        if a == b {
            return Ok(Estimate {
                value: 0.0,
                error: 0.0,
                intervals: 0,
            });
        }
        let n0 = self.initial_panels.max(1);
        let width = (b - a) / n0 as f64;
        let mut heap = BinaryHeap::with_capacity(n0 * 2);
        let (mut value, mut error) = (0.0, 0.0);
        for i in 0..n0 {
            let lo = a + width * i as f64;
            let hi = if i + 1 == n0 {
                b
            } else {
                a + width * (i + 1) as f64
            };
            let p = gk15(&mut f, lo, hi);
            value += p.value;
            error += p.error;
            heap.push(p);
        }

        loop {
            if error <= self.target(value) {
                // resum to shed drift from the running totals
                let (v, e) = heap
                    .iter()
                    .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
                value = v;
                error = e;
                if error <= self.target(value) {
                    return Ok(Estimate {
                        value,
                        error,
                        intervals: heap.len(),
                    });
                }
            }
            let worst = match heap.peek() {
                Some(p) => *p,
                None => unreachable!(),
            };
            let mid = 0.5 * (worst.a + worst.b);
            let exhausted = heap.len() >= self.max_intervals
                || mid <= worst.a.min(worst.b)
                || mid >= worst.a.max(worst.b);
            if exhausted {
                return Err(Error::Quadrature {
                    lower: a,
                    upper: b,
                    requested: self.target(value),
                    estimate: error,
                    intervals: heap.len(),
                });
            }
            heap.pop();
            let left = gk15(&mut f, worst.a, mid);
            let right = gk15(&mut f, mid, worst.b);
            value += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
        }
    }

    /// `∫_{x0}^{x1} ∫_{y0}^{y1} f(x, y) dy dx`, with `self` driving the outer
    /// integral and `inner` each inner one. The first inner failure is
    /// returned.
    pub fn integrate_2d(
        &self,
        inner: &Integrator,
        mut f: impl FnMut(f64, f64) -> f64,
        (x0, x1): (f64, f64),
        (y0, y1): (f64, f64),
    ) -> Result<Estimate> {
        let failure: RefCell<Option<Error>> = RefCell::new(None);
        let outer = self.integrate(
            |x| {
                if failure.borrow().is_some() {
                    return 0.0;
                }
                match inner.integrate(|y| f(x, y), y0, y1) {
                    Ok(est) => est.value,
                    Err(e) => {
                        *failure.borrow_mut() = Some(e);
                        0.0
                    }
                }
            },
            x0,
            x1,
        );
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        outer
    }
}

/// An `n`-point Gauss–Hermite rule rescaled for plain integrals:
/// `∫ g(x) dx ≈ Σ w_i g(x_i)`, exact when `g(x) = e^{-x²} p(x)` with
/// `deg p ≤ 2n − 1`.
///
/// Nodes come from Newton iteration on `φ_n`; the weights are
/// `2 / (sqrt(2n) φ_{n−1}(x_i))²`, which already include the `e^{x_i²}`
/// factor that converts the classical weights.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > 200 {
            return Err(Error::Domain(format!(
                "Gauss–Hermite order must be in 1..=200, got {n}"
            )));
        }
        let nf = n as f64;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        let mut z = 0.0_f64;
        for i in 0..half {
            z = match i {
                0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
                1 => z - 1.14 * nf.powf(0.426) / z,
                2 => 1.86 * z - 0.86 * nodes[n - 1],
                3 => 1.91 * z - 0.91 * nodes[n - 2],
                _ => 2.0 * z - nodes[n - 1 - (i - 2)],
            };
            let mut converged = false;
            for _ in 0..100 {
                let phi = hermite_functions(z, n);
                let slope = (2.0 * nf).sqrt() * phi[n - 1] - z * phi[n];
                let step = phi[n] / slope;
                z -= step;
                if step.abs() <= 1e-15 * z.abs().max(1.0) {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::Domain(format!(
                    "Gauss–Hermite node {i} of {n} did not converge"
                )));
            }
            let phi = hermite_functions(z, n);
            let d = (2.0 * nf).sqrt() * phi[n - 1];
            let w = 2.0 / (d * d);
            nodes[n - 1 - i] = z;
            nodes[i] = -z;
            weights[n - 1 - i] = w;
            weights[i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn integrate(&self, mut g: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * g(x))
            .sum()
    }
}
