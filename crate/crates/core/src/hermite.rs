//! Normalized harmonic-oscillator eigenfunctions
//! `φ_k(x) = (2^k k! √π)^{-1/2} H_k(x) e^{-x²/2}` in dimensionless units.
//!
//! Values come from the three-term recurrence on the normalized functions
//! themselves,
//!
//! ```text
//! φ_{k+1}(x) = sqrt(2/(k+1)) x φ_k(x) − sqrt(k/(k+1)) φ_{k−1}(x),
//! ```
//!
//! which never forms `H_k` or `k!` and so stays finite for large `k`. The
//! Gaussian factor is carried as a separate log-scale so that `|x|` beyond
//! the underflow point of `e^{-x²/2}` still yields correct high-order values.

use std::f64::consts::PI;

const RESCALE_ABOVE: f64 = 1e150;

/// One member of the Hermite-function basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HermiteMode {
    pub index: usize,
}

impl HermiteMode {
    pub const fn new(index: usize) -> Self {
        Self { index }
    }

    pub fn eval(self, x: f64) -> f64 {
        hermite_function(self.index, x)
    }
}

/// `φ_k(x)` for a single order.
pub fn hermite_function(k: usize, x: f64) -> f64 {
    let mut out = 0.0;
    recurrence(x, k, |j, v| {
        if j == k {
            out = v;
        }
    });
    out
}

/// `[φ_0(x), …, φ_n(x)]`.
pub fn hermite_functions(x: f64, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    hermite_functions_into(x, &mut out);
    out
}

/// Fills `out[k] = φ_k(x)` for every slot of `out`.
pub fn hermite_functions_into(x: f64, out: &mut [f64]) {
    if out.is_empty() {
        return;
    }
    let n = out.len() - 1;
    recurrence(x, n, |k, v| out[k] = v);
}

/// `[φ_0'(x), …, φ_n'(x)]` from
/// `φ_k' = sqrt(k/2) φ_{k−1} − sqrt((k+1)/2) φ_{k+1}`.
pub fn hermite_derivatives(x: f64, n: usize) -> Vec<f64> {
    let phi = hermite_functions(x, n + 1);
    (0..=n)
        .map(|k| {
            let down = if k > 0 {
                (k as f64 / 2.0).sqrt() * phi[k - 1]
            } else {
                0.0
            };
            down - ((k as f64 + 1.0) / 2.0).sqrt() * phi[k + 1]
        })
        .collect()
}

fn recurrence(x: f64, n: usize, mut emit: impl FnMut(usize, f64)) {
    // φ_k(x) = scaled_k · exp(log_scale)
    let mut log_scale = -0.5 * x * x;
    let mut prev = PI.powf(-0.25);
    emit(0, prev * log_scale.exp());
    if n == 0 {
        return;
    }
    let mut cur = std::f64::consts::SQRT_2 * x * prev;
    emit(1, cur * log_scale.exp());
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_ABOVE {
            prev /= RESCALE_ABOVE;
            cur /= RESCALE_ABOVE;
            log_scale += RESCALE_ABOVE.ln();
        }
        emit(k + 1, cur * log_scale.exp());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn phi_closed(k: usize, x: f64) -> f64 {
        let g = PI.powf(-0.25) * (-0.5 * x * x).exp();
        match k {
            0 => g,
            1 => std::f64::consts::SQRT_2 * x * g,
            2 => (2.0 * x * x - 1.0) / std::f64::consts::SQRT_2 * g,
            3 => (2.0 * x * x * x - 3.0 * x) / 3f64.sqrt() * g,
            _ => unreachable!(),
        }
    }

    #[test]
    fn low_orders_match_closed_forms() {
        for &x in &[-2.5, -1.0, 0.0, 0.3, 1.7, 4.0] {
            let v = hermite_functions(x, 3);
            for (k, &vk) in v.iter().enumerate() {
                assert_relative_eq!(vk, phi_closed(k, x), epsilon = 1e-15, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn parity() {
        for k in 0..30 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert_relative_eq!(
                hermite_function(k, -1.3),
                sign * hermite_function(k, 1.3),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn far_tail_does_not_underflow_for_high_order() {
        // Turning point of φ_k is sqrt(2k+1); at k = 2000, x = 50 lies inside it.
        let v = hermite_functions(50.0, 2000);
        assert_eq!(v[0], 0.0);
        assert!(v[2000].is_finite());
        assert!(v[2000].abs() > 1e-3, "{}", v[2000]);
        assert!(v.iter().all(|f| f.is_finite()));
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-5;
        for &x in &[-1.1, 0.2, 2.4] {
            let d = hermite_derivatives(x, 12);
            for (k, &dk) in d.iter().enumerate() {
                let fd = (hermite_function(k, x + h) - hermite_function(k, x - h)) / (2.0 * h);
                assert_relative_eq!(dk, fd, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn mode_eval() {
        assert_relative_eq!(
            HermiteMode::new(2).eval(0.4),
            phi_closed(2, 0.4),
            epsilon = 1e-15
        );
    }
}
