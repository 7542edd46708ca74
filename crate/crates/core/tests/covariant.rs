use covosc::covariant::{
    boost_light_cone, fkr_residual, from_light_cone, hadron_variables, lorentz_boost,
    marginal_variance_quadrature, marginal_width, momentum_from_light_cone, momentum_variables,
    momentum_wavefunction, normalization_quadrature, spacetime_fourier_transform,
    spacetime_wavefunction, to_light_cone, Axis, FkrGrid, FourVector, LightConePoint, MomentumPair,
    QuarkPair, SpacetimePoint, WavefunctionParams,
};
use covosc::oscillator::ground_state_amplitude;
use covosc::{BoostRapidity, Bridge};
use proptest::prelude::*;

fn b(v: f64) -> BoostRapidity {
    BoostRapidity::boost(v)
}

fn four() -> impl Strategy<Value = FourVector> {
    (
        -10.0..10.0f64,
        -10.0..10.0f64,
        -10.0..10.0f64,
        -10.0..10.0f64,
    )
        .prop_map(|(t, x, y, z)| FourVector::new(t, x, y, z))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boost_preserves_interval(z in -10.0..10.0f64, t in -10.0..10.0f64, e in -3.0..3.0f64) {
        let p = SpacetimePoint::new(z, t);
        let q = lorentz_boost(p, b(e));
        let scale = (z * z + t * t) * (2.0 * e.abs()).exp();
        prop_assert!((q.interval() - p.interval()).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn light_cone_boost_preserves_product(u in -10.0..10.0f64, v in -10.0..10.0f64, e in -3.0..3.0f64) {
        let q = boost_light_cone(LightConePoint::new(u, v), b(e));
        prop_assert!((q.u * q.v - u * v).abs() <= 1e-12 * (u * v).abs().max(1.0));
    }

    #[test]
    fn boost_commutes_with_light_cone_map(z in -10.0..10.0f64, t in -10.0..10.0f64, e in -3.0..3.0f64) {
        let p = SpacetimePoint::new(z, t);
        let a = to_light_cone(lorentz_boost(p, b(e)));
        let c = boost_light_cone(to_light_cone(p), b(e));
        let scale = (z.abs() + t.abs()) * e.abs().exp();
        prop_assert!((a.u - c.u).abs() <= 1e-12 * scale.max(1.0));
        prop_assert!((a.v - c.v).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn light_cone_round_trip(z in -1e3..1e3f64, t in -1e3..1e3f64) {
        let back = from_light_cone(to_light_cone(SpacetimePoint::new(z, t)));
        prop_assert!((back.z - z).abs() <= 1e-12 * z.abs().max(t.abs()).max(1.0));
        prop_assert!((back.t - t).abs() <= 1e-12 * z.abs().max(t.abs()).max(1.0));
    }

    #[test]
    fn hadron_variables_invert(xa in four(), xb in four()) {
        let back = hadron_variables(&QuarkPair { x_a: xa, x_b: xb }).to_quark_pair();
        for (got, want) in [(back.x_a, xa), (back.x_b, xb)] {
            prop_assert!((got.t - want.t).abs() <= 1e-12 * 10.0);
            prop_assert!((got.x - want.x).abs() <= 1e-12 * 10.0);
            prop_assert!((got.y - want.y).abs() <= 1e-12 * 10.0);
            prop_assert!((got.z - want.z).abs() <= 1e-12 * 10.0);
        }
    }

    #[test]
    fn momentum_light_cone_inverts(pa in four(), pb in four()) {
        let m = momentum_variables(&MomentumPair { p_a: pa, p_b: pb });
        let (qz, q0) = momentum_from_light_cone(m.q_u, m.q_v);
        prop_assert!((qz - m.separation.z).abs() <= 1e-12 * 30.0);
        prop_assert!((q0 - m.separation.t).abs() <= 1e-12 * 30.0);
        // the four-momentum difference keeps its Minkowski square up to the √2 scale
        let diff = pa - pb;
        prop_assert!((m.separation.minkowski_square() - 2.0 * diff.minkowski_square()).abs() <= 1e-10);
    }
}

#[test]
fn squeezed_wavefunctions_are_normalized() {
    for &e in &[0.0, 1.0, 2.0, 3.0] {
        for params in [
            WavefunctionParams::spacetime(b(e)),
            WavefunctionParams::momentum(b(e)),
        ] {
            let n = normalization_quadrature(&params, 1e-10).unwrap();
            assert!((n - 1.0).abs() <= 1e-8, "{params:?}: {n}");
        }
    }
}

#[test]
fn coupled_ground_state_is_boosted_gaussian_at_double_rapidity() {
    for &e in &[0.0, 0.5, 1.0] {
        let coupling = b(e).to_coupling(Bridge::Factor2);
        for i in 0..=40 {
            for j in 0..=40 {
                let (z, t) = (-4.0 + 0.2 * i as f64, -4.0 + 0.2 * j as f64);
                let s = spacetime_wavefunction(b(e), z, t);
                let g = ground_state_amplitude(coupling, z, t);
                assert!(
                    (s - g).abs() <= 1e-12,
                    "η_b = {e} at ({z}, {t}): {s} vs {g}"
                );
            }
        }
    }
    // the identity bridge is a genuinely different state once η ≠ 0
    let ident = b(1.0).to_coupling(Bridge::Identity);
    assert!(
        (spacetime_wavefunction(b(1.0), 1.0, -1.0) - ground_state_amplitude(ident, 1.0, -1.0))
            .abs()
            > 1e-3
    );
}

#[test]
fn marginal_widths_by_moment_quadrature() {
    for &e in &[0.0, 0.5, 1.0, 1.5] {
        let closed =
            marginal_width(&WavefunctionParams::spacetime(b(e)), Axis::Longitudinal).powi(2);
        for params in [
            WavefunctionParams::spacetime(b(e)),
            WavefunctionParams::momentum(b(e)),
        ] {
            for axis in [Axis::Longitudinal, Axis::Timelike] {
                let v = marginal_variance_quadrature(&params, axis, 1e-10).unwrap();
                assert!(
                    (v - closed).abs() <= 1e-8,
                    "{params:?} {axis:?}: {v} vs {closed}"
                );
            }
        }
    }
}

#[test]
fn fourier_transform_of_spacetime_is_momentum_wavefunction() {
    for &e in &[0.0, 1.0] {
        let mut worst: f64 = 0.0;
        for i in 0..=6 {
            for j in 0..=6 {
                let (qz, q0) = (-1.5 + 0.5 * i as f64, -1.5 + 0.5 * j as f64);
                let ft = spacetime_fourier_transform(b(e), qz, q0, 1e-11).unwrap();
                worst = worst.max((ft - momentum_wavefunction(b(e), qz, q0)).abs());
            }
        }
        assert!(worst <= 1e-6, "η = {e}: {worst:e}");
    }
}

#[test]
fn fkr_eigenvalue_is_zero_and_boost_invariant() {
    let at_rest = fkr_residual(b(0.0), &FkrGrid::covering(b(0.0), 1e-2)).unwrap();
    let boosted = fkr_residual(b(1.0), &FkrGrid::covering(b(1.0), 1e-2)).unwrap();
    assert!(at_rest.lambda.abs() <= 1e-4, "{at_rest:?}");
    assert!(boosted.lambda.abs() <= 1e-4, "{boosted:?}");
    assert!((at_rest.lambda - boosted.lambda).abs() <= 1e-4);
}

#[test]
fn fkr_residual_converges_at_second_order() {
    let e = b(0.5);
    let r: Vec<f64> = [0.1, 0.05, 0.025]
        .iter()
        .map(|&h| {
            fkr_residual(e, &FkrGrid::covering(e, h))
                .unwrap()
                .max_residual
        })
        .collect();
    for w in r.windows(2) {
        let order = (w[0] / w[1]).log2();
        assert!(
            (1.8..2.2).contains(&order),
            "residuals {r:?}, order {order}"
        );
    }
}
