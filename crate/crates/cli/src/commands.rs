use std::sync::atomic::{AtomicUsize, Ordering};

use covosc::covariant::{
    momentum_wavefunction, normalization_quadrature, spacetime_wavefunction, WavefunctionParams,
};
use covosc::parton::{
    boost_entropy, ellipse_samples, interaction_time_ratio, momentum_ellipse_samples,
    rapidity_from_energy, BeamSpec,
};
use covosc::quadrature::Integrator;
use covosc::reduced::{
    density_quadrature_with, effective_temperature, entropy, purity, ReducedState,
};
use covosc::{BoostRapidity, CouplingRapidity};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::config::{Command, RangeSpec, RunConfig};
use crate::error::CliError;
use crate::output::{Cell, Provenance, Table};

/// Rapidities scanned by `entropy-scan` when none are given.
pub const DEFAULT_ENTROPY_RANGE: RangeSpec = RangeSpec {
    min: 0.0,
    max: 6.0,
    step: 0.1,
};
/// Axis grid for `density-grid`.
pub const DEFAULT_DENSITY_GRID: RangeSpec = RangeSpec {
    min: -3.0,
    max: 3.0,
    step: 0.1,
};
/// Axis grid for `squeeze`.
pub const DEFAULT_SQUEEZE_GRID: RangeSpec = RangeSpec {
    min: -3.0,
    max: 3.0,
    step: 0.25,
};
/// Points per 1-σ ellipse in `squeeze`.
pub const ELLIPSE_SAMPLES: usize = 64;

pub fn execute(cfg: &RunConfig) -> Result<Table, CliError> {
    match cfg.command {
        Command::EntropyScan => entropy_scan(cfg),
        Command::DensityGrid => density_grid(cfg),
        Command::Squeeze => squeeze(cfg),
        Command::Parton => parton(cfg),
    }
}

fn table(cfg: &RunConfig, columns: Vec<&'static str>) -> Table {
    Table {
        provenance: Provenance::new(cfg),
        columns,
        rows: Vec::new(),
        footer: Map::new(),
        passed: true,
    }
}

fn required_etas(cfg: &RunConfig) -> Result<Vec<f64>, CliError> {
    cfg.eta_values().ok_or_else(|| {
        CliError::Usage(format!("{} needs --eta or --eta-range", cfg.command.name()))
    })
}

fn reduced_state(cfg: &RunConfig, eta: CouplingRapidity) -> ReducedState {
    match cfg.kmax {
        Some(k) => ReducedState::new(eta, k),
        None => ReducedState::with_default_kmax(eta),
    }
}

/// Evaluates `f` over `items` in parallel, keeping input order. After a
/// failure, later items are skipped; earlier ones still run, so the error
/// reported is always the first in input order.
fn ordered<T: Sync, R: Send>(
    items: &[T],
    f: impl Fn(&T) -> Result<R, CliError> + Sync + Send,
) -> Result<Vec<R>, CliError> {
    let first_failure = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<Result<R, CliError>>> = items
        .par_iter()
        .enumerate()
        .map(|(i, item)| {
            if i > first_failure.load(Ordering::Relaxed) {
                return None;
            }
            let r = f(item);
            if r.is_err() {
                first_failure.fetch_min(i, Ordering::Relaxed);
            }
            Some(r)
        })
        .collect();
    results.into_iter().map_while(|r| r).collect()
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, f64::max)
}

fn entropy_scan(cfg: &RunConfig) -> Result<Table, CliError> {
    let etas = cfg
        .eta_values()
        .unwrap_or_else(|| DEFAULT_ENTROPY_RANGE.values());
    let rows = ordered(&etas, |&e| {
        let eta = CouplingRapidity::coupling(e);
        let temperature = effective_temperature(eta, 1.0)
            .map_err(|err| CliError::from_lib(err, format!("η = {e}")))?
            .temperature;
        let state = reduced_state(cfg, eta);
        let (s, p) = (entropy(eta), purity(eta));
        let checks = (
            (s - state.entropy_from_weights()).abs(),
            (p - state.purity_from_weights()).abs(),
        );
        Ok((
            vec![
                Cell::Num(e),
                Cell::Num(s),
                Cell::Num(p),
                Cell::Num(temperature),
            ],
            checks,
        ))
    })?;

    let mut t = table(cfg, vec!["eta", "entropy", "purity", "temperature"]);
    let d_entropy = max_of(rows.iter().map(|r| r.1 .0));
    let d_purity = max_of(rows.iter().map(|r| r.1 .1));
    t.rows = rows.into_iter().map(|r| r.0).collect();
    t.footer.insert("omega".into(), json!(1.0));
    t.footer.insert("max_entropy_diff".into(), json!(d_entropy));
    t.footer.insert("max_purity_diff".into(), json!(d_purity));
    t.footer.insert("tol_series".into(), json!(cfg.tol_series));
    t.passed = d_entropy <= cfg.tol_series && d_purity <= cfg.tol_series;
    Ok(t)
}

fn density_grid(cfg: &RunConfig) -> Result<Table, CliError> {
    let etas = required_etas(cfg)?;
    let axis = cfg.grid.unwrap_or(DEFAULT_DENSITY_GRID).values();
    let states: Vec<ReducedState> = etas
        .iter()
        .map(|&e| reduced_state(cfg, CouplingRapidity::coupling(e)))
        .collect();
    let integrator = Integrator::default().with_abs_tol(cfg.tol_quad);

    let mut points = Vec::with_capacity(etas.len() * axis.len() * axis.len());
    for (i, _) in etas.iter().enumerate() {
        for &x in &axis {
            for &xp in &axis {
                points.push((i, x, xp));
            }
        }
    }
    let rows = ordered(&points, |&(i, x, xp)| {
        let state = &states[i];
        let series = state.density(x, xp);
        let quad = density_quadrature_with(state.eta(), x, xp, &integrator).map_err(|err| {
            CliError::from_lib(err, format!("(η, x, x') = ({}, {x}, {xp})", etas[i]))
        })?;
        let diff = (series - quad).abs();
        Ok(vec![
            Cell::Num(etas[i]),
            Cell::Num(x),
            Cell::Num(xp),
            Cell::Num(series),
            Cell::Num(quad),
            Cell::Num(diff),
        ])
    })?;

    let mut t = table(
        cfg,
        vec!["eta", "x", "xp", "series", "quadrature", "abs_diff"],
    );
    let worst = max_of(rows.iter().map(|r| match r[5] {
        Cell::Num(v) => v,
        Cell::Text(_) => 0.0,
    }));
    t.rows = rows;
    t.footer.insert(
        "k_max".into(),
        Value::Array(states.iter().map(|s| json!(s.k_max())).collect()),
    );
    t.footer.insert("max_abs_diff".into(), json!(worst));
    t.footer.insert("tol_series".into(), json!(cfg.tol_series));
    t.passed = worst <= cfg.tol_series;
    Ok(t)
}

fn squeeze(cfg: &RunConfig) -> Result<Table, CliError> {
    let etas = required_etas(cfg)?;
    let axis = cfg.grid.unwrap_or(DEFAULT_SQUEEZE_GRID).values();

    let norm_jobs: Vec<WavefunctionParams> = etas
        .iter()
        .flat_map(|&e| {
            let eta = BoostRapidity::boost(e);
            [
                WavefunctionParams::spacetime(eta),
                WavefunctionParams::momentum(eta),
            ]
        })
        .collect();
    let norms = ordered(&norm_jobs, |p| {
        normalization_quadrature(p, cfg.tol_quad)
            .map_err(|err| CliError::from_lib(err, format!("normalization at {p:?}")))
    })?;

    let blocks = ordered(&etas, |&e| {
        let eta = BoostRapidity::boost(e);
        let ctx = |err| CliError::from_lib(err, format!("η = {e}"));
        let mut rows = Vec::with_capacity(2 * axis.len() * axis.len() + 2 * ELLIPSE_SAMPLES);
        for &a in &axis {
            for &b in &axis {
                let psi = spacetime_wavefunction(eta, a, b);
                rows.push(vec![
                    Cell::Text("spacetime"),
                    Cell::Num(e),
                    Cell::Num(a),
                    Cell::Num(b),
                    Cell::Num(psi),
                ]);
            }
        }
        for &a in &axis {
            for &b in &axis {
                let phi = momentum_wavefunction(eta, a, b);
                rows.push(vec![
                    Cell::Text("momentum"),
                    Cell::Num(e),
                    Cell::Num(a),
                    Cell::Num(b),
                    Cell::Num(phi),
                ]);
            }
        }
        for p in ellipse_samples(eta, ELLIPSE_SAMPLES).map_err(ctx)? {
            let d = spacetime_wavefunction(eta, p.z, p.t).powi(2);
            rows.push(vec![
                Cell::Text("ellipse-spacetime"),
                Cell::Num(e),
                Cell::Num(p.z),
                Cell::Num(p.t),
                Cell::Num(d),
            ]);
        }
        for (qz, q0) in momentum_ellipse_samples(eta, ELLIPSE_SAMPLES).map_err(ctx)? {
            let d = momentum_wavefunction(eta, qz, q0).powi(2);
            rows.push(vec![
                Cell::Text("ellipse-momentum"),
                Cell::Num(e),
                Cell::Num(qz),
                Cell::Num(q0),
                Cell::Num(d),
            ]);
        }
        Ok(rows)
    })?;

    let mut t = table(cfg, vec!["section", "eta", "x", "y", "value"]);
    t.rows = blocks.into_iter().flatten().collect();
    let report: Vec<Value> = etas
        .iter()
        .zip(norms.chunks(2))
        .map(|(e, n)| json!({ "eta": e, "spacetime": n[0], "momentum": n[1] }))
        .collect();
    let worst = max_of(norms.iter().map(|n| (n - 1.0).abs()));
    t.footer
        .insert("normalization".into(), Value::Array(report));
    t.footer
        .insert("max_normalization_error".into(), json!(worst));
    t.footer
        .insert("ellipse_samples".into(), json!(ELLIPSE_SAMPLES));
    t.footer.insert("tol_series".into(), json!(cfg.tol_series));
    t.passed = worst <= cfg.tol_series;
    Ok(t)
}

fn parton(cfg: &RunConfig) -> Result<Table, CliError> {
    let etas = cfg.eta_values().unwrap_or_default();
    if etas.is_empty() && cfg.energy.is_empty() {
        return Err(CliError::Usage(
            "parton needs --eta, --eta-range or --energy".into(),
        ));
    }
    let row = |source, input, eta: BoostRapidity| {
        vec![
            Cell::Text(source),
            Cell::Num(input),
            Cell::Num(eta.value()),
            Cell::Num(interaction_time_ratio(eta)),
            Cell::Num(boost_entropy(eta, cfg.bridge)),
        ]
    };

    let mut t = table(
        cfg,
        vec![
            "source",
            "input",
            "eta",
            "interaction_time_ratio",
            "boost_entropy",
        ],
    );
    for &e in &etas {
        t.rows.push(row("eta", e, BoostRapidity::boost(e)));
    }
    // e^{-2η} = (γ + sqrt(γ² − 1))^{-2} checks the rapidity inversion
    let mut worst: f64 = 0.0;
    for &energy in &cfg.energy {
        let ctx = |err| CliError::from_lib(err, format!("E = {energy} GeV"));
        let beam = BeamSpec::new(energy, cfg.mass).map_err(ctx)?;
        let eta = rapidity_from_energy(&beam).map_err(ctx)?;
        let g = beam.gamma();
        let direct = (g + (g * g - 1.0).sqrt()).powi(-2);
        worst = worst.max((interaction_time_ratio(eta) / direct - 1.0).abs());
        t.rows.push(row("energy", energy, eta));
    }
    t.footer.insert("bridge".into(), json!(cfg.bridge));
    t.footer.insert("mass".into(), json!(cfg.mass));
    t.footer.insert("max_ratio_rel_diff".into(), json!(worst));
    t.footer.insert("tol_series".into(), json!(cfg.tol_series));
    t.passed = worst <= cfg.tol_series;
    Ok(t)
}
