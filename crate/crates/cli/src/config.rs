use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covosc::oscillator::MAX_KMAX;
use covosc::parton::PROTON_MASS_GEV;
use covosc::Bridge;
use serde::Serialize;

use crate::error::CliError;

/// Upper bound on the number of points a range may expand to.
pub const MAX_RANGE_POINTS: usize = 1_000_000;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "COVOSC_OUT_DIR";

#[derive(Debug, Clone, Parser)]
#[command(
    name = "covosc",
    version,
    about = "Parameter scans for coupled and boosted oscillators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Entropy, purity and effective temperature over a range of coupling rapidities.
    EntropyScan,
    /// Reduced density matrix on an (x, x') grid, series against quadrature.
    DensityGrid,
    /// Boosted wave functions on a grid plus 1-σ ellipse samples.
    Squeeze,
    /// Interaction-time ratio and entropy for boosted hadrons.
    Parton,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::EntropyScan => "entropy-scan",
            Command::DensityGrid => "density-grid",
            Command::Squeeze => "squeeze",
            Command::Parton => "parton",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Single rapidity (coupling convention for entropy-scan and density-grid, boost otherwise).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub eta: Option<f64>,

    /// Rapidity range, inclusive of both ends.
    #[arg(
        long,
        global = true,
        value_name = "MIN:MAX:STEP",
        allow_hyphen_values = true
    )]
    pub eta_range: Option<RangeSpec>,

    /// Beam energy in GeV (parton); may be repeated.
    #[arg(long, global = true, value_name = "GeV")]
    pub energy: Vec<f64>,

    /// Hadron mass in GeV.
    #[arg(long, global = true, value_name = "GeV", default_value_t = PROTON_MASS_GEV)]
    pub mass: f64,

    /// Series truncation order; defaults to a per-η order with a negligible tail.
    #[arg(long, global = true, value_name = "N")]
    pub kmax: Option<usize>,

    /// Grid along each axis.
    #[arg(
        long,
        global = true,
        value_name = "MIN:MAX:STEP",
        allow_hyphen_values = true
    )]
    pub grid: Option<RangeSpec>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; defaults to <OUT_DIR>/<command>.<ext>, else stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Directory for output files when --out is absent.
    #[arg(long, global = true, value_name = "DIR", env = OUT_DIR_ENV)]
    pub out_dir: Option<PathBuf>,

    /// How a boost rapidity maps to a coupling rapidity.
    #[arg(long, global = true, default_value_t = Bridge::Factor2)]
    pub bridge: Bridge,

    /// Absolute tolerance handed to every quadrature.
    #[arg(long, global = true, value_name = "X", default_value_t = 1e-10)]
    pub tol_quad: f64,

    /// Tolerance for the run's cross-checks (1e-10 for entropy-scan, 1e-8 otherwise).
    #[arg(long, global = true, value_name = "X")]
    pub tol_series: Option<f64>,
}

/// `MIN:MAX:STEP`, inclusive of `MIN` and of `MAX` when it lies on the lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl RangeSpec {
    pub fn single(value: f64) -> Self {
        RangeSpec {
            min: value,
            max: value,
            step: 1.0,
        }
    }

    pub fn count(&self) -> usize {
        // small slack so that 0:1:0.1 keeps its endpoint
        ((self.max - self.min) / self.step * (1.0 + 1e-12) + 1e-9).floor() as usize + 1
    }

    /// Points are `min + i·step`, computed afresh so they do not drift.
    pub fn values(&self) -> Vec<f64> {
        (0..self.count())
            .map(|i| self.min + i as f64 * self.step)
            .collect()
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.min == self.max {
            write!(f, "{}", self.min)
        } else {
            write!(f, "{}:{}:{}", self.min, self.max, self.step)
        }
    }
}

impl Serialize for RangeSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, step] = parts[..] else {
            return Err(format!("expected MIN:MAX:STEP, got `{s}`"));
        };
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("`{p}` is not a finite number"))
        };
        let spec = RangeSpec {
            min: num(min)?,
            max: num(max)?,
            step: num(step)?,
        };
        if spec.step <= 0.0 {
            return Err(format!("step must be positive, got {}", spec.step));
        }
        if spec.max < spec.min {
            return Err(format!(
                "empty range: max {} is below min {}",
                spec.max, spec.min
            ));
        }
        if (spec.max - spec.min) / spec.step >= MAX_RANGE_POINTS as f64 {
            return Err(format!(
                "range `{s}` has more than {MAX_RANGE_POINTS} points"
            ));
        }
        Ok(spec)
    }
}

/// Validated settings for one run. Serialized into the provenance header,
/// so it holds nothing that depends on where the output goes.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub eta: Option<RangeSpec>,
    pub energy: Vec<f64>,
    pub mass: f64,
    pub kmax: Option<usize>,
    pub grid: Option<RangeSpec>,
    pub format: Format,
    pub bridge: Bridge,
    pub tol_quad: f64,
    pub tol_series: f64,
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::Usage(format!(
            "{name} must be a positive finite number, got {v}"
        )))
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let o = &cli.opts;
        let eta = match (o.eta, o.eta_range) {
            (Some(_), Some(_)) => {
                return Err(CliError::Usage(
                    "give either --eta or --eta-range, not both".into(),
                ))
            }
            (Some(e), None) if !e.is_finite() => {
                return Err(CliError::Usage(format!("--eta must be finite, got {e}")))
            }
            (Some(e), None) => Some(RangeSpec::single(e)),
            (None, r) => r,
        };
        if let Some(k) = o.kmax {
            if k > MAX_KMAX {
                return Err(CliError::Usage(format!("--kmax {k} exceeds {MAX_KMAX}")));
            }
        }
        for &e in &o.energy {
            positive("--energy", e)?;
        }
        let default_series = match cli.command {
            Command::EntropyScan => 1e-10,
            _ => 1e-8,
        };
        Ok(RunConfig {
            command: cli.command,
            eta,
            energy: o.energy.clone(),
            mass: positive("--mass", o.mass)?,
            kmax: o.kmax,
            grid: o.grid,
            format: o.format,
            bridge: o.bridge,
            tol_quad: positive("--tol-quad", o.tol_quad)?,
            tol_series: positive("--tol-series", o.tol_series.unwrap_or(default_series))?,
        })
    }

    pub fn eta_values(&self) -> Option<Vec<f64>> {
        self.eta.map(|r| r.values())
    }
}
