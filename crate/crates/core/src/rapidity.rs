//! Squeeze parameters in the two conventions used by this crate.
//!
//! The coupled-oscillator ground state squeezes its normal coordinates by
//! `e^{±η}`, while a Lorentz boost squeezes the light-cone coordinates of the
//! covariant oscillator by `e^{±2η}` at the level of the wave-function
//! exponent. The two parameters are therefore not interchangeable, and mixing
//! them up silently halves or doubles every derived quantity. [`Rapidity`]
//! carries its convention in the type so that functions can only accept the
//! one they were written for; conversions go through [`Bridge`].

use std::fmt;
use std::marker::PhantomData;

use serde::{Deserialize, Serialize};

/// Convention tag carried at runtime, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Coupling,
    Boost,
}

mod sealed {
    pub trait Sealed {}
}

/// Type-level marker for a rapidity convention.
pub trait RapidityConvention: sealed::Sealed + Copy + fmt::Debug {
    const KIND: Convention;
}

/// The coupled-oscillator convention: `e^η = sqrt((K + C) / (K − C))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coupling;

/// The Lorentz-boost convention: `z' = z cosh η + t sinh η`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Boost;

impl sealed::Sealed for Coupling {}
impl sealed::Sealed for Boost {}

impl RapidityConvention for Coupling {
    const KIND: Convention = Convention::Coupling;
}

impl RapidityConvention for Boost {
    const KIND: Convention = Convention::Boost;
}

/// A dimensionless squeeze parameter tagged with its convention.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct Rapidity<C: RapidityConvention> {
    value: f64,
    _convention: PhantomData<C>,
}

pub type CouplingRapidity = Rapidity<Coupling>;
pub type BoostRapidity = Rapidity<Boost>;

impl<C: RapidityConvention> Rapidity<C> {
    pub const fn new(value: f64) -> Self {
        Self {
            value,
            _convention: PhantomData,
        }
    }

    pub const fn value(self) -> f64 {
        self.value
    }

    pub const fn convention(self) -> Convention {
        C::KIND
    }

    /// Same convention, `|η|`.
    pub fn abs(self) -> Self {
        Self::new(self.value.abs())
    }
}

impl Rapidity<Coupling> {
    pub const fn coupling(value: f64) -> Self {
        Self::new(value)
    }

    /// Boost rapidity whose covariant wave function matches this
    /// coupled-oscillator ground state under `bridge`.
    pub fn to_boost(self, bridge: Bridge) -> Rapidity<Boost> {
        Rapidity::new(self.value / bridge.factor())
    }
}

impl Rapidity<Boost> {
    pub const fn boost(value: f64) -> Self {
        Self::new(value)
    }

    /// Coupling rapidity of the coupled-oscillator ground state identified
    /// with the boosted wave function under `bridge`.
    pub fn to_coupling(self, bridge: Bridge) -> Rapidity<Coupling> {
        Rapidity::new(self.value * bridge.factor())
    }
}

impl<C: RapidityConvention> fmt::Debug for Rapidity<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rapidity<{:?}>({})", C::KIND, self.value)
    }
}

impl<C: RapidityConvention> fmt::Display for Rapidity<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl<C: RapidityConvention> From<Rapidity<C>> for f64 {
    fn from(r: Rapidity<C>) -> f64 {
        r.value
    }
}

/// How a boost rapidity maps onto a coupling rapidity.
///
/// `Factor2` is the identification under which the boosted space-time
/// Gaussian coincides pointwise with the coupled-oscillator ground state
/// (`x₁ = z`, `x₂ = t`): the boost exponents are `e^{±2η_b}` and the
/// coupled exponents are `e^{±η_c}`, so `η_c = 2 η_b`. `Identity` takes the
/// two parameters to be equal, which is what a literal reading of "the same
/// functional form" suggests; it is kept so both readings can be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bridge {
    #[default]
    Factor2,
    Identity,
}

impl Bridge {
    pub const fn factor(self) -> f64 {
        match self {
            Bridge::Factor2 => 2.0,
            Bridge::Identity => 1.0,
        }
    }
}

impl fmt::Display for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bridge::Factor2 => "factor2",
            Bridge::Identity => "identity",
        })
    }
}

impl std::str::FromStr for Bridge {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "factor2" => Ok(Bridge::Factor2),
            "identity" => Ok(Bridge::Identity),
            other => Err(format!(
                "unknown bridge `{other}` (expected factor2 or identity)"
            )),
        }
    }
}
