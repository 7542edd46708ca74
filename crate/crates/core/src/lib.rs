//! Coupled and Lorentz-squeezed harmonic oscillators.
//!
//! * [`oscillator`]: two coupled oscillators, normal coordinates, the
//!   squeezed ground state and its diagonal expansion in Hermite functions.
//! * [`reduced`]: the density matrix left after tracing out one oscillator,
//!   with purity, entropy, effective temperature and uncertainty.
//! * [`covariant`]: boosts, light-cone variables, quark coordinates, and the
//!   boosted space-time and momentum-energy wave functions.
//! * [`parton`]: squeeze-axis scales, the interaction-time ratio, beam
//!   rapidity and the entropy of a boosted hadron.
//!
//! Supporting pieces are [`rapidity`] (typed squeeze parameters),
//! [`hermite`] (stable Hermite functions) and [`quadrature`] (adaptive
//! Gauss–Kronrod and Gauss–Hermite rules used as independent cross-checks).

pub mod covariant;
pub mod error;
pub mod hermite;
pub mod oscillator;
pub mod parton;
pub mod quadrature;
pub mod rapidity;
pub mod reduced;

pub use error::{Error, Result};
pub use rapidity::{
    Boost, BoostRapidity, Bridge, Convention, Coupling, CouplingRapidity, Rapidity,
};
