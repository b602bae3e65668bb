//! Background driving characteristic functions, distribution functions and exact
//! samplers for selfdecomposable laws.
//!
//! A selfdecomposable `X` with CF `phi` is the stationary law of an Ornstein–Uhlenbeck
//! type process driven by a Lévy process `Y`; the CF of `Y(1)` is
//! `psi(t) = exp(t phi'(t) / phi(t))`. This crate evaluates `psi` for a small catalog
//! of laws (gamma, log-gamma, Lévy, symmetric 1-stable, Bessel-K), inverts it to the
//! distribution function of `Y(1)`, draws samples through series and compound-Poisson
//! representations, and checks the associated identities numerically.

pub mod charfn;
pub mod error;
pub mod inversion;
pub mod quadrature;
pub mod rng;
pub mod samplers;
pub mod specfun;
pub mod stats;
pub mod validation;

pub use charfn::{
    BesselKParams, DistributionModel, GammaParams, LevyParams, LogGammaParams, ModelKind,
    SymStable1Params,
};
pub use error::{Error, Result};
pub use inversion::{CdfPoint, QuadratureConfig};
pub use rng::RngStream;
pub use samplers::{SampleBatch, SeriesConfig};
pub use specfun::ComplexValue;
pub use validation::{IdentityReport, SuiteConfig};
