//! Steady states of Lindblad master equations as analytic functions of a
//! perturbation parameter.
//!
//! For a Liouvillian split as `L = L0 + v L1` with a unique steady state, the
//! trace-excluding group (Drazin) inverse `L0⁻` turns the perturbed nullspace
//! problem into a resolvent: `ρ_v = (1 + v L0⁻ L1)⁻¹ ρ0`. One
//! eigendecomposition of `L0⁻ L1` then yields the steady state for every `v`,
//! along with closed-form derivatives and ensemble averages, without
//! re-solving per parameter value.
//!
//! The crate is organized around that pipeline:
//!
//! - [`superop`]: vectorization algebra and Liouvillian assembly,
//! - [`spectral`]: dense eigendecomposition and nullspace extraction,
//! - [`drazin`]: the group inverse, by two independent constructions,
//! - [`propagator`]: the resolvent basis, sweeps, derivatives, sensitivities,
//! - [`ensemble`]: Gaussian/Lorentzian averages in closed form, plus
//!   quadrature and sampling baselines,
//! - [`perturbation`]: the truncated series this method supersedes,
//! - [`floquet`]: block-tridiagonal treatment of periodic modulation,
//! - [`models`]: the shipped physical systems behind a common [`models::Model`]
//!   trait, selectable by name.
//!
//! All frequencies and rates are angular (rad per unit time); conversions from
//! Hz-like inputs happen at the model-parameter boundary.

pub mod drazin;
pub mod ensemble;
pub mod error;
pub mod floquet;
pub mod linalg;
pub mod models;
pub mod perturbation;
pub mod propagator;
pub mod quad;
pub mod special;
pub mod spectral;
pub mod superop;

pub use error::{Error, Result};
pub use superop::{CMatrix, CVector};
