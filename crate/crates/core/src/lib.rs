//! Numerical laboratory for dispersive estimates of the Hermite wave equation
//! and its Klein-Gordon linearization.
//!
//! The crate is organized around the pipeline of the underlying analysis:
//!
//! * [`hermite`] — exact spectral calculus for the harmonic oscillator
//!   `H = -Δ + |x|²` in d = 1, 2: Gauss-Hermite quadrature, eigenfunction
//!   synthesis/analysis, half-wave and Schrödinger propagators, Bochner-Riesz
//!   means and the lens transform.
//! * [`fourier`] — grid-based Fourier analysis: Klein-Gordon extension
//!   operators `S_{m²}`, dyadic/sector frequency projections, sector covers of
//!   the unit annulus and weighted space-time `L^p` norms.
//! * [`eikonal`] — the eikonal equation with symbol `p(x,ξ) = √(|x|²+|ξ|²)`:
//!   exact Hamiltonian characteristics, phase evaluation, rescaled phases,
//!   linearization error and its Fourier coefficients, and the
//!   Cauchy-Kowalevskaya majorant.
//! * [`knapp`] — extremizing initial data (anisotropic/isotropic Knapp
//!   examples) and the exponents they force.
//! * [`smoothing`] — empirical exponent measurement: local-smoothing fits,
//!   fixed-time bounds, curvature spectra, square-function and decoupling
//!   constants, the Kakeya maximal operator, and the Hermite vs Klein-Gordon
//!   consistency experiment.
//! * [`bourgain`] — the Lee-Ryu phase geometry and the Bourgain-condition
//!   test (generic failure).
//!
//! All operations are pure functions of immutable inputs and safe to call
//! concurrently; long sweeps parallelize internally with rayon.

pub mod bourgain;
pub mod eikonal;
pub mod error;
pub mod fit;
pub mod fourier;
pub mod hermite;
pub mod io;
pub mod knapp;
pub mod smoothing;
pub mod util;

pub use error::LabError;
pub type Result<T> = std::result::Result<T, LabError>;
