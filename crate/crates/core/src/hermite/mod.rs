//! Exact Hermite-operator spectral calculus in d = 1, 2.

pub mod basis;
pub mod field;
pub mod lens;
pub mod ops;

pub use basis::{eval_hermite, eval_hermite_deriv, gauss_hermite, HermiteBasis};
pub use field::{analyze, synthesize, SpectralField};
pub use lens::lens_transform_check;
pub use ops::{apply_propagator, bochner_riesz, spectral_projection, ProjectionKind, PropagatorKind};

/// Default unquantified constant for the low-frequency cutoff 𝔓_{≥C}
/// (exposed as a parameter; the underlying estimate only needs "C large").
pub fn default_low_cut(dim: usize) -> f64 {
    10.0 * dim as f64
}
