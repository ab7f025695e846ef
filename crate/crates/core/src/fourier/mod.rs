//! Grid-based Fourier analysis: extension operators, frequency windows,
//! sector covers, and weighted space-time norms.

pub mod extension;
pub mod grid;
pub mod norms;
pub mod window;

pub use extension::{extension_for_each_slice, extension_kg, project, SpaceTimeField};
pub use grid::{forward_transform, inverse_transform, FftCtx, SampledField, SpectrumField, UniformGrid};
pub use norms::{default_weight_power, lp_spacetime_norm, NormAccumulator, NormSpec, Region, Weight};
pub use window::{build_ball_cover, build_sector_cover, FrequencyWindow, SectorCover};
