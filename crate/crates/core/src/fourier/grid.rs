//! Uniform spatial grids, sampled fields and continuum-normalized discrete
//! Fourier transforms in d = 1, 2.
//!
//! Conventions (fixed across the whole artifact):
//!   f̂(ξ) = ∫ f(x) e^{−ix·ξ} dx,   f(x) = (2π)^{−d} ∫ f̂(ξ) e^{ix·ξ} dξ.
//! Grids are centered: x_j = −L/2 + j·L/M, frequency lattice ξ_k = (2π/L)·k
//! with k = −M/2 … M/2−1 stored in monotone ("shifted") order.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::sync::Arc;

use crate::{LabError, Result};

/// Optional time axis for space-time fields.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeAxis {
    pub t_min: f64,
    pub t_max: f64,
    pub steps: usize,
}

impl TimeAxis {
    pub fn times(&self) -> Vec<f64> {
        let n = self.steps.max(1);
        (0..n)
            .map(|i| {
                if n == 1 {
                    self.t_min
                } else {
                    self.t_min + (self.t_max - self.t_min) * i as f64 / (n - 1) as f64
                }
            })
            .collect()
    }

    /// Trapezoid quadrature weight of slice `i`.
    pub fn weight(&self, i: usize) -> f64 {
        let n = self.steps.max(1);
        if n == 1 {
            return self.t_max - self.t_min;
        }
        let dt = (self.t_max - self.t_min) / (n - 1) as f64;
        if i == 0 || i == n - 1 {
            0.5 * dt
        } else {
            dt
        }
    }
}

/// Uniform grid on [−L/2, L/2)^d with M samples per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    pub dim: usize,
    pub samples: usize,
    pub extent: f64,
    pub time: Option<TimeAxis>,
}

impl UniformGrid {
    pub fn new(dim: usize, samples: usize, extent: f64) -> Result<Self> {
        if dim == 0 || dim > 2 {
            return Err(LabError::invalid(format!("grid dimension {dim} not in {{1,2}}")));
        }
        if !samples.is_power_of_two() {
            return Err(LabError::invalid(format!(
                "samples per axis must be a power of two, got {samples}"
            )));
        }
        if !(extent > 0.0) {
            return Err(LabError::invalid("grid extent must be positive"));
        }
        Ok(UniformGrid {
            dim,
            samples,
            extent,
            time: None,
        })
    }

    pub fn with_time(mut self, t_min: f64, t_max: f64, steps: usize) -> Self {
        self.time = Some(TimeAxis { t_min, t_max, steps });
        self
    }

    pub fn step(&self) -> f64 {
        self.extent / self.samples as f64
    }

    /// Frequency lattice spacing 2π/L.
    pub fn freq_step(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.extent
    }

    /// Largest resolvable frequency π/Δx (Nyquist).
    pub fn nyquist(&self) -> f64 {
        std::f64::consts::PI / self.step()
    }

    pub fn len(&self) -> usize {
        self.samples.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coord(&self, i: usize) -> f64 {
        -self.extent / 2.0 + self.extent * i as f64 / self.samples as f64
    }

    /// Frequency of shifted index i (monotone order).
    pub fn freq(&self, i: usize) -> f64 {
        let m = self.samples as isize;
        self.freq_step() * (i as isize - m / 2) as f64
    }

    /// Spatial point of flat index `idx` (row-major axis0*M + axis1).
    pub fn point(&self, idx: usize) -> Vec<f64> {
        match self.dim {
            1 => vec![self.coord(idx)],
            _ => vec![self.coord(idx / self.samples), self.coord(idx % self.samples)],
        }
    }

    /// Frequency point of flat shifted index.
    pub fn freq_point(&self, idx: usize) -> Vec<f64> {
        match self.dim {
            1 => vec![self.freq(idx)],
            _ => vec![self.freq(idx / self.samples), self.freq(idx % self.samples)],
        }
    }

    /// The frequency resolution requirement: 2π/L must resolve the finest
    /// window width used (four lattice cells per window width).
    pub fn resolves_width(&self, width: f64) -> bool {
        self.freq_step() <= width / 4.0
    }

    /// Riemann-sum cell volume h^d.
    pub fn cell_volume(&self) -> f64 {
        self.step().powi(self.dim as i32)
    }
}

/// Complex samples of a function on a [`UniformGrid`] (one time slice).
#[derive(Debug, Clone)]
pub struct SampledField {
    pub grid: UniformGrid,
    pub values: Vec<Complex64>,
}

impl SampledField {
    pub fn zeros(grid: &UniformGrid) -> Self {
        SampledField {
            grid: grid.clone(),
            values: vec![Complex64::default(); grid.len()],
        }
    }

    pub fn from_fn(grid: &UniformGrid, mut f: impl FnMut(&[f64]) -> Complex64) -> Self {
        let values = (0..grid.len()).map(|i| f(&grid.point(i))).collect();
        SampledField {
            grid: grid.clone(),
            values,
        }
    }

    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.cell_volume()).sqrt()
    }

    pub fn lp_norm(&self, p: f64) -> f64 {
        if p.is_infinite() {
            return self.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        }
        (self
            .values
            .iter()
            .map(|v| v.norm().powf(p))
            .sum::<f64>()
            * self.grid.cell_volume())
        .powf(1.0 / p)
    }

    /// Relative mass within distance `margin` of the spatial boundary;
    /// used for the periodic wrap-around guard.
    pub fn boundary_mass_fraction(&self, margin: f64) -> f64 {
        let half = self.grid.extent / 2.0;
        let mut near = 0.0;
        let mut total = 0.0;
        for (i, v) in self.values.iter().enumerate() {
            let x = self.grid.point(i);
            let dist_to_boundary = x
                .iter()
                .map(|&c| half - c.abs())
                .fold(f64::INFINITY, f64::min);
            let m = v.norm_sqr();
            total += m;
            if dist_to_boundary < margin {
                near += m;
            }
        }
        if total == 0.0 {
            0.0
        } else {
            near / total
        }
    }
}

/// Complex samples on the frequency lattice of a grid (shifted order).
#[derive(Debug, Clone)]
pub struct SpectrumField {
    pub grid: UniformGrid,
    pub values: Vec<Complex64>,
}

impl SpectrumField {
    pub fn zeros(grid: &UniformGrid) -> Self {
        SpectrumField {
            grid: grid.clone(),
            values: vec![Complex64::default(); grid.len()],
        }
    }

    pub fn from_fn(grid: &UniformGrid, mut f: impl FnMut(&[f64]) -> Complex64) -> Self {
        let values = (0..grid.len()).map(|i| f(&grid.freq_point(i))).collect();
        SpectrumField {
            grid: grid.clone(),
            values,
        }
    }

    /// L² norm with the continuum (2π)^{−d} Plancherel measure, i.e. the L²
    /// norm of the spatial function this spectrum synthesizes to.
    pub fn plancherel_norm(&self) -> f64 {
        let d = self.grid.dim as i32;
        let meas = self.grid.freq_step().powi(d) / (2.0 * std::f64::consts::PI).powi(d);
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * meas).sqrt()
    }
}

/// One FFT context per grid; plans are cached inside the planner.
pub struct FftCtx {
    fwd: Arc<dyn rustfft::Fft<f64>>,
    inv: Arc<dyn rustfft::Fft<f64>>,
    m: usize,
    dim: usize,
}

impl FftCtx {
    pub fn new(grid: &UniformGrid) -> Self {
        let mut planner = FftPlanner::new();
        FftCtx {
            fwd: planner.plan_fft_forward(grid.samples),
            inv: planner.plan_fft_inverse(grid.samples),
            m: grid.samples,
            dim: grid.dim,
        }
    }

    fn transform_axes(&self, data: &mut [Complex64], forward: bool) {
        let m = self.m;
        let fft = if forward { &self.fwd } else { &self.inv };
        match self.dim {
            1 => fft.process(data),
            _ => {
                // rows
                for row in data.chunks_exact_mut(m) {
                    fft.process(row);
                }
                // columns via transpose
                let mut col = vec![Complex64::default(); m];
                for j in 0..m {
                    for i in 0..m {
                        col[i] = data[i * m + j];
                    }
                    fft.process(&mut col);
                    for i in 0..m {
                        data[i * m + j] = col[i];
                    }
                }
            }
        }
    }
}

/// fftshift in place (per axis). Self-inverse for even M.
fn shift(data: &mut [Complex64], m: usize, dim: usize) {
    match dim {
        1 => {
            let half = m / 2;
            for i in 0..half {
                data.swap(i, i + half);
            }
        }
        _ => {
            let half = m / 2;
            for i in 0..m {
                let row = &mut data[i * m..(i + 1) * m];
                for j in 0..half {
                    row.swap(j, j + half);
                }
            }
            for j in 0..m {
                for i in 0..half {
                    data.swap(i * m + j, (i + half) * m + j);
                }
            }
        }
    }
}

/// Continuum-normalized forward transform: samples of f ↦ samples of f̂ on
/// the shifted frequency lattice.
pub fn forward_transform(ctx: &FftCtx, field: &SampledField) -> SpectrumField {
    let grid = &field.grid;
    let m = grid.samples;
    let mut data = field.values.clone();
    // f̂(ξ_k) = h^d Σ_j f(x_j) e^{−i ξ_k x_j}; the centered x-origin becomes a
    // per-axis alternating sign after the raw DFT, and the centered ξ-order is
    // an fftshift.
    shift(&mut data, m, grid.dim); // rotate so x=0 is the first sample
    ctx.transform_axes(&mut data, true);
    shift(&mut data, m, grid.dim);
    let h = grid.cell_volume();
    for v in data.iter_mut() {
        *v *= h;
    }
    SpectrumField {
        grid: grid.clone(),
        values: data,
    }
}

/// Continuum-normalized inverse transform: samples of f̂ ↦ samples of f,
/// including the (2π)^{−d} factor.
pub fn inverse_transform(ctx: &FftCtx, spectrum: &SpectrumField) -> SampledField {
    let grid = &spectrum.grid;
    let m = grid.samples;
    let mut data = spectrum.values.clone();
    shift(&mut data, m, grid.dim); // ξ=0 first
    ctx.transform_axes(&mut data, false);
    shift(&mut data, m, grid.dim);
    let d = grid.dim as i32;
    let scale = grid.freq_step().powi(d) / (2.0 * std::f64::consts::PI).powi(d);
    for v in data.iter_mut() {
        *v *= scale;
    }
    SampledField {
        grid: grid.clone(),
        values: data,
    }
}
