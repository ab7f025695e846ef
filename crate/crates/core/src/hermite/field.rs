//! Spectral fields: coefficients in the Hermite eigenbasis, with synthesis
//! onto uniform grids and analysis back by quadrature.

use num_complex::Complex64;
use rayon::prelude::*;

use super::basis::{hermite_values_into, HermiteBasis};
use crate::fourier::grid::{SampledField, UniformGrid};
use crate::{LabError, Result};

/// Coefficients c indexed by multi-index n̲ with |n̲|_∞ ≤ n_max.
/// d=1: flat index n. d=2: row-major n1·(n_max+1) + n2.
#[derive(Debug, Clone)]
pub struct SpectralField {
    pub dim: usize,
    pub n_max: usize,
    pub coeffs: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(dim: usize, n_max: usize) -> Self {
        let len = (n_max + 1).pow(dim as u32);
        SpectralField {
            dim,
            n_max,
            coeffs: vec![Complex64::default(); len],
        }
    }

    /// Delta coefficient at a multi-index.
    pub fn delta(dim: usize, n_max: usize, multi: &[usize]) -> Result<Self> {
        let mut f = Self::zeros(dim, n_max);
        let idx = f.index_of(multi)?;
        f.coeffs[idx] = Complex64::new(1.0, 0.0);
        Ok(f)
    }

    pub fn index_of(&self, multi: &[usize]) -> Result<usize> {
        if multi.len() != self.dim || multi.iter().any(|&n| n > self.n_max) {
            return Err(LabError::invalid(format!(
                "multi-index {multi:?} out of range for dim {}, n_max {}",
                self.dim, self.n_max
            )));
        }
        Ok(match self.dim {
            1 => multi[0],
            _ => multi[0] * (self.n_max + 1) + multi[1],
        })
    }

    pub fn multi_of(&self, idx: usize) -> Vec<usize> {
        match self.dim {
            1 => vec![idx],
            _ => vec![idx / (self.n_max + 1), idx % (self.n_max + 1)],
        }
    }

    /// λ(n̲) = 2(n₁+…+n_d) + d for the flat index.
    pub fn eigenvalue(&self, idx: usize) -> f64 {
        let m = self.multi_of(idx);
        (2 * m.iter().sum::<usize>() + self.dim) as f64
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Pointwise coefficient map by eigenvalue (all spectral multipliers go
    /// through here).
    pub fn map_by_eigenvalue(&self, f: impl Fn(f64) -> Complex64 + Sync) -> Self {
        let mut out = self.clone();
        out.coeffs
            .iter_mut()
            .enumerate()
            .for_each(|(i, c)| *c *= f(self.eigenvalue(i)));
        out
    }
}

/// Synthesize coefficients to samples on `grid` (defaults to the basis grid
/// when callers pass `&basis.grid`). Grid may be any uniform window; only
/// the spatial axes are used.
pub fn synthesize(basis: &HermiteBasis, field: &SpectralField, grid: &UniformGrid) -> Result<SampledField> {
    check_compat(basis, field, grid)?;
    let n_max = field.n_max;
    let m = grid.samples;
    match field.dim {
        1 => {
            let values: Vec<Complex64> = (0..m)
                .into_par_iter()
                .map_init(
                    || vec![0.0; n_max + 1],
                    |buf, j| {
                        hermite_values_into(n_max, grid.coord(j), buf);
                        let mut acc = Complex64::default();
                        for (c, h) in field.coeffs.iter().zip(buf.iter()) {
                            acc += c * h;
                        }
                        acc
                    },
                )
                .collect();
            Ok(SampledField {
                grid: grid.clone(),
                values,
            })
        }
        _ => {
            let k = n_max + 1;
            // axis tables H[n][j]
            let table = eval_table(n_max, grid);
            // B[n1][j2] = Σ_{n2} c[n1,n2] h_{n2}(y_{j2})
            let mut b = vec![Complex64::default(); k * m];
            b.par_chunks_mut(m).enumerate().for_each(|(n1, row)| {
                for (j2, r) in row.iter_mut().enumerate() {
                    let mut acc = Complex64::default();
                    for n2 in 0..k {
                        acc += field.coeffs[n1 * k + n2] * table[n2 * m + j2];
                    }
                    *r = acc;
                }
            });
            let mut values = vec![Complex64::default(); m * m];
            values.par_chunks_mut(m).enumerate().for_each(|(j1, row)| {
                for n1 in 0..k {
                    let h = table[n1 * m + j1];
                    if h == 0.0 {
                        continue;
                    }
                    for (j2, r) in row.iter_mut().enumerate() {
                        *r += b[n1 * m + j2] * h;
                    }
                }
            });
            Ok(SampledField {
                grid: grid.clone(),
                values,
            })
        }
    }
}

/// Analyze samples into Hermite coefficients by Riemann quadrature on the
/// field's own uniform grid. Valid whenever the integrands h_n·f decay at
/// the grid boundary (reported, not enforced, via the round-trip residual).
pub fn analyze(basis: &HermiteBasis, field: &SampledField, n_max: usize) -> Result<SpectralField> {
    if field.grid.dim != basis.dim {
        return Err(LabError::GridMismatch(format!(
            "field dim {} vs basis dim {}",
            field.grid.dim, basis.dim
        )));
    }
    if n_max > basis.n_max {
        return Err(LabError::GridMismatch(format!(
            "analyze degree {n_max} exceeds basis n_max {}",
            basis.n_max
        )));
    }
    let grid = &field.grid;
    let m = grid.samples;
    let h = grid.cell_volume();
    match basis.dim {
        1 => {
            let coeffs = (0..m)
                .into_par_iter()
                .fold(
                    || (vec![Complex64::default(); n_max + 1], vec![0.0; n_max + 1]),
                    |(mut acc, mut buf), j| {
                        hermite_values_into(n_max, grid.coord(j), &mut buf);
                        let fv = field.values[j] * h;
                        for (a, hv) in acc.iter_mut().zip(buf.iter()) {
                            *a += fv * hv;
                        }
                        (acc, buf)
                    },
                )
                .map(|(acc, _)| acc)
                .reduce(
                    || vec![Complex64::default(); n_max + 1],
                    |mut a, b| {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                        a
                    },
                );
            Ok(SpectralField {
                dim: 1,
                n_max,
                coeffs,
            })
        }
        _ => {
            let k = n_max + 1;
            let table = eval_table(n_max, grid);
            // A[n2][j1] = Σ_{j2} h_{n2}(y_{j2}) f(j1, j2)
            let mut a = vec![Complex64::default(); k * m];
            a.par_chunks_mut(m).enumerate().for_each(|(n2, row)| {
                for (j1, r) in row.iter_mut().enumerate() {
                    let mut acc = Complex64::default();
                    for j2 in 0..m {
                        acc += field.values[j1 * m + j2] * table[n2 * m + j2];
                    }
                    *r = acc;
                }
            });
            let mut coeffs = vec![Complex64::default(); k * k];
            coeffs.par_chunks_mut(k).enumerate().for_each(|(n1, row)| {
                for (n2, c) in row.iter_mut().enumerate() {
                    let mut acc = Complex64::default();
                    for j1 in 0..m {
                        acc += a[n2 * m + j1] * table[n1 * m + j1];
                    }
                    *c = acc * h;
                }
            });
            Ok(SpectralField {
                dim: 2,
                n_max,
                coeffs,
            })
        }
    }
}

fn eval_table(n_max: usize, grid: &UniformGrid) -> Vec<f64> {
    let m = grid.samples;
    let mut table = vec![0.0; (n_max + 1) * m];
    let cols: Vec<Vec<f64>> = (0..m)
        .into_par_iter()
        .map(|j| {
            let mut buf = vec![0.0; n_max + 1];
            hermite_values_into(n_max, grid.coord(j), &mut buf);
            buf
        })
        .collect();
    for (j, col) in cols.iter().enumerate() {
        for n in 0..=n_max {
            table[n * m + j] = col[n];
        }
    }
    table
}

fn check_compat(basis: &HermiteBasis, field: &SpectralField, grid: &UniformGrid) -> Result<()> {
    if field.dim != basis.dim || grid.dim != basis.dim {
        return Err(LabError::GridMismatch(format!(
            "dimension mismatch: basis {}, field {}, grid {}",
            basis.dim, field.dim, grid.dim
        )));
    }
    if field.n_max > basis.n_max {
        return Err(LabError::GridMismatch(format!(
            "field degree {} exceeds basis n_max {}",
            field.n_max, basis.n_max
        )));
    }
    Ok(())
}
