//! Klein-Gordon extension operators and smooth frequency projections on
//! uniform grids.
//!
//! S_{m²} f(x,t) = (2π)^{−d} ∫ e^{i(x·ξ + t√(|ξ|²+m²))} w(ξ) f̂(ξ) dξ,
//! realized per time slice by a multiplier followed by the inverse discrete
//! transform. The (2π)^{−d} normalization makes the t = 0 slice equal to the
//! smooth projection of f itself.

use num_complex::Complex64;

use super::grid::{inverse_transform, FftCtx, SampledField, SpectrumField, UniformGrid};
use super::window::FrequencyWindow;
use crate::{LabError, Result};

/// Space-time samples: one spatial slice per time node.
#[derive(Debug, Clone)]
pub struct SpaceTimeField {
    pub grid: UniformGrid,
    pub times: Vec<f64>,
    pub slices: Vec<Vec<Complex64>>,
}

fn aliasing_guard(grid: &UniformGrid, window: Option<&FrequencyWindow>) -> Result<()> {
    if let Some(w) = window {
        if w.support_radius(grid.dim) >= grid.nyquist() {
            return Err(LabError::Aliasing(format!(
                "window support radius {:.3} touches the Nyquist box {:.3}",
                w.support_radius(grid.dim),
                grid.nyquist()
            )));
        }
        if !grid.resolves_width(w.min_feature()) {
            return Err(LabError::UnderResolved(format!(
                "frequency resolution {:.3e} does not resolve window feature {:.3e}",
                grid.freq_step(),
                w.min_feature()
            )));
        }
    }
    Ok(())
}

/// Apply the window multiplier to a spectrum (no-op when `window` is None).
pub fn apply_window(fhat: &SpectrumField, window: Option<&FrequencyWindow>) -> SpectrumField {
    match window {
        None => fhat.clone(),
        Some(w) => {
            let mut out = fhat.clone();
            for (i, v) in out.values.iter_mut().enumerate() {
                let xi = fhat.grid.freq_point(i);
                *v *= w.eval(&xi);
            }
            out
        }
    }
}

/// Stream the extension slices u(·, t_i) in time order through `visit`.
/// `m2` is the squared mass in the dispersion √(|ξ|² + m²).
pub fn extension_for_each_slice(
    ctx: &FftCtx,
    fhat: &SpectrumField,
    m2: f64,
    window: Option<&FrequencyWindow>,
    times: &[f64],
    mut visit: impl FnMut(usize, f64, &SampledField),
) -> Result<()> {
    if m2 < 0.0 {
        return Err(LabError::invalid("m² must be nonnegative"));
    }
    let grid = &fhat.grid;
    aliasing_guard(grid, window)?;
    let windowed = apply_window(fhat, window);
    let omegas: Vec<f64> = (0..grid.len())
        .map(|i| {
            let xi = grid.freq_point(i);
            (xi.iter().map(|v| v * v).sum::<f64>() + m2).sqrt()
        })
        .collect();
    let mut slice_spec = SpectrumField::zeros(grid);
    for (i, &t) in times.iter().enumerate() {
        for (k, v) in slice_spec.values.iter_mut().enumerate() {
            *v = windowed.values[k] * Complex64::from_polar(1.0, t * omegas[k]);
        }
        let u = inverse_transform(ctx, &slice_spec);
        visit(i, t, &u);
    }
    Ok(())
}

/// Materialized extension on a grid with a time axis.
pub fn extension_kg(
    fhat: &SpectrumField,
    m2: f64,
    window: Option<&FrequencyWindow>,
    grid: &UniformGrid,
) -> Result<SpaceTimeField> {
    let axis = grid
        .time
        .as_ref()
        .ok_or_else(|| LabError::invalid("extension_kg needs a time axis"))?;
    if grid.dim != fhat.grid.dim || grid.samples != fhat.grid.samples
        || (grid.extent - fhat.grid.extent).abs() > 1e-12
    {
        return Err(LabError::GridMismatch(
            "spectrum grid and target grid differ".into(),
        ));
    }
    let ctx = FftCtx::new(grid);
    let times = axis.times();
    let mut slices = Vec::with_capacity(times.len());
    extension_for_each_slice(&ctx, fhat, m2, window, &times, |_, _, u| {
        slices.push(u.values.clone());
    })?;
    Ok(SpaceTimeField {
        grid: grid.clone(),
        times,
        slices,
    })
}

/// Smooth Fourier projection P_θ f.
pub fn project(f: &SampledField, window: &FrequencyWindow) -> Result<SampledField> {
    let ctx = FftCtx::new(&f.grid);
    aliasing_guard(&f.grid, Some(window))?;
    let fhat = super::grid::forward_transform(&ctx, f);
    let wfhat = apply_window(&fhat, Some(window));
    Ok(inverse_transform(&ctx, &wfhat))
}

/// Project a spectrum by an explicit multiplier table (partition-of-unity
/// members and other custom multipliers).
pub fn project_spectrum_with(fhat: &SpectrumField, multiplier: &[f64]) -> Result<SpectrumField> {
    if multiplier.len() != fhat.values.len() {
        return Err(LabError::GridMismatch("multiplier length mismatch".into()));
    }
    let mut out = fhat.clone();
    for (v, &m) in out.values.iter_mut().zip(multiplier) {
        *v *= m;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::grid::forward_transform;
    use crate::fourier::window::{build_sector_cover, FrequencyWindow};
    use crate::util::rng_for;
    use rand::Rng;

    fn gaussian_spectrum(grid: &UniformGrid, center: f64, width: f64) -> SpectrumField {
        SpectrumField::from_fn(grid, |xi| {
            let d2: f64 = xi
                .iter()
                .enumerate()
                .map(|(a, v)| {
                    let c = if a == 0 { center } else { 0.0 };
                    (v - c) * (v - c)
                })
                .sum();
            Complex64::new((-d2 / (2.0 * width * width)).exp(), 0.0)
        })
    }

    #[test]
    fn zero_time_full_window_is_inverse_transform() {
        let grid = UniformGrid::new(1, 256, 60.0).unwrap().with_time(0.0, 0.0, 1);
        let fhat = gaussian_spectrum(&grid, 1.0, 0.3);
        let st = extension_kg(&fhat, 0.7, None, &grid).unwrap();
        let ctx = FftCtx::new(&grid);
        let direct = inverse_transform(&ctx, &fhat);
        for (a, b) in st.slices[0].iter().zip(&direct.values) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn single_mode_has_constant_modulus_and_linear_phase() {
        let grid = UniformGrid::new(1, 128, 32.0).unwrap().with_time(0.0, 2.0, 3);
        let mut fhat = SpectrumField::zeros(&grid);
        let k0 = 70; // some positive frequency index
        fhat.values[k0] = Complex64::new(1.0, 0.0);
        let xi0 = grid.freq(k0);
        let st = extension_kg(&fhat, 0.0, None, &grid).unwrap();
        let amp = st.slices[0][0].norm();
        for (s, &t) in st.slices.iter().zip(&st.times) {
            for (j, v) in s.iter().enumerate() {
                assert!((v.norm() - amp).abs() < 1e-12);
                let x = grid.coord(j);
                let expect = Complex64::from_polar(amp, x * xi0 + t * xi0.abs());
                assert!((v - expect).norm() < 1e-10, "t={t} x={x}");
            }
        }
    }

    #[test]
    fn time_slices_conserve_l2_mass() {
        let grid = UniformGrid::new(1, 512, 80.0).unwrap().with_time(0.0, 5.0, 9);
        let fhat = gaussian_spectrum(&grid, 1.0, 0.2);
        let st = extension_kg(&fhat, 1.0, None, &grid).unwrap();
        let h = grid.cell_volume();
        let masses: Vec<f64> = st
            .slices
            .iter()
            .map(|s| (s.iter().map(|v| v.norm_sqr()).sum::<f64>() * h).sqrt())
            .collect();
        for m in &masses[1..] {
            assert!((m - masses[0]).abs() < 1e-10 * masses[0].max(1.0));
        }
    }

    #[test]
    fn matches_per_mode_summation_oracle() {
        // m² = 0 half-wave against a direct sum over ≤ 64 modes
        let grid = UniformGrid::new(1, 64, 16.0).unwrap().with_time(0.0, 1.5, 2);
        let mut fhat = SpectrumField::zeros(&grid);
        let mut rng = rng_for(2, "modes");
        let mut modes = Vec::new();
        for _ in 0..48 {
            let k = rng.gen_range(0..grid.len());
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            fhat.values[k] += c;
        }
        for k in 0..grid.len() {
            if fhat.values[k].norm() > 0.0 {
                modes.push((grid.freq(k), fhat.values[k]));
            }
        }
        let st = extension_kg(&fhat, 0.0, None, &grid).unwrap();
        let meas = grid.freq_step() / (2.0 * std::f64::consts::PI);
        for (s, &t) in st.slices.iter().zip(&st.times) {
            for j in (0..grid.len()).step_by(7) {
                let x = grid.coord(j);
                let mut acc = Complex64::default();
                for &(xi, c) in &modes {
                    acc += c * Complex64::from_polar(1.0, x * xi + t * xi.abs());
                }
                acc *= meas;
                assert!((acc - s[j]).norm() < 1e-10, "t={t} j={j}");
            }
        }
    }

    #[test]
    fn aliasing_guard_refuses_nyquist_window() {
        let grid = UniformGrid::new(1, 64, 64.0).unwrap().with_time(0.0, 1.0, 2);
        let fhat = SpectrumField::zeros(&grid);
        // Nyquist is π; a dyadic annulus with N=1 reaches 4 > π
        let w = FrequencyWindow::chi_n(1).unwrap();
        assert!(extension_kg(&fhat, 0.0, Some(&w), &grid).is_err());
    }

    #[test]
    fn projection_of_full_support_window_is_identity() {
        let grid = UniformGrid::new(1, 256, 60.0).unwrap();
        let ctx = FftCtx::new(&grid);
        let fhat = gaussian_spectrum(&grid, 1.0, 0.05);
        let f = inverse_transform(&ctx, &fhat);
        // window ≡ 1 on supp f̂ (unit annulus plateau covers the bump)
        let w = FrequencyWindow::unit_annulus(0.125);
        let pf = project(&f, &w).unwrap();
        let num: f64 = pf
            .values
            .iter()
            .zip(&f.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let den = f.l2_norm() / grid.cell_volume().sqrt();
        assert!(num / den < 1e-8, "{:.3e}", num / den);
    }

    #[test]
    fn disjoint_sectors_are_orthogonal() {
        let grid = UniformGrid::new(2, 128, 40.0).unwrap();
        let ctx = FftCtx::new(&grid);
        let fhat = gaussian_spectrum(&grid, 1.0, 0.4);
        let f = inverse_transform(&ctx, &fhat);
        let w1 = FrequencyWindow::sector(0.5, 0.3, vec![1.0, 0.0], 1.0);
        let w2 = FrequencyWindow::sector(0.5, 0.3, vec![-1.0, 0.0], 1.0);
        let p1 = project(&f, &w1).unwrap();
        let p2 = project(&f, &w2).unwrap();
        let inner: Complex64 = p1
            .values
            .iter()
            .zip(&p2.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        assert!(inner.norm() * grid.cell_volume() < 1e-12);
    }

    #[test]
    fn projection_idempotent_on_core() {
        let grid = UniformGrid::new(1, 512, 120.0).unwrap();
        let ctx = FftCtx::new(&grid);
        // bump strictly inside the sector core
        let fhat = gaussian_spectrum(&grid, 1.0, 0.02);
        let f = inverse_transform(&ctx, &fhat);
        let w = FrequencyWindow::sector(0.8, 0.5, vec![1.0], 1.0);
        let p1 = project(&f, &w).unwrap();
        let p2 = project(&p1, &w).unwrap();
        let mut max_err: f64 = 0.0;
        for (a, b) in p1.values.iter().zip(&p2.values) {
            max_err = max_err.max((a - b).norm());
        }
        assert!(max_err < 1e-12, "idempotence err {max_err:.3e}");
    }

    #[test]
    fn partition_of_unity_reconstructs_on_annulus() {
        let grid = UniformGrid::new(2, 256, 80.0).unwrap();
        let ctx = FftCtx::new(&grid);
        let cover = build_sector_cover(0.5, 0.25, 2, &grid).unwrap();
        // data supported on the annulus
        let fhat = SpectrumField::from_fn(&grid, |xi| {
            let r = (xi[0] * xi[0] + xi[1] * xi[1]).sqrt();
            if (0.6..=1.8).contains(&r) {
                Complex64::new((-(r - 1.2) * (r - 1.2) * 40.0).exp(), 0.2)
            } else {
                Complex64::default()
            }
        });
        // subordinate partition of unity: normalize by the cover sum
        let sums: Vec<f64> = (0..grid.len())
            .map(|i| cover.cover_sum(&grid.freq_point(i)))
            .collect();
        let mut recon = SpectrumField::zeros(&grid);
        for w in &cover.windows {
            for i in 0..grid.len() {
                let xi = grid.freq_point(i);
                let m = if sums[i] > 0.0 { w.eval(&xi) / sums[i] } else { 0.0 };
                recon.values[i] += fhat.values[i] * m;
            }
        }
        let f = inverse_transform(&ctx, &fhat);
        let g = inverse_transform(&ctx, &recon);
        let mut max_err: f64 = 0.0;
        for (a, b) in f.values.iter().zip(&g.values) {
            max_err = max_err.max((a - b).norm());
        }
        assert!(max_err < 1e-10, "partition reconstruction err {max_err:.3e}");
    }

    #[test]
    fn project_commutes_with_extension() {
        let grid = UniformGrid::new(1, 256, 60.0).unwrap().with_time(0.4, 0.4, 1);
        let fhat = gaussian_spectrum(&grid, 1.0, 0.2);
        let w = FrequencyWindow::sector(0.8, 0.5, vec![1.0], 1.25);
        // P_θ then extension
        let ctx = FftCtx::new(&grid);
        let pf = apply_window(&fhat, Some(&w));
        let a = extension_kg(&pf, 0.5, None, &grid).unwrap();
        // extension then P_θ on the slice
        let b_st = extension_kg(&fhat, 0.5, None, &grid).unwrap();
        let b_slice = SampledField {
            grid: UniformGrid::new(1, 256, 60.0).unwrap(),
            values: b_st.slices[0].clone(),
        };
        let pb = project(&b_slice, &w).unwrap();
        let _ = &ctx;
        let mut max_err: f64 = 0.0;
        for (x, y) in a.slices[0].iter().zip(&pb.values) {
            max_err = max_err.max((x - y).norm());
        }
        assert!(max_err < 1e-12, "commute err {max_err:.3e}");
    }
}
