//! Lens (pseudo-conformal) transform cross-check: the harmonic-oscillator
//! Schrödinger flow e^{itH} against the lens-transformed free flow.
//!
//! Conventions (fixed by the closed-form Gaussian check): with
//! u(t) = e^{itH}u₀ and v̂(s,ξ) = e^{+is|ξ|²}û₀(ξ),
//!     u(t,x) = (cos 2t)^{−d/2} · v(tan(2t)/2, x/cos 2t) · e^{+i|x|² tan(2t)/2}
//! for |t| < π/4.

use num_complex::Complex64;

use super::basis::HermiteBasis;
use super::field::{analyze, synthesize};
use super::ops::{apply_propagator, PropagatorKind};
use crate::fourier::grid::{forward_transform, inverse_transform, FftCtx, SampledField};
use crate::{LabError, Result};

/// Catmull-Rom interpolation of a complex grid function at point `y`.
/// Returns 0 outside the grid (fields decay at the boundary).
fn interp_cubic(field: &SampledField, y: f64) -> Complex64 {
    let grid = &field.grid;
    let h = grid.step();
    let pos = (y + grid.extent / 2.0) / h;
    let j = pos.floor() as isize;
    let tau = pos - j as f64;
    let m = grid.samples as isize;
    let sample = |k: isize| -> Complex64 {
        if k < 0 || k >= m {
            Complex64::default()
        } else {
            field.values[k as usize]
        }
    };
    let (p0, p1, p2, p3) = (sample(j - 1), sample(j), sample(j + 1), sample(j + 2));
    let t2 = tau * tau;
    let t3 = t2 * tau;
    0.5 * ((2.0 * p1)
        + (p2 - p0) * tau
        + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t2
        + (3.0 * p1 - p0 - 3.0 * p2 + p3) * t3)
}

/// Evolve `u0` to time `t` two independent ways — spectrally via e^{itH} and
/// via the lens-transformed free Schrödinger flow — and return the relative
/// L² discrepancy. `u0` must be Hermite-band-limited within `basis`.
pub fn lens_transform_check(basis: &HermiteBasis, u0: &SampledField, t: f64) -> Result<f64> {
    if basis.dim != 1 || u0.grid.dim != 1 {
        return Err(LabError::invalid("lens check is implemented for d = 1"));
    }
    let c2t = (2.0 * t).cos();
    if c2t < 0.1 {
        return Err(LabError::OutOfDomain(format!(
            "cos(2t) = {c2t:.3} below threshold 0.1 (|t| too close to π/4)"
        )));
    }
    // spectral route
    let c = analyze(basis, u0, basis.n_max)?;
    let ct = apply_propagator(&c, t, PropagatorKind::ExpIH);
    let u_spec = synthesize(basis, &ct, &u0.grid)?;

    // lens route: free Schrödinger on the same grid
    let ctx = FftCtx::new(&u0.grid);
    let mut vh = forward_transform(&ctx, u0);
    let s = (2.0 * t).tan() / 2.0;
    for (i, v) in vh.values.iter_mut().enumerate() {
        let xi = vh.grid.freq(i);
        *v *= Complex64::from_polar(1.0, s * xi * xi);
    }
    let v = inverse_transform(&ctx, &vh);
    let scale = (1.0 / c2t).sqrt();
    let tan2t = (2.0 * t).tan();
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 0..u0.grid.samples {
        let x = u0.grid.coord(j);
        let u_lens =
            scale * interp_cubic(&v, x / c2t) * Complex64::from_polar(1.0, x * x * tan2t / 2.0);
        num += (u_lens - u_spec.values[j]).norm_sqr();
        den += u_spec.values[j].norm_sqr();
    }
    if den == 0.0 {
        return Err(LabError::Degenerate("zero field in lens check".into()));
    }
    Ok((num / den).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::grid::UniformGrid;
    use crate::hermite::field::SpectralField;
    use crate::util::rng_for;
    use rand::Rng;

    fn lens_grid() -> UniformGrid {
        UniformGrid::new(1, 4096, 48.0).unwrap()
    }

    #[test]
    fn zero_time_residual_vanishes() {
        let basis = HermiteBasis::new(1, 32).unwrap();
        let grid = lens_grid();
        let c = SpectralField::delta(1, 32, &[3]).unwrap();
        let u0 = synthesize(&basis, &c, &grid).unwrap();
        let r = lens_transform_check(&basis, &u0, 0.0).unwrap();
        assert!(r < 1e-10, "t=0 residual {r:.3e}");
    }

    #[test]
    fn ground_state_closed_form() {
        let basis = HermiteBasis::new(1, 32).unwrap();
        let grid = lens_grid();
        let c = SpectralField::delta(1, 32, &[0]).unwrap();
        let u0 = synthesize(&basis, &c, &grid).unwrap();
        let r = lens_transform_check(&basis, &u0, std::f64::consts::PI / 16.0).unwrap();
        assert!(r < 1e-6, "h0 lens residual {r:.3e}");
    }

    #[test]
    fn random_band_limited_data() {
        let basis = HermiteBasis::new(1, 48).unwrap();
        let grid = lens_grid();
        let mut rng = rng_for(9, "lens");
        let mut c = SpectralField::zeros(1, 48);
        for v in c.coeffs.iter_mut() {
            *v = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let u0 = synthesize(&basis, &c, &grid).unwrap();
        let r = lens_transform_check(&basis, &u0, std::f64::consts::PI / 16.0).unwrap();
        assert!(r < 1e-4, "random lens residual {r:.3e}");
    }

    #[test]
    fn refuses_near_quarter_period() {
        let basis = HermiteBasis::new(1, 8).unwrap();
        let grid = lens_grid();
        let c = SpectralField::delta(1, 8, &[0]).unwrap();
        let u0 = synthesize(&basis, &c, &grid).unwrap();
        assert!(lens_transform_check(&basis, &u0, 0.78).is_err());
    }
}
