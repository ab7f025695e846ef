//! Spectral operators: propagators, dyadic spectral projections and
//! Bochner-Riesz means. All are diagonal in the eigenbasis.

use num_complex::Complex64;

use super::field::SpectralField;
use crate::util::is_dyadic;
use crate::{LabError, Result};

/// Which propagator multiplier to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagatorKind {
    /// cos(t√λ): the Hermite wave equation with u̇(0) = 0.
    CosSqrt,
    /// e^{it√λ}: half-wave.
    ExpISqrt,
    /// e^{itλ}: Schrödinger / lens-transform side.
    ExpIH,
}

/// Multiply coefficient at n̲ by the propagator symbol at λ(n̲).
pub fn apply_propagator(c: &SpectralField, t: f64, kind: PropagatorKind) -> SpectralField {
    c.map_by_eigenvalue(|lam| match kind {
        PropagatorKind::CosSqrt => Complex64::new((t * lam.sqrt()).cos(), 0.0),
        PropagatorKind::ExpISqrt => Complex64::from_polar(1.0, t * lam.sqrt()),
        PropagatorKind::ExpIH => Complex64::from_polar(1.0, t * lam),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionKind {
    /// 𝔓_N: keep N²/4 ≤ λ(n̲) ≤ 4N².
    Band,
    /// 𝔓_{≤N}: keep λ(n̲) ≤ 4N².
    Below,
}

/// Dyadic spectral localization of √H.
pub fn spectral_projection(c: &SpectralField, n: u64, kind: ProjectionKind) -> Result<SpectralField> {
    if !is_dyadic(n) {
        return Err(LabError::invalid(format!("N = {n} is not dyadic")));
    }
    let n2 = (n * n) as f64;
    Ok(c.map_by_eigenvalue(|lam| {
        let keep = match kind {
            ProjectionKind::Band => lam >= n2 / 4.0 && lam <= 4.0 * n2,
            ProjectionKind::Below => lam <= 4.0 * n2,
        };
        if keep {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::default()
        }
    }))
}

/// Bochner-Riesz mean (1 − λ(n̲)/λ)_+^α applied to the coefficients.
pub fn bochner_riesz(c: &SpectralField, lambda: f64, alpha: f64) -> Result<SpectralField> {
    if lambda < 1.0 {
        return Err(LabError::invalid(format!("lambda = {lambda} must be >= 1")));
    }
    if alpha < 0.0 {
        return Err(LabError::invalid(format!("alpha = {alpha} must be >= 0")));
    }
    Ok(c.map_by_eigenvalue(|lam| {
        let s = 1.0 - lam / lambda;
        if s > 0.0 {
            Complex64::new(if alpha == 0.0 { 1.0 } else { s.powf(alpha) }, 0.0)
        } else {
            Complex64::default()
        }
    }))
}
