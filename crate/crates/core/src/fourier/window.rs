//! Smooth frequency windows: the dyadic Littlewood-Paley family χ_N, smooth
//! balls, (α,β)-sectors of the unit annulus, and sector covers.

use crate::{LabError, Result};

use super::grid::UniformGrid;

/// C^∞ transition: 1 for s ≤ 0, 0 for s ≥ 1, strictly decreasing between,
/// built from the standard e^{−1/s} profile.
pub fn smooth_step_down(s: f64) -> f64 {
    if s <= 0.0 {
        return 1.0;
    }
    if s >= 1.0 {
        return 0.0;
    }
    let f = |u: f64| (-1.0 / u).exp();
    f(1.0 - s) / (f(s) + f(1.0 - s))
}

/// Plateau profile: 1 on |s| ≤ 1, 0 on |s| ≥ 2, smooth between (the
/// "doubled region" convention for cores/supports).
fn core_profile(s: f64) -> f64 {
    smooth_step_down(s.abs() - 1.0)
}

/// χ₀: radially decreasing, ≡ 1 on |ξ| ≤ 1, supported in |ξ| < 2.
pub fn chi0(r: f64) -> f64 {
    smooth_step_down(r.abs() - 1.0)
}

/// χ(ξ) = χ₀(ξ/2) − χ₀(ξ); χ_N(ξ) = χ(ξ/N).
pub fn chi_dyadic(r: f64, n: f64) -> f64 {
    chi0(r / (2.0 * n)) - chi0(r / n)
}

#[derive(Debug, Clone, PartialEq)]
pub enum WindowKind {
    /// χ_N on the dyadic annulus N ≤ |ξ| ≤ 4N (support).
    DyadicAnnulus { n: u64 },
    /// χ₀ low-frequency plateau.
    LowBall,
    /// Smooth bump: 1 on the ball, 0 outside its double.
    Ball { center: Vec<f64>, radius: f64 },
    /// (α,β)-sector of the unit annulus: radial length α centered at r,
    /// chord aperture β around direction ν. Core is the sector, support its
    /// double.
    Sector {
        alpha: f64,
        beta: f64,
        nu: Vec<f64>,
        r: f64,
    },
    /// Smooth indicator of the unit annulus [1/2, 2] with the given relative
    /// transition width.
    UnitAnnulus { transition: f64 },
    /// Axis-aligned product bump: 1 on the box [c−w/2, c+w/2] per axis, 0
    /// outside doubled widths (Knapp supports).
    Box { center: Vec<f64>, widths: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyWindow {
    pub kind: WindowKind,
}

impl FrequencyWindow {
    /// The standard frequency projection window χ_N, N ∈ 2^ℕ₀.
    pub fn chi_n(n: u64) -> Result<Self> {
        if !crate::util::is_dyadic(n) {
            return Err(LabError::invalid(format!("N = {n} is not dyadic")));
        }
        Ok(FrequencyWindow {
            kind: WindowKind::DyadicAnnulus { n },
        })
    }

    pub fn low() -> Self {
        FrequencyWindow {
            kind: WindowKind::LowBall,
        }
    }

    pub fn ball(center: Vec<f64>, radius: f64) -> Self {
        FrequencyWindow {
            kind: WindowKind::Ball { center, radius },
        }
    }

    pub fn sector(alpha: f64, beta: f64, nu: Vec<f64>, r: f64) -> Self {
        FrequencyWindow {
            kind: WindowKind::Sector { alpha, beta, nu, r },
        }
    }

    pub fn unit_annulus(transition: f64) -> Self {
        FrequencyWindow {
            kind: WindowKind::UnitAnnulus { transition },
        }
    }

    pub fn bump_box(center: Vec<f64>, widths: Vec<f64>) -> Self {
        FrequencyWindow {
            kind: WindowKind::Box { center, widths },
        }
    }

    /// Smooth cutoff value at frequency ξ.
    pub fn eval(&self, xi: &[f64]) -> f64 {
        let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        match &self.kind {
            WindowKind::DyadicAnnulus { n } => chi_dyadic(r, *n as f64),
            WindowKind::LowBall => chi0(r),
            WindowKind::Ball { center, radius } => {
                let d2: f64 = xi
                    .iter()
                    .zip(center)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                core_profile(d2.sqrt() / radius)
            }
            WindowKind::Sector { alpha, beta, nu, r: rc } => {
                let radial = core_profile((r - rc) / (alpha / 2.0));
                if radial == 0.0 || r == 0.0 {
                    return 0.0;
                }
                let angular = if xi.len() == 1 {
                    // d=1: "sector" degenerates to the sign component of ν
                    if xi[0] * nu[0] > 0.0 {
                        1.0
                    } else {
                        0.0
                    }
                } else {
                    let chord: f64 = xi
                        .iter()
                        .zip(nu)
                        .map(|(a, b)| (a / r - b) * (a / r - b))
                        .sum::<f64>()
                        .sqrt();
                    core_profile(chord / beta)
                };
                radial * angular
            }
            WindowKind::UnitAnnulus { transition } => {
                // 1 on [1/2, 2], transitions of relative width `transition`
                let w_in = 0.5 * transition;
                let w_out = 2.0 * transition;
                let up = smooth_step_down((0.5 - r) / w_in);
                let down = smooth_step_down((r - 2.0) / w_out);
                up * down
            }
            WindowKind::Box { center, widths } => xi
                .iter()
                .zip(center.iter().zip(widths))
                .map(|(x, (c, w))| core_profile((x - c) / (w / 2.0)))
                .product(),
        }
    }

    /// Support width used for the grid-resolution guard: the smallest
    /// feature size of the cutoff.
    pub fn min_feature(&self) -> f64 {
        match &self.kind {
            WindowKind::DyadicAnnulus { n } => *n as f64,
            WindowKind::LowBall => 1.0,
            WindowKind::Ball { radius, .. } => *radius,
            WindowKind::Sector { alpha, beta, .. } => alpha.min(*beta),
            WindowKind::UnitAnnulus { transition } => 0.5 * transition,
            WindowKind::Box { widths, .. } => widths.iter().cloned().fold(f64::INFINITY, f64::min),
        }
    }

    /// Upper bound for |ξ| on the support (aliasing guard).
    pub fn support_radius(&self, dim: usize) -> f64 {
        match &self.kind {
            WindowKind::DyadicAnnulus { n } => 4.0 * *n as f64,
            WindowKind::LowBall => 2.0,
            WindowKind::Ball { center, radius } => {
                center.iter().map(|c| c * c).sum::<f64>().sqrt() + 2.0 * radius
            }
            WindowKind::Sector { alpha, r, .. } => r + alpha,
            WindowKind::UnitAnnulus { transition } => 2.0 * (1.0 + 2.0 * transition),
            WindowKind::Box { center, widths } => {
                let c: f64 = center.iter().map(|c| c * c).sum::<f64>().sqrt();
                let w: f64 = widths.iter().take(dim).map(|w| w * w).sum::<f64>().sqrt();
                c + w
            }
        }
    }
}

/// A finite cover of the unit annulus by sector (or ball) windows.
#[derive(Debug, Clone)]
pub struct SectorCover {
    pub windows: Vec<FrequencyWindow>,
    /// Asserted pointwise overlap bound (≤ 4^d by construction).
    pub overlap_bound: usize,
}

/// Deterministic cover of the unit annulus {1/2 ≤ |ξ| ≤ 2} by (α,β)-sectors.
/// Cores tile: radial centers spaced α on [1/2, 2], angular centers spaced
/// so adjacent cores touch.
pub fn build_sector_cover(alpha: f64, beta: f64, dim: usize, grid: &UniformGrid) -> Result<SectorCover> {
    if !(alpha > 0.0 && alpha <= 1.0 && beta > 0.0 && beta <= 1.0) {
        return Err(LabError::invalid(format!(
            "sector parameters out of range: alpha = {alpha}, beta = {beta}"
        )));
    }
    if grid.freq_step() * 4.0 > alpha || (dim > 1 && grid.freq_step() * 4.0 > beta) {
        return Err(LabError::UnderResolved(format!(
            "sector cover (alpha = {alpha}, beta = {beta}) below 4 grid resolutions {:.3e}",
            grid.freq_step()
        )));
    }
    let n_rad = ((1.5 / alpha).ceil() as usize).max(1);
    let alpha_eff = 1.5 / n_rad as f64; // cores tile [1/2, 2] exactly
    let radial_centers: Vec<f64> = (0..n_rad)
        .map(|i| 0.5 + alpha_eff * (i as f64 + 0.5))
        .collect();
    let mut windows = Vec::new();
    match dim {
        1 => {
            for sign in [-1.0, 1.0] {
                for &rc in &radial_centers {
                    windows.push(FrequencyWindow::sector(alpha_eff, beta, vec![sign], rc));
                }
            }
        }
        2 => {
            // core arc half-width from the chord constraint |ξ̂ − ν| ≤ β
            let theta_half = 2.0 * (beta / 2.0).asin();
            let n_ang = ((std::f64::consts::PI / theta_half).ceil() as usize).max(1);
            for k in 0..n_ang {
                let th = 2.0 * std::f64::consts::PI * k as f64 / n_ang as f64;
                let nu = vec![th.cos(), th.sin()];
                for &rc in &radial_centers {
                    windows.push(FrequencyWindow::sector(alpha_eff, beta, nu.clone(), rc));
                }
            }
        }
        _ => return Err(LabError::invalid("sector covers implemented for d = 1, 2")),
    }
    Ok(SectorCover {
        windows,
        overlap_bound: 4usize.pow(dim as u32),
    })
}

/// Cover of the unit annulus by smooth balls of the given diameter (the
/// uniformly degenerate decoupling regime).
pub fn build_ball_cover(width: f64, dim: usize, grid: &UniformGrid) -> Result<SectorCover> {
    if !(width > 0.0 && width <= 2.0) {
        return Err(LabError::invalid(format!("ball width {width} out of range")));
    }
    if grid.freq_step() * 4.0 > width {
        return Err(LabError::UnderResolved(format!(
            "ball cover width {width} below 4 grid resolutions"
        )));
    }
    let radius = width / 2.0;
    let n_rad = ((1.5 / width).ceil() as usize).max(1);
    let step = 1.5 / n_rad as f64;
    let radial_centers: Vec<f64> = (0..n_rad).map(|i| 0.5 + step * (i as f64 + 0.5)).collect();
    let mut windows = Vec::new();
    match dim {
        1 => {
            for sign in [-1.0f64, 1.0] {
                for &rc in &radial_centers {
                    windows.push(FrequencyWindow::ball(vec![sign * rc], radius));
                }
            }
        }
        2 => {
            for &rc in &radial_centers {
                let n_ang = ((2.0 * std::f64::consts::PI * rc / width).ceil() as usize).max(4);
                for k in 0..n_ang {
                    let th = 2.0 * std::f64::consts::PI * k as f64 / n_ang as f64;
                    windows.push(FrequencyWindow::ball(
                        vec![rc * th.cos(), rc * th.sin()],
                        radius,
                    ));
                }
            }
        }
        _ => return Err(LabError::invalid("ball covers implemented for d = 1, 2")),
    }
    Ok(SectorCover {
        windows,
        overlap_bound: 6usize.pow(dim as u32),
    })
}

impl SectorCover {
    /// Sum of cutoffs at a frequency point.
    pub fn cover_sum(&self, xi: &[f64]) -> f64 {
        self.windows.iter().map(|w| w.eval(xi)).sum()
    }

    /// Number of windows whose cutoff is nonzero at ξ.
    pub fn overlap_at(&self, xi: &[f64]) -> usize {
        self.windows.iter().filter(|w| w.eval(xi) > 0.0).count()
    }
}
