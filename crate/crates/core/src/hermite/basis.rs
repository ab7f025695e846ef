//! Hermite functions and Gauss-Hermite quadrature.
//!
//! The L²-normalized eigenfunctions of H = −d²/dx² + x² are evaluated with
//! the normalized three-term recurrence
//!     h₀(x) = π^{−1/4} e^{−x²/2},   h₁(x) = √2 x h₀(x),
//!     h_{k+1}(x) = x √(2/(k+1)) h_k(x) − √(k/(k+1)) h_{k−1}(x),
//! which is overflow-free once the seed is carried in scaled form (the
//! Rodrigues formula overflows already near n ≈ 150).

use crate::fourier::grid::UniformGrid;
use crate::{LabError, Result};

const SCALE: f64 = 1.1897314953572317e307; // 2^1020
const INV_SCALE: f64 = 1.0 / SCALE;
const SMALL: f64 = 8.405311447553998e-308; // 2^-1020

/// Evaluate h_0..h_n at x into `out` (length n+1). Deep-underflow entries
/// come out as 0, which is the documented behaviour for |x| far outside the
/// classical region.
pub fn hermite_values_into(n: usize, x: f64, out: &mut [f64]) {
    debug_assert!(out.len() >= n + 1);
    // seed in scaled form: h0 = m * SCALE^{-e}
    let log_h0 = -x * x / 2.0 - 0.25 * std::f64::consts::PI.ln();
    let log_scale = SCALE.ln();
    let mut e = (-log_h0 / log_scale).floor().max(0.0) as i32;
    let mut prev = (log_h0 + e as f64 * log_scale).exp(); // h0 * SCALE^e
    let mut cur = std::f64::consts::SQRT_2 * x * prev; // h1 * SCALE^e
    let emit = |v: f64, e: i32| -> f64 {
        match e {
            0 => v,
            _ if e > 0 => {
                let mut v = v;
                for _ in 0..e {
                    v *= INV_SCALE;
                }
                v
            }
            _ => {
                let mut v = v;
                for _ in 0..(-e) {
                    v *= SCALE;
                }
                v
            }
        }
    };
    out[0] = emit(prev, e);
    if n == 0 {
        return;
    }
    out[1] = emit(cur, e);
    for k in 1..n {
        let next = x * (2.0 / (k as f64 + 1.0)).sqrt() * cur
            - (k as f64 / (k as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if e > 0 && cur.abs() > SCALE.sqrt() {
            // regrew out of the underflow zone: shed one scale factor
            cur *= INV_SCALE;
            prev *= INV_SCALE;
            e -= 1;
        } else if e == 0 && cur.abs() < SMALL && prev.abs() < SMALL {
            cur *= SCALE;
            prev *= SCALE;
            e += 1;
        }
        out[k + 1] = emit(cur, e);
    }
}

/// Value of the L²-normalized Hermite function h_n(x).
pub fn eval_hermite(n: usize, x: f64) -> f64 {
    let mut buf = vec![0.0; n + 1];
    hermite_values_into(n, x, &mut buf);
    buf[n]
}

/// Derivative h_n'(x) = √(2n) h_{n−1}(x) − x h_n(x) (ladder identity).
pub fn eval_hermite_deriv(n: usize, x: f64) -> f64 {
    let mut buf = vec![0.0; n + 1];
    hermite_values_into(n, x, &mut buf);
    let lower = if n == 0 { 0.0 } else { (2.0 * n as f64).sqrt() * buf[n - 1] };
    lower - x * buf[n]
}

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit QL method
/// with Wilkinson shifts (eigenvalues only, O(n²) total). `diag` has n
/// entries, `off` has n-1.
fn tridiag_eigenvalues(diag: &mut [f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let d = diag;
    if n == 1 {
        return Ok(d.to_vec());
    }
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(off);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(LabError::Degenerate(
                    "tridiagonal QL failed to converge".into(),
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let r0 = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r0.copysign(g));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            let mut underflowed = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                let r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflowed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                let t = (d[i] - g) * s + 2.0 * c * b;
                p = s * t;
                d[i + 1] = g + p;
                g = c * t - b;
            }
            if underflowed {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    let mut vals = d.to_vec();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(vals)
}

/// Gauss-Hermite nodes (zeros of the degree-`n` Hermite polynomial) and
/// *modified* weights ŵ_i such that ∫ f(x) dx ≈ Σ ŵ_i f(x_i) is exact for
/// f = (polynomial of degree ≤ 2n−1)·e^{−x²}. In particular products
/// h_a h_b with a, b ≤ n−1 integrate exactly.
pub fn gauss_hermite(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(LabError::invalid("quadrature order must be positive"));
    }
    // Jacobi matrix for orthonormal Hermite polynomials w.r.t. e^{−x²}:
    // diag 0, off-diagonal √(k/2).
    let mut diag = vec![0.0; n];
    let off: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let mut nodes = tridiag_eigenvalues(&mut diag, &off)?;
    // symmetrize (±pairs are exact by parity)
    let half = n / 2;
    for i in 0..half {
        let s = 0.5 * (nodes[n - 1 - i] - nodes[i]);
        nodes[i] = -s;
        nodes[n - 1 - i] = s;
    }
    if n % 2 == 1 {
        nodes[half] = 0.0;
    }
    // Christoffel weights through the orthonormal Hermite *functions*:
    // ŵ_i = 1 / Σ_{k<n} h_k(x_i)², which already carries the e^{+x²}
    // de-weighting of the classical Gauss-Hermite weights.
    let mut weights = vec![0.0; n];
    let mut buf = vec![0.0; n];
    for i in 0..n {
        hermite_values_into(n - 1, nodes[i], &mut buf);
        let s: f64 = buf.iter().map(|v| v * v).sum();
        weights[i] = 1.0 / s;
    }
    Ok((nodes, weights))
}

/// Hermite eigenbasis in d = 1 or 2 with tensorized quadrature and a default
/// uniform evaluation grid containing the classical region with margin.
pub struct HermiteBasis {
    pub dim: usize,
    pub n_max: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub grid: UniformGrid,
}

impl HermiteBasis {
    pub fn new(dim: usize, n_max: usize) -> Result<Self> {
        if dim == 0 || dim > 2 {
            return Err(LabError::invalid(format!(
                "Hermite basis dimension {dim} not in {{1,2}} (d >= 3 is a non-goal)"
            )));
        }
        let n_quad = 2 * n_max + 1;
        let (nodes, weights) = gauss_hermite(n_quad)?;
        let lambda_max = (2 * n_max + dim) as f64;
        let half = (1.5 * lambda_max.sqrt()).max(lambda_max.sqrt() + 8.0);
        let min_samples = (2.0 * half * lambda_max.sqrt() * 2.0 / std::f64::consts::PI).ceil();
        let samples = (min_samples as usize).max(256).next_power_of_two();
        let grid = UniformGrid::new(dim, samples, 2.0 * half)?;
        Ok(HermiteBasis {
            dim,
            n_max,
            nodes,
            weights,
            grid,
        })
    }

    /// Eigenvalue λ(n̲) = 2(n₁+…+n_d) + d.
    pub fn eigenvalue(&self, multi: &[usize]) -> f64 {
        (2 * multi.iter().sum::<usize>() + self.dim) as f64
    }

    /// Quadrature inner product ⟨h_a, h_b⟩ per axis pair (d=1 scalar check).
    pub fn quad_inner(&self, a: usize, b: usize) -> f64 {
        let hi = a.max(b);
        let mut buf = vec![0.0; hi + 1];
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            hermite_values_into(hi, x, &mut buf);
            acc += w * buf[a] * buf[b];
        }
        acc
    }
}
