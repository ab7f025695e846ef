//! Log-log exponent fitting. Every "≲ N^s" claim in the benches is realized
//! as a slope assertion on a least-squares fit over dyadic N.

use crate::{LabError, Result};

/// Least-squares line through (log₂ N, log₂ value) pairs.
#[derive(Debug, Clone)]
pub struct ExponentFit {
    /// The fitted sample pairs (log₂ N, log₂ value).
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    /// Largest absolute deviation of a sample from the fitted line.
    pub max_residual: f64,
}

impl ExponentFit {
    /// Fit from raw (N, value) samples. Requires ≥ 4 samples with positive
    /// values and dyadic N.
    pub fn from_samples(samples: &[(f64, f64)]) -> Result<Self> {
        if samples.len() < 4 {
            return Err(LabError::invalid(format!(
                "exponent fit needs >= 4 dyadic points, got {}",
                samples.len()
            )));
        }
        let mut points = Vec::with_capacity(samples.len());
        for &(n, v) in samples {
            if n <= 0.0 || v <= 0.0 {
                return Err(LabError::invalid(format!(
                    "exponent fit needs positive samples, got ({n}, {v})"
                )));
            }
            points.push((n.log2(), v.log2()));
        }
        Self::from_log_points(points)
    }

    /// Fit from (log₂ N, log₂ value) pairs directly.
    pub fn from_log_points(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 4 {
            return Err(LabError::invalid(format!(
                "exponent fit needs >= 4 points, got {}",
                points.len()
            )));
        }
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        let det = n * sxx - sx * sx;
        if det.abs() < 1e-12 {
            return Err(LabError::Degenerate(
                "exponent fit abscissae are collinear at a point".into(),
            ));
        }
        let slope = (n * sxy - sx * sy) / det;
        let intercept = (sy - slope * sx) / n;
        let max_residual = points
            .iter()
            .map(|&(x, y)| (y - slope * x - intercept).abs())
            .fold(0.0, f64::max);
        Ok(ExponentFit {
            points,
            slope,
            intercept,
            max_residual,
        })
    }

    /// Evaluate the fitted line at log₂ N = `x`. Refuses extrapolation
    /// outside the fitted abscissa hull.
    pub fn predict_log2(&self, x: f64) -> Result<f64> {
        let lo = self.points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let hi = self
            .points
            .iter()
            .map(|p| p.0)
            .fold(f64::NEG_INFINITY, f64::max);
        if x < lo - 1e-12 || x > hi + 1e-12 {
            return Err(LabError::OutOfDomain(format!(
                "refusing extrapolation: log2 N = {x} outside fitted range [{lo}, {hi}]"
            )));
        }
        Ok(self.slope * x + self.intercept)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn recovers_exact_power_law() {
        let samples: Vec<(f64, f64)> = (4..10)
            .map(|k| {
                let n = (1u64 << k) as f64;
                (n, 3.0 * n.powf(0.75))
            })
            .collect();
        let fit = ExponentFit::from_samples(&samples).unwrap();
        assert!((fit.slope - 0.75).abs() < 1e-12);
        assert!((fit.intercept - 3.0f64.log2()).abs() < 1e-12);
        assert!(fit.max_residual < 1e-12);
    }

    #[test]
    fn refuses_few_points_and_extrapolation() {
        let too_few = vec![(16.0, 1.0), (32.0, 2.0), (64.0, 4.0)];
        assert!(ExponentFit::from_samples(&too_few).is_err());
        let fit = ExponentFit::from_samples(&[
            (16.0, 1.0),
            (32.0, 2.0),
            (64.0, 4.0),
            (128.0, 8.0),
        ])
        .unwrap();
        assert!(fit.predict_log2(5.0).is_ok());
        assert!(fit.predict_log2(20.0).is_err());
    }

    proptest! {
        #[test]
        fn fits_any_line_exactly(slope in -3.0f64..3.0, icpt in -5.0f64..5.0) {
            let pts: Vec<(f64,f64)> = (3..9).map(|k| {
                let x = k as f64;
                (x, slope * x + icpt)
            }).collect();
            let fit = ExponentFit::from_log_points(pts).unwrap();
            prop_assert!((fit.slope - slope).abs() < 1e-9);
            prop_assert!(fit.max_residual < 1e-9);
        }
    }
}
