//! Weighted space-time L^p norms by Riemann-sum quadrature, with a streaming
//! accumulator so large extensions never need materializing.

use super::extension::SpaceTimeField;
use super::grid::SampledField;
use crate::{LabError, Result};

/// Integration region in space-time.
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    /// Ball in (x, t) around `center` (length d+1: spatial components then t).
    Ball { center: Vec<f64>, radius: f64 },
    /// Time window × all of space.
    TimeBox { t_min: f64, t_max: f64 },
    /// Everything sampled.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Weight {
    /// Sharp indicator of the region.
    Sharp,
    /// w(z) = (1 + dist(z, region)/R)^{−power}. The paper's nominal power
    /// 100d is unusable in floating point over large boxes; callers get the
    /// capped default from [`default_weight_power`].
    PolynomialDecay { power: f64 },
}

/// Default decay power: min(100·d, 20); recorded in experiment metadata.
pub fn default_weight_power(dim: usize) -> f64 {
    (100.0 * dim as f64).min(20.0)
}

#[derive(Debug, Clone)]
pub struct NormSpec {
    pub p: f64,
    pub region: Region,
    pub weight: Weight,
}

impl NormSpec {
    pub fn new(p: f64, region: Region, weight: Weight) -> Result<Self> {
        if p < 1.0 {
            return Err(LabError::invalid(format!("L^p norm needs p >= 1, got {p}")));
        }
        Ok(NormSpec { p, region, weight })
    }

    fn scale(&self) -> f64 {
        match &self.region {
            Region::Ball { radius, .. } => *radius,
            Region::TimeBox { t_min, t_max } => ((t_max - t_min) / 2.0).max(1.0),
            Region::Full => 1.0,
        }
    }

    fn dist(&self, x: &[f64], t: f64) -> f64 {
        match &self.region {
            Region::Ball { center, radius } => {
                let mut d2 = (t - center[center.len() - 1]).powi(2);
                for (a, b) in x.iter().zip(center.iter()) {
                    d2 += (a - b) * (a - b);
                }
                (d2.sqrt() - radius).max(0.0)
            }
            Region::TimeBox { t_min, t_max } => (t_min - t).max(t - t_max).max(0.0),
            Region::Full => 0.0,
        }
    }

    /// Weight value at a space-time point.
    pub fn weight_at(&self, x: &[f64], t: f64) -> f64 {
        let d = self.dist(x, t);
        match self.weight {
            Weight::Sharp => {
                if d > 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
            Weight::PolynomialDecay { power } => (1.0 + d / self.scale()).powf(-power),
        }
    }
}

/// Streaming accumulator: feed time slices in any order with their
/// quadrature weights, then `finish`.
pub struct NormAccumulator<'a> {
    spec: &'a NormSpec,
    acc: f64,
    sup: f64,
}

impl<'a> NormAccumulator<'a> {
    pub fn new(spec: &'a NormSpec) -> Self {
        NormAccumulator {
            spec,
            acc: 0.0,
            sup: 0.0,
        }
    }

    pub fn add_slice(&mut self, t: f64, t_weight: f64, slice: &SampledField) {
        let grid = &slice.grid;
        let h = grid.cell_volume();
        let p = self.spec.p;
        if p.is_infinite() {
            for (i, v) in slice.values.iter().enumerate() {
                let x = grid.point(i);
                if self.spec.dist(&x, t) <= 0.0 {
                    self.sup = self.sup.max(v.norm());
                }
            }
            return;
        }
        let mut slice_acc = 0.0;
        for (i, v) in slice.values.iter().enumerate() {
            let x = grid.point(i);
            let w = self.spec.weight_at(&x, t);
            if w > 0.0 {
                slice_acc += w * v.norm().powf(p);
            }
        }
        self.acc += t_weight * slice_acc * h;
    }

    pub fn finish(&self) -> f64 {
        if self.spec.p.is_infinite() {
            self.sup
        } else {
            self.acc.powf(1.0 / self.spec.p)
        }
    }
}

/// Weighted L^p norm of a materialized space-time field, trapezoid in time.
pub fn lp_spacetime_norm(u: &SpaceTimeField, spec: &NormSpec) -> f64 {
    let axis = u.grid.time.clone().unwrap_or(super::grid::TimeAxis {
        t_min: u.times.first().copied().unwrap_or(0.0),
        t_max: u.times.last().copied().unwrap_or(0.0),
        steps: u.times.len(),
    });
    let mut acc = NormAccumulator::new(spec);
    let spatial = SampledField {
        grid: super::grid::UniformGrid {
            time: None,
            ..u.grid.clone()
        },
        values: Vec::new(),
    };
    for (i, slice) in u.slices.iter().enumerate() {
        let f = SampledField {
            grid: spatial.grid.clone(),
            values: slice.clone(),
        };
        acc.add_slice(u.times[i], axis.weight(i), &f);
    }
    acc.finish()
}
