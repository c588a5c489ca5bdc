//! Uniform periodic grid standing in for R^n, with ball geometry and
//! measure bookkeeping. Grid points sit at cell centers of the box
//! [-L/2, L/2)^n; all distances are taken in the periodic (minimum-image)
//! metric, so balls never hit a boundary.

use serde::{Deserialize, Serialize};

use crate::error::{LomoError, Result};

/// Volume of the unit ball in dimension n (n = 1, 2, 3).
pub fn unit_ball_volume(dim: usize) -> f64 {
    match dim {
        1 => 2.0,
        2 => std::f64::consts::PI,
        3 => 4.0 * std::f64::consts::PI / 3.0,
        _ => panic!("unsupported dimension {dim}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    dim: usize,
    side: f64,
    points_per_axis: usize,
}

impl Domain {
    pub fn new(dim: usize, side: f64, points_per_axis: usize) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(LomoError::BadDimension(dim));
        }
        if !(side > 0.0 && side.is_finite()) {
            return Err(LomoError::BadSide(side));
        }
        let n = points_per_axis;
        if n < 8 || !n.is_power_of_two() {
            return Err(LomoError::BadGridSize(n));
        }
        Ok(Self {
            dim,
            side,
            points_per_axis,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    /// Grid spacing h = L/N.
    pub fn spacing(&self) -> f64 {
        self.side / self.points_per_axis as f64
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    pub fn total_cells(&self) -> usize {
        self.points_per_axis.pow(self.dim as u32)
    }

    /// Total measure L^n of the box.
    pub fn total_measure(&self) -> f64 {
        self.side.powi(self.dim as i32)
    }

    pub fn unit_ball_volume(&self) -> f64 {
        unit_ball_volume(self.dim)
    }

    /// Multi-index of a flat row-major cell index.
    pub fn multi_index(&self, flat: usize) -> [usize; 3] {
        let n = self.points_per_axis;
        let mut idx = [0usize; 3];
        let mut rem = flat;
        for axis in (0..self.dim).rev() {
            idx[axis] = rem % n;
            rem /= n;
        }
        idx
    }

    pub fn flat_index(&self, idx: &[usize; 3]) -> usize {
        let n = self.points_per_axis;
        idx[..self.dim].iter().fold(0usize, |flat, &i| flat * n + i)
    }

    /// Cell-center coordinate of a flat index.
    pub fn coordinate(&self, flat: usize) -> [f64; 3] {
        let idx = self.multi_index(flat);
        let h = self.spacing();
        let mut x = [0.0f64; 3];
        for axis in 0..self.dim {
            x[axis] = -self.side / 2.0 + (idx[axis] as f64 + 0.5) * h;
        }
        x
    }

    /// Minimum-image distance along one axis.
    fn axis_distance(&self, a: f64, b: f64) -> f64 {
        let raw = (a - b).rem_euclid(self.side);
        raw.min(self.side - raw)
    }

    /// Periodic Euclidean distance between two points in the box.
    pub fn periodic_distance(&self, a: &[f64; 3], b: &[f64; 3]) -> f64 {
        let mut sq = 0.0;
        for axis in 0..self.dim {
            let d = self.axis_distance(a[axis], b[axis]);
            sq += d * d;
        }
        sq.sqrt()
    }

    /// Flat indices of all cells whose centers lie strictly within `radius`
    /// of `center` (open ball on the lattice).
    fn cells_within(&self, center: &[f64; 3], radius: f64) -> Vec<usize> {
        let mut out = Vec::new();
        for flat in 0..self.total_cells() {
            let x = self.coordinate(flat);
            if self.periodic_distance(&x, center) < radius {
                out.push(flat);
            }
        }
        out
    }

    /// Relative index offsets of the ball stencil: the set of cells within
    /// `radius` of a cell center, expressed as signed per-axis shifts. The
    /// lattice is translation invariant, so one stencil serves every center.
    pub fn ball_stencil(&self, radius: f64) -> Vec<[i64; 3]> {
        let n = self.points_per_axis as i64;
        let h = self.spacing();
        let reach = ((radius / h).ceil() as i64).min(n / 2);
        let mut offsets = Vec::new();
        let range = |_axis: usize| -reach..=reach;
        let mut push = |off: [i64; 3]| {
            let mut sq = 0.0;
            for &o in &off[..self.dim] {
                // min-image shift of o cells
                let d = o.rem_euclid(n).min(n - o.rem_euclid(n)) as f64 * h;
                sq += d * d;
            }
            if sq.sqrt() < radius {
                offsets.push(off);
            }
        };
        match self.dim {
            1 => {
                for i in range(0) {
                    push([i, 0, 0]);
                }
            }
            2 => {
                for i in range(0) {
                    for j in range(1) {
                        push([i, j, 0]);
                    }
                }
            }
            _ => {
                for i in range(0) {
                    for j in range(1) {
                        for k in range(2) {
                            push([i, j, k]);
                        }
                    }
                }
            }
        }
        offsets
    }

    /// Flat index of a cell shifted by `off` with periodic wrap.
    pub fn shifted_index(&self, flat: usize, off: &[i64; 3]) -> usize {
        let n = self.points_per_axis as i64;
        let idx = self.multi_index(flat);
        let mut shifted = [0usize; 3];
        for axis in 0..self.dim {
            shifted[axis] = (idx[axis] as i64 + off[axis]).rem_euclid(n) as usize;
        }
        self.flat_index(&shifted)
    }
}

/// Discrete ball B(x, r): the set of grid cells whose centers lie within
/// periodic distance r of the center, with the counting measure scaled by
/// the cell volume.
#[derive(Debug, Clone)]
pub struct Ball {
    pub center: [f64; 3],
    pub radius: f64,
    pub cell_indices: Vec<usize>,
    pub measure: f64,
}

pub fn ball(domain: &Domain, center: &[f64; 3], radius: f64) -> Result<Ball> {
    let max = domain.side() / 2.0;
    if !(radius > 0.0 && radius <= max) {
        return Err(LomoError::BadRadius { radius, max });
    }
    let cell_indices = domain.cells_within(center, radius);
    let measure = cell_indices.len() as f64 * domain.cell_volume();
    Ok(Ball {
        center: *center,
        radius,
        cell_indices,
        measure,
    })
}

/// Sampled real-valued function on a periodic grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    domain: Domain,
    samples: Vec<f64>,
}

impl GridFunction {
    pub fn new(domain: Domain, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != domain.total_cells() {
            return Err(LomoError::BadSampleCount {
                got: samples.len(),
                expected: domain.total_cells(),
            });
        }
        if samples.iter().any(|v| !v.is_finite()) {
            return Err(LomoError::NonFiniteSample);
        }
        Ok(Self { domain, samples })
    }

    pub fn from_fn(domain: Domain, f: impl Fn(&[f64; 3]) -> f64) -> Result<Self> {
        let samples = (0..domain.total_cells())
            .map(|i| f(&domain.coordinate(i)))
            .collect();
        Self::new(domain, samples)
    }

    pub fn zeros(domain: Domain) -> Self {
        Self {
            samples: vec![0.0; domain.total_cells()],
            domain,
        }
    }

    pub fn constant(domain: Domain, c: f64) -> Result<Self> {
        Self::new(domain, vec![c; domain.total_cells()])
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// L1 norm: sum of |samples| times the cell volume.
    pub fn l1_norm(&self) -> f64 {
        self.samples.iter().map(|v| v.abs()).sum::<f64>() * self.domain.cell_volume()
    }

    /// Measure of the support (cells with nonzero sample).
    pub fn support_measure(&self) -> f64 {
        self.samples.iter().filter(|v| **v != 0.0).count() as f64 * self.domain.cell_volume()
    }

    /// Centroid of |f| as a grid point (the cell nearest the mean of the
    /// supporting cell coordinates). Falls back to the box center for f = 0.
    pub fn support_centroid(&self) -> [f64; 3] {
        let mut weight = 0.0;
        let mut acc = [0.0f64; 3];
        for (i, v) in self.samples.iter().enumerate() {
            let w = v.abs();
            if w > 0.0 {
                let x = self.domain.coordinate(i);
                for axis in 0..self.domain.dim() {
                    acc[axis] += w * x[axis];
                }
                weight += w;
            }
        }
        if weight == 0.0 {
            return [0.0; 3];
        }
        let mut out = [0.0f64; 3];
        for axis in 0..self.domain.dim() {
            out[axis] = acc[axis] / weight;
        }
        out
    }

    /// Translate by an integer number of cells per axis (exact permutation).
    pub fn translate(&self, shift: &[i64; 3]) -> GridFunction {
        let mut samples = vec![0.0; self.samples.len()];
        for (i, s) in samples.iter_mut().enumerate() {
            let src = self.domain.shifted_index(i, &[-shift[0], -shift[1], -shift[2]]);
            *s = self.samples[src];
        }
        GridFunction {
            domain: self.domain,
            samples,
        }
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction {
            domain: self.domain,
            samples: self.samples.iter().map(|v| f(*v)).collect(),
        }
    }

    pub fn zip(&self, other: &GridFunction, f: impl Fn(f64, f64) -> f64) -> Result<GridFunction> {
        if self.domain != other.domain {
            return Err(LomoError::DomainMismatch);
        }
        Ok(GridFunction {
            domain: self.domain,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        })
    }
}

/// Average of |f| over a ball: (1/|B|) * sum_B |f| * cell_volume.
pub fn ball_average(f: &GridFunction, b: &Ball) -> Result<f64> {
    if b.cell_indices.is_empty() {
        return Err(LomoError::EmptyBall);
    }
    let sum: f64 = b.cell_indices.iter().map(|&i| f.samples()[i].abs()).sum();
    Ok(sum * f.domain().cell_volume() / b.measure)
}

/// Cutoff f * chi_B: samples zeroed outside the ball.
pub fn restrict(f: &GridFunction, b: &Ball) -> GridFunction {
    let mut samples = vec![0.0; f.samples().len()];
    for &i in &b.cell_indices {
        samples[i] = f.samples()[i];
    }
    GridFunction::new(*f.domain(), samples).expect("restriction preserves validity")
}
