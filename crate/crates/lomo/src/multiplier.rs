//! Bochner-Riesz means as discrete Fourier multipliers on the periodic
//! grid, and Schrodinger-type operators V^gamma (-Lap + V)^{-beta} and
//! V^gamma grad (-Lap + V)^{-beta} via eigendecomposition of the discrete
//! Hamiltonian (circulant fast path for constant potentials).

use nalgebra::{DMatrix, DVector};
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{LomoError, Result};
use crate::grid::{Domain, GridFunction};
use crate::maximal::RadiusGrid;

/// Bochner-Riesz multiplier parameters; delta > (n-1)/2 is enforced.
#[derive(Debug, Clone, Copy)]
pub struct MultiplierSpec {
    pub delta: f64,
    pub r: f64,
}

impl MultiplierSpec {
    pub fn new(dim: usize, delta: f64, r: f64) -> Result<Self> {
        let critical = (dim as f64 - 1.0) / 2.0;
        if delta <= critical {
            return Err(LomoError::BadExponent(format!(
                "delta must exceed (n-1)/2 = {critical}, got {delta}"
            )));
        }
        if r.is_nan() || r <= 0.0 {
            return Err(LomoError::BadRadius { radius: r, max: f64::INFINITY });
        }
        Ok(Self { delta, r })
    }
}

/// Schrodinger operator parameters. `t1` and `t2` check the respective
/// exponent windows; the potential must be strictly positive.
#[derive(Debug, Clone)]
pub struct SchrodingerSpec {
    pub potential: GridFunction,
    pub gamma: f64,
    pub beta: f64,
}

impl SchrodingerSpec {
    pub fn t1(potential: GridFunction, gamma: f64, beta: f64) -> Result<Self> {
        if !(0.0 <= gamma && gamma <= beta && beta <= 1.0) {
            return Err(LomoError::BadExponent(format!(
                "T1 requires 0 <= gamma <= beta <= 1, got gamma={gamma}, beta={beta}"
            )));
        }
        Self::with_potential(potential, gamma, beta)
    }

    pub fn t2(potential: GridFunction, gamma: f64, beta: f64) -> Result<Self> {
        if !((0.0..=0.5).contains(&gamma) && (0.5..=1.0).contains(&beta) && beta - gamma >= 0.5) {
            return Err(LomoError::BadExponent(format!(
                "T2 requires 0 <= gamma <= 1/2 <= beta <= 1 and beta - gamma >= 1/2, \
                 got gamma={gamma}, beta={beta}"
            )));
        }
        Self::with_potential(potential, gamma, beta)
    }

    fn with_potential(potential: GridFunction, gamma: f64, beta: f64) -> Result<Self> {
        if potential.samples().iter().any(|v| *v <= 0.0) {
            return Err(LomoError::NonPositivePotential);
        }
        Ok(Self {
            potential,
            gamma,
            beta,
        })
    }
}

/// Signed frequency index per axis: k in [-N/2, N/2), Nyquist to -N/2.
fn signed_freq(k: usize, n: usize) -> i64 {
    if k < n / 2 {
        k as i64
    } else {
        k as i64 - n as i64
    }
}

fn fft_all_axes(domain: &Domain, data: &mut [Complex<f64>], inverse: bool) {
    let n = domain.points_per_axis();
    let mut planner = FftPlanner::new();
    let fft = if inverse {
        planner.plan_fft_inverse(n)
    } else {
        planner.plan_fft_forward(n)
    };
    let total = domain.total_cells();
    let dim = domain.dim();
    let mut line = vec![Complex::new(0.0, 0.0); n];
    for axis in 0..dim {
        // stride of one step along `axis` in the row-major layout
        let stride = n.pow((dim - 1 - axis) as u32);
        let lines = total / n;
        for l in 0..lines {
            // base index of this line: distribute l over the other axes
            let block = l / stride;
            let offset = l % stride;
            let base = block * stride * n + offset;
            for j in 0..n {
                line[j] = data[base + j * stride];
            }
            fft.process(&mut line);
            for j in 0..n {
                data[base + j * stride] = line[j];
            }
        }
    }
    if inverse {
        let scale = 1.0 / total as f64;
        for v in data.iter_mut() {
            *v *= scale;
        }
    }
}

/// Apply a real Fourier multiplier m(xi) with xi_a = 2 pi k_a / L.
pub fn apply_multiplier(f: &GridFunction, m: impl Fn(&[f64; 3]) -> f64) -> GridFunction {
    let domain = *f.domain();
    let n = domain.points_per_axis();
    let mut data: Vec<Complex<f64>> = f
        .samples()
        .iter()
        .map(|&v| Complex::new(v, 0.0))
        .collect();
    fft_all_axes(&domain, &mut data, false);
    let scale = 2.0 * std::f64::consts::PI / domain.side();
    for (i, c) in data.iter_mut().enumerate() {
        let idx = domain.multi_index(i);
        let mut xi = [0.0f64; 3];
        for axis in 0..domain.dim() {
            xi[axis] = signed_freq(idx[axis], n) as f64 * scale;
        }
        *c *= m(&xi);
    }
    fft_all_axes(&domain, &mut data, true);
    let samples = data.iter().map(|c| c.re).collect();
    GridFunction::new(domain, samples).expect("multiplier output stays finite")
}

/// Largest imaginary residual of the inverse transform, relative to the
/// L2 norm of f; diagnostic for the real-multiplier round trip.
pub fn multiplier_imag_residual(f: &GridFunction, m: impl Fn(&[f64; 3]) -> f64) -> f64 {
    let domain = *f.domain();
    let n = domain.points_per_axis();
    let mut data: Vec<Complex<f64>> = f
        .samples()
        .iter()
        .map(|&v| Complex::new(v, 0.0))
        .collect();
    fft_all_axes(&domain, &mut data, false);
    let scale = 2.0 * std::f64::consts::PI / domain.side();
    for (i, c) in data.iter_mut().enumerate() {
        let idx = domain.multi_index(i);
        let mut xi = [0.0f64; 3];
        for axis in 0..domain.dim() {
            xi[axis] = signed_freq(idx[axis], n) as f64 * scale;
        }
        *c *= m(&xi);
    }
    fft_all_axes(&domain, &mut data, true);
    let l2 = f
        .samples()
        .iter()
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    data.iter().map(|c| c.im.abs()).fold(0.0, f64::max) / l2
}

/// B_r^delta f: multiplier (1 - r^2 |xi|^2)_+^delta.
pub fn bochner_riesz(f: &GridFunction, spec: &MultiplierSpec) -> GridFunction {
    let (r, delta) = (spec.r, spec.delta);
    apply_multiplier(f, move |xi| {
        let s = 1.0 - r * r * (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
        if s > 0.0 {
            s.powf(delta)
        } else {
            0.0
        }
    })
}

/// Maximal Bochner-Riesz: pointwise sup of |B_r^delta f| over the scales.
pub fn maximal_bochner_riesz(
    f: &GridFunction,
    delta: f64,
    radii: &RadiusGrid,
) -> Result<GridFunction> {
    let mut out = GridFunction::zeros(*f.domain());
    for &r in radii.radii() {
        let spec = MultiplierSpec::new(f.domain().dim(), delta, r)?;
        let b = bochner_riesz(f, &spec);
        out = out.zip(&b, |acc, v| acc.max(v.abs()))?;
    }
    Ok(out)
}

/// -Lap + V in spectral form: dense eigendecomposition in general, a
/// Fourier symbol when V is constant.
pub enum Hamiltonian {
    Dense {
        domain: Domain,
        eigvals: DVector<f64>,
        eigvecs: DMatrix<f64>,
    },
    Circulant {
        domain: Domain,
        v: f64,
    },
}

/// Discrete Laplacian symbol sum_a (2 - 2 cos(2 pi k_a / N)) / h^2.
pub fn laplacian_symbol(domain: &Domain, flat: usize) -> f64 {
    let n = domain.points_per_axis();
    let h = domain.spacing();
    let idx = domain.multi_index(flat);
    let mut s = 0.0;
    for &k in &idx[..domain.dim()] {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        s += (2.0 - 2.0 * theta.cos()) / (h * h);
    }
    s
}

/// Dense matrix of -Lap + diag(V) (second-order centered, periodic).
pub fn hamiltonian_matrix(potential: &GridFunction) -> DMatrix<f64> {
    let domain = potential.domain();
    let total = domain.total_cells();
    let h = domain.spacing();
    let inv_h2 = 1.0 / (h * h);
    let mut a = DMatrix::zeros(total, total);
    for i in 0..total {
        a[(i, i)] = 2.0 * domain.dim() as f64 * inv_h2 + potential.samples()[i];
        for axis in 0..domain.dim() {
            let mut off = [0i64; 3];
            off[axis] = 1;
            let plus = domain.shifted_index(i, &off);
            off[axis] = -1;
            let minus = domain.shifted_index(i, &off);
            a[(i, plus)] += -inv_h2;
            a[(i, minus)] += -inv_h2;
        }
    }
    a
}

pub fn build_hamiltonian(potential: &GridFunction) -> Result<Hamiltonian> {
    let domain = *potential.domain();
    if potential.samples().iter().any(|v| *v <= 0.0) {
        return Err(LomoError::NonPositivePotential);
    }
    let first = potential.samples()[0];
    if potential.samples().iter().all(|&v| v == first) {
        return Ok(Hamiltonian::Circulant { domain, v: first });
    }
    if domain.total_cells() > 4096 {
        return Err(LomoError::EigBudgetExceeded(domain.total_cells()));
    }
    let a = hamiltonian_matrix(potential);
    let eig = nalgebra::SymmetricEigen::new(a);
    Ok(Hamiltonian::Dense {
        domain,
        eigvals: eig.eigenvalues,
        eigvecs: eig.eigenvectors,
    })
}

impl Hamiltonian {
    pub fn domain(&self) -> &Domain {
        match self {
            Hamiltonian::Dense { domain, .. } => domain,
            Hamiltonian::Circulant { domain, .. } => domain,
        }
    }

    pub fn min_eigenvalue(&self) -> f64 {
        match self {
            Hamiltonian::Dense { eigvals, .. } => eigvals.iter().cloned().fold(f64::INFINITY, f64::min),
            Hamiltonian::Circulant { v, .. } => *v,
        }
    }

    /// A^{-beta} f through the spectrum.
    pub fn apply_neg_power(&self, f: &GridFunction, beta: f64) -> Result<GridFunction> {
        match self {
            Hamiltonian::Circulant { domain, v } => {
                if f.domain() != domain {
                    return Err(LomoError::DomainMismatch);
                }
                let domain = *domain;
                let v = *v;
                Ok(apply_multiplier_symbol(f, |flat| {
                    (laplacian_symbol(&domain, flat) + v).powf(-beta)
                }))
            }
            Hamiltonian::Dense {
                domain,
                eigvals,
                eigvecs,
            } => {
                if f.domain() != domain {
                    return Err(LomoError::DomainMismatch);
                }
                let x = DVector::from_column_slice(f.samples());
                let coeffs = eigvecs.transpose() * x;
                let scaled = DVector::from_iterator(
                    coeffs.len(),
                    coeffs
                        .iter()
                        .zip(eigvals.iter())
                        .map(|(c, l)| c * l.powf(-beta)),
                );
                let y = eigvecs * scaled;
                GridFunction::new(*domain, y.iter().cloned().collect())
            }
        }
    }
}

/// Apply a multiplier given directly by spectral flat index (the circulant
/// symbol path, where the symbol depends on cos of the index, not on the
/// signed physical wavenumber).
fn apply_multiplier_symbol(f: &GridFunction, m: impl Fn(usize) -> f64) -> GridFunction {
    let domain = *f.domain();
    let mut data: Vec<Complex<f64>> = f
        .samples()
        .iter()
        .map(|&v| Complex::new(v, 0.0))
        .collect();
    fft_all_axes(&domain, &mut data, false);
    for (i, c) in data.iter_mut().enumerate() {
        *c *= m(i);
    }
    fft_all_axes(&domain, &mut data, true);
    GridFunction::new(domain, data.iter().map(|c| c.re).collect())
        .expect("symbol output stays finite")
}

/// Centered-difference gradient components (periodic).
pub fn gradient(f: &GridFunction) -> Vec<GridFunction> {
    let domain = *f.domain();
    let inv_2h = 1.0 / (2.0 * domain.spacing());
    (0..domain.dim())
        .map(|axis| {
            let samples = (0..domain.total_cells())
                .map(|i| {
                    let mut off = [0i64; 3];
                    off[axis] = 1;
                    let plus = f.samples()[domain.shifted_index(i, &off)];
                    off[axis] = -1;
                    let minus = f.samples()[domain.shifted_index(i, &off)];
                    (plus - minus) * inv_2h
                })
                .collect();
            GridFunction::new(domain, samples).expect("gradient stays finite")
        })
        .collect()
}

/// T1 f = V^gamma (-Lap + V)^{-beta} f.
pub fn t1_apply(f: &GridFunction, spec: &SchrodingerSpec) -> Result<GridFunction> {
    if !(0.0 <= spec.gamma && spec.gamma <= spec.beta && spec.beta <= 1.0) {
        return Err(LomoError::BadExponent(format!(
            "T1 requires 0 <= gamma <= beta <= 1, got gamma={}, beta={}",
            spec.gamma, spec.beta
        )));
    }
    let ham = build_hamiltonian(&spec.potential)?;
    let u = ham.apply_neg_power(f, spec.beta)?;
    let gamma = spec.gamma;
    spec.potential.zip(&u, move |v, uu| v.powf(gamma) * uu)
}

/// T2 f = V^gamma |grad (-Lap + V)^{-beta} f| (pointwise Euclidean
/// magnitude of the vector-valued operator).
pub fn t2_apply(f: &GridFunction, spec: &SchrodingerSpec) -> Result<GridFunction> {
    if !(0.0 <= spec.gamma
        && spec.gamma <= 0.5
        && 0.5 <= spec.beta
        && spec.beta <= 1.0
        && spec.beta - spec.gamma >= 0.5)
    {
        return Err(LomoError::BadExponent(format!(
            "T2 requires 0 <= gamma <= 1/2 <= beta <= 1 and beta - gamma >= 1/2, \
             got gamma={}, beta={}",
            spec.gamma, spec.beta
        )));
    }
    let ham = build_hamiltonian(&spec.potential)?;
    let u = ham.apply_neg_power(f, spec.beta)?;
    let comps = gradient(&u);
    let mut mag = GridFunction::zeros(*f.domain());
    for g in &comps {
        mag = mag.zip(g, |acc, v| acc + v * v)?;
    }
    let mag = mag.map(f64::sqrt);
    let gamma = spec.gamma;
    spec.potential.zip(&mag, move |v, m| v.powf(gamma) * m)
}

/// Ratio statistics for a pointwise domination |g| <= C h.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DominationStats {
    pub sup_ratio: f64,
    pub q50: f64,
    pub q90: f64,
    pub q99: f64,
}

pub fn domination_ratio(g: &GridFunction, h: &GridFunction) -> Result<DominationStats> {
    if g.domain() != h.domain() {
        return Err(LomoError::DomainMismatch);
    }
    let mut ratios = Vec::with_capacity(g.samples().len());
    for (gv, hv) in g.samples().iter().zip(h.samples()) {
        if *hv > 0.0 {
            ratios.push(gv.abs() / hv);
        } else if gv.abs() > 0.0 {
            return Err(LomoError::DivisionByZero);
        } else {
            ratios.push(0.0);
        }
    }
    ratios.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let quantile = |q: f64| {
        let k = ((ratios.len() as f64 - 1.0) * q).round() as usize;
        ratios[k]
    };
    Ok(DominationStats {
        sup_ratio: *ratios.last().unwrap_or(&0.0),
        q50: quantile(0.5),
        q90: quantile(0.9),
        q99: quantile(0.99),
    })
}
