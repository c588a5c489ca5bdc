//! Lorentz, Morrey, and Lorentz-Morrey norms. The Lorentz integral is
//! evaluated in closed form on the step profile f*; the Morrey-type
//! suprema are discretized by an explicit center/radius sweep and are
//! certified lower bounds that only grow under sweep refinement.

use serde::{Deserialize, Serialize};

use crate::error::{LomoError, Result};
use crate::grid::{ball, GridFunction};
use crate::maximal::RadiusGrid;
use crate::rearrangement::{decreasing_rearrangement, DecreasingProfile};

/// Exponent tuple (p, q, lambda) of a Lorentz-Morrey space, with an
/// optional secondary pair (u, s) for two-space statements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaceParams {
    pub p: f64,
    pub q: f64,
    pub lambda: f64,
    pub secondary: Option<(f64, f64)>,
}

impl SpaceParams {
    pub fn new(p: f64, q: f64, lambda: f64) -> Self {
        Self {
            p,
            q,
            lambda,
            secondary: None,
        }
    }

    /// Conjugate exponent p' with 1/p + 1/p' = 1.
    pub fn p_conjugate(&self) -> f64 {
        if self.p == 1.0 {
            f64::INFINITY
        } else {
            self.p / (self.p - 1.0)
        }
    }
}

/// Center/radius sweep discretizing sup over x in R^n, r > 0.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub centers: Vec<usize>,
    pub radii: RadiusGrid,
}

impl SweepSpec {
    pub fn new(centers: Vec<usize>, radii: RadiusGrid) -> Self {
        assert!(!centers.is_empty() && !radii.is_empty());
        Self { centers, radii }
    }

    /// All grid points at a coarse stride (per axis), plus the support
    /// centroid of f, with a geometric radius family.
    pub fn default_for(f: &GridFunction, stride: usize, radii_count: usize) -> Self {
        let domain = f.domain();
        let stride = stride.max(1);
        let n = domain.points_per_axis();
        let mut centers = Vec::new();
        let axis_picks: Vec<usize> = (0..n).step_by(stride).collect();
        match domain.dim() {
            1 => {
                for &i in &axis_picks {
                    centers.push(domain.flat_index(&[i, 0, 0]));
                }
            }
            2 => {
                for &i in &axis_picks {
                    for &j in &axis_picks {
                        centers.push(domain.flat_index(&[i, j, 0]));
                    }
                }
            }
            _ => {
                for &i in &axis_picks {
                    for &j in &axis_picks {
                        for &k in &axis_picks {
                            centers.push(domain.flat_index(&[i, j, k]));
                        }
                    }
                }
            }
        }
        // nearest cell to the support centroid
        let centroid = f.support_centroid();
        let mut best = (f64::INFINITY, 0usize);
        for i in 0..domain.total_cells() {
            let d = domain.periodic_distance(&domain.coordinate(i), &centroid);
            if d < best.0 {
                best = (d, i);
            }
        }
        if !centers.contains(&best.1) {
            centers.push(best.1);
        }
        Self::new(centers, RadiusGrid::geometric(domain, radii_count))
    }
}

/// Lorentz functional on a decreasing profile: closed-form per step for
/// q < infinity, sup of t^{1/p} phi(t) at breakpoints for q = infinity.
pub fn lorentz_norm_of_profile(profile: &DecreasingProfile, p: f64, q: f64) -> Result<f64> {
    if p < 1.0 {
        return Err(LomoError::BadExponent(format!("p >= 1 required, got {p}")));
    }
    if q.is_nan() || q <= 0.0 {
        return Err(LomoError::BadExponent(format!("q > 0 required, got {q}")));
    }
    if q.is_infinite() {
        let mut sup = 0.0f64;
        for (&t, &v) in profile.breakpoints().iter().zip(profile.values()) {
            sup = sup.max(t.powf(1.0 / p) * v);
        }
        return Ok(sup);
    }
    let mut acc = 0.0;
    let mut prev_t = 0.0f64;
    for (&t, &v) in profile.breakpoints().iter().zip(profile.values()) {
        // int_{prev}^{t} (s^{1/p} v)^q ds/s = v^q (p/q) (t^{q/p} - prev^{q/p})
        acc += v.powf(q) * (p / q) * (t.powf(q / p) - prev_t.powf(q / p));
        prev_t = t;
    }
    Ok(acc.powf(1.0 / q))
}

/// Same display with f** in place of f*. The tail past the last breakpoint
/// contributes (total/t)^q exactly; interior intervals are integrated by
/// 16-point Gauss-Legendre per step (the integrand is smooth there).
pub fn lorentz_norm_of_profile_double_star(
    profile: &DecreasingProfile,
    p: f64,
    q: f64,
) -> Result<f64> {
    if p <= 1.0 {
        return Err(LomoError::BadExponent(format!(
            "p > 1 required for the averaged display, got {p}"
        )));
    }
    let total = profile.total_integral();
    if total == 0.0 {
        return Ok(0.0);
    }
    if q.is_infinite() {
        let mut sup = 0.0f64;
        for &t in profile.breakpoints() {
            sup = sup.max(t.powf(1.0 / p) * profile.integral_to(t) / t);
        }
        // t^{1/p} total/t decays past the support, t^{1/p} f** grows toward
        // the first breakpoint value near 0 only through f** <= v0
        return Ok(sup);
    }
    let integrand = |t: f64| (t.powf(1.0 / p) * profile.integral_to(t) / t).powf(q) / t;
    let mut acc = 0.0;
    let mut prev_t = 0.0f64;
    for &t in profile.breakpoints() {
        acc += gauss_legendre_16(integrand, prev_t, t);
        prev_t = t;
    }
    // exact tail: f**(t) = total/t for t past the support
    let tail_exp = q / p - q; // < 0 since p > 1
    acc += total.powf(q) * (-prev_t.powf(tail_exp) / tail_exp);
    Ok(acc.powf(1.0 / q))
}

/// || f ||_{L_{p,q}} via the exact step profile of f*.
pub fn lorentz_norm(f: &GridFunction, p: f64, q: f64) -> Result<f64> {
    lorentz_norm_of_profile(&decreasing_rearrangement(f), p, q)
}

fn lp_over_cells(f: &GridFunction, cells: &[usize], p: f64) -> f64 {
    let s: f64 = cells.iter().map(|&i| f.samples()[i].abs().powf(p)).sum();
    (s * f.domain().cell_volume()).powf(1.0 / p)
}

/// Morrey norm sup_{x,r} r^{-lambda/p} ||f||_{L_p(B(x,r))} over the sweep.
pub fn morrey_norm(f: &GridFunction, p: f64, lambda: f64, sweep: &SweepSpec) -> Result<f64> {
    if p < 1.0 {
        return Err(LomoError::BadExponent(format!("p >= 1 required, got {p}")));
    }
    let domain = f.domain();
    let mut sup = 0.0f64;
    for &r in sweep.radii.radii() {
        let stencil = domain.ball_stencil(r);
        let weight = r.powf(-lambda / p);
        for &c in &sweep.centers {
            let cells: Vec<usize> = stencil.iter().map(|off| domain.shifted_index(c, off)).collect();
            sup = sup.max(weight * lp_over_cells(f, &cells, p));
        }
    }
    Ok(sup)
}

/// Argmax bookkeeping for the sweep-based norms.
#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub norm: f64,
    pub argmax_center: [f64; 3],
    pub argmax_radius: f64,
    pub centers_used: usize,
    pub radii_used: usize,
}

/// Lorentz functional of |f| restricted to a set of cells, computed from
/// the sorted restriction without building an intermediate profile.
fn lorentz_of_restriction(f: &GridFunction, cells: &[usize], p: f64, q: f64) -> f64 {
    let h = f.domain().cell_volume();
    let mut vals: Vec<f64> = cells
        .iter()
        .map(|&i| f.samples()[i].abs())
        .filter(|v| *v > 0.0)
        .collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    if q.is_infinite() {
        let mut sup = 0.0f64;
        for (k, &v) in vals.iter().enumerate() {
            sup = sup.max(((k + 1) as f64 * h).powf(1.0 / p) * v);
        }
        return sup;
    }
    let mut acc = 0.0;
    let mut prev_t = 0.0f64;
    for (k, &v) in vals.iter().enumerate() {
        let t = (k + 1) as f64 * h;
        acc += v.powf(q) * (p / q) * (t.powf(q / p) - prev_t.powf(q / p));
        prev_t = t;
    }
    acc.powf(1.0 / q)
}

/// Lorentz-Morrey norm sup_{x,r} r^{-lambda/p} ||f chi_B||_{L_{p,q}}.
pub fn lorentz_morrey_norm(
    f: &GridFunction,
    p: f64,
    q: f64,
    lambda: f64,
    sweep: &SweepSpec,
) -> Result<f64> {
    Ok(lorentz_morrey_norms_multi(f, &[(p, q, lambda)], sweep)?[0].norm)
}

/// Evaluate several (p, q, lambda) triples over one sweep, sharing the
/// per-ball sorted restriction across the parameter lattice.
pub fn lorentz_morrey_norms_multi(
    f: &GridFunction,
    params: &[(f64, f64, f64)],
    sweep: &SweepSpec,
) -> Result<Vec<SweepResult>> {
    for &(p, q, _) in params {
        if p < 1.0 || q.is_nan() || q <= 0.0 {
            return Err(LomoError::BadExponent(format!(
                "need p >= 1 and q > 0, got p={p}, q={q}"
            )));
        }
    }
    let domain = f.domain();
    let h = domain.cell_volume();
    let mut out: Vec<SweepResult> = params
        .iter()
        .map(|_| SweepResult {
            norm: 0.0,
            argmax_center: [0.0; 3],
            argmax_radius: 0.0,
            centers_used: sweep.centers.len(),
            radii_used: sweep.radii.len(),
        })
        .collect();
    let mut vals: Vec<f64> = Vec::new();
    for &r in sweep.radii.radii() {
        let stencil = domain.ball_stencil(r);
        for &c in &sweep.centers {
            vals.clear();
            vals.extend(
                stencil
                    .iter()
                    .map(|off| f.samples()[domain.shifted_index(c, off)].abs())
                    .filter(|v| *v > 0.0),
            );
            if vals.is_empty() {
                continue;
            }
            vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (slot, &(p, q, lambda)) in out.iter_mut().zip(params) {
                let weight = r.powf(-lambda / p);
                let term = if q.is_infinite() {
                    let mut sup = 0.0f64;
                    for (k, &v) in vals.iter().enumerate() {
                        sup = sup.max(((k + 1) as f64 * h).powf(1.0 / p) * v);
                    }
                    sup
                } else {
                    let mut acc = 0.0;
                    let mut prev_t = 0.0f64;
                    for (k, &v) in vals.iter().enumerate() {
                        let t = (k + 1) as f64 * h;
                        acc += v.powf(q) * (p / q) * (t.powf(q / p) - prev_t.powf(q / p));
                        prev_t = t;
                    }
                    acc.powf(1.0 / q)
                } * weight;
                if term > slot.norm {
                    slot.norm = term;
                    slot.argmax_center = domain.coordinate(c);
                    slot.argmax_radius = r;
                }
            }
        }
    }
    Ok(out)
}

/// Probe of the degenerate regime lambda < 0 or lambda > n: ratio of
/// norm terms at the two radii of `radius_pair` (small, large), oriented
/// so that a persistent value > 1 signals norm = infinity in the limit.
pub fn degenerate_space_probe(
    f: &GridFunction,
    p: f64,
    q: f64,
    lambda: f64,
    radius_pair: (f64, f64),
) -> Result<f64> {
    let n = f.domain().dim() as f64;
    if (0.0..=n).contains(&lambda) {
        return Err(LomoError::BadExponent(format!(
            "lambda must lie outside [0, {n}], got {lambda}"
        )));
    }
    if f.samples().iter().all(|v| *v == 0.0) {
        return Err(LomoError::ZeroFunction);
    }
    let center = f.support_centroid();
    let term = |r: f64| -> Result<f64> {
        let b = ball(f.domain(), &center, r)?;
        Ok(r.powf(-lambda / p) * lorentz_of_restriction(f, &b.cell_indices, p, q))
    };
    let (r_small, r_large) = radius_pair;
    let (t_small, t_large) = (term(r_small)?, term(r_large)?);
    if lambda > n {
        Ok(t_small / t_large)
    } else {
        Ok(t_large / t_small)
    }
}

/// 16-point Gauss-Legendre on [a, b].
fn gauss_legendre_16(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    const X: [f64; 8] = [
        0.0950125098376374,
        0.2816035507792589,
        0.4580167776572274,
        0.6178762444026438,
        0.755_404_408_355_003,
        0.8656312023878318,
        0.9445750230732326,
        0.9894009349916499,
    ];
    const W: [f64; 8] = [
        0.1894506104550685,
        0.1826034150449236,
        0.1691565193950025,
        0.1495959888165767,
        0.1246289712555339,
        0.0951585116824928,
        0.0622535239386479,
        0.0271524594117541,
    ];
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..8 {
        acc += W[i] * (f(mid + half * X[i]) + f(mid - half * X[i]));
    }
    acc * half
}
