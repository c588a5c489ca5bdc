//! Seeded generation of test-function corpora.
//!
//! Every family produces functions supported in the central half-box
//! `|x|_inf < L/4`, so balls of radius up to `L/2` always reach the support
//! from any grid point and maximal functions stay strictly positive.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::grid::{ball, unit_ball_volume, Domain, GridFunction};
use crate::rearrangement::DecreasingProfile;

/// The generating family of a corpus member, recorded for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    BallIndicator,
    RadialDecreasing,
    FourierMode,
    BandLimited,
    SpikePlateau,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::BallIndicator => "ball_indicator",
            Family::RadialDecreasing => "radial_decreasing",
            Family::FourierMode => "fourier_mode",
            Family::BandLimited => "band_limited",
            Family::SpikePlateau => "spike_plateau",
        }
    }
}

/// A named test function together with the family that produced it.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub name: String,
    pub family: Family,
    pub f: GridFunction,
}

/// Generate `count` functions on `domain`, cycling through the five
/// families. The output depends only on `(domain, seed, count)`.
pub fn generate(domain: &Domain, seed: u64, count: usize) -> Result<Vec<CorpusItem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::with_capacity(count);
    let families = [
        Family::BallIndicator,
        Family::RadialDecreasing,
        Family::FourierMode,
        Family::BandLimited,
        Family::SpikePlateau,
    ];
    for i in 0..count {
        let family = families[i % families.len()];
        let f = match family {
            Family::BallIndicator => ball_union(domain, &mut rng)?,
            Family::RadialDecreasing => radial_decreasing(domain, &mut rng)?,
            Family::FourierMode => fourier_mode(domain, &mut rng)?,
            Family::BandLimited => band_limited(domain, &mut rng)?,
            Family::SpikePlateau => spike_plateau(domain, &mut rng)?,
        };
        items.push(CorpusItem {
            name: format!("{}_{i:03}", family.label()),
            family,
            f,
        });
    }
    Ok(items)
}

fn random_center(domain: &Domain, rng: &mut ChaCha8Rng) -> [f64; 3] {
    // Centers stay inside |x|_inf < L/8 so that support radii up to L/8
    // keep the function inside the central half-box.
    let mut c = [0.0; 3];
    for v in c.iter_mut().take(domain.dim()) {
        *v = rng.gen_range(-domain.side() / 8.0..domain.side() / 8.0);
    }
    c
}

fn ball_union(domain: &Domain, rng: &mut ChaCha8Rng) -> Result<GridFunction> {
    let n_balls = rng.gen_range(1..=3);
    let mut samples = vec![0.0; domain.total_cells()];
    for _ in 0..n_balls {
        let center = random_center(domain, rng);
        let radius = rng.gen_range(2.5 * domain.spacing()..domain.side() / 8.0);
        let height = rng.gen_range(0.5..2.0);
        let b = ball(domain, &center, radius)?;
        for &idx in &b.cell_indices {
            samples[idx] = f64::max(samples[idx], height);
        }
    }
    GridFunction::new(*domain, samples)
}

fn radial_decreasing(domain: &Domain, rng: &mut ChaCha8Rng) -> Result<GridFunction> {
    let m_max = unit_ball_volume(domain.dim()) * (domain.side() / 8.0).powi(domain.dim() as i32);
    let profile = random_step_profile(rng, m_max)?;
    radial_from_profile(domain, &profile)
}

fn fourier_mode(domain: &Domain, rng: &mut ChaCha8Rng) -> Result<GridFunction> {
    let dim = domain.dim();
    let l = domain.side();
    let mut k = [0i64; 3];
    for v in k.iter_mut().take(dim) {
        *v = rng.gen_range(1..=4);
    }
    let window = rng.gen_range(l / 8.0..l / 4.0);
    GridFunction::from_fn(*domain, |x| {
        let inside = x[..dim].iter().all(|&xi| xi.abs() < window);
        if inside {
            let phase: f64 = (0..dim)
                .map(|a| 2.0 * std::f64::consts::PI * k[a] as f64 * x[a] / l)
                .sum();
            phase.cos()
        } else {
            0.0
        }
    })
}

fn band_limited(domain: &Domain, rng: &mut ChaCha8Rng) -> Result<GridFunction> {
    let dim = domain.dim();
    let l = domain.side();
    let n_modes = rng.gen_range(2..=5);
    let mut modes = Vec::with_capacity(n_modes);
    for _ in 0..n_modes {
        let mut k = [0i64; 3];
        for v in k.iter_mut().take(dim) {
            *v = rng.gen_range(-6..=6);
        }
        let amp: f64 = rng.gen_range(0.2..1.0);
        let phase: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        modes.push((k, amp, phase));
    }
    let window = rng.gen_range(l / 8.0..l / 4.0);
    GridFunction::from_fn(*domain, |x| {
        let inside = x[..dim].iter().all(|&xi| xi.abs() < window);
        if !inside {
            return 0.0;
        }
        modes
            .iter()
            .map(|(k, amp, phase)| {
                let arg: f64 = (0..dim)
                    .map(|a| 2.0 * std::f64::consts::PI * k[a] as f64 * x[a] / l)
                    .sum();
                amp * (arg + phase).cos()
            })
            .sum()
    })
}

fn spike_plateau(domain: &Domain, rng: &mut ChaCha8Rng) -> Result<GridFunction> {
    let plateau_center = random_center(domain, rng);
    let plateau_radius = rng.gen_range(domain.side() / 16.0..domain.side() / 8.0);
    let plateau_height = rng.gen_range(0.2..1.0);
    let spike_center = random_center(domain, rng);
    let spike_radius = rng.gen_range(1.5 * domain.spacing()..4.0 * domain.spacing());
    let spike_height = rng.gen_range(5.0..20.0);
    let mut samples = vec![0.0; domain.total_cells()];
    let b = ball(domain, &plateau_center, plateau_radius)?;
    for &idx in &b.cell_indices {
        samples[idx] = plateau_height;
    }
    let s = ball(domain, &spike_center, spike_radius)?;
    for &idx in &s.cell_indices {
        samples[idx] = spike_height;
    }
    GridFunction::new(*domain, samples)
}

/// Sample the radial function `f(x) = phi(omega_n |x|^n)` on the grid.
pub fn radial_from_profile(domain: &Domain, phi: &DecreasingProfile) -> Result<GridFunction> {
    let omega = unit_ball_volume(domain.dim());
    let dim = domain.dim();
    let origin = [0.0; 3];
    let phi = phi.clone();
    GridFunction::from_fn(*domain, move |x| {
        let r = distance_to_origin(x, &origin, dim);
        phi.value_at(omega * r.powi(dim as i32))
    })
}

fn distance_to_origin(x: &[f64; 3], origin: &[f64; 3], dim: usize) -> f64 {
    (0..dim)
        .map(|a| (x[a] - origin[a]).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// A deterministic battery of radial profiles: indicators, multi-step
/// staircases, and truncated power decays `t^{-a}`. All are supported in
/// `(0, m_max]` with `m_max = omega_n (L/8)^n`.
pub fn radial_battery(domain: &Domain, seed: u64, count: usize) -> Result<Vec<DecreasingProfile>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_ba77);
    let m_max = unit_ball_volume(domain.dim()) * (domain.side() / 8.0).powi(domain.dim() as i32);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let profile = match i % 3 {
            0 => {
                let m = rng.gen_range(0.1 * m_max..m_max);
                DecreasingProfile::indicator(m)
            }
            1 => random_step_profile(&mut rng, m_max)?,
            _ => truncated_power(&mut rng, m_max)?,
        };
        out.push(profile);
    }
    Ok(out)
}

fn random_step_profile(rng: &mut ChaCha8Rng, m_max: f64) -> Result<DecreasingProfile> {
    let n_steps = rng.gen_range(3..=8);
    let mut breakpoints = Vec::with_capacity(n_steps);
    let mut t = 0.0;
    for j in 0..n_steps {
        let remaining = n_steps - j;
        let max_step = (m_max - t) / remaining as f64;
        t += rng.gen_range(0.2 * max_step..max_step);
        breakpoints.push(t);
    }
    *breakpoints.last_mut().unwrap() = m_max;
    let mut values = Vec::with_capacity(n_steps);
    let mut v = rng.gen_range(1.0..10.0);
    for _ in 0..n_steps {
        values.push(v);
        v *= rng.gen_range(0.2..0.9);
    }
    DecreasingProfile::new(breakpoints, values)
}

/// `phi(t) = min(cap, t^{-a})` restricted to `(0, m_max]`, discretized as a
/// geometric staircase so it stays an exact step profile.
fn truncated_power(rng: &mut ChaCha8Rng, m_max: f64) -> Result<DecreasingProfile> {
    let a = rng.gen_range(0.2..0.9);
    let cap = rng.gen_range(5.0..50.0);
    let steps = 40usize;
    let t0 = m_max * 1e-4;
    let ratio = (m_max / t0).powf(1.0 / steps as f64);
    let mut breakpoints = Vec::with_capacity(steps);
    let mut values = Vec::with_capacity(steps);
    let mut t = t0;
    for _ in 0..steps {
        // Constant on (prev, t]: take the left-endpoint value so the
        // staircase dominates the continuous decay on each step.
        let prev = t / ratio;
        values.push(f64::min(cap, prev.powf(-a)));
        breakpoints.push(t);
        t *= ratio;
    }
    *breakpoints.last_mut().unwrap() = m_max;
    DecreasingProfile::new(breakpoints, values)
}
