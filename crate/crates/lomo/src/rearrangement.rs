//! Distribution function, decreasing rearrangement f*, and the averaged
//! rearrangement f**(t) = (1/t) int_0^t f*(s) ds.
//!
//! On a uniform grid the measure is atomic with equal weights, so f* is a
//! step function with at most N^n steps and every identity below is exact
//! (sorting, prefix sums, no quadrature).

use serde::{Deserialize, Serialize};

use crate::error::{LomoError, Result};
use crate::grid::GridFunction;

/// Non-increasing step function on (0, infinity): value `values[k]` on
/// (breakpoints[k-1], breakpoints[k]] with breakpoints[-1] = 0, and 0 past
/// the last breakpoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecreasingProfile {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
    #[serde(skip)]
    cumulative: Vec<f64>,
}

impl DecreasingProfile {
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        assert_eq!(breakpoints.len(), values.len());
        let mut prev_t = 0.0;
        let mut prev_v = f64::INFINITY;
        for (&t, &v) in breakpoints.iter().zip(&values) {
            if !(t > prev_t && t.is_finite()) || !(v >= 0.0 && v.is_finite()) || v > prev_v {
                return Err(LomoError::NonFiniteSample);
            }
            prev_t = t;
            prev_v = v;
        }
        let mut p = Self {
            breakpoints,
            values,
            cumulative: Vec::new(),
        };
        p.rebuild_cumulative();
        Ok(p)
    }

    fn rebuild_cumulative(&mut self) {
        self.cumulative = Vec::with_capacity(self.breakpoints.len());
        let mut acc = 0.0;
        let mut prev_t = 0.0;
        for (&t, &v) in self.breakpoints.iter().zip(&self.values) {
            acc += v * (t - prev_t);
            self.cumulative.push(acc);
            prev_t = t;
        }
    }

    /// Indicator profile chi_{(0, m]}.
    pub fn indicator(m: f64) -> Self {
        Self::new(vec![m], vec![1.0]).expect("valid indicator profile")
    }

    pub fn zero() -> Self {
        Self {
            breakpoints: Vec::new(),
            values: Vec::new(),
            cumulative: Vec::new(),
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }

    /// Largest breakpoint (0 for the empty profile).
    pub fn support_bound(&self) -> f64 {
        self.breakpoints.last().copied().unwrap_or(0.0)
    }

    /// phi(t) for t > 0.
    pub fn value_at(&self, t: f64) -> f64 {
        debug_assert!(t > 0.0);
        // first breakpoint >= t
        match self
            .breakpoints
            .partition_point(|&b| b < t)
        {
            k if k < self.values.len() => self.values[k],
            _ => 0.0,
        }
    }

    /// Exact integral int_0^t phi(s) ds by prefix sums.
    pub fn integral_to(&self, t: f64) -> f64 {
        if t <= 0.0 || self.breakpoints.is_empty() {
            return 0.0;
        }
        let k = self.breakpoints.partition_point(|&b| b < t);
        if k >= self.breakpoints.len() && t >= self.support_bound() {
            return *self.cumulative.last().unwrap();
        }
        let prev_t = if k == 0 { 0.0 } else { self.breakpoints[k - 1] };
        let prev_cum = if k == 0 { 0.0 } else { self.cumulative[k - 1] };
        prev_cum + self.values[k] * (t - prev_t)
    }

    pub fn total_integral(&self) -> f64 {
        self.cumulative.last().copied().unwrap_or(0.0)
    }

    /// int_0^infinity phi(t)^p dt (the support is bounded, so this is finite).
    pub fn power_integral(&self, p: f64) -> f64 {
        let mut acc = 0.0;
        let mut prev_t = 0.0;
        for (&t, &v) in self.breakpoints.iter().zip(&self.values) {
            acc += v.powf(p) * (t - prev_t);
            prev_t = t;
        }
        acc
    }

    /// Measure of {phi > level}: the largest t with a value above `level`.
    pub fn distribution(&self, level: f64) -> f64 {
        let mut out = 0.0;
        for (&t, &v) in self.breakpoints.iter().zip(&self.values) {
            if v > level {
                out = t;
            }
        }
        out
    }

    /// Pointwise minimum with a constant cap (still non-increasing).
    pub fn cap(&self, level: f64) -> DecreasingProfile {
        let values = self.values.iter().map(|v| v.min(level)).collect();
        DecreasingProfile::new(self.breakpoints.clone(), values).expect("cap keeps monotonicity")
    }
}

/// phi**(t) = (1/t) int_0^t phi(s) ds.
pub fn double_star(p: &DecreasingProfile, t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(LomoError::BadTime(t));
    }
    Ok(p.integral_to(t) / t)
}

/// d_f(level) = cell_volume * #{ |f| > level }.
pub fn distribution_function(f: &GridFunction, level: f64) -> f64 {
    debug_assert!(level >= 0.0);
    f.samples().iter().filter(|s| s.abs() > level).count() as f64 * f.domain().cell_volume()
}

/// The decreasing rearrangement f*: sort |samples| descending, one cell
/// volume of t-axis per sample, merging equal adjacent values.
pub fn decreasing_rearrangement(f: &GridFunction) -> DecreasingProfile {
    let h = f.domain().cell_volume();
    let mut sorted: Vec<f64> = f.samples().iter().map(|v| v.abs()).collect();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut breakpoints = Vec::new();
    let mut values = Vec::new();
    for (k, &v) in sorted.iter().enumerate() {
        let t = (k + 1) as f64 * h;
        if values.last() == Some(&v) {
            *breakpoints.last_mut().unwrap() = t;
        } else {
            breakpoints.push(t);
            values.push(v);
        }
    }
    // drop a trailing zero step: the tail is 0 by convention
    if values.last() == Some(&0.0) {
        breakpoints.pop();
        values.pop();
    }
    DecreasingProfile::new(breakpoints, values).expect("sorted samples form a valid profile")
}

/// Split f = g_t + h_t at the cut level f*(t): g_t carries the part of |f|
/// above the cut, h_t the capped part, both keeping the sign of f.
pub fn sum_decomposition(f: &GridFunction, t: f64) -> Result<(GridFunction, GridFunction)> {
    if t <= 0.0 {
        return Err(LomoError::BadTime(t));
    }
    let star = decreasing_rearrangement(f);
    let cut = star.value_at(t);
    let g = f.map(|v| (v.abs() - cut).max(0.0) * v.signum());
    let h = f.map(|v| v.abs().min(cut) * v.signum());
    Ok((g, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Domain;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn domain_1d(n: usize) -> Domain {
        Domain::new(1, 2.0, n).unwrap()
    }

    fn linear_on_unit(n: usize) -> GridFunction {
        // f(x) = x on [0, 1), 0 elsewhere, inside the [-1, 1) box
        let d = domain_1d(n);
        GridFunction::from_fn(d, |x| if (0.0..1.0).contains(&x[0]) { x[0] } else { 0.0 }).unwrap()
    }

    #[test]
    fn distribution_of_indicator() {
        let d = domain_1d(64);
        let f = GridFunction::from_fn(d, |x| if x[0].abs() < 0.25 { 1.0 } else { 0.0 }).unwrap();
        assert_relative_eq!(distribution_function(&f, 0.5), f.support_measure());
    }

    #[test]
    fn distribution_of_zero() {
        let d = domain_1d(8);
        let f = GridFunction::zeros(d);
        assert_eq!(distribution_function(&f, 0.0), 0.0);
        assert_eq!(distribution_function(&f, 3.0), 0.0);
    }

    #[test]
    fn distribution_of_linear() {
        // |f| > 0.5 on roughly (0.5, 1): measure ~ 0.5
        let f = linear_on_unit(256);
        let count = f.samples().iter().filter(|s| s.abs() > 0.5).count();
        let oracle = count as f64 * f.domain().cell_volume();
        assert_eq!(distribution_function(&f, 0.5), oracle);
        assert!((oracle - 0.5).abs() < 0.02);
    }

    #[test]
    fn rearrangement_of_indicator() {
        let d = domain_1d(64);
        let f = GridFunction::from_fn(d, |x| if x[0].abs() < 0.25 { 1.0 } else { 0.0 }).unwrap();
        let p = decreasing_rearrangement(&f);
        assert_eq!(p.values(), &[1.0]);
        assert_relative_eq!(p.breakpoints()[0], f.support_measure());
    }

    #[test]
    fn rearrangement_of_constant() {
        let d = domain_1d(32);
        let f = GridFunction::constant(d, 2.5).unwrap();
        let p = decreasing_rearrangement(&f);
        assert_eq!(p.values(), &[2.5]);
        assert_relative_eq!(p.breakpoints()[0], d.total_measure(), epsilon = 1e-12);
    }

    #[test]
    fn rearrangement_matches_sorting_oracle() {
        let f = linear_on_unit(8);
        let p = decreasing_rearrangement(&f);
        // cell centers in [0,1) for L=2, N=8: {0.125, 0.375, 0.625, 0.875};
        // wait, h = 0.25, centers at 0.125 + 0.25k
        assert_relative_eq!(p.value_at(0.1), 0.875);
        assert_relative_eq!(p.value_at(0.3), 0.625);
        let mut sorted: Vec<f64> = f.samples().iter().map(|v| v.abs()).collect();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let h = f.domain().cell_volume();
        for (k, &v) in sorted.iter().enumerate() {
            let t_mid = (k as f64 + 0.5) * h;
            assert_relative_eq!(p.value_at(t_mid), v);
        }
    }

    #[test]
    fn rearrangement_preserves_distribution() {
        let f = linear_on_unit(64);
        let p = decreasing_rearrangement(&f);
        for level in [0.0, 0.1, 0.5, 0.86, 2.0] {
            assert_relative_eq!(
                p.distribution(level),
                distribution_function(&f, level),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn double_star_of_indicator_profile() {
        let p = DecreasingProfile::indicator(0.5);
        assert_relative_eq!(double_star(&p, 0.3).unwrap(), 1.0);
        assert_relative_eq!(double_star(&p, 0.5).unwrap(), 1.0);
        assert_relative_eq!(double_star(&p, 2.0).unwrap(), 0.25);
        assert!(double_star(&p, 0.0).is_err());
    }

    #[test]
    fn double_star_of_linear_at_full_measure() {
        let f = linear_on_unit(256);
        let p = decreasing_rearrangement(&f);
        let t = f.domain().total_measure();
        // f**(L^n) is the mean of |f| over the box; quadrature oracle
        let mean = f.samples().iter().map(|v| v.abs()).sum::<f64>() * f.domain().cell_volume() / t;
        assert_relative_eq!(double_star(&p, t).unwrap(), mean, epsilon = 1e-12);
        assert!((mean - 0.25).abs() < 0.01); // int_0^1 x dx / 2
    }

    #[test]
    fn sum_decomposition_small_t_gives_h_eq_f() {
        // cut level = max|f| when t is below one cell volume
        let f = linear_on_unit(32);
        let t = f.domain().cell_volume() * 0.5;
        let (g, h) = sum_decomposition(&f, t).unwrap();
        assert!(g.samples().iter().all(|v| *v == 0.0));
        assert_eq!(h, f);
    }

    #[test]
    fn sum_decomposition_indicator_cut_one() {
        let d = domain_1d(64);
        let f = GridFunction::from_fn(d, |x| if x[0].abs() < 0.25 { 1.0 } else { 0.0 }).unwrap();
        let (g, _h) = sum_decomposition(&f, 0.3).unwrap();
        assert!(g.samples().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn sum_decomposition_exact_split_and_capped_rearrangement() {
        let f = linear_on_unit(128);
        let t = 0.5;
        let (g, h) = sum_decomposition(&f, t).unwrap();
        let sum = g.zip(&h, |a, b| a + b).unwrap();
        for (a, b) in sum.samples().iter().zip(f.samples()) {
            assert_relative_eq!(a, b, epsilon = 1e-14);
        }
        // (h_t)* = min{f*, f*(t)}
        let f_star = decreasing_rearrangement(&f);
        let cut = f_star.value_at(t);
        let h_star = decreasing_rearrangement(&h);
        for &bp in f_star.breakpoints() {
            let mid = bp - f.domain().cell_volume() * 0.5;
            if mid > 0.0 {
                assert_relative_eq!(
                    h_star.value_at(mid),
                    f_star.value_at(mid).min(cut),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn sorted_prefix_identity() {
        // sup over cell sets E of size t of sum_E |f| = t * f**(t)
        let f = linear_on_unit(64);
        let p = decreasing_rearrangement(&f);
        let h = f.domain().cell_volume();
        let mut sorted: Vec<f64> = f.samples().iter().map(|v| v.abs()).collect();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for cells in [1usize, 5, 17, 64] {
            let t = cells as f64 * h;
            let greedy: f64 = sorted[..cells].iter().sum::<f64>() * h;
            assert_relative_eq!(
                greedy,
                t * double_star(&p, t).unwrap(),
                max_relative = 1e-12
            );
        }
    }

    proptest! {
        #[test]
        fn equimeasurability(samples in proptest::collection::vec(-10.0f64..10.0, 16), p in 0.5f64..4.0) {
            let d = Domain::new(1, 2.0, 16).unwrap();
            let f = GridFunction::new(d, samples).unwrap();
            let profile = decreasing_rearrangement(&f);
            let grid_side: f64 = f.samples().iter().map(|v| v.abs().powf(p)).sum::<f64>()
                * d.cell_volume();
            let profile_side = profile.power_integral(p);
            prop_assert!((grid_side - profile_side).abs() <= 1e-12 * grid_side.max(1.0));
        }

        #[test]
        fn subadditivity_at_breakpoints(
            a in proptest::collection::vec(-5.0f64..5.0, 32),
            b in proptest::collection::vec(-5.0f64..5.0, 32),
        ) {
            let d = Domain::new(1, 2.0, 32).unwrap();
            let f = GridFunction::new(d, a).unwrap();
            let g = GridFunction::new(d, b).unwrap();
            let sum = f.zip(&g, |x, y| x + y).unwrap();
            let ps = decreasing_rearrangement(&sum);
            let pf = decreasing_rearrangement(&f);
            let pg = decreasing_rearrangement(&g);
            for &t in ps.breakpoints() {
                let lhs = ps.value_at(t);
                let rhs = pf.value_at(t / 2.0) + pg.value_at(t / 2.0);
                prop_assert!(lhs <= rhs + 1e-12);
            }
        }

        #[test]
        fn double_star_dominates_star(samples in proptest::collection::vec(-5.0f64..5.0, 32)) {
            let d = Domain::new(1, 2.0, 32).unwrap();
            let f = GridFunction::new(d, samples).unwrap();
            let p = decreasing_rearrangement(&f);
            for &t in p.breakpoints() {
                prop_assert!(double_star(&p, t).unwrap() + 1e-12 >= p.value_at(t));
            }
        }

        #[test]
        fn tie_order_is_irrelevant(perm_seed in 0u64..1000) {
            // permuting samples (including ties) leaves the profile unchanged
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let d = Domain::new(1, 2.0, 16).unwrap();
            let base = vec![1.0, 1.0, 2.0, 2.0, 2.0, 0.0, 3.0, 1.0,
                            0.5, 0.5, 2.0, 1.0, 0.0, 3.0, 0.5, 1.0];
            let mut shuffled = base.clone();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed);
            shuffled.shuffle(&mut rng);
            let p1 = decreasing_rearrangement(&GridFunction::new(d, base).unwrap());
            let p2 = decreasing_rearrangement(&GridFunction::new(d, shuffled).unwrap());
            prop_assert_eq!(p1, p2);
        }
    }
}
