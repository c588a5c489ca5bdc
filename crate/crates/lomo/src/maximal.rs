//! Hardy-Littlewood and fractional maximal operators as discrete suprema
//! over a geometric family of ball radii, plus the Hardy operator and the
//! sup-Hardy functional on decreasing profiles.

use rayon::prelude::*;

use crate::error::{LomoError, Result};
use crate::grid::{Domain, GridFunction};
use crate::rearrangement::DecreasingProfile;

/// Geometric radius family discretizing the supremum over r > 0.
#[derive(Debug, Clone)]
pub struct RadiusGrid {
    radii: Vec<f64>,
}

impl RadiusGrid {
    /// Geometric radii from the grid spacing up to L/2. Below one spacing
    /// the discrete ball is a single cell and the average is |f| itself,
    /// which is the correct small-r limit.
    pub fn geometric(domain: &Domain, count: usize) -> Self {
        Self::from_range(domain.spacing(), domain.side() / 2.0, count.max(16))
    }

    pub fn from_range(r_min: f64, r_max: f64, count: usize) -> Self {
        assert!(r_min > 0.0 && r_max >= r_min && count >= 2);
        let ratio = (r_max / r_min).powf(1.0 / (count as f64 - 1.0));
        // clamp the top end: accumulated rounding must not push past r_max
        let radii = (0..count)
            .map(|j| (r_min * ratio.powi(j as i32)).min(r_max))
            .collect();
        Self { radii }
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }
}

/// M_alpha f(x) = sup_r |B(x,r)|^{alpha/n - 1} int_B |f|.
pub fn fractional_maximal(f: &GridFunction, alpha: f64, radii: &RadiusGrid) -> Result<GridFunction> {
    let domain = *f.domain();
    let n = domain.dim();
    if !(0.0..(n as f64)).contains(&alpha) {
        return Err(LomoError::BadAlpha { alpha, n });
    }
    let cell_vol = domain.cell_volume();
    let exponent = alpha / n as f64 - 1.0;

    // one stencil per radius; translation invariance of the lattice makes
    // it valid for every center
    let stencils: Vec<(Vec<[i64; 3]>, f64)> = radii
        .radii()
        .iter()
        .map(|&r| {
            let st = domain.ball_stencil(r);
            let measure = st.len() as f64 * cell_vol;
            let weight = measure.powf(exponent) * cell_vol;
            (st, weight)
        })
        .collect();

    let samples: Vec<f64> = (0..domain.total_cells())
        .into_par_iter()
        .map(|i| {
            let mut best = 0.0f64;
            for (stencil, weight) in &stencils {
                let sum: f64 = stencil
                    .iter()
                    .map(|off| f.samples()[domain.shifted_index(i, off)].abs())
                    .sum();
                best = best.max(sum * weight);
            }
            best
        })
        .collect();

    GridFunction::new(domain, samples)
}

/// The Hardy-Littlewood maximal operator M = M_0.
pub fn hardy_littlewood(f: &GridFunction, radii: &RadiusGrid) -> Result<GridFunction> {
    fractional_maximal(f, 0.0, radii)
}

/// Hardy operator H(t) = t^{alpha/n - 1} int_0^t phi.
pub fn hardy_operator(phi: &DecreasingProfile, alpha: f64, n: usize, t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(LomoError::BadTime(t));
    }
    if !(0.0..(n as f64)).contains(&alpha) {
        return Err(LomoError::BadAlpha { alpha, n });
    }
    Ok(t.powf(alpha / n as f64 - 1.0) * phi.integral_to(t))
}

/// sup over tau in (t, infinity) of tau^{alpha/n} phi**(tau).
///
/// On each interval between breakpoints the function has the form
/// c1 tau^{e-1} + c2 tau^{e} with e = alpha/n in [0, 1) and c1, c2 >= 0,
/// whose interior critical point is a minimum; the supremum sits at an
/// endpoint. The interior point is still checked per interval.
pub fn sup_hardy(phi: &DecreasingProfile, alpha: f64, n: usize, t: f64) -> f64 {
    debug_assert!(t > 0.0);
    let e = alpha / n as f64;
    debug_assert!((0.0..1.0).contains(&e));
    let eval = |tau: f64| tau.powf(e) * phi.integral_to(tau) / tau;

    // right limit at tau = t, every breakpoint past t, and the interior
    // critical point of each interval when it lands inside
    let mut best = eval(t);
    let mut prev = t;
    for (&bp, &v) in phi.breakpoints().iter().zip(phi.values()) {
        if bp <= t {
            continue;
        }
        best = best.max(eval(bp));
        if e > 0.0 && v > 0.0 {
            let c1 = phi.integral_to(prev) - v * prev;
            let tau_crit = (1.0 - e) * c1 / (e * v);
            if tau_crit > prev && tau_crit < bp {
                best = best.max(eval(tau_crit));
            }
        }
        prev = bp;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{ball, ball_average, Domain};
    use crate::rearrangement::{decreasing_rearrangement, double_star};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn radius_grid_is_geometric() {
        let d = Domain::new(1, 2.0, 64).unwrap();
        let rg = RadiusGrid::geometric(&d, 32);
        assert_eq!(rg.len(), 32);
        assert_relative_eq!(rg.radii()[0], d.spacing());
        assert_relative_eq!(*rg.radii().last().unwrap(), 1.0, epsilon = 1e-12);
        let ratio = rg.radii()[1] / rg.radii()[0];
        for w in rg.radii().windows(2) {
            assert_relative_eq!(w[1] / w[0], ratio, epsilon = 1e-12);
        }
    }

    #[test]
    fn maximal_of_constant_is_constant() {
        let d = Domain::new(2, 2.0, 16).unwrap();
        let f = GridFunction::constant(d, 1.7).unwrap();
        let rg = RadiusGrid::geometric(&d, 16);
        let m = hardy_littlewood(&f, &rg).unwrap();
        for &v in m.samples() {
            assert_relative_eq!(v, 1.7, epsilon = 1e-13);
        }
    }

    #[test]
    fn maximal_of_indicator_bounded_by_one() {
        let d = Domain::new(1, 2.0, 128).unwrap();
        let f = GridFunction::from_fn(d, |x| if x[0].abs() < 0.3 { 1.0 } else { 0.0 }).unwrap();
        let rg = RadiusGrid::geometric(&d, 24);
        let m = hardy_littlewood(&f, &rg).unwrap();
        for (i, &v) in m.samples().iter().enumerate() {
            assert!(v <= 1.0 + 1e-13);
            if f.samples()[i] == 1.0 {
                assert_relative_eq!(v, 1.0, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn maximal_dominates_f_pointwise() {
        let d = Domain::new(1, 2.0, 64).unwrap();
        let f = GridFunction::from_fn(d, |x| (x[0] * 5.0).sin()).unwrap();
        let rg = RadiusGrid::geometric(&d, 16);
        let m = hardy_littlewood(&f, &rg).unwrap();
        for (mv, fv) in m.samples().iter().zip(f.samples()) {
            assert!(*mv >= fv.abs() - 1e-13);
        }
    }

    #[test]
    fn fractional_maximal_of_wide_indicator() {
        // 1D, f = chi_[-1,1]: M_alpha f(0) = 2^alpha, optimum at r = 1
        let d = Domain::new(1, 8.0, 512).unwrap();
        let f = GridFunction::from_fn(d, |x| if x[0].abs() < 1.0 { 1.0 } else { 0.0 }).unwrap();
        for alpha in [0.25, 0.5, 0.75] {
            let rg = RadiusGrid::geometric(&d, 64);
            let m = fractional_maximal(&f, alpha, &rg).unwrap();
            let at_zero = m.samples()[d.total_cells() / 2];
            // brute-force max over a fine radius grid
            let fine = RadiusGrid::from_range(d.spacing(), 4.0, 512);
            let center = d.coordinate(d.total_cells() / 2);
            let mut oracle = 0.0f64;
            for &r in fine.radii() {
                let b = ball(&d, &center, r).unwrap();
                let v = b.measure.powf(alpha - 1.0)
                    * ball_average(&f, &b).unwrap()
                    * b.measure;
                oracle = oracle.max(v);
            }
            assert!((at_zero - oracle).abs() / oracle < 0.02, "alpha={alpha}");
            assert!((oracle - 2.0f64.powf(alpha)).abs() < 0.05, "alpha={alpha}");
        }
    }

    #[test]
    fn maximal_rejects_bad_alpha() {
        let d = Domain::new(1, 2.0, 16).unwrap();
        let f = GridFunction::zeros(d);
        let rg = RadiusGrid::geometric(&d, 16);
        assert!(fractional_maximal(&f, -0.1, &rg).is_err());
        assert!(fractional_maximal(&f, 1.0, &rg).is_err());
    }

    #[test]
    fn maximal_matches_exhaustive_oracle() {
        let d = Domain::new(1, 2.0, 256).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let f = GridFunction::new(d, (0..256).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        let rg = RadiusGrid::geometric(&d, 20);
        let m = hardy_littlewood(&f, &rg).unwrap();
        // brute-force double loop over all (point, radius) pairs
        for i in (0..256).step_by(13) {
            let x = d.coordinate(i);
            let mut best = 0.0f64;
            for &r in rg.radii() {
                let b = ball(&d, &x, r).unwrap();
                best = best.max(ball_average(&f, &b).unwrap());
            }
            assert_relative_eq!(m.samples()[i], best, epsilon = 1e-12);
        }
    }

    #[test]
    fn hardy_operator_closed_forms() {
        let chi = DecreasingProfile::indicator(1.0);
        let n = 2;
        let alpha = 1.0;
        // t <= 1: t^{alpha/n}; t > 1: t^{alpha/n - 1}
        assert_relative_eq!(hardy_operator(&chi, alpha, n, 0.5).unwrap(), 0.5f64.sqrt());
        assert_relative_eq!(hardy_operator(&chi, alpha, n, 4.0).unwrap(), 4.0f64.powf(-0.5));
        // constant profile c on (0, T]: H(t) = c t^{alpha/n} for t <= T
        let c = DecreasingProfile::new(vec![10.0], vec![3.0]).unwrap();
        assert_relative_eq!(
            hardy_operator(&c, alpha, n, 2.0).unwrap(),
            3.0 * 2.0f64.sqrt()
        );
        assert!(hardy_operator(&chi, alpha, n, 0.0).is_err());
    }

    #[test]
    fn sup_hardy_alpha_zero_is_double_star() {
        let d = Domain::new(1, 2.0, 64).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let f = GridFunction::new(d, (0..64).map(|_| rng.gen_range(0.0..2.0)).collect()).unwrap();
        let p = decreasing_rearrangement(&f);
        for t in [0.1, 0.5, 1.0, 1.9] {
            assert_relative_eq!(
                sup_hardy(&p, 0.0, 1, t),
                double_star(&p, t).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn sup_hardy_of_zero_profile() {
        let p = DecreasingProfile::zero();
        assert_eq!(sup_hardy(&p, 0.5, 1, 0.3), 0.0);
    }

    #[test]
    fn sup_hardy_matches_dense_sampling_oracle() {
        let chi = DecreasingProfile::indicator(1.0);
        for (alpha, n) in [(0.5, 1usize), (0.0, 1), (1.2, 2)] {
            for t in [0.05, 0.4, 0.9, 1.5, 3.0] {
                let fast = sup_hardy(&chi, alpha, n, t);
                let e = alpha / n as f64;
                let mut dense = 0.0f64;
                for k in 0..20000 {
                    let tau = t + (k as f64 + 1.0) * 5e-4 * (4.0 - t).max(0.5);
                    dense = dense.max(tau.powf(e) * chi.integral_to(tau) / tau);
                }
                assert!(fast >= dense - 1e-6, "alpha={alpha} t={t}");
                assert!(fast <= dense + 1e-3 * fast.max(1.0), "alpha={alpha} t={t}");
            }
        }
    }

    proptest! {
        #[test]
        fn sublinearity(
            a in proptest::collection::vec(-3.0f64..3.0, 32),
            b in proptest::collection::vec(-3.0f64..3.0, 32),
        ) {
            let d = Domain::new(1, 2.0, 32).unwrap();
            let f = GridFunction::new(d, a).unwrap();
            let g = GridFunction::new(d, b).unwrap();
            let rg = RadiusGrid::geometric(&d, 16);
            let mf = hardy_littlewood(&f, &rg).unwrap();
            let mg = hardy_littlewood(&g, &rg).unwrap();
            let msum = hardy_littlewood(&f.zip(&g, |x, y| x + y).unwrap(), &rg).unwrap();
            for i in 0..32 {
                prop_assert!(msum.samples()[i] <= mf.samples()[i] + mg.samples()[i] + 1e-12);
            }
        }

        #[test]
        fn monotone_in_alpha_on_small_box(samples in proptest::collection::vec(0.0f64..2.0, 32)) {
            // with every ball measure <= 1, m^{a/n-1} >= m^{b/n-1} for a <= b,
            // so the smaller alpha dominates pointwise
            let d = Domain::new(1, 1.0, 32).unwrap();
            let f = GridFunction::new(d, samples).unwrap();
            let rg = RadiusGrid::geometric(&d, 16);
            let m1 = fractional_maximal(&f, 0.25, &rg).unwrap();
            let m2 = fractional_maximal(&f, 0.75, &rg).unwrap();
            for i in 0..32 {
                prop_assert!(m1.samples()[i] >= m2.samples()[i] - 1e-12);
            }
        }
    }
}
