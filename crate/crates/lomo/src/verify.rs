//! Inequality-verification harness: each check turns one of the library's
//! target inequalities into a reproducible experiment with empirical
//! constants, a refinement-stability clause, and a pass/fail verdict.

use std::time::Instant;

use serde_json::{json, Value};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus;
use crate::error::{LomoError, Result};
use crate::grid::{unit_ball_volume, Domain, GridFunction};
use crate::maximal::{fractional_maximal, hardy_littlewood, sup_hardy, RadiusGrid};
use crate::multiplier::{
    domination_ratio, maximal_bochner_riesz, t1_apply, t2_apply, MultiplierSpec,
    SchrodingerSpec,
};
use crate::norms::{
    lorentz_morrey_norm, lorentz_morrey_norms_multi, lorentz_norm, lorentz_norm_of_profile,
    morrey_norm, SweepSpec,
};
use crate::rearrangement::{decreasing_rearrangement, double_star, DecreasingProfile};
use crate::report::{Verdict, VerificationReport};

/// Shared configuration for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub dim: usize,
    pub grid_n: usize,
    pub side: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            dim: 1,
            grid_n: 256,
            side: 2.0,
        }
    }
}

impl VerifyConfig {
    fn domain(&self, n: usize) -> Result<Domain> {
        Domain::new(self.dim, self.side, n)
    }
}

/// The check suites exposed by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Sandwich,
    Lemma21,
    Lemma22,
    Lemma23,
    Thm31,
    Thm32,
    Cond31,
    Section4,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "all" => Suite::All,
            "sandwich" => Suite::Sandwich,
            "lemma21" => Suite::Lemma21,
            "lemma22" => Suite::Lemma22,
            "lemma23" => Suite::Lemma23,
            "thm31" => Suite::Thm31,
            "thm32" => Suite::Thm32,
            "cond31" => Suite::Cond31,
            "section4" => Suite::Section4,
            _ => return None,
        })
    }
}

/// Run one suite (or all of them) and collect the reports.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Sandwich {
        reports.push(check_sandwich(cfg)?);
    }
    if all || suite == Suite::Lemma21 {
        reports.push(check_lemma21(cfg)?);
    }
    if all || suite == Suite::Lemma22 {
        let n = cfg.dim as f64;
        reports.push(check_lemma22(cfg, &[n / 4.0, n / 2.0, 3.0 * n / 4.0])?);
    }
    if all || suite == Suite::Lemma23 {
        let n = cfg.dim as f64;
        reports.push(check_lemma23(cfg, &[n / 4.0, n / 2.0])?);
    }
    if all || suite == Suite::Thm31 {
        reports.push(check_theorem31(cfg)?);
    }
    if all || suite == Suite::Thm32 {
        reports.push(check_theorem32_dilation(cfg)?);
    }
    if all || suite == Suite::Cond31 {
        reports.push(check_condition_31(cfg, 1.5, 0.25, true)?);
        reports.push(check_condition_31(cfg, 1.5, 0.25, false)?);
    }
    if all || suite == Suite::Section4 {
        reports.push(check_section4(cfg)?);
    }
    Ok(reports)
}

fn geometric_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let ratio = (hi / lo).powf(1.0 / (count - 1) as f64);
    (0..count).map(|k| lo * ratio.powi(k as i32)).collect()
}

fn rel_drift(a: f64, b: f64) -> f64 {
    if a == 0.0 && b == 0.0 {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let k = ((sorted.len() as f64 - 1.0) * q).round() as usize;
    sorted[k]
}

fn quantiles_json(ratios: &mut [f64]) -> Value {
    ratios.sort_by(|a, b| a.partial_cmp(b).unwrap());
    json!({
        "q50": quantile(ratios, 0.5),
        "q90": quantile(ratios, 0.9),
        "q99": quantile(ratios, 0.99),
        "min": ratios.first().copied().unwrap_or(f64::NAN),
        "max": ratios.last().copied().unwrap_or(f64::NAN),
    })
}

// ---------------------------------------------------------------------------
// Sandwich: c f**(t) <= (Mf)*(t) <= C f**(t)
// ---------------------------------------------------------------------------

struct SandwichRun {
    c: f64,
    big_c: f64,
    ratios: Vec<f64>,
}

fn sandwich_at(cfg: &VerifyConfig, n: usize) -> Result<SandwichRun> {
    let domain = cfg.domain(n)?;
    let items = corpus::generate(&domain, cfg.seed, 12)?;
    let radii = RadiusGrid::geometric(&domain, 32);
    let measure = domain.total_measure();
    let t_grid = geometric_grid(measure / 40.0, measure / 4.0, 24);
    let mut run = SandwichRun {
        c: f64::INFINITY,
        big_c: 0.0,
        ratios: Vec::new(),
    };
    for item in &items {
        let mf = hardy_littlewood(&item.f, &radii)?;
        let prof_m = decreasing_rearrangement(&mf);
        let prof_f = decreasing_rearrangement(&item.f);
        for &t in &t_grid {
            let dstar = double_star(&prof_f, t)?;
            if dstar == 0.0 {
                continue;
            }
            let ratio = prof_m.value_at(t) / dstar;
            run.c = run.c.min(ratio);
            run.big_c = run.big_c.max(ratio);
            run.ratios.push(ratio);
        }
    }
    Ok(run)
}

/// The two-sided rearrangement estimate for the Hardy-Littlewood maximal
/// operator, checked on the central decade of scales.
pub fn check_sandwich(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("sandwich", "c f**(t) <= (Mf)*(t) <= C f**(t)");
    let base = sandwich_at(cfg, cfg.grid_n)?;
    let fine = sandwich_at(cfg, cfg.grid_n * 2)?;
    let drift_c = rel_drift(base.c, fine.c);
    let drift_big = rel_drift(base.big_c, fine.big_c);
    let pass = base.c > 0.0
        && fine.c > 0.0
        && base.big_c.is_finite()
        && fine.big_c.is_finite()
        && drift_c < 0.20
        && drift_big < 0.20;
    report.parameters = json!({
        "seed": cfg.seed, "dim": cfg.dim, "grid_n": [cfg.grid_n, cfg.grid_n * 2],
        "corpus_size": 12, "radii": 32, "t_points": 24,
    });
    report.c_lower = Some(base.c);
    report.c_upper = Some(base.big_c);
    let mut ratios = base.ratios;
    report.ratio_quantiles = Some(quantiles_json(&mut ratios));
    report.refinement_drift = Some(drift_c.max(drift_big));
    report.details = json!({
        "c_refined": fine.c, "C_refined": fine.big_c,
        "drift_c": drift_c, "drift_C": drift_big,
    });
    report.verdict = Verdict::from_bool(pass);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Lemma 2.1: equimeasurability, sorted-prefix identity, subadditivity
// ---------------------------------------------------------------------------

struct Lemma21Run {
    max_equim_err: f64,
    max_prefix_err: f64,
    subset_violations: usize,
    subadd_violations: usize,
    pairs: usize,
}

fn lemma21_at(cfg: &VerifyConfig, n: usize, count: usize) -> Result<Lemma21Run> {
    let domain = cfg.domain(n)?;
    let items = corpus::generate(&domain, cfg.seed, count)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x21);
    let h = domain.cell_volume();
    let tol = 1e-12;
    let mut run = Lemma21Run {
        max_equim_err: 0.0,
        max_prefix_err: 0.0,
        subset_violations: 0,
        subadd_violations: 0,
        pairs: 0,
    };
    let profiles: Vec<DecreasingProfile> =
        items.iter().map(|it| decreasing_rearrangement(&it.f)).collect();
    for (item, prof) in items.iter().zip(&profiles) {
        // (i) integral of |f|^p equals integral of (f*)^p
        for &p in &[1.0, 2.0, 3.5] {
            let lhs: f64 = item.f.samples().iter().map(|v| v.abs().powf(p)).sum::<f64>() * h;
            let rhs = prof.power_integral(p);
            run.max_equim_err = run.max_equim_err.max(rel_drift(lhs, rhs));
        }
        // (ii) sup over |E| = t of int_E |f| equals the sorted prefix
        let m = domain.total_cells();
        let mut sorted: Vec<f64> = item.f.samples().iter().map(|v| v.abs()).collect();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for &k in &[1usize, m / 4, m / 2, m] {
            let t = k as f64 * h;
            let greedy: f64 = sorted[..k].iter().sum::<f64>() * h;
            let prefix = prof.integral_to(t);
            run.max_prefix_err = run.max_prefix_err.max(rel_drift(greedy, prefix));
            for _ in 0..5 {
                let subset = rand::seq::index::sample(&mut rng, m, k);
                let sum: f64 = subset
                    .iter()
                    .map(|i| item.f.samples()[i].abs())
                    .sum::<f64>()
                    * h;
                if sum > prefix * (1.0 + tol) + tol {
                    run.subset_violations += 1;
                }
            }
        }
    }
    // (iii) (f+g)*(t) <= f*(t/2) + g*(t/2) at all breakpoints of (f+g)*
    for _ in 0..100 {
        let i = rng.gen_range(0..items.len());
        let j = rng.gen_range(0..items.len());
        let sum = items[i].f.zip(&items[j].f, |a, b| a + b)?;
        let prof_sum = decreasing_rearrangement(&sum);
        let scale = prof_sum.value_at(h).abs().max(1.0);
        for &t in prof_sum.breakpoints() {
            let lhs = prof_sum.value_at(t);
            let rhs = profiles[i].value_at(t / 2.0) + profiles[j].value_at(t / 2.0);
            if lhs > rhs + tol * scale {
                run.subadd_violations += 1;
            }
        }
        run.pairs += 1;
    }
    Ok(run)
}

/// Elementary rearrangement identities: exact equimeasurability, the
/// sorted-prefix characterization of sup_{|E|=t} int_E |f|, and
/// subadditivity (f+g)*(t) <= f*(t/2) + g*(t/2).
pub fn check_lemma21(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "lemma21",
        "int |f|^p = int (f*)^p;  sup_{|E|=t} int_E |f| = int_0^t f*;  (f+g)*(t) <= f*(t/2) + g*(t/2)",
    );
    let base = lemma21_at(cfg, cfg.grid_n, 50)?;
    let fine = lemma21_at(cfg, cfg.grid_n * 2, 50)?;
    let pass = |r: &Lemma21Run| {
        r.max_equim_err <= 1e-12
            && r.max_prefix_err <= 1e-12
            && r.subset_violations == 0
            && r.subadd_violations == 0
    };
    let ok = pass(&base) && pass(&fine);
    report.parameters = json!({
        "seed": cfg.seed, "dim": cfg.dim, "grid_n": [cfg.grid_n, cfg.grid_n * 2],
        "corpus_size": 50, "pairs": base.pairs, "p_values": [1.0, 2.0, 3.5],
    });
    report.refinement_drift = Some(0.0);
    report.details = json!({
        "max_equimeasurability_rel_err": base.max_equim_err,
        "max_sorted_prefix_rel_err": base.max_prefix_err,
        "subset_violations": base.subset_violations,
        "subadditivity_violations": base.subadd_violations,
        "refined_max_equimeasurability_rel_err": fine.max_equim_err,
        "refined_subadditivity_violations": fine.subadd_violations,
    });
    report.verdict = Verdict::from_bool(ok);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Lemma 2.2: sup-functional bounds against ||f||_1 and sup t^{a/n} f*(t)
// ---------------------------------------------------------------------------

fn lemma22_at(cfg: &VerifyConfig, n: usize, alpha: f64) -> Result<(f64, f64)> {
    let domain = cfg.domain(n)?;
    let items = corpus::generate(&domain, cfg.seed, 8)?;
    let radii = RadiusGrid::geometric(&domain, 20);
    let dim = cfg.dim as f64;
    let mut c22 = 0.0f64;
    let mut c23 = 0.0f64;
    for item in &items {
        let l1 = item.f.l1_norm();
        if l1 == 0.0 {
            continue;
        }
        let mf = fractional_maximal(&item.f, alpha, &radii)?;
        let prof_m = decreasing_rearrangement(&mf);
        // (2.2): sup_t t^{1 - a/n} (M_a f)*(t), largest on the step grid at
        // right breakpoint endpoints since the weight is increasing.
        let mut sup22 = 0.0f64;
        let mut prev = 0.0f64;
        for (bp, v) in prof_m.breakpoints().iter().zip(prof_m.values()) {
            sup22 = sup22.max(bp.powf(1.0 - alpha / dim) * v);
            // the weight at the left endpoint uses the same step value
            if prev > 0.0 {
                sup22 = sup22.max(prev.powf(1.0 - alpha / dim) * v);
            }
            prev = *bp;
        }
        c22 = c22.max(sup22 / l1);
        // (2.3): sup_t (M_a f)*(t) = max M_a f vs sup_t t^{a/n} f*(t)
        let prof_f = decreasing_rearrangement(&item.f);
        let mut rhs = 0.0f64;
        for (bp, v) in prof_f.breakpoints().iter().zip(prof_f.values()) {
            rhs = rhs.max(bp.powf(alpha / dim) * v);
        }
        if rhs > 0.0 {
            c23 = c23.max(mf.max_abs() / rhs);
        }
    }
    Ok((c22, c23))
}

/// Fractional maximal bounds (2.2) and (2.3), with the explicit constant
/// n/(n - alpha) for (2.3).
pub fn check_lemma22(cfg: &VerifyConfig, alphas: &[f64]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "lemma22",
        "sup_t t^{1-a/n} (M_a f)*(t) <= C ||f||_1;  sup_t (M_a f)*(t) <= n/(n-a) sup_t t^{a/n} f*(t)",
    );
    let dim = cfg.dim as f64;
    let mut per_alpha = Vec::new();
    let mut pass = true;
    let mut worst_drift = 0.0f64;
    let mut max_c22 = 0.0f64;
    let mut max_c23_scaled = 0.0f64;
    for &alpha in alphas {
        let (c22_base, c23_base) = lemma22_at(cfg, cfg.grid_n, alpha)?;
        let (c22_fine, c23_fine) = lemma22_at(cfg, cfg.grid_n * 2, alpha)?;
        let bound = dim / (dim - alpha);
        let drift = rel_drift(c22_base, c22_fine);
        let alpha_pass = c22_base.is_finite()
            && c22_base > 0.0
            && drift < 0.25
            && c23_base <= bound * 1.25
            && c23_fine <= bound * 1.25;
        pass &= alpha_pass;
        worst_drift = worst_drift.max(drift);
        max_c22 = max_c22.max(c22_base);
        max_c23_scaled = max_c23_scaled.max(c23_base / bound);
        per_alpha.push(json!({
            "alpha": alpha,
            "C22": c22_base, "C22_refined": c22_fine, "C22_drift": drift,
            "C23": c23_base, "C23_refined": c23_fine,
            "C23_bound": bound * 1.25, "pass": alpha_pass,
        }));
    }
    report.parameters = json!({
        "seed": cfg.seed, "dim": cfg.dim, "grid_n": [cfg.grid_n, cfg.grid_n * 2],
        "alphas": alphas, "corpus_size": 8,
    });
    report.c_upper = Some(max_c22);
    report.refinement_drift = Some(worst_drift);
    report.details = json!({ "per_alpha": per_alpha, "max_C23_over_bound": max_c23_scaled });
    report.verdict = Verdict::from_bool(pass);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Lemma 2.3: (M_a f)*(t) vs sup_{t<tau} tau^{a/n} f**(tau), both directions
// ---------------------------------------------------------------------------

struct Lemma23Run {
    c_upper: f64,
    c_upper_capped: f64,
    c_lower: f64,
}

/// sup over tau in (t, tau_max] of tau^{a/n} phi**(tau), evaluated exactly
/// on the candidate set {t, breakpoints, tau_max} (interior critical points
/// of the per-step expression are minima).
fn sup_hardy_capped(phi: &DecreasingProfile, alpha: f64, n: usize, t: f64, tau_max: f64) -> f64 {
    let e = alpha / n as f64;
    let eval = |tau: f64| {
        if tau <= 0.0 {
            0.0
        } else {
            tau.powf(e - 1.0) * phi.integral_to(tau)
        }
    };
    let mut sup = eval(t).max(eval(tau_max));
    for &bp in phi.breakpoints() {
        if bp > t && bp < tau_max {
            sup = sup.max(eval(bp));
        }
    }
    sup
}

fn lemma23_at(cfg: &VerifyConfig, n: usize, alpha: f64) -> Result<Lemma23Run> {
    let domain = cfg.domain(n)?;
    let dim = domain.dim();
    let items = corpus::generate(&domain, cfg.seed, 10)?;
    let radii = RadiusGrid::geometric(&domain, 24);
    let measure = domain.total_measure();
    let tau_max = unit_ball_volume(dim) * (domain.side() / 2.0).powi(dim as i32);
    let t_grid = geometric_grid(measure / 1000.0, measure / 4.0, 32);
    let mut run = Lemma23Run {
        c_upper: 0.0,
        c_upper_capped: 0.0,
        c_lower: f64::INFINITY,
    };
    // Upper bound (2.4) on the full corpus.
    for item in &items {
        let mf = fractional_maximal(&item.f, alpha, &radii)?;
        let prof_m = decreasing_rearrangement(&mf);
        let prof_f = decreasing_rearrangement(&item.f);
        if prof_f.is_zero() {
            continue;
        }
        for &t in &t_grid {
            let lhs = prof_m.value_at(t);
            let rhs = sup_hardy(&prof_f, alpha, dim, t);
            let rhs_capped = sup_hardy_capped(&prof_f, alpha, dim, t, tau_max.min(measure));
            if rhs > 0.0 {
                run.c_upper = run.c_upper.max(lhs / rhs);
            }
            if rhs_capped > 0.0 {
                run.c_upper_capped = run.c_upper_capped.max(lhs / rhs_capped);
            }
        }
    }
    // Lower bound (2.5) on the radial sub-corpus.
    let battery = corpus::radial_battery(&domain, cfg.seed, 12)?;
    for phi in &battery {
        let f = corpus::radial_from_profile(&domain, phi)?;
        let mf = fractional_maximal(&f, alpha, &radii)?;
        let prof_m = decreasing_rearrangement(&mf);
        let prof_f = decreasing_rearrangement(&f);
        for &t in &t_grid {
            let lhs = prof_m.value_at(t);
            let rhs = sup_hardy(&prof_f, alpha, dim, t);
            if rhs > 0.0 {
                run.c_lower = run.c_lower.min(lhs / rhs);
            }
        }
    }
    Ok(run)
}

/// The sharp rearrangement estimate: upper bound (2.4) on the corpus and
/// the lower bound (2.5) on the radial sub-corpus.
pub fn check_lemma23(cfg: &VerifyConfig, alphas: &[f64]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "lemma23",
        "c sup_{t<tau} tau^{a/n} f**(tau) <= (M_a f)*(t) <= C sup_{t<tau} tau^{a/n} f**(tau)",
    );
    let mut per_alpha = Vec::new();
    let mut pass = true;
    let mut worst_drift = 0.0f64;
    let mut max_upper = 0.0f64;
    let mut min_lower = f64::INFINITY;
    for &alpha in alphas {
        let base = lemma23_at(cfg, cfg.grid_n, alpha)?;
        let fine = lemma23_at(cfg, cfg.grid_n * 2, alpha)?;
        let drift = rel_drift(base.c_upper, fine.c_upper);
        let alpha_pass = base.c_upper.is_finite()
            && base.c_upper > 0.0
            && base.c_lower > 0.0
            && fine.c_lower > 0.0
            && drift < 0.25;
        pass &= alpha_pass;
        worst_drift = worst_drift.max(drift);
        max_upper = max_upper.max(base.c_upper);
        min_lower = min_lower.min(base.c_lower);
        per_alpha.push(json!({
            "alpha": alpha,
            "C_upper": base.c_upper, "C_upper_refined": fine.c_upper,
            "C_upper_ball_capped_sup": base.c_upper_capped,
            "c_lower": base.c_lower, "c_lower_refined": fine.c_lower,
            "drift": drift, "pass": alpha_pass,
        }));
    }
    report.parameters = json!({
        "seed": cfg.seed, "dim": cfg.dim, "grid_n": [cfg.grid_n, cfg.grid_n * 2],
        "alphas": alphas, "corpus_size": 10, "radial_profiles": 12,
    });
    report.c_lower = Some(min_lower);
    report.c_upper = Some(max_upper);
    report.refinement_drift = Some(worst_drift);
    report.details = json!({ "per_alpha": per_alpha });
    report.verdict = Verdict::from_bool(pass);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Theorem 3.1: M bounded on the Lorentz-Morrey lattice
// ---------------------------------------------------------------------------

fn theorem31_at(cfg: &VerifyConfig, n: usize, lattice: &[(f64, f64, f64)]) -> Result<Vec<f64>> {
    let domain = cfg.domain(n)?;
    let items = corpus::generate(&domain, cfg.seed, 8)?;
    let radii = RadiusGrid::geometric(&domain, 24);
    let stride = (n / 64).max(1);
    let mut worst = vec![0.0f64; lattice.len()];
    for item in &items {
        let mf = hardy_littlewood(&item.f, &radii)?;
        let sweep = SweepSpec::default_for(&item.f, stride, 20);
        let norms_f = lorentz_morrey_norms_multi(&item.f, lattice, &sweep)?;
        let norms_mf = lorentz_morrey_norms_multi(&mf, lattice, &sweep)?;
        for (k, (nf, nmf)) in norms_f.iter().zip(&norms_mf).enumerate() {
            if nf.norm > 0.0 {
                worst[k] = worst[k].max(nmf.norm / nf.norm);
            }
        }
    }
    Ok(worst)
}

/// Boundedness of M across the exponent lattice, plus the coincidence
/// identities (q = p gives the Morrey norm, lambda = 0 the Lorentz norm).
pub fn check_theorem31(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "thm31",
        "||Mf||_{L_{p,q;lambda}} <= C ||f||_{L_{p,q;lambda}}, informational C vs p/(p-1)",
    );
    let dim = cfg.dim as f64;
    let mut lattice = Vec::new();
    for &p in &[1.25, 2.0, 4.0] {
        for &q in &[1.0, 2.0] {
            for &lambda in &[0.0, dim / 2.0] {
                lattice.push((p, q, lambda));
            }
        }
    }
    let base = theorem31_at(cfg, cfg.grid_n, &lattice)?;
    let fine = theorem31_at(cfg, cfg.grid_n * 2, &lattice)?;
    let mut per_param = Vec::new();
    let mut pass = true;
    let mut worst_drift = 0.0f64;
    let mut max_ratio = 0.0f64;
    for (k, &(p, q, lambda)) in lattice.iter().enumerate() {
        let drift = rel_drift(base[k], fine[k]);
        let ok = base[k].is_finite() && base[k] > 0.0 && drift < 0.25;
        pass &= ok;
        worst_drift = worst_drift.max(drift);
        max_ratio = max_ratio.max(base[k]);
        per_param.push(json!({
            "p": p, "q": q, "lambda": lambda,
            "R": base[k], "R_refined": fine[k], "drift": drift,
            "p_conjugate": p / (p - 1.0), "pass": ok,
        }));
    }
    // Coincidence identities on one corpus member, identical sweeps.
    let domain = cfg.domain(cfg.grid_n)?;
    let items = corpus::generate(&domain, cfg.seed, 3)?;
    let mut max_coincidence_err = 0.0f64;
    for item in &items {
        let sweep = SweepSpec::default_for(&item.f, 2, 24);
        let (p, q, lambda) = (2.0, 1.5, dim / 2.0);
        let lm_pp = lorentz_morrey_norm(&item.f, p, p, lambda, &sweep)?;
        let morrey = morrey_norm(&item.f, p, lambda, &sweep)?;
        max_coincidence_err = max_coincidence_err.max(rel_drift(lm_pp, morrey));
        let lm_l0 = lorentz_morrey_norm(&item.f, p, q, 0.0, &sweep)?;
        let lorentz = lorentz_norm(&item.f, p, q)?;
        max_coincidence_err = max_coincidence_err.max(rel_drift(lm_l0, lorentz));
    }
    pass &= max_coincidence_err <= 1e-12;
    report.parameters = json!({
        "seed": cfg.seed, "dim": cfg.dim, "grid_n": [cfg.grid_n, cfg.grid_n * 2],
        "lattice_p": [1.25, 2.0, 4.0], "lattice_q": [1.0, 2.0],
        "lattice_lambda": [0.0, dim / 2.0], "corpus_size": 8,
    });
    report.c_upper = Some(max_ratio);
    report.refinement_drift = Some(worst_drift);
    report.details = json!({
        "per_param": per_param,
        "coincidence_max_rel_err": max_coincidence_err,
    });
    report.verdict = Verdict::from_bool(pass);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Theorem 3.2: exponent frontier via dilation families
// ---------------------------------------------------------------------------

/// Smooth radial bump with support radius rho, sampled on the domain.
fn bump(domain: &Domain, rho: f64) -> Result<GridFunction> {
    let dim = domain.dim();
    GridFunction::from_fn(*domain, move |x| {
        let r2: f64 = x[..dim].iter().map(|v| v * v).sum::<f64>() / (rho * rho);
        if r2 < 1.0 {
            (1.0 - 1.0 / (1.0 - r2)).exp() * std::f64::consts::E
        } else {
            0.0
        }
    })
}

/// Ratios R(sigma) = ||M_a f_sigma||_{L_{q,s;l}} / ||f_sigma||_{L_{p,u;l}}
/// for the dilation family f_sigma(x) = g(sigma x).
#[allow(clippy::too_many_arguments)]
pub fn dilation_ratios(
    domain: &Domain,
    scales: &[f64],
    p: f64,
    u: f64,
    q: f64,
    s: f64,
    alpha: f64,
    lambda: f64,
) -> Result<Vec<(f64, f64)>> {
    let rho0 = domain.side() / 16.0;
    let radii = RadiusGrid::geometric(domain, 24);
    let stride = (domain.points_per_axis() / 64).max(1);
    let mut out = Vec::with_capacity(scales.len());
    for &sigma in scales {
        let rho = rho0 / sigma;
        if rho > domain.side() / 4.0 {
            return Err(LomoError::BadScale(sigma));
        }
        let f = bump(domain, rho)?;
        let mf = fractional_maximal(&f, alpha, &radii)?;
        let sweep = SweepSpec::default_for(&f, stride, 20);
        let nf = lorentz_morrey_norm(&f, p, u, lambda, &sweep)?;
        let nmf = lorentz_morrey_norm(&mf, q, s, lambda, &sweep)?;
        if nf == 0.0 {
            return Err(LomoError::ZeroFunction);
        }
        out.push((sigma, nmf / nf));
    }
    Ok(out)
}

fn drift_stats(ratios: &[(f64, f64)]) -> (f64, bool) {
    let vals: Vec<f64> = ratios.iter().map(|(_, r)| r).copied().collect();
    let max = vals.iter().cloned().fold(f64::MIN, f64::max);
    let min = vals.iter().cloned().fold(f64::MAX, f64::min);
    // monotone within 5% jitter, in either direction
    let increasing = vals.windows(2).all(|w| w[1] >= w[0] * 0.95);
    let decreasing = vals.windows(2).all(|w| w[1] <= w[0] * 1.05);
    (max / min, increasing || decreasing)
}

/// Frontier detection for the fractional maximal operator: the dilation
/// ratio is flat when 1/p - 1/q = alpha/(n - lambda) and drifts
/// monotonically when the balance is broken.
///
/// The perturbation magnitude 0.6 was frozen after a pilot sweep: the drift
/// over sigma in [1/4, 4] scales as 16^{(n-lambda)|delta|}, so the balance
/// must be displaced by at least 0.5 to produce a 2x drift at n = 1,
/// lambda = 1/2. A displacement of +0.6 is applied to 1/q; the mirrored
/// displacement is applied to 1/p because 1/q - 0.6 < 0 is not a valid
/// space. Both displaced families must drift monotonically by >= 2x.
pub fn check_theorem32_dilation(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "thm32",
        "R(sigma) = ||M_a f_sigma||_{L_{q,s;l}} / ||f_sigma||_{L_{p,u;l}} flat iff 1/p - 1/q = a/(n-l)",
    );
    // n = 1, lambda = 1/2, alpha = 1/4, p = 3/2 => balanced q = 6.
    let (p, lambda, alpha) = (1.5, 0.5, 0.25);
    let q_balanced = 1.0 / (1.0 / p - alpha / (1.0 - lambda));
    let delta = 0.6;
    let q_pert = 1.0 / (1.0 / q_balanced + delta);
    let p_pert = 1.0 / (1.0 / p - delta);
    let domain = Domain::new(1, cfg.side, 512)?;
    let coarse = Domain::new(1, cfg.side, 256)?;
    let scales = geometric_grid(0.25, 4.0, 7);

    let balanced = dilation_ratios(&domain, &scales, p, p, q_balanced, q_balanced, alpha, lambda)?;
    let balanced_coarse =
        dilation_ratios(&coarse, &scales, p, p, q_balanced, q_balanced, alpha, lambda)?;
    let pert_q = dilation_ratios(&domain, &scales, p, p, q_pert, q_pert, alpha, lambda)?;
    let pert_p = dilation_ratios(&domain, &scales, p_pert, p_pert, q_balanced, q_balanced, alpha, lambda)?;

    let (spread_bal, _) = drift_stats(&balanced);
    let (spread_bal_coarse, _) = drift_stats(&balanced_coarse);
    let (spread_q, mono_q) = drift_stats(&pert_q);
    let (spread_p, mono_p) = drift_stats(&pert_p);
    let drift = rel_drift(spread_bal, spread_bal_coarse);

    let pass = spread_bal < 2.0
        && spread_bal_coarse < 2.0
        && spread_q >= 2.0
        && mono_q
        && spread_p >= 2.0
        && mono_p
        && drift < 0.25;

    report.parameters = json!({
        "dim": 1, "grid_n": [256, 512], "side": cfg.side,
        "p": p, "q_balanced": q_balanced, "alpha": alpha, "lambda": lambda,
        "perturbation": delta, "q_perturbed": q_pert, "p_perturbed": p_pert,
        "scales": scales,
    });
    report.c_upper = Some(spread_bal);
    report.refinement_drift = Some(drift);
    report.details = json!({
        "balanced_ratios": balanced,
        "balanced_spread": spread_bal,
        "balanced_spread_coarse": spread_bal_coarse,
        "perturbed_q_ratios": pert_q,
        "perturbed_q_spread": spread_q, "perturbed_q_monotone": mono_q,
        "perturbed_p_ratios": pert_p,
        "perturbed_p_spread": spread_p, "perturbed_p_monotone": mono_p,
    });
    report.verdict = Verdict::from_bool(pass);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Condition (3.1): Hardy-type inequality on monotone profiles
// ---------------------------------------------------------------------------

/// The capped critical-decay profile phi(t) = min(cap, t^{-1/p}) on (0, T],
/// discretized as a geometric staircase.
fn critical_profile(p: f64, t_head: f64, t_max: f64, steps: usize) -> Result<DecreasingProfile> {
    let lo = t_head / 8.0;
    let ratio = (t_max / lo).powf(1.0 / steps as f64);
    let cap = t_head.powf(-1.0 / p);
    let mut breakpoints = Vec::with_capacity(steps);
    let mut values = Vec::with_capacity(steps);
    let mut t = lo;
    for _ in 0..steps {
        let prev = t / ratio;
        values.push(f64::min(cap, prev.powf(-1.0 / p)));
        breakpoints.push(t);
        t *= ratio;
    }
    *breakpoints.last_mut().unwrap() = t_max;
    DecreasingProfile::new(breakpoints, values)
}

/// LHS of the Hardy-type display: [int S(t)^s t^{s/q-1} dt]^{1/s} with
/// S(t) = sup_{t < tau} tau^{a/n-1} int_0^tau phi. Quadrature on a fine
/// geometric grid (midpoint rule in log t).
fn condition31_lhs(phi: &DecreasingProfile, alpha: f64, q: f64, s: f64) -> f64 {
    let support = phi.support_bound();
    let lo = support * 1e-8;
    let hi = support * 100.0;
    let points = 800usize;
    let step = (hi / lo).powf(1.0 / points as f64);
    let dlog = step.ln();
    let mut acc = 0.0;
    let mut t = lo * step.sqrt();
    for _ in 0..points {
        let sup = sup_hardy(phi, alpha, 1, t);
        acc += sup.powf(s) * t.powf(s / q - 1.0) * t * dlog;
        t *= step;
    }
    acc.powf(1.0 / s)
}

/// RHS in the phi^u reading: exactly the Lorentz functional of the profile.
fn condition31_rhs_u(phi: &DecreasingProfile, p: f64, u: f64) -> Result<f64> {
    lorentz_norm_of_profile(phi, p, u)
}

/// RHS in the phi^p reading printed in the source display: per-step exact.
fn condition31_rhs_p(phi: &DecreasingProfile, p: f64, u: f64) -> f64 {
    let mut acc = 0.0;
    let mut prev = 0.0f64;
    for (bp, v) in phi.breakpoints().iter().zip(phi.values()) {
        acc += v.powf(p) * (p / u) * (bp.powf(u / p) - prev.powf(u / p));
        prev = *bp;
    }
    acc.powf(1.0 / u)
}

/// On/off behavior of the Hardy-type condition: the LHS/RHS constant is
/// stable under a x10 domain extension exactly when the exponent balance
/// 1/p - 1/q = alpha/n holds (the lambda weights of the full display factor
/// out as a fixed constant for a single profile, so the check runs the
/// lambda = 0 relation).
pub fn check_condition_31(
    cfg: &VerifyConfig,
    p: f64,
    alpha: f64,
    balanced: bool,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let q = if balanced {
        1.0 / (1.0 / p - alpha)
    } else {
        // displaced toward the divergent side of the frontier
        1.0 / (1.0 / p - alpha + 0.25)
    };
    let (u, s) = (p, q);
    let mut report = VerificationReport::new(
        &format!("cond31_{}", if balanced { "balanced" } else { "unbalanced" }),
        "[int (sup_{t<tau} tau^{a/n-1} int_0^tau phi)^s t^{s/q-1} dt]^{1/s} <= C [int phi^u t^{u/p-1} dt]^{1/u}",
    );
    let domain = cfg.domain(cfg.grid_n)?;
    let mut battery: Vec<(String, DecreasingProfile)> = corpus::radial_battery(&domain, cfg.seed, 6)?
        .into_iter()
        .enumerate()
        .map(|(i, prof)| (format!("battery_{i}"), prof))
        .collect();
    battery.push((
        "critical_decay".to_string(),
        critical_profile(p, 1e-3, 1.0, 160)?,
    ));
    let extend = |phi: &DecreasingProfile, name: &str| -> Result<DecreasingProfile> {
        if name == "critical_decay" {
            critical_profile(p, 1e-3, 10.0, 220)
        } else {
            Ok(phi.clone())
        }
    };
    let refine = |name: &str| -> Result<Option<DecreasingProfile>> {
        if name == "critical_decay" {
            Ok(Some(critical_profile(p, 1e-3, 1.0, 320)?))
        } else {
            Ok(None)
        }
    };
    let mut rows = Vec::new();
    let mut max_growth = 0.0f64;
    let mut c_emp = 0.0f64;
    let mut refine_drift = 0.0f64;
    for (name, phi) in &battery {
        let rhs = condition31_rhs_u(phi, p, u)?;
        let rhs_p_reading = condition31_rhs_p(phi, p, u);
        if rhs == 0.0 {
            continue;
        }
        let lhs = condition31_lhs(phi, alpha, q, s);
        let c = lhs / rhs;
        let ext = extend(phi, name)?;
        let rhs_ext = condition31_rhs_u(&ext, p, u)?;
        let c_ext = condition31_lhs(&ext, alpha, q, s) / rhs_ext;
        let growth = c_ext / c;
        if let Some(fine) = refine(name)? {
            let c_fine = condition31_lhs(&fine, alpha, q, s) / condition31_rhs_u(&fine, p, u)?;
            refine_drift = refine_drift.max(rel_drift(c, c_fine));
        }
        max_growth = max_growth.max(growth);
        c_emp = c_emp.max(c);
        rows.push(json!({
            "profile": name, "C": c, "C_extended": c_ext, "growth": growth,
            "C_phi_p_reading": lhs / rhs_p_reading,
        }));
    }
    let stable = max_growth < 1.3;
    let pass = stable == balanced && c_emp.is_finite() && refine_drift < 0.10;
    report.parameters = json!({
        "p": p, "q": q, "u": u, "s": s, "alpha": alpha, "lambda": 0.0,
        "balanced": balanced, "extension_factor": 10.0,
        "relation": "1/p - 1/q = alpha/n",
    });
    report.c_upper = Some(c_emp);
    report.refinement_drift = Some(refine_drift);
    report.details = json!({ "profiles": rows, "max_growth": max_growth, "stable": stable });
    report.verdict = Verdict::from_bool(pass);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Section 4: Bochner-Riesz and Schrodinger dominations
// ---------------------------------------------------------------------------

fn bochner_domination_at(cfg: &VerifyConfig, n: usize, delta: f64) -> Result<f64> {
    let domain = Domain::new(1, cfg.side, n)?;
    let items = corpus::generate(&domain, cfg.seed, 8)?;
    let scales = RadiusGrid::geometric(&domain, 16);
    let m_radii = RadiusGrid::geometric(&domain, 24);
    let mut worst = 0.0f64;
    for item in &items {
        let bstar = maximal_bochner_riesz(&item.f, delta, &scales)?;
        let mf = hardy_littlewood(&item.f, &m_radii)?;
        let stats = domination_ratio(&bstar, &mf)?;
        worst = worst.max(stats.sup_ratio);
    }
    Ok(worst)
}

fn schrodinger_domination_at(
    cfg: &VerifyConfig,
    n: usize,
    mode: u8,
    gamma: f64,
    beta: f64,
    constant_potential: bool,
) -> Result<f64> {
    let domain = Domain::new(1, cfg.side, n)?;
    let items = corpus::generate(&domain, cfg.seed, 4)?;
    let potential = if constant_potential {
        GridFunction::constant(domain, 1.0)?
    } else {
        GridFunction::from_fn(domain, |x| {
            1.0 + 0.5 * (2.0 * std::f64::consts::PI * x[0] / 2.0).cos().powi(2)
        })?
    };
    let alpha = if mode == 1 {
        2.0 * (beta - gamma)
    } else {
        2.0 * (beta - gamma) - 1.0
    };
    let radii = RadiusGrid::geometric(&domain, 24);
    let mut worst = 0.0f64;
    for item in &items {
        let spec = if mode == 1 {
            SchrodingerSpec::t1(potential.clone(), gamma, beta)?
        } else {
            SchrodingerSpec::t2(potential.clone(), gamma, beta)?
        };
        let tf = if mode == 1 {
            t1_apply(&item.f, &spec)?
        } else {
            t2_apply(&item.f, &spec)?
        };
        let maf = fractional_maximal(&item.f, alpha, &radii)?;
        let stats = domination_ratio(&tf, &maf)?;
        worst = worst.max(stats.sup_ratio);
    }
    Ok(worst)
}

/// Ratios R(sigma) for an arbitrary operator in place of M_alpha.
fn operator_dilation_ratios(
    domain: &Domain,
    scales: &[f64],
    apply: &dyn Fn(&GridFunction) -> Result<GridFunction>,
    p: f64,
    q: f64,
    lambda: f64,
) -> Result<Vec<(f64, f64)>> {
    let rho0 = domain.side() / 16.0;
    let stride = (domain.points_per_axis() / 64).max(1);
    let mut out = Vec::with_capacity(scales.len());
    for &sigma in scales {
        let rho = rho0 / sigma;
        if rho > domain.side() / 4.0 {
            return Err(LomoError::BadScale(sigma));
        }
        let f = bump(domain, rho)?;
        let tf = apply(&f)?;
        let sweep = SweepSpec::default_for(&f, stride, 20);
        let nf = lorentz_morrey_norm(&f, p, p, lambda, &sweep)?;
        let ntf = lorentz_morrey_norm(&tf, q, q, lambda, &sweep)?;
        out.push((sigma, ntf / nf));
    }
    Ok(out)
}

/// Applications: maximal Bochner-Riesz dominated by M, Bochner-Riesz norm
/// ratios finite, T1/T2 dominated by the fractional maximal operator with
/// the exponent shifts alpha = 2(beta-gamma) and alpha = 2(beta-gamma) - 1,
/// and the dilation balance for both operators.
pub fn check_section4(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "section4",
        "B_{d,*}f <= C Mf;  |T1 f| <= C M_{2(b-g)} f;  |T2 f| <= C M_{2(b-g)-1} f",
    );
    let mut pass = true;
    let mut worst_drift = 0.0f64;

    // (a) maximal Bochner-Riesz dominated by M, for delta at the critical
    // threshold plus 1/2 and at delta = n.
    let deltas = [0.5, 1.0]; // 1D: (n-1)/2 + 1/2 = 1/2, and delta = n = 1
    let mut bochner_rows = Vec::new();
    for &delta in &deltas {
        let c_base = bochner_domination_at(cfg, cfg.grid_n, delta)?;
        let c_fine = bochner_domination_at(cfg, cfg.grid_n * 2, delta)?;
        let drift = rel_drift(c_base, c_fine);
        let ok = c_base.is_finite() && c_base > 0.0 && drift < 0.25;
        pass &= ok;
        worst_drift = worst_drift.max(drift);
        bochner_rows.push(json!({
            "delta": delta, "C": c_base, "C_refined": c_fine, "drift": drift, "pass": ok,
        }));
    }

    // (b) Bochner-Riesz norm ratios in a Lorentz-Morrey space.
    let domain = cfg.domain(cfg.grid_n)?;
    let items = corpus::generate(&domain, cfg.seed, 4)?;
    let mut max_norm_ratio = 0.0f64;
    for item in &items {
        let spec = MultiplierSpec::new(1, 1.0, 0.5)?;
        let bf = crate::multiplier::bochner_riesz(&item.f, &spec);
        let sweep = SweepSpec::default_for(&item.f, 2, 20);
        let nf = lorentz_morrey_norm(&item.f, 2.0, 2.0, 0.5, &sweep)?;
        let nbf = lorentz_morrey_norm(&bf, 2.0, 2.0, 0.5, &sweep)?;
        if nf > 0.0 {
            max_norm_ratio = max_norm_ratio.max(nbf / nf);
        }
    }
    pass &= max_norm_ratio.is_finite() && max_norm_ratio > 0.0;

    // (c) T1/T2 pointwise dominations over the (gamma, beta) lattice, two
    // potentials, at N and 2N.
    let t1_lattice = [(0.0, 0.0), (0.0, 0.25), (0.25, 0.5), (0.5, 0.75), (1.0, 1.0)];
    let t2_lattice = [(0.0, 0.5), (0.0, 0.75), (0.25, 1.0)];
    let n_small = 64usize;
    let mut schrodinger_rows = Vec::new();
    for (mode, lattice) in [(1u8, &t1_lattice[..]), (2u8, &t2_lattice[..])] {
        for &(gamma, beta) in lattice {
            for constant_potential in [true, false] {
                let c_base =
                    schrodinger_domination_at(cfg, n_small, mode, gamma, beta, constant_potential)?;
                let c_fine = schrodinger_domination_at(
                    cfg,
                    n_small * 2,
                    mode,
                    gamma,
                    beta,
                    constant_potential,
                )?;
                let drift = rel_drift(c_base, c_fine);
                let ok = c_base.is_finite() && c_base > 0.0 && drift < 0.30;
                pass &= ok;
                worst_drift = worst_drift.max(drift);
                let alpha = if mode == 1 {
                    2.0 * (beta - gamma)
                } else {
                    2.0 * (beta - gamma) - 1.0
                };
                schrodinger_rows.push(json!({
                    "operator": format!("T{mode}"), "gamma": gamma, "beta": beta,
                    "alpha": alpha, "constant_potential": constant_potential,
                    "C": c_base, "C_refined": c_fine, "drift": drift, "pass": ok,
                }));
            }
        }
    }

    // (d) dilation balance: 1/p - 1/q = 2(beta-gamma)/(n-lambda) for T1 and
    // the -1 shift for T2, with alpha = 1/4 in both cases.
    let dil_domain = Domain::new(1, cfg.side, 512)?;
    let scales = geometric_grid(0.25, 4.0, 5);
    let (p, lambda) = (1.5, 0.5);
    let q = 1.0 / (1.0 / p - 0.25 / (1.0 - lambda));
    let v_const = GridFunction::constant(dil_domain, 1.0)?;
    let t1_spec = SchrodingerSpec::t1(v_const.clone(), 0.5, 0.625)?;
    let t2_spec = SchrodingerSpec::t2(v_const, 0.0, 0.625)?;
    let t1_ratios = operator_dilation_ratios(
        &dil_domain,
        &scales,
        &|f| t1_apply(f, &t1_spec),
        p,
        q,
        lambda,
    )?;
    let t2_ratios = operator_dilation_ratios(
        &dil_domain,
        &scales,
        &|f| t2_apply(f, &t2_spec),
        p,
        q,
        lambda,
    )?;
    let (t1_spread, _) = drift_stats(&t1_ratios);
    let (t2_spread, _) = drift_stats(&t2_ratios);
    let balance_ok = t1_spread.is_finite() && t2_spread.is_finite();
    pass &= balance_ok;

    report.parameters = json!({
        "seed": cfg.seed, "dim": 1, "grid_n": [cfg.grid_n, cfg.grid_n * 2],
        "deltas": deltas, "schrodinger_grid_n": [n_small, n_small * 2],
        "dilation": { "p": p, "q": q, "lambda": lambda,
                      "t1": {"gamma": 0.5, "beta": 0.625},
                      "t2": {"gamma": 0.0, "beta": 0.625} },
    });
    report.refinement_drift = Some(worst_drift);
    report.details = json!({
        "bochner_riesz": bochner_rows,
        "bochner_riesz_norm_ratio": max_norm_ratio,
        "schrodinger": schrodinger_rows,
        "t1_dilation_ratios": t1_ratios, "t1_dilation_spread": t1_spread,
        "t2_dilation_ratios": t2_ratios, "t2_dilation_spread": t2_spread,
    });
    report.verdict = Verdict::from_bool(pass);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> VerifyConfig {
        VerifyConfig {
            seed: 42,
            dim: 1,
            grid_n: 64,
            side: 2.0,
        }
    }

    #[test]
    fn sandwich_passes_at_small_scale() {
        let report = check_sandwich(&small_cfg()).unwrap();
        assert!(report.verdict.is_pass(), "{:?}", report.details);
        assert!(report.c_lower.unwrap() > 0.0);
        assert!(report.c_upper.unwrap() >= report.c_lower.unwrap());
    }

    #[test]
    fn lemma21_passes_at_small_scale() {
        let report = check_lemma21(&small_cfg()).unwrap();
        assert!(report.verdict.is_pass(), "{:?}", report.details);
    }

    #[test]
    fn lemma22_passes_at_small_scale() {
        let report = check_lemma22(&small_cfg(), &[0.25, 0.5]).unwrap();
        assert!(report.verdict.is_pass(), "{:?}", report.details);
    }

    #[test]
    fn lemma23_passes_at_small_scale() {
        let report = check_lemma23(&small_cfg(), &[0.5]).unwrap();
        assert!(report.verdict.is_pass(), "{:?}", report.details);
        assert!(report.c_lower.unwrap() > 0.0);
    }

    #[test]
    fn thm31_passes_at_small_scale() {
        let report = check_theorem31(&small_cfg()).unwrap();
        assert!(report.verdict.is_pass(), "{:?}", report.details);
    }

    #[test]
    fn cond31_balanced_stable_unbalanced_grows() {
        let cfg = small_cfg();
        let balanced = check_condition_31(&cfg, 1.5, 0.25, true).unwrap();
        assert!(balanced.verdict.is_pass(), "{:?}", balanced.details);
        let unbalanced = check_condition_31(&cfg, 1.5, 0.25, false).unwrap();
        assert!(unbalanced.verdict.is_pass(), "{:?}", unbalanced.details);
    }

    #[test]
    fn suite_parse_roundtrip() {
        for name in [
            "all",
            "sandwich",
            "lemma21",
            "lemma22",
            "lemma23",
            "thm31",
            "thm32",
            "cond31",
            "section4",
        ] {
            assert!(Suite::parse(name).is_some(), "{name}");
        }
        assert!(Suite::parse("bogus").is_none());
    }

    #[test]
    fn reports_deterministic_given_seed() {
        let cfg = small_cfg();
        let a = check_sandwich(&cfg).unwrap();
        let b = check_sandwich(&cfg).unwrap();
        assert_eq!(
            crate::report::deterministic_view(&[a]),
            crate::report::deterministic_view(&[b])
        );
    }
}
