//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `cargo test -- --nocapture`).

use std::time::Instant;

use lomo::corpus;
use lomo::grid::{Domain, GridFunction};
use lomo::multiplier::{
    bochner_riesz, gradient, hamiltonian_matrix, t1_apply, t2_apply, MultiplierSpec,
    SchrodingerSpec,
};
use lomo::report::deterministic_view;
use lomo::verify::{
    check_lemma21, check_lemma22, check_lemma23, check_sandwich, check_section4,
    check_theorem31, check_theorem32_dilation, run_suite, Suite, VerifyConfig,
};

fn cfg(dim: usize, grid_n: usize) -> VerifyConfig {
    VerifyConfig {
        seed: 42,
        dim,
        grid_n,
        side: 2.0,
    }
}

fn announce(criterion: u32, ok: bool, summary: &str) {
    println!(
        "criterion {criterion}: {} — {summary}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {summary}");
}

#[test]
fn criterion_01_exact_identities() {
    let start = Instant::now();
    let r1 = check_lemma21(&cfg(1, 256)).unwrap();
    let r2 = check_lemma21(&cfg(2, 64)).unwrap();
    let elapsed = start.elapsed();
    let ok = r1.verdict.is_pass() && r2.verdict.is_pass() && elapsed.as_secs() < 10;
    announce(
        1,
        ok,
        &format!(
            "equimeasurability and sorted-prefix identity to 1e-12, 1D N=256 and 2D N=64, {} ms",
            elapsed.as_millis()
        ),
    );
}

#[test]
fn criterion_02_subadditivity() {
    let r = check_lemma21(&cfg(1, 256)).unwrap();
    let violations = r.details["subadditivity_violations"].as_u64().unwrap()
        + r.details["refined_subadditivity_violations"].as_u64().unwrap();
    let ok = r.verdict.is_pass() && violations == 0;
    announce(
        2,
        ok,
        &format!("(f+g)*(t) <= f*(t/2) + g*(t/2) on 100 random pairs, {violations} violations"),
    );
}

#[test]
fn criterion_03_sandwich() {
    let start = Instant::now();
    let r = check_sandwich(&cfg(1, 256)).unwrap();
    let elapsed = start.elapsed();
    let ok = r.verdict.is_pass() && elapsed.as_secs() < 60;
    announce(
        3,
        ok,
        &format!(
            "c_emp={:.4}, C_emp={:.4}, drift={:.4} between N=256 and N=512, {} ms",
            r.c_lower.unwrap(),
            r.c_upper.unwrap(),
            r.refinement_drift.unwrap(),
            elapsed.as_millis()
        ),
    );
}

#[test]
fn criterion_04_fractional_maximal_constant() {
    let r1 = check_lemma22(&cfg(1, 256), &[0.25, 0.5, 0.75]).unwrap();
    let r2 = check_lemma22(&cfg(2, 32), &[0.5, 1.0, 1.5]).unwrap();
    let worst = r1.details["max_C23_over_bound"]
        .as_f64()
        .unwrap()
        .max(r2.details["max_C23_over_bound"].as_f64().unwrap());
    let ok = r1.verdict.is_pass() && r2.verdict.is_pass();
    announce(
        4,
        ok,
        &format!(
            "constant <= n/(n-a)*1.25 for a in {{n/4, n/2, 3n/4}}, n in {{1,2}}; worst C/bound = {:.4}",
            worst * 1.25
        ),
    );
}

#[test]
fn criterion_05_sharp_rearrangement_bounds() {
    let r = check_lemma23(&cfg(1, 256), &[0.25, 0.5]).unwrap();
    let ok = r.verdict.is_pass() && r.c_lower.unwrap() > 0.0;
    announce(
        5,
        ok,
        &format!(
            "upper bound stable (C_emp={:.4}), lower bound positive (c_emp={:.4}) on 12 radial profiles",
            r.c_upper.unwrap(),
            r.c_lower.unwrap()
        ),
    );
}

#[test]
fn criterion_06_maximal_boundedness_lattice() {
    let r = check_theorem31(&cfg(1, 256)).unwrap();
    let coincidence = r.details["coincidence_max_rel_err"].as_f64().unwrap();
    let ok = r.verdict.is_pass() && coincidence <= 1e-12;
    announce(
        6,
        ok,
        &format!(
            "norm ratios finite and stable across the lattice (max R={:.4}); coincidence error {:.2e}",
            r.c_upper.unwrap(),
            coincidence
        ),
    );
}

#[test]
fn criterion_07_exponent_frontier() {
    let r = check_theorem32_dilation(&cfg(1, 256)).unwrap();
    let d = &r.details;
    let ok = r.verdict.is_pass();
    announce(
        7,
        ok,
        &format!(
            "balanced spread {:.3}x (< 2x); displaced balance drifts {:.3}x and {:.3}x monotonically (>= 2x, pilot-frozen displacement 0.6)",
            d["balanced_spread"].as_f64().unwrap(),
            d["perturbed_q_spread"].as_f64().unwrap(),
            d["perturbed_p_spread"].as_f64().unwrap()
        ),
    );
}

/// Naive O(N^2) DFT application of the Bochner-Riesz multiplier in 1D.
fn bochner_riesz_dft_oracle(f: &GridFunction, delta: f64, r: f64) -> Vec<f64> {
    let n = f.domain().points_per_axis();
    let l = f.domain().side();
    let mut out = vec![0.0f64; n];
    for (j, o) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for k in 0..n {
            let k_signed = if k < n / 2 { k as i64 } else { k as i64 - n as i64 };
            let xi = 2.0 * std::f64::consts::PI * k_signed as f64 / l;
            let m = (1.0 - r * r * xi * xi).max(0.0).powf(delta);
            // coefficient c_k = (1/N) sum_m f_m e^{-2 pi i k m / N}
            let mut re = 0.0;
            let mut im = 0.0;
            for (mm, &v) in f.samples().iter().enumerate() {
                let arg = -2.0 * std::f64::consts::PI * (k * mm) as f64 / n as f64;
                re += v * arg.cos();
                im += v * arg.sin();
            }
            let arg = 2.0 * std::f64::consts::PI * (k * j) as f64 / n as f64;
            acc += m * (re * arg.cos() - im * arg.sin()) / n as f64;
        }
        *o = acc;
    }
    out
}

#[test]
fn criterion_08_bochner_riesz() {
    let domain = Domain::new(1, 2.0, 64).unwrap();
    let items = corpus::generate(&domain, 42, 3).unwrap();
    let mut max_err = 0.0f64;
    for item in &items {
        let spec = MultiplierSpec::new(1, 1.0, 0.5).unwrap();
        let fast = bochner_riesz(&item.f, &spec);
        let oracle = bochner_riesz_dft_oracle(&item.f, 1.0, 0.5);
        for (a, b) in fast.samples().iter().zip(&oracle) {
            max_err = max_err.max((a - b).abs());
        }
    }
    let r = check_section4(&cfg(1, 256)).unwrap();
    let dominations_ok = r.details["bochner_riesz"]
        .as_array()
        .unwrap()
        .iter()
        .all(|row| row["pass"].as_bool().unwrap());
    let ok = max_err <= 1e-10 && dominations_ok && r.verdict.is_pass();
    announce(
        8,
        ok,
        &format!(
            "DFT oracle max error {max_err:.2e} at N=64; maximal means dominated by Mf for both deltas"
        ),
    );
}

#[test]
fn criterion_09_schrodinger() {
    // Oracle: dense-matrix negative power (via an eigendecomposition built
    // directly in this test) against the library's t1/t2, constant V so the
    // library takes the circulant path.
    let domain = Domain::new(1, 2.0, 64).unwrap();
    let v = GridFunction::constant(domain, 1.5).unwrap();
    let items = corpus::generate(&domain, 42, 2).unwrap();
    let (gamma, beta) = (0.25, 0.75);
    let a = hamiltonian_matrix(&v);
    let eig = nalgebra::SymmetricEigen::new(a);
    let neg_power = |f: &GridFunction, b: f64| -> Vec<f64> {
        let x = nalgebra::DVector::from_column_slice(f.samples());
        let coeffs = eig.eigenvectors.transpose() * x;
        let scaled = nalgebra::DVector::from_iterator(
            coeffs.len(),
            coeffs.iter().zip(eig.eigenvalues.iter()).map(|(c, ev)| c * ev.powf(-b)),
        );
        (&eig.eigenvectors * scaled).iter().copied().collect()
    };
    let mut max_err = 0.0f64;
    for item in &items {
        // T1 oracle: V^gamma (A^-beta f)
        let dense = neg_power(&item.f, beta);
        let spec = SchrodingerSpec::t1(v.clone(), gamma, beta).unwrap();
        let fast = t1_apply(&item.f, &spec).unwrap();
        for (idx, (a_fast, a_dense)) in fast.samples().iter().zip(&dense).enumerate() {
            let oracle = v.samples()[idx].powf(gamma) * a_dense;
            max_err = max_err.max((a_fast - oracle).abs());
        }
        // T2 oracle: V^gamma |grad (A^-beta f)| with the same dense core
        let core = GridFunction::new(domain, neg_power(&item.f, beta)).unwrap();
        let grads = gradient(&core);
        let spec2 = SchrodingerSpec::t2(v.clone(), 0.0, beta).unwrap();
        let fast2 = t2_apply(&item.f, &spec2).unwrap();
        for (idx, a_fast) in fast2.samples().iter().enumerate() {
            let oracle = grads[0].samples()[idx].abs();
            max_err = max_err.max((a_fast - oracle).abs());
        }
    }
    let r = check_section4(&cfg(1, 256)).unwrap();
    let rows = r.details["schrodinger"].as_array().unwrap();
    let dominations_ok = rows.iter().all(|row| row["pass"].as_bool().unwrap());
    let collapse_ok = rows.iter().any(|row| {
        row["alpha"].as_f64().unwrap() == 0.0 && row["operator"] == "T1"
    }) && rows.iter().any(|row| {
        row["alpha"].as_f64().unwrap() == 0.0 && row["operator"] == "T2"
    });
    let ok = max_err <= 1e-9 && dominations_ok && collapse_ok;
    announce(
        9,
        ok,
        &format!(
            "circulant path matches dense oracle to {max_err:.2e}; lattice dominations stable incl. alpha=0 collapses"
        ),
    );
}

#[test]
fn criterion_10_determinism() {
    let c = cfg(1, 64);
    let a = run_suite(Suite::Sandwich, &c).unwrap();
    let b = run_suite(Suite::Sandwich, &c).unwrap();
    let ok = deterministic_view(&a) == deterministic_view(&b);
    announce(
        10,
        ok,
        "two runs with identical seed/config produce byte-identical reports modulo timestamp",
    );
}
