//! Acceptance criteria, one PASS/FAIL line each.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use ohsz_core::algebra::symmetric_eigenvalues;
use ohsz_core::crossings::{
    b1_approx, b1_exact, crossing_catalog, critical_field, delta_c_printed, f1_crossings, f2_crossings, g_c,
    gap_delta_3_2, min_gap_search, pair_gap, resolvent_analysis, CrossingKind, CrossingOptions, CrossingSource,
    F1Quartic,
};
use ohsz_core::discriminant::{audit, eval_f2, f2_parallel, f2_perpendicular, rel_diff, AuditOptions};
use ohsz_core::fit::{fit_power_law, fit_sin_power};
use ohsz_core::sampling::{random_configs, SampleBox};
use ohsz_core::{analytic_eigenvalues, PhysicalConstants, ScaledParameters, Scaling, SymmetricMatrix8};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn zero_field_b1(sc: &Scaling) -> Outcome {
    let t0 = Instant::now();
    let c = PhysicalConstants::default();
    let closed = sc.delta_tilde() * 1e9 * c.planck / (12.0 * c.bohr_magneton);
    let p = sc.scaled(0.0, 0.0, 0.9);
    let from_f1 = f1_crossings(sc, &p, &CrossingOptions::default())
        .unwrap()
        .iter()
        .filter(|r| r.pair == (4, 5) && r.root_location > 0.0)
        .map(|r| r.root_location)
        .fold(f64::INFINITY, f64::min);
    let guess = sc.b_tilde(0.05);
    let (bm, _) = min_gap_search(&p, (4, 5), 0.9 * guess, 1.1 * guess);
    let by_gap = sc.tesla(bm);
    let elapsed = t0.elapsed();
    let pass = [closed, from_f1, by_gap].iter().all(|b| (b - 0.049626).abs() < 1e-4) && within(elapsed, 1.0);
    outcome(pass, format!("closed={closed:.7} f1={from_f1:.7} gap-min={by_gap:.7} T in {elapsed:.2?}"))
}

fn oracle_equivalence(configs: &[ScaledParameters]) -> Outcome {
    let t0 = Instant::now();
    let mut worst = 0f64;
    for p in configs {
        let a = analytic_eigenvalues(p).unwrap().lambdas;
        let j = symmetric_eigenvalues(&SymmetricMatrix8::from_params(p).entries).unwrap();
        let scale = a[0].abs().max(a[7].abs());
        for (x, y) in a.iter().zip(j) {
            worst = worst.max((x - y).abs() / scale);
        }
    }
    let elapsed = t0.elapsed();
    outcome(worst <= 1e-9 && within(elapsed, 5.0), format!("max rel deviation {worst:.2e} in {elapsed:.2?}"))
}

fn pairing_and_evenness(configs: &[ScaledParameters]) -> Outcome {
    let mut pairing = 0f64;
    let mut parity = 0f64;
    for p in configs {
        let s = analytic_eigenvalues(p).unwrap();
        pairing = pairing.max(s.pairing_defect());
        let base = sorted(s.lambdas.to_vec());
        for q in [p.with_b_tilde(-p.b_tilde), p.with_e_tilde(-p.e_tilde)] {
            let other = sorted(analytic_eigenvalues(&q).unwrap().lambdas.to_vec());
            for (x, y) in base.iter().zip(&other) {
                parity = parity.max((x - y).abs());
            }
        }
    }
    outcome(pairing <= 1e-9 && parity <= 1e-9, format!("pairing {pairing:.2e}, sign flips {parity:.2e}"))
}

fn discriminant_agreement(sc: &Scaling) -> Outcome {
    let t0 = Instant::now();
    let report = audit(sc, &AuditOptions::default()).unwrap();
    let elapsed = t0.elapsed();
    let pass = report.max_product_rel <= 1e-6 && report.max_identity_rel <= 1e-8 && within(elapsed, 10.0);
    outcome(
        pass,
        format!(
            "product {:.2e}, f1 identity {:.2e} over {} samples in {elapsed:.2?}",
            report.max_product_rel, report.max_identity_rel, report.samples
        ),
    )
}

fn special_f2(sc: &Scaling, configs: &[ScaledParameters]) -> Outcome {
    let p = sc.scaled(0.0, 0.0, 0.9);
    let mut locs: Vec<f64> = Vec::new();
    for r in f2_crossings(sc, &p, &CrossingOptions::default()).unwrap() {
        if !locs.iter().any(|l| (l - r.b_location).abs() < 1e-4) {
            locs.push(r.b_location);
        }
    }
    let locs = sorted(locs);
    let want = [0.0, 0.074439, 0.148878];
    let set_ok = locs.len() == want.len() && locs.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-4);
    let mut worst = 0f64;
    for p in configs {
        for theta in [0.0, PI / 2.0, PI] {
            let q = p.with_theta(theta);
            let reduced = if theta == PI / 2.0 { f2_perpendicular(&q) } else { f2_parallel(&q) };
            worst = worst.max(rel_diff(reduced, eval_f2(&q)));
        }
    }
    outcome(set_ok && worst <= 1e-8, format!("E=0 set {locs:.6?} T, reduced forms {worst:.2e}"))
}

fn b1_approximation(sc: &Scaling) -> Outcome {
    let mut worst = 0f64;
    for k in 1..=50 {
        let p = sc.scaled(10.0 * k as f64, 0.0, PI / 3.0);
        let exact = b1_exact(sc, &p).unwrap();
        worst = worst.max(((exact - b1_approx(sc, &p)) / exact).abs());
    }
    outcome(worst < 0.01, format!("max relative difference {:.3}% for E <= 500 V/cm", 100.0 * worst))
}

fn gap_vs_field(sc: &Scaling) -> Outcome {
    let es: Vec<f64> = (0..25).map(|k| 10.0 + 60.0 * k as f64 / 24.0).collect();
    let gaps: Vec<f64> = es.iter().map(|&e| gap_delta_3_2(&sc.scaled(e, 0.0, PI / 3.0)).unwrap()).collect();
    let fit = fit_power_law(&es, &gaps).unwrap();
    outcome(
        (fit.exponent - 3.0).abs() <= 0.05,
        format!("exponent {:.4}, coefficient {:.4e} GHz/(V/cm)^p", fit.exponent, fit.coefficient),
    )
}

fn gap_vs_angle(sc: &Scaling) -> Outcome {
    let thetas: Vec<f64> = (0..121).map(|k| 0.01 + (PI - 0.02) * k as f64 / 120.0).collect();
    let mut parts = Vec::new();
    let mut pass = true;
    for (e, want) in [(300.0, 3.0), (1400.0, 2.0), (4000.0, 1.0)] {
        let gaps: Vec<f64> = thetas.iter().map(|&t| gap_delta_3_2(&sc.scaled(e, 0.0, t)).unwrap()).collect();
        let fit = fit_sin_power(&thetas, &gaps).unwrap();
        pass &= (fit.exponent - want).abs() <= 0.3;
        parts.push(format!("p({e} V/cm)={:.3}", fit.exponent));
    }
    outcome(pass, parts.join(", "))
}

fn resolvent_properties(sc: &Scaling) -> Outcome {
    let bx = SampleBox { b_max_tesla: 0.0, ..Default::default() };
    let mut bad = 0;
    let mut n = 0;
    for p in random_configs(sc, &bx, 10_000, 99) {
        if p.e_tilde <= 0.0 || p.theta <= 0.0 || p.theta >= PI {
            continue;
        }
        n += 1;
        if delta_c_printed(p.delta_tilde, p.e_tilde, p.theta) > 0.0 || g_c(p.delta_tilde, p.e_tilde, p.theta) <= 0.0 {
            bad += 1;
        }
    }
    let d = sc.delta_tilde();
    let ec = critical_field(PI / 2.0, d).unwrap();
    let p = ScaledParameters::new(0.0, ec, d, PI / 2.0).unwrap();
    let r = resolvent_analysis(&F1Quartic::new(&p), &p).unwrap();
    let c_rel = r.c_r / r.q.abs();
    let ec_vcm = sc.vcm(ec);
    let pass = bad == 0 && c_rel <= 1e-8 && (ec_vcm - 2880.0).abs() < 5.0;
    outcome(pass, format!("{bad}/{n} sign violations, C_r/|q| at E_c = {c_rel:.2e}, E_c = {ec_vcm:.1} V/cm"))
}

fn catalog_consistency(sc: &Scaling) -> Outcome {
    let t0 = Instant::now();
    let bx = SampleBox { b_max_tesla: 0.0, ..Default::default() };
    let mut checked = 0;
    let mut worst = 0f64;
    let mut failures = 0;
    for p in random_configs(sc, &bx, 50, 2024) {
        let records = crossing_catalog(sc, &p, &CrossingOptions::default()).unwrap();
        for r in records.iter().filter(|r| r.kind == CrossingKind::Avoided) {
            checked += 1;
            if r.source == CrossingSource::F0Analytic {
                failures += 1;
                continue;
            }
            // Dense grid of ±2 mT around the record at 1 μT spacing.
            let half = sc.b_tilde(2e-3);
            let lo = (sc.b_tilde(r.b_location) - half).max(0.0);
            let n = 4001;
            let grid: Vec<f64> = (0..n).map(|k| lo + 2.0 * half * k as f64 / (n - 1) as f64).collect();
            let gaps: Vec<f64> = grid.iter().map(|&b| pair_gap(&p, b, r.pair)).collect();
            let nearest = (1..n - 1)
                .filter(|&k| gaps[k] <= gaps[k - 1] && gaps[k] <= gaps[k + 1])
                .map(|k| (sc.tesla(grid[k]) - r.b_location).abs())
                .fold(f64::INFINITY, f64::min);
            if nearest > 1e-4 {
                failures += 1;
            }
            worst = worst.max(nearest);
        }
    }
    let elapsed = t0.elapsed();
    outcome(
        failures == 0 && checked > 0 && within(elapsed, 30.0),
        format!("{checked} avoided crossings, worst offset {worst:.2e} T, {failures} failures in {elapsed:.2?}"),
    )
}

#[test]
fn acceptance() {
    let sc = Scaling::default();
    let configs = random_configs(&sc, &SampleBox::default(), 1000, 7);
    let results = [
        ("zero-field B1 location", zero_field_b1(&sc)),
        ("oracle equivalence", oracle_equivalence(&configs)),
        ("Kramers pairing and evenness", pairing_and_evenness(&configs)),
        ("discriminant triple agreement", discriminant_agreement(&sc)),
        ("special-case f2", special_f2(&sc, &configs[..200])),
        ("B1 approximation quality", b1_approximation(&sc)),
        ("gap scaling in E", gap_vs_field(&sc)),
        ("gap scaling in theta", gap_vs_angle(&sc)),
        ("resolvent properties", resolvent_properties(&sc)),
        ("crossing catalog consistency", catalog_consistency(&sc)),
    ];
    for (k, (name, o)) in results.iter().enumerate() {
        println!("{} criterion {:2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    let failed: Vec<&str> = results.iter().filter(|(_, o)| !o.pass).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}
