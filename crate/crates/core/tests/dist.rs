mod common;

use gaussian_chain::dist::{analytic_moments, density_mc, density_mc_grid, standardize, tail_prob, tail_table, GcParams};
use proptest::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

use common::*;

#[test]
fn product_sampler_matches_nested_chain() {
    let n = 100_000;
    for q in [2, 3, 5] {
        let params = GcParams::standard(q).unwrap();
        let passes = (0..5u64)
            .filter(|&seed| {
                let product = params.sample_n(n, 100 + seed).unwrap();
                let nested = nested_samples(q, 0.0, 1.0, n, 900 + seed);
                ks_statistic(&product, &nested) < ks_critical_1pct(n, n)
            })
            .count();
        assert!(passes >= 3, "q={q}: only {passes}/5 seeds passed KS");
    }
}

#[test]
fn sample_moments_match_analytic() {
    let n = 1_000_000;
    for q in 1..=6 {
        let params = GcParams::new(q, 0.0, 1.0).unwrap();
        let m = analytic_moments(&params).unwrap();
        let (mean, var) = mean_var(&params.sample_n(n, 7 * q as u64).unwrap());
        let se_mean = (m.variance / n as f64).sqrt();
        let se_var = ((m.fourth_central - m.variance.powi(2)) / n as f64).sqrt();
        assert!((mean - m.mean).abs() < 5.0 * se_mean, "q={q} mean {mean}");
        assert!((var - m.variance).abs() < 5.0 * se_var, "q={q} var {var}");
    }
}

#[test]
fn fourth_moment_and_kurtosis() {
    let n = 1_000_000;
    for q in 1..=3 {
        let params = GcParams::standard(q).unwrap();
        let m = analytic_moments(&params).unwrap();
        assert!((m.fourth_central - 3f64.powi(q as i32)).abs() < 1e-12);
        assert!((m.excess_kurtosis - (3f64.powi(q as i32) - 3.0)).abs() < 1e-12);
        let xs = params.sample_n(n, 31 + q as u64).unwrap();
        let m4 = xs.iter().map(|x| x.powi(4)).sum::<f64>() / n as f64;
        let rel = (m4 - m.fourth_central).abs() / m.fourth_central;
        assert!(rel < 0.05, "q={q} fourth moment {m4}");
    }
}

#[test]
fn location_and_scale_recovered() {
    let params = GcParams::new(3, 5.0, 2.0).unwrap();
    let (mean, var) = mean_var(&params.sample_n(1_000_000, 11).unwrap());
    assert!((mean - 5.0).abs() < 0.01, "mean {mean}");
    assert!((var - 4.0).abs() < 0.2, "var {var}");
}

#[test]
fn standardized_samples_are_standard() {
    let n = 100_000;
    let shifted = GcParams::new(4, -3.0, 0.5).unwrap().sample_n(n, 5).unwrap();
    let z: Vec<f64> = shifted.iter().map(|&x| standardize(x, -3.0, 0.5).unwrap()).collect();
    let standard = GcParams::standard(4).unwrap().sample_n(n, 6).unwrap();
    assert!(ks_statistic(&z, &standard) < ks_critical_1pct(n, n));
}

#[test]
fn tails_are_symmetric() {
    let n = 2_000_000;
    let xs = GcParams::standard(3).unwrap().sample_n(n, 17).unwrap();
    let up = xs.iter().filter(|&&x| x > 2.0).count() as f64 / n as f64;
    let down = xs.iter().filter(|&&x| x < -2.0).count() as f64 / n as f64;
    let se = (2.0 * up.max(down) / n as f64).sqrt();
    assert!((up - down).abs() < 4.0 * se, "up {up} down {down}");
}

#[test]
fn first_order_tail_is_normal() {
    let exact = 200.0 * (1.0 - Normal::new(0.0, 1.0).unwrap().cdf(2.0));
    assert!((exact - 4.550).abs() < 1e-3);
    let est = tail_prob(1, 2.0, 2_000_000, 3).unwrap();
    let se = 100.0 * (exact / 100.0 * (1.0 - exact / 100.0) / 2e6).sqrt();
    assert!((est - exact).abs() < 4.0 * se, "{est} vs {exact}");
}

#[test]
fn second_order_density_matches_quadrature() {
    let params = GcParams::standard(2).unwrap();
    for x in [0.5, 1.0, 2.0] {
        let exact = gc2_density_quadrature(x);
        let mc = density_mc(&params, x, 2_000_000, 9).unwrap();
        assert!((mc - exact).abs() / exact < 0.01, "x={x}: {mc} vs {exact}");
    }
}

#[test]
fn second_order_density_is_infinite_at_origin() {
    // 2∫_δ φ(0; 0, v) φ(v) dv grows like ln(1/δ)/π as δ → 0.
    let f = |v: f64| gaussian_pdf(0.0, v) * gaussian_pdf(v, 1.0);
    let truncated: Vec<f64> = [1e-2, 1e-4, 1e-6].iter().map(|&d| 2.0 * integrate(&f, d, 12.0, 1e-12)).collect();
    let step = 100f64.ln() / std::f64::consts::PI;
    for w in truncated.windows(2) {
        assert!((w[1] - w[0] - step).abs() < 1e-3 * step, "{truncated:?}");
    }
}

#[test]
fn density_integrates_to_one() {
    // Log-spaced grid so narrow latent scales are resolved near the origin.
    let k = 6000;
    let (lo, hi) = (1e-10f64, 60.0f64);
    let xs: Vec<f64> = (0..=k).map(|i| lo * (hi / lo).powf(i as f64 / k as f64)).collect();
    for q in [2, 3] {
        let f = density_mc_grid(&GcParams::standard(q).unwrap(), &xs, 200_000, 21).unwrap();
        let half: f64 = xs.windows(2).zip(f.windows(2)).map(|(x, y)| 0.5 * (y[0] + y[1]) * (x[1] - x[0])).sum();
        assert!((2.0 * half - 1.0).abs() < 2e-3, "q={q}: mass {}", 2.0 * half);
    }
}

#[test]
fn table_cells_reduced_run() {
    // (q, x, reference) at 500k samples, tolerance max(3 SE, 10%).
    let cells = [(1, 2.0, 4.5430), (2, 3.0, 1.9751), (5, 3.0, 1.7593), (10, 2.0, 0.9068)];
    for (q, x, want) in cells {
        let t = tail_table(&[q], &[x], 500_000, 42).unwrap();
        let got = t.cells[0][0];
        let tol = (3.0 * t.standard_error(0, 0)).max(0.10 * want);
        assert!((got - want).abs() <= tol, "q={q} x={x}: {got} vs {want}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tail_decreases_in_threshold(q in 1u32..8, seed in any::<u64>()) {
        let t = tail_table(&[q], &[0.5, 1.0, 2.0, 3.0, 5.0], 20_000, seed).unwrap();
        for w in t.cells[0].windows(2) {
            prop_assert!(w[1] <= w[0]);
        }
    }

    #[test]
    fn standardize_inverts_affine_map(z in -50.0f64..50.0, m in -1e3f64..1e3, sigma in 1e-3f64..1e3) {
        let x = m + sigma * z;
        prop_assert!((standardize(x, m, sigma).unwrap() - z).abs() < 1e-6 * (1.0 + z.abs()) + 1e-9 * m.abs() / sigma);
    }

    #[test]
    fn moments_scale_with_sigma(q in 1u32..12, m in -10.0f64..10.0, sigma in 0.01f64..100.0) {
        let g = analytic_moments(&GcParams::new(q, m, sigma).unwrap()).unwrap();
        prop_assert_eq!(g.mean, m);
        prop_assert!((g.variance - sigma * sigma).abs() <= 1e-12 * sigma * sigma);
        prop_assert_eq!(g.third_central, 0.0);
        let want = 3f64.powi(q as i32) * sigma.powi(4);
        prop_assert!((g.fourth_central - want).abs() <= 1e-12 * want);
    }
}
