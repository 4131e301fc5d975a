//! Independent oracles for the integration suites. Nothing here calls into
//! the code paths it is used to check.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::SeedableRng;
use rand_distr::{Distribution, Normal};

/// Literal recursive chain: `σ⁽¹⁾ = σ`, `σ⁽ʲ⁾ ~ N(0, |σ⁽ʲ⁻¹⁾|)`, result `~ N(m, |σ⁽q⁾|)`.
pub fn nested_sample(q: u32, m: f64, sigma: f64, rng: &mut StdRng) -> f64 {
    let mut scale = sigma;
    for _ in 2..=q {
        scale = Normal::new(0.0, scale.abs()).unwrap().sample(rng);
    }
    Normal::new(m, scale.abs()).unwrap().sample(rng)
}

pub fn nested_samples(q: u32, m: f64, sigma: f64, n: usize, seed: u64) -> Vec<f64> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n).map(|_| nested_sample(q, m, sigma, &mut rng)).collect()
}

/// Two-sample Kolmogorov–Smirnov statistic.
pub fn ks_statistic(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (n, m) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    d
}

/// Asymptotic 1% critical value of the two-sample KS statistic.
pub fn ks_critical_1pct(n: usize, m: usize) -> f64 {
    1.628 * ((n + m) as f64 / (n as f64 * m as f64)).sqrt()
}

/// Adaptive Simpson quadrature.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64, m: f64, fm: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) + recurse(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, m, fm, whole, tol, 50)
}

pub fn gaussian_pdf(x: f64, sd: f64) -> f64 {
    (-0.5 * (x / sd).powi(2)).exp() / (sd * (2.0 * std::f64::consts::PI).sqrt())
}

/// Density of the 2nd-order chain `ε(2; 0, 1)` at `x != 0` by quadrature
/// over the latent scale: `2 ∫₀^∞ φ(x; 0, v) φ(v; 0, 1) dv`.
pub fn gc2_density_quadrature(x: f64) -> f64 {
    let f = |v: f64| if v <= 0.0 { 0.0 } else { gaussian_pdf(x, v) * gaussian_pdf(v, 1.0) };
    2.0 * integrate(&f, 0.0, 12.0, 1e-13)
}

/// Nonnegative root of `t³ + 3s t² + 2s² t - s² e² = 0` by plain bisection.
pub fn cubic_root_bisection(sigma2: f64, residual: f64) -> f64 {
    let s = sigma2;
    let k = s * s * residual * residual;
    let g = |t: f64| ((t + 3.0 * s) * t + 2.0 * s * s) * t - k;
    let mut hi = 1.0f64;
    while g(hi) < 0.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0f64;
    if k == 0.0 {
        return 0.0;
    }
    for _ in 0..5000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}
