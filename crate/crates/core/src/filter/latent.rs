//! Per-step latent scales of the GC filters.
//!
//! Both solvers work in the scale-free ratio `k = residual² / σ̂²`, so the
//! result is accurate across many orders of magnitude of `σ̂²` and `residual`.

/// Nonnegative root `v²` of `v⁴/σ̂² + v² - residual² = 0`.
///
/// Evaluated as `2σ̂²k / (√(1 + 4k) + 1)`, the rationalised form of
/// `(√(σ̂⁴ + 4σ̂²·residual²) - σ̂²) / 2`, which avoids cancellation for small
/// residuals.
pub fn gc2_latent_scale(sigma2_hat: f64, residual: f64) -> f64 {
    debug_assert!(sigma2_hat > 0.0);
    let k = residual * residual / sigma2_hat;
    sigma2_hat * 2.0 * k / ((1.0 + 4.0 * k).sqrt() + 1.0)
}

/// `(u², v²)` for the 3rd-order filter.
///
/// `u²` is the nonnegative root of
/// `(u²)³ + 3σ̂²(u²)² + 2σ̂⁴u² - σ̂⁴·residual² = 0` and
/// `v² = u²(u² + σ̂²)/σ̂²`.
pub fn gc3_latent_scales(sigma2_hat: f64, residual: f64) -> (f64, f64) {
    debug_assert!(sigma2_hat > 0.0);
    let k = residual * residual / sigma2_hat;
    let w = monotone_cubic_root(k);
    let u2 = sigma2_hat * w;
    let v2 = sigma2_hat * w * (w + 1.0);
    (u2, v2)
}

/// Nonnegative root of `g(w) = w³ + 3w² + 2w - k`, `k >= 0`.
///
/// `g` is increasing and convex on `w >= 0` with `g(0) = -k`, so the root is
/// unique. Newton started at an upper bound decreases monotonically onto it;
/// the bracket `[lo, hi]` is kept and bisection takes over if a Newton step
/// ever leaves it.
pub(crate) fn monotone_cubic_root(k: f64) -> f64 {
    if !(k > 0.0) {
        return 0.0;
    }
    if !k.is_finite() {
        return f64::INFINITY;
    }
    let g = |w: f64| w * (w * (w + 3.0) + 2.0) - k;
    let dg = |w: f64| w * (3.0 * w + 6.0) + 2.0;

    // g(k/2) >= 0 and g(k^(1/3)) >= 0.
    let mut hi = (0.5 * k).min(k.cbrt());
    let mut lo = 0.0;
    let mut w = hi;
    for _ in 0..200 {
        let gw = g(w);
        if gw == 0.0 {
            return w;
        }
        if gw > 0.0 {
            hi = w;
        } else {
            lo = w;
        }
        let mut next = w - gw / dg(w);
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - w).abs() <= 4.0 * f64::EPSILON * w || hi - lo <= 4.0 * f64::EPSILON * hi {
            return next;
        }
        w = next;
    }
    w
}
