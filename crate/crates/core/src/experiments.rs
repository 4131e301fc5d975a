//! Simulation experiments shared by the CLI, the examples and the test suites.

use std::f64::consts::PI;

use crate::dist::GcParams;
use crate::error::{Error, Result};
use crate::filter::{run_filter, FilterConfig, FilterKind, Observation};
use crate::price_model::{SimulatedPrices, StrengthPath};
use crate::rng::seeded;

/// Steps at the start of a tracking run that are excluded from the
/// jump statistic (the first update jumps straight to the first return
/// under every filter).
pub const TRACKING_BURN_IN: usize = 50;

/// Time-varying coefficient `20 (1 + sin(8πt / T))`: four periods over the run.
pub fn tracking_truth(t: usize, len: usize) -> f64 {
    20.0 * (1.0 + (8.0 * PI * t as f64 / len as f64).sin())
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrackingRun {
    pub kind: FilterKind,
    /// `r_t` for `t = 1..=T`.
    pub returns: Vec<f64>,
    pub truth: Vec<f64>,
    pub estimates: Vec<f64>,
}

impl TrackingRun {
    pub fn rmse(&self) -> f64 {
        let sse: f64 = self.truth.iter().zip(&self.estimates).map(|(a, e)| (a - e).powi(2)).sum();
        (sse / self.truth.len() as f64).sqrt()
    }

    /// Largest `|â_t - â_{t-1}|` over steps after `burn_in`.
    pub fn max_jump(&self, burn_in: usize) -> f64 {
        self.estimates
            .windows(2)
            .skip(burn_in)
            .map(|w| (w[1] - w[0]).abs())
            .fold(0.0, f64::max)
    }
}

/// Scalar tracking run: `r_t = a(t) + σ ε_t` with `ed ≡ 1` and chain noise of
/// order `q`. The noise sequence depends only on `(q, σ, T, seed)`, so
/// different filters given the same seed see the same data.
pub fn track_sim(kind: FilterKind, q: u32, sigma: f64, len: usize, lambda: f64, seed: u64) -> Result<TrackingRun> {
    if len < 2 {
        return Err(Error::domain("tracking run needs T >= 2"));
    }
    let noise = GcParams::new(q, 0.0, sigma)?;
    let config = FilterConfig::new(kind, lambda, 1)?;
    let mut rng = seeded(seed);
    let truth: Vec<f64> = (1..=len).map(|t| tracking_truth(t, len)).collect();
    let returns: Vec<f64> = truth.iter().map(|a| a + noise.sample(&mut rng)).collect();
    let observations: Vec<Observation> = returns.iter().map(|&r| Observation::new(r, vec![1.0])).collect();
    let estimates = run_filter(&config, &observations)?.into_iter().map(|s| s.a_hat[0]).collect();
    Ok(TrackingRun { kind, returns, truth, estimates })
}

/// Fraction of post-warmup bars, skipping the first `burn_in` bars of every
/// constant-strength regime, on which `sign(â₁ + â₂)` equals `sign(a₁ + a₂)`.
pub fn mood_sign_agreement(sim: &SimulatedPrices, path: &StrengthPath, config: &FilterConfig, burn_in: usize) -> Result<f64> {
    let n = sim.config.n;
    let states = run_filter(config, &sim.observations())?;
    let mut regime_start = 0;
    let (mut hits, mut total) = (0usize, 0usize);
    for (k, state) in states.iter().enumerate() {
        let t = n + k;
        if t > 0 && (path.a1[t] != path.a1[t - 1] || path.a2[t] != path.a2[t - 1]) {
            regime_start = t;
        }
        let true_mood = path.mood(t);
        if t < regime_start + burn_in || true_mood == 0.0 {
            continue;
        }
        let est = state.a_hat[0] + state.a_hat[1];
        total += 1;
        if est.signum() == true_mood.signum() {
            hits += 1;
        }
    }
    if total == 0 {
        return Err(Error::domain("no bars left after burn-in"));
    }
    Ok(hits as f64 / total as f64)
}
