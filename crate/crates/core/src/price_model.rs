//! Big-buyer / big-seller price model.
//!
//! The state is the log-ratio of the price to its `n`-bar moving average.
//! Big buyers act only when the price sits below its average and big sellers
//! only when it sits above, so the two excess demands are never both nonzero.

use crate::dist::GcParams;
use crate::error::{Error, Result};
use crate::filter::Observation;
use crate::rng::seeded;

pub const DEFAULT_WINDOW: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelConfig {
    /// Moving-average window in bars. Also the number of warmup bars.
    pub n: usize,
    pub sigma: f64,
    pub q: u32,
    pub p0: f64,
}

impl ModelConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::domain("moving-average window n must be >= 1"));
        }
        if !(self.p0 > 0.0 && self.p0.is_finite()) {
            return Err(Error::domain(format!("initial price must be > 0, got {}", self.p0)));
        }
        GcParams { q: self.q, m: 0.0, sigma: self.sigma }.validate()
    }

    pub fn warmup(&self) -> usize {
        self.n
    }
}

/// Buyer strength `a1(t)` (>= 0) and seller strength `a2(t)` (<= 0) per bar.
#[derive(Debug, Clone, PartialEq)]
pub struct StrengthPath {
    pub a1: Vec<f64>,
    pub a2: Vec<f64>,
}

impl StrengthPath {
    /// Piecewise-constant path of `len` bars. Each segment `(t_start, a1, a2)`
    /// holds from `t_start` until the next segment starts; bars before the
    /// first segment get zero strength.
    pub fn from_segments(segments: &[(usize, f64, f64)], len: usize) -> Result<Self> {
        if segments.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::domain("segment start times must be strictly increasing"));
        }
        let mut a1 = vec![0.0; len];
        let mut a2 = vec![0.0; len];
        for (k, &(start, s1, s2)) in segments.iter().enumerate() {
            let end = segments.get(k + 1).map_or(len, |s| s.0.min(len));
            for t in start.min(len)..end {
                a1[t] = s1;
                a2[t] = s2;
            }
        }
        Ok(StrengthPath { a1, a2 })
    }

    pub fn len(&self) -> usize {
        self.a1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a1.is_empty()
    }

    pub fn mood(&self, t: usize) -> f64 {
        self.a1[t] + self.a2[t]
    }
}

/// `ln(p_t / mean(window))` for the trailing window ending at `p_t`.
pub fn log_ratio(window: &[f64]) -> Result<f64> {
    if window.is_empty() {
        return Err(Error::domain("empty price window"));
    }
    if let Some(p) = window.iter().find(|p| !(**p > 0.0)) {
        return Err(Error::domain(format!("nonpositive price {p} in window")));
    }
    let mean = window.iter().sum::<f64>() / window.len() as f64;
    Ok((window[window.len() - 1] / mean).ln())
}

/// `(ed1, ed2)`: buyer demand `|x|` when `x < 0`, seller demand `|x|` when `x > 0`.
pub fn excess_demands(x: f64) -> [f64; 2] {
    if x < 0.0 {
        [-x, 0.0]
    } else if x > 0.0 {
        [0.0, x]
    } else {
        [0.0, 0.0]
    }
}

/// Filter inputs recovered from a price path. Entry `k` belongs to bar
/// `bar = n + k` and carries `x_{bar-1}` and the observation
/// `(r_bar, ed(x_{bar-1}))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelInputs {
    pub bars: Vec<usize>,
    pub x_prev: Vec<f64>,
    pub observations: Vec<Observation>,
}

pub fn model_inputs(prices: &[f64], n: usize) -> Result<ModelInputs> {
    if n < 1 {
        return Err(Error::domain("moving-average window n must be >= 1"));
    }
    let mut inputs = ModelInputs { bars: Vec::new(), x_prev: Vec::new(), observations: Vec::new() };
    for t in n..prices.len() {
        let x = log_ratio(&prices[t - n..t])?;
        if !(prices[t] > 0.0) {
            return Err(Error::domain(format!("nonpositive price {} at bar {t}", prices[t])));
        }
        let r = (prices[t] / prices[t - 1]).ln();
        inputs.bars.push(t);
        inputs.x_prev.push(x);
        inputs.observations.push(Observation::new(r, excess_demands(x).to_vec()));
    }
    Ok(inputs)
}

/// A simulated path. Bars `0..n` are warmup: price frozen at `p0`, no
/// state, zero return, and `x_prev` is `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulatedPrices {
    pub config: ModelConfig,
    pub prices: Vec<f64>,
    pub x_prev: Vec<Option<f64>>,
    pub ed: Vec<[f64; 2]>,
    pub returns: Vec<f64>,
    /// `a1 ed1 + a2 ed2` per bar.
    pub signal: Vec<f64>,
    /// `σ ε_t` per bar.
    pub noise: Vec<f64>,
}

impl SimulatedPrices {
    pub fn len(&self) -> usize {
        self.prices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prices.is_empty()
    }

    /// Realised signal-to-noise ratio over the post-warmup bars.
    pub fn snr(&self) -> Result<f64> {
        let n = self.config.n.min(self.len());
        snr(&self.signal[n..], &self.noise[n..])
    }

    /// Filter observations for the post-warmup bars.
    pub fn observations(&self) -> Vec<Observation> {
        (self.config.n..self.len())
            .map(|t| Observation::new(self.returns[t], self.ed[t].to_vec()))
            .collect()
    }
}

/// Generates `r_t = a1(t) ed1(x_{t-1}) + a2(t) ed2(x_{t-1}) + σ ε_t` with
/// i.i.d. standard chain noise of order `q`, and `p_t = p_{t-1} e^{r_t}`.
pub fn simulate_prices(config: &ModelConfig, path: &StrengthPath, seed: u64) -> Result<SimulatedPrices> {
    config.validate()?;
    if path.a1.len() != path.a2.len() {
        return Err(Error::domain("strength sequences differ in length"));
    }
    let len = path.len();
    let n = config.n;
    let noise_dist = GcParams { q: config.q, m: 0.0, sigma: config.sigma };
    let mut rng = seeded(seed);

    let mut sim = SimulatedPrices {
        config: *config,
        prices: Vec::with_capacity(len),
        x_prev: Vec::with_capacity(len),
        ed: Vec::with_capacity(len),
        returns: Vec::with_capacity(len),
        signal: Vec::with_capacity(len),
        noise: Vec::with_capacity(len),
    };
    for t in 0..len {
        if t < n {
            sim.prices.push(config.p0);
            sim.x_prev.push(None);
            sim.ed.push([0.0, 0.0]);
            sim.returns.push(0.0);
            sim.signal.push(0.0);
            sim.noise.push(0.0);
            continue;
        }
        let x = log_ratio(&sim.prices[t - n..t])?;
        let ed = excess_demands(x);
        let signal = path.a1[t] * ed[0] + path.a2[t] * ed[1];
        let noise = noise_dist.sample(&mut rng);
        let r = signal + noise;
        let p = sim.prices[t - 1] * r.exp();
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::domain(format!("price path diverged at bar {t} (strengths too large for window n = {n})")));
        }
        sim.prices.push(p);
        sim.x_prev.push(Some(x));
        sim.ed.push(ed);
        sim.returns.push(r);
        sim.signal.push(signal);
        sim.noise.push(noise);
    }
    Ok(sim)
}

/// `RMS(signal) / RMS(noise)`.
pub fn snr(signal: &[f64], noise: &[f64]) -> Result<f64> {
    if signal.len() != noise.len() {
        return Err(Error::domain("signal and noise differ in length"));
    }
    let noise_power: f64 = noise.iter().map(|v| v * v).sum();
    if !(noise_power > 0.0) {
        return Err(Error::domain("noise power is zero"));
    }
    let signal_power: f64 = signal.iter().map(|v| v * v).sum();
    Ok((signal_power / noise_power).sqrt())
}
