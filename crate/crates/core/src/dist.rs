//! The Gaussian-Chain distribution.
//!
//! A q'th-order Gaussian-Chain `ε(q; m, σ)` is a Gaussian whose standard
//! deviation is itself the absolute value of a Gaussian, recursively `q - 1`
//! times, starting from `σ`. Unrolling the recursion gives the product form
//!
//! ```text
//! ε = m + σ · z₁ · |z₂| · … · |z_q|,   z_j i.i.d. N(0, 1)
//! ```
//!
//! which is what [`GcParams::sample`] draws. The variance stays `σ²` for every
//! order while the fourth central moment grows as `3^q σ⁴`.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::{shard_stream, shards};

/// Sample count used for full tail tables.
pub const TABLE_SAMPLES: u64 = 7_500_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GcParams {
    pub q: u32,
    pub m: f64,
    pub sigma: f64,
}

impl GcParams {
    pub fn new(q: u32, m: f64, sigma: f64) -> Result<Self> {
        let params = GcParams { q, m, sigma };
        params.validate()?;
        Ok(params)
    }

    /// `ε(q; 0, 1)`.
    pub fn standard(q: u32) -> Result<Self> {
        Self::new(q, 0.0, 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q < 1 {
            return Err(Error::domain(format!("order q must be >= 1, got {}", self.q)));
        }
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::domain(format!("sigma must be > 0, got {}", self.sigma)));
        }
        if !self.m.is_finite() {
            return Err(Error::domain("location m must be finite"));
        }
        Ok(())
    }

    /// Draws the latent scale `|σ^(q)| = σ ∏_{j=2..q} |z_j|`.
    pub fn sample_scale<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let mut scale = self.sigma;
        for _ in 1..self.q {
            let z: f64 = rng.sample(StandardNormal);
            scale *= z.abs();
        }
        scale
    }

    /// One draw of `ε(q; m, σ)` in product form.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let z: f64 = rng.sample(StandardNormal);
        let scale = self.sample_scale(rng);
        self.m + scale * z
    }

    /// `n` draws from a single seeded stream.
    pub fn sample_n(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        self.validate()?;
        let mut rng = crate::rng::seeded(seed);
        Ok((0..n).map(|_| self.sample(&mut rng)).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GcMoments {
    pub mean: f64,
    pub variance: f64,
    pub third_central: f64,
    pub fourth_central: f64,
    pub excess_kurtosis: f64,
}

/// Exact moments: mean `m`, variance `σ²`, zero skew, fourth central moment
/// `3^q σ⁴`, hence excess kurtosis `3^q - 3`.
pub fn analytic_moments(params: &GcParams) -> Result<GcMoments> {
    params.validate()?;
    let pow3 = 3f64.powi(params.q as i32);
    let variance = params.sigma * params.sigma;
    let fourth_central = pow3 * variance * variance;
    Ok(GcMoments {
        mean: params.m,
        variance,
        third_central: 0.0,
        fourth_central,
        excess_kurtosis: fourth_central / (variance * variance) - 3.0,
    })
}

/// `(x - m) / σ`, mapping `ε(q; m, σ)` onto `ε(q; 0, 1)`.
pub fn standardize(x: f64, m: f64, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) {
        return Err(Error::domain(format!("sigma must be > 0, got {sigma}")));
    }
    Ok((x - m) / sigma)
}

pub fn normal_pdf(x: f64, mean: f64, sd: f64) -> f64 {
    let z = (x - mean) / sd;
    (-0.5 * z * z).exp() / (sd * (2.0 * PI).sqrt())
}

/// Counts `|ε| > x` for each threshold over `n` standard samples.
fn tail_counts(q: u32, thresholds: &[f64], n: u64, seed: u64) -> Vec<u64> {
    let params = GcParams { q, m: 0.0, sigma: 1.0 };
    let per_shard: Vec<Vec<u64>> = shards(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, len)| {
            let mut rng = shard_stream(seed, k);
            let mut counts = vec![0u64; thresholds.len()];
            for _ in 0..len {
                let e = params.sample(&mut rng).abs();
                for (c, &x) in counts.iter_mut().zip(thresholds) {
                    if e > x {
                        *c += 1;
                    }
                }
            }
            counts
        })
        .collect();
    let mut total = vec![0u64; thresholds.len()];
    for counts in per_shard {
        for (t, c) in total.iter_mut().zip(counts) {
            *t += c;
        }
    }
    total
}

fn validate_tail_args(q: u32, n: u64) -> Result<()> {
    if q < 1 {
        return Err(Error::domain(format!("order q must be >= 1, got {q}")));
    }
    if n < 1 {
        return Err(Error::domain("sample count must be >= 1"));
    }
    Ok(())
}

/// Monte-Carlo estimate of the two-sided tail `2F(x) = P(|ε| > x)` for the
/// standard chain of order `q`, in percent.
pub fn tail_prob(q: u32, x: f64, n_samples: u64, seed: u64) -> Result<f64> {
    validate_tail_args(q, n_samples)?;
    if !(x > 0.0) {
        return Err(Error::domain(format!("threshold must be > 0, got {x}")));
    }
    let count = tail_counts(q, &[x], n_samples, seed)[0];
    Ok(100.0 * count as f64 / n_samples as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TailTable {
    pub orders: Vec<u32>,
    pub thresholds: Vec<f64>,
    /// `cells[i][j]`: `2F(thresholds[j])` in percent for `orders[i]`.
    pub cells: Vec<Vec<f64>>,
    pub sample_count: u64,
}

impl TailTable {
    /// Cell as displayed: the `x = 1` column holds the
    /// central mass `1 - 2F(1)`, every other column holds `2F(x)`.
    pub fn display_cell(&self, row: usize, col: usize) -> f64 {
        let v = self.cells[row][col];
        if self.thresholds[col] == 1.0 {
            100.0 - v
        } else {
            v
        }
    }

    /// Binomial standard error of a cell, in percent.
    pub fn standard_error(&self, row: usize, col: usize) -> f64 {
        binomial_se_percent(self.cells[row][col], self.sample_count)
    }
}

/// Standard error in percent of a proportion `p_percent` estimated from `n` draws.
pub fn binomial_se_percent(p_percent: f64, n: u64) -> f64 {
    let p = p_percent / 100.0;
    100.0 * (p * (1.0 - p) / n as f64).sqrt()
}

/// Tail probabilities for every `(order, threshold)` pair. Each order uses
/// its own sample set, shared across thresholds; order `q` is seeded with
/// `seed + q` so rows do not depend on which other orders were requested.
pub fn tail_table(orders: &[u32], thresholds: &[f64], n_samples: u64, seed: u64) -> Result<TailTable> {
    if orders.is_empty() || thresholds.is_empty() {
        return Err(Error::domain("orders and thresholds must be non-empty"));
    }
    if let Some(x) = thresholds.iter().find(|x| !(**x > 0.0)) {
        return Err(Error::domain(format!("threshold must be > 0, got {x}")));
    }
    let mut cells = Vec::with_capacity(orders.len());
    for &q in orders {
        validate_tail_args(q, n_samples)?;
        let counts = tail_counts(q, thresholds, n_samples, seed.wrapping_add(q as u64));
        cells.push(counts.iter().map(|&c| 100.0 * c as f64 / n_samples as f64).collect());
    }
    Ok(TailTable {
        orders: orders.to_vec(),
        thresholds: thresholds.to_vec(),
        cells,
        sample_count: n_samples,
    })
}

/// Monte-Carlo estimate of the density at every point of `xs`, sharing the
/// chain draws across points.
///
/// Each draw samples the latent scale `|σ^(q)|` and contributes the
/// conditional Gaussian density at `x`. For `q = 1` there is no chain and the
/// exact normal density is returned. For `q >= 2` the density is unbounded
/// at `x = m` and the estimator has no finite mean there.
pub fn density_mc_grid(params: &GcParams, xs: &[f64], n_samples: u64, seed: u64) -> Result<Vec<f64>> {
    params.validate()?;
    if params.q == 1 {
        return Ok(xs.iter().map(|&x| normal_pdf(x, params.m, params.sigma)).collect());
    }
    if n_samples < 1 {
        return Err(Error::domain("sample count must be >= 1"));
    }
    let per_shard: Vec<Vec<f64>> = shards(n_samples)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, len)| {
            let mut rng = shard_stream(seed, k);
            let mut sums = vec![0.0; xs.len()];
            for _ in 0..len {
                let scale = params.sample_scale(&mut rng);
                for (s, &x) in sums.iter_mut().zip(xs) {
                    *s += normal_pdf(x, params.m, scale);
                }
            }
            sums
        })
        .collect();
    let mut total = vec![0.0; xs.len()];
    for sums in per_shard {
        for (t, s) in total.iter_mut().zip(sums) {
            *t += s;
        }
    }
    Ok(total.into_iter().map(|s| s / n_samples as f64).collect())
}

pub fn density_mc(params: &GcParams, x: f64, n_samples: u64, seed: u64) -> Result<f64> {
    Ok(density_mc_grid(params, &[x], n_samples, seed)?[0])
}
