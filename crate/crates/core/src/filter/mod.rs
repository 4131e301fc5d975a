//! Recursive estimators for `r_t = aᵀ ed(x_{t-1}) + σ ε_t`.
//!
//! The GC filters maximise a forgetting-weighted likelihood in which the
//! per-step latent scales of the chain noise are profiled out. Each step
//! solves for the latent scale(s) from the current residual, then updates
//! the coefficient estimates with weights that shrink as the residual grows.
//! That is what makes the filters robust to heavy-tailed noise; the RLS
//! baseline gives every observation the same weight.
//!
//! All estimators assume the regressors are orthogonal (`ed_i ed_j = 0` for
//! `i != j`) and update each coefficient separately.

mod latent;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use latent::{gc2_latent_scale, gc3_latent_scales};

/// Default forgetting factor. The GC weights make the effective memory much
/// longer than `1 / (1 - λ)`, so this sits lower than a typical RLS choice.
pub const DEFAULT_LAMBDA: f64 = 0.8;
pub const DEFAULT_V_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterKind {
    Gc2,
    Gc3,
    Rls,
}

impl FromStr for FilterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gc2" => Ok(FilterKind::Gc2),
            "gc3" => Ok(FilterKind::Gc3),
            "rls" => Ok(FilterKind::Rls),
            other => Err(Error::domain(format!("unknown filter '{other}' (expected gc2, gc3 or rls)"))),
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterKind::Gc2 => "gc2",
            FilterKind::Gc3 => "gc3",
            FilterKind::Rls => "rls",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterConfig {
    pub kind: FilterKind,
    /// Forgetting factor in `(0, 1)`.
    pub lambda: f64,
    /// Number of excess-demand components.
    pub dim: usize,
    /// `v²` is floored at `v_floor · σ̂²` before it divides anything.
    pub v_floor: f64,
}

impl FilterConfig {
    pub fn new(kind: FilterKind, lambda: f64, dim: usize) -> Result<Self> {
        let config = FilterConfig { kind, lambda, dim, v_floor: DEFAULT_V_FLOOR };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0 && self.lambda < 1.0) {
            return Err(Error::domain(format!("lambda must be in (0, 1), got {}", self.lambda)));
        }
        if self.dim < 1 {
            return Err(Error::domain("filter dimension must be >= 1"));
        }
        if !(self.v_floor >= 0.0) {
            return Err(Error::domain(format!("v_floor must be >= 0, got {}", self.v_floor)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FilterState {
    /// Coefficient estimates `â_t`.
    pub a_hat: Vec<f64>,
    /// Per-coefficient information accumulators `b_t` (the `P_t` of RLS).
    pub b: Vec<f64>,
    /// Forgetting accumulator, `c_t = 1 + λ c_{t-1}`.
    pub c: f64,
    /// Noise scale estimate `σ̂_t²`.
    pub sigma2_hat: f64,
    pub t: u64,
    /// Latent scale `v_t²` returned by the solver, before flooring.
    pub last_v2: f64,
    /// Latent scale `u_t²` (3rd-order filter only).
    pub last_u2: f64,
}

impl FilterState {
    /// `â = b = c = 0`, `σ̂² = 1`.
    pub fn initial(dim: usize) -> Self {
        FilterState {
            a_hat: vec![0.0; dim],
            b: vec![0.0; dim],
            c: 0.0,
            sigma2_hat: 1.0,
            t: 0,
            last_v2: 0.0,
            last_u2: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    /// Return `r_t`.
    pub r: f64,
    /// Excess demands `ed(x_{t-1})`.
    pub ed: Vec<f64>,
}

impl Observation {
    pub fn new(r: f64, ed: Vec<f64>) -> Self {
        Observation { r, ed }
    }
}

fn check(state: &FilterState, obs: &Observation, config: &FilterConfig, kind: FilterKind) -> Result<()> {
    if config.kind != kind {
        return Err(Error::domain(format!("{kind} step called with a {} config", config.kind)));
    }
    if state.a_hat.len() != config.dim || state.b.len() != config.dim {
        return Err(Error::domain(format!(
            "state dimension {} does not match config dimension {}",
            state.a_hat.len(),
            config.dim
        )));
    }
    if obs.ed.len() != config.dim {
        return Err(Error::domain(format!(
            "observation has {} excess demands, filter expects {}",
            obs.ed.len(),
            config.dim
        )));
    }
    Ok(())
}

fn residual(state: &FilterState, obs: &Observation) -> f64 {
    obs.r - state.a_hat.iter().zip(&obs.ed).map(|(a, e)| a * e).sum::<f64>()
}

fn floored(v2: f64, sigma2_prev: f64, v_floor: f64) -> f64 {
    if v_floor > 0.0 {
        v2.max(v_floor * sigma2_prev).max(f64::MIN_POSITIVE)
    } else {
        v2
    }
}

/// Coefficient and scale update shared by both GC filters, given the
/// (floored) latent scale `v2` and the quantity `scale_input` that drives the
/// `σ̂²` recursion (`v²` for GC2, `u²` for GC3).
pub(crate) fn ml_update(state: &FilterState, obs: &Observation, lambda: f64, v2: f64, scale_input: f64) -> FilterState {
    let mut next = state.clone();
    for i in 0..state.a_hat.len() {
        let ed = obs.ed[i];
        let prior = lambda * v2 * state.b[i];
        let denom = prior + ed * ed;
        if ed != 0.0 && denom > 0.0 {
            next.a_hat[i] = (prior * state.a_hat[i] + obs.r * ed) / denom;
            next.b[i] = lambda * state.b[i] + ed * ed / v2;
        } else {
            next.b[i] = lambda * state.b[i];
        }
    }
    let lc = lambda * state.c;
    next.sigma2_hat = (lc * state.sigma2_hat + scale_input) / (1.0 + lc);
    next.c = 1.0 + lc;
    next.t = state.t + 1;
    next
}

/// One step of the 2nd-order GC filter.
pub fn gc2_step(state: &FilterState, obs: &Observation, config: &FilterConfig) -> Result<FilterState> {
    check(state, obs, config, FilterKind::Gc2)?;
    let e = residual(state, obs);
    let v2 = gc2_latent_scale(state.sigma2_hat, e);
    let v2_used = floored(v2, state.sigma2_hat, config.v_floor);
    let mut next = ml_update(state, obs, config.lambda, v2_used, v2_used);
    next.last_v2 = v2;
    next.last_u2 = 0.0;
    Ok(next)
}

/// One step of the 3rd-order GC filter. Same coefficient update as GC2; the
/// latent scales come from the cubic and `σ̂²` tracks `u²`.
pub fn gc3_step(state: &FilterState, obs: &Observation, config: &FilterConfig) -> Result<FilterState> {
    check(state, obs, config, FilterKind::Gc3)?;
    let e = residual(state, obs);
    let (u2, v2) = gc3_latent_scales(state.sigma2_hat, e);
    let v2_used = floored(v2, state.sigma2_hat, config.v_floor);
    let mut next = ml_update(state, obs, config.lambda, v2_used, u2);
    next.last_v2 = v2;
    next.last_u2 = u2;
    Ok(next)
}

/// Exponentially weighted least squares, one coefficient at a time:
/// `P_i ← λP_i + ed_i²`, `â_i ← â_i + (ed_i / P_i)·residual`.
///
/// `σ̂²` tracks the forgetting-weighted mean squared residual; it does not
/// feed back into the gain.
pub fn rls_step(state: &FilterState, obs: &Observation, config: &FilterConfig) -> Result<FilterState> {
    check(state, obs, config, FilterKind::Rls)?;
    let lambda = config.lambda;
    let e = residual(state, obs);
    let mut next = state.clone();
    for i in 0..state.a_hat.len() {
        let ed = obs.ed[i];
        let p = lambda * state.b[i] + ed * ed;
        next.b[i] = p;
        if p > 0.0 {
            next.a_hat[i] = state.a_hat[i] + ed / p * e;
        }
    }
    let lc = lambda * state.c;
    next.sigma2_hat = (lc * state.sigma2_hat + e * e) / (1.0 + lc);
    next.c = 1.0 + lc;
    next.t = state.t + 1;
    next.last_v2 = 1.0;
    next.last_u2 = 0.0;
    Ok(next)
}

/// Dispatches on `config.kind`.
pub fn step(state: &FilterState, obs: &Observation, config: &FilterConfig) -> Result<FilterState> {
    match config.kind {
        FilterKind::Gc2 => gc2_step(state, obs, config),
        FilterKind::Gc3 => gc3_step(state, obs, config),
        FilterKind::Rls => rls_step(state, obs, config),
    }
}

/// Runs the configured filter from the initial state over every observation
/// and returns the state after each step.
pub fn run_filter(config: &FilterConfig, observations: &[Observation]) -> Result<Vec<FilterState>> {
    config.validate()?;
    if observations.is_empty() {
        return Err(Error::domain("no observations to filter"));
    }
    for (t, obs) in observations.iter().enumerate() {
        if obs.ed.len() != config.dim {
            return Err(Error::domain(format!(
                "observation {t} has {} excess demands, filter expects {}",
                obs.ed.len(),
                config.dim
            )));
        }
        if !obs.r.is_finite() || obs.ed.iter().any(|e| !e.is_finite()) {
            return Err(Error::domain(format!("observation {t} is not finite")));
        }
    }
    let mut state = FilterState::initial(config.dim);
    let mut trajectory = Vec::with_capacity(observations.len());
    for obs in observations {
        state = step(&state, obs, config)?;
        trajectory.push(state.clone());
    }
    Ok(trajectory)
}
