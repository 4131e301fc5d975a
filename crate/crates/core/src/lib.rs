//! Gaussian-Chain heavy-tailed noise, the maximum-likelihood GC filters built
//! on it, and a big-buyer/big-seller price model with the RideMood strategy.
//!
//! The crate is organised around five areas:
//!
//! - [`dist`]: the Gaussian-Chain distribution (sampling, moments, tails, density).
//! - [`filter`]: the 2nd/3rd-order GC filters and an RLS baseline.
//! - [`price_model`]: moving-average log-ratio state, excess demands, price simulation.
//! - [`strategy`]: market mood and the RideMood long/flat state machine.
//! - [`series`], [`report`], [`backtest`], [`output`]: CSV/TSV IO and orchestration
//!   used by the `gc` binary and the runnable examples.
//!
//! Every stochastic routine takes an explicit `u64` seed; identical seeds give
//! bit-identical results on one platform.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod backtest;
pub mod dist;
pub mod error;
pub mod experiments;
pub mod filter;
pub mod output;
pub mod price_model;
pub mod report;
pub mod rng;
pub mod series;
pub mod strategy;

pub use error::{Error, Result};

/// Seed used when neither `--seed` nor `GC_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_120_402;
