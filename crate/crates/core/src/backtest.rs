//! End-to-end RideMood backtest over a daily close series.
//!
//! prices → log-ratio state → excess demands → GC filter → mood →
//! 5-bar mood average → RideMood → cycle accounting. No randomness.

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::filter::{run_filter, FilterConfig, FilterKind, DEFAULT_LAMBDA};
use crate::price_model::{model_inputs, DEFAULT_WINDOW};
use crate::series::PriceSeries;
use crate::strategy::{buy_hold, mood, mood_ma, ride_mood_trace, BacktestReport, Position, MOOD_WINDOW};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BacktestConfig {
    pub kind: FilterKind,
    pub lambda: f64,
    /// Moving-average window of the log-ratio state.
    pub n: usize,
}

impl Default for BacktestConfig {
    fn default() -> Self {
        BacktestConfig { kind: FilterKind::Gc2, lambda: DEFAULT_LAMBDA, n: DEFAULT_WINDOW }
    }
}

/// Per-bar plot data.
#[derive(Debug, Clone, PartialEq)]
pub struct BacktestRow {
    pub date: NaiveDate,
    pub close: f64,
    pub mood: Option<f64>,
    pub mood_ma: Option<f64>,
    pub position: Position,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BacktestRun {
    pub report: BacktestReport,
    pub rows: Vec<BacktestRow>,
}

pub fn backtest_trace(config: &BacktestConfig, series: &PriceSeries) -> Result<BacktestRun> {
    let min_len = config.n.max(MOOD_WINDOW) + 2;
    if series.len() < min_len {
        return Err(Error::domain(format!(
            "series has {} bars, need at least {min_len} for n = {}",
            series.len(),
            config.n
        )));
    }
    let filter = FilterConfig::new(config.kind, config.lambda, 2)?;
    let closes = series.closes();
    let inputs = model_inputs(&closes, config.n)?;
    let states = run_filter(&filter, &inputs.observations)?;

    let moods = states.iter().map(|s| mood(&s.a_hat)).collect::<Result<Vec<_>>>()?;
    let smoothed = mood_ma(&moods);

    let mut mood_by_bar = vec![None; series.len()];
    let mut ma_by_bar = vec![None; series.len()];
    for (k, &bar) in inputs.bars.iter().enumerate() {
        mood_by_bar[bar] = Some(moods[k]);
        ma_by_bar[bar] = smoothed[k];
    }

    let trace = ride_mood_trace(&ma_by_bar, series)?;
    let rows = series
        .bars
        .iter()
        .enumerate()
        .map(|(t, bar)| BacktestRow {
            date: bar.date,
            close: bar.close,
            mood: mood_by_bar[t],
            mood_ma: ma_by_bar[t],
            position: trace.positions[t],
        })
        .collect();
    let report = BacktestReport::new(series.symbol.clone(), trace.cycles, buy_hold(&closes)?);
    Ok(BacktestRun { report, rows })
}

pub fn run_backtest(config: &BacktestConfig, series: &PriceSeries) -> Result<BacktestReport> {
    Ok(backtest_trace(config, series)?.report)
}
