//! TSV renderers for the `gc` subcommands plus the small argument grammars
//! they accept (`1..20`, `1,2,5`, `lo:hi:step`, strength-path files).
//!
//! Every table starts with `#` comment lines recording the resolved config.
//! Floats are printed with Rust's shortest round-trip formatting unless a
//! fixed precision is part of the layout.

use std::fmt::Write as _;
use std::path::Path;

use crate::backtest::BacktestRow;
use crate::dist::TailTable;
use crate::error::{Error, Result};
use crate::experiments::TrackingRun;
use crate::price_model::SimulatedPrices;
use crate::strategy::{portfolio_return, BacktestReport, Position};

fn comments(out: &mut String, lines: &[String]) {
    for l in lines {
        let _ = writeln!(out, "# {l}");
    }
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), |x| x.to_string())
}

/// Tail-table layout: one row per order, one column per threshold, percent
/// with four decimals. An `x = 1` column holds `1 - 2F(1)`.
pub fn tail_table_tsv(table: &TailTable, header: &[String]) -> String {
    let mut out = String::new();
    comments(&mut out, header);
    out.push('q');
    for &x in &table.thresholds {
        if x == 1.0 {
            out.push_str("\t1-2F(1)");
        } else {
            let _ = write!(out, "\t2F({x})");
        }
    }
    out.push('\n');
    for (i, q) in table.orders.iter().enumerate() {
        let _ = write!(out, "{q}");
        for j in 0..table.thresholds.len() {
            let _ = write!(out, "\t{:.4}", table.display_cell(i, j));
        }
        out.push('\n');
    }
    out
}

pub fn samples_tsv(samples: &[f64], header: &[String]) -> String {
    let mut out = String::new();
    comments(&mut out, header);
    for s in samples {
        let _ = writeln!(out, "{s}");
    }
    out
}

pub fn density_tsv(xs: &[f64], density: &[f64], header: &[String]) -> String {
    let mut out = String::new();
    comments(&mut out, header);
    out.push_str("x\tf\n");
    for (x, f) in xs.iter().zip(density) {
        let _ = writeln!(out, "{x}\t{f}");
    }
    out
}

pub fn tracking_tsv(run: &TrackingRun, header: &[String]) -> String {
    let mut out = String::new();
    comments(&mut out, header);
    out.push_str("t\tr_t\ta_true\ta_hat\n");
    for (k, ((r, a), e)) in run.returns.iter().zip(&run.truth).zip(&run.estimates).enumerate() {
        let _ = writeln!(out, "{}\t{r}\t{a}\t{e}", k + 1);
    }
    let _ = writeln!(out, "# rmse={}", run.rmse());
    out
}

pub fn price_sim_tsv(sim: &SimulatedPrices, header: &[String]) -> Result<String> {
    let mut out = String::new();
    comments(&mut out, header);
    out.push_str("t\tp_t\tx_prev\ted1\ted2\tr_t\n");
    for t in 0..sim.len() {
        let _ = writeln!(
            out,
            "{t}\t{}\t{}\t{}\t{}\t{}",
            sim.prices[t],
            opt(sim.x_prev[t]),
            sim.ed[t][0],
            sim.ed[t][1],
            sim.returns[t]
        );
    }
    let _ = writeln!(out, "# snr={}", sim.snr()?);
    Ok(out)
}

pub fn backtest_series_tsv(rows: &[BacktestRow], header: &[String]) -> String {
    let mut out = String::new();
    comments(&mut out, header);
    out.push_str("date\tclose\tmood\tmood_ma\tposition\n");
    for r in rows {
        let pos = match r.position {
            Position::Flat => 0,
            Position::Long => 1,
        };
        let _ = writeln!(out, "{}\t{}\t{}\t{}\t{pos}", r.date, r.close, opt(r.mood), opt(r.mood_ma));
    }
    out
}

/// Per-symbol rows plus the equally weighted aggregate of both columns.
pub fn portfolio_tsv(reports: &[BacktestReport], header: &[String]) -> Result<String> {
    let acc: Vec<f64> = reports.iter().map(|r| r.accumulated_return).collect();
    let bh: Vec<f64> = reports.iter().map(|r| r.buy_hold_return).collect();
    let mut out = String::new();
    comments(&mut out, header);
    out.push_str("symbol\taccumulated\tbuy_hold\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{}\t{}\t{}",
            r.symbol,
            crate::report::format_percent(r.accumulated_return),
            crate::report::format_percent(r.buy_hold_return)
        );
    }
    let _ = writeln!(
        out,
        "portfolio\t{}\t{}",
        crate::report::format_percent(portfolio_return(&acc)?),
        crate::report::format_percent(portfolio_return(&bh)?)
    );
    Ok(out)
}

/// `"1..20"` (inclusive) or `"1,2,5"`.
pub fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    let bad = || Error::domain(format!("bad integer list '{s}' (expected a..b or a,b,c)"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(|v| v.trim().parse().map_err(|_| bad())).collect()
}

/// Like [`parse_u32_list`] but for thresholds: `"1..9"` gives unit steps.
pub fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    let bad = || Error::domain(format!("bad number list '{s}'"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if !(hi >= lo) {
            return Err(bad());
        }
        let count = (hi - lo).floor() as usize + 1;
        return Ok((0..count).map(|k| lo + k as f64).collect());
    }
    s.split(',').map(|v| v.trim().parse().map_err(|_| bad())).collect()
}

/// `"lo:hi:step"`, inclusive of `hi` up to rounding.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let bad = || Error::domain(format!("bad grid '{s}' (expected lo:hi:step with step > 0)"));
    let parts: Vec<f64> = s.split(':').map(|v| v.trim().parse::<f64>().map_err(|_| bad())).collect::<Result<_>>()?;
    let [lo, hi, step] = parts[..] else { return Err(bad()) };
    if !(step > 0.0) || !(hi >= lo) {
        return Err(bad());
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| lo + k as f64 * step).collect())
}

/// Strength-path file: one `t_start a1 a2` segment per line (tabs or
/// spaces). Blank lines, `#` comments and a `t_start` header are skipped.
pub fn parse_segments(text: &str, path: &Path) -> Result<Vec<(usize, f64, f64)>> {
    let err = |line: usize, msg: String| Error::Parse { path: path.to_path_buf(), line, msg };
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("t_start") {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let [t, a1, a2] = f[..] else {
            return Err(err(i + 1, format!("expected 't_start a1 a2', found '{line}'")));
        };
        let t = t.parse().map_err(|_| err(i + 1, format!("bad start '{t}'")))?;
        let a1 = a1.parse().map_err(|_| err(i + 1, format!("bad a1 '{a1}'")))?;
        let a2 = a2.parse().map_err(|_| err(i + 1, format!("bad a2 '{a2}'")))?;
        out.push((t, a1, a2));
    }
    Ok(out)
}
