//! Tab-separated rendering of backtest reports, and its parser (tabs shown as
//! spaces below):
//!
//! ```text
//! # symbol=HK1398
//! cycle    buy    sell    return
//! 1    buy: 4.00; 2012-09-18    sell: 4.07; 2012-09-27    return: 1.75%
//! Accumulated Return    1.75%
//! Buy&Hold Return    4.40%
//! ```

use std::path::Path;

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::strategy::{BacktestReport, TradeCycle};

pub const ACCUMULATED_LABEL: &str = "Accumulated Return";
pub const BUY_HOLD_LABEL: &str = "Buy&Hold Return";

/// Rounds half-up to `decimals` places. Representation noise below 1e-9 of
/// a unit in the last place is removed first so that printed ties such as
/// `1.675` round up.
pub fn round_half_up(value: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    let cleaned = (value * scale * 1e9).round() / 1e9;
    (cleaned + 0.5).floor() / scale + 0.0
}

/// A fraction rendered as a percentage with two decimals, e.g. `0.0175 → "1.75%"`.
pub fn format_percent(fraction: f64) -> String {
    format!("{:.2}%", round_half_up(fraction * 100.0, 2))
}

fn parse_percent(s: &str) -> Option<f64> {
    s.trim().strip_suffix('%')?.trim().parse::<f64>().ok().map(|v| v / 100.0)
}

pub fn emit_report(report: &BacktestReport, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("# symbol={}\n", report.symbol));
    out.push_str("cycle\tbuy\tsell\treturn\n");
    for (i, c) in report.cycles.iter().enumerate() {
        out.push_str(&format!(
            "{}\tbuy: {:.2}; {}\tsell: {:.2}; {}\treturn: {}\n",
            i + 1,
            round_half_up(c.buy_price, 2),
            c.buy_date,
            round_half_up(c.sell_price, 2),
            c.sell_date,
            format_percent(c.cycle_return)
        ));
    }
    out.push_str(&format!("{ACCUMULATED_LABEL}\t{}\n", format_percent(report.accumulated_return)));
    out.push_str(&format!("{BUY_HOLD_LABEL}\t{}\n", format_percent(report.buy_hold_return)));
    out
}

fn parse_leg(field: &str, tag: &str) -> Option<(f64, NaiveDate)> {
    let rest = field.trim().strip_prefix(tag)?.strip_prefix(':')?;
    let (price, date) = rest.split_once(';')?;
    Some((price.trim().parse().ok()?, NaiveDate::parse_from_str(date.trim(), "%Y-%m-%d").ok()?))
}

/// Parses the output of [`emit_report`]. Every number is taken as printed,
/// including each cycle's `return:` column.
pub fn parse_report(text: &str, path: &Path) -> Result<BacktestReport> {
    let err = |line: usize, msg: String| Error::Parse { path: path.to_path_buf(), line, msg };
    let mut symbol = String::new();
    let mut cycles = Vec::new();
    let mut accumulated = None;
    let mut buy_hold = None;
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(s) = comment.trim().strip_prefix("symbol=") {
                symbol = s.to_string();
            }
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        match fields.as_slice() {
            ["cycle", ..] => seen_header = true,
            [label, value] if *label == ACCUMULATED_LABEL => {
                accumulated = Some(parse_percent(value).ok_or_else(|| err(no, format!("bad percent '{value}'")))?)
            }
            [label, value] if *label == BUY_HOLD_LABEL => {
                buy_hold = Some(parse_percent(value).ok_or_else(|| err(no, format!("bad percent '{value}'")))?)
            }
            [_, buy, sell, ret] if seen_header => {
                let (bp, bd) = parse_leg(buy, "buy").ok_or_else(|| err(no, format!("bad buy leg '{buy}'")))?;
                let (sp, sd) = parse_leg(sell, "sell").ok_or_else(|| err(no, format!("bad sell leg '{sell}'")))?;
                let r = ret
                    .trim()
                    .strip_prefix("return:")
                    .and_then(parse_percent)
                    .ok_or_else(|| err(no, format!("bad return '{ret}'")))?;
                cycles.push(TradeCycle { cycle_return: r, ..TradeCycle::new(bp, bd, sp, sd) });
            }
            _ => return Err(err(no, format!("unrecognised row '{line}'"))),
        }
    }
    let accumulated_return = accumulated.ok_or_else(|| err(0, format!("missing '{ACCUMULATED_LABEL}' row")))?;
    let buy_hold_return = buy_hold.ok_or_else(|| err(0, format!("missing '{BUY_HOLD_LABEL}' row")))?;
    Ok(BacktestReport { symbol, cycles, accumulated_return, buy_hold_return })
}

pub fn load_report(path: impl AsRef<Path>) -> Result<BacktestReport> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_report(&text, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn date(s: &str) -> NaiveDate {
        NaiveDate::parse_from_str(s, "%Y-%m-%d").unwrap()
    }

    #[test]
    fn one_cycle_renders_table_row() {
        let c = TradeCycle::new(4.0, date("2012-09-18"), 4.07, date("2012-09-27"));
        let text = emit_report(&BacktestReport::new("HK1398", vec![c], 0.044), &[]);
        assert!(text.contains("1\tbuy: 4.00; 2012-09-18\tsell: 4.07; 2012-09-27\treturn: 1.75%\n"));
        assert!(text.contains("Accumulated Return\t1.75%\n"));
        assert!(text.contains("Buy&Hold Return\t4.40%\n"));
    }

    #[test]
    fn empty_report() {
        let text = emit_report(&BacktestReport::new("X", vec![], 0.0), &["gc backtest n=20".into()]);
        assert!(text.starts_with("# gc backtest n=20\n"));
        assert!(text.contains("cycle\tbuy\tsell\treturn\n"));
        assert!(text.contains("Accumulated Return\t0.00%"));
    }

    #[test]
    fn half_up_rounding() {
        assert_eq!(format_percent(0.01675), "1.68%");
        assert_eq!(format_percent(-0.0000001), "0.00%");
        assert_eq!(format_percent(0.2347), "23.47%");
        assert_eq!(round_half_up(2.345, 2), 2.35);
    }

    #[test]
    fn parse_inverts_emit() {
        let cycles = vec![
            TradeCycle::new(70.98, date("2012-05-03"), 68.11, date("2012-05-07")),
            TradeCycle::new(60.36, date("2012-06-01"), 66.56, date("2012-07-12")),
        ];
        let report = BacktestReport::new("HK0005", cycles, 0.154);
        let parsed = parse_report(&emit_report(&report, &[]), Path::new("r.tsv")).unwrap();
        assert_eq!(parsed.symbol, "HK0005");
        assert_eq!(parsed.cycles.len(), 2);
        for (a, b) in parsed.cycles.iter().zip(&report.cycles) {
            assert_eq!(a.buy_date, b.buy_date);
            assert_eq!(a.sell_date, b.sell_date);
            assert!((a.cycle_return - b.cycle_return).abs() < 5e-5);
        }
        assert!((parsed.accumulated_return - report.accumulated_return).abs() < 5e-5);
        assert!((parsed.buy_hold_return - 0.154).abs() < 1e-12);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_report("cycle\tbuy\tsell\treturn\nnonsense\n", Path::new("r")).is_err());
        assert!(parse_report("cycle\tbuy\tsell\treturn\n", Path::new("r")).is_err());
    }
}
