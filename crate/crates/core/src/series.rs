//! Daily close series and their CSV form (`date,close` header, ISO dates).

use std::path::Path;

use chrono::NaiveDate;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bar {
    pub date: NaiveDate,
    pub close: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PriceSeries {
    pub symbol: String,
    pub bars: Vec<Bar>,
}

impl PriceSeries {
    /// Validates ordering and positivity.
    pub fn new(symbol: impl Into<String>, bars: Vec<Bar>) -> Result<Self> {
        for (i, bar) in bars.iter().enumerate() {
            if !(bar.close > 0.0 && bar.close.is_finite()) {
                return Err(Error::domain(format!("bar {i}: close must be > 0, got {}", bar.close)));
            }
            if i > 0 && bar.date <= bars[i - 1].date {
                return Err(Error::domain(format!("bar {i}: date {} does not follow {}", bar.date, bars[i - 1].date)));
            }
        }
        Ok(PriceSeries { symbol: symbol.into(), bars })
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn closes(&self) -> Vec<f64> {
        self.bars.iter().map(|b| b.close).collect()
    }

    /// `ln(p_t / p_{t-1})` for `t >= 1`.
    pub fn log_returns(&self) -> Vec<f64> {
        self.bars.windows(2).map(|w| (w[1].close / w[0].close).ln()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("date,close\n");
        for bar in &self.bars {
            out.push_str(&format!("{},{}\n", bar.date, bar.close));
        }
        out
    }
}

/// Reads a `date,close` CSV. The symbol is the file stem.
pub fn load_prices(path: impl AsRef<Path>) -> Result<PriceSeries> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let symbol = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    parse_prices(&text, &symbol, path)
}

pub fn parse_prices(text: &str, symbol: &str, path: &Path) -> Result<PriceSeries> {
    let err = |line: usize, msg: String| Error::Parse { path: path.to_path_buf(), line, msg };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

    let header = lines.by_ref().find(|(_, l)| !l.is_empty());
    match header {
        Some((_, h)) if h.replace(' ', "").eq_ignore_ascii_case("date,close") => {}
        Some((no, h)) => return Err(err(no, format!("expected header 'date,close', found '{h}'"))),
        None => return Err(err(1, "empty file".into())),
    }

    let mut bars: Vec<Bar> = Vec::new();
    for (no, line) in lines {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split(',').map(str::trim);
        let (Some(d), Some(c), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(no, format!("expected 2 fields, found '{line}'")));
        };
        let date = NaiveDate::parse_from_str(d, "%Y-%m-%d").map_err(|e| err(no, format!("bad date '{d}': {e}")))?;
        let close: f64 = c.parse().map_err(|_| err(no, format!("bad close '{c}'")))?;
        if !(close > 0.0 && close.is_finite()) {
            return Err(err(no, format!("close must be > 0, got {c}")));
        }
        if let Some(prev) = bars.last() {
            if date == prev.date {
                return Err(err(no, format!("duplicate date {date}")));
            }
            if date < prev.date {
                return Err(err(no, format!("date {date} precedes {}", prev.date)));
            }
        }
        bars.push(Bar { date, close });
    }
    Ok(PriceSeries { symbol: symbol.to_string(), bars })
}
