//! Market mood and the RideMood strategy.
//!
//! `mood = â₁ + â₂` is buyer strength minus seller strength (the seller
//! coefficient is negative). RideMood goes long when the 5-bar average of the
//! mood turns positive and back to flat when it turns negative. Trades fill
//! at the signal bar's close; an open position is closed on the final bar.

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::series::PriceSeries;

pub const MOOD_WINDOW: usize = 5;

pub fn mood(a_hat: &[f64]) -> Result<f64> {
    match a_hat {
        [buyer, seller] => Ok(buyer + seller),
        _ => Err(Error::domain(format!("mood needs 2 coefficients, got {}", a_hat.len()))),
    }
}

/// Trailing 5-point mean; `None` until 5 values are available.
pub fn mood_ma(moods: &[f64]) -> Vec<Option<f64>> {
    (0..moods.len())
        .map(|t| {
            (t + 1 >= MOOD_WINDOW)
                .then(|| moods[t + 1 - MOOD_WINDOW..=t].iter().sum::<f64>() / MOOD_WINDOW as f64)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TradeCycle {
    pub buy_price: f64,
    pub buy_date: NaiveDate,
    pub sell_price: f64,
    pub sell_date: NaiveDate,
    /// `(sell - buy) / buy`, as a fraction.
    pub cycle_return: f64,
}

impl TradeCycle {
    pub fn new(buy_price: f64, buy_date: NaiveDate, sell_price: f64, sell_date: NaiveDate) -> Self {
        TradeCycle {
            buy_price,
            buy_date,
            sell_price,
            sell_date,
            cycle_return: (sell_price - buy_price) / buy_price,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BacktestReport {
    pub symbol: String,
    pub cycles: Vec<TradeCycle>,
    /// Sum of cycle returns (not compounded).
    pub accumulated_return: f64,
    pub buy_hold_return: f64,
}

impl BacktestReport {
    pub fn new(symbol: impl Into<String>, cycles: Vec<TradeCycle>, buy_hold_return: f64) -> Self {
        let accumulated_return = accumulate(&cycles);
        BacktestReport { symbol: symbol.into(), cycles, accumulated_return, buy_hold_return }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Flat,
    Long,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Hold,
    Buy,
    Sell,
}

/// The two-state RideMood machine, fed one bar at a time.
#[derive(Debug, Clone)]
pub struct RideMood {
    position: Position,
    prev: Option<f64>,
}

impl Default for RideMood {
    fn default() -> Self {
        Self::new()
    }
}

impl RideMood {
    pub fn new() -> Self {
        RideMood { position: Position::Flat, prev: None }
    }

    pub fn position(&self) -> Position {
        self.position
    }

    /// Decides on the current bar given its smoothed mood. A crossing needs a
    /// defined previous value: buy on `<= 0 → > 0`, sell on `>= 0 → < 0`.
    /// On the last bar a long position is always closed and no new position
    /// is opened.
    pub fn on_bar(&mut self, mood_ma: Option<f64>, is_last: bool) -> Action {
        let action = match (self.position, self.prev, mood_ma) {
            (Position::Flat, Some(prev), Some(cur)) if prev <= 0.0 && cur > 0.0 && !is_last => Action::Buy,
            (Position::Long, Some(prev), Some(cur)) if prev >= 0.0 && cur < 0.0 => Action::Sell,
            (Position::Long, _, _) if is_last => Action::Sell,
            _ => Action::Hold,
        };
        match action {
            Action::Buy => self.position = Position::Long,
            Action::Sell => self.position = Position::Flat,
            Action::Hold => {}
        }
        self.prev = mood_ma;
        action
    }
}

/// Cycles plus the position held at the close of every bar.
#[derive(Debug, Clone, PartialEq)]
pub struct RideMoodTrace {
    pub cycles: Vec<TradeCycle>,
    pub positions: Vec<Position>,
}

pub fn ride_mood_trace(mood_ma: &[Option<f64>], prices: &PriceSeries) -> Result<RideMoodTrace> {
    if mood_ma.len() != prices.len() {
        return Err(Error::domain(format!(
            "mood series has {} bars, price series has {}",
            mood_ma.len(),
            prices.len()
        )));
    }
    let mut machine = RideMood::new();
    let mut cycles = Vec::new();
    let mut positions = Vec::with_capacity(prices.len());
    let mut open: Option<(f64, NaiveDate)> = None;
    let last = prices.len().saturating_sub(1);
    for (t, (ma, bar)) in mood_ma.iter().zip(&prices.bars).enumerate() {
        match machine.on_bar(*ma, t == last) {
            Action::Buy => open = Some((bar.close, bar.date)),
            Action::Sell => {
                let (price, date) = open.take().expect("sell while flat");
                cycles.push(TradeCycle::new(price, date, bar.close, bar.date));
            }
            Action::Hold => {}
        }
        positions.push(machine.position());
    }
    Ok(RideMoodTrace { cycles, positions })
}

pub fn ride_mood(mood_ma: &[Option<f64>], prices: &PriceSeries) -> Result<Vec<TradeCycle>> {
    Ok(ride_mood_trace(mood_ma, prices)?.cycles)
}

/// Arithmetic sum of cycle returns.
pub fn accumulate(cycles: &[TradeCycle]) -> f64 {
    cycles.iter().map(|c| c.cycle_return).sum()
}

/// `(p_last - p_first) / p_first`.
pub fn buy_hold(prices: &[f64]) -> Result<f64> {
    match prices {
        [] | [_] => Err(Error::domain("buy-and-hold needs at least 2 prices")),
        [first, .., last] => Ok((last - first) / first),
    }
}

/// Equally weighted portfolio: the mean of the per-symbol returns.
pub fn portfolio_return(returns: &[f64]) -> Result<f64> {
    if returns.is_empty() {
        return Err(Error::domain("portfolio needs at least one return"));
    }
    Ok(returns.iter().sum::<f64>() / returns.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Bar;

    fn series(closes: &[f64]) -> PriceSeries {
        let start = NaiveDate::from_ymd_opt(2013, 1, 1).unwrap();
        let bars = closes
            .iter()
            .enumerate()
            .map(|(i, &close)| Bar { date: start + chrono::Days::new(i as u64), close })
            .collect();
        PriceSeries::new("T", bars).unwrap()
    }

    #[test]
    fn mood_examples() {
        assert!((mood(&[0.5, -0.2]).unwrap() - 0.3).abs() < 1e-15);
        assert_eq!(mood(&[0.0, 0.0]).unwrap(), 0.0);
        assert!((mood(&[0.1, -0.4]).unwrap() + 0.3).abs() < 1e-15);
        assert!(mood(&[0.1]).is_err());
    }

    #[test]
    fn mood_ma_examples() {
        assert_eq!(mood_ma(&[1.0, 2.0, 3.0, 4.0, 5.0]), vec![None, None, None, None, Some(3.0)]);
        assert!(mood_ma(&[2.5; 9]).iter().flatten().all(|&v| v == 2.5));
        let m = [1.0, 10.0, 100.0, 1000.0, 10000.0, 100000.0];
        assert_eq!(mood_ma(&m)[5], Some(111110.0 / 5.0));
    }

    #[test]
    fn hand_traced_cycle() {
        let ma = [-1.0, -1.0, 1.0, 1.0, -1.0].map(Some);
        let cycles = ride_mood(&ma, &series(&[10.0, 10.0, 12.0, 13.0, 11.0])).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!((cycles[0].buy_price, cycles[0].sell_price), (12.0, 11.0));
        assert!((cycles[0].cycle_return + 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn all_negative_mood_never_trades() {
        let ma = vec![Some(-0.5); 30];
        assert!(ride_mood(&ma, &series(&[5.0; 30])).unwrap().is_empty());
    }

    #[test]
    fn open_position_closed_at_final_bar() {
        let ma = [None, Some(-1.0), Some(1.0), Some(2.0)];
        let s = series(&[1.0, 2.0, 3.0, 4.5]);
        let trace = ride_mood_trace(&ma, &s).unwrap();
        assert_eq!(trace.cycles, vec![TradeCycle::new(3.0, s.bars[2].date, 4.5, s.bars[3].date)]);
        assert_eq!(trace.positions, vec![Position::Flat, Position::Flat, Position::Long, Position::Flat]);
    }

    #[test]
    fn zero_does_not_trigger() {
        let mut m = RideMood::new();
        assert_eq!(m.on_bar(Some(-1.0), false), Action::Hold);
        assert_eq!(m.on_bar(Some(0.0), false), Action::Hold);
        assert_eq!(m.on_bar(Some(0.5), false), Action::Buy);
        assert_eq!(m.on_bar(Some(0.0), false), Action::Hold);
        assert_eq!(m.on_bar(Some(-0.1), false), Action::Sell);
    }

    #[test]
    fn first_defined_value_is_not_a_crossing() {
        let mut m = RideMood::new();
        assert_eq!(m.on_bar(None, false), Action::Hold);
        assert_eq!(m.on_bar(Some(1.0), false), Action::Hold);
        assert_eq!(m.position(), Position::Flat);
    }

    #[test]
    fn no_entry_on_final_bar() {
        let ma = [Some(-1.0), Some(1.0)];
        assert!(ride_mood(&ma, &series(&[1.0, 2.0])).unwrap().is_empty());
    }

    #[test]
    fn length_mismatch_rejected() {
        assert!(ride_mood(&[Some(1.0)], &series(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn accounting_basics() {
        assert_eq!(accumulate(&[]), 0.0);
        let d = NaiveDate::from_ymd_opt(2012, 9, 18).unwrap();
        let c = TradeCycle::new(4.0, d, 4.07, d + chrono::Days::new(9));
        assert!((c.cycle_return - 0.0175).abs() < 1e-12);
        assert_eq!(accumulate(std::slice::from_ref(&c)), c.cycle_return);
        assert_eq!(buy_hold(&[3.0, 1.0, 3.0]).unwrap(), 0.0);
        assert!((buy_hold(&[100.0, 115.4]).unwrap() - 0.154).abs() < 1e-12);
        assert!(buy_hold(&[1.0]).is_err());
        assert_eq!(portfolio_return(&[0.2]).unwrap(), 0.2);
        assert!(portfolio_return(&[]).is_err());
    }
}
