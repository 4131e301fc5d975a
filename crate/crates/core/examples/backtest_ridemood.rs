//! Runs RideMood on a `date,close` CSV and prints the cycle report.
//!
//! ```text
//! cargo run --example backtest_ridemood -- crates/core/fixtures/HK0005_synthetic.csv gc3
//! ```

use gaussian_chain::backtest::{run_backtest, BacktestConfig};
use gaussian_chain::filter::FilterKind;
use gaussian_chain::report::emit_report;
use gaussian_chain::series::load_prices;

fn main() -> gaussian_chain::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/HK0005_synthetic.csv").to_string());
    let kind: FilterKind = args.next().as_deref().unwrap_or("gc2").parse()?;

    let series = load_prices(&path)?;
    let config = BacktestConfig { kind, ..Default::default() };
    let report = run_backtest(&config, &series)?;
    print!("{}", emit_report(&report, &[format!("filter={kind} lambda={} n={}", config.lambda, config.n)]));
    Ok(())
}
