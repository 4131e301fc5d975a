use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gaussian_chain::backtest::{backtest_trace, BacktestConfig};
use gaussian_chain::dist::{density_mc_grid, tail_table, GcParams, TABLE_SAMPLES};
use gaussian_chain::experiments::track_sim;
use gaussian_chain::filter::{FilterKind, DEFAULT_LAMBDA};
use gaussian_chain::output;
use gaussian_chain::price_model::{simulate_prices, ModelConfig, StrengthPath, DEFAULT_WINDOW};
use gaussian_chain::report::{emit_report, load_report};
use gaussian_chain::series::load_prices;
use gaussian_chain::{Error, Result, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "gc", version, about = "Gaussian-Chain distribution, GC filters and RideMood backtests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monte-Carlo table of two-sided tail probabilities 2F(x), in percent.
    TailTable {
        #[arg(long, default_value = "1..20")]
        orders: String,
        #[arg(long, default_value = "1..9")]
        x: String,
        #[arg(long, default_value_t = TABLE_SAMPLES)]
        samples: u64,
        #[arg(long, env = "GC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Draw samples, one per line.
    Sample {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "GC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Monte-Carlo density on a grid lo:hi:step.
    Density {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, env = "GC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Track a(t) = 20(1 + sin(8πt/T)) through chain noise.
    TrackSim {
        #[arg(long, default_value = "gc2")]
        filter: FilterKind,
        #[arg(long, default_value_t = 5)]
        q: u32,
        #[arg(long, default_value_t = 40.0, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long = "T", default_value_t = 1000)]
        len: usize,
        #[arg(long, default_value_t = DEFAULT_LAMBDA, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, env = "GC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Simulate the big-buyer/big-seller price model.
    PriceSim {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        n: usize,
        #[arg(long = "T")]
        len: usize,
        /// Strength segments, one `t_start a1 a2` per line.
        #[arg(long)]
        path: PathBuf,
        #[arg(long, default_value_t = 100.0, allow_negative_numbers = true)]
        p0: f64,
        #[arg(long, env = "GC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// RideMood backtest over a `date,close` CSV.
    Backtest {
        #[arg(long)]
        prices: PathBuf,
        #[arg(long, default_value = "gc2")]
        filter: FilterKind,
        #[arg(long, default_value_t = DEFAULT_LAMBDA, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        n: usize,
        /// Write the per-bar plot series here instead of after the report.
        #[arg(long)]
        series_out: Option<PathBuf>,
    },
    /// Equally weighted portfolio over saved backtest reports.
    Portfolio {
        #[arg(long, num_args = 1.., required = true)]
        reports: Vec<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::TailTable { orders, x, samples, seed } => {
            let table = tail_table(&output::parse_u32_list(&orders)?, &output::parse_f64_list(&x)?, samples, seed)?;
            let header = format!("gc tail-table orders={orders} x={x} samples={samples} seed={seed}");
            Ok(output::tail_table_tsv(&table, &[header]))
        }
        Command::Sample { q, m, sigma, n, seed } => {
            let samples = GcParams::new(q, m, sigma)?.sample_n(n, seed)?;
            let header = format!("gc sample q={q} m={m} sigma={sigma} n={n} seed={seed}");
            Ok(output::samples_tsv(&samples, &[header]))
        }
        Command::Density { q, m, sigma, grid, samples, seed } => {
            let params = GcParams::new(q, m, sigma)?;
            let xs = output::parse_grid(&grid)?;
            let f = density_mc_grid(&params, &xs, samples, seed)?;
            let header = format!("gc density q={q} m={m} sigma={sigma} grid={grid} samples={samples} seed={seed}");
            Ok(output::density_tsv(&xs, &f, &[header]))
        }
        Command::TrackSim { filter, q, sigma, len, lambda, seed } => {
            let run = track_sim(filter, q, sigma, len, lambda, seed)?;
            let header = format!("gc track-sim filter={filter} q={q} sigma={sigma} T={len} lambda={lambda} seed={seed}");
            Ok(output::tracking_tsv(&run, &[header]))
        }
        Command::PriceSim { q, sigma, n, len, path, p0, seed } => {
            let segments = output::parse_segments(&read(&path)?, &path)?;
            let strengths = StrengthPath::from_segments(&segments, len)?;
            let sim = simulate_prices(&ModelConfig { n, sigma, q, p0 }, &strengths, seed)?;
            let header = format!(
                "gc price-sim q={q} sigma={sigma} n={n} T={len} path={} p0={p0} seed={seed}",
                path.display()
            );
            output::price_sim_tsv(&sim, &[header])
        }
        Command::Backtest { prices, filter, lambda, n, series_out } => {
            let series = load_prices(&prices)?;
            let config = BacktestConfig { kind: filter, lambda, n };
            let run = backtest_trace(&config, &series)?;
            let header = format!("gc backtest prices={} filter={filter} lambda={lambda} n={n}", prices.display());
            let mut out = emit_report(&run.report, std::slice::from_ref(&header));
            let series_tsv = output::backtest_series_tsv(&run.rows, &[header]);
            match series_out {
                Some(path) => fs::write(&path, series_tsv).map_err(|source| Error::Io { path, source })?,
                None => {
                    out.push('\n');
                    out.push_str(&series_tsv);
                }
            }
            Ok(out)
        }
        Command::Portfolio { reports } => {
            let loaded = reports.iter().map(load_report).collect::<Result<Vec<_>>>()?;
            let names: Vec<String> = reports.iter().map(|p| p.display().to_string()).collect();
            output::portfolio_tsv(&loaded, &[format!("gc portfolio reports={}", names.join(","))])
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gc: {e}");
            ExitCode::FAILURE
        }
    }
}
