//! Prints a small heavy-tail table: `2F(x)` in percent for a few chain orders.
//!
//! ```text
//! cargo run --release --example tail_table -- 2000000
//! ```

use gaussian_chain::dist::tail_table;
use gaussian_chain::output::tail_table_tsv;
use gaussian_chain::DEFAULT_SEED;

fn main() -> gaussian_chain::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(500_000);
    let orders = [1, 2, 3, 5, 10, 20];
    let thresholds = [1.0, 2.0, 3.0, 5.0, 9.0];
    let table = tail_table(&orders, &thresholds, n, DEFAULT_SEED)?;
    print!("{}", tail_table_tsv(&table, &[format!("samples={n} seed={DEFAULT_SEED}")]));
    Ok(())
}
