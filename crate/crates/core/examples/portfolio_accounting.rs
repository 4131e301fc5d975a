//! Equally weighted portfolio over saved reports: per-symbol accumulated and
//! buy-and-hold returns plus their means.

use gaussian_chain::output::portfolio_tsv;
use gaussian_chain::report::load_report;

fn main() -> gaussian_chain::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for set in ["reports_gc2", "reports_gc3"] {
        let reports = ["HK0005", "HK0939", "HK0941", "HK1398", "HK3988"]
            .iter()
            .map(|s| load_report(format!("{dir}/{set}/{s}.tsv")))
            .collect::<gaussian_chain::Result<Vec<_>>>()?;
        println!("{}", portfolio_tsv(&reports, &[set.to_string()])?);
    }
    Ok(())
}
