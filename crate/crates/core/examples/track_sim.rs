//! Tracks a sinusoidal coefficient through 5th-order chain noise with GC2,
//! GC3 and exponentially weighted least squares, over several seeds.

use gaussian_chain::experiments::{track_sim, TRACKING_BURN_IN};
use gaussian_chain::filter::{FilterKind, DEFAULT_LAMBDA};

fn main() -> gaussian_chain::Result<()> {
    println!("seed\tfilter\trmse\tmax_jump");
    for seed in 0..5 {
        for kind in [FilterKind::Gc2, FilterKind::Gc3, FilterKind::Rls] {
            let run = track_sim(kind, 5, 40.0, 1000, DEFAULT_LAMBDA, seed)?;
            println!("{seed}\t{kind}\t{:.2}\t{:.2}", run.rmse(), run.max_jump(TRACKING_BURN_IN));
        }
    }
    Ok(())
}
