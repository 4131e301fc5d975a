//! Density of the standard chain for q = 1, 2, 3 on a grid, next to each
//! other so the sharpening peak and fattening tails are visible.

use gaussian_chain::dist::{density_mc_grid, GcParams};
use gaussian_chain::output::parse_grid;

fn main() -> gaussian_chain::Result<()> {
    let xs = parse_grid("-4:4:0.25")?;
    let curves = (1..=3)
        .map(|q| density_mc_grid(&GcParams::standard(q)?, &xs, 400_000, 3))
        .collect::<gaussian_chain::Result<Vec<_>>>()?;
    println!("x\tq1\tq2\tq3");
    for (i, x) in xs.iter().enumerate() {
        // x = 0 is a pole for q >= 2; the estimate there is not meaningful.
        if *x == 0.0 {
            continue;
        }
        println!("{x}\t{:.5}\t{:.5}\t{:.5}", curves[0][i], curves[1][i], curves[2][i]);
    }
    Ok(())
}
