//! Simulates the big-buyer / big-seller model under alternating regimes and
//! checks how often the estimated mood has the right sign.

use gaussian_chain::experiments::mood_sign_agreement;
use gaussian_chain::filter::{run_filter, FilterConfig, FilterKind, DEFAULT_LAMBDA};
use gaussian_chain::price_model::{simulate_prices, ModelConfig, StrengthPath};

fn main() -> gaussian_chain::Result<()> {
    let segments = [(0, 1.6, -0.4), (150, 0.4, -1.6), (300, 1.8, -0.2), (450, 0.2, -1.8), (600, 1.4, -0.6)];
    let path = StrengthPath::from_segments(&segments, 750)?;
    let config = ModelConfig { n: 20, sigma: 0.01, q: 2, p0: 100.0 };
    let sim = simulate_prices(&config, &path, 11)?;
    let filter = FilterConfig::new(FilterKind::Gc2, DEFAULT_LAMBDA, 2)?;

    println!("snr {:.3}", sim.snr()?);
    println!("sign agreement {:.3}", mood_sign_agreement(&sim, &path, &filter, 50)?);

    let states = run_filter(&filter, &sim.observations())?;
    println!("t\tprice\ta1\ta1_hat\ta2\ta2_hat");
    for (k, s) in states.iter().enumerate().step_by(25) {
        let t = config.n + k;
        println!(
            "{t}\t{:.3}\t{}\t{:.3}\t{}\t{:.3}",
            sim.prices[t], path.a1[t], s.a_hat[0], path.a2[t], s.a_hat[1]
        );
    }
    Ok(())
}
