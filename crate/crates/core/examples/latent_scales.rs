//! How the GC2 and GC3 filters weight a residual. The effective observation
//! variance grows with |e|, so large residuals are discounted.

use gaussian_chain::filter::{gc2_latent_scale, gc3_latent_scales};

fn main() {
    let sigma2 = 1.0;
    println!("residual\tgc2_v2\tgc3_u2\tgc3_v2\tgauss_weight\tgc2_weight");
    for e in [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0] {
        let v2 = gc2_latent_scale(sigma2, e);
        let (u2, v3) = gc3_latent_scales(sigma2, e);
        // Influence of the residual on the update: e / variance.
        println!("{e}\t{v2:.5}\t{u2:.5}\t{v3:.5}\t{:.3}\t{:.3}", e / sigma2, e / v2);
    }
}
