//! alpha(I^(m)) for the ideal of 5 very general points in P^2, m = 1, 2, 3.
//!
//! The degrees come out as 2, 4, 6: the conic through the 5 points, its
//! square, and its cube. Every degree below alpha is certified empty by a
//! full-rank interpolation matrix; the per-degree certificates (prime, seed,
//! rank) are printed so each one can be reproduced independently.
//!
//! Run: `cargo run --release --example alpha_search`

use fatpoints::systems::SearchConfig;
use fatpoints::waldschmidt::alpha_symbolic;

fn main() -> fatpoints::Result<()> {
    let config = SearchConfig::default();
    for m in 1..=3 {
        let res = alpha_symbolic(2, 5, m, &config)?;
        println!("alpha(I^({m})) = {} (search capped at degree {})", res.alpha, res.search_cap);
        for cert in &res.certificates {
            let detail = cert
                .trials
                .last()
                .map(|t| format!("rank {}/{} on {}x{}, seed {}", t.rank, t.cols, t.conds, t.cols, t.seed))
                .unwrap_or_else(|| "no sampling needed".to_string());
            println!("  degree {}: {} ({detail})", cert.spec.d, cert.certification);
        }
    }
    Ok(())
}
