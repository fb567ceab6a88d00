//! Waldschmidt-constant bounds for a few configurations: sampled upper
//! estimates min_m alpha(I^(m))/m against the certified lower bound
//! floor(s^(1/n)).
//!
//! For s = k^n general points the two meet at k, pinning the constant
//! exactly; for other s they bracket it.
//!
//! Run: `cargo run --release --example waldschmidt_bounds`

use fatpoints::systems::SearchConfig;
use fatpoints::waldschmidt::waldschmidt_report;

fn main() -> fatpoints::Result<()> {
    let config = SearchConfig::default();
    for (n, s, m_max) in [(2u32, 4usize, 3u32), (2, 5, 3), (2, 9, 2), (3, 8, 2), (4, 16, 1)] {
        let report = waldschmidt_report(n, s, m_max, &config)?;
        println!("{s} very general points in P^{n}:");
        for sample in &report.samples {
            println!(
                "  m = {}: alpha(I^({})) = {}, ratio {}",
                sample.m, sample.m, sample.alpha, sample.ratio
            );
        }
        println!(
            "  floor lower bound {} <= Waldschmidt constant <= {} (sampled upper bound)",
            report.floor_lower, report.upper_bound
        );
    }
    Ok(())
}
