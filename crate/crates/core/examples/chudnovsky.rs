//! Chudnovsky inequality verdicts: alpha(I^(m))/m >= (alpha(I) + n - 1)/n.
//!
//! All comparisons are exact rationals; the single-point case sits exactly
//! on the boundary (1 >= 1), which is why rounding is never allowed near the
//! threshold.
//!
//! Run: `cargo run --release --example chudnovsky`

use fatpoints::systems::SearchConfig;
use fatpoints::waldschmidt::chudnovsky_check;

fn main() -> fatpoints::Result<()> {
    let config = SearchConfig::default();
    for (n, s, m_list) in [
        (2u32, 5usize, vec![1u32, 2, 3]),
        (2, 1, vec![1, 2, 4]),
        (3, 8, vec![1, 2]),
        (4, 16, vec![1]),
    ] {
        println!("{s} very general points in P^{n}:");
        for record in chudnovsky_check(n, s, &m_list, &config)? {
            println!(
                "  m = {}: alpha(I^({})) / {} = {} >= {} ? {}",
                record.m,
                record.m,
                record.m,
                record.ratio,
                record.threshold,
                if record.holds { "holds" } else { "FAILS" }
            );
        }
    }
    Ok(())
}
