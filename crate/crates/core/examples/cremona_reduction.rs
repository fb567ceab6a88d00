//! Cremona reduction chains, cross-checked against the interpolation oracle.
//!
//! The transformation based at the n+1 largest multiplicities sends
//! (d; m_1, ..., m_s) to (d+k; m_i+k) with k = (n-1)d - sum of the chosen
//! multiplicities. Every step must preserve the affine dimension of the
//! system at very general points — the oracle recomputes both sides from
//! scratch at independent random point sets.
//!
//! Run: `cargo run --release --example cremona_reduction`

use fatpoints::cremona::{reduce_fully, validate_dimension_preservation};
use fatpoints::systems::{derive_seed, generic_dimension, LinearSystemSpec, SearchConfig};

fn main() -> fatpoints::Result<()> {
    let config = SearchConfig::default();
    let field = config.field()?;

    let inputs = [
        LinearSystemSpec::new(2, 4, vec![2, 2, 2])?,
        LinearSystemSpec::new(2, 5, vec![3, 2, 2])?,
        LinearSystemSpec::new(2, 2, vec![1, 1, 1, 1, 1])?,
        LinearSystemSpec::new(2, 12, vec![5, 5, 4, 4, 3, 3])?,
        LinearSystemSpec::new(3, 6, vec![3, 3, 3, 3, 2])?,
    ];
    for spec in &inputs {
        let chain = reduce_fully(spec);
        println!("chain for {spec}:");
        for line in chain.to_string().lines() {
            println!("  {line}");
        }
        for (i, step) in chain.steps.iter().enumerate() {
            let before = generic_dimension(&step.before, derive_seed(config.seed, 2 * i as u64), &field)?;
            let after = generic_dimension(&step.after, derive_seed(config.seed, 2 * i as u64 + 1), &field)?;
            println!(
                "  step {i}: k = {}, affine dim {} -> {} ({})",
                step.k,
                before.affine_dim,
                after.affine_dim,
                if before.affine_dim == after.affine_dim { "preserved" } else { "MISMATCH" }
            );
        }
    }

    let scan = validate_dimension_preservation(200, &config)?;
    println!(
        "randomized scan: {} steps validated ({} candidates drawn), {} mismatches",
        scan.checked.len(),
        scan.attempts,
        scan.mismatches.len()
    );
    Ok(())
}
