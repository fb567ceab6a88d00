//! Floor-bound instances: emptiness of the system of degree km - 1 with
//! k^n points of multiplicity m certifies alpha(I^(m)) >= km for k^n very
//! general points, the mechanism behind the lower bound
//! floor(s^(1/n)) on the Waldschmidt constant.
//!
//! Run: `cargo run --release --example floor_bound`

use fatpoints::systems::SearchConfig;
use fatpoints::waldschmidt::verify_floor_instance;

fn main() -> fatpoints::Result<()> {
    let config = SearchConfig::default();
    let instances =
        [(2u32, 2u32, 1u32), (2, 2, 2), (2, 2, 3), (2, 3, 1), (2, 3, 2), (3, 2, 1), (3, 2, 2), (4, 2, 1)];
    for (n, k, m) in instances {
        let cert = verify_floor_instance(n, k, m, &config)?;
        let trial = cert.trials.last();
        println!(
            "(n, k, m) = ({n}, {k}, {m}): {} -> {}{}",
            cert.spec,
            cert.certification,
            trial
                .map(|t| format!(" (rank {}/{} on {}x{}, seed {})", t.rank, t.cols, t.conds, t.cols, t.seed))
                .unwrap_or_default()
        );
    }
    Ok(())
}
