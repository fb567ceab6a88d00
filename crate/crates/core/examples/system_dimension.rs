//! Dimension and certification of single linear systems of fat points.
//!
//! Four classics: lines through 4 general plane points (certified empty by
//! rank), conics through 5 points (nonempty by count), the superabundant
//! double conic (virtual dimension 0, actual dimension 1), and a negative
//! degree system (empty by convention).
//!
//! Run: `cargo run --release --example system_dimension`

use fatpoints::systems::{generic_dimension, LinearSystemSpec, SearchConfig};

fn main() -> fatpoints::Result<()> {
    let config = SearchConfig::default();
    let field = config.field()?;

    let cases = [
        LinearSystemSpec::uniform(2, 1, 1, 4)?, // lines through 4 points
        LinearSystemSpec::uniform(2, 2, 1, 5)?, // conics through 5 points
        LinearSystemSpec::uniform(2, 4, 2, 5)?, // the double conic
        LinearSystemSpec::new(2, -1, vec![1])?, // negative degree
        LinearSystemSpec::new(4, 8, [vec![8; 4], vec![4; 7]].concat())?,
    ];

    for (i, spec) in cases.iter().enumerate() {
        let dim = generic_dimension(spec, config.seed + i as u64, &field)?;
        println!(
            "{}: cols {:>3}, conds {:>4}, rank {:>3}, affine dim {}, expected {}, {}",
            dim.spec,
            dim.cols,
            dim.conds,
            dim.rank,
            dim.affine_dim,
            spec.expected_dimension(),
            dim.certification,
        );
    }
    Ok(())
}
