//! The sufficient numeric criterion for the containment of the nm-th
//! symbolic power in M^((n-1)m) I^m: alpha(I^(nm)) >= (n-1)m + m reg(I),
//! with reg(I) the regularity of s general points.
//!
//! The (4, 16, 1) case is the instructive one: reg = 4 gives required = 7,
//! and the degree search certifies every degree up to 8 empty (the deepest
//! certificate is a 560 x 495 matrix of full column rank) before the count
//! bound forces alpha(I^(4)) = 9.
//!
//! Run: `cargo run --release --example containment_criterion`

use fatpoints::systems::SearchConfig;
use fatpoints::waldschmidt::containment_criterion_check;

fn main() -> fatpoints::Result<()> {
    let config = SearchConfig::default();
    for (n, s, m) in [(2u32, 4usize, 1u32), (2, 4, 2), (3, 8, 1), (4, 16, 1)] {
        let v = containment_criterion_check(n, s, m, &config)?;
        println!(
            "(n, s, m) = ({n}, {s}, {m}): reg = {}, required = {}, alpha(I^({})) = {} -> {}",
            v.reg,
            v.required,
            n * m,
            v.alpha_nm,
            if v.holds { "holds" } else { "FAILS" }
        );
        if (n, s) == (4, 16) {
            for cert in &v.alpha_detail.certificates {
                if let Some(t) = cert.trials.last() {
                    println!(
                        "    degree {}: {} (rank {}/{} on {}x{})",
                        cert.spec.d, cert.certification, t.rank, t.cols, t.conds, t.cols
                    );
                } else {
                    println!("    degree {}: {}", cert.spec.d, cert.certification);
                }
            }
        }
    }
    Ok(())
}
