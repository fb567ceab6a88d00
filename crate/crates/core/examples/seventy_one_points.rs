//! The 71-point certificates in P^4: the system of degree 9m - 1 with 71
//! points of multiplicity 4m is empty, which bounds the Waldschmidt constant
//! of >= 71 very general points below by 9/4 and closes the window
//! 71 <= s <= 80 left open by the floor bound.
//!
//! At m = 1 this is a 2485 x 495 rank certificate; the intermediate system
//! (four 8m-fold and seven 4m-fold points) is certified too. The m = 2 main
//! system is a 23430 x 5985 matrix — minutes, not seconds; pass `--m 2` to
//! opt in.
//!
//! Run: `cargo run --release --example seventy_one_points [-- --m 2]`

use fatpoints::systems::SearchConfig;
use fatpoints::waldschmidt::verify_71_lemma;

fn main() -> fatpoints::Result<()> {
    let m: u32 = match std::env::args().skip_while(|a| a != "--m").nth(1) {
        Some(v) => v.parse().expect("--m takes an integer"),
        None => 1,
    };
    let config = SearchConfig::default();
    let report = verify_71_lemma(m, &config)?;
    for (name, cert) in [("main", &report.main), ("intermediate", &report.intermediate)] {
        println!("{name}: {} -> {}", cert.spec, cert.certification);
        for t in &cert.trials {
            println!("  trial seed {}: rank {}/{} on a {}x{} matrix", t.seed, t.rank, t.cols, t.conds, t.cols);
        }
    }
    println!(
        "both certified: {} (prime {}, base seed {})",
        report.both_certified(),
        config.prime,
        config.seed
    );
    Ok(())
}
