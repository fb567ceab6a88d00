//! Regularity of s general points and the inequality
//! n * floor(s^(1/n)) >= n + r scanned over s in P^4.
//!
//! The scan shows the inequality holding on 16 <= s <= 70 and failing on
//! exactly 71 <= s <= 80 — the window that needs the separate 9/4 bound
//! (see the seventy_one_points example).
//!
//! Run: `cargo run --release --example regularity_scan`

use fatpoints::comb::{check_ineq, nth_root_floor_u64, regularity_general_points, scan_ineq};

fn main() {
    for s in [16u64, 35, 70, 71, 80, 81] {
        let reg = regularity_general_points(4, s);
        let root = nth_root_floor_u64(s, 4).unwrap();
        println!(
            "s = {s:>3}: floor(s^(1/4)) = {root}, r = {}, reg = {}, 4*{root} >= 4 + {} ? {}",
            reg.r,
            reg.reg,
            reg.r,
            check_ineq(4, s)
        );
    }

    let clean = scan_ineq(4, 16, 70);
    println!("failures in [16, 70]: {clean:?}");
    let gap = scan_ineq(4, 71, 80);
    println!("failures in [71, 80]: {gap:?}");
    let above = scan_ineq(4, 81, 200);
    println!("failures in [81, 200]: {above:?}");
}
