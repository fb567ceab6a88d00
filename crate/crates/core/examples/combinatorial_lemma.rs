//! Exact verification of the two combinatorial inequalities:
//! (1) k^n <= C(kn-n, n) for k >= 4, n >= 3, and
//! (2) 3^n <= C(2n, n) for n >= 5,
//! on finite grids, plus the base cases and the negative controls that show
//! where each inequality starts to hold.
//!
//! Run: `cargo run --release --example combinatorial_lemma`

use fatpoints::comb::{binomial, check_lemma_part1, check_lemma_part2};

fn main() {
    // Base cases driving the inductions.
    println!("C(9, 3)  = {} > 4^3 = 64", binomial(9, 3));
    println!("C(10, 5) = {} > 3^5 = 243", binomial(10, 5));

    let mut part1_failures = 0;
    for k in 4..=30 {
        for n in 3..=30 {
            if !check_lemma_part1(k, n) {
                part1_failures += 1;
                println!("part 1 FAILS at k = {k}, n = {n}");
            }
        }
    }
    println!("part 1 on 4 <= k <= 30, 3 <= n <= 30: {part1_failures} failures");

    let mut part2_failures = 0;
    for n in 5..=60 {
        if !check_lemma_part2(n) {
            part2_failures += 1;
            println!("part 2 FAILS at n = {n}");
        }
    }
    println!("part 2 on 5 <= n <= 60: {part2_failures} failures");

    // Just outside the ranges the inequalities genuinely fail.
    println!("part 1 at (k, n) = (3, 3): {} (27 > C(6,3) = 20)", check_lemma_part1(3, 3));
    println!("part 1 at (k, n) = (3, 4): {} (81 > C(8,4) = 70)", check_lemma_part1(3, 4));
    println!("part 2 at n = 4: {} (81 > C(8,4) = 70)", check_lemma_part2(4));
}
