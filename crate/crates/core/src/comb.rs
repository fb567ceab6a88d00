//! Exact big-integer combinatorics: binomial coefficients, integer roots,
//! regularity of general points, and the closed-form inequalities built from
//! them.
//!
//! Everything here is integer-exact. Boundary cases such as s = k^n - 1
//! versus s = k^n decide which theorem applies, so no floating point is used
//! anywhere, including the n-th root.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

/// Binomial coefficient C(a, b), exact; 0 when b > a.
pub fn binomial(a: u64, b: u64) -> Nat {
    if b > a {
        return Nat::zero();
    }
    let b = b.min(a - b);
    let mut acc = Nat::one();
    for i in 0..b {
        // Division is exact at every step of the multiplicative formula.
        acc = acc * Nat::from(a - i) / Nat::from(i + 1);
    }
    acc
}

/// Largest t with t^n <= s, by binary search on t. No floating point.
pub fn integer_nth_root_floor(s: &Nat, n: u32) -> Result<Nat> {
    if n == 0 {
        return Err(Error::RootDegreeZero);
    }
    if s.is_zero() {
        return Ok(Nat::zero());
    }
    // t has at most ceil(bits(s)/n) bits, so t < 2^(bits/n + 1).
    let hi_bits = s.bits() / n as u64 + 1;
    let mut lo = Nat::one();
    let mut hi = Nat::one() << hi_bits; // hi^n > s
    // Invariant: lo^n <= s < hi^n.
    while &lo + 1u32 < hi {
        let mid: Nat = (&lo + &hi) >> 1;
        if mid.pow(n) <= *s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Convenience for word-sized inputs; the floor root of a u64 fits in u64.
pub fn nth_root_floor_u64(s: u64, n: u32) -> Result<u64> {
    let r = integer_nth_root_floor(&Nat::from(s), n)?;
    Ok(r.try_into().expect("root of a u64 fits in u64"))
}

/// k^n <= C(kn - n, n)?
pub fn check_lemma_part1(k: u64, n: u64) -> bool {
    let lhs = Nat::from(k).pow(n as u32);
    let rhs = binomial(k * n - n, n);
    lhs <= rhs
}

/// 3^n <= C(2n, n)?
pub fn check_lemma_part2(n: u64) -> bool {
    let lhs = Nat::from(3u32).pow(n as u32);
    let rhs = binomial(2 * n, n);
    lhs <= rhs
}

/// Castelnuovo-Mumford regularity data for s general points in P^n:
/// reg = r + 1 for the unique r with C(r-1+n, n) < s <= C(r+n, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityResult {
    pub n: u64,
    pub s: u64,
    pub r: u64,
    pub reg: u64,
}

/// Finds the bracketing r by ascending scan from r = 0.
pub fn regularity_general_points(n: u64, s: u64) -> RegularityResult {
    assert!(n >= 1 && s >= 1);
    let s_big = Nat::from(s);
    let mut r = 0u64;
    // C(r-1+n, n) < s <= C(r+n, n); at r = 0 the lower side is C(n-1, n) = 0.
    while binomial(r + n, n) < s_big {
        r += 1;
    }
    debug_assert!(binomial(r + n - 1, n) < s_big && s_big <= binomial(r + n, n));
    RegularityResult { n, s, r, reg: r + 1 }
}

/// n * floor(s^(1/n)) >= n + r, with r from the regularity bracketing?
pub fn check_ineq(n: u64, s: u64) -> bool {
    let root = nth_root_floor_u64(s, n as u32).expect("n >= 1");
    let r = regularity_general_points(n, s).r;
    n * root >= n + r
}

/// All s in [s_lo, s_hi] where `check_ineq` fails, ascending.
pub fn scan_ineq(n: u64, s_lo: u64, s_hi: u64) -> Vec<u64> {
    (s_lo..=s_hi).filter(|&s| !check_ineq(n, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_spot_values() {
        assert_eq!(binomial(9, 3), Nat::from(84u32));
        assert_eq!(binomial(10, 5), Nat::from(252u32));
        assert_eq!(binomial(5, 0), Nat::one());
        assert_eq!(binomial(3, 5), Nat::zero());
    }

    #[test]
    fn nth_root_floor_examples() {
        assert_eq!(nth_root_floor_u64(80, 4).unwrap(), 2);
        assert_eq!(nth_root_floor_u64(81, 4).unwrap(), 3);
        assert_eq!(nth_root_floor_u64(16, 2).unwrap(), 4);
        assert_eq!(nth_root_floor_u64(1, 7).unwrap(), 1);
        assert!(integer_nth_root_floor(&Nat::from(5u32), 0).is_err());
    }

    #[test]
    fn lemma_part1_cases() {
        assert!(check_lemma_part1(4, 3)); // 64 <= 84
        assert!(!check_lemma_part1(3, 3)); // 27 > 20
        assert!(!check_lemma_part1(3, 4)); // 81 > 70
    }

    #[test]
    fn lemma_part2_cases() {
        assert!(check_lemma_part2(5)); // 243 <= 252
        assert!(!check_lemma_part2(4)); // 81 > 70
        assert!(!check_lemma_part2(1)); // 3 > 2
    }

    #[test]
    fn regularity_examples() {
        let r = regularity_general_points(4, 16);
        assert_eq!((r.r, r.reg), (3, 4)); // C(6,4)=15 < 16 <= C(7,4)=35
        let r = regularity_general_points(2, 5);
        assert_eq!((r.r, r.reg), (2, 3)); // C(3,2)=3 < 5 <= C(4,2)=6
        for n in 1..8 {
            let r = regularity_general_points(n, 1);
            assert_eq!((r.r, r.reg), (0, 1));
        }
    }

    #[test]
    fn regularity_bracketing_invariant() {
        for n in 1..=5u64 {
            for s in 1..=300u64 {
                let res = regularity_general_points(n, s);
                let s_big = Nat::from(s);
                if res.r > 0 {
                    assert!(binomial(res.r - 1 + n, n) < s_big, "lower bracket at n={n} s={s}");
                }
                assert!(s_big <= binomial(res.r + n, n), "upper bracket at n={n} s={s}");
            }
        }
    }

    #[test]
    fn ineq_examples() {
        assert!(check_ineq(4, 16)); // 8 >= 7
        assert!(check_ineq(4, 70)); // 8 >= 8
        assert!(!check_ineq(4, 71)); // 8 < 9
    }

    #[test]
    fn scan_examples() {
        assert!(scan_ineq(4, 16, 70).is_empty());
        assert_eq!(scan_ineq(4, 16, 80), (71..=80).collect::<Vec<_>>());
        assert!(scan_ineq(4, 16, 16).is_empty());
    }
}
