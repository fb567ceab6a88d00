//! Arithmetic in a fixed odd prime field F_p with p fitting in a machine word.
//!
//! The default modulus is the Mersenne prime 2^61 - 1, large enough that a
//! random interpolation matrix attains the generic rank except with
//! negligible probability, and with a cheap reduction in the hot elimination
//! loops. Any other odd word-sized prime can be used instead; the generic
//! path reduces through `u128`.

use crate::error::{Error, Result};

/// The default modulus, 2^61 - 1.
pub const MERSENNE61: u64 = (1u64 << 61) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    mersenne61: bool,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: MERSENNE61, mersenne61: true }
    }
}

impl PrimeField {
    /// Builds the field, verifying that `p` is an odd prime.
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p, mersenne61: p == MERSENNE61 })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary 128-bit value.
    #[inline]
    pub fn reduce_u128(&self, x: u128) -> u64 {
        if self.mersenne61 {
            reduce_mersenne61(x)
        } else {
            (x % self.p as u128) as u64
        }
    }

    #[inline]
    pub fn reduce_u64(&self, x: u64) -> u64 {
        if x >= self.p {
            x % self.p
        } else {
            x
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b; // both < p <= 2^63, no overflow
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.mersenne61 {
            reduce_mersenne61(a as u128 * b as u128)
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    /// a - m*b, the elimination kernel.
    #[inline]
    pub fn submul(&self, a: u64, m: u64, b: u64) -> u64 {
        self.sub(a, self.mul(m, b))
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base = self.reduce_u64(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0 && a < self.p);
        self.pow(a, self.p - 2)
    }
}

#[inline]
fn reduce_mersenne61(x: u128) -> u64 {
    const P: u64 = MERSENNE61;
    // x < 2^122: fold the high bits twice, each fold adds at most 2^61.
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let s = lo + (hi & P) + (hi >> 61);
    let s = (s & P) + (s >> 61);
    if s >= P {
        s - P
    } else {
        s
    }
}

/// Deterministic Miller-Rabin for u64 moduli.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This witness set decides primality for all n < 3.3 * 10^24.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_modulus_is_prime() {
        assert!(is_prime_u64(MERSENNE61));
        assert_eq!(PrimeField::default().modulus(), MERSENNE61);
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new((1 << 61) - 3).is_err());
        assert!(PrimeField::new(91).is_err()); // 7 * 13
    }

    #[test]
    fn small_prime_arithmetic() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.add(100, 100), 99);
        assert_eq!(f.sub(3, 7), 97);
        assert_eq!(f.mul(50, 51), 50 * 51 % 101);
        assert_eq!(f.mul(7, f.inv(7)), 1);
        assert_eq!(f.pow(2, 100), 1); // Fermat
    }

    #[test]
    fn mersenne_reduction_matches_generic() {
        let f = PrimeField::default();
        let mut x: u64 = 0x1234_5678_9abc_def0 % MERSENNE61;
        let mut y: u64 = 0x0fed_cba9_8765_4321 % MERSENNE61;
        for _ in 0..1000 {
            let expect = ((x as u128 * y as u128) % MERSENNE61 as u128) as u64;
            assert_eq!(f.mul(x, y), expect);
            x = f.add(f.mul(x, 3), 1);
            y = f.add(f.mul(y, 5), 2);
        }
    }

    #[test]
    fn inverse_roundtrip_on_default_field() {
        let f = PrimeField::default();
        for a in [1u64, 2, 12345, MERSENNE61 - 1, 1 << 60] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
