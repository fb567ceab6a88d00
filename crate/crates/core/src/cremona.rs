//! Standard Cremona reduction calculus for fat-point linear systems in P^n.
//!
//! The transformation based at n+1 points sends (d; m_1, ..., m_s) to
//! (d+k; m_i+k on the chosen points) with k = (n-1)d - (m_1 + ... + m_(n+1)),
//! which at n = 2 specializes to the classical quadratic transformation
//! k = d - m1 - m2 - m3. Steps are only taken when every transformed
//! multiplicity and the transformed degree stay nonnegative. The formula is
//! not trusted: `validate_dimension_preservation` cross-checks every step
//! against the interpolation oracle, and a single dimension mismatch fails
//! the build.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::systems::{
    derive_seed, format_mults, generic_dimension, rng_from_seed, LinearSystemSpec, SearchConfig,
};

/// One Cremona step. `base_indices` are the positions (in `before.mults`) of
/// the n+1 multiplicities the transformation was based at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub before: LinearSystemSpec,
    pub after: LinearSystemSpec,
    pub k: i64,
    pub base_indices: Vec<usize>,
}

/// Applies the transformation based at the given n+1 point indices.
pub fn cremona_reduce_at(spec: &LinearSystemSpec, indices: &[usize]) -> Result<ReductionStep> {
    let base = spec.n as usize + 1;
    if indices.len() != base {
        return Err(Error::CremonaInapplicable(format!(
            "need exactly {base} base indices, got {}",
            indices.len()
        )));
    }
    let mut seen = vec![false; spec.mults.len()];
    for &i in indices {
        if i >= spec.mults.len() || seen[i] {
            return Err(Error::CremonaInapplicable(format!("bad base index {i}")));
        }
        seen[i] = true;
    }
    let sum: i64 = indices.iter().map(|&i| spec.mults[i] as i64).sum();
    let k = (spec.n as i64 - 1) * spec.d - sum;
    let new_d = spec.d + k;
    if new_d < 0 {
        return Err(Error::CremonaInapplicable(format!(
            "transformed degree {new_d} negative for {spec}"
        )));
    }
    let mut new_mults: Vec<i64> = spec.mults.iter().map(|&m| m as i64).collect();
    for &i in indices {
        new_mults[i] += k;
        if new_mults[i] < 0 {
            return Err(Error::CremonaInapplicable(format!(
                "transformed multiplicity {} negative for {spec}",
                new_mults[i]
            )));
        }
    }
    let after_mults: Vec<u32> = new_mults.iter().filter(|&&m| m > 0).map(|&m| m as u32).collect();
    let after = LinearSystemSpec::new(spec.n, new_d, after_mults)?;
    let mut base_indices = indices.to_vec();
    base_indices.sort_unstable();
    Ok(ReductionStep { before: spec.clone(), after, k, base_indices })
}

/// Applies the transformation based at the n+1 largest multiplicities (ties
/// broken by original index, so chains are deterministic).
pub fn cremona_reduce(spec: &LinearSystemSpec) -> Result<ReductionStep> {
    let base = spec.n as usize + 1;
    if spec.mults.len() < base {
        return Err(Error::CremonaInapplicable(format!(
            "{spec} has fewer than n+1 = {base} points"
        )));
    }
    let mut order: Vec<usize> = (0..spec.mults.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(spec.mults[i]), i));
    cremona_reduce_at(spec, &order[..base])
}

/// A maximal chain of strictly degree-decreasing steps.
#[derive(Debug, Clone)]
pub struct ReductionChain {
    pub steps: Vec<ReductionStep>,
    pub terminal: LinearSystemSpec,
}

impl fmt::Display for ReductionChain {
    /// One `(d; m-list)` line per system in the chain.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "({}; {})", step.before.d, format_mults(&step.before.mults))?;
        }
        write!(f, "({}; {})", self.terminal.d, format_mults(&self.terminal.mults))
    }
}

/// Iterates `cremona_reduce` while it is applicable and strictly decreases
/// the degree (k < 0). Terminates because the degree is a nonnegative
/// integer that shrinks at every step.
pub fn reduce_fully(spec: &LinearSystemSpec) -> ReductionChain {
    let mut steps = Vec::new();
    let mut current = spec.clone();
    loop {
        match cremona_reduce(&current) {
            Ok(step) if step.k < 0 => {
                current = step.after.clone();
                steps.push(step);
            }
            _ => break,
        }
    }
    ReductionChain { steps, terminal: current }
}

/// A validated step: the interpolation oracle computed both sides.
#[derive(Debug, Clone)]
pub struct CheckedStep {
    pub step: ReductionStep,
    pub dim_before: usize,
    pub dim_after: usize,
    pub seed_before: u64,
    pub seed_after: u64,
}

/// Outcome of the randomized dimension-preservation scan.
#[derive(Debug, Clone)]
pub struct CremonaScan {
    pub attempts: usize,
    pub checked: Vec<CheckedStep>,
    pub mismatches: Vec<CheckedStep>,
}

/// Draws random specs in P^2, P^3, P^4 (d <= 12, s <= 12, multiplicities
/// <= 5) until `count` of them admit an applicable strictly-reducing step,
/// and verifies for each that the affine dimension is preserved, computing
/// both sides with the interpolation oracle at independently sampled point
/// sets. Any mismatch lands in `mismatches` and indicates a wrong
/// transformation formula.
pub fn validate_dimension_preservation(count: usize, config: &SearchConfig) -> Result<CremonaScan> {
    let field = config.field()?;
    let mut rng = rng_from_seed(derive_seed(config.seed, 0xC3E_A0A));
    let mut checked = Vec::with_capacity(count);
    let mut mismatches = Vec::new();
    let mut attempts = 0usize;
    let max_attempts = count.saturating_mul(10_000).max(100_000);
    while checked.len() < count {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::InvalidArgument(format!(
                "could not find {count} applicable specs in {max_attempts} attempts"
            )));
        }
        let n: u32 = rng.gen_range(2..=4);
        let s: usize = rng.gen_range(n as usize + 1..=12);
        let d: i64 = rng.gen_range(1..=12);
        let mults: Vec<u32> = (0..s).map(|_| rng.gen_range(1..=5)).collect();
        let spec = LinearSystemSpec::new(n, d, mults)?;
        let step = match cremona_reduce(&spec) {
            Ok(step) if step.k < 0 => step,
            _ => continue,
        };
        let seed_before = derive_seed(config.seed, 2 * attempts as u64);
        let seed_after = derive_seed(config.seed, 2 * attempts as u64 + 1);
        let before = generic_dimension(&step.before, seed_before, &field)?;
        let after = generic_dimension(&step.after, seed_after, &field)?;
        let item = CheckedStep {
            step,
            dim_before: before.affine_dim,
            dim_after: after.affine_dim,
            seed_before,
            seed_after,
        };
        if item.dim_before != item.dim_after {
            mismatches.push(item.clone());
        }
        checked.push(item);
    }
    Ok(CremonaScan { attempts, checked, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::systems::sample_points;

    fn spec(n: u32, d: i64, mults: &[u32]) -> LinearSystemSpec {
        LinearSystemSpec::new(n, d, mults.to_vec()).unwrap()
    }

    #[test]
    fn three_double_points_reduce_to_plain_conics() {
        let step = cremona_reduce(&spec(2, 4, &[2, 2, 2])).unwrap();
        assert_eq!(step.k, -2);
        assert_eq!(step.after, spec(2, 2, &[]));
    }

    #[test]
    fn fixed_point_of_transformation() {
        let step = cremona_reduce(&spec(3, 2, &[1, 1, 1, 1])).unwrap();
        assert_eq!(step.k, 0);
        assert_eq!(step.after, spec(3, 2, &[1, 1, 1, 1]));
    }

    #[test]
    fn mixed_multiplicities_reduce() {
        let step = cremona_reduce(&spec(2, 5, &[3, 2, 2])).unwrap();
        assert_eq!(step.k, -2);
        assert_eq!(step.after, spec(2, 3, &[1]));
    }

    #[test]
    fn five_simple_points_take_one_step() {
        let step = cremona_reduce(&spec(2, 2, &[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(step.k, -1);
        assert_eq!(step.after, spec(2, 1, &[1, 1]));
    }

    #[test]
    fn inapplicable_when_multiplicity_would_go_negative() {
        // k = 1 - 3 = -2 against simple points.
        let err = cremona_reduce(&spec(2, 1, &[1, 1, 1])).unwrap_err();
        assert!(matches!(err, Error::CremonaInapplicable(_)));
    }

    #[test]
    fn inapplicable_with_too_few_points() {
        let err = cremona_reduce(&spec(2, 4, &[2, 2])).unwrap_err();
        assert!(matches!(err, Error::CremonaInapplicable(_)));
    }

    #[test]
    fn involution_at_fixed_indices() {
        let original = spec(2, 7, &[3, 3, 2, 1]);
        let step = cremona_reduce_at(&original, &[0, 1, 2]).unwrap();
        assert_eq!(step.k, -1);
        // No multiplicity dropped to zero, so the same indices invert it.
        assert_eq!(step.after.mults.len(), original.mults.len());
        let back = cremona_reduce_at(&step.after, &[0, 1, 2]).unwrap();
        assert_eq!(back.k, 1);
        assert_eq!(back.after, original);
    }

    #[test]
    fn full_reduction_chain_terminates() {
        let chain = reduce_fully(&spec(2, 4, &[2, 2, 2]));
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(chain.terminal, spec(2, 2, &[]));
        let rendered = chain.to_string();
        assert_eq!(rendered, "(4; 2x3)\n(2; -)");
    }

    #[test]
    fn worked_case_dimensions_agree() {
        let field = PrimeField::default();
        let before = spec(2, 4, &[2, 2, 2]);
        let step = cremona_reduce(&before).unwrap();
        let pts = sample_points(2, 3, 71, &field).unwrap();
        let dim_before = crate::systems::system_dimension(&before, &pts).unwrap();
        let dim_after = generic_dimension(&step.after, 72, &field).unwrap();
        assert_eq!(dim_before.affine_dim, 6);
        assert_eq!(dim_after.affine_dim, 6);
    }

    #[test]
    fn small_dimension_preservation_scan() {
        let scan = validate_dimension_preservation(25, &SearchConfig::default()).unwrap();
        assert_eq!(scan.checked.len(), 25);
        assert!(
            scan.mismatches.is_empty(),
            "dimension mismatch: {:?}",
            scan.mismatches.first()
        );
    }
}
