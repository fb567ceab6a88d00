//! Initial degrees of symbolic powers and the bound pipelines built on them.
//!
//! For an ideal of general points, the degree-d slice of I^(m) is exactly the
//! linear system L_n(d; m^(x s)), so alpha(I^(m)) is found by scanning the
//! degree upward until the emptiness certificate fails. All ratios and
//! thresholds are exact rationals; comparisons at equality (alpha/m against
//! (alpha+n-1)/n at the boundary) must not depend on rounding.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::comb::{binomial, nth_root_floor_u64, regularity_general_points};
use crate::error::{Error, Result};
use crate::systems::{
    derive_seed, is_empty_certified, Certification, EmptinessCertificate, LinearSystemSpec,
    SearchConfig,
};

/// alpha(I^(m)) for one configuration, with the per-degree certificates of
/// the search. Every degree below `alpha` in the scanned range is certified
/// empty; the certificate at `alpha` is a nonemptiness witness.
#[derive(Debug, Clone)]
pub struct AlphaResult {
    pub n: u32,
    pub s: usize,
    pub m: u32,
    pub alpha: i64,
    pub search_cap: i64,
    pub certificates: Vec<EmptinessCertificate>,
}

impl AlphaResult {
    /// Exact alpha(I^(m)) / m.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(BigInt::from(self.alpha), BigInt::from(self.m))
    }
}

/// Smallest d with C(d+n, n) > s; the count bound gives alpha(I) <= d0.
fn count_bound_degree(n: u32, s: usize) -> i64 {
    let s_big = num_bigint::BigUint::from(s);
    let mut d = 0i64;
    while binomial(d as u64 + n as u64, n as u64) <= s_big {
        d += 1;
    }
    d
}

/// Computes alpha(I^(m)) for s very general points in P^n by ascending
/// degree scan from m. The scan is capped at m * d0 where d0 is the count
/// bound on alpha(I); alpha(I^(m)) <= m * alpha(I) (powers of a minimal
/// degree form), so reaching the cap with every degree certified empty
/// signals a bug and is reported as an error.
pub fn alpha_symbolic(n: u32, s: usize, m: u32, config: &SearchConfig) -> Result<AlphaResult> {
    assert!(n >= 1 && s >= 1 && m >= 1);
    let cap = m as i64 * count_bound_degree(n, s);
    let mut certificates = Vec::new();
    for d in m as i64..=cap {
        let spec = LinearSystemSpec::uniform(n, d, m, s)?;
        let degree_config = config.with_seed(derive_seed(config.seed, d as u64));
        let cert = is_empty_certified(&spec, &degree_config)?;
        let empty = cert.certification.is_empty_certificate();
        certificates.push(cert);
        if !empty {
            return Ok(AlphaResult { n, s, m, alpha: d, search_cap: cap, certificates });
        }
    }
    Err(Error::AlphaCapEmpty { cap, context: format!("alpha(I^({m})) for {s} points in P^{n}") })
}

/// One sampled ratio alpha(I^(m)) / m.
#[derive(Debug, Clone)]
pub struct AlphaSample {
    pub m: u32,
    pub alpha: i64,
    pub ratio: BigRational,
}

/// Sampled upper estimates and theorem lower bounds for the Waldschmidt
/// constant of s very general points in P^n.
#[derive(Debug, Clone)]
pub struct WaldschmidtReport {
    pub n: u32,
    pub s: usize,
    pub samples: Vec<AlphaSample>,
    /// min over samples of alpha(I^(m))/m; an upper bound since the
    /// Waldschmidt constant is the infimum of the ratios.
    pub upper_bound: BigRational,
    /// floor(s^(1/n)), the certified lower bound.
    pub floor_lower: u64,
    /// (alpha(I) + n - 1) / n, the conjectured lower bound.
    pub chudnovsky_threshold: BigRational,
    pub results: Vec<AlphaResult>,
}

pub fn waldschmidt_report(
    n: u32,
    s: usize,
    m_max: u32,
    config: &SearchConfig,
) -> Result<WaldschmidtReport> {
    assert!(m_max >= 1);
    let mut samples = Vec::new();
    let mut results = Vec::new();
    for m in 1..=m_max {
        let res = alpha_symbolic(n, s, m, config)?;
        samples.push(AlphaSample { m, alpha: res.alpha, ratio: res.ratio() });
        results.push(res);
    }
    let upper_bound = samples.iter().map(|s| s.ratio.clone()).min().expect("m_max >= 1");
    let alpha1 = samples[0].alpha;
    let chudnovsky_threshold =
        BigRational::new(BigInt::from(alpha1 + n as i64 - 1), BigInt::from(n));
    let floor_lower = nth_root_floor_u64(s as u64, n)?;
    Ok(WaldschmidtReport { n, s, samples, upper_bound, floor_lower, chudnovsky_threshold, results })
}

/// Verdict of the Chudnovsky inequality alpha(I^(m))/m >= (alpha(I)+n-1)/n
/// for one m.
#[derive(Debug, Clone)]
pub struct ChudnovskyRecord {
    pub n: u32,
    pub s: usize,
    pub m: u32,
    pub alpha_m: i64,
    pub alpha_1: i64,
    pub ratio: BigRational,
    pub threshold: BigRational,
    pub holds: bool,
}

pub fn chudnovsky_check(
    n: u32,
    s: usize,
    m_list: &[u32],
    config: &SearchConfig,
) -> Result<Vec<ChudnovskyRecord>> {
    assert!(!m_list.is_empty());
    let alpha_1 = alpha_symbolic(n, s, 1, config)?.alpha;
    let threshold = BigRational::new(BigInt::from(alpha_1 + n as i64 - 1), BigInt::from(n));
    let mut records = Vec::new();
    for &m in m_list {
        let res = alpha_symbolic(n, s, m, config)?;
        let ratio = res.ratio();
        records.push(ChudnovskyRecord {
            n,
            s,
            m,
            alpha_m: res.alpha,
            alpha_1,
            holds: ratio >= threshold,
            ratio,
            threshold: threshold.clone(),
        });
    }
    Ok(records)
}

/// Verdict of the sufficient numeric criterion for the containment of the
/// nm-th symbolic power in M^((n-1)m) I^m: alpha(I^(nm)) >= (n-1)m + m reg(I).
#[derive(Debug, Clone)]
pub struct ContainmentVerdict {
    pub n: u32,
    pub s: usize,
    pub m: u32,
    pub reg: u64,
    pub required: i64,
    pub alpha_nm: i64,
    pub holds: bool,
    pub alpha_detail: AlphaResult,
}

pub fn containment_criterion_check(
    n: u32,
    s: usize,
    m: u32,
    config: &SearchConfig,
) -> Result<ContainmentVerdict> {
    assert!(n >= 2 && s >= 1 && m >= 1);
    let reg = regularity_general_points(n as u64, s as u64).reg;
    let required = (n as i64 - 1) * m as i64 + m as i64 * reg as i64;
    let alpha_detail = alpha_symbolic(n, s, n * m, config)?;
    Ok(ContainmentVerdict {
        n,
        s,
        m,
        reg,
        required,
        alpha_nm: alpha_detail.alpha,
        holds: alpha_detail.alpha >= required,
        alpha_detail,
    })
}

/// Certifies one instance of the floor bound: the system of degree km-1 with
/// k^n points of multiplicity m must be empty.
pub fn verify_floor_instance(
    n: u32,
    k: u32,
    m: u32,
    config: &SearchConfig,
) -> Result<EmptinessCertificate> {
    assert!(n >= 1 && k >= 1 && m >= 1);
    let s = (k as u64)
        .checked_pow(n)
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| Error::SystemTooLarge(format!("k^n = {k}^{n}")))?;
    let spec = LinearSystemSpec::uniform(n, k as i64 * m as i64 - 1, m, s)?;
    is_empty_certified(&spec, config)
}

/// The two emptiness certificates behind the 9/4 bound for 71 points in P^4:
/// the main system of degree 9m-1 with 71 points of multiplicity 4m, and the
/// intermediate system with four 8m-fold and seven 4m-fold points.
#[derive(Debug, Clone)]
pub struct Lemma71Report {
    pub m: u32,
    pub main: EmptinessCertificate,
    pub intermediate: EmptinessCertificate,
}

impl Lemma71Report {
    pub fn both_certified(&self) -> bool {
        self.main.certification == Certification::CertifiedEmpty
            && self.intermediate.certification == Certification::CertifiedEmpty
    }
}

pub fn verify_71_lemma(m: u32, config: &SearchConfig) -> Result<Lemma71Report> {
    assert!(m >= 1);
    let d = 9 * m as i64 - 1;
    let main_spec = LinearSystemSpec::uniform(4, d, 4 * m, 71)?;
    let inter_spec = LinearSystemSpec::new(4, d, [vec![8 * m; 4], vec![4 * m; 7]].concat())?;
    let main = is_empty_certified(&main_spec, config)?;
    let intermediate =
        is_empty_certified(&inter_spec, &config.with_seed(derive_seed(config.seed, 0x1A)))?;
    Ok(Lemma71Report { m, main, intermediate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn alpha_chain_for_five_plane_points() {
        for (m, expect) in [(1u32, 2i64), (2, 4), (3, 6)] {
            let res = alpha_symbolic(2, 5, m, &config()).unwrap();
            assert_eq!(res.alpha, expect, "alpha(I^({m}))");
            // every scanned degree below alpha certified empty
            for cert in &res.certificates[..res.certificates.len() - 1] {
                assert_eq!(cert.certification, Certification::CertifiedEmpty);
            }
            assert!(!res
                .certificates
                .last()
                .unwrap()
                .certification
                .is_empty_certificate());
        }
    }

    #[test]
    fn alpha_for_single_point_is_m() {
        for n in [2u32, 3, 4] {
            for m in [1u32, 2, 5] {
                let res = alpha_symbolic(n, 1, m, &config()).unwrap();
                assert_eq!(res.alpha, m as i64);
            }
        }
    }

    #[test]
    fn report_for_four_plane_points() {
        let report = waldschmidt_report(2, 4, 2, &config()).unwrap();
        assert_eq!(report.floor_lower, 2);
        for s in &report.samples {
            assert_eq!(s.ratio, BigRational::from(BigInt::from(2)));
        }
        assert_eq!(report.upper_bound, BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn report_for_sixteen_points_in_p4() {
        let report = waldschmidt_report(4, 16, 1, &config()).unwrap();
        assert_eq!(report.floor_lower, 2);
        assert_eq!(report.samples[0].alpha, 3);
        assert_eq!(
            report.chudnovsky_threshold,
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
    }

    #[test]
    fn chudnovsky_for_five_plane_points() {
        let records = chudnovsky_check(2, 5, &[1, 2, 3], &config()).unwrap();
        for r in &records {
            assert!(r.holds, "m = {}", r.m);
            assert_eq!(r.ratio, BigRational::from(BigInt::from(2)));
            assert_eq!(r.threshold, BigRational::new(BigInt::from(3), BigInt::from(2)));
        }
    }

    #[test]
    fn chudnovsky_equality_for_single_point() {
        for n in [2u32, 3] {
            let records = chudnovsky_check(n, 1, &[3], &config()).unwrap();
            assert!(records[0].holds);
            assert_eq!(records[0].ratio, BigRational::from(BigInt::from(1)));
            assert_eq!(records[0].threshold, BigRational::from(BigInt::from(1)));
        }
    }

    #[test]
    fn containment_for_four_plane_points() {
        let v = containment_criterion_check(2, 4, 1, &config()).unwrap();
        assert_eq!(v.reg, 3); // r = 2: C(3,2)=3 < 4 <= C(4,2)=6
        assert_eq!(v.required, 4);
        assert_eq!(v.alpha_nm, 4); // (2m-1; m^(x4)) empty at m=2, count 15 > 12 at d=4
        assert!(v.holds);
    }

    #[test]
    fn floor_instances_small() {
        for (n, k, m) in [(2u32, 2u32, 1u32), (2, 3, 1), (3, 2, 1)] {
            let cert = verify_floor_instance(n, k, m, &config()).unwrap();
            assert_eq!(cert.certification, Certification::CertifiedEmpty, "({n},{k},{m})");
        }
    }

    #[test]
    fn floor_instance_evidence_shape() {
        // Conics through 9 general points: 6 cols, 9 conds, rank 6.
        let cert = verify_floor_instance(2, 3, 1, &config()).unwrap();
        assert_eq!(cert.trials[0].cols, 6);
        assert_eq!(cert.trials[0].conds, 9);
        assert_eq!(cert.trials[0].rank, 6);
    }

    #[test]
    fn subadditivity_on_five_point_samples() {
        let alphas: Vec<i64> = (1..=4u32)
            .map(|m| alpha_symbolic(2, 5, m, &config()).unwrap().alpha)
            .collect();
        for a in 1..=2usize {
            for b in a..alphas.len() {
                if a + b <= alphas.len() {
                    assert!(alphas[a + b - 1] <= alphas[a - 1] + alphas[b - 1]);
                }
            }
        }
    }
}
