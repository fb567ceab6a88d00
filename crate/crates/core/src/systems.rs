//! Linear systems of fat points: interpolation matrices at random point sets
//! and dimension/emptiness decisions with explicit certification semantics.
//!
//! "Very general points" are modeled by uniform random points over F_p with a
//! recorded seed. Rank at a specialization never exceeds the generic rank, so
//! full column rank at one random point set certifies generic emptiness
//! (`CertifiedEmpty`), while a rank deficit is evidence only
//! (`EmpiricalNonEmpty`). A positive virtual count certifies nonemptiness
//! unconditionally (`NonEmptyByCount`).

use std::collections::HashSet;
use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::comb::binomial;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::{EchelonBuilder, FieldMatrix};

/// A target system L_n(d; m_1, ..., m_s): forms of degree d on P^n with
/// multiplicity at least m_i at the i-th point. Negative degree encodes the
/// trivially empty system (Cremona chains can produce it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystemSpec {
    pub n: u32,
    pub d: i64,
    pub mults: Vec<u32>,
}

impl LinearSystemSpec {
    pub fn new(n: u32, d: i64, mults: Vec<u32>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("ambient dimension n must be >= 1".into()));
        }
        if mults.iter().any(|&m| m == 0) {
            return Err(Error::InvalidArgument("multiplicities must be >= 1".into()));
        }
        Ok(LinearSystemSpec { n, d, mults })
    }

    /// The homogeneous system (d; m^(x s)).
    pub fn uniform(n: u32, d: i64, m: u32, s: usize) -> Result<Self> {
        Self::new(n, d, vec![m; s])
    }

    pub fn points(&self) -> usize {
        self.mults.len()
    }

    /// Number of degree-d monomials, C(d+n, n); 0 for negative degree.
    pub fn cols(&self) -> Result<usize> {
        monomial_count(self.n, self.d)
    }

    /// Total condition count, sum of C(m_i - 1 + n, n).
    pub fn conds(&self) -> Result<usize> {
        let mut acc = 0usize;
        for &m in &self.mults {
            let c: usize = to_usize(binomial(m as u64 - 1 + self.n as u64, self.n as u64))?;
            acc = acc.checked_add(c).ok_or_else(|| {
                Error::SystemTooLarge(format!("condition count for {self}"))
            })?;
        }
        Ok(acc)
    }

    /// Virtual dimension C(d+n, n) - sum C(m_i-1+n, n), exact and signed.
    pub fn expected_dimension(&self) -> BigInt {
        let cols: BigInt = if self.d < 0 {
            BigInt::from(0)
        } else {
            binomial(self.d as u64 + self.n as u64, self.n as u64).into()
        };
        let conds: BigInt = self
            .mults
            .iter()
            .map(|&m| BigInt::from(binomial(m as u64 - 1 + self.n as u64, self.n as u64)))
            .sum();
        cols - conds
    }
}

impl fmt::Display for LinearSystemSpec {
    /// Renders as `L_n(d; AxB,...)` with run-length grouped multiplicities.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{}({}; {})", self.n, self.d, format_mults(&self.mults))
    }
}

/// Run-length groups of equal consecutive multiplicities in `AxB` syntax.
pub fn format_mults(mults: &[u32]) -> String {
    if mults.is_empty() {
        return "-".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < mults.len() {
        let m = mults[i];
        let mut j = i;
        while j < mults.len() && mults[j] == m {
            j += 1;
        }
        if j - i == 1 {
            parts.push(format!("{m}"));
        } else {
            parts.push(format!("{}x{}", m, j - i));
        }
        i = j;
    }
    parts.join(",")
}

/// Parses the `AxB` multiplicity syntax: comma-separated items, each either a
/// single multiplicity `A` or `AxB` for B points of multiplicity A.
pub fn parse_mults(text: &str) -> Result<Vec<u32>> {
    let mut mults = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(Error::InvalidArgument(format!("empty item in multiplicity list '{text}'")));
        }
        let (m, count) = match item.split_once('x') {
            None => (item, "1"),
            Some((m, c)) => (m, c),
        };
        let m: u32 = m
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad multiplicity '{item}'")))?;
        let count: usize = count
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad point count in '{item}'")))?;
        if m == 0 || count == 0 {
            return Err(Error::InvalidArgument(format!("zero multiplicity or count in '{item}'")));
        }
        mults.extend(std::iter::repeat(m).take(count));
    }
    Ok(mults)
}

/// s points of P^n over F_p in the chart x_n = 1, plus the seed that
/// generated them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub n: u32,
    pub prime: u64,
    pub seed: u64,
    points: Vec<Vec<u64>>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[u64] {
        &self.points[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u64]> {
        self.points.iter().map(|p| p.as_slice())
    }
}

/// SplitMix64 finalizer; the basis of all seed derivation.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from a base seed and a tag. Deterministic and stable;
/// every report records the exact seed it used, so any certificate can be
/// reproduced from the record alone.
pub fn derive_seed(base: u64, tag: u64) -> u64 {
    mix64(base ^ mix64(tag))
}

/// Seeds a ChaCha stream from a single word (SplitMix64 expansion).
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    let mut z = seed;
    for chunk in key.chunks_mut(8) {
        z = mix64(z);
        chunk.copy_from_slice(&z.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Samples s distinct points in the chart x_n = 1, coordinates uniform in
/// F_p, deterministically in the seed. Distinctness is enforced by
/// resampling.
pub fn sample_points(n: u32, s: usize, seed: u64, field: &PrimeField) -> Result<PointSet> {
    let p = field.modulus();
    // The chart holds p^n points; refuse when it cannot host s distinct ones.
    let mut capacity = 1u128;
    for _ in 0..n {
        capacity = capacity.saturating_mul(p as u128);
        if capacity >= s as u128 {
            break;
        }
    }
    if capacity < s as u128 {
        return Err(Error::FieldExhausted { prime: p, n, wanted: s });
    }
    let mut rng = rng_from_seed(seed);
    let mut seen = HashSet::with_capacity(s);
    let mut points = Vec::with_capacity(s);
    while points.len() < s {
        let mut pt: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        pt.push(1);
        if seen.insert(pt.clone()) {
            points.push(pt);
        }
    }
    Ok(PointSet { n, prime: p, seed, points })
}

/// All exponent tuples (a_0, ..., a_n) with sum d, in graded-lexicographic
/// order (x_0^d first). The fixed order makes kernel vectors and matrix
/// dumps reproducible.
pub fn monomials(n: u32, d: u32) -> Vec<Vec<u32>> {
    let len = n as usize + 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fill_monomials(&mut out, &mut cur, 0, d);
    out
}

fn fill_monomials(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, idx: usize, remaining: u32) {
    if idx + 1 == cur.len() {
        cur[idx] = remaining;
        out.push(cur.clone());
        return;
    }
    for a in (0..=remaining).rev() {
        cur[idx] = a;
        fill_monomials(out, cur, idx + 1, remaining - a);
    }
}

/// C(d+n, n) as a usize; 0 for negative degree.
pub fn monomial_count(n: u32, d: i64) -> Result<usize> {
    if d < 0 {
        return Ok(0);
    }
    to_usize(binomial(d as u64 + n as u64, n as u64))
}

fn to_usize(x: num_bigint::BigUint) -> Result<usize> {
    usize::try_from(&x).map_err(|_| Error::SystemTooLarge(format!("{x} exceeds usize")))
}

/// Derivative condition rows for one fat point.
///
/// A point of multiplicity m imposes vanishing of all partials of order
/// < m. In the chart x_n = 1 the row for the derivative multi-index beta
/// has, at monomial alpha, the entry prod_i fall(a_i, b_i) q_i^(a_i - b_i)
/// (zero when some b_i > a_i) where fall is the falling factorial. This is
/// equivalent to the homogeneous order-of-vanishing conditions as long as
/// p > d, which is enforced.
pub fn condition_rows(
    field: &PrimeField,
    point: &[u64],
    m: u32,
    n: u32,
    d: u32,
) -> Result<Vec<Vec<u64>>> {
    if field.modulus() <= d as u64 {
        return Err(Error::PrimeTooSmall { prime: field.modulus(), degree: d as i64 });
    }
    let monos = monomials(n, d);
    let builder = RowBuilder::new(field, &monos, n, d);
    Ok(builder.rows_for_point(point, m))
}

/// Precomputed monomial basis shared across the points of one system.
struct RowBuilder<'a> {
    field: &'a PrimeField,
    monos: &'a [Vec<u32>],
    n: usize,
    d: u32,
}

impl<'a> RowBuilder<'a> {
    fn new(field: &'a PrimeField, monos: &'a [Vec<u32>], n: u32, d: u32) -> Self {
        RowBuilder { field, monos, n: n as usize, d }
    }

    /// All C(m-1+n, n) rows for one point, derivative order ascending.
    fn rows_for_point(&self, point: &[u64], m: u32) -> Vec<Vec<u64>> {
        let f = self.field;
        let d = self.d as usize;
        // table[i][a][b] = fall(a, b) * q_i^(a-b), zero when b > a.
        let mut table = vec![vec![vec![0u64; m as usize]; d + 1]; self.n];
        for (i, ti) in table.iter_mut().enumerate() {
            let q = point[i];
            let mut powers = vec![1u64; d + 1];
            for e in 1..=d {
                powers[e] = f.mul(powers[e - 1], q);
            }
            for a in 0..=d {
                let mut fall = 1u64; // falling factorial a (a-1) ... (a-b+1)
                for b in 0..(m as usize).min(a + 1) {
                    if b > 0 {
                        fall = f.mul(fall, f.reduce_u64((a - b + 1) as u64));
                    }
                    ti[a][b] = f.mul(fall, powers[a - b]);
                }
            }
        }
        let mut rows = Vec::new();
        let mut beta = vec![0u32; self.n];
        for order in 0..m {
            self.emit_rows(&table, &mut beta, 0, order, &mut rows);
        }
        rows
    }

    fn emit_rows(
        &self,
        table: &[Vec<Vec<u64>>],
        beta: &mut Vec<u32>,
        idx: usize,
        remaining: u32,
        rows: &mut Vec<Vec<u64>>,
    ) {
        if idx + 1 == self.n || remaining == 0 {
            for b in beta.iter_mut().skip(idx + 1) {
                *b = 0;
            }
            beta[idx] = remaining;
            rows.push(self.row_for_beta(table, beta));
            if idx + 1 == self.n {
                return;
            }
            beta[idx] = 0;
            return;
        }
        for a in (0..=remaining).rev() {
            beta[idx] = a;
            self.emit_rows(table, beta, idx + 1, remaining - a, rows);
        }
        beta[idx] = 0;
    }

    fn row_for_beta(&self, table: &[Vec<Vec<u64>>], beta: &[u32]) -> Vec<u64> {
        let f = self.field;
        self.monos
            .iter()
            .map(|alpha| {
                let mut acc = 1u64;
                for i in 0..self.n {
                    let a = alpha[i] as usize;
                    let b = beta[i] as usize;
                    if b > a {
                        return 0;
                    }
                    acc = f.mul(acc, table[i][a][b]);
                }
                acc
            })
            .collect()
    }
}

/// Certification status of one dimension computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    /// Full column rank at a specialization; generic emptiness is certified.
    CertifiedEmpty,
    /// Columns exceed conditions; nonempty unconditionally.
    NonEmptyByCount,
    /// Rank deficit at the sampled points; evidence of nonemptiness only.
    EmpiricalNonEmpty,
    /// Reserved status for externally supplied point sets whose rank deficit
    /// certifies nothing; never produced by the random-sampling pipeline.
    EmpiricalEmptyUncertified,
}

impl Certification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certification::CertifiedEmpty => "certified-empty",
            Certification::NonEmptyByCount => "nonempty-by-count",
            Certification::EmpiricalNonEmpty => "empirical-nonempty",
            Certification::EmpiricalEmptyUncertified => "empirical-empty-uncertified",
        }
    }

    pub fn is_empty_certificate(&self) -> bool {
        matches!(self, Certification::CertifiedEmpty)
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one system at one point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDimension {
    pub spec: LinearSystemSpec,
    pub cols: usize,
    pub conds: usize,
    pub rank: usize,
    pub affine_dim: usize,
    pub certification: Certification,
    pub prime: u64,
    pub seed: u64,
}

/// Builds the condition-by-monomial matrix for the system at the given
/// points and decides its dimension. Rows are streamed into the echelon
/// builder point by point, so memory stays O(cols^2) even for the tall
/// instances, and elimination stops as soon as full column rank certifies
/// emptiness.
pub fn system_dimension(spec: &LinearSystemSpec, pts: &PointSet) -> Result<SystemDimension> {
    if pts.n != spec.n || pts.len() != spec.points() {
        return Err(Error::PointSetMismatch {
            spec_n: spec.n,
            spec_s: spec.points(),
            pts_n: pts.n,
            pts_s: pts.len(),
        });
    }
    let field = PrimeField::new(pts.prime)?;
    let conds = spec.conds()?;
    if spec.d < 0 {
        return Ok(SystemDimension {
            spec: spec.clone(),
            cols: 0,
            conds,
            rank: 0,
            affine_dim: 0,
            certification: Certification::CertifiedEmpty,
            prime: pts.prime,
            seed: pts.seed,
        });
    }
    let d = u32::try_from(spec.d)
        .map_err(|_| Error::SystemTooLarge(format!("degree {} too large", spec.d)))?;
    if field.modulus() <= d as u64 {
        return Err(Error::PrimeTooSmall { prime: field.modulus(), degree: spec.d });
    }
    let cols = spec.cols()?;
    let monos = monomials(spec.n, d);
    let builder_ctx = RowBuilder::new(&field, &monos, spec.n, d);
    let mut echelon = EchelonBuilder::new(field, cols);
    let mut batch: Vec<Vec<u64>> = Vec::new();
    // Flush granularity for the parallel reduction path.
    let flush_rows = (1usize << 21) / cols.max(1) + 1;
    'points: for (i, &m) in spec.mults.iter().enumerate() {
        batch.extend(builder_ctx.rows_for_point(pts.point(i), m));
        if batch.len() >= flush_rows {
            echelon.push_rows(std::mem::take(&mut batch));
            if echelon.is_full_column_rank() {
                break 'points;
            }
        }
    }
    if !echelon.is_full_column_rank() && !batch.is_empty() {
        echelon.push_rows(batch);
    }
    let rank = echelon.rank();
    let affine_dim = cols - rank;
    let certification = if rank == cols {
        Certification::CertifiedEmpty
    } else if cols > conds {
        Certification::NonEmptyByCount
    } else {
        Certification::EmpiricalNonEmpty
    };
    Ok(SystemDimension {
        spec: spec.clone(),
        cols,
        conds,
        rank,
        affine_dim,
        certification,
        prime: pts.prime,
        seed: pts.seed,
    })
}

/// Samples a fresh point set for the spec and computes its dimension.
pub fn generic_dimension(spec: &LinearSystemSpec, seed: u64, field: &PrimeField) -> Result<SystemDimension> {
    let pts = sample_points(spec.n, spec.points(), seed, field)?;
    system_dimension(spec, &pts)
}

/// The interpolation matrix itself (conds x cols, materialized). Intended
/// for inspection, dumps and kernel extraction at desk scale; the dimension
/// pipeline streams instead.
pub fn interpolation_matrix(spec: &LinearSystemSpec, pts: &PointSet) -> Result<FieldMatrix> {
    if pts.n != spec.n || pts.len() != spec.points() {
        return Err(Error::PointSetMismatch {
            spec_n: spec.n,
            spec_s: spec.points(),
            pts_n: pts.n,
            pts_s: pts.len(),
        });
    }
    let field = PrimeField::new(pts.prime)?;
    let cols = spec.cols()?;
    if spec.d < 0 {
        return FieldMatrix::new(field, 0, cols, Vec::new());
    }
    let d = u32::try_from(spec.d)
        .map_err(|_| Error::SystemTooLarge(format!("degree {} too large", spec.d)))?;
    if field.modulus() <= d as u64 {
        return Err(Error::PrimeTooSmall { prime: field.modulus(), degree: spec.d });
    }
    let monos = monomials(spec.n, d);
    let builder = RowBuilder::new(&field, &monos, spec.n, d);
    let mut rows = Vec::new();
    for (i, &m) in spec.mults.iter().enumerate() {
        rows.extend(builder.rows_for_point(pts.point(i), m));
    }
    FieldMatrix::from_rows(field, cols, rows)
}

/// Writes the matrix dump format: a `n d p rows cols` header line, then one
/// row per line as space-separated residues.
pub fn write_matrix_dump<W: Write>(
    w: &mut W,
    spec: &LinearSystemSpec,
    pts: &PointSet,
) -> Result<()> {
    let m = interpolation_matrix(spec, pts)?;
    writeln!(w, "{} {} {} {} {}", spec.n, spec.d, pts.prime, m.rows(), m.cols())?;
    let mut line = String::new();
    for i in 0..m.rows() {
        line.clear();
        for j in 0..m.cols() {
            if j > 0 {
                line.push(' ');
            }
            line.push_str(&m.get(i, j).to_string());
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Product of two forms given as coefficient vectors on the graded-lex
/// monomial bases of degrees d1 and d2; the result is on the degree d1+d2
/// basis.
pub fn multiply_forms(
    field: &PrimeField,
    n: u32,
    d1: u32,
    coeffs1: &[u64],
    d2: u32,
    coeffs2: &[u64],
) -> Vec<u64> {
    let monos1 = monomials(n, d1);
    let monos2 = monomials(n, d2);
    assert_eq!(coeffs1.len(), monos1.len());
    assert_eq!(coeffs2.len(), monos2.len());
    let monos_out = monomials(n, d1 + d2);
    let index: std::collections::HashMap<&[u32], usize> =
        monos_out.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut out = vec![0u64; monos_out.len()];
    let mut sum = vec![0u32; n as usize + 1];
    for (i, a) in monos1.iter().enumerate() {
        if coeffs1[i] == 0 {
            continue;
        }
        for (j, b) in monos2.iter().enumerate() {
            if coeffs2[j] == 0 {
                continue;
            }
            for t in 0..sum.len() {
                sum[t] = a[t] + b[t];
            }
            let k = index[sum.as_slice()];
            out[k] = field.add(out[k], field.mul(coeffs1[i], coeffs2[j]));
        }
    }
    out
}

/// True when `a` and `b` agree up to a nonzero scalar.
pub fn proportional(field: &PrimeField, a: &[u64], b: &[u64]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let lead = a.iter().zip(b).find(|(x, y)| **x != 0 || **y != 0);
    let Some((&x, &y)) = lead else {
        return true; // both zero
    };
    if x == 0 || y == 0 {
        return false;
    }
    let lambda = field.mul(y, field.inv(x));
    a.iter().zip(b).all(|(&ai, &bi)| field.mul(lambda, ai) == bi)
}

/// Evidence for one certification trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialEvidence {
    pub seed: u64,
    pub rank: usize,
    pub cols: usize,
    pub conds: usize,
}

/// Aggregated emptiness decision with enough evidence (prime and seeds) to
/// reproduce every rank independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptinessCertificate {
    pub spec: LinearSystemSpec,
    pub certification: Certification,
    pub prime: u64,
    pub base_seed: u64,
    pub trials: Vec<TrialEvidence>,
}

/// Search and certification parameters shared by the higher-level pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub prime: u64,
    pub seed: u64,
    pub trials: u32,
}

/// Default base seed for all sampled certificates.
pub const DEFAULT_SEED: u64 = 0xFA70_5EED;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { prime: crate::field::MERSENNE61, seed: DEFAULT_SEED, trials: 2 }
    }
}

impl SearchConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        SearchConfig { seed, ..self }
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.prime)
    }
}

/// Decides emptiness with up to `trials` independent random point sets.
///
/// Returns `CertifiedEmpty` as soon as one trial reaches full column rank (a
/// rank-maximizing specialization witnesses generic full rank, so this is
/// sound); `NonEmptyByCount` immediately when columns exceed conditions
/// (sound without sampling); otherwise `EmpiricalNonEmpty` after all trials.
pub fn is_empty_certified(spec: &LinearSystemSpec, config: &SearchConfig) -> Result<EmptinessCertificate> {
    let field = config.field()?;
    let cols = spec.cols()?;
    let conds = spec.conds()?;
    if spec.d < 0 {
        return Ok(EmptinessCertificate {
            spec: spec.clone(),
            certification: Certification::CertifiedEmpty,
            prime: config.prime,
            base_seed: config.seed,
            trials: Vec::new(),
        });
    }
    if cols > conds {
        return Ok(EmptinessCertificate {
            spec: spec.clone(),
            certification: Certification::NonEmptyByCount,
            prime: config.prime,
            base_seed: config.seed,
            trials: Vec::new(),
        });
    }
    let mut evidence = Vec::new();
    for t in 0..config.trials.max(1) {
        let trial_seed = derive_seed(config.seed, t as u64);
        let dim = generic_dimension(spec, trial_seed, &field)?;
        evidence.push(TrialEvidence { seed: trial_seed, rank: dim.rank, cols, conds });
        if dim.certification == Certification::CertifiedEmpty {
            return Ok(EmptinessCertificate {
                spec: spec.clone(),
                certification: Certification::CertifiedEmpty,
                prime: config.prime,
                base_seed: config.seed,
                trials: evidence,
            });
        }
    }
    Ok(EmptinessCertificate {
        spec: spec.clone(),
        certification: Certification::EmpiricalNonEmpty,
        prime: config.prime,
        base_seed: config.seed,
        trials: evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn monomials_examples() {
        assert_eq!(monomials(2, 1), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(monomials(4, 8).len(), 495);
        assert_eq!(monomials(1, 3).len(), 4);
    }

    #[test]
    fn monomial_count_matches_enumeration() {
        for n in 1..=4u32 {
            for d in 0..=6u32 {
                assert_eq!(monomial_count(n, d as i64).unwrap(), monomials(n, d).len());
            }
        }
        assert_eq!(monomial_count(3, -2).unwrap(), 0);
    }

    #[test]
    fn mults_syntax_roundtrip() {
        assert_eq!(parse_mults("4x71").unwrap(), vec![4; 71]);
        assert_eq!(parse_mults("8x4,4x7").unwrap(), [vec![8; 4], vec![4; 7]].concat());
        assert_eq!(parse_mults("3").unwrap(), vec![3]);
        assert_eq!(parse_mults("2,2,2").unwrap(), vec![2, 2, 2]);
        assert!(parse_mults("0x3").is_err());
        assert!(parse_mults("").is_err());
        assert_eq!(format_mults(&[8, 8, 8, 8, 4, 4, 4, 4, 4, 4, 4]), "8x4,4x7");
        assert_eq!(format_mults(&[3]), "3");
    }

    #[test]
    fn sampling_is_deterministic_and_distinct() {
        let f = field();
        let a = sample_points(3, 40, 99, &f).unwrap();
        let b = sample_points(3, 40, 99, &f).unwrap();
        assert_eq!(a, b);
        let mut seen = HashSet::new();
        for p in a.iter() {
            assert_eq!(p.len(), 4);
            assert_eq!(p[3], 1);
            assert!(p.iter().any(|&c| c != 0));
            assert!(seen.insert(p.to_vec()));
        }
        let c = sample_points(3, 40, 100, &f).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sampling_exhaustion_detected() {
        let f = PrimeField::new(3).unwrap();
        // Chart of P^1 over F_3 has 3 points; asking for 4 must fail.
        assert!(matches!(
            sample_points(1, 4, 0, &f),
            Err(Error::FieldExhausted { .. })
        ));
        assert!(sample_points(1, 3, 0, &f).is_ok());
    }

    #[test]
    fn no_three_collinear_among_sampled_plane_points() {
        let f = field();
        let pts = sample_points(2, 4, 2024, &f).unwrap();
        // 3x3 determinants of every triple must be nonzero for general points.
        for i in 0..4 {
            for j in (i + 1)..4 {
                for k in (j + 1)..4 {
                    let (a, b, c) = (pts.point(i), pts.point(j), pts.point(k));
                    let det = det3(&f, a, b, c);
                    assert_ne!(det, 0, "collinear triple {i},{j},{k}");
                }
            }
        }
    }

    fn det3(f: &PrimeField, a: &[u64], b: &[u64], c: &[u64]) -> u64 {
        let m = |x: u64, y: u64| f.mul(x, y);
        let term = |x: &[u64], y: &[u64], z: &[u64]| m(x[0], m(y[1], z[2]));
        let pos = f.add(f.add(term(a, b, c), term(b, c, a)), term(c, a, b));
        let neg = f.add(f.add(term(c, b, a), term(a, c, b)), term(b, a, c));
        f.sub(pos, neg)
    }

    #[test]
    fn simple_point_condition_row_is_monomial_evaluation() {
        let f = field();
        let pts = sample_points(2, 1, 5, &f).unwrap();
        let q = pts.point(0);
        let rows = condition_rows(&f, q, 1, 2, 2).unwrap();
        assert_eq!(rows.len(), 1);
        let expect: Vec<u64> = monomials(2, 2)
            .iter()
            .map(|a| {
                let mut acc = 1;
                for i in 0..3 {
                    acc = f.mul(acc, f.pow(q[i], a[i] as u64));
                }
                acc
            })
            .collect();
        assert_eq!(rows[0], expect);
    }

    #[test]
    fn double_point_on_line_rows_match_hand_computation() {
        // n=1, d=2, m=2 at (t, 1): rows [t^2, t, 1] and [2t, 1, 0].
        let f = field();
        let t = 123456789u64;
        let rows = condition_rows(&f, &[t, 1], 2, 1, 2).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0], vec![f.mul(t, t), t, 1]);
        assert_eq!(rows[1], vec![f.mul(2, t), 1, 0]);
    }

    #[test]
    fn condition_row_count_is_binomial() {
        let f = field();
        let pts = sample_points(4, 1, 7, &f).unwrap();
        let rows = condition_rows(&f, pts.point(0), 4, 4, 8).unwrap();
        assert_eq!(rows.len(), 35); // C(7, 4)
        for r in &rows {
            assert_eq!(r.len(), 495);
        }
    }

    #[test]
    fn rejects_prime_below_degree() {
        let f = PrimeField::new(5).unwrap();
        let pts = sample_points(1, 1, 3, &f).unwrap();
        assert!(matches!(
            condition_rows(&f, pts.point(0), 1, 1, 5),
            Err(Error::PrimeTooSmall { .. })
        ));
        let spec = LinearSystemSpec::uniform(1, 7, 1, 1).unwrap();
        assert!(matches!(system_dimension(&spec, &pts), Err(Error::PrimeTooSmall { .. })));
    }

    #[test]
    fn lines_through_four_general_points_empty() {
        let f = field();
        let spec = LinearSystemSpec::uniform(2, 1, 1, 4).unwrap();
        let pts = sample_points(2, 4, 11, &f).unwrap();
        let dim = system_dimension(&spec, &pts).unwrap();
        assert_eq!((dim.cols, dim.conds, dim.rank, dim.affine_dim), (3, 4, 3, 0));
        assert_eq!(dim.certification, Certification::CertifiedEmpty);
    }

    #[test]
    fn conic_through_five_points_has_dimension_one() {
        let f = field();
        let spec = LinearSystemSpec::uniform(2, 2, 1, 5).unwrap();
        let pts = sample_points(2, 5, 12, &f).unwrap();
        let dim = system_dimension(&spec, &pts).unwrap();
        assert_eq!((dim.cols, dim.conds, dim.rank, dim.affine_dim), (6, 5, 5, 1));
        assert_eq!(dim.certification, Certification::NonEmptyByCount);
    }

    #[test]
    fn double_conic_superabundance() {
        let f = field();
        let spec = LinearSystemSpec::uniform(2, 4, 2, 5).unwrap();
        let pts = sample_points(2, 5, 13, &f).unwrap();
        let dim = system_dimension(&spec, &pts).unwrap();
        assert_eq!((dim.cols, dim.conds, dim.rank, dim.affine_dim), (15, 15, 14, 1));
        assert_eq!(dim.certification, Certification::EmpiricalNonEmpty);
        assert_eq!(spec.expected_dimension(), BigInt::from(0));
    }

    #[test]
    fn double_conic_kernel_is_square_of_conic() {
        let f = field();
        let pts = sample_points(2, 5, 14, &f).unwrap();
        let conic_spec = LinearSystemSpec::uniform(2, 2, 1, 5).unwrap();
        let conic = interpolation_matrix(&conic_spec, &pts).unwrap().kernel_vector().unwrap();
        let double_spec = LinearSystemSpec::uniform(2, 4, 2, 5).unwrap();
        let quartic = interpolation_matrix(&double_spec, &pts).unwrap().kernel_vector().unwrap();
        let square = multiply_forms(&f, 2, 2, &conic, 2, &conic);
        assert!(proportional(&f, &quartic, &square));
    }

    #[test]
    fn negative_degree_is_certified_empty() {
        let f = field();
        let spec = LinearSystemSpec::new(2, -1, vec![1]).unwrap();
        let pts = sample_points(2, 1, 3, &f).unwrap();
        let dim = system_dimension(&spec, &pts).unwrap();
        assert_eq!(dim.cols, 0);
        assert_eq!(dim.certification, Certification::CertifiedEmpty);
        let cert = is_empty_certified(&spec, &SearchConfig::default()).unwrap();
        assert_eq!(cert.certification, Certification::CertifiedEmpty);
    }

    #[test]
    fn expected_dimension_examples() {
        let spec = LinearSystemSpec::uniform(2, 2, 1, 5).unwrap();
        assert_eq!(spec.expected_dimension(), BigInt::from(1));
        let spec = LinearSystemSpec::uniform(4, 8, 4, 71).unwrap();
        assert_eq!(spec.expected_dimension(), BigInt::from(495 - 2485));
    }

    #[test]
    fn certification_levels_of_is_empty_certified() {
        let config = SearchConfig::default();
        // Cubics with four double points in P^2: certified empty by rank.
        let spec = LinearSystemSpec::uniform(2, 3, 2, 4).unwrap();
        let cert = is_empty_certified(&spec, &config).unwrap();
        assert_eq!(cert.certification, Certification::CertifiedEmpty);
        assert_eq!(cert.trials.len(), 1); // first trial certified
        assert_eq!(cert.trials[0].rank, 10);
        // Conics through 5 points: nonempty by count, no sampling needed.
        let spec = LinearSystemSpec::uniform(2, 2, 1, 5).unwrap();
        let cert = is_empty_certified(&spec, &config).unwrap();
        assert_eq!(cert.certification, Certification::NonEmptyByCount);
        assert!(cert.trials.is_empty());
        // Double conic: rank deficit at every trial.
        let spec = LinearSystemSpec::uniform(2, 4, 2, 5).unwrap();
        let cert = is_empty_certified(&spec, &config).unwrap();
        assert_eq!(cert.certification, Certification::EmpiricalNonEmpty);
        assert_eq!(cert.trials.len(), 2);
        for t in &cert.trials {
            assert_eq!(t.rank, 14);
        }
    }

    #[test]
    fn dump_format_shape() {
        let f = field();
        let spec = LinearSystemSpec::uniform(2, 1, 1, 2).unwrap();
        let pts = sample_points(2, 2, 4, &f).unwrap();
        let mut buf = Vec::new();
        write_matrix_dump(&mut buf, &spec, &pts).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        let header = lines.next().unwrap();
        assert_eq!(header, format!("2 1 {} 2 3", f.modulus()));
        assert_eq!(lines.count(), 2);
    }

    #[test]
    fn spec_display_groups_multiplicities() {
        let spec = LinearSystemSpec::new(4, 8, [vec![8; 4], vec![4; 7]].concat()).unwrap();
        assert_eq!(spec.to_string(), "L_4(8; 8x4,4x7)");
        let empty = LinearSystemSpec::new(2, 2, vec![]).unwrap();
        assert_eq!(empty.to_string(), "L_2(2; -)");
    }
}
