//! Dense exact linear algebra over a prime field: rank and kernel vectors.
//!
//! The engine is an incremental echelon builder. Rows are fed one at a time,
//! reduced against the basis acquired so far, and kept when a new pivot
//! appears. This keeps memory at O(rank * cols) no matter how many rows are
//! streamed through, which is what makes the tall interpolation matrices
//! (tens of thousands of condition rows against a few thousand monomials)
//! tractable. Reduction of a batch of pending rows against the current basis
//! is data-parallel; insertion order is fixed, so results are deterministic.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Row-major dense matrix with entries reduced modulo p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Rank plus the sorted pivot columns that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl FieldMatrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape { rows, cols, got: entries.len() });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= field.modulus()) {
            return Err(Error::EntryOutOfRange(bad, field.modulus()));
        }
        Ok(FieldMatrix { field, rows, cols, entries })
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::MatrixShape { rows: n_rows, cols, got: r.len() });
            }
            entries.extend_from_slice(r);
        }
        Self::new(field, n_rows, cols, entries)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.field.modulus());
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = 0u64;
                for (a, b) in row.iter().zip(v) {
                    acc = f.add(acc, f.mul(*a, *b));
                }
                acc
            })
            .collect()
    }

    /// Rank over F_p with the pivot columns found, deterministic.
    pub fn rank(&self) -> RankResult {
        let mut builder = EchelonBuilder::new(self.field, self.cols);
        for i in 0..self.rows {
            builder.push_row(self.row(i).to_vec());
            if builder.is_full_column_rank() {
                break; // rank cannot grow past cols
            }
        }
        builder.rank_result()
    }

    /// A nonzero kernel vector when rank < cols, otherwise None. The vector
    /// is normalized so that the smallest free column carries coefficient 1,
    /// making the choice reproducible.
    pub fn kernel_vector(&self) -> Option<Vec<u64>> {
        let mut builder = EchelonBuilder::new(self.field, self.cols);
        for i in 0..self.rows {
            builder.push_row(self.row(i).to_vec());
            if builder.is_full_column_rank() {
                return None;
            }
        }
        builder.kernel_vector()
    }
}

/// Incremental row-echelon builder over F_p.
///
/// Invariant: basis row t is normalized (leading entry 1 at `pivots[t]`) and
/// has zeros at the pivot columns of all rows inserted before it. Reducing an
/// incoming row against the basis in insertion order therefore terminates in
/// one pass, and the reduced vector is the unique representative of its coset
/// vanishing on all pivot columns (so results do not depend on batching).
pub struct EchelonBuilder {
    field: PrimeField,
    cols: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<u64>>,
}

/// Row-count threshold below which batch reduction stays sequential.
const PAR_BATCH_MIN_WORK: usize = 1 << 20;

impl EchelonBuilder {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        EchelonBuilder { field, cols, pivots: Vec::new(), basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full_column_rank(&self) -> bool {
        self.basis.len() == self.cols
    }

    pub fn rank_result(&self) -> RankResult {
        let mut pivot_cols = self.pivots.clone();
        pivot_cols.sort_unstable();
        RankResult { rank: self.basis.len(), pivot_cols }
    }

    /// Reduces `row` in place against the current basis.
    fn reduce_row(field: &PrimeField, pivots: &[usize], basis: &[Vec<u64>], row: &mut [u64]) {
        for (t, &c) in pivots.iter().enumerate() {
            let m = row[c];
            if m != 0 {
                let b = &basis[t];
                for (vi, bi) in row.iter_mut().zip(b) {
                    *vi = field.submul(*vi, m, *bi);
                }
            }
        }
    }

    /// Feeds one row; returns true when it contributed a new pivot.
    pub fn push_row(&mut self, mut row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.cols);
        Self::reduce_row(&self.field, &self.pivots, &self.basis, &mut row);
        match row.iter().position(|&v| v != 0) {
            None => false,
            Some(c) => {
                let inv = self.field.inv(row[c]);
                for v in row.iter_mut() {
                    *v = self.field.mul(*v, inv);
                }
                self.pivots.push(c);
                self.basis.push(row);
                true
            }
        }
    }

    /// Feeds a batch of rows in order. The pre-reduction against the current
    /// basis runs in parallel when the batch is large enough; the final
    /// insertion pass is sequential in batch order, so the resulting basis is
    /// identical to feeding the rows one by one.
    pub fn push_rows(&mut self, mut batch: Vec<Vec<u64>>) {
        if batch.len() * self.cols >= PAR_BATCH_MIN_WORK && !self.basis.is_empty() {
            let field = self.field;
            let pivots = &self.pivots;
            let basis = &self.basis;
            batch
                .par_iter_mut()
                .for_each(|row| Self::reduce_row(&field, pivots, basis, row));
        }
        for row in batch {
            self.push_row(row);
            if self.is_full_column_rank() {
                break;
            }
        }
    }

    /// Solves for a nonzero kernel vector of the row space, if any.
    ///
    /// Basis row t reads v[p_t] + sum_{u>t} b_t[p_u] v[p_u] + b_t[f] = 0 once
    /// v is supported on the pivot columns and one free column f, so back
    /// substitution in reverse insertion order settles every coordinate.
    pub fn kernel_vector(&self) -> Option<Vec<u64>> {
        if self.is_full_column_rank() {
            return None;
        }
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let free = (0..self.cols).find(|&c| !is_pivot[c])?;
        let mut v = vec![0u64; self.cols];
        v[free] = 1;
        for t in (0..self.basis.len()).rev() {
            let b = &self.basis[t];
            let mut acc = b[free];
            for u in t + 1..self.basis.len() {
                let pu = self.pivots[u];
                acc = f.add(acc, f.mul(b[pu], v[pu]));
            }
            v[self.pivots[t]] = f.neg(acc);
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field() -> PrimeField {
        PrimeField::default()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> FieldMatrix {
        let f = field();
        let entries = (0..rows * cols).map(|_| rng.gen_range(0..f.modulus())).collect();
        FieldMatrix::new(f, rows, cols, entries).unwrap()
    }

    #[test]
    fn zero_matrix_rank() {
        let m = FieldMatrix::zeros(field(), 5, 5);
        let r = m.rank();
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn identity_rank() {
        let m = FieldMatrix::identity(field(), 4);
        let r = m.rank();
        assert_eq!(r.rank, 4);
        assert_eq!(r.pivot_cols, vec![0, 1, 2, 3]);
    }

    #[test]
    fn dependent_row_detected() {
        let f = field();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let r1: Vec<u64> = (0..3).map(|_| rng.gen_range(0..f.modulus())).collect();
        let r2: Vec<u64> = (0..3).map(|_| rng.gen_range(0..f.modulus())).collect();
        let r3: Vec<u64> = r1.iter().zip(&r2).map(|(a, b)| f.add(*a, *b)).collect();
        let m = FieldMatrix::from_rows(f, 3, vec![r1, r2, r3]).unwrap();
        assert_eq!(m.rank().rank, 2);
    }

    #[test]
    fn kernel_of_identity_is_none() {
        let m = FieldMatrix::identity(field(), 3);
        assert!(m.kernel_vector().is_none());
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let m = FieldMatrix::zeros(field(), 2, 3);
        let v = m.kernel_vector().unwrap();
        assert!(v.iter().any(|&x| x != 0));
        assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
    }

    #[test]
    fn kernel_vector_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for (rows, cols) in [(3usize, 5usize), (10, 12), (20, 21)] {
            let m = random_matrix(&mut rng, rows, cols);
            let v = m.kernel_vector().expect("wide matrix has kernel");
            assert!(v.iter().any(|&x| x != 0), "kernel vector must be nonzero");
            assert!(m.mul_vec(&v).iter().all(|&x| x == 0), "Mv = 0");
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (rows, cols) in [(8usize, 5usize), (30, 17), (40, 60)] {
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank().rank, m.transpose().rank().rank);
        }
    }

    #[test]
    fn product_rank_is_min_of_factors() {
        let f = field();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (r, k, c) in [(6usize, 3usize, 8usize), (10, 10, 4), (5, 12, 7)] {
            let a = random_matrix(&mut rng, r, k);
            let b = random_matrix(&mut rng, k, c);
            let mut prod = FieldMatrix::zeros(f, r, c);
            for i in 0..r {
                for j in 0..c {
                    let mut acc = 0;
                    for t in 0..k {
                        acc = f.add(acc, f.mul(a.get(i, t), b.get(t, j)));
                    }
                    prod.set(i, j, acc);
                }
            }
            assert_eq!(prod.rank().rank, r.min(k).min(c));
        }
    }

    #[test]
    fn batched_and_sequential_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 50, 20);
        let mut seq = EchelonBuilder::new(field(), 20);
        for i in 0..m.rows() {
            seq.push_row(m.row(i).to_vec());
        }
        let mut batched = EchelonBuilder::new(field(), 20);
        let rows: Vec<Vec<u64>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        batched.push_rows(rows);
        assert_eq!(seq.rank_result(), batched.rank_result());
    }
}
