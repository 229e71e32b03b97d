//! Dense matrices and subspaces over any [`Field`].
//!
//! Subspaces are stored by their reduced row-echelon basis, so structural
//! equality of [`Subspace`] values is equality of subspaces.

mod enumerate;
mod subspace;

use crate::gf::{BaseElement, ExtElement, Field, FieldSpec};

pub use enumerate::{enumerate_subspaces, pivot_patterns, subspaces_with_pivots};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, got: usize },
}

/// Row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, got: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    /// Build from explicit rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RaggedRows { row: i, expected: cols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: n_rows, cols, data })
    }

    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = f.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn map<G>(&self, f: impl FnMut(&E) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row vector `v` times `self`.
    pub fn left_mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = vec![f.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(a, self.get(i, j)));
            }
        }
        out
    }

    /// Reduced row-echelon form and its pivot columns. Zero rows sit at the
    /// bottom; the shape is unchanged.
    pub fn rref_with_pivots<F: Field<Elem = E>>(&self, f: &F) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(pr, lead);
            let inv = f.inv(m.get(lead, col)).expect("pivot is nonzero");
            for j in col..m.cols {
                let idx = lead * m.cols + j;
                m.data[idx] = f.mul(&m.data[idx], &inv);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in col..m.cols {
                    let sub = f.mul(&factor, m.get(lead, j));
                    let idx = r * m.cols + j;
                    m.data[idx] = f.sub(&m.data[idx], &sub);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rref<F: Field<Elem = E>>(&self, f: &F) -> Self {
        self.rref_with_pivots(f).0
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.rref_with_pivots(f).1.len()
    }

    /// Right kernel `{v : self · vᵀ = 0}` as a subspace of `F^cols`.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Subspace<E> {
        let (r, pivots) = self.rref_with_pivots(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Vec<E>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, fc));
                }
                v
            })
            .collect();
        Subspace::span(f, self.cols, basis).expect("kernel vectors have the right length")
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// `U_L`: the `F_{q^m}`-span of an `F_q`-subspace, using the same basis rows.
pub fn extend_scalars(spec: &FieldSpec, u: &Subspace<BaseElement>) -> Subspace<ExtElement> {
    // an RREF basis stays in RREF after embedding entries
    Subspace::from_rref_unchecked(u.ambient_dim(), u.basis().map(|c| spec.embed(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeField;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn mat(rows: Vec<Vec<u32>>) -> Matrix<u32> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = f2();
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.rref(&f), id);
        let z = Matrix::zeros(&f, 2, 3);
        assert_eq!(z.rref(&f), z);
        let m = mat(vec![vec![1, 1, 1], vec![0, 1, 1]]);
        assert_eq!(m.rref(&f), mat(vec![vec![1, 0, 0], vec![0, 1, 1]]));
        assert_eq!(m.rank(&f), 2);
        assert_eq!(z.rank(&f), 0);
        assert_eq!(Matrix::identity(&f, 5).rank(&f), 5);
    }

    #[test]
    fn kernel_examples() {
        let f = f2();
        assert_eq!(Matrix::identity(&f, 3).kernel(&f), Subspace::zero(3));
        let k = mat(vec![vec![1, 1, 1]]).kernel(&f);
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&f, &[1, 1, 0]));
        assert_eq!(Matrix::zeros(&f, 1, 4).kernel(&f), Subspace::full(&f, 4));
    }

    #[test]
    fn rank_of_transpose_over_f3() {
        let f = PrimeField::new(3).unwrap();
        let m = mat(vec![vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]]);
        assert_eq!(m.rank(&f), 2);
        assert_eq!(m.transpose().rank(&f), 2);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert_eq!(
            Matrix::from_rows(2, vec![vec![1u32, 0], vec![1]]),
            Err(LinalgError::RaggedRows { row: 1, expected: 2, got: 1 })
        );
    }
}
