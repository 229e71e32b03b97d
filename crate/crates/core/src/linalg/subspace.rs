use super::{LinalgError, Matrix};
use crate::gf::Field;

/// A subspace of `F^n` held as its RREF basis with no zero rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<E> {
    ambient_dim: usize,
    basis: Matrix<E>,
}

impl<E: Clone> Subspace<E> {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix { rows: 0, cols: ambient_dim, data: Vec::new() } }
    }

    pub fn full<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Self { ambient_dim: n, basis: Matrix::identity(f, n) }
    }

    /// Span of arbitrary (possibly dependent) vectors of length `ambient_dim`.
    pub fn span<F: Field<Elem = E>>(f: &F, ambient_dim: usize, vectors: Vec<Vec<E>>) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(ambient_dim, vectors)?;
        Ok(Self::row_space(f, &m))
    }

    /// Row space of a matrix.
    pub fn row_space<F: Field<Elem = E>>(f: &F, m: &Matrix<E>) -> Self {
        let (r, pivots) = m.rref_with_pivots(f);
        let keep = pivots.len();
        let data = r.data[..keep * r.cols].to_vec();
        Self { ambient_dim: m.cols, basis: Matrix { rows: keep, cols: m.cols, data } }
    }

    /// Wrap a basis that is already in RREF without zero rows.
    pub(crate) fn from_rref_unchecked(ambient_dim: usize, basis: Matrix<E>) -> Self {
        debug_assert_eq!(basis.cols, ambient_dim);
        Self { ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let extra = Matrix { rows: 1, cols: self.ambient_dim, data: v.to_vec() };
        let stacked = self.basis.stack(&extra).expect("widths agree");
        stacked.rank(f) == self.dim()
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && (0..self.dim()).all(|i| other.contains(f, self.basis.row(i)))
    }

    /// Orthogonal complement for the standard bilinear form `Σ xᵢyᵢ`.
    pub fn orthogonal_complement<F: Field<Elem = E>>(&self, f: &F) -> Self {
        self.basis.kernel(f)
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let stacked = self.basis.stack(&other.basis)?;
        Ok(Self::row_space(f, &stacked))
    }

    /// `(S1^⊥ + S2^⊥)^⊥`.
    pub fn intersect<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let perp = self.orthogonal_complement(f).sum(f, &other.orthogonal_complement(f))?;
        Ok(perp.orthogonal_complement(f))
    }

    /// Every vector of the subspace; `order^dim` of them.
    pub fn vectors<'a, F: Field<Elem = E>>(&'a self, f: &'a F) -> impl Iterator<Item = Vec<E>> + 'a {
        let total = f.order().pow(self.dim() as u32);
        (0..total).map(move |mut idx| {
            let coeffs: Vec<E> = (0..self.dim())
                .map(|_| {
                    let c = f.element(idx % f.order());
                    idx /= f.order();
                    c
                })
                .collect();
            self.basis.left_mul_vec(f, &coeffs)
        })
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, got: other.ambient_dim });
        }
        Ok(())
    }
}
