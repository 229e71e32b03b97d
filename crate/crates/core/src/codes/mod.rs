//! Linear codes over `F_{q^m}` and their rank-metric invariants.

mod construct;
mod grw;
pub(crate) mod view;
mod weight;

use std::sync::{Arc, OnceLock};

use crate::gf::{ExtElement, Field, FieldSpec, GfError, IndexedExtension};
use crate::linalg::{enumerate_subspaces, subspaces_with_pivots, LinalgError, Matrix, Subspace};

pub use construct::{cyclic_code, cyclic_generator, gabidulin_code, gabidulin_generator, random_code};
pub use grw::{code_sub_u, dim_cu_bounds, grw, hierarchy, is_r_mrd, DimBound, GrwMethod, Hierarchy};
pub use weight::{expansion_matrix, rank_support, rank_weight, subspace_rank_support, RankSupport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("generator has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("code dimension must satisfy 1 <= k <= n, got k = {k}, n = {n}")]
    Degenerate { k: usize, n: usize },
    #[error("r = {r} is outside 1..={k}")]
    DimensionOutOfRange { r: usize, k: usize },
    #[error("this method requires m >= n (m = {m}, n = {n})")]
    UnsupportedAssumption { m: usize, n: usize },
    #[error("evaluation points are not linearly independent over F_q")]
    InvalidPoints,
    #[error("invalid generator polynomial: {0}")]
    InvalidGenerator(String),
}

/// An `[n, k]` code over `F_{q^m}`, stored by the RREF of its generator.
#[derive(Clone, Debug)]
pub struct LinearCode {
    spec: FieldSpec,
    generator: Matrix<ExtElement>,
    indexed: OnceLock<Option<Arc<view::CodeView<IndexedExtension>>>>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.generator == other.generator
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// Code spanned by the rows of `generator`, which must be independent.
    pub fn from_generator(spec: FieldSpec, generator: &Matrix<ExtElement>) -> Result<Self, CodeError> {
        let (k, n) = (generator.rows(), generator.cols());
        if k == 0 || k > n {
            return Err(CodeError::Degenerate { k, n });
        }
        let span = Subspace::row_space(&spec, generator);
        if span.dim() != k {
            return Err(CodeError::RankDeficient { rank: span.dim(), rows: k });
        }
        Ok(Self::from_rref(spec, span.basis().clone()))
    }

    fn from_rref(spec: FieldSpec, generator: Matrix<ExtElement>) -> Self {
        Self { spec, generator, indexed: OnceLock::new() }
    }

    /// Index-arithmetic view, when the field is small enough.
    pub(crate) fn indexed_view(&self) -> Option<&view::CodeView<IndexedExtension>> {
        self.indexed.get_or_init(|| view::CodeView::indexed(&self.spec, &self.generator).map(Arc::new)).as_deref()
    }

    pub(crate) fn plain_view(&self) -> view::CodeView<FieldSpec> {
        view::CodeView::plain(&self.spec, &self.generator)
    }

    pub fn from_rows(spec: FieldSpec, rows: Vec<Vec<ExtElement>>) -> Result<Self, CodeError> {
        let n = rows.first().map_or(0, Vec::len);
        let m = Matrix::from_rows(n, rows)?;
        Self::from_generator(spec, &m)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// The RREF generator matrix.
    pub fn generator(&self) -> &Matrix<ExtElement> {
        &self.generator
    }

    /// Whether `m ≥ n`, under which all GRW definitions coincide.
    pub fn field_covers_length(&self) -> bool {
        self.spec.m() >= self.n()
    }

    pub fn as_subspace(&self) -> Subspace<ExtElement> {
        Subspace::row_space(&self.spec, &self.generator)
    }

    pub fn encode(&self, message: &[ExtElement]) -> Vec<ExtElement> {
        self.generator.left_mul_vec(&self.spec, message)
    }

    pub fn contains(&self, v: &[ExtElement]) -> bool {
        self.as_subspace().contains(&self.spec, v)
    }

    /// All `q^{mk}` codewords.
    pub fn codewords(&self) -> impl Iterator<Item = Vec<ExtElement>> + '_ {
        Subspace::full(&self.spec, self.k())
            .vectors(&self.spec)
            .collect::<Vec<_>>()
            .into_iter()
            .map(move |msg| self.encode(&msg))
    }

    /// Basis rows (in `F_{q^m}^n`) of an `r`-dimensional subcode, given the
    /// RREF basis of its preimage in message space.
    pub fn subcode_basis(&self, message_basis: &Matrix<ExtElement>) -> Matrix<ExtElement> {
        message_basis.mul(&self.spec, &self.generator).expect("message basis has k columns")
    }

    /// Every `r`-dimensional subcode, as a basis in `F_{q^m}^n`.
    pub fn subcodes(&self, r: usize) -> impl Iterator<Item = Matrix<ExtElement>> + '_ {
        enumerate_subspaces(&self.spec, self.k(), r).map(move |s| self.subcode_basis(s.basis()))
    }

    /// Subcodes whose message-space RREF has the given pivot columns; the
    /// pivot patterns partition [`LinearCode::subcodes`].
    pub fn subcodes_with_pivots<'a>(&'a self, pivots: &[usize]) -> impl Iterator<Item = Matrix<ExtElement>> + 'a {
        subspaces_with_pivots(&self.spec, self.k(), pivots).map(move |s| self.subcode_basis(s.basis()))
    }

    /// The dual code for the standard inner product. Fails when `k = n`,
    /// since the dual would be zero.
    pub fn dual(&self) -> Result<Self, CodeError> {
        let kernel = self.generator.kernel(&self.spec);
        if kernel.dim() == 0 {
            return Err(CodeError::Degenerate { k: 0, n: self.n() });
        }
        Ok(Self::from_rref(self.spec.clone(), kernel.basis().clone()))
    }

    /// Number of `r`-dimensional subcodes, `[k r]_{q^m}`.
    pub fn subcode_count(&self, r: usize) -> num_bigint::BigUint {
        crate::qcombin::gauss_binom(self.k() as u64, r as u64, self.spec.order())
    }
}

/// Alias matching the operation name used by callers.
pub fn dual_code(c: &LinearCode) -> Result<LinearCode, CodeError> {
    c.dual()
}

#[cfg(test)]
pub(crate) mod test_codes {
    //! Codes shared by unit tests.
    use super::*;

    pub fn f16() -> FieldSpec {
        FieldSpec::prime_extension(2, &[1, 1, 0, 0, 1]).unwrap()
    }

    pub fn f81() -> FieldSpec {
        FieldSpec::prime_extension(3, &[2, 0, 0, 2, 1]).unwrap()
    }

    /// The [3,1] cyclic code over F_16 generated by (x+1)(x+a^2+a).
    pub fn cyclic_3_1() -> LinearCode {
        let f = f16();
        let g = vec![f.parse_element("a^2+a").unwrap(), f.parse_element("a^2+a+1").unwrap(), f.one()];
        cyclic_code(&f, 3, &g).unwrap()
    }

    pub fn gabidulin(k: usize) -> LinearCode {
        let f = f81();
        let points: Vec<_> = (0..4).map(|i| f.pow(&f.generator(), i)).collect();
        gabidulin_code(&f, k, &points).unwrap()
    }

    /// The non-Gabidulin MRD [4,2] code with rows (1,0,a,a^2), (0,1,a^2,2a).
    pub fn mrd_non_gabidulin() -> LinearCode {
        let f = f81();
        let p = |s: &str| f.parse_element(s).unwrap();
        LinearCode::from_rows(
            f.clone(),
            vec![vec![p("1"), p("0"), p("a"), p("a^2")], vec![p("0"), p("1"), p("a^2"), p("2a")]],
        )
        .unwrap()
    }
}
