use crate::gf::{BaseElement, ExtElement, FieldSpec};
use crate::linalg::{Matrix, Subspace};

/// `m × n` matrix over `F_q` whose column `i` holds the coordinates of `c_i`.
pub fn expansion_matrix(spec: &FieldSpec, c: &[ExtElement]) -> Matrix<BaseElement> {
    let cols: Vec<Vec<BaseElement>> = c.iter().map(|x| spec.expand(x)).collect();
    Matrix::from_rows(spec.m(), cols).expect("every expansion has m coordinates").transpose()
}

/// An `F_q`-subspace of `F_q^n` certifying a rank weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankSupport {
    pub support: Subspace<BaseElement>,
}

impl RankSupport {
    pub fn weight(&self) -> usize {
        self.support.dim()
    }
}

/// Row space of the expansion matrix.
pub fn rank_support(spec: &FieldSpec, c: &[ExtElement]) -> RankSupport {
    RankSupport { support: Subspace::row_space(spec.base(), &expansion_matrix(spec, c)) }
}

pub fn rank_weight(spec: &FieldSpec, c: &[ExtElement]) -> usize {
    expansion_matrix(spec, c).rank(spec.base())
}

/// Rank support of the subcode spanned by the rows of `basis`: the row
/// space of all expansion matrices stacked.
pub fn subspace_rank_support(spec: &FieldSpec, basis: &Matrix<ExtElement>) -> RankSupport {
    let n = basis.cols();
    let mut rows = Vec::with_capacity(basis.rows() * spec.m());
    for i in 0..basis.rows() {
        rows.extend(expansion_matrix(spec, basis.row(i)).row_vecs());
    }
    let stacked = Matrix::from_rows(n, rows).expect("expansions have n columns");
    RankSupport { support: Subspace::row_space(spec.base(), &stacked) }
}

/// `wt_R` of the subcode spanned by `basis`.
#[cfg(test)]
pub(crate) fn subspace_weight(spec: &FieldSpec, basis: &Matrix<ExtElement>) -> usize {
    subspace_rank_support(spec, basis).weight()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::test_codes::*;
    use crate::gf::Field;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn expansion_examples() {
        let f = f16();
        let zero = vec![f.zero(); 3];
        assert!(expansion_matrix(&f, &zero).is_zero(f.base()));
        assert_eq!(rank_weight(&f, &zero), 0);
        // coordinates in F_q only touch the first row
        let base_vec = vec![f.one(), f.zero(), f.one()];
        let m = expansion_matrix(&f, &base_vec);
        assert_eq!((m.rows(), m.cols()), (4, 3));
        assert!((1..4).all(|i| m.row(i).iter().all(|x| f.base().is_zero(x))));
        let c = cyclic_3_1();
        let row = c.generator().row(0).to_vec();
        assert_eq!(expansion_matrix(&f, &row).rank(f.base()), 2);
        assert_eq!(rank_weight(&f, &row), 2);
    }

    #[test]
    fn weight_equals_span_of_coordinates() {
        let f = f81();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v: Vec<_> = (0..4).map(|_| f.element(rng.gen_range(0..81))).collect();
            let coords: Vec<Vec<_>> = v.iter().map(|x| f.expand(x)).collect();
            let span = Subspace::span(f.base(), 4, coords).unwrap();
            assert_eq!(rank_weight(&f, &v), span.dim());
        }
    }

    #[test]
    fn whole_gabidulin_code_has_full_support() {
        let c = gabidulin(3);
        assert_eq!(subspace_weight(c.spec(), c.generator()), 4);
    }

    /// Oracle: the rank support of a subcode is the span of the supports of
    /// all of its vectors, not just a basis.
    #[test]
    fn subspace_support_uses_basis_only() {
        let f = f16();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let rows: Vec<Vec<_>> = (0..2).map(|_| (0..3).map(|_| f.element(rng.gen_range(0..16))).collect()).collect();
            let d = Subspace::span(&f, 3, rows).unwrap();
            let via_basis = subspace_rank_support(&f, d.basis());
            let mut all = Subspace::zero(3);
            for v in d.vectors(&f) {
                all = all.sum(f.base(), &rank_support(&f, &v).support).unwrap();
            }
            assert_eq!(via_basis.support, all);
            // any other basis of D gives the same support
            let b = d.basis();
            let mut rows = vec![b.row(0).to_vec()];
            for i in 1..d.dim() {
                rows.push(b.row(i).iter().zip(b.row(0)).map(|(x, y)| f.add(x, &f.mul(y, &f.generator()))).collect());
            }
            let mixed = Matrix::from_rows(3, rows).unwrap();
            assert_eq!(subspace_rank_support(&f, &mixed), via_basis);
        }
    }

    /// Basis independence: re-expressing coordinates in a random F_q-basis
    /// of F_{q^m} leaves every rank weight unchanged.
    #[test]
    fn weight_independent_of_basis() {
        let f = f81();
        let base = f.base().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let change = loop {
            let rows: Vec<Vec<_>> =
                (0..4).map(|_| (0..4).map(|_| base.element(rng.gen_range(0..3))).collect()).collect();
            let m = Matrix::from_rows(4, rows).unwrap();
            if m.rank(&base) == 4 {
                break m;
            }
        };
        for _ in 0..100 {
            let v: Vec<_> = (0..4).map(|_| f.element(rng.gen_range(0..81))).collect();
            let other = change.mul(&base, &expansion_matrix(&f, &v)).unwrap();
            assert_eq!(other.rank(&base), rank_weight(&f, &v));
        }
    }

    proptest! {
        #[test]
        fn scaling_preserves_weight(idx in prop::collection::vec(0u64..16, 3), lambda in 1u64..16) {
            let f = f16();
            let v: Vec<_> = idx.iter().map(|&i| f.element(i)).collect();
            let l = f.element(lambda);
            let scaled: Vec<_> = v.iter().map(|x| f.mul(&l, x)).collect();
            prop_assert_eq!(rank_weight(&f, &scaled), rank_weight(&f, &v));
            prop_assert_eq!(rank_support(&f, &scaled), rank_support(&f, &v));
        }
    }
}
