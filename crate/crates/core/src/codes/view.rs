//! A code's generator over an interchangeable representation of `F_{q^m}`.
//!
//! The enumeration-heavy algorithms are generic over [`Coordinates`] and
//! run on index arithmetic whenever the field is small enough to
//! tabulate, falling back to polynomial arithmetic otherwise.

use crate::gf::{Coordinates, ExtElement, Field, FieldSpec, IndexedExtension};
use crate::linalg::{Matrix, Subspace};

pub(crate) type BaseElem<K> = <<K as Coordinates>::Base as Field>::Elem;

#[derive(Clone, Debug)]
pub(crate) struct CodeView<K: Coordinates> {
    pub field: K,
    pub generator: Matrix<K::Elem>,
}

impl<K: Coordinates> CodeView<K> {
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn base(&self) -> &K::Base {
        self.field.base_field()
    }

    pub fn encode(&self, message: &[K::Elem]) -> Vec<K::Elem> {
        self.generator.left_mul_vec(&self.field, message)
    }

    pub fn subcode_basis(&self, message_basis: &Matrix<K::Elem>) -> Matrix<K::Elem> {
        message_basis.mul(&self.field, &self.generator).expect("message basis has k columns")
    }

    /// `wt_R` of the span of `rows`: the rank of the `n × (rows·m)` matrix
    /// whose row `i` lists the coordinates of every row's entry `i`.
    pub fn rows_weight(&self, rows: &Matrix<K::Elem>) -> usize {
        let n = rows.cols();
        let width = rows.rows() * self.field.degree();
        let mut data = Vec::with_capacity(n * width);
        for i in 0..n {
            for j in 0..rows.rows() {
                self.field.push_coordinates(rows.get(j, i), &mut data);
            }
        }
        Matrix::new(n, width, data).expect("shape matches").rank(self.base())
    }

    pub fn vector_weight(&self, v: &[K::Elem]) -> usize {
        let mut data = Vec::with_capacity(v.len() * self.field.degree());
        for x in v {
            self.field.push_coordinates(x, &mut data);
        }
        Matrix::new(v.len(), self.field.degree(), data).expect("shape matches").rank(self.base())
    }

    /// `dim(C ∩ U_L)` as `k + dim U - dim(C + U_L)`.
    pub fn dim_meet_extended(&self, u: &Subspace<BaseElem<K>>) -> usize {
        if u.dim() == 0 {
            return 0;
        }
        let ul = u.basis().map(|b| self.field.embed_base(b));
        let stacked = self.generator.stack(&ul).expect("widths agree");
        self.k() + u.dim() - stacked.rank(&self.field)
    }

    /// `dim C(U) = dim(C ∩ (U^⊥)_L)`.
    pub fn dim_sub_u(&self, u: &Subspace<BaseElem<K>>) -> usize {
        self.dim_meet_extended(&u.orthogonal_complement(self.base()))
    }
}

impl CodeView<FieldSpec> {
    pub fn plain(spec: &FieldSpec, generator: &Matrix<ExtElement>) -> Self {
        Self { field: spec.clone(), generator: generator.clone() }
    }
}

impl CodeView<IndexedExtension> {
    pub fn indexed(spec: &FieldSpec, generator: &Matrix<ExtElement>) -> Option<Self> {
        let field = IndexedExtension::new(spec)?;
        let generator = generator.map(|x| field.to_index(spec, x));
        Some(Self { field, generator })
    }
}

/// Evaluates `$body` with `$v` bound to the fastest available view of
/// `$code`.
macro_rules! with_view {
    ($code:expr, $v:ident => $body:expr) => {
        match $code.indexed_view() {
            Some($v) => $body,
            None => {
                let owned = $code.plain_view();
                let $v = &owned;
                $body
            }
        }
    };
}
pub(crate) use with_view;

#[cfg(test)]
mod tests {
    use crate::codes::test_codes::*;
    use crate::codes::{rank_weight, subspace_rank_support};
    use crate::linalg::enumerate_subspaces;

    #[test]
    fn weights_agree_across_views() {
        for c in [cyclic_3_1(), gabidulin(2)] {
            let plain = c.plain_view();
            let fast = c.indexed_view().unwrap();
            for (s, t) in enumerate_subspaces(c.spec(), c.k(), 1).zip(enumerate_subspaces(&fast.field, c.k(), 1)) {
                let d = plain.subcode_basis(s.basis());
                let w = rank_weight(c.spec(), d.row(0));
                assert_eq!(plain.rows_weight(&d), w);
                assert_eq!(plain.vector_weight(d.row(0)), w);
                let e = fast.subcode_basis(t.basis());
                assert_eq!(fast.rows_weight(&e), w);
                assert_eq!(fast.vector_weight(e.row(0)), w);
            }
            let whole = subspace_rank_support(c.spec(), c.generator()).weight();
            assert_eq!(fast.rows_weight(&fast.generator), whole);
        }
    }

    #[test]
    fn dim_sub_u_agrees_with_intersection() {
        let c = cyclic_3_1();
        let plain = c.plain_view();
        let fast = c.indexed_view().unwrap();
        let base = c.spec().base().clone();
        for t in 0..=3 {
            for (u, v) in enumerate_subspaces(&base, 3, t).zip(enumerate_subspaces(fast.base(), 3, t)) {
                let d = crate::codes::code_sub_u(&c, &u).dim();
                assert_eq!(plain.dim_sub_u(&u), d);
                assert_eq!(fast.dim_sub_u(&v), d);
            }
        }
    }
}
