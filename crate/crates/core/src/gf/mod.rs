//! Exact arithmetic in the tower `F_p ⊆ F_q ⊆ F_{q^m}`.
//!
//! - [`PrimeField`]: integers modulo a prime `p`.
//! - [`BaseField`]: `F_q = F_p[x]/(f)` with `q = p^e`.
//! - [`FieldSpec`]: `F_{q^m} = F_q[a]/(g)`, carrying the polynomial basis
//!   `(1, a, …, a^{m-1})` used for coordinate expansion.
//!
//! Every level implements [`Field`], so the linear algebra in
//! [`crate::linalg`] runs unchanged over either `F_q` or `F_{q^m}`.

mod base;
mod ext;
mod indexed;
mod irreducible;
mod parse;
pub mod poly;
mod prime;

use std::fmt::Debug;
use std::hash::Hash;

pub use base::{BaseElement, BaseField};
pub use ext::{ExtElement, FieldSpec};
pub use indexed::{Coordinates, IndexedExtension, IndexedField, MAX_INDEXED_ORDER};
pub use irreducible::{find_irreducible, is_irreducible};
pub use prime::{is_prime, PrimeField};

/// Errors raised by field construction, arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus must be monic of degree >= 1")]
    NotMonic,
    #[error("modulus {0} is reducible")]
    Reducible(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A finite field whose elements are plain values and whose operations live
/// on a context object.
///
/// Elements are numbered `0..order()` by [`Field::element`]; index 0 is zero
/// and index 1 is one.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, GfError>;

    /// Number of elements.
    fn order(&self) -> u64;
    /// Characteristic `p`.
    fn characteristic(&self) -> u64;

    /// The element with the given index, `index < order()`.
    fn element(&self, index: u64) -> Self::Elem;
    /// Inverse of [`Field::element`].
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a / b`.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, GfError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// The integer `n` mapped into the prime subfield.
    fn int(&self, n: u64) -> Self::Elem {
        let p = self.characteristic();
        self.element(n % p)
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut result = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        result
    }

    /// All elements in index order.
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axioms<F: Field>(f: &F) {
        let elems: Vec<_> = f.elements().collect();
        assert_eq!(elems.len() as u64, f.order());
        for (i, a) in elems.iter().enumerate() {
            assert_eq!(f.index_of(a), i as u64);
            assert!(f.is_zero(&f.add(a, &f.neg(a))));
            if !f.is_zero(a) {
                assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
            } else {
                assert_eq!(f.inv(a), Err(GfError::DivisionByZero));
            }
        }
        for a in elems.iter().step_by(3) {
            for b in elems.iter().step_by(5) {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in elems.iter().step_by(7) {
                    let lhs = f.mul(a, &f.add(b, c));
                    let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                    assert_eq!(lhs, rhs);
                    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_hold_at_every_level() {
        axioms(&PrimeField::new(7).unwrap());
        let f4 = BaseField::new(2, Some(vec![1, 1, 1])).unwrap();
        axioms(&f4);
        let f16 = FieldSpec::prime_extension(2, &[1, 1, 0, 0, 1]).unwrap();
        axioms(&f16);
        let f81 = FieldSpec::prime_extension(3, &[2, 0, 0, 2, 1]).unwrap();
        axioms(&f81);
        // F_16 as a quadratic extension of F_4: a^2 + a + x
        let x = f4.element(2);
        let tower = FieldSpec::new(f4.clone(), vec![x, f4.one(), f4.one()]).unwrap();
        assert_eq!(tower.order(), 16);
        axioms(&tower);
    }
}
