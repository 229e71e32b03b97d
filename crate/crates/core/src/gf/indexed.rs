//! Index-based arithmetic for fields small enough to tabulate.
//!
//! Every field in this crate numbers its elements by their base-`p` digit
//! expansion (coefficient `i` is digit `i`), so addition is digitwise mod
//! `p` on indices. Multiplication goes through discrete log tables built
//! from a primitive element.

use std::sync::Arc;

use super::{BaseElement, BaseField, ExtElement, Field, FieldSpec, GfError};

/// Largest order for which log tables are built.
pub const MAX_INDEXED_ORDER: u64 = 1 << 22;

/// Largest order for which a full addition table is kept.
const ADD_TABLE_ORDER: u32 = 1024;

#[derive(Debug)]
struct Tables {
    p: u32,
    digits: u32,
    order: u32,
    /// `exp[i] = g^i` for `0 <= i < order - 1`.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// A field whose elements are their `u32` indices.
#[derive(Clone, Debug)]
pub struct IndexedField {
    t: Arc<Tables>,
}

impl PartialEq for IndexedField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || (self.t.order == other.t.order && self.t.exp == other.t.exp)
    }
}

impl Eq for IndexedField {}

fn digit_add(p: u32, digits: u32, mut a: u32, mut b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut out, mut scale) = (0, 1);
    for _ in 0..digits {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn digit_neg(p: u32, digits: u32, mut a: u32) -> u32 {
    let (mut out, mut scale) = (0, 1);
    for _ in 0..digits {
        out += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    out
}

impl IndexedField {
    /// Tabulate `f`. Returns `None` when its order exceeds
    /// [`MAX_INDEXED_ORDER`].
    pub fn from_field<F: Field>(f: &F) -> Option<Self> {
        let order = f.order();
        if order > MAX_INDEXED_ORDER {
            return None;
        }
        let order = order as u32;
        let p = f.characteristic() as u32;
        let digits = (order as f64).log(p as f64).round() as u32;
        debug_assert_eq!(u64::from(p).pow(digits), u64::from(order));
        let (exp, log) = log_tables(f, order)?;
        let neg = (0..order).map(|a| digit_neg(p, digits, a)).collect();
        let add = (order <= ADD_TABLE_ORDER)
            .then(|| (0..order * order).map(|i| digit_add(p, digits, i / order, i % order)).collect());
        Some(Self { t: Arc::new(Tables { p, digits, order, exp, log, add, neg }) })
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }
}

fn log_tables<F: Field>(f: &F, order: u32) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = order - 1;
    if n == 0 {
        return None;
    }
    for cand in 1..order {
        let g = f.element(u64::from(cand));
        let mut exp = Vec::with_capacity(n as usize);
        let mut x = f.one();
        for _ in 0..n {
            exp.push(f.index_of(&x) as u32);
            x = f.mul(&x, &g);
            if f.is_one(&x) {
                break;
            }
        }
        if exp.len() == n as usize {
            let mut log = vec![0; order as usize];
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            return Some((exp, log));
        }
    }
    None
}

impl Field for IndexedField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        match &self.t.add {
            Some(table) => table[(*a * self.t.order + *b) as usize],
            None => digit_add(self.t.p, self.t.digits, *a, *b),
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        self.t.neg[*a as usize]
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let n = self.t.order - 1;
        let s = self.t.log[*a as usize] + self.t.log[*b as usize];
        self.t.exp[(if s >= n { s - n } else { s }) as usize]
    }

    fn inv(&self, a: &u32) -> Result<u32, GfError> {
        if *a == 0 {
            return Err(GfError::DivisionByZero);
        }
        let n = self.t.order - 1;
        Ok(self.t.exp[((n - self.t.log[*a as usize]) % n) as usize])
    }

    fn order(&self) -> u64 {
        u64::from(self.t.order)
    }

    fn characteristic(&self) -> u64 {
        u64::from(self.t.p)
    }

    fn element(&self, index: u64) -> u32 {
        debug_assert!(index < u64::from(self.t.order));
        index as u32
    }

    fn index_of(&self, a: &u32) -> u64 {
        u64::from(*a)
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
}

/// A degree-`m` extension with coordinate expansion over its base field.
pub trait Coordinates: Field {
    type Base: Field;

    fn base_field(&self) -> &Self::Base;
    fn degree(&self) -> usize;
    /// Coordinates of `x` in the distinguished basis, appended to `out`.
    fn push_coordinates(&self, x: &Self::Elem, out: &mut Vec<<Self::Base as Field>::Elem>);
    fn embed_base(&self, b: &<Self::Base as Field>::Elem) -> Self::Elem;
}

impl Coordinates for FieldSpec {
    type Base = BaseField;

    fn base_field(&self) -> &BaseField {
        self.base()
    }

    fn degree(&self) -> usize {
        self.m()
    }

    fn push_coordinates(&self, x: &ExtElement, out: &mut Vec<BaseElement>) {
        out.extend_from_slice(x.coeffs());
    }

    fn embed_base(&self, b: &BaseElement) -> ExtElement {
        self.embed(b)
    }
}

/// [`FieldSpec`] in index form, together with its base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedExtension {
    ext: IndexedField,
    base: IndexedField,
    q: u32,
    m: usize,
}

impl IndexedExtension {
    pub fn new(spec: &FieldSpec) -> Option<Self> {
        Some(Self {
            ext: IndexedField::from_field(spec)?,
            base: IndexedField::from_field(spec.base())?,
            q: spec.q() as u32,
            m: spec.m(),
        })
    }

    pub fn to_index(&self, spec: &FieldSpec, x: &ExtElement) -> u32 {
        spec.index_of(x) as u32
    }
}

impl Field for IndexedExtension {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.ext.add(a, b)
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        self.ext.neg(a)
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.ext.mul(a, b)
    }
    fn inv(&self, a: &u32) -> Result<u32, GfError> {
        self.ext.inv(a)
    }
    fn order(&self) -> u64 {
        self.ext.order()
    }
    fn characteristic(&self) -> u64 {
        self.ext.characteristic()
    }
    fn element(&self, index: u64) -> u32 {
        index as u32
    }
    fn index_of(&self, a: &u32) -> u64 {
        u64::from(*a)
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
}

impl Coordinates for IndexedExtension {
    type Base = IndexedField;

    fn base_field(&self) -> &IndexedField {
        &self.base
    }

    fn degree(&self) -> usize {
        self.m
    }

    #[inline]
    fn push_coordinates(&self, x: &u32, out: &mut Vec<u32>) {
        let mut x = *x;
        for _ in 0..self.m {
            out.push(x % self.q);
            x /= self.q;
        }
    }

    fn embed_base(&self, b: &u32) -> u32 {
        *b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agree<F: Field>(f: &F, ix: &IndexedField) {
        let n = f.order();
        for a in 0..n {
            let ea = f.element(a);
            let ia = a as u32;
            assert_eq!(f.index_of(&f.neg(&ea)), u64::from(ix.neg(&ia)));
            if a != 0 {
                assert_eq!(f.index_of(&f.inv(&ea).unwrap()), u64::from(ix.inv(&ia).unwrap()));
            }
            for b in 0..n {
                let eb = f.element(b);
                let ib = b as u32;
                assert_eq!(f.index_of(&f.add(&ea, &eb)), u64::from(ix.add(&ia, &ib)));
                assert_eq!(f.index_of(&f.mul(&ea, &eb)), u64::from(ix.mul(&ia, &ib)));
            }
        }
    }

    #[test]
    fn tables_match_polynomial_arithmetic() {
        let f16 = FieldSpec::prime_extension(2, &[1, 1, 0, 0, 1]).unwrap();
        agree(&f16, &IndexedField::from_field(&f16).unwrap());
        let f81 = FieldSpec::prime_extension(3, &[2, 0, 0, 2, 1]).unwrap();
        agree(&f81, &IndexedField::from_field(&f81).unwrap());
        let f4 = BaseField::new(2, Some(vec![1, 1, 1])).unwrap();
        let tower = FieldSpec::new(f4.clone(), vec![f4.generator(), f4.one(), f4.one()]).unwrap();
        agree(&tower, &IndexedField::from_field(&tower).unwrap());
        let f7 = BaseField::prime(7).unwrap();
        agree(&f7, &IndexedField::from_field(&f7).unwrap());
    }

    #[test]
    fn digitwise_addition_without_table() {
        // 3^7 = 2187 exceeds the addition-table limit
        let f3 = BaseField::prime(3).unwrap();
        let g = super::super::find_irreducible(&f3, 7, 0);
        let spec = FieldSpec::new(f3, g).unwrap();
        let ix = IndexedField::from_field(&spec).unwrap();
        assert!(ix.t.add.is_none());
        for (a, b) in [(5u64, 7u64), (2186, 1), (1000, 1186), (729, 1458)] {
            let s = spec.add(&spec.element(a), &spec.element(b));
            assert_eq!(u64::from(ix.add(&(a as u32), &(b as u32))), spec.index_of(&s));
            let pr = spec.mul(&spec.element(a), &spec.element(b));
            assert_eq!(u64::from(ix.mul(&(a as u32), &(b as u32))), spec.index_of(&pr));
        }
    }

    #[test]
    fn coordinates_agree() {
        let f4 = BaseField::new(2, Some(vec![1, 1, 1])).unwrap();
        let spec = FieldSpec::new(f4.clone(), vec![f4.generator(), f4.one(), f4.one()]).unwrap();
        let ix = IndexedExtension::new(&spec).unwrap();
        for i in 0..spec.order() {
            let x = spec.element(i);
            let mut plain = Vec::new();
            spec.push_coordinates(&x, &mut plain);
            let mut fast = Vec::new();
            ix.push_coordinates(&(i as u32), &mut fast);
            let plain: Vec<u32> = plain.iter().map(|b| f4.index_of(b) as u32).collect();
            assert_eq!(plain, fast);
        }
    }
}
