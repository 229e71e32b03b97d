use std::fmt;

use super::irreducible::is_irreducible;
use super::{poly, BaseElement, BaseField, Field, GfError};

/// An element of `F_{q^m}`: `m` coordinates in `F_q` with respect to the
/// polynomial basis `(1, a, …, a^{m-1})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElement {
    coeffs: Vec<BaseElement>,
}

impl ExtElement {
    pub fn coeffs(&self) -> &[BaseElement] {
        &self.coeffs
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// The extension `F_{q^m} = F_q[a]/(g)` together with its base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    base: BaseField,
    m: usize,
    ext_modulus: Vec<BaseElement>,
    order: u64,
}

impl FieldSpec {
    /// `g` is ascending and must be monic irreducible over `F_q`.
    pub fn new(base: BaseField, g: Vec<BaseElement>) -> Result<Self, GfError> {
        if g.len() < 2 || !base.is_one(g.last().unwrap()) {
            return Err(GfError::NotMonic);
        }
        if !is_irreducible(&base, &g) {
            return Err(GfError::Reducible(format!("{g:?} over F_{}", base.order())));
        }
        let m = g.len() - 1;
        let order =
            base.order().checked_pow(m as u32).ok_or_else(|| GfError::InvalidElement("field too large".into()))?;
        Ok(Self { base, m, ext_modulus: g, order })
    }

    /// `F_{p^m}` over the prime field, modulus given by integer coefficients.
    pub fn prime_extension(p: u32, ext_modulus: &[u32]) -> Result<Self, GfError> {
        let base = BaseField::prime(p)?;
        let g = ext_modulus.iter().map(|&c| base.from_coeffs(vec![c])).collect::<Result<Vec<_>, _>>()?;
        Self::new(base, g)
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn p(&self) -> u32 {
        self.base.p()
    }

    pub fn e(&self) -> usize {
        self.base.e()
    }

    /// Size of the base field.
    pub fn q(&self) -> u64 {
        self.base.order()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ext_modulus(&self) -> &[BaseElement] {
        &self.ext_modulus
    }

    /// The element with the given coordinates.
    pub fn from_coords(&self, coords: Vec<BaseElement>) -> Result<ExtElement, GfError> {
        if coords.len() != self.m {
            return Err(GfError::InvalidElement(format!("expected {} coordinates, got {}", self.m, coords.len())));
        }
        for c in &coords {
            self.base.from_coeffs(c.coeffs().to_vec())?;
        }
        Ok(ExtElement { coeffs: coords })
    }

    /// Coordinates of `c` in the polynomial basis.
    pub fn expand(&self, c: &ExtElement) -> Vec<BaseElement> {
        c.coeffs.clone()
    }

    /// Reduce a polynomial in `a` with coefficients in `F_q`.
    pub fn reduce(&self, raw: &[BaseElement]) -> ExtElement {
        let mut v = poly::rem(&self.base, raw, &self.ext_modulus).expect("modulus is nonzero");
        v.resize(self.m, self.base.zero());
        ExtElement { coeffs: v }
    }

    /// Inclusion `F_q → F_{q^m}`.
    pub fn embed(&self, c: &BaseElement) -> ExtElement {
        let mut coeffs = vec![self.base.zero(); self.m];
        coeffs[0] = c.clone();
        ExtElement { coeffs }
    }

    /// The class of `a`.
    pub fn generator(&self) -> ExtElement {
        self.reduce(&[self.base.zero(), self.base.one()])
    }

    /// `λ·c` for `λ ∈ F_q`.
    pub fn scale(&self, lambda: &BaseElement, c: &ExtElement) -> ExtElement {
        let coeffs = c.coeffs.iter().map(|x| self.base.mul(lambda, x)).collect();
        ExtElement { coeffs }
    }

    /// `c^q`.
    pub fn frobenius(&self, c: &ExtElement) -> ExtElement {
        self.pow(c, self.q())
    }

    /// `c^{q^i}`.
    pub fn frobenius_power(&self, c: &ExtElement, i: usize) -> ExtElement {
        (0..i).fold(c.clone(), |acc, _| self.frobenius(&acc))
    }

    /// Whether `c` lies in the image of `F_q`.
    pub fn is_base(&self, c: &ExtElement) -> bool {
        c.coeffs[1..].iter().all(|x| self.base.is_zero(x))
    }

    fn trimmed(&self, a: &ExtElement) -> Vec<BaseElement> {
        let mut v = a.coeffs.clone();
        poly::trim(&self.base, &mut v);
        v
    }
}

impl Field for FieldSpec {
    type Elem = ExtElement;

    fn zero(&self) -> ExtElement {
        ExtElement { coeffs: vec![self.base.zero(); self.m] }
    }

    fn one(&self) -> ExtElement {
        self.embed(&self.base.one())
    }

    fn add(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.add(x, y)).collect();
        ExtElement { coeffs }
    }

    fn neg(&self, a: &ExtElement) -> ExtElement {
        let coeffs = a.coeffs.iter().map(|x| self.base.neg(x)).collect();
        ExtElement { coeffs }
    }

    fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let prod = poly::mul(&self.base, &self.trimmed(a), &self.trimmed(b));
        self.reduce(&prod)
    }

    fn inv(&self, a: &ExtElement) -> Result<ExtElement, GfError> {
        let inv = poly::inverse_mod(&self.base, &self.trimmed(a), &self.ext_modulus)?;
        Ok(self.reduce(&inv))
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn element(&self, mut index: u64) -> ExtElement {
        debug_assert!(index < self.order);
        let q = self.q();
        let coeffs = (0..self.m)
            .map(|_| {
                let c = self.base.element(index % q);
                index /= q;
                c
            })
            .collect();
        ExtElement { coeffs }
    }

    fn index_of(&self, a: &ExtElement) -> u64 {
        let q = self.q();
        a.coeffs.iter().rev().fold(0, |acc, c| acc * q + self.base.index_of(c))
    }

    fn int(&self, n: u64) -> ExtElement {
        self.embed(&self.base.int(n))
    }
}
