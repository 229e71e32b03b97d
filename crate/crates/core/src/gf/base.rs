use std::fmt;

use super::irreducible::is_irreducible;
use super::{poly, Field, GfError, PrimeField};

/// An element of `F_q`: `e` residues mod `p`, ascending powers of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseElement {
    coeffs: Vec<u32>,
}

impl BaseElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
}

impl fmt::Debug for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "{:?}", self.coeffs)
        }
    }
}

/// The field `F_q = F_p[x]/(f)` with `q = p^e`.
///
/// When `e = 1` there is no modulus and `F_q = F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseField {
    prime: PrimeField,
    e: usize,
    modulus: Option<Vec<u32>>,
    order: u64,
}

impl BaseField {
    /// `modulus` is the ascending coefficient list of a monic irreducible
    /// polynomial over `F_p`; `None` builds the prime field itself.
    pub fn new(p: u32, modulus: Option<Vec<u32>>) -> Result<Self, GfError> {
        let prime = PrimeField::new(p)?;
        let (e, modulus) = match modulus {
            None => (1, None),
            Some(m) => {
                if m.iter().any(|&c| c >= p) {
                    return Err(GfError::InvalidElement(format!("modulus coefficient out of range for p = {p}")));
                }
                if m.len() < 2 || *m.last().unwrap() != 1 {
                    return Err(GfError::NotMonic);
                }
                if !is_irreducible(&prime, &m) {
                    return Err(GfError::Reducible(format!("{m:?} over F_{p}")));
                }
                if m.len() == 2 {
                    // a degree-1 modulus is just F_p again
                    (1, None)
                } else {
                    (m.len() - 1, Some(m))
                }
            }
        };
        let order =
            (p as u64).checked_pow(e as u32).ok_or_else(|| GfError::InvalidElement("field too large".into()))?;
        Ok(Self { prime, e, modulus, order })
    }

    pub fn prime(p: u32) -> Result<Self, GfError> {
        Self::new(p, None)
    }

    pub fn p(&self) -> u32 {
        self.prime.p()
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.prime
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    /// Build an element from `e` residues, validating ranges.
    pub fn from_coeffs(&self, coeffs: Vec<u32>) -> Result<BaseElement, GfError> {
        if coeffs.len() != self.e {
            return Err(GfError::InvalidElement(format!("expected {} coefficients, got {}", self.e, coeffs.len())));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p()) {
            return Err(GfError::InvalidElement(format!("coefficient {c} out of range for p = {}", self.p())));
        }
        Ok(BaseElement { coeffs })
    }

    /// Reduce an arbitrary polynomial in `x` into the field.
    pub fn reduce(&self, raw: &[u32]) -> BaseElement {
        let mut v: Vec<u32> = raw.iter().map(|&c| c % self.p()).collect();
        if let Some(m) = &self.modulus {
            v = poly::rem(&self.prime, &v, m).expect("modulus is nonzero");
        } else {
            poly::trim(&self.prime, &mut v);
            v.truncate(1);
        }
        v.resize(self.e, 0);
        BaseElement { coeffs: v }
    }

    /// The class of `x`, the generator over `F_p` (only meaningful for `e > 1`).
    pub fn generator(&self) -> BaseElement {
        self.reduce(&[0, 1])
    }

    fn trimmed(&self, a: &BaseElement) -> Vec<u32> {
        let mut v = a.coeffs.clone();
        poly::trim(&self.prime, &mut v);
        v
    }
}

impl Field for BaseField {
    type Elem = BaseElement;

    fn zero(&self) -> BaseElement {
        BaseElement { coeffs: vec![0; self.e] }
    }

    fn one(&self) -> BaseElement {
        let mut coeffs = vec![0; self.e];
        coeffs[0] = 1;
        BaseElement { coeffs }
    }

    fn add(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        let p = self.p();
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % p).collect();
        BaseElement { coeffs }
    }

    fn neg(&self, a: &BaseElement) -> BaseElement {
        let coeffs = a.coeffs.iter().map(|x| self.prime.neg(x)).collect();
        BaseElement { coeffs }
    }

    fn mul(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        if self.e == 1 {
            return BaseElement { coeffs: vec![self.prime.mul(&a.coeffs[0], &b.coeffs[0])] };
        }
        let prod = poly::mul(&self.prime, &a.coeffs, &b.coeffs);
        self.reduce(&prod)
    }

    fn inv(&self, a: &BaseElement) -> Result<BaseElement, GfError> {
        match &self.modulus {
            None => Ok(BaseElement { coeffs: vec![self.prime.inv(&a.coeffs[0])?] }),
            Some(m) => {
                let inv = poly::inverse_mod(&self.prime, &self.trimmed(a), m)?;
                Ok(self.reduce(&inv))
            }
        }
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn characteristic(&self) -> u64 {
        self.p() as u64
    }

    fn element(&self, mut index: u64) -> BaseElement {
        debug_assert!(index < self.order);
        let p = self.p() as u64;
        let coeffs = (0..self.e)
            .map(|_| {
                let c = (index % p) as u32;
                index /= p;
                c
            })
            .collect();
        BaseElement { coeffs }
    }

    fn index_of(&self, a: &BaseElement) -> u64 {
        let p = self.p() as u64;
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c as u64)
    }
}
