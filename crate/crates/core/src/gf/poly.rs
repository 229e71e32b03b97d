//! Dense univariate polynomials over a [`Field`], coefficients in ascending
//! degree. The zero polynomial is the empty vector.

use super::{Field, GfError};

pub fn trim<F: Field>(f: &F, p: &mut Vec<F::Elem>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<F: Field>(f: &F, p: &[F::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !f.is_zero(c))
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let len = a.len().max(b.len());
    let zero = f.zero();
    let mut out: Vec<_> = (0..len).map(|i| f.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero))).collect();
    trim(f, &mut out);
    out
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let nb: Vec<_> = b.iter().map(|c| f.neg(c)).collect();
    add(f, a, &nb)
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
#[allow(clippy::type_complexity)]
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<(Vec<F::Elem>, Vec<F::Elem>), GfError> {
    let db = degree(f, b).ok_or(GfError::DivisionByZero)?;
    let lead_inv = f.inv(&b[db])?;
    let mut rem: Vec<_> = a.to_vec();
    trim(f, &mut rem);
    if rem.len() <= db {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    while let Some(dr) = degree(f, &rem) {
        if dr < db {
            break;
        }
        let c = f.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        for (i, bc) in b[..=db].iter().enumerate() {
            rem[shift + i] = f.sub(&rem[shift + i], &f.mul(&c, bc));
        }
        quot[shift] = c;
        trim(f, &mut rem);
    }
    trim(f, &mut quot);
    Ok((quot, rem))
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>, GfError> {
    divrem(f, a, b).map(|(_, r)| r)
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm.
pub fn inverse_mod<F: Field>(f: &F, a: &[F::Elem], modulus: &[F::Elem]) -> Result<Vec<F::Elem>, GfError> {
    let mut r0 = modulus.to_vec();
    let mut r1 = rem(f, a, modulus)?;
    if r1.is_empty() {
        return Err(GfError::DivisionByZero);
    }
    let mut t0: Vec<F::Elem> = Vec::new();
    let mut t1 = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1)?;
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    // r0 is a nonzero constant when gcd(a, modulus) = 1
    if degree(f, &r0) != Some(0) {
        return Err(GfError::DivisionByZero);
    }
    let c = f.inv(&r0[0])?;
    let mut out: Vec<_> = t0.iter().map(|x| f.mul(x, &c)).collect();
    trim(f, &mut out);
    Ok(out)
}

/// Evaluate by Horner's rule.
pub fn eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    p.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}
