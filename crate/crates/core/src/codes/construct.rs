use super::{rank_weight, CodeError, LinearCode};
use crate::gf::{poly, ExtElement, Field, FieldSpec};
use crate::linalg::Matrix;

/// Rows `(g_1^{q^i}, ..., g_n^{q^i})` for `i < k`.
pub fn gabidulin_generator(spec: &FieldSpec, k: usize, points: &[ExtElement]) -> Result<Matrix<ExtElement>, CodeError> {
    let n = points.len();
    if k == 0 || k > n {
        return Err(CodeError::Degenerate { k, n });
    }
    if n > spec.m() || rank_weight(spec, points) != n {
        return Err(CodeError::InvalidPoints);
    }
    let rows = (0..k).map(|i| points.iter().map(|g| spec.frobenius_power(g, i)).collect()).collect();
    Ok(Matrix::from_rows(n, rows)?)
}

pub fn gabidulin_code(spec: &FieldSpec, k: usize, points: &[ExtElement]) -> Result<LinearCode, CodeError> {
    LinearCode::from_generator(spec.clone(), &gabidulin_generator(spec, k, points)?)
}

/// Generator rows `x^i g(x)` for `i < n - deg g`. `g` is given by ascending
/// coefficients and must divide `x^n - 1`.
pub fn cyclic_generator(spec: &FieldSpec, n: usize, g: &[ExtElement]) -> Result<Matrix<ExtElement>, CodeError> {
    let mut g = g.to_vec();
    poly::trim(spec, &mut g);
    let deg = poly::degree(spec, &g).ok_or_else(|| CodeError::InvalidGenerator("zero polynomial".into()))?;
    if deg >= n {
        return Err(CodeError::InvalidGenerator(format!("degree {deg} leaves no message symbols for n = {n}")));
    }
    let mut xn1 = vec![spec.zero(); n + 1];
    xn1[0] = spec.neg(&spec.one());
    xn1[n] = spec.one();
    let (_, r) = poly::divrem(spec, &xn1, &g)?;
    if poly::degree(spec, &r).is_some() {
        return Err(CodeError::InvalidGenerator(format!("does not divide x^{n} - 1")));
    }
    let k = n - deg;
    let rows = (0..k)
        .map(|i| {
            let mut row = vec![spec.zero(); n];
            row[i..=i + deg].clone_from_slice(&g);
            row
        })
        .collect();
    Ok(Matrix::from_rows(n, rows)?)
}

pub fn cyclic_code(spec: &FieldSpec, n: usize, g: &[ExtElement]) -> Result<LinearCode, CodeError> {
    LinearCode::from_generator(spec.clone(), &cyclic_generator(spec, n, g)?)
}

/// A uniformly random `[n, k]` code: random `k × n` matrices are drawn
/// until one has full rank.
pub fn random_code<R: rand::Rng + ?Sized>(
    spec: &FieldSpec,
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<LinearCode, CodeError> {
    if k == 0 || k > n {
        return Err(CodeError::Degenerate { k, n });
    }
    loop {
        let rows = (0..k).map(|_| (0..n).map(|_| spec.element(rng.gen_range(0..spec.order()))).collect()).collect();
        match LinearCode::from_rows(spec.clone(), rows) {
            Err(CodeError::RankDeficient { .. }) => continue,
            other => return other,
        }
    }
}
