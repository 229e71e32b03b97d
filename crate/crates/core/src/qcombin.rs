//! Gaussian binomial coefficients and the transforms built on them.
//!
//! The base `Q` is a plain integer `≥ 2` rather than a field handle, since
//! both `q` and `q^m` appear as bases, sometimes in one formula. Everything
//! here is exact.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// `Q^exp` as a big integer.
pub fn big_pow(q: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), exp as usize)
}

/// `[a b]_Q`, the number of `b`-dimensional subspaces of `F_Q^a`.
pub fn gauss_binom(a: u64, b: u64, q: u64) -> BigUint {
    assert!(q >= 2, "Gaussian binomial base must be at least 2");
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..b {
        num *= big_pow(q, a - i) - 1u32;
        den *= big_pow(q, i + 1) - 1u32;
    }
    num / den
}

/// Memoised triangle `[a b]_Q` for `a ≤ max_a`, filled once by the q-Pascal
/// rule `[a b] = [a-1 b-1] + Q^b [a-1 b]` and read-only afterwards.
#[derive(Clone, Debug)]
pub struct GaussianBinomials {
    q: u64,
    rows: Vec<Vec<BigUint>>,
}

impl GaussianBinomials {
    pub fn new(q: u64, max_a: usize) -> Self {
        assert!(q >= 2, "Gaussian binomial base must be at least 2");
        let powers: Vec<BigUint> = (0..=max_a as u64).map(|b| big_pow(q, b)).collect();
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_a + 1);
        rows.push(vec![BigUint::one()]);
        for a in 1..=max_a {
            let prev = &rows[a - 1];
            let row = (0..=a)
                .map(|b| {
                    let left = if b == 0 { BigUint::zero() } else { prev[b - 1].clone() };
                    let right = prev.get(b).map_or_else(BigUint::zero, |x| &powers[b] * x);
                    left + right
                })
                .collect();
            rows.push(row);
        }
        Self { q, rows }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn max_a(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[a b]_Q`; zero when `b > a`. Panics if `a` exceeds the table.
    pub fn get(&self, a: usize, b: usize) -> &BigUint {
        static ZERO: std::sync::OnceLock<BigUint> = std::sync::OnceLock::new();
        if b > a {
            return ZERO.get_or_init(BigUint::zero);
        }
        &self.rows[a][b]
    }
}

/// `b_j = Σ_i [i j]_Q a_i`.
pub fn gauss_forward(a: &[BigInt], q: u64) -> Vec<BigInt> {
    let n = a.len();
    let table = GaussianBinomials::new(q, n.saturating_sub(1));
    (0..n).map(|j| (j..n).map(|i| BigInt::from(table.get(i, j).clone()) * &a[i]).sum()).collect()
}

/// Sign and power factor `(-1)^d Q^{d(d-1)/2}` of the inverse transform.
pub(crate) fn inversion_weight(d: u64, q: u64) -> BigInt {
    let magnitude = BigInt::from(big_pow(q, d * d.saturating_sub(1) / 2));
    if d % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// Inverse of [`gauss_forward`]:
/// `a_j = Σ_{i≥j} (-1)^{i-j} Q^{(i-j)(i-j-1)/2} [i j]_Q b_i`.
pub fn gauss_inversion(b: &[BigInt], q: u64) -> Vec<BigInt> {
    let n = b.len();
    let table = GaussianBinomials::new(q, n.saturating_sub(1));
    (0..n)
        .map(|j| {
            (j..n).map(|i| inversion_weight((i - j) as u64, q) * BigInt::from(table.get(i, j).clone()) * &b[i]).sum()
        })
        .collect()
}

/// Homogeneous polynomial in `X, Y` of fixed degree; `coeffs[i]` multiplies
/// `X^i Y^{degree-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    coeffs: Vec<BigInt>,
}

impl HomPoly {
    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); degree + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial has at least one coefficient");
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `X^i Y^{degree-i}`.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree() + other.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiply by `X^k`.
    pub fn shift_x(&self, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Sum of two polynomials of equal degree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degrees must match");
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), d - i))
            .sum()
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut factors = Vec::new();
            let mag = c.abs();
            let vars = [("X", i), ("Y", d - i)];
            if !mag.is_one() || vars.iter().all(|(_, e)| *e == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in vars {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{}", factors.join("*"))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Π_{p=0}^{t-1} (Y − Q^p X)`, degree `t`.
pub fn falling_q_product(t: usize, q: u64) -> HomPoly {
    (0..t as u64).fold(HomPoly::from_coeffs(vec![BigInt::one()]), |acc, p| {
        let factor = HomPoly::from_coeffs(vec![BigInt::one(), -BigInt::from(big_pow(q, p))]);
        acc.mul(&factor)
    })
}

/// `[a+b c]_Q = Σ_l Q^{l(l+b-c)} [a l]_Q [b c-l]_Q`, evaluated exactly.
///
/// Terms where `l + b - c < 0` have `[b c-l]_Q = 0` and are skipped.
pub fn vandermonde_check(a: u64, b: u64, c: u64, q: u64) -> bool {
    let lhs = gauss_binom(a + b, c, q);
    let rhs: BigUint = (0..=c)
        .filter_map(|l| {
            let right = gauss_binom(b, c - l, q);
            if right.is_zero() {
                return None;
            }
            let exp = l * (l + b - c);
            Some(big_pow(q, exp) * gauss_binom(a, l, q) * right)
        })
        .sum();
    lhs == rhs
}
