use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};

use super::{
    b_table_transversal, brute_force_distribution, codeword_weight_counts, BTable, Budget, DistributionError,
    DistributionTable,
};
use crate::codes::LinearCode;
use crate::qcombin::{falling_q_product, HomPoly};

/// `W^r(X, Y) = Σ_w A^r_w X^w Y^{n-w}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratorPoly {
    pub r: usize,
    /// `coeffs[w]` multiplies `X^w Y^{n-w}`.
    pub coeffs: Vec<BigUint>,
}

impl EnumeratorPoly {
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_hom_poly(&self) -> HomPoly {
        HomPoly::from_coeffs(self.coeffs.iter().cloned().map(BigInt::from).collect())
    }
}

impl fmt::Display for EnumeratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_hom_poly().fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumeratorSource {
    BTable,
    Distribution,
}

/// `Σ_t B_t^r X^{n-t} Π_{p<t} (Y - q^p X)`.
pub fn enumerator_from_btable(b: &BTable, r: usize) -> Result<EnumeratorPoly, DistributionError> {
    let n = b.params.n;
    let poly = (0..=n).fold(HomPoly::zero(n), |acc, t| {
        let term = falling_q_product(t, b.params.q).shift_x(n - t).scale(&BigInt::from(b.get(t, r)));
        acc.add(&term)
    });
    let coeffs = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(w, c)| match c.sign() {
            Sign::Minus => Err(DistributionError::InconsistentBTable(format!("coefficient of X^{w} is {c}"))),
            _ => Ok(c.magnitude().clone()),
        })
        .collect::<Result<_, _>>()?;
    Ok(EnumeratorPoly { r, coeffs })
}

pub fn enumerator_from_distribution(a: &DistributionTable, r: usize) -> EnumeratorPoly {
    EnumeratorPoly { r, coeffs: (0..=a.params.n).map(|w| a.count(r, w)).collect() }
}

pub fn enumerator(
    c: &LinearCode,
    r: usize,
    source: EnumeratorSource,
    budget: Budget,
) -> Result<EnumeratorPoly, DistributionError> {
    match source {
        EnumeratorSource::BTable => enumerator_from_btable(&b_table_transversal(c, budget)?, r),
        EnumeratorSource::Distribution => {
            let a = brute_force_distribution(c, Some(r), budget)?;
            Ok(enumerator_from_distribution(&a, r))
        }
    }
}

/// `Σ_{c ∈ C} X^{wt(c)} Y^{n-wt(c)}` from the codeword counts.
pub fn classic_rank_enumerator(c: &LinearCode, budget: Budget) -> Result<HomPoly, DistributionError> {
    let counts = codeword_weight_counts(c, budget)?;
    Ok(HomPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// Whether the codeword enumerator equals `W^0 + (q^m - 1) W^1`.
pub fn classic_rank_enumerator_check(c: &LinearCode, budget: Budget) -> Result<bool, DistributionError> {
    let classic = classic_rank_enumerator(c, budget)?;
    let a = brute_force_distribution(c, Some(1), budget)?;
    let w0 = enumerator_from_distribution(&a, 0).to_hom_poly();
    let w1 = enumerator_from_distribution(&a, 1).to_hom_poly();
    let combined = w0.add(&w1.scale(&BigInt::from(a.params.big_q() - 1)));
    Ok(combined == classic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::test_codes::*;

    #[test]
    fn cyclic_example_enumerators() {
        let c = cyclic_3_1();
        for source in [EnumeratorSource::BTable, EnumeratorSource::Distribution] {
            let w1 = enumerator(&c, 1, source, Budget::default()).unwrap();
            assert_eq!(w1.to_string(), "X^2*Y");
            let w0 = enumerator(&c, 0, source, Budget::default()).unwrap();
            assert_eq!(w0.to_string(), "Y^3");
        }
        assert_eq!(classic_rank_enumerator(&c, Budget::default()).unwrap().to_string(), "Y^3 + 15*X^2*Y");
        assert!(classic_rank_enumerator_check(&c, Budget::default()).unwrap());
    }

    #[test]
    fn mrd_enumerator() {
        let c = gabidulin(2);
        let w = enumerator(&c, 1, EnumeratorSource::BTable, Budget::default()).unwrap();
        assert_eq!(w.to_string(), "40*X^3*Y + 42*X^4");
        assert_eq!(w, enumerator(&c, 1, EnumeratorSource::Distribution, Budget::default()).unwrap());
        assert!(classic_rank_enumerator_check(&mrd_non_gabidulin(), Budget::default()).unwrap());
    }
}
