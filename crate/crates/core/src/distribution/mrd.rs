//! Closed forms for codes meeting the Singleton bound, which depend only on
//! `(n, k, q, m)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use super::{BTable, DistributionError, DistributionTable, Params};
use crate::qcombin::{inversion_weight, GaussianBinomials};

fn check_shape(n: usize, k: usize, q: u64, m: usize) -> Result<Params, DistributionError> {
    if k == 0 || k > n || n > m || q < 2 {
        return Err(DistributionError::InvalidParameters(format!(
            "need 1 <= k <= n <= m and q >= 2, got n = {n}, k = {k}, q = {q}, m = {m}"
        )));
    }
    Ok(Params { n, k, q, m })
}

/// `B_t^r = [n t]_q [k-t r]_{q^m}` for `t ≤ k`, else 0. For `t > k` every
/// `C(U)` is zero, so `B_t^0` is still `[n t]_q`.
pub fn mrd_b(n: usize, k: usize, q: u64, m: usize, t: usize, r: usize) -> BigUint {
    if t > k {
        return if r == 0 { crate::qcombin::gauss_binom(n as u64, t as u64, q) } else { BigUint::zero() };
    }
    let p = Params { n, k, q, m };
    crate::qcombin::gauss_binom(n as u64, t as u64, q)
        * crate::qcombin::gauss_binom((k - t) as u64, r as u64, p.big_q())
}

pub fn mrd_btable(n: usize, k: usize, q: u64, m: usize) -> Result<BTable, DistributionError> {
    let p = check_shape(n, k, q, m)?;
    let entries = (0..=n).map(|t| (0..=k).map(|r| mrd_b(n, k, q, m, t, r)).collect()).collect();
    BTable::from_entries(p, entries)
}

/// `A^r_w = Σ_{t=n-w}^{k} (-1)^{t+w-n} q^{(t+w-n)(t+w-n-1)/2} [t n-w]_q [n t]_q [k-t r]_{q^m}`
/// for `r ≥ 1`; row 0 is the zero subcode alone.
pub fn mrd_distribution(n: usize, k: usize, q: u64, m: usize) -> Result<DistributionTable, DistributionError> {
    let p = check_shape(n, k, q, m)?;
    let small = GaussianBinomials::new(q, n);
    let big = GaussianBinomials::new(p.big_q(), k);
    let mut table = DistributionTable::zeros(p, k);
    table.set(0, 0, BigUint::from(1u8));
    for r in 1..=k {
        for w in 0..=n {
            let value: BigInt = (n - w..=k)
                .map(|t| {
                    let d = (t + w - n) as u64;
                    inversion_weight(d, q) * BigInt::from(small.get(t, n - w) * small.get(n, t) * big.get(k - t, r))
                })
                .sum();
            if value.sign() == Sign::Minus {
                return Err(DistributionError::InconsistentBTable(format!("A^{r}_{w} = {value}")));
            }
            table.set(r, w, value.magnitude().clone());
        }
    }
    table.check_invariants().map_err(DistributionError::InconsistentBTable)?;
    Ok(table)
}
