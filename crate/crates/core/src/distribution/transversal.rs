use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use rayon::prelude::*;

use super::{BTable, Budget, DistributionError, DistributionTable, Params};
use crate::codes::view::{with_view, BaseElem, CodeView};
use crate::codes::LinearCode;
use crate::gf::Coordinates;
use crate::linalg::{pivot_patterns, subspaces_with_pivots, Subspace};
use crate::qcombin::{gauss_binom, inversion_weight, GaussianBinomials};

/// `hist[t][d]`: how many `t`-dimensional `U ⊆ F_q^n` give `dim = d`.
fn dimension_histogram<K: Coordinates>(
    v: &CodeView<K>,
    max_dim: usize,
    dim: impl Fn(&Subspace<BaseElem<K>>) -> usize + Sync,
) -> Vec<Vec<u64>> {
    let n = v.n();
    (0..=n)
        .map(|t| {
            pivot_patterns(n, t)
                .into_par_iter()
                .map(|p| {
                    let mut hist = vec![0u64; max_dim + 1];
                    for u in subspaces_with_pivots(v.base(), n, &p) {
                        hist[dim(&u)] += 1;
                    }
                    hist
                })
                .reduce(
                    || vec![0; max_dim + 1],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        })
        .collect()
}

fn table_from_histogram(params: Params, hist: Vec<Vec<u64>>) -> BTable {
    let binoms = GaussianBinomials::new(params.big_q(), params.k);
    let entries = hist
        .into_iter()
        .map(|row| {
            (0..=params.k)
                .map(|r| row.iter().enumerate().map(|(d, &count)| binoms.get(d, r) * BigUint::from(count)).sum())
                .collect()
        })
        .collect();
    BTable::from_entries(params, entries).expect("histogram has n + 1 rows")
}

fn check_subspace_budget(p: Params, budget: Budget) -> Result<(), DistributionError> {
    budget.check((0..=p.n).map(|t| gauss_binom(p.n as u64, t as u64, p.q)).sum())
}

/// `B_t^r = Σ_{dim U = t} [dim C(U) r]_{q^m}` by visiting every `U`.
pub fn b_table_transversal(c: &LinearCode, budget: Budget) -> Result<BTable, DistributionError> {
    let params = Params::of(c);
    check_subspace_budget(params, budget)?;
    let hist = with_view!(c, v => dimension_histogram(v, params.k, |u| v.dim_sub_u(u)));
    Ok(table_from_histogram(params, hist))
}

/// The B-table of `C^⊥` without building it: for `dim V = t`,
/// `dim C^⊥(V) = dim(C ∩ V_L) + n - k - t`.
pub fn dual_b_table(c: &LinearCode, budget: Budget) -> Result<BTable, DistributionError> {
    let params = Params::of(c);
    check_subspace_budget(params, budget)?;
    let (n, k) = (params.n, params.k);
    let hist = with_view!(c, v => dimension_histogram(v, n - k, |u| v.dim_meet_extended(u) + n - k - u.dim()));
    Ok(table_from_histogram(params.dual(), hist))
}

/// `B_t^r = Σ_w [n-w t]_q A^r_w`.
pub fn b_from_a(a: &DistributionTable, t: usize, r: usize) -> BigUint {
    let p = a.params;
    (0..=p.n).map(|w| gauss_binom((p.n - w) as u64, t as u64, p.q) * a.count(r, w)).sum()
}

/// The whole B-table of a fully computed distribution.
pub fn b_table_from_distribution(a: &DistributionTable) -> Result<BTable, DistributionError> {
    let p = a.params;
    if a.r_max() < p.k {
        return Err(DistributionError::InvalidParameters(format!(
            "distribution has rows up to {} but k = {}",
            a.r_max(),
            p.k
        )));
    }
    let entries = (0..=p.n).map(|t| (0..=p.k).map(|r| b_from_a(a, t, r)).collect()).collect();
    BTable::from_entries(p, entries)
}

/// Inverts [`b_from_a`]:
/// `A^r_w = Σ_{t ≥ n-w} (-1)^{t+w-n} q^{(t+w-n)(t+w-n-1)/2} [t n-w]_q B_t^r`.
pub fn a_from_b(b: &BTable) -> Result<DistributionTable, DistributionError> {
    let p = b.params;
    let binoms = GaussianBinomials::new(p.q, p.n);
    let mut table = DistributionTable::zeros(p, p.k);
    for r in 0..=p.k {
        for w in 0..=p.n {
            let value: BigInt = (p.n - w..=p.n)
                .map(|t| {
                    let d = (t + w - p.n) as u64;
                    inversion_weight(d, p.q) * BigInt::from(binoms.get(t, p.n - w).clone()) * BigInt::from(b.get(t, r))
                })
                .sum();
            let value = match value.sign() {
                Sign::Minus => return Err(DistributionError::InconsistentBTable(format!("A^{r}_{w} = {value}"))),
                _ => value.magnitude().clone(),
            };
            if !value.is_zero() {
                table.set(r, w, value);
            }
        }
    }
    table.check_invariants().map_err(DistributionError::InconsistentBTable)?;
    Ok(table)
}
