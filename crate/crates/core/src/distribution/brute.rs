use num_bigint::BigUint;
use rayon::prelude::*;

use super::{codeword_total, Budget, DistributionError, DistributionTable, Params};
use crate::codes::view::{with_view, CodeView};
use crate::codes::LinearCode;
use crate::gf::Coordinates;
use crate::linalg::{pivot_patterns, subspaces_with_pivots};
use crate::qcombin::gauss_binom;

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Rank support dimensions of all `r`-dimensional subcodes, binned.
fn weight_histogram<K: Coordinates>(v: &CodeView<K>, r: usize) -> Vec<u64> {
    let n = v.n();
    pivot_patterns(v.k(), r)
        .into_par_iter()
        .map(|p| {
            let mut hist = vec![0u64; n + 1];
            for s in subspaces_with_pivots(&v.field, v.k(), &p) {
                hist[v.rows_weight(&v.subcode_basis(s.basis()))] += 1;
            }
            hist
        })
        .reduce(|| vec![0; n + 1], add_hist)
}

/// `A^r_w` by visiting every subcode of dimension `r ≤ r_max` (default `k`).
pub fn brute_force_distribution(
    c: &LinearCode,
    r_max: Option<usize>,
    budget: Budget,
) -> Result<DistributionTable, DistributionError> {
    let params = Params::of(c);
    let r_max = r_max.unwrap_or(params.k).min(params.k);
    let total: BigUint = (0..=r_max).map(|r| gauss_binom(params.k as u64, r as u64, params.big_q())).sum();
    budget.check(total)?;
    let mut table = DistributionTable::zeros(params, r_max);
    for r in 0..=r_max {
        let hist = with_view!(c, v => weight_histogram(v, r));
        for (w, count) in hist.into_iter().enumerate() {
            table.set(r, w, BigUint::from(count));
        }
    }
    Ok(table)
}

fn codeword_histogram<K: Coordinates>(v: &CodeView<K>) -> Vec<u64> {
    let order = v.field.order();
    let total = order.pow(v.k() as u32);
    let n = v.n();
    (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut hist, mut idx| {
                let msg: Vec<_> = (0..v.k())
                    .map(|_| {
                        let x = v.field.element(idx % order);
                        idx /= order;
                        x
                    })
                    .collect();
                hist[v.vector_weight(&v.encode(&msg))] += 1;
                hist
            },
        )
        .reduce(|| vec![0; n + 1], add_hist)
}

/// Number of codewords of each rank weight, by visiting all `q^{mk}` of
/// them.
pub fn codeword_weight_counts(c: &LinearCode, budget: Budget) -> Result<Vec<BigUint>, DistributionError> {
    budget.check(codeword_total(Params::of(c)))?;
    let hist = with_view!(c, v => codeword_histogram(v));
    Ok(hist.into_iter().map(BigUint::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::test_codes::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn cyclic_example_row() {
        let c = cyclic_3_1();
        let t = brute_force_distribution(&c, None, Budget::default()).unwrap();
        assert_eq!(t.row(0).unwrap(), &big(&[1, 0, 0, 0])[..]);
        assert_eq!(t.row(1).unwrap(), &big(&[0, 0, 1, 0])[..]);
        assert_eq!(t.check_invariants(), Ok(()));
        assert_eq!(codeword_weight_counts(&c, Budget::default()).unwrap(), big(&[1, 0, 15, 0]));
    }

    #[test]
    fn gabidulin_rows() {
        let t = brute_force_distribution(&gabidulin(3), None, Budget::default()).unwrap();
        assert_eq!(t.row(1).unwrap(), &big(&[0, 0, 130, 2760, 3753])[..]);
        assert_eq!(t.row(2).unwrap(), &big(&[0, 0, 0, 40, 6603])[..]);
        assert_eq!(t.row(3).unwrap(), &big(&[0, 0, 0, 0, 1])[..]);
        assert_eq!(t.check_invariants(), Ok(()));
    }

    #[test]
    fn mrd_examples_share_rows() {
        let a = brute_force_distribution(&gabidulin(2), None, Budget::default()).unwrap();
        let b = brute_force_distribution(&mrd_non_gabidulin(), None, Budget::default()).unwrap();
        assert_eq!(a.row(1).unwrap(), &big(&[0, 0, 0, 40, 42])[..]);
        assert_eq!(a, b);
        let words = codeword_weight_counts(&gabidulin(2), Budget::default()).unwrap();
        assert_eq!(words[3], BigUint::from(40u32 * 80));
    }

    #[test]
    fn r_max_and_budget() {
        let c = gabidulin(3);
        let t = brute_force_distribution(&c, Some(1), Budget::default()).unwrap();
        assert_eq!(t.r_max(), 1);
        assert!(matches!(
            brute_force_distribution(&c, None, Budget(100)),
            Err(DistributionError::BudgetExceeded { .. })
        ));
        assert!(matches!(codeword_weight_counts(&c, Budget(1000)), Err(DistributionError::BudgetExceeded { .. })));
    }

    #[test]
    fn plain_view_agrees() {
        let c = mrd_non_gabidulin();
        for r in 0..=2 {
            assert_eq!(weight_histogram(&c.plain_view(), r), weight_histogram(c.indexed_view().unwrap(), r));
        }
        let d = cyclic_3_1().dual().unwrap();
        assert_eq!(codeword_histogram(&d.plain_view()), codeword_histogram(d.indexed_view().unwrap()));
    }
}
