use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{
    a_from_b, b_from_a, brute_force_distribution, dual_b_table, zero_code_distribution, Budget, DistributionError,
    DistributionTable, Params,
};
use crate::codes::LinearCode;
use crate::qcombin::{big_pow, GaussianBinomials};

/// How to obtain the distribution of `C^⊥`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualMethod {
    /// Dual B-numbers from subspaces of `F_q^n`, then inversion.
    Transversal,
    /// Solve the moment identities against the distribution of `C`.
    Solve,
    /// Build `C^⊥` and enumerate its subcodes.
    Direct,
}

/// Right-hand side of the moment identity for `0 ≤ t ≤ n - k`:
/// `Σ_p Σ_l A_p^l(C) q^{ml(l+n-k-t-r)} [n-p n-t]_q [n-k-t r-l]_{q^m}`,
/// which equals `Σ_w [n-w t]_q A^r_w(C^⊥)`.
pub fn macwilliams_rhs(a: &DistributionTable, t: usize, r: usize) -> Result<BigUint, DistributionError> {
    let p = a.params;
    let codim = p.n - p.k;
    if t > codim {
        return Err(DistributionError::OutOfRange { t, max: codim });
    }
    let small = GaussianBinomials::new(p.q, p.n);
    let big = GaussianBinomials::new(p.big_q(), codim.max(r));
    let mut total = BigUint::zero();
    for l in 0..=r.min(p.k) {
        let outer = big.get(codim - t, r - l);
        if outer.is_zero() {
            // here l + n - k - t - r < 0
            continue;
        }
        let exp = (p.m * l * (l + codim - t - r)) as u64;
        let factor = big_pow(p.q, exp) * outer;
        for w in 0..=p.n {
            let count = a.count(l, w);
            if count.is_zero() {
                continue;
            }
            total += &factor * small.get(p.n - w, p.n - t) * count;
        }
    }
    Ok(total)
}

/// Left-hand side, `Σ_w [n-w t]_q A^r_w(C^⊥)`, from the dual distribution.
pub fn macwilliams_lhs(dual: &DistributionTable, t: usize, r: usize) -> BigUint {
    b_from_a(dual, t, r)
}

pub fn dual_distribution(
    c: &LinearCode,
    method: DualMethod,
    budget: Budget,
) -> Result<DistributionTable, DistributionError> {
    let params = Params::of(c);
    match method {
        DualMethod::Transversal => a_from_b(&dual_b_table(c, budget)?),
        DualMethod::Direct => match c.dual() {
            Ok(d) => brute_force_distribution(&d, None, budget),
            Err(_) => Ok(zero_code_distribution(params)),
        },
        DualMethod::Solve => {
            let a = brute_force_distribution(c, None, budget)?;
            solve_dual(&a)
        }
    }
}

/// Solves the moment identities row by row, with unknowns `A^r_w(C^⊥)` for
/// `r ≤ w ≤ n`. Row 0 is fixed by the zero subcode.
pub(crate) fn solve_dual(a: &DistributionTable) -> Result<DistributionTable, DistributionError> {
    let p = a.params;
    let dual = p.dual();
    let codim = dual.k;
    let small = GaussianBinomials::new(p.q, p.n);
    let mut table = DistributionTable::zeros(dual, codim);
    table.set(0, 0, BigUint::one());
    for r in 1..=codim {
        let unknowns = p.n - r + 1;
        let system: Vec<(Vec<BigRational>, BigRational)> = (0..=codim)
            .map(|t| {
                let row =
                    (r..=p.n).map(|w| BigRational::from_integer(BigInt::from(small.get(p.n - w, t).clone()))).collect();
                let rhs = macwilliams_rhs(a, t, r).expect("t is within range");
                (row, BigRational::from_integer(BigInt::from(rhs)))
            })
            .collect();
        let solution = solve_unique(system, unknowns).map_err(|rank| {
            if rank == usize::MAX {
                DistributionError::InconsistentBTable(format!("moment identities for r = {r} are inconsistent"))
            } else {
                DistributionError::Underdetermined { r, rank, unknowns }
            }
        })?;
        for (i, x) in solution.into_iter().enumerate() {
            if !x.is_integer() || x.is_negative() {
                return Err(DistributionError::InconsistentBTable(format!("A^{r}_{} = {x}", r + i)));
            }
            table.set(r, r + i, x.to_integer().magnitude().clone());
        }
    }
    table.check_invariants().map_err(DistributionError::InconsistentBTable)?;
    Ok(table)
}

/// Gauss-Jordan over the rationals. `Err(rank)` when the solution is not
/// unique, `Err(usize::MAX)` when there is none.
fn solve_unique(mut rows: Vec<(Vec<BigRational>, BigRational)>, unknowns: usize) -> Result<Vec<BigRational>, usize> {
    let mut lead = 0;
    for col in 0..unknowns {
        let Some(pr) = (lead..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(lead, pr);
        let inv = rows[lead].0[col].recip();
        rows[lead].0.iter_mut().for_each(|x| *x *= &inv);
        rows[lead].1 *= &inv;
        let pivot = rows[lead].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == lead || row.0[col].is_zero() {
                continue;
            }
            let factor = row.0[col].clone();
            for (x, y) in row.0.iter_mut().zip(&pivot.0) {
                *x -= &factor * y;
            }
            row.1 -= &factor * &pivot.1;
        }
        lead += 1;
    }
    if rows[lead..].iter().any(|(_, rhs)| !rhs.is_zero()) {
        return Err(usize::MAX);
    }
    if lead < unknowns {
        return Err(lead);
    }
    Ok(rows.into_iter().take(unknowns).map(|(_, rhs)| rhs).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::test_codes::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn cyclic_example_moments() {
        let c = cyclic_3_1();
        let a = brute_force_distribution(&c, None, Budget::default()).unwrap();
        let rhs: Vec<_> = (0..=2).map(|t| macwilliams_rhs(&a, t, 1).unwrap()).collect();
        assert_eq!(rhs, big(&[17, 7, 1]));
        assert_eq!(macwilliams_rhs(&a, 3, 1), Err(DistributionError::OutOfRange { t: 3, max: 2 }));
    }

    #[test]
    fn all_dual_methods_agree_on_cyclic_example() {
        let c = cyclic_3_1();
        let tables: Vec<_> = [DualMethod::Transversal, DualMethod::Direct, DualMethod::Solve]
            .into_iter()
            .map(|m| dual_distribution(&c, m, Budget::default()).unwrap())
            .collect();
        assert_eq!(tables[0].row(1).unwrap(), &big(&[0, 1, 4, 12])[..]);
        assert_eq!(tables[0].row(2).unwrap(), &big(&[0, 0, 0, 1])[..]);
        assert_eq!(tables[0], tables[1]);
        assert_eq!(tables[0], tables[2]);
    }

    #[test]
    fn identity_holds_beyond_dual_dimension() {
        // for r > n - k both sides vanish
        let c = gabidulin(3);
        let a = brute_force_distribution(&c, None, Budget::default()).unwrap();
        let d = dual_distribution(&c, DualMethod::Transversal, Budget::default()).unwrap();
        for t in 0..=1 {
            for r in 0..=3 {
                assert_eq!(macwilliams_rhs(&a, t, r).unwrap(), macwilliams_lhs(&d, t, r), "t={t} r={r}");
            }
        }
    }

    #[test]
    fn solve_reports_underdetermined() {
        // [4,2] over F_81: r = 1 has 4 unknowns and 3 equations
        let c = gabidulin(2);
        assert_eq!(
            dual_distribution(&c, DualMethod::Solve, Budget::default()),
            Err(DistributionError::Underdetermined { r: 1, rank: 3, unknowns: 4 })
        );
    }

    #[test]
    fn full_space_dual_is_zero_code() {
        let f = f16();
        let full = LinearCode::from_generator(f.clone(), &crate::linalg::Matrix::identity(&f, 2)).unwrap();
        for m in [DualMethod::Transversal, DualMethod::Direct] {
            let t = dual_distribution(&full, m, Budget::default()).unwrap();
            assert_eq!(t.rows(), &[big(&[1, 0, 0])]);
        }
    }

    #[test]
    fn linear_solver_cases() {
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        let sys = vec![(vec![q(1), q(1)], q(3)), (vec![q(1), q(-1)], q(1))];
        assert_eq!(solve_unique(sys, 2), Ok(vec![q(2), q(1)]));
        let sys = vec![(vec![q(1), q(1)], q(3)), (vec![q(2), q(2)], q(6))];
        assert_eq!(solve_unique(sys, 2), Err(1));
        let sys = vec![(vec![q(1)], q(3)), (vec![q(1)], q(4))];
        assert_eq!(solve_unique(sys, 1), Err(usize::MAX));
    }
}
