//! GRW distributions `A^r_w`, B-numbers `B_t^r` and enumerators.
//!
//! Two independent routes produce the same tables: enumerating every
//! subcode, or enumerating `F_q`-subspaces `U` and inverting the B-numbers.

mod brute;
mod enumerator;
mod macwilliams;
mod mrd;
mod transversal;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::codes::CodeError;
use crate::qcombin::{big_pow, gauss_binom};

pub use brute::{brute_force_distribution, codeword_weight_counts};
pub use enumerator::{
    classic_rank_enumerator, classic_rank_enumerator_check, enumerator, enumerator_from_btable,
    enumerator_from_distribution, EnumeratorPoly, EnumeratorSource,
};
pub use macwilliams::{dual_distribution, macwilliams_lhs, macwilliams_rhs, DualMethod};
pub use mrd::{mrd_b, mrd_btable, mrd_distribution};
pub use transversal::{a_from_b, b_from_a, b_table_from_distribution, b_table_transversal, dual_b_table};

/// Default cap on the number of subspaces or codewords one computation may
/// visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn check(&self, attempted: BigUint) -> Result<(), DistributionError> {
        if attempted > BigUint::from(self.0) {
            return Err(DistributionError::BudgetExceeded { attempted, limit: self.0 });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistributionError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("computation would visit {attempted} objects, over the budget of {limit}")]
    BudgetExceeded { attempted: BigUint, limit: u64 },
    #[error("inconsistent B-table: {0}")]
    InconsistentBTable(String),
    #[error("t = {t} is outside 0..={max}")]
    OutOfRange { t: usize, max: usize },
    #[error("underdetermined: the system for r = {r} has rank {rank} in {unknowns} unknowns")]
    Underdetermined { r: usize, rank: usize, unknowns: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Shape and field sizes shared by every table of one code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub m: usize,
}

impl Params {
    /// `q^m`.
    pub fn big_q(&self) -> u64 {
        self.q.pow(self.m as u32)
    }

    /// Parameters of the dual code.
    pub fn dual(&self) -> Self {
        Self { k: self.n - self.k, ..*self }
    }

    pub fn of(c: &crate::codes::LinearCode) -> Self {
        Self { n: c.n(), k: c.k(), q: c.spec().q(), m: c.spec().m() }
    }
}

/// `A^r_w` for `0 ≤ r ≤ r_max`, `0 ≤ w ≤ n`; rows above `r_max` were not
/// computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    pub params: Params,
    rows: Vec<Vec<BigUint>>,
}

impl DistributionTable {
    /// Rows `0..=r_max`, every entry zero.
    pub fn zeros(params: Params, r_max: usize) -> Self {
        Self { params, rows: vec![vec![BigUint::zero(); params.n + 1]; r_max + 1] }
    }

    pub fn from_rows(params: Params, rows: Vec<Vec<BigUint>>) -> Result<Self, DistributionError> {
        if rows.is_empty() || rows.len() > params.k + 1 || rows.iter().any(|r| r.len() != params.n + 1) {
            return Err(DistributionError::InvalidParameters(format!(
                "expected up to {} rows of length {}",
                params.k + 1,
                params.n + 1
            )));
        }
        Ok(Self { params, rows })
    }

    pub fn r_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> Option<&[BigUint]> {
        self.rows.get(r).map(Vec::as_slice)
    }

    /// `A^r_w`, with the structural zeros for `r > k` or `w > n`.
    ///
    /// # Panics
    /// If `r ≤ k` but row `r` was not computed.
    pub fn count(&self, r: usize, w: usize) -> BigUint {
        if r > self.params.k || w > self.params.n {
            return BigUint::zero();
        }
        assert!(r <= self.r_max(), "row {r} was not computed");
        self.rows[r][w].clone()
    }

    pub(crate) fn set(&mut self, r: usize, w: usize, value: BigUint) {
        self.rows[r][w] = value;
    }

    /// Structural properties every distribution has. Returns a description
    /// of the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let p = self.params;
        for (r, row) in self.rows.iter().enumerate() {
            for (w, a) in row.iter().enumerate() {
                if r == 0 && *a != BigUint::from(u8::from(w == 0)) {
                    return Err(format!("A^0_{w} = {a}"));
                }
                if w < r && !a.is_zero() {
                    return Err(format!("A^{r}_{w} = {a} with w < r"));
                }
            }
            let sum: BigUint = row.iter().sum();
            let expected = gauss_binom(p.k as u64, r as u64, p.big_q());
            if sum != expected {
                return Err(format!("row {r} sums to {sum}, expected {expected}"));
            }
        }
        Ok(())
    }
}

/// `B_t^r` for `0 ≤ t ≤ n`, `0 ≤ r ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BTable {
    pub params: Params,
    entries: Vec<Vec<BigUint>>,
}

impl BTable {
    pub fn from_entries(params: Params, entries: Vec<Vec<BigUint>>) -> Result<Self, DistributionError> {
        if entries.len() != params.n + 1 || entries.iter().any(|r| r.len() != params.k + 1) {
            return Err(DistributionError::InvalidParameters(format!(
                "expected {} rows of length {}",
                params.n + 1,
                params.k + 1
            )));
        }
        Ok(Self { params, entries })
    }

    /// `B_t^r`, zero outside the table.
    pub fn get(&self, t: usize, r: usize) -> BigUint {
        self.entries.get(t).and_then(|row| row.get(r)).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Rows indexed by `t`.
    pub fn entries(&self) -> &[Vec<BigUint>] {
        &self.entries
    }

    /// `B_t^0 = [n t]_q` for every `t`.
    pub fn check_invariants(&self) -> Result<(), String> {
        let p = self.params;
        for t in 0..=p.n {
            let expected = gauss_binom(p.n as u64, t as u64, p.q);
            if self.entries[t][0] != expected {
                return Err(format!("B_{t}^0 = {}, expected {expected}", self.entries[t][0]));
            }
        }
        Ok(())
    }
}

/// The distribution of the zero code: only `A^0_0 = 1`.
pub(crate) fn zero_code_distribution(params: Params) -> DistributionTable {
    let mut t = DistributionTable::zeros(Params { k: 0, ..params }, 0);
    t.set(0, 0, BigUint::one());
    t
}

/// `q^{mk}`, the number of codewords.
pub(crate) fn codeword_total(p: Params) -> BigUint {
    big_pow(p.big_q(), p.k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Params {
        Params { n: 3, k: 1, q: 2, m: 4 }
    }

    #[test]
    fn invariant_checks() {
        let mut t = DistributionTable::zeros(params(), 1);
        t.set(0, 0, BigUint::one());
        t.set(1, 2, BigUint::one());
        assert_eq!(t.check_invariants(), Ok(()));
        t.set(1, 0, BigUint::one());
        assert!(t.check_invariants().is_err());
        assert_eq!(t.count(3, 1), BigUint::zero());
        assert_eq!(t.count(1, 7), BigUint::zero());
    }

    #[test]
    fn shape_validation() {
        assert!(DistributionTable::from_rows(params(), vec![vec![BigUint::one()]]).is_err());
        assert!(BTable::from_entries(params(), vec![vec![BigUint::one(); 2]; 3]).is_err());
        let b = BTable::from_entries(params(), vec![vec![BigUint::one(); 2]; 4]).unwrap();
        assert_eq!(b.get(9, 0), BigUint::zero());
    }

    #[test]
    fn budget_reports_attempt() {
        let b = Budget(10);
        assert_eq!(b.check(BigUint::from(10u32)), Ok(()));
        assert_eq!(
            b.check(BigUint::from(11u32)),
            Err(DistributionError::BudgetExceeded { attempted: BigUint::from(11u32), limit: 10 })
        );
    }
}
