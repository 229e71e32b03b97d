//! The full battery of cross-checks for one code.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::codes::{hierarchy, GrwMethod, Hierarchy, LinearCode};
use crate::distribution::{
    a_from_b, b_table_from_distribution, b_table_transversal, brute_force_distribution, codeword_weight_counts,
    dual_b_table, dual_distribution, enumerator_from_btable, enumerator_from_distribution, macwilliams_lhs,
    macwilliams_rhs, mrd_distribution, Budget, DistributionError, DistributionTable, DualMethod, Params,
};
use crate::qcombin::HomPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name, passed, detail: detail.into() });
    }

    fn push_eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &'static str, left: &T, right: &T) {
        let passed = left == right;
        let detail = if passed { String::new() } else { format!("{left:?} != {right:?}") };
        self.push(name, passed, detail);
    }
}

fn codeword_extremes(counts: &[BigUint]) -> (Option<usize>, Option<usize>) {
    let nonzero = |w: &usize| !counts[*w].is_zero();
    let min = (1..counts.len()).find(nonzero);
    let max = (1..counts.len()).rev().find(nonzero);
    (min, max)
}

/// Runs every cross-check on `c` and its dual.
pub fn verify_code(c: &LinearCode, budget: Budget) -> Result<Report, DistributionError> {
    let mut report = Report::default();
    let params = Params::of(c);
    let (n, k) = (params.n, params.k);
    let dual = c.dual().ok();

    // hierarchies
    let h = hierarchy(c, GrwMethod::Subspaces)?;
    report.push("hierarchy_monotone_and_singleton", h.is_valid(), h.to_string());
    if c.field_covers_length() {
        let others: Vec<Hierarchy> =
            [GrwMethod::ClosedSpaces, GrwMethod::MaxWt].iter().map(|&m| hierarchy(c, m)).collect::<Result<_, _>>()?;
        let agree = others.iter().all(|o| o == &h);
        let detail = others.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        report.push("grw_methods_agree", agree, detail);
    }
    let dual_h = match &dual {
        Some(d) => hierarchy(d, GrwMethod::Subspaces)?,
        None => Hierarchy { n, k: 0, weights: Vec::new() },
    };
    report.push("wei_duality", h.wei_duality(&dual_h), format!("{h} / {dual_h}"));

    // distributions
    let a = brute_force_distribution(c, None, budget)?;
    report.push(
        "distribution_invariants",
        a.check_invariants().is_ok(),
        a.check_invariants().err().unwrap_or_default(),
    );
    let b = b_table_transversal(c, budget)?;
    report.push_eq("inversion_matches_brute_force", &a_from_b(&b)?, &a);
    report.push_eq("b_table_matches_moments", &b, &b_table_from_distribution(&a)?);

    let a_dual = dual_distribution(c, DualMethod::Direct, budget)?;
    report.push_eq("dual_b_table_matches_dual_code", &dual_b_table(c, budget)?, &b_table_from_distribution(&a_dual)?);
    report.push_eq("dual_methods_agree", &dual_distribution(c, DualMethod::Transversal, budget)?, &a_dual);
    let mut mismatches = Vec::new();
    for t in 0..=n - k {
        for r in 0..=n - k {
            let lhs = macwilliams_lhs(&a_dual, t, r);
            let rhs = macwilliams_rhs(&a, t, r)?;
            if lhs != rhs {
                mismatches.push(format!("(t={t}, r={r}): {lhs} != {rhs}"));
            }
        }
    }
    report.push("macwilliams_identity", mismatches.is_empty(), mismatches.join("; "));

    let mut enumerators_agree = true;
    for r in 0..=k {
        enumerators_agree &= enumerator_from_btable(&b, r)? == enumerator_from_distribution(&a, r);
    }
    report.push("enumerator_sources_agree", enumerators_agree, "");

    // codeword level
    let counts = codeword_weight_counts(c, budget)?;
    let scale = BigUint::from(params.big_q() - 1);
    let relation = counts[0] == BigUint::from(1u8) && (1..=n).all(|w| counts[w] == &scale * a.count(1, w));
    report.push("codeword_relation", relation, format!("{counts:?}"));
    report.push("classic_enumerator_relation", classic_relation(&a, &counts), "");
    let (min, max) = codeword_extremes(&counts);
    report.push_eq("first_grw_is_min_weight", &min, &h.get(1));
    // a single word can only fill the whole support when m >= n
    if c.field_covers_length() {
        report.push_eq("last_grw_is_max_weight", &max, &h.get(k));
    }

    if h.get(1) == Some(n - k + 1) && n <= params.m {
        report.push_eq("mrd_closed_form", &mrd_distribution(n, k, params.q, params.m)?, &a);
    }
    Ok(report)
}

/// `Σ_c X^{wt c} Y^{n - wt c} = W^0 + (q^m - 1) W^1`, as polynomials.
fn classic_relation(a: &DistributionTable, counts: &[BigUint]) -> bool {
    let classic = HomPoly::from_coeffs(counts.iter().cloned().map(BigInt::from).collect());
    let w0 = enumerator_from_distribution(a, 0).to_hom_poly();
    let w1 = enumerator_from_distribution(a, 1).to_hom_poly();
    classic == w0.add(&w1.scale(&BigInt::from(a.params.big_q() - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::test_codes::*;

    #[test]
    fn example_codes_pass() {
        for c in [cyclic_3_1(), cyclic_3_1().dual().unwrap(), gabidulin(2), mrd_non_gabidulin()] {
            let report = verify_code(&c, Budget::default()).unwrap();
            let failed: Vec<_> = report.failures().collect();
            assert!(failed.is_empty(), "{failed:?}");
        }
        let names: Vec<_> =
            verify_code(&gabidulin(2), Budget::default()).unwrap().checks.iter().map(|c| c.name).collect();
        assert!(names.contains(&"mrd_closed_form"));
        assert!(names.contains(&"grw_methods_agree"));
    }

    #[test]
    fn full_space_code() {
        let f = f16();
        let full = LinearCode::from_generator(f.clone(), &crate::linalg::Matrix::identity(&f, 2)).unwrap();
        let report = verify_code(&full, Budget::default()).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn broken_relation_detected() {
        let a = brute_force_distribution(&cyclic_3_1(), None, Budget::default()).unwrap();
        let counts = vec![BigUint::from(1u8), BigUint::zero(), BigUint::from(14u8), BigUint::zero()];
        assert!(!classic_relation(&a, &counts));
    }
}
