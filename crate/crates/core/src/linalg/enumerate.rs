//! Grassmannian enumeration by pivot pattern.
//!
//! Every `r`-dimensional subspace of `F^n` has a unique RREF basis, fixed by
//! its pivot columns plus a free choice of each cell to the right of a pivot
//! in a non-pivot column. Iterating pivot patterns and then all fillings of
//! the free cells visits each subspace exactly once.

use super::{Matrix, Subspace};
use crate::gf::Field;

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn pivot_patterns(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..r).collect();
    loop {
        out.push(current.clone());
        // advance the rightmost position that still has room
        let Some(i) = (0..r).rev().find(|&i| current[i] < n - r + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..r {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Subspaces whose RREF basis has exactly the given pivot columns.
pub fn subspaces_with_pivots<'a, F: Field>(
    f: &'a F,
    n: usize,
    pivots: &[usize],
) -> impl Iterator<Item = Subspace<F::Elem>> + 'a {
    let r = pivots.len();
    let free_cells: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(i, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
        .collect();
    let mut template = Matrix::zeros(f, r, n);
    for (i, &pc) in pivots.iter().enumerate() {
        template.set(i, pc, f.one());
    }
    let order = f.order();
    let total = order.checked_pow(free_cells.len() as u32).expect("subspace count overflows u64");
    (0..total).map(move |mut idx| {
        let mut m = template.clone();
        for &(i, c) in &free_cells {
            m.set(i, c, f.element(idx % order));
            idx /= order;
        }
        Subspace::from_rref_unchecked(n, m)
    })
}

/// Lazily yields each `r`-dimensional subspace of `F^n` exactly once.
pub fn enumerate_subspaces<F: Field>(f: &F, n: usize, r: usize) -> impl Iterator<Item = Subspace<F::Elem>> + '_ {
    pivot_patterns(n, r).into_iter().flat_map(move |p| subspaces_with_pivots(f, n, &p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{BaseField, PrimeField};
    use std::collections::HashSet;

    #[test]
    fn pattern_counts() {
        assert_eq!(pivot_patterns(4, 2).len(), 6);
        assert_eq!(pivot_patterns(3, 0), vec![Vec::<usize>::new()]);
        assert!(pivot_patterns(2, 3).is_empty());
        assert_eq!(pivot_patterns(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn small_grassmannians_over_f2() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(enumerate_subspaces(&f, 3, 1).count(), 7);
        assert_eq!(enumerate_subspaces(&f, 3, 2).count(), 7);
        let zero: Vec<_> = enumerate_subspaces(&f, 4, 0).collect();
        assert_eq!(zero, vec![Subspace::zero(4)]);
    }

    /// Brute-force oracle: collect the distinct row spaces of all r-tuples of
    /// vectors and compare with the enumeration.
    #[test]
    fn matches_span_of_all_tuples() {
        let f = BaseField::new(2, Some(vec![1, 1, 1])).unwrap();
        let n = 3;
        let vectors: Vec<Vec<_>> = Subspace::full(&f, n).vectors(&f).collect();
        for r in 0..=2 {
            let enumerated: Vec<_> = enumerate_subspaces(&f, n, r).collect();
            let distinct: HashSet<_> = enumerated.iter().cloned().collect();
            assert_eq!(distinct.len(), enumerated.len(), "duplicates at r = {r}");
            let mut spans = HashSet::new();
            let mut stack = vec![Vec::new()];
            while let Some(chosen) = stack.pop() {
                if chosen.len() == r {
                    let s = Subspace::span(&f, n, chosen).unwrap();
                    if s.dim() == r {
                        spans.insert(s);
                    }
                    continue;
                }
                for v in &vectors {
                    let mut next = chosen.clone();
                    next.push(v.clone());
                    stack.push(next);
                }
            }
            assert_eq!(spans, distinct, "r = {r}");
        }
    }
}
