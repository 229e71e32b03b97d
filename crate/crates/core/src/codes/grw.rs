use std::collections::HashMap;

use rayon::prelude::*;

use super::view::{with_view, CodeView};
use super::{CodeError, LinearCode};
use crate::gf::{BaseElement, Coordinates, ExtElement, Field};
use crate::linalg::{enumerate_subspaces, extend_scalars, pivot_patterns, subspaces_with_pivots, Matrix, Subspace};

/// Which of the equivalent GRW definitions to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrwMethod {
    /// Minimum rank support dimension over `r`-dimensional subcodes.
    Subspaces,
    /// Minimum `dim U` with `dim(C ∩ U_L) ≥ r`.
    ClosedSpaces,
    /// Minimum over subcodes of the largest codeword rank weight.
    MaxWt,
}

impl GrwMethod {
    pub const ALL: [GrwMethod; 3] = [GrwMethod::Subspaces, GrwMethod::ClosedSpaces, GrwMethod::MaxWt];
}

/// `(M_1, ..., M_k)` for an `[n, k]` code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    pub n: usize,
    pub k: usize,
    pub weights: Vec<usize>,
}

impl Hierarchy {
    /// `M_r`, 1-based.
    pub fn get(&self, r: usize) -> Option<usize> {
        r.checked_sub(1).and_then(|i| self.weights.get(i).copied())
    }

    /// Strictly increasing, starts at 1 or more, and `M_r ≤ n - k + r`.
    pub fn is_valid(&self) -> bool {
        self.weights.len() == self.k
            && self.weights.first().is_some_and(|&w| w >= 1)
            && self.weights.windows(2).all(|w| w[0] < w[1])
            && self.weights.iter().enumerate().all(|(i, &w)| w <= self.n - self.k + i + 1)
    }

    /// Checks that `{M_r(C)}` and `{n + 1 - M_r(C^⊥)}` partition `1..=n`.
    pub fn wei_duality(&self, dual: &Hierarchy) -> bool {
        if self.n != dual.n || self.k + dual.k != self.n {
            return false;
        }
        let mut seen = vec![false; self.n + 1];
        let flipped = dual.weights.iter().filter_map(|&w| (self.n + 1).checked_sub(w));
        for w in self.weights.iter().copied().chain(flipped) {
            if w == 0 || w > self.n || seen[w] {
                return false;
            }
            seen[w] = true;
        }
        true
    }
}

impl std::fmt::Display for Hierarchy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `C(U) = C ∩ (U_L)^⊥`: codewords whose rank support lies in `U^⊥`.
pub fn code_sub_u(c: &LinearCode, u: &Subspace<BaseElement>) -> Subspace<ExtElement> {
    let spec = c.spec();
    let perp = extend_scalars(spec, &u.orthogonal_complement(spec.base()));
    c.as_subspace().intersect(spec, &perp).expect("ambient dimensions agree")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimBound {
    Determined(usize),
    Undetermined,
}

/// What the first GRWs of `C` and `C^⊥` alone say about `dim C(U)` for
/// `dim U = t`. A zero dual counts as having `M_1 = n + 1`.
pub fn dim_cu_bounds(c: &LinearCode, t: usize) -> Result<DimBound, CodeError> {
    let m1 = grw(c, 1, GrwMethod::Subspaces)?;
    let m1_dual = match c.dual() {
        Ok(d) => grw(&d, 1, GrwMethod::Subspaces)?,
        Err(_) => c.n() + 1,
    };
    Ok(bound_from_first_weights(c.n(), c.k(), m1, m1_dual, t))
}

pub(crate) fn bound_from_first_weights(n: usize, k: usize, m1: usize, m1_dual: usize, t: usize) -> DimBound {
    if t + m1 > n {
        DimBound::Determined(0)
    } else if t < m1_dual {
        DimBound::Determined(k - t)
    } else {
        DimBound::Undetermined
    }
}

fn check_r(c: &LinearCode, r: usize) -> Result<(), CodeError> {
    if r == 0 || r > c.k() {
        return Err(CodeError::DimensionOutOfRange { r, k: c.k() });
    }
    Ok(())
}

fn check_m(c: &LinearCode, method: GrwMethod) -> Result<(), CodeError> {
    if method != GrwMethod::Subspaces && !c.field_covers_length() {
        return Err(CodeError::UnsupportedAssumption { m: c.spec().m(), n: c.n() });
    }
    Ok(())
}

/// `M_r(C)` by the chosen definition.
pub fn grw(c: &LinearCode, r: usize, method: GrwMethod) -> Result<usize, CodeError> {
    check_r(c, r)?;
    check_m(c, method)?;
    Ok(with_view!(c, v => match method {
        GrwMethod::Subspaces => grw_subspaces(v, r),
        GrwMethod::ClosedSpaces => closed_space_hierarchy(v)[r - 1],
        GrwMethod::MaxWt => grw_maxwt(v, r, &ProjectiveWeights::new(v)),
    }))
}

pub fn hierarchy(c: &LinearCode, method: GrwMethod) -> Result<Hierarchy, CodeError> {
    check_m(c, method)?;
    let weights = with_view!(c, v => hierarchy_in(v, method));
    Ok(Hierarchy { n: c.n(), k: c.k(), weights })
}

pub(crate) fn hierarchy_in<K: Coordinates>(v: &CodeView<K>, method: GrwMethod) -> Vec<usize> {
    match method {
        GrwMethod::Subspaces => (1..=v.k()).map(|r| grw_subspaces(v, r)).collect(),
        GrwMethod::ClosedSpaces => closed_space_hierarchy(v),
        GrwMethod::MaxWt => {
            let table = ProjectiveWeights::new(v);
            (1..=v.k()).map(|r| grw_maxwt(v, r, &table)).collect()
        }
    }
}

/// Whether `M_r` meets the generalized Singleton bound `n - k + r`.
pub fn is_r_mrd(c: &LinearCode, r: usize) -> Result<bool, CodeError> {
    Ok(grw(c, r, GrwMethod::Subspaces)? == c.n() - c.k() + r)
}

fn grw_subspaces<K: Coordinates>(v: &CodeView<K>, r: usize) -> usize {
    pivot_patterns(v.k(), r)
        .into_par_iter()
        .map(|p| {
            subspaces_with_pivots(&v.field, v.k(), &p)
                .map(|s| v.rows_weight(&v.subcode_basis(s.basis())))
                .min()
                .unwrap_or(usize::MAX)
        })
        .min()
        .expect("at least one pivot pattern")
}

fn closed_space_hierarchy<K: Coordinates>(v: &CodeView<K>) -> Vec<usize> {
    let mut weights = Vec::with_capacity(v.k());
    for t in 0..=v.n() {
        let best = pivot_patterns(v.n(), t)
            .into_par_iter()
            .map(|p| subspaces_with_pivots(v.base(), v.n(), &p).map(|u| v.dim_meet_extended(&u)).max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        while weights.len() < best.min(v.k()) {
            weights.push(t);
        }
        if weights.len() == v.k() {
            break;
        }
    }
    weights
}

/// Rank weights of the codewords `u·G` for normalized messages `u` (first
/// nonzero entry 1), keyed by message index.
pub(crate) struct ProjectiveWeights {
    order: u64,
    weights: HashMap<u64, usize>,
}

impl ProjectiveWeights {
    pub(crate) fn new<K: Coordinates>(v: &CodeView<K>) -> Self {
        let weights = pivot_patterns(v.k(), 1)
            .into_par_iter()
            .flat_map_iter(|p| {
                subspaces_with_pivots(&v.field, v.k(), &p)
                    .map(|s| {
                        let u = s.basis().row(0);
                        (message_index(&v.field, u), v.vector_weight(&v.encode(u)))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        Self { order: v.field.order(), weights }
    }

    /// Weight of the codeword for a normalized message.
    pub(crate) fn get<F: Field>(&self, f: &F, u: &[F::Elem]) -> usize {
        debug_assert_eq!(f.order(), self.order);
        self.weights[&message_index(f, u)]
    }
}

fn message_index<F: Field>(f: &F, u: &[F::Elem]) -> u64 {
    u.iter().rev().fold(0, |acc, x| acc * f.order() + f.index_of(x))
}

/// Largest codeword weight of the subcode whose message-space RREF basis is
/// `s`. Each projective point of the subcode is visited once.
fn max_weight<F: Field>(f: &F, s: &Matrix<F::Elem>, table: &ProjectiveWeights) -> usize {
    enumerate_subspaces(f, s.rows(), 1)
        .map(|point| {
            // a normalized coefficient vector against an RREF basis gives a
            // normalized message
            let u = s.left_mul_vec(f, point.basis().row(0));
            table.get(f, &u)
        })
        .max()
        .unwrap_or(0)
}

fn grw_maxwt<K: Coordinates>(v: &CodeView<K>, r: usize, table: &ProjectiveWeights) -> usize {
    pivot_patterns(v.k(), r)
        .into_par_iter()
        .map(|p| {
            subspaces_with_pivots(&v.field, v.k(), &p)
                .map(|s| max_weight(&v.field, s.basis(), table))
                .min()
                .unwrap_or(usize::MAX)
        })
        .min()
        .expect("at least one pivot pattern")
}
