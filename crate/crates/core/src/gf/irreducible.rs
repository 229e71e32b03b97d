use super::{poly, Field};

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-`order` digits of `index`.
fn monic_from_index<F: Field>(f: &F, degree: usize, mut index: u64) -> Vec<F::Elem> {
    let order = f.order();
    let mut out: Vec<F::Elem> = (0..degree)
        .map(|_| {
            let c = f.element(index % order);
            index /= order;
            c
        })
        .collect();
    out.push(f.one());
    out
}

fn count_monic<F: Field>(f: &F, degree: usize) -> Option<u64> {
    f.order().checked_pow(degree as u32)
}

/// Full irreducibility check: no roots, then trial division by every monic
/// polynomial of degree `2..=deg/2`.
pub fn is_irreducible<F: Field>(f: &F, p: &[F::Elem]) -> bool {
    let Some(deg) = poly::degree(f, p) else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    if f.elements().any(|x| f.is_zero(&poly::eval(f, p, &x))) {
        return false;
    }
    for d in 2..=deg / 2 {
        let count = count_monic(f, d).expect("trial division space overflows u64");
        for i in 0..count {
            let divisor = monic_from_index(f, d, i);
            if poly::rem(f, p, &divisor).expect("monic divisor").is_empty() {
                return false;
            }
        }
    }
    true
}

/// A monic irreducible polynomial of the given degree over `f`.
///
/// Candidates are visited in index order starting at `seed mod count`, so the
/// result is a pure function of `(f, degree, seed)`. Seed 0 returns the
/// lexicographically first irreducible by ascending coefficient digits.
pub fn find_irreducible<F: Field>(f: &F, degree: usize, seed: u64) -> Vec<F::Elem> {
    assert!(degree >= 1, "degree must be positive");
    let count = count_monic(f, degree).expect("candidate space overflows u64");
    let start = seed % count;
    (0..count)
        .map(|i| (start + i) % count)
        .map(|idx| monic_from_index(f, degree, idx))
        .find(|cand| is_irreducible(f, cand))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{BaseField, PrimeField};

    #[test]
    fn degree_one_over_f3() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(find_irreducible(&f, 1, 0), vec![0, 1]);
        assert_eq!(find_irreducible(&f, 1, 2), vec![2, 1]);
    }

    #[test]
    fn known_irreducibles() {
        let f2 = PrimeField::new(2).unwrap();
        assert!(is_irreducible(&f2, &[1, 1, 0, 0, 1]));
        assert!(!is_irreducible(&f2, &[1, 0, 1, 0, 1])); // (x^2+x+1)^2
        assert!(!is_irreducible(&f2, &[1, 0, 0, 0, 1]));
        let f3 = PrimeField::new(3).unwrap();
        assert!(is_irreducible(&f3, &[2, 0, 0, 2, 1]));
        assert!(!is_irreducible(&f3, &[1, 0, 1, 0, 1]));
    }

    /// Brute-force oracle: a polynomial of degree d is irreducible iff it is
    /// not a product of two monic polynomials of positive degree.
    fn irreducible_by_products(f: &PrimeField, target: &[u32]) -> bool {
        let deg = target.len() - 1;
        for d1 in 1..deg {
            let d2 = deg - d1;
            for i in 0..f.order().pow(d1 as u32) {
                for j in 0..f.order().pow(d2 as u32) {
                    let prod = poly::mul(f, &monic_from_index(f, d1, i), &monic_from_index(f, d2, j));
                    if prod == target {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn trial_division_matches_product_enumeration() {
        for p in [2u32, 3] {
            let f = PrimeField::new(p).unwrap();
            for deg in 2..=4usize {
                for i in 0..f.order().pow(deg as u32) {
                    let cand = monic_from_index(&f, deg, i);
                    assert_eq!(is_irreducible(&f, &cand), irreducible_by_products(&f, &cand), "{cand:?}");
                }
            }
        }
    }

    #[test]
    fn search_is_deterministic_and_irreducible() {
        let f4 = BaseField::new(2, Some(vec![1, 1, 1])).unwrap();
        for seed in [0, 1, 17, 1234] {
            let g = find_irreducible(&f4, 3, seed);
            assert_eq!(g, find_irreducible(&f4, 3, seed));
            assert_eq!(g.len(), 4);
            assert!(is_irreducible(&f4, &g));
            assert!(f4.elements().all(|x| !f4.is_zero(&poly::eval(&f4, &g, &x))));
        }
    }
}
