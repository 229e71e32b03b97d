use super::{Field, GfError};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_p`; elements are residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p as u64));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: &u32) -> Result<u32, GfError> {
        if *a == 0 {
            return Err(GfError::DivisionByZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }

    fn order(&self) -> u64 {
        self.p as u64
    }

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn element(&self, index: u64) -> u32 {
        debug_assert!(index < self.p as u64);
        index as u32
    }

    fn index_of(&self, a: &u32) -> u64 {
        *a as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(PrimeField::new(4), Err(GfError::NotPrime(4)));
    }

    #[test]
    fn inverse_mod_13() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.inv(&5).unwrap(), 8);
        assert_eq!(f.neg(&0), 0);
    }
}
