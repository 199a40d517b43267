//! Arithmetic in the prime field `F_p` for small `p`.

use crate::GroebnerError;

/// The prime field `F_p`; elements are canonical residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Creates `F_p`, checking primality by trial division (`p < 2^31`).
    pub fn new(p: u64) -> Result<Self, GroebnerError> {
        let is_prime = p >= 2 && p < (1 << 31) && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0);
        if is_prime {
            Ok(Self { p })
        } else {
            Err(GroebnerError::BadPrime(p))
        }
    }

    /// The characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces an integer to its canonical residue.
    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// `a + b`.
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    /// `a - b`.
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    /// `-a`.
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    /// `a * b`.
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// `a^-1` for nonzero `a` (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 101] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
    }
}
