//! Coefficient fields for the exact linear algebra: the rationals and prime
//! fields F_p. A field is a context object so that the modulus of F_p can be
//! chosen at runtime; matrix routines are generic over this trait.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// The field of rational numbers, with `BigRational` elements.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// The prime field F_p for a runtime modulus. Elements are canonical
/// representatives in `0..p`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime; checked by trial division since all moduli used
    /// here are tiny.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadPrime(p, "not a prime".into()));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }

    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Reduce a rational number mod p. Fails when p divides the denominator.
    pub fn reduce_rational(&self, r: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let den = r.denom().mod_floor_big(&p);
        if den.is_zero() {
            return Err(Error::BadPrime(
                self.p,
                format!("divides the denominator of matrix entry {}", r),
            ));
        }
        let num = r.numer().mod_floor_big(&p);
        let den_u = bigint_to_u64(&den);
        let num_u = bigint_to_u64(&num);
        let inv = self
            .inv(&den_u)
            .expect("nonzero residue is invertible mod a prime");
        Ok(self.mul(&num_u, &inv))
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc: u64 = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Iterator over primes in increasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

fn bigint_to_u64(n: &BigInt) -> u64 {
    use num::ToPrimitive;
    n.to_u64().expect("residue fits in u64")
}

trait ModFloorBig {
    fn mod_floor_big(&self, p: &BigInt) -> BigInt;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, p: &BigInt) -> BigInt {
        let r = self % p;
        if r.is_negative() {
            r + p
        } else {
            r
        }
    }
}
