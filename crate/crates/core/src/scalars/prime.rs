use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{Field, Ring};
use crate::error::ScalarError;

/// Trial division; moduli here are small.
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

/// The prime field of residues modulo `p`. Elements are the canonical
/// representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        // residues are multiplied in u128, so any u64 prime is fine
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Image of a rational under the canonical map; the denominator must be
    /// coprime to `p`.
    pub fn reduce_rational(&self, q: &BigRational) -> Result<u64, ScalarError> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().expect("residue fits");
        let den = q.denom().mod_floor(&p).to_u64().expect("residue fits");
        let den_inv = self.inv(&den)?;
        Ok(self.mul(&num, &den_inv))
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_int(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn inv(&self, a: &u64) -> Result<u64, ScalarError> {
        if *a == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        // Fermat: a^(p-2)
        Ok(pow_mod(*a, self.p - 2, self.p))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn render(&self, a: &u64) -> String {
        format!("{} mod {}", a, self.p)
    }
}

fn pow_mod(base: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc = 1u128 % m;
    let mut b = base as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

impl Field for PrimeField {
    fn from_rational(&self, q: &BigRational) -> Result<u64, ScalarError> {
        self.reduce_rational(q)
    }
}
