use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, Ring};
use crate::error::ScalarError;

/// The field of rational numbers, arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, ScalarError> {
        if a.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    // `Ratio`'s Display already prints "p/q" and drops q when it is 1.
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl Field for Rationals {
    fn from_rational(&self, q: &BigRational) -> Result<BigRational, ScalarError> {
        Ok(q.clone())
    }
}
