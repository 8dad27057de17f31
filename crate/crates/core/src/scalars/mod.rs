//! Exact coefficient rings.
//!
//! Arithmetic goes through ring objects in the style of a `RingStore`: an
//! element is plain data and the ring that created it knows how to combine
//! it. This keeps the hot loops free of per-element tags while mixing two
//! different kinds of scalar (a rational with a polynomial, say) is rejected
//! by the type checker.

mod poly;
mod prime;
mod rational;

pub use poly::{Monomial, Poly, PolyRing, WeightedVariableSet};
pub use prime::{is_prime, PrimeField};
pub use rational::Rationals;

use alloc::string::String;
use core::fmt::Debug;

use crate::error::ScalarError;

/// A commutative ring with exact, canonical element representations.
///
/// Canonical representations mean `PartialEq` on elements is ring equality.
pub trait Ring: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Multiplicative inverse; fails on non-units.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ScalarError>;

    /// 0 for the rationals, `p` for prime fields and polynomial rings over them.
    fn characteristic(&self) -> u64;

    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Rendering of a scalar used as a coefficient inside a larger expression:
/// prime-field residues lose their " mod p" suffix.
pub(crate) fn render_coefficient<R: Ring>(ring: &R, c: &R::Elem) -> String {
    let s = ring.render(c);
    match s.find(" mod ") {
        Some(pos) => String::from(&s[..pos]),
        None => s,
    }
}

/// The base fields: the rationals and the prime fields.
pub trait Field: Ring + PartialEq {
    /// Image of a rational number; fails when the denominator is not
    /// invertible.
    fn from_rational(&self, q: &num_rational::BigRational) -> Result<Self::Elem, ScalarError>;
}

/// A ring carrying a copy of the base field `K`, so algebra structure
/// constants (elements of `K`) can act on its elements.
pub trait ScalarRing<K: Field>: Ring {
    fn base(&self) -> &K;
    fn embed(&self, k: &K::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, k: &K::Elem) -> Self::Elem;
}

impl<K: Field> ScalarRing<K> for K {
    fn base(&self) -> &K {
        self
    }

    fn embed(&self, k: &K::Elem) -> K::Elem {
        k.clone()
    }

    fn scale(&self, a: &K::Elem, k: &K::Elem) -> K::Elem {
        self.mul(a, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_sum() {
        let r = Rationals;
        assert_eq!(r.add(&q(1, 2), &q(1, 3)), q(5, 6));
        assert_eq!(r.render(&q(5, 6)), "5/6");
        assert_eq!(r.render(&q(4, 2)), "2");
        assert!(r.inv(&r.zero()).is_err());
    }

    #[test]
    fn prime_inverse() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.inv(&2).unwrap(), 3);
        assert_eq!(f.render(&3), "3 mod 5");
        assert!(f.inv(&0).is_err());
        assert!(PrimeField::new(6).is_err());
        assert_eq!(f.from_int(-1), 4);
    }

    #[test]
    fn pow_by_squaring() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.pow(&3, 6), 1);
        assert_eq!(Rationals.pow(&q(-1, 2), 3), q(-1, 8));
    }
}
