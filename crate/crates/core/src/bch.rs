//! Exponential and logarithm in the unital hull, and the group `L*` on the
//! algebra with `x * y = log(e^x e^y)`.
//!
//! Everything is a finite sum because the algebra is nilpotent, so no
//! Baker-Campbell-Hausdorff coefficients are needed. The degree-2 part of
//! the product is still checked against `x + y + [x,y]/2` in the tests.

use alloc::vec::Vec;

use crate::algebra::Associative;
use crate::error::Error;
use crate::generic::{scheduled_chain, GenericBuilder, GenericElement};
use crate::group::{circle, group_engel_word, unit, UnitalElement};
use crate::quotient::{AlgebraElement, ElementRing, QuotientAlgebra};
use crate::scalars::{Field, PolyRing, ScalarRing};
use crate::witness::{find_witness, finish_verdict, GenericValue, Verdict};

/// exp and log divide by `k` and `k!` for `k < nilpotency_degree`.
fn check_denominators<K: Field, S: ScalarRing<K>>(r: &ElementRing<'_, K, S>) -> Result<(), Error> {
    let p = r.scalars().characteristic();
    let top = (r.algebra().nilpotency_degree() - 1) as u64;
    if p != 0 && p <= top {
        return Err(Error::PositiveCharacteristic { found: p, bound: top });
    }
    Ok(())
}

fn check_characteristic_zero<K: Field, S: ScalarRing<K>>(r: &ElementRing<'_, K, S>) -> Result<(), Error> {
    match r.scalars().characteristic() {
        0 => Ok(()),
        p => Err(Error::CharacteristicZeroOnly(p)),
    }
}

/// `1 + u + u^2/2 + ... + u^k/k!` up to the last nonzero power.
pub fn exp_unital<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
) -> Result<UnitalElement<S::Elem>, Error> {
    check_denominators(r)?;
    let s = r.scalars();
    let top = r.algebra().nilpotency_degree() - 1;
    let mut part = r.zero();
    let mut factorial = s.one();
    for (k, p) in r.powers(u, top).iter().enumerate() {
        factorial = s.mul(&factorial, &s.from_int(k as i64 + 1));
        part = r.add(&part, &r.scale(p, &s.inv(&factorial)?));
    }
    Ok(unit(r, &part))
}

/// `x - x^2/2 + x^3/3 - ...` for `g = 1 + x`.
pub fn log_unital<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    g: &UnitalElement<S::Elem>,
) -> Result<AlgebraElement<S::Elem>, Error> {
    check_denominators(r)?;
    let s = r.scalars();
    if !s.is_one(&g.constant) {
        return Err(Error::ConstantNotOne);
    }
    let top = r.algebra().nilpotency_degree() - 1;
    let mut acc = r.zero();
    for (k, p) in r.powers(&g.part, top).iter().enumerate() {
        let n = k as i64 + 1;
        let c = s.inv(&s.from_int(if k % 2 == 0 { n } else { -n }))?;
        acc = r.add(&acc, &r.scale(p, &c));
    }
    Ok(acc)
}

/// `phi(u) = log(1 + u)`, the isomorphism from the adjoint group onto `L*`.
pub fn phi<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
) -> Result<AlgebraElement<S::Elem>, Error> {
    log_unital(r, &unit(r, u))
}

/// `u * v = log(e^u e^v)`.
pub fn bch_product<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
    v: &AlgebraElement<S::Elem>,
) -> Result<AlgebraElement<S::Elem>, Error> {
    let eu = exp_unital(r, u)?;
    let ev = exp_unital(r, v)?;
    // e^u e^v = 1 + (a o b) with a, b the parts
    log_unital(r, &unit(r, &circle(r, &eu.part, &ev.part)))
}

/// `x^-1 * y^-1 * x * y` in `L*`, where the inverse of `x` is `-x`.
pub fn star_commutator<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    x: &AlgebraElement<S::Elem>,
    y: &AlgebraElement<S::Elem>,
) -> Result<AlgebraElement<S::Elem>, Error> {
    check_characteristic_zero(r)?;
    let a = bch_product(r, &r.neg(x), &r.neg(y))?;
    let a = bch_product(r, &a, x)?;
    bch_product(r, &a, y)
}

/// `(u, _(n) v)` in `L*`.
pub fn star_engel_word<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
    v: &AlgebraElement<S::Elem>,
    n: usize,
) -> Result<AlgebraElement<S::Elem>, Error> {
    let mut x = u.clone();
    for _ in 0..n {
        x = star_commutator(r, &x, v)?;
    }
    Ok(x)
}

/// Result of the Engel check in `L*`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarEngel<E> {
    pub verdict: Verdict<E>,
    /// The Engel word at `(log(1+x), log(1+y))` for the first two generators.
    pub value_at_generators: AlgebraElement<E>,
}

/// Whether `(u, _(n) v) = 0` in `L*` for all `u, v`.
pub fn star_engel_check<K: Field>(alg: &QuotientAlgebra<K>, n: usize) -> Result<StarEngel<K::Elem>, Error> {
    let r = alg.arith();
    check_characteristic_zero(&r)?;
    let (a, b) = (phi(&r, &r.generator(0))?, phi(&r, &r.generator(1))?);
    let value_at_generators = star_engel_word(&r, &a, &b, n)?;

    let (ring, elems) = generic_pair(alg)?;
    let v = elems[1].clone();
    let mut failure = None;
    let value = scheduled_chain(alg, &ring, &elems[0], n, |rr, x, _| {
        star_commutator(rr, x, &v).unwrap_or_else(|e| {
            failure = Some(e);
            rr.zero()
        })
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if value.coords().iter().all(|c| c.is_zero()) {
        return Ok(StarEngel {
            verdict: Verdict::pass(),
            value_at_generators,
        });
    }
    let all: Vec<usize> = (0..alg.dim()).collect();
    let generic = GenericValue {
        ring: &ring,
        args: &elems,
        value: &value,
    };
    let w = find_witness(&r, &all, 2, Some(generic), |x| {
        star_engel_word(&r, &x[0], &x[1], n).expect("characteristic checked")
    });
    Ok(StarEngel {
        verdict: finish_verdict(alg, w, "star Engel", n)?,
        value_at_generators,
    })
}

/// `phi(u o v) = phi(u) * phi(v)` for generic `u, v`.
pub fn phi_is_homomorphism<K: Field>(alg: &QuotientAlgebra<K>) -> Result<bool, Error> {
    let (ring, elems) = generic_pair(alg)?;
    phi_is_homomorphism_at(&alg.over(ring), &elems[0], &elems[1])
}

pub fn phi_is_homomorphism_at<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
    v: &AlgebraElement<S::Elem>,
) -> Result<bool, Error> {
    check_characteristic_zero(r)?;
    let left = phi(r, &circle(r, u, v))?;
    let right = bch_product(r, &phi(r, u)?, &phi(r, v)?)?;
    Ok(left == right)
}

/// Transport check: `phi((1+u), _(n) (1+v)) = (phi(u), _(n) phi(v))`.
pub fn engel_words_correspond<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
    v: &AlgebraElement<S::Elem>,
    n: usize,
) -> Result<bool, Error> {
    let g = group_engel_word(r, u, v, n);
    let left = log_unital(r, &g)?;
    let right = star_engel_word(r, &phi(r, u)?, &phi(r, v)?, n)?;
    Ok(left == right)
}

/// Fully generic `u`, `v` with coefficients truncated at the top degree.
pub fn generic_pair<K: Field>(
    alg: &QuotientAlgebra<K>,
) -> Result<(PolyRing<K>, Vec<GenericElement<K>>), Error> {
    let mut g = GenericBuilder::new();
    g.element(alg, "u")?;
    g.element(alg, "v")?;
    let top = (alg.nilpotency_degree() - 1) as u32;
    Ok(g.finish(alg.field().clone(), Some(top)))
}
