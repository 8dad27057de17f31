//! The adjoint group of a nilpotent algebra, computed inside the unital hull
//! `F + B` as the group `1 + B`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Associative;
use crate::error::Error;
use crate::generic::{scheduled_chain, GenericBuilder, GenericElement};
use crate::lie::{lie_engel_check, Strategy};
use crate::presentation::Presentation;
use crate::quotient::{AlgebraElement, ElementRing, QuotientAlgebra};
use crate::scalars::{Field, PolyRing, PrimeField, ScalarRing};
use crate::witness::{find_witness, finish_verdict, no_witness, GenericValue, Verdict, Witness};

/// `constant * 1 + part` in the unital hull.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitalElement<E> {
    pub constant: E,
    pub part: AlgebraElement<E>,
}

pub fn one<K: Field, S: ScalarRing<K>>(r: &ElementRing<'_, K, S>) -> UnitalElement<S::Elem> {
    UnitalElement {
        constant: r.scalars().one(),
        part: r.zero(),
    }
}

/// `1 + u`.
pub fn unit<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
) -> UnitalElement<S::Elem> {
    UnitalElement {
        constant: r.scalars().one(),
        part: u.clone(),
    }
}

pub fn is_one<K: Field, S: ScalarRing<K>>(r: &ElementRing<'_, K, S>, g: &UnitalElement<S::Elem>) -> bool {
    r.scalars().is_one(&g.constant) && r.is_zero(&g.part)
}

pub fn hull_mul<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    g: &UnitalElement<S::Elem>,
    h: &UnitalElement<S::Elem>,
) -> UnitalElement<S::Elem> {
    let s = r.scalars();
    let part = r.add(
        &r.add(&r.scale(&h.part, &g.constant), &r.scale(&g.part, &h.constant)),
        &r.mul(&g.part, &h.part),
    );
    UnitalElement {
        constant: s.mul(&g.constant, &h.constant),
        part,
    }
}

/// Inverse in the hull; fails when the constant is not invertible.
pub fn hull_inv<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    g: &UnitalElement<S::Elem>,
) -> Result<UnitalElement<S::Elem>, Error> {
    let s = r.scalars();
    let c = s.inv(&g.constant).map_err(|_| Error::NotUnit)?;
    // (c + u)^-1 = c^-1 (1 + c^-1 u)^-1
    let q = quasi_inverse(r, &r.scale(&g.part, &c));
    Ok(UnitalElement {
        constant: c.clone(),
        part: r.scale(&q, &c),
    })
}

/// `u + v + uv`.
pub fn circle<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
    v: &AlgebraElement<S::Elem>,
) -> AlgebraElement<S::Elem> {
    r.add(&r.add(u, v), &r.mul(u, v))
}

/// `-u + u^2 - u^3 + ...`, the inverse of `u` for the circle product.
pub fn quasi_inverse<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
) -> AlgebraElement<S::Elem> {
    let top = r.algebra().nilpotency_degree() - 1;
    let mut acc = r.zero();
    for (k, p) in r.powers(u, top).iter().enumerate() {
        acc = if k % 2 == 0 { r.sub(&acc, p) } else { r.add(&acc, p) };
    }
    acc
}

/// `g^-1 h^-1 g h`.
pub fn group_commutator<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    g: &UnitalElement<S::Elem>,
    h: &UnitalElement<S::Elem>,
) -> Result<UnitalElement<S::Elem>, Error> {
    let gi = hull_inv(r, g)?;
    let hi = hull_inv(r, h)?;
    Ok(hull_mul(r, &hull_mul(r, &hull_mul(r, &gi, &hi), g), h))
}

/// The part of `((1+x), (1+y))`, given the quasi-inverse `yq` of `y`.
///
/// Uses `g^-1 h^-1 g h - 1 = g^-1 h^-1 (gh - hg)` and `gh - hg = [x, y]`.
pub fn commutator_part_with<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    x: &AlgebraElement<S::Elem>,
    y: &AlgebraElement<S::Elem>,
    yq: &AlgebraElement<S::Elem>,
) -> AlgebraElement<S::Elem> {
    let t = r.bracket(x, y);
    if r.is_zero(&t) {
        return t;
    }
    let t = r.add(&t, &r.mul(yq, &t));
    let xq = quasi_inverse(r, x);
    r.add(&t, &r.mul(&xq, &t))
}

pub fn commutator_part<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    x: &AlgebraElement<S::Elem>,
    y: &AlgebraElement<S::Elem>,
) -> AlgebraElement<S::Elem> {
    commutator_part_with(r, x, y, &quasi_inverse(r, y))
}

/// `((1+u), _(n) (1+v))`.
pub fn group_engel_word<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    u: &AlgebraElement<S::Elem>,
    v: &AlgebraElement<S::Elem>,
    n: usize,
) -> UnitalElement<S::Elem> {
    let vq = quasi_inverse(r, v);
    let mut x = u.clone();
    for _ in 0..n {
        x = commutator_part_with(r, &x, v, &vq);
    }
    unit(r, &x)
}

/// Left-normed commutator `((1+u1), (1+u2), ..., (1+uk))`, as its part.
pub fn left_normed_commutator_part<K: Field, S: ScalarRing<K>>(
    r: &ElementRing<'_, K, S>,
    elems: &[AlgebraElement<S::Elem>],
) -> AlgebraElement<S::Elem> {
    let Some((first, rest)) = elems.split_first() else {
        return r.zero();
    };
    rest.iter()
        .fold(first.clone(), |x, y| commutator_part(r, &x, y))
}

/// `left = right` modulo `B^order`: constants agree and so do all graded
/// components of degree below `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct FilteredIdentity<E> {
    pub label: String,
    pub left: UnitalElement<E>,
    pub right: UnitalElement<E>,
    pub order: usize,
}

impl<E: Clone + PartialEq> FilteredIdentity<E> {
    pub fn holds<K: Field, S: ScalarRing<K, Elem = E>>(&self, r: &ElementRing<'_, K, S>) -> bool {
        let alg = r.algebra();
        self.left.constant == self.right.constant
            && (0..alg.dim())
                .filter(|&i| alg.degree(i) < self.order)
                .all(|i| self.left.part.coord(i) == self.right.part.coord(i))
    }
}

/// Generic value of `((1+U), _(n) (1+V))`, as its part.
pub fn generic_group_engel_value<K: Field>(
    alg: &QuotientAlgebra<K>,
    n: usize,
) -> Result<(PolyRing<K>, Vec<GenericElement<K>>, GenericElement<K>), Error> {
    let mut g = GenericBuilder::new();
    g.element(alg, "u")?;
    g.element(alg, "v")?;
    let top = (alg.nilpotency_degree() - 1) as u32;
    let (ring, elems) = g.finish(alg.field().clone(), Some(top));
    let v = elems[1].clone();
    let vq = quasi_inverse(&alg.over(ring.clone()), &v);
    let value = scheduled_chain(alg, &ring, &elems[0], n, |r, x, _| {
        commutator_part_with(r, x, &v, &vq)
    });
    Ok((ring, elems, value))
}

/// Whether `((1+u), _(n) (1+v)) = 1` for all `u, v`, with a witness (the
/// pair and the part of the Engel word) on failure.
pub fn group_engel_check<K: Field>(alg: &QuotientAlgebra<K>, n: usize) -> Result<Verdict<K::Elem>, Error> {
    let (ring, elems, value) = generic_group_engel_value(alg, n)?;
    if value.coords().iter().all(|c| c.is_zero()) {
        return Ok(Verdict::pass());
    }
    let r = alg.arith();
    let all: Vec<usize> = (0..alg.dim()).collect();
    let generic = GenericValue {
        ring: &ring,
        args: &elems,
        value: &value,
    };
    let w = find_witness(&r, &all, 2, Some(generic), |a| {
        group_engel_word(&r, &a[0], &a[1], n).part
    });
    finish_verdict(alg, w, "group Engel", n)
}

/// Part of the left-normed commutator of `k` generic hull units.
pub fn generic_commutator_value<K: Field>(
    alg: &QuotientAlgebra<K>,
    k: usize,
) -> Result<(PolyRing<K>, Vec<GenericElement<K>>, GenericElement<K>), Error> {
    assert!(k >= 1, "a commutator needs at least one entry");
    let mut g = GenericBuilder::new();
    for j in 1..=k {
        g.element(alg, &alloc::format!("g{}", j))?;
    }
    let top = (alg.nilpotency_degree() - 1) as u32;
    let (ring, elems) = g.finish(alg.field().clone(), Some(top));
    let value = scheduled_chain(alg, &ring, &elems[0], k - 1, |r, x, j| {
        commutator_part(r, x, &elems[j + 1])
    });
    Ok((ring, elems, value))
}

/// Nilpotency class of `1 + B` with its evidence.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupNilpotency<E> {
    pub class: usize,
    /// `nilpotency_degree - 1`, from `gamma_k(1+B) <= 1 + B^k`.
    pub upper_bound: usize,
    /// Generic left-normed commutators of weight `class + 1` are trivial.
    pub next_weight_trivial: bool,
    /// A nontrivial left-normed commutator of weight `class`.
    pub witness: Option<Witness<E>>,
}

pub fn group_nilpotency<K: Field>(alg: &QuotientAlgebra<K>) -> Result<GroupNilpotency<K::Elem>, Error> {
    let top = alg.nilpotency_degree() - 1;
    let r = alg.arith();
    let gens: Vec<usize> = (0..alg.dim()).filter(|&i| alg.degree(i) == 1).collect();
    let is_zero = |v: &GenericElement<K>| v.coords().iter().all(|c| c.is_zero());
    let (_, _, above) = generic_commutator_value(alg, top + 1)?;
    let next_weight_trivial = is_zero(&above);
    for k in (2..=top).rev() {
        let (ring, elems, value) = generic_commutator_value(alg, k)?;
        if is_zero(&value) {
            continue;
        }
        let generic = GenericValue {
            ring: &ring,
            args: &elems,
            value: &value,
        };
        let w = find_witness(&r, &gens, k, Some(generic), |a| left_normed_commutator_part(&r, a));
        if w.is_none() && alg.field().characteristic() == 0 {
            return Err(no_witness("nilpotency", k));
        }
        return Ok(GroupNilpotency {
            class: k,
            upper_bound: top,
            next_weight_trivial,
            witness: w,
        });
    }
    Ok(GroupNilpotency {
        class: usize::from(alg.dim() > 0),
        upper_bound: top,
        next_weight_trivial,
        witness: None,
    })
}

/// For generic `u` supported in degrees `>= i` and `v` in degrees `>= j`,
/// whether the part of `((1+u), (1+v))` lies in `B^(i+j)`.
pub fn filtration_check<K: Field>(alg: &QuotientAlgebra<K>, i: usize, j: usize) -> Result<bool, Error> {
    let top = alg.nilpotency_degree() - 1;
    let mut g = GenericBuilder::new();
    g.element_from_degree(alg, "u", i)?;
    g.element_from_degree(alg, "v", j)?;
    // components of degree >= i + j are allowed, so work modulo B^(i+j)
    let cap = (i + j - 1).min(top) as u32;
    let (ring, elems) = g.finish(alg.field().clone(), Some(cap));
    let r = alg.over(ring);
    let part = commutator_part(&r, &elems[0], &elems[1]);
    Ok(r.is_zero(&part))
}

/// One row of the characteristic scan.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanEntry {
    pub characteristic: u64,
    pub outside_theorem_hypotheses: bool,
    pub graded_dims: Vec<usize>,
    /// Part of `((1+x), _(5) (1+y))`.
    pub witness_part: AlgebraElement<u64>,
    pub witness_rendered: String,
    /// Whether the part equals the image of `6*y^2*x*y*x*y^2`.
    pub matches_six_top_word: bool,
    pub lie_five_engel: bool,
    pub group_five_engel: bool,
}

/// Rebuilds the algebra over each prime field and evaluates the 5-Engel
/// witness expression and both 5-Engel conditions there.
pub fn characteristic_scan(spec: &Presentation, primes: &[u64]) -> Result<Vec<ScanEntry>, Error> {
    let mut out = Vec::new();
    for &p in primes {
        let spec_p = spec.with_characteristic(p)?;
        let alg = QuotientAlgebra::build(&spec_p, PrimeField::new(p)?)?;
        let r = alg.arith();
        let part = group_engel_word(&r, &r.generator(0), &r.generator(1), 5).part;
        let six = alg.parse(&top_word_expression(&alg, 6))?;
        out.push(ScanEntry {
            characteristic: p,
            outside_theorem_hypotheses: spec_p.outside_theorem_hypotheses(),
            graded_dims: alg.graded_dims(),
            witness_rendered: r.render(&part),
            matches_six_top_word: part == six,
            witness_part: part,
            lie_five_engel: lie_engel_check(&alg, 5, Strategy::Symbolic)?.holds,
            group_five_engel: group_engel_check(&alg, 5)?.holds,
        });
    }
    Ok(out)
}

fn top_word_expression<K: Field>(alg: &QuotientAlgebra<K>, c: i64) -> String {
    let g = alg.generators();
    alloc::format!("{c}*{y}^2*{x}*{y}*{x}*{y}^2", x = g[0], y = g[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Rationals, Ring};

    fn b() -> QuotientAlgebra<Rationals> {
        QuotientAlgebra::build(&Presentation::engel_counterexample(), Rationals).unwrap()
    }

    #[test]
    fn five_engel_word_at_a_b() {
        let b = b();
        let r = b.arith();
        let (a, bb) = (r.generator(0), r.generator(1));
        let g = group_engel_word(&r, &a, &bb, 5);
        assert_eq!(r.render(&g.part), "6*y^2*x*y*x*y^2");
        assert!(is_one(&r, &group_engel_word(&r, &a, &bb, 6)));
    }

    #[test]
    fn fast_commutator_matches_definition() {
        let b = b();
        let r = b.arith();
        let u = b.parse("x + 2*y*x - y^2").unwrap();
        let v = b.parse("y - x*y + 3*y^3").unwrap();
        let slow = group_commutator(&r, &unit(&r, &u), &unit(&r, &v)).unwrap();
        assert_eq!(slow, unit(&r, &commutator_part(&r, &u, &v)));
        let g = unit(&r, &u);
        assert!(is_one(&r, &group_commutator(&r, &g, &g).unwrap()));
    }

    #[test]
    fn hull_inverse() {
        let b = b();
        let r = b.arith();
        let g = UnitalElement {
            constant: Rationals.from_int(3),
            part: b.parse("y - x*y").unwrap(),
        };
        assert!(is_one(&r, &hull_mul(&r, &g, &hull_inv(&r, &g).unwrap())));
        let z = UnitalElement {
            constant: Rationals.zero(),
            part: r.generator(1),
        };
        assert_eq!(hull_inv(&r, &z), Err(Error::NotUnit));
        assert_eq!(r.render(&quasi_inverse(&r, &r.generator(1))), "-y^3 + y^2 - y");
    }

    #[test]
    fn generic_engel_checks() {
        let b = b();
        let r = b.arith();
        let v = group_engel_check(&b, 5).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.args, [r.generator(0), r.generator(1)]);
        assert!(group_engel_check(&b, 6).unwrap().holds);
        assert!(group_engel_check(&b, 7).unwrap().holds);
    }

    #[test]
    fn class_seven() {
        let n = group_nilpotency(&b()).unwrap();
        assert_eq!(n.class, 7);
        assert!(n.next_weight_trivial);
        assert_eq!(n.witness.unwrap().args.len(), 7);
    }

    #[test]
    fn filtration() {
        let b = b();
        for i in 1..=7 {
            for j in 1..=(8 - i) {
                assert!(filtration_check(&b, i, j).unwrap(), "({i}, {j})");
            }
        }
    }
}
