//! Concrete witnesses for failed identities.
//!
//! Two searches, tried in this order: tuples of basis elements in canonical
//! order (these are the smallest witnesses and the ones a reader expects),
//! then greedy specialization of the indeterminates of a nonzero generic
//! value to small integers.

use alloc::vec::Vec;

use crate::algebra::Associative;
use crate::error::Error;
use crate::generic::GenericElement;
use crate::quotient::{AlgebraElement, ElementRing, QuotientAlgebra};
use crate::scalars::{Field, PolyRing};

/// Arguments at which an identity fails, and the nonzero value there.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<E> {
    pub args: Vec<AlgebraElement<E>>,
    pub value: AlgebraElement<E>,
}

/// Outcome of an identity check `f(u, v, ...) = 0` over all arguments.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<E> {
    pub holds: bool,
    /// Present exactly when the identity fails.
    pub witness: Option<Witness<E>>,
}

impl<E> Verdict<E> {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness<E>) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Small integers in search order.
const CANDIDATES: [i64; 9] = [0, 1, -1, 2, -2, 3, -3, 4, -4];

/// The first tuple (lexicographic in `candidates`) on which `eval` returns
/// a value.
pub fn first_tuple<T, F>(candidates: &[usize], arity: usize, mut eval: F) -> Option<(Vec<usize>, T)>
where
    F: FnMut(&[usize]) -> Option<T>,
{
    if candidates.is_empty() {
        return None;
    }
    let mut pos = alloc::vec![0usize; arity];
    loop {
        let tuple: Vec<usize> = pos.iter().map(|&p| candidates[p]).collect();
        if let Some(t) = eval(&tuple) {
            return Some((tuple, t));
        }
        let mut k = arity;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < candidates.len() {
                break;
            }
            pos[k] = 0;
        }
    }
}

/// Values for the indeterminates occurring in `value` at which it does not
/// vanish, chosen one indeterminate at a time from 0, 1, -1, 2, -2, ...
///
/// Over an infinite field this always succeeds because no coordinate has
/// degree above 8 in a single indeterminate. Over a small prime field a
/// nonzero polynomial may vanish everywhere; then `None` is returned.
pub fn specialize<K: Field>(
    ring: &PolyRing<K>,
    value: &GenericElement<K>,
) -> Option<Vec<(usize, K::Elem)>> {
    let base = ring.base_field();
    let mut vars: Vec<usize> = value
        .coords()
        .iter()
        .flat_map(|c| ring.occurring_vars(c))
        .collect();
    vars.sort_unstable();
    vars.dedup();
    let mut current = value.clone();
    let mut assignment = Vec::new();
    for var in vars {
        let mut chosen = None;
        let mut tried: Vec<K::Elem> = Vec::new();
        for &n in &CANDIDATES {
            let c = base.from_int(n);
            if tried.contains(&c) {
                continue;
            }
            tried.push(c.clone());
            let next = current.map(|x| ring.substitute(x, var, &c));
            if next.coords().iter().any(|x| !x.is_zero()) {
                chosen = Some((c, next));
                break;
            }
        }
        let (c, next) = chosen?;
        assignment.push((var, c));
        current = next;
    }
    Some(assignment)
}

/// Substitutes an assignment into a generic element; indeterminates without
/// a value become 0.
pub fn evaluate<K: Field>(
    ring: &PolyRing<K>,
    u: &GenericElement<K>,
    assignment: &[(usize, K::Elem)],
) -> AlgebraElement<K::Elem> {
    u.map(|c| {
        let mut x = c.clone();
        for (var, value) in assignment {
            x = ring.substitute(&x, *var, value);
        }
        // anything left has an unassigned indeterminate, which is 0
        ring.constant_term(&x)
    })
}

/// A nonzero generic value together with the generic arguments it came from.
#[derive(Clone, Copy, Debug)]
pub struct GenericValue<'g, K: Field> {
    pub ring: &'g PolyRing<K>,
    pub args: &'g [GenericElement<K>],
    pub value: &'g GenericElement<K>,
}

/// Witness search for `f(args) != 0`: tuples of the basis elements listed
/// in `candidates` first, then specialization of the generic value. The
/// returned witness has been evaluated with `f`.
pub fn find_witness<K, F>(
    r: &ElementRing<'_, K, K>,
    candidates: &[usize],
    arity: usize,
    generic: Option<GenericValue<'_, K>>,
    mut f: F,
) -> Option<Witness<K::Elem>>
where
    K: Field,
    F: FnMut(&[AlgebraElement<K::Elem>]) -> AlgebraElement<K::Elem>,
{
    let found = first_tuple(candidates, arity, |t| {
        let args: Vec<_> = t.iter().map(|&i| r.basis_element(i)).collect();
        let value = f(&args);
        (!r.is_zero(&value)).then_some((args, value))
    });
    if let Some((_, (args, value))) = found {
        return Some(Witness { args, value });
    }
    let g = generic?;
    let assignment = specialize(g.ring, g.value)?;
    let args: Vec<_> = g.args.iter().map(|u| evaluate(g.ring, u, &assignment)).collect();
    let value = f(&args);
    (!r.is_zero(&value)).then_some(Witness { args, value })
}

pub(crate) fn no_witness(what: &str, n: usize) -> Error {
    Error::InvariantBreach(alloc::format!(
        "{what} condition of order {n} fails but no witness was found"
    ))
}

/// A failure without a witness is only possible over a finite field, where
/// a nonzero polynomial can vanish at every point.
pub fn finish_verdict<K: Field>(
    alg: &QuotientAlgebra<K>,
    witness: Option<Witness<K::Elem>>,
    what: &str,
    n: usize,
) -> Result<Verdict<K::Elem>, Error> {
    match witness {
        Some(w) => Ok(Verdict::fail(w)),
        None if alg.field().characteristic() != 0 => Ok(Verdict {
            holds: false,
            witness: None,
        }),
        None => Err(no_witness(what, n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generic::GenericBuilder;
    use crate::presentation::Presentation;
    use crate::quotient::QuotientAlgebra;
    use crate::scalars::{PrimeField, Rationals, Ring};

    #[test]
    fn tuples_in_lexicographic_order() {
        let mut seen = Vec::new();
        let r: Option<(Vec<usize>, ())> = first_tuple(&[3, 5], 2, |t| {
            seen.push(t.to_vec());
            None
        });
        assert!(r.is_none());
        assert_eq!(seen, [[3, 3], [3, 5], [5, 3], [5, 5]]);
        let r = first_tuple(&[0, 1, 2], 3, |t| (t == [1, 0, 2]).then_some(7));
        assert_eq!(r, Some((alloc::vec![1, 0, 2], 7)));
    }

    #[test]
    fn specialization_avoids_roots() {
        let b = QuotientAlgebra::build(&Presentation::engel_counterexample(), Rationals).unwrap();
        let mut g = GenericBuilder::new();
        g.element(&b, "u").unwrap();
        let (ring, elems) = g.finish(Rationals, Some(7));
        // u_1 * (u_2 - u_1) * (u_2 + u_1) on the first coordinate
        let (u1, u2) = (ring.var(0), ring.var(1));
        let c = ring.mul(&u1, &ring.mul(&ring.sub(&u2, &u1), &ring.add(&u2, &u1)));
        let mut coords = alloc::vec![ring.zero(); b.dim()];
        coords[0] = c.clone();
        let value = AlgebraElement::from_coords(coords);
        let a = specialize(&ring, &value).unwrap();
        assert_eq!(a.len(), 2);
        let mut x = c;
        for (v, k) in &a {
            x = ring.substitute(&x, *v, k);
        }
        assert!(!x.is_zero());
        let u = evaluate(&ring, &elems[0], &a);
        assert_eq!(u.coord(0), &a[0].1);
        assert_eq!(u.coord(5), &Rationals.zero());
    }

    #[test]
    fn small_fields_can_defeat_specialization() {
        let f = PrimeField::new(2).unwrap();
        let spec = Presentation::engel_counterexample().with_characteristic(2).unwrap();
        let b = QuotientAlgebra::build(&spec, f).unwrap();
        let mut g = GenericBuilder::new();
        g.element(&b, "u").unwrap();
        let (ring, _) = g.finish(f, None);
        // u_1^2 + u_1 vanishes on all of F_2
        let x = ring.add(&ring.mul(&ring.var(0), &ring.var(0)), &ring.var(0));
        let mut coords = alloc::vec![ring.zero(); b.dim()];
        coords[0] = x;
        assert!(specialize(&ring, &AlgebraElement::from_coords(coords)).is_none());
    }
}
