//! Engel conditions and the lower central series of the Lie algebra `[B]`.
//!
//! Two independent ways to decide `[u, v, ..., v] = 0` for all `u, v`:
//!
//! * symbolic: bracket two generic elements and test the result for
//!   identical vanishing;
//! * symmetrized: the identity is linear in `u` and polynomial in `v`, so it
//!   holds iff for every basis element `e_j` and every multiset of `n` basis
//!   indices the sum of `[e_j, e_s1, ..., e_sn]` over the distinct
//!   arrangements of the multiset vanishes.
//!
//! They share only the structure constants.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Associative;
use crate::error::Error;
use crate::freealg::Word;
use crate::generic::{scheduled_chain, GenericBuilder, GenericElement};
use crate::linalg::Echelon;
use crate::quotient::{AlgebraElement, ElementRing, QuotientAlgebra};
use crate::scalars::{Field, Monomial, PolyRing};
use crate::witness::{find_witness, finish_verdict, GenericValue, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Symbolic,
    Symmetrized,
}

/// `[U, V, ..., V]` (`n` times) for generic `U`, `V`, returned with the
/// polynomial ring and the two generic elements.
pub fn generic_engel_value<K: Field>(
    alg: &QuotientAlgebra<K>,
    n: usize,
) -> Result<(PolyRing<K>, Vec<GenericElement<K>>, GenericElement<K>), Error> {
    let mut g = GenericBuilder::new();
    g.element(alg, "u")?;
    g.element(alg, "v")?;
    let top = (alg.nilpotency_degree() - 1) as u32;
    let (ring, elems) = g.finish(alg.field().clone(), Some(top));
    let v = elems[1].clone();
    let value = scheduled_chain(alg, &ring, &elems[0], n, |r, x, _| r.bracket(x, &v));
    Ok((ring, elems, value))
}

/// Whether `[u, _(n) v] = 0` for all `u, v`, with a witness on failure.
pub fn lie_engel_check<K: Field>(
    alg: &QuotientAlgebra<K>,
    n: usize,
    strategy: Strategy,
) -> Result<Verdict<K::Elem>, Error> {
    let fails = match strategy {
        Strategy::Symbolic => {
            let (_, _, value) = generic_engel_value(alg, n)?;
            value.coords().iter().any(|c| !c.is_zero())
        }
        Strategy::Symmetrized => symmetrized_failure(alg, n).is_some(),
    };
    if !fails {
        return Ok(Verdict::pass());
    }
    finish_verdict(alg, lie_engel_witness(alg, n)?, "Lie Engel", n)
}

/// A concrete pair with `[u, _(n) v] != 0`: pairs of basis elements first,
/// then a specialization of the generic value. `None` if the identity holds,
/// or (over a small prime field) if no specialization was found.
pub fn lie_engel_witness<K: Field>(
    alg: &QuotientAlgebra<K>,
    n: usize,
) -> Result<Option<Witness<K::Elem>>, Error> {
    let r = alg.arith();
    let all: Vec<usize> = (0..alg.dim()).collect();
    let eval = |args: &[AlgebraElement<K::Elem>]| r.engel_bracket(&args[0], &args[1], n);
    if let Some(w) = find_witness(&r, &all, 2, None, eval) {
        return Ok(Some(w));
    }
    let (ring, elems, value) = generic_engel_value(alg, n)?;
    let generic = GenericValue {
        ring: &ring,
        args: &elems,
        value: &value,
    };
    Ok(find_witness(&r, &[], 2, Some(generic), eval))
}

/// The first failing component of the symmetrized strategy, as
/// `(j, multiset)`, scanning `j` upwards.
pub fn symmetrized_failure<K: Field>(
    alg: &QuotientAlgebra<K>,
    n: usize,
) -> Option<(usize, Vec<usize>)> {
    (0..alg.dim()).find_map(|j| symmetrized_row(alg, n, j).map(|m| (j, m)))
}

/// The first multiset (in lexicographic order of sorted index lists) whose
/// symmetrized bracket sum starting at `e_j` does not vanish.
pub fn symmetrized_row<K: Field>(alg: &QuotientAlgebra<K>, n: usize, j: usize) -> Option<Vec<usize>> {
    let r = alg.arith();
    let basis: Vec<_> = (0..alg.dim()).map(|i| r.basis_element(i)).collect();
    let budget = alg.nilpotency_degree() - 1;
    let start = alg.degree(j);
    let mut multiset = Vec::with_capacity(n);
    let mut found = None;
    multisets(alg, n, 0, budget.saturating_sub(start), start <= budget, &mut multiset, &mut |m| {
        let sum = symmetrized_sum(&r, &basis, j, m);
        if r.is_zero(&sum) {
            false
        } else {
            found = Some(m.to_vec());
            true
        }
    });
    found
}

/// Enumerates nondecreasing index lists of length `n` with total degree at
/// most `budget`; `visit` returns true to stop.
fn multisets<K: Field, F>(
    alg: &QuotientAlgebra<K>,
    n: usize,
    from: usize,
    budget: usize,
    feasible: bool,
    current: &mut Vec<usize>,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if !feasible {
        return false;
    }
    if current.len() == n {
        return visit(current);
    }
    for i in from..alg.dim() {
        let d = alg.degree(i);
        // the remaining slots need degree >= 1 each
        if d + (n - current.len() - 1) > budget {
            break;
        }
        current.push(i);
        let stop = multisets(alg, n, i, budget - d, true, current, visit);
        current.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Sum of `[e_j, e_s1, ..., e_sn]` over the distinct arrangements `s` of
/// the multiset.
pub fn symmetrized_sum<K: Field>(
    r: &ElementRing<'_, K, K>,
    basis: &[AlgebraElement<K::Elem>],
    j: usize,
    multiset: &[usize],
) -> AlgebraElement<K::Elem> {
    let mut items: Vec<(usize, usize)> = Vec::new();
    for &i in multiset {
        match items.last_mut() {
            Some((k, c)) if *k == i => *c += 1,
            _ => items.push((i, 1)),
        }
    }
    let mut acc = r.zero();
    arrange(r, basis, &basis[j], &mut items, multiset.len(), &mut acc);
    acc
}

fn arrange<K: Field>(
    r: &ElementRing<'_, K, K>,
    basis: &[AlgebraElement<K::Elem>],
    x: &AlgebraElement<K::Elem>,
    items: &mut [(usize, usize)],
    remaining: usize,
    acc: &mut AlgebraElement<K::Elem>,
) {
    if remaining == 0 {
        *acc = r.add(acc, x);
        return;
    }
    if r.is_zero(x) {
        return;
    }
    for k in 0..items.len() {
        if items[k].1 == 0 {
            continue;
        }
        items[k].1 -= 1;
        let y = r.bracket(x, &basis[items[k].0]);
        arrange(r, basis, &y, items, remaining - 1, acc);
        items[k].1 += 1;
    }
}

/// Coefficient monomials of the f-decomposition, in the order `f_0 ... f_19`,
/// as exponents over `alpha1 beta1 gamma1 delta1 mu1 alpha2 beta2 gamma2
/// delta2 mu2`.
const F_LABELS: [&[(usize, u32)]; 20] = [
    &[(0, 1), (6, 5)],
    &[(0, 1), (5, 1), (6, 4)],
    &[(0, 1), (6, 4), (7, 1)],
    &[(0, 1), (6, 4), (8, 1)],
    &[(0, 1), (6, 4), (9, 1)],
    &[(0, 1), (5, 1), (6, 3), (9, 1)],
    &[(1, 1), (5, 1), (6, 4)],
    &[(1, 1), (5, 2), (6, 3)],
    &[(1, 1), (6, 4), (7, 1)],
    &[(1, 1), (5, 1), (6, 3), (7, 1)],
    &[(1, 1), (6, 4), (8, 1)],
    &[(1, 1), (5, 1), (6, 3), (8, 1)],
    &[(1, 1), (5, 1), (6, 3), (9, 1)],
    &[(1, 1), (5, 2), (6, 2), (9, 1)],
    &[(2, 1), (6, 5)],
    &[(2, 1), (5, 1), (6, 4)],
    &[(3, 1), (6, 5)],
    &[(3, 1), (5, 1), (6, 4)],
    &[(4, 1), (5, 1), (6, 4)],
    &[(4, 1), (5, 2), (6, 3)],
];

const F_VARS: [&str; 10] = [
    "alpha1", "beta1", "gamma1", "delta1", "mu1", "alpha2", "beta2", "gamma2", "delta2", "mu2",
];

/// One multihomogeneous component of `[U, _(5) V]` for `U, V` supported on
/// `a, b, ab, ba, b^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct FComponent<E> {
    pub index: usize,
    pub label: String,
    pub value: AlgebraElement<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FComponents<E> {
    /// All twenty components, zero ones included.
    pub components: Vec<FComponent<E>>,
    /// Nonzero components whose coefficient monomial is not one of the
    /// twenty.
    pub unexpected: Vec<(String, AlgebraElement<E>)>,
}

impl<E> FComponents<E> {
    pub fn get(&self, index: usize) -> &AlgebraElement<E> {
        &self.components[index].value
    }
}

/// Splits `[U, _(5) V]` into coefficient-monomial components, where
/// `U = alpha1 a + beta1 b + gamma1 ab + delta1 ba + mu1 b^2` and `V`
/// likewise with index 2. Needs the words `xy`, `yx`, `yy` of the first two
/// generators in the basis.
pub fn f_decomposition<K: Field>(alg: &QuotientAlgebra<K>) -> Result<FComponents<K::Elem>, Error> {
    let word = |l: &[usize]| Word::from_indices(l).expect("nonempty");
    let mut coords = Vec::new();
    for l in [&[0][..], &[1], &[0, 1], &[1, 0], &[1, 1]] {
        let i = alg.basis_index(&word(l)).ok_or_else(|| {
            Error::Unsupported(alloc::format!(
                "{} is not a basis word",
                word(l).render(alg.generators())
            ))
        })?;
        coords.push(i);
    }
    let mut g = GenericBuilder::new();
    for half in [&F_VARS[..5], &F_VARS[5..]] {
        let named: Vec<(usize, &str)> = coords.iter().copied().zip(half.iter().copied()).collect();
        g.element_on(alg, &named)?;
    }
    let top = (alg.nilpotency_degree() - 1) as u32;
    let (ring, elems) = g.finish(alg.field().clone(), Some(top));
    let r = alg.over(ring.clone());
    let value = r.engel_bracket(&elems[0], &elems[1], 5);

    let field = alg.field();
    let mut by_monomial: alloc::collections::BTreeMap<Monomial, Vec<K::Elem>> = Default::default();
    for (i, c) in value.coords().iter().enumerate() {
        for (m, k) in c.terms() {
            let v = by_monomial
                .entry(m.clone())
                .or_insert_with(|| alloc::vec![field.zero(); alg.dim()]);
            v[i] = k.clone();
        }
    }
    let mut components = Vec::new();
    for (index, exps) in F_LABELS.iter().enumerate() {
        let m = Monomial::from_exponents(exps, ring.vars());
        let v = by_monomial
            .remove(&m)
            .unwrap_or_else(|| alloc::vec![field.zero(); alg.dim()]);
        components.push(FComponent {
            index,
            label: ring.render_monomial(&m),
            value: AlgebraElement::from_coords(v),
        });
    }
    let unexpected = by_monomial
        .into_iter()
        .map(|(m, v)| (ring.render_monomial(&m), AlgebraElement::from_coords(v)))
        .collect();
    Ok(FComponents {
        components,
        unexpected,
    })
}

/// Dimensions of `L_1 = B`, `L_(k+1) = [L_k, B]` while nonzero; the class is
/// the number of nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCentralSeries {
    pub dims: Vec<usize>,
}

impl LowerCentralSeries {
    pub fn class(&self) -> usize {
        self.dims.len()
    }
}

pub fn lie_lower_central_series<K: Field>(alg: &QuotientAlgebra<K>) -> LowerCentralSeries {
    let r = alg.arith();
    let dim = alg.dim();
    let basis: Vec<_> = (0..dim).map(|i| r.basis_element(i)).collect();
    let mut current: Vec<AlgebraElement<K::Elem>> = basis.clone();
    let mut dims = Vec::new();
    while !current.is_empty() {
        dims.push(current.len());
        let mut next = Echelon::new(alg.field().clone(), dim);
        for w in &current {
            for e in &basis {
                next.insert(r.bracket(w, e).into_coords());
            }
        }
        current = next
            .rows()
            .iter()
            .map(|(_, row)| AlgebraElement::from_coords(row.clone()))
            .collect();
    }
    LowerCentralSeries { dims }
}

/// Whether every word with exactly one letter `x` (generator 0) and five or
/// six letters `y` (generator 1) vanishes in the algebra.
pub fn single_x_words_vanish<K: Field>(alg: &QuotientAlgebra<K>) -> bool {
    let r = alg.arith();
    (5..=6).all(|m| {
        (0..=m).all(|pos| {
            let mut letters = alloc::vec![1usize; m + 1];
            letters[pos] = 0;
            let w = Word::from_indices(&letters).expect("nonempty");
            let free = alg.presentation().free_algebra();
            r.is_zero(&alg.image(&free.word(w)).expect("rational coefficients map"))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::scalars::{PrimeField, Rationals};

    fn b() -> QuotientAlgebra<Rationals> {
        QuotientAlgebra::build(&Presentation::engel_counterexample(), Rationals).unwrap()
    }

    #[test]
    fn five_engel_both_ways() {
        let b = b();
        for s in [Strategy::Symbolic, Strategy::Symmetrized] {
            assert!(lie_engel_check(&b, 5, s).unwrap().holds);
            assert!(lie_engel_check(&b, 6, s).unwrap().holds);
        }
    }

    #[test]
    fn four_engel_fails_at_a_b() {
        let b = b();
        let r = b.arith();
        for s in [Strategy::Symbolic, Strategy::Symmetrized] {
            let v = lie_engel_check(&b, 4, s).unwrap();
            assert!(!v.holds);
            let w = v.witness.unwrap();
            assert_eq!(w.args, [r.generator(0), r.generator(1)]);
            assert_eq!(r.render(&w.value), "-4*y^3*x*y - 4*y*x*y^3");
        }
    }

    #[test]
    fn symmetrized_sum_of_a_multiset() {
        let b = b();
        let r = b.arith();
        let basis: Vec<_> = (0..b.dim()).map(|i| r.basis_element(i)).collect();
        // f_1 is the sum over arrangements of {a, b, b, b, b} after a
        let f1 = symmetrized_sum(&r, &basis, 0, &[0, 1, 1, 1, 1]);
        assert!(r.is_zero(&f1));
        let c = QuotientAlgebra::build(&Presentation::engel_counterexample().monomial_part(), Rationals)
            .unwrap();
        let rc = c.arith();
        let basis: Vec<_> = (0..c.dim()).map(|i| rc.basis_element(i)).collect();
        let f1 = symmetrized_sum(&rc, &basis, 0, &[0, 1, 1, 1, 1]);
        assert_eq!(
            rc.render(&f1),
            "15*y^2*x*y*x*y - 6*y*x*y^3*x - 15*y*x*y*x*y^2 + 6*x*y^3*x*y"
        );
    }

    #[test]
    fn prime_fields_stay_five_engel() {
        for p in [5, 7] {
            let spec = Presentation::engel_counterexample().with_characteristic(p).unwrap();
            let b = QuotientAlgebra::build(&spec, PrimeField::new(p).unwrap()).unwrap();
            assert!(lie_engel_check(&b, 5, Strategy::Symbolic).unwrap().holds);
        }
    }

    #[test]
    fn lower_central_series() {
        let s = lie_lower_central_series(&b());
        assert_eq!(s.class(), 7);
        assert_eq!(s.dims[0], 26);
    }

    #[test]
    fn annihilation_rule() {
        assert!(single_x_words_vanish(&b()));
    }
}
