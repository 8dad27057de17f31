//! Finite-dimensional quotients `A / I` of the free algebra.
//!
//! The monomial clauses cut the free algebra down to the finite span of the
//! surviving words. The polynomial relations then generate a subspace of
//! that span, found by closing their images under left and right
//! multiplication by generators. An echelon basis of this subspace decides
//! which surviving words are eliminated and how they rewrite; the remaining
//! words form the basis of the quotient.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::algebra::Associative;
use crate::error::Error;
use crate::expr::parse_poly;
use crate::freealg::{render_terms, FreePolynomial, Word};
use crate::linalg::Echelon;
use crate::presentation::Presentation;
use crate::scalars::{Field, ScalarRing};

/// What a surviving word becomes in the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// The word is basis element `i`.
    Basis(usize),
    /// The word is the leading word of rewrite rule `i`.
    Eliminated(usize),
}

/// `word = sum c_j * basis_j` in the quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct Rewrite<E> {
    pub word: Word,
    pub tail: Vec<(usize, E)>,
}

/// Coordinates with respect to the basis of a [`QuotientAlgebra`].
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<E> {
    coords: Vec<E>,
}

impl<E> AlgebraElement<E> {
    pub fn from_coords(coords: Vec<E>) -> Self {
        AlgebraElement { coords }
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<E> {
        self.coords
    }

    pub fn coord(&self, i: usize) -> &E {
        &self.coords[i]
    }

    pub fn map<F, T>(&self, f: F) -> AlgebraElement<T>
    where
        F: FnMut(&E) -> T,
    {
        AlgebraElement {
            coords: self.coords.iter().map(f).collect(),
        }
    }
}

/// Basis, rewrite rules and structure constants of a graded nilpotent
/// quotient. Immutable once built.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<K: Field> {
    field: K,
    presentation: Presentation,
    survivors: Vec<Word>,
    survivor_index: BTreeMap<Word, usize>,
    roles: Vec<Role>,
    ideal: Echelon<K>,
    rewrites: Vec<Rewrite<K::Elem>>,
    basis: Vec<Word>,
    degrees: Vec<usize>,
    table: Vec<Vec<(usize, K::Elem)>>,
    nilpotency_degree: usize,
}

impl<K: Field> QuotientAlgebra<K> {
    pub fn build(spec: &Presentation, field: K) -> Result<Self, Error> {
        if field.characteristic() != spec.characteristic() {
            return Err(Error::CharacteristicMismatch {
                spec: spec.characteristic(),
                field: field.characteristic(),
            });
        }
        let survivors = spec.survivors();
        let survivor_index: BTreeMap<Word, usize> = survivors
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let n = survivors.len();
        let ngens = spec.generators().len();

        // the ideal generated by the polynomial relations, inside span(survivors)
        let mut ideal = Echelon::new(field.clone(), n);
        let mut queue: Vec<Vec<K::Elem>> = Vec::new();
        for (_, poly) in spec.polynomials() {
            let mut v = alloc::vec![field.zero(); n];
            for (w, c) in poly.terms() {
                if let Some(&i) = survivor_index.get(w) {
                    field.add_assign(&mut v[i], &field.from_rational(c)?);
                }
            }
            queue.push(v);
        }
        while let Some(v) = queue.pop() {
            if !ideal.insert(v.clone()) {
                continue;
            }
            for g in 0..ngens {
                for left in [true, false] {
                    queue.push(shift(&field, &survivors, &survivor_index, &v, g, left));
                }
            }
        }

        let mut roles = alloc::vec![Role::Basis(0); n];
        let mut basis = Vec::new();
        let mut basis_of_survivor = alloc::vec![usize::MAX; n];
        for (i, w) in survivors.iter().enumerate() {
            if !ideal.is_pivot(i) {
                basis_of_survivor[i] = basis.len();
                roles[i] = Role::Basis(basis.len());
                basis.push(w.clone());
            }
        }
        let mut rewrites = Vec::new();
        for (pivot, row) in ideal.rows() {
            roles[*pivot] = Role::Eliminated(rewrites.len());
            let tail = row
                .iter()
                .enumerate()
                .filter(|(j, c)| *j != *pivot && !field.is_zero(c))
                .map(|(j, c)| (basis_of_survivor[j], field.neg(c)))
                .collect();
            rewrites.push(Rewrite {
                word: survivors[*pivot].clone(),
                tail,
            });
        }

        let degrees: Vec<usize> = basis.iter().map(Word::degree).collect();
        let nilpotency_degree = degrees.iter().max().map_or(1, |d| d + 1);
        let mut alg = QuotientAlgebra {
            field,
            presentation: spec.clone(),
            survivors,
            survivor_index,
            roles,
            ideal,
            rewrites,
            basis,
            degrees,
            table: Vec::new(),
            nilpotency_degree,
        };
        let dim = alg.basis.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let w = alg.basis[i].concat(&alg.basis[j]);
                table.push(alg.reduce_word(&w));
            }
        }
        alg.table = table;
        Ok(alg)
    }

    /// Sparse coordinates of a single word.
    fn reduce_word(&self, w: &Word) -> Vec<(usize, K::Elem)> {
        if self.presentation.is_member(w) {
            return Vec::new();
        }
        match self.survivor_index.get(w).map(|&s| self.roles[s]) {
            None => Vec::new(),
            Some(Role::Basis(i)) => alloc::vec![(i, self.field.one())],
            Some(Role::Eliminated(r)) => self.rewrites[r].tail.clone(),
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[String] {
        self.presentation.generators()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn survivors(&self) -> &[Word] {
        &self.survivors
    }

    pub fn role(&self, survivor: usize) -> Role {
        self.roles[survivor]
    }

    pub fn rewrites(&self) -> &[Rewrite<K::Elem>] {
        &self.rewrites
    }

    /// Dimension of the ideal generated by the polynomial relations, taken
    /// modulo the monomial relations.
    pub fn ideal_dim(&self) -> usize {
        self.ideal.rank()
    }

    /// Whether one more round of multiplication by generators leaves the
    /// ideal subspace unchanged.
    pub fn ideal_is_closed(&self) -> bool {
        let ngens = self.generators().len();
        self.ideal.rows().iter().all(|(_, row)| {
            (0..ngens).all(|g| {
                [true, false].into_iter().all(|left| {
                    let mut v = shift(
                        &self.field,
                        &self.survivors,
                        &self.survivor_index,
                        row,
                        g,
                        left,
                    );
                    self.ideal.reduce(&mut v);
                    v.iter().all(|c| self.field.is_zero(c))
                })
            })
        })
    }

    /// Least `n` with `B^n = 0`.
    pub fn nilpotency_degree(&self) -> usize {
        self.nilpotency_degree
    }

    /// Dimensions of the homogeneous components, degree 1 upwards.
    pub fn graded_dims(&self) -> Vec<usize> {
        let top = self.nilpotency_degree - 1;
        (1..=top)
            .map(|d| self.degrees.iter().filter(|&&e| e == d).count())
            .collect()
    }

    /// Basis indices of degree `d`; the basis is sorted by degree.
    pub fn degree_range(&self, d: usize) -> core::ops::Range<usize> {
        let start = self.degrees.partition_point(|&e| e < d);
        let end = self.degrees.partition_point(|&e| e <= d);
        start..end
    }

    /// `basis[i] * basis[j]` as sparse coordinates.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, K::Elem)] {
        &self.table[i * self.basis.len() + j]
    }

    pub fn basis_index(&self, w: &Word) -> Option<usize> {
        match self.survivor_index.get(w).map(|&s| self.roles[s]) {
            Some(Role::Basis(i)) => Some(i),
            _ => None,
        }
    }

    /// Image of a free polynomial: relation words drop out and eliminated
    /// words are rewritten.
    pub fn normal_form(&self, p: &FreePolynomial<K::Elem>) -> AlgebraElement<K::Elem> {
        let f = &self.field;
        let mut coords = alloc::vec![f.zero(); self.dim()];
        for (w, c) in p.terms() {
            for (i, k) in self.reduce_word(w) {
                f.add_assign(&mut coords[i], &f.mul(c, &k));
            }
        }
        AlgebraElement { coords }
    }

    /// Image of a polynomial with rational coefficients.
    pub fn image(&self, p: &FreePolynomial<BigRational>) -> Result<AlgebraElement<K::Elem>, Error> {
        let f = &self.field;
        let mut coords = alloc::vec![f.zero(); self.dim()];
        for (w, c) in p.terms() {
            let c = f.from_rational(c)?;
            for (i, k) in self.reduce_word(w) {
                f.add_assign(&mut coords[i], &f.mul(&c, &k));
            }
        }
        Ok(AlgebraElement { coords })
    }

    /// Parses an expression in the generators and maps it into the quotient.
    pub fn parse(&self, text: &str) -> Result<AlgebraElement<K::Elem>, Error> {
        let free = self.presentation.free_algebra();
        let p = parse_poly(text, &free)?;
        self.image(&p)
    }

    /// Element arithmetic with scalars from `scalars`.
    pub fn over<S: ScalarRing<K>>(&self, scalars: S) -> ElementRing<'_, K, S> {
        ElementRing { alg: self, scalars }
    }

    /// Element arithmetic over the base field.
    pub fn arith(&self) -> ElementRing<'_, K, K> {
        self.over(self.field.clone())
    }
}

/// Left or right multiplication of a survivor-coordinate vector by a
/// generator, dropping words that fall into the monomial ideal.
fn shift<K: Field>(
    field: &K,
    survivors: &[Word],
    index: &BTreeMap<Word, usize>,
    v: &[K::Elem],
    g: usize,
    left: bool,
) -> Vec<K::Elem> {
    let mut out = alloc::vec![field.zero(); v.len()];
    let gw = Word::generator(g);
    for (i, c) in v.iter().enumerate() {
        if field.is_zero(c) {
            continue;
        }
        let w = if left {
            gw.concat(&survivors[i])
        } else {
            survivors[i].concat(&gw)
        };
        if let Some(&j) = index.get(&w) {
            field.add_assign(&mut out[j], c);
        }
    }
    out
}

/// Arithmetic on elements of a quotient algebra with coefficients in a
/// scalar ring over its base field (the base field itself, or a polynomial
/// ring for generic elements).
#[derive(Clone, Debug)]
pub struct ElementRing<'a, K: Field, S> {
    alg: &'a QuotientAlgebra<K>,
    scalars: S,
}

impl<'a, K: Field, S: ScalarRing<K>> ElementRing<'a, K, S> {
    pub fn algebra(&self) -> &'a QuotientAlgebra<K> {
        self.alg
    }

    pub fn scalars(&self) -> &S {
        &self.scalars
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement<S::Elem> {
        let mut coords = alloc::vec![self.scalars.zero(); self.dim()];
        coords[i] = self.scalars.one();
        AlgebraElement { coords }
    }

    /// The image of generator `g`, or zero if the generator itself is a
    /// relation.
    pub fn generator(&self, g: usize) -> AlgebraElement<S::Elem> {
        let mut coords = alloc::vec![self.scalars.zero(); self.dim()];
        for (i, c) in self.alg.reduce_word(&Word::generator(g)) {
            coords[i] = self.scalars.embed(&c);
        }
        AlgebraElement { coords }
    }

    /// Embeds an element over the base field.
    pub fn lift(&self, u: &AlgebraElement<K::Elem>) -> AlgebraElement<S::Elem> {
        u.map(|c| self.scalars.embed(c))
    }

    pub fn from_coords(&self, coords: Vec<S::Elem>) -> AlgebraElement<S::Elem> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector has wrong length");
        AlgebraElement { coords }
    }

    pub fn scale(&self, u: &AlgebraElement<S::Elem>, s: &S::Elem) -> AlgebraElement<S::Elem> {
        u.map(|c| self.scalars.mul(c, s))
    }

    pub fn scale_int(&self, u: &AlgebraElement<S::Elem>, n: i64) -> AlgebraElement<S::Elem> {
        self.scale(u, &self.scalars.from_int(n))
    }

    /// Projection onto the basis words of degree `k`.
    pub fn graded_component(&self, u: &AlgebraElement<S::Elem>, k: usize) -> AlgebraElement<S::Elem> {
        let range = self.alg.degree_range(k);
        AlgebraElement {
            coords: u
                .coords
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if range.contains(&i) {
                        c.clone()
                    } else {
                        self.scalars.zero()
                    }
                })
                .collect(),
        }
    }

    /// Lowest degree with a nonzero component, `None` for zero.
    pub fn order(&self, u: &AlgebraElement<S::Elem>) -> Option<usize> {
        u.coords
            .iter()
            .position(|c| !self.scalars.is_zero(c))
            .map(|i| self.alg.degree(i))
    }

    /// `c*word + ...` in descending basis order.
    pub fn render(&self, u: &AlgebraElement<S::Elem>) -> String {
        let names = self.alg.generators();
        render_terms(
            &self.scalars,
            u.coords
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !self.scalars.is_zero(c))
                .map(|(i, c)| (self.alg.basis[i].render(names), c)),
        )
    }
}

impl<K: Field, S: ScalarRing<K>> Associative for ElementRing<'_, K, S> {
    type Elem = AlgebraElement<S::Elem>;

    fn zero(&self) -> Self::Elem {
        AlgebraElement {
            coords: alloc::vec![self.scalars.zero(); self.dim()],
        }
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        debug_assert_eq!(a.coords.len(), b.coords.len());
        AlgebraElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| self.scalars.add(x, y))
                .collect(),
        }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.map(|c| self.scalars.neg(c))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        AlgebraElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| self.scalars.sub(x, y))
                .collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let dim = self.dim();
        assert!(a.coords.len() == dim && b.coords.len() == dim, "element of another algebra");
        let s = &self.scalars;
        let nil = self.alg.nilpotency_degree;
        let mut out = alloc::vec![s.zero(); dim];
        let right: Vec<usize> = (0..dim).filter(|&j| !s.is_zero(&b.coords[j])).collect();
        for i in 0..dim {
            if s.is_zero(&a.coords[i]) {
                continue;
            }
            for &j in &right {
                if self.alg.degrees[i] + self.alg.degrees[j] >= nil {
                    continue;
                }
                let entries = self.alg.product(i, j);
                if entries.is_empty() {
                    continue;
                }
                let p = s.mul(&a.coords[i], &b.coords[j]);
                if s.is_zero(&p) {
                    continue;
                }
                for (k, c) in entries {
                    s.add_assign(&mut out[*k], &s.scale(&p, c));
                }
            }
        }
        AlgebraElement { coords: out }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coords.iter().all(|c| self.scalars.is_zero(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rationals;

    fn b() -> QuotientAlgebra<Rationals> {
        QuotientAlgebra::build(&Presentation::engel_counterexample(), Rationals).unwrap()
    }

    #[test]
    fn dimensions() {
        let b = b();
        assert_eq!(b.ideal_dim(), 2);
        assert_eq!(b.dim(), 26);
        assert_eq!(b.graded_dims(), [2, 3, 5, 6, 6, 3, 1]);
        assert_eq!(b.nilpotency_degree(), 8);
        let names = b.generators();
        assert_eq!(b.basis()[25].render(names), "y^2*x*y*x*y^2");
        let eliminated: Vec<String> = b.rewrites().iter().map(|r| r.word.render(names)).collect();
        assert_eq!(eliminated, ["x*y^3*x*y", "y*x*y^3*x*y"]);
        assert!(b.ideal_is_closed());
    }

    #[test]
    fn roles_partition_survivors() {
        let b = b();
        let mut basis = 0;
        let mut elim = 0;
        for i in 0..b.survivors().len() {
            match b.role(i) {
                Role::Basis(k) => {
                    assert_eq!(b.basis()[k], b.survivors()[i]);
                    basis += 1;
                }
                Role::Eliminated(r) => {
                    assert_eq!(b.rewrites()[r].word, b.survivors()[i]);
                    assert!(b.basis_index(&b.survivors()[i]).is_none());
                    elim += 1;
                }
            }
        }
        assert_eq!((basis, elim), (26, 2));
    }

    #[test]
    fn normal_form_examples() {
        let b = b();
        let r = b.arith();
        assert!(r.is_zero(&b.parse("2*x*y^3*x*y - 5*y*x*y*x*y^2 - 2*y*x*y^3*x + 5*y^2*x*y*x*y").unwrap()));
        let w = b.parse("y*x*y^3*x*y").unwrap();
        assert_eq!(r.render(&w), "5/2*y^2*x*y*x*y^2");
        assert!(r.is_zero(&b.parse("x^2").unwrap()));
        assert_eq!(r.render(&r.graded_component(&w, 7)), "5/2*y^2*x*y*x*y^2");
    }

    #[test]
    fn products() {
        let b = b();
        let r = b.arith();
        let p = r.mul(&b.parse("y^2*x*y").unwrap(), &b.parse("x*y^2").unwrap());
        assert_eq!(r.render(&p), "y^2*x*y*x*y^2");
        let (a, bb) = (r.generator(0), r.generator(1));
        assert!(r.is_zero(&r.mul(&a, &a)));
        assert!(r.is_zero(&r.mul(&bb, &r.power(&bb, 3))));
        let u = r.add(&a, &r.mul(&bb, &bb));
        assert_eq!(r.render(&r.graded_component(&u, 2)), "y^2");
    }

    #[test]
    fn characteristic_must_match() {
        let spec = Presentation::engel_counterexample();
        let f = crate::scalars::PrimeField::new(5).unwrap();
        assert!(matches!(
            QuotientAlgebra::build(&spec, f),
            Err(Error::CharacteristicMismatch { .. })
        ));
    }

    #[test]
    fn monomial_part_has_all_survivors() {
        let c = QuotientAlgebra::build(&Presentation::engel_counterexample().monomial_part(), Rationals)
            .unwrap();
        assert_eq!(c.dim(), 28);
        assert_eq!(c.ideal_dim(), 0);
    }
}
