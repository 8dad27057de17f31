//! Words and polynomials of the free associative algebra without unity.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::Associative;
use crate::scalars::render_coefficient;
use crate::scalars::Ring;

/// A monic monomial: a non-empty sequence of generator indices.
///
/// Words are ordered by degree first, then lexicographically by generator
/// index. With generators `x, y` in that order: `x < y < xy < yx < y^2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: Vec<u16>,
}

impl Word {
    /// `None` for the empty sequence: the algebra has no unity.
    pub fn new(letters: Vec<u16>) -> Option<Word> {
        if letters.is_empty() {
            None
        } else {
            Some(Word { letters })
        }
    }

    pub fn from_indices(letters: &[usize]) -> Option<Word> {
        Word::new(letters.iter().map(|&g| g as u16).collect())
    }

    pub fn generator(g: usize) -> Word {
        Word {
            letters: alloc::vec![g as u16],
        }
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// Number of occurrences of generator `g`.
    pub fn generator_degree(&self, g: usize) -> usize {
        self.letters.iter().filter(|&&l| l as usize == g).count()
    }

    pub fn multidegree(&self, num_generators: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; num_generators];
        for &l in &self.letters {
            out[l as usize] += 1;
        }
        out
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// True iff `self` occurs as a contiguous subword of `other`, i.e.
    /// `other = m1 * self * m2` with `m1`, `m2` possibly empty.
    pub fn divides(&self, other: &Word) -> bool {
        word_divides(&self.letters, &other.letters)
    }

    /// The contiguous subwords of length `len`, left to right.
    pub fn windows(&self, len: usize) -> impl Iterator<Item = &[u16]> {
        self.letters.windows(len.max(1))
    }

    /// All distinct contiguous subwords, in canonical order.
    pub fn subwords(&self) -> Vec<Word> {
        let n = self.letters.len();
        let mut out: Vec<Word> = (0..n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| Word {
                letters: self.letters[i..j].to_vec(),
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Caret/star syntax, e.g. `y*x*y^3*x*y`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let name = &names[l as usize];
            parts.push(if run == 1 {
                name.clone()
            } else {
                format!("{}^{}", name, run)
            });
            i += run;
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Contiguous-subword test on raw letter slices.
pub fn word_divides(m: &[u16], n: &[u16]) -> bool {
    !m.is_empty() && m.len() <= n.len() && n.windows(m.len()).any(|w| w == m)
}

/// A finite combination of words; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct FreePolynomial<E> {
    terms: BTreeMap<Word, E>,
}

impl<E> FreePolynomial<E> {
    pub fn zero() -> Self {
        FreePolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &E)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees of the words that occur, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Word::degree).collect();
        d.dedup();
        d
    }
}

/// The free associative algebra without unity over the scalar ring `R`.
#[derive(Clone, Debug)]
pub struct FreeAlgebra<R: Ring> {
    ring: R,
    generators: Vec<String>,
}

impl<R: Ring> FreeAlgebra<R> {
    pub fn new<S: ToString>(ring: R, generators: &[S]) -> Self {
        FreeAlgebra {
            ring,
            generators: generators.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn gen(&self, g: usize) -> FreePolynomial<R::Elem> {
        self.word(Word::generator(g))
    }

    pub fn word(&self, w: Word) -> FreePolynomial<R::Elem> {
        self.term(w, self.ring.one())
    }

    pub fn term(&self, w: Word, c: R::Elem) -> FreePolynomial<R::Elem> {
        let mut terms = BTreeMap::new();
        if !self.ring.is_zero(&c) {
            terms.insert(w, c);
        }
        FreePolynomial { terms }
    }

    pub fn from_terms<I>(&self, terms: I) -> FreePolynomial<R::Elem>
    where
        I: IntoIterator<Item = (Word, R::Elem)>,
    {
        let mut out = FreePolynomial::zero();
        for (w, c) in terms {
            self.accumulate(&mut out, w, c);
        }
        out
    }

    pub fn coefficient(&self, p: &FreePolynomial<R::Elem>, w: &Word) -> R::Elem {
        p.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn scale(&self, p: &FreePolynomial<R::Elem>, c: &R::Elem) -> FreePolynomial<R::Elem> {
        let mut out = FreePolynomial::zero();
        for (w, a) in &p.terms {
            self.accumulate(&mut out, w.clone(), self.ring.mul(a, c));
        }
        out
    }

    fn accumulate(&self, p: &mut FreePolynomial<R::Elem>, w: Word, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match p.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                self.ring.add_assign(e.get_mut(), &c);
                if self.ring.is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    /// Terms in descending canonical word order with explicit signs.
    pub fn render(&self, p: &FreePolynomial<R::Elem>) -> String {
        render_terms(
            &self.ring,
            p.terms.iter().rev().map(|(w, c)| (w.render(&self.generators), c)),
        )
    }

    /// Whether every word of `p` has the same multidegree.
    pub fn is_homogeneous(&self, p: &FreePolynomial<R::Elem>) -> bool {
        let n = self.generators.len();
        let mut it = p.terms.keys().map(|w| w.multidegree(n));
        match it.next() {
            None => true,
            Some(first) => it.all(|d| d == first),
        }
    }
}

/// Shared "c*word + c*word - ..." rendering.
pub(crate) fn render_terms<'a, R: Ring + 'a, I>(ring: &R, terms: I) -> String
where
    I: Iterator<Item = (String, &'a R::Elem)>,
{
    let mut out = String::new();
    for (i, (word, c)) in terms.enumerate() {
        let mut coeff = render_coefficient(ring, c);
        let wrapped = coeff.contains(' ') || coeff[1..].contains(['+', '-']);
        let negative = !wrapped && coeff.starts_with('-');
        if negative {
            coeff.remove(0);
        }
        if i > 0 {
            out.push_str(if negative { " - " } else { " + " });
        } else if negative {
            out.push('-');
        }
        if wrapped {
            out.push('(');
            out.push_str(&coeff);
            out.push_str(")*");
        } else if coeff != "1" {
            out.push_str(&coeff);
            out.push('*');
        }
        out.push_str(&word);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<R: Ring> Associative for FreeAlgebra<R> {
    type Elem = FreePolynomial<R::Elem>;

    fn zero(&self) -> Self::Elem {
        FreePolynomial::zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        for (w, c) in &b.terms {
            self.accumulate(&mut out, w.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        FreePolynomial {
            terms: a
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = FreePolynomial::zero();
        for (w1, c1) in &a.terms {
            for (w2, c2) in &b.terms {
                self.accumulate(&mut out, w1.concat(w2), self.ring.mul(c1, c2));
            }
        }
        out
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.terms.is_empty()
    }
}

/// `sum_{i=0}^{k} C(k,i) (-1)^i y^i x y^(k-i)`, the expanded form of the
/// Engel bracket `[x, y, ..., y]` with `k` copies of `y`.
pub fn engel_closed_form<R: Ring>(
    alg: &FreeAlgebra<R>,
    x: usize,
    y: usize,
    k: usize,
) -> FreePolynomial<R::Elem> {
    let ring = alg.ring();
    // row k of Pascal's triangle, computed in the ring
    let mut row = alloc::vec![ring.one()];
    for _ in 0..k {
        let mut next = alloc::vec![ring.one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = ring.add(&row[i - 1], &row[i]);
        }
        row = next;
    }
    let terms = row.into_iter().enumerate().map(|(i, c)| {
        let mut letters = alloc::vec![y as u16; i];
        letters.push(x as u16);
        letters.extend(core::iter::repeat_n(y as u16, k - i));
        let c = if i % 2 == 1 { ring.neg(&c) } else { c };
        (Word { letters }, c)
    });
    alg.from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rationals;

    fn xy() -> FreeAlgebra<Rationals> {
        FreeAlgebra::new(Rationals, &["x", "y"])
    }

    fn w(s: &str) -> Word {
        Word::new(s.bytes().map(|b| (b - b'x') as u16).collect()).unwrap()
    }

    #[test]
    fn divisibility_examples() {
        assert!(w("yxy").divides(&w("yxyyyxy")));
        assert!(!w("xx").divides(&w("yxyyyxy")));
        assert!(w("yxyyyxy").divides(&w("yxyyyxy")));
        assert!(!w("yxyyyxyy").divides(&w("yxyyyxy")));
    }

    #[test]
    fn canonical_order() {
        let mut ws = alloc::vec![w("yy"), w("y"), w("yx"), w("x"), w("xy")];
        ws.sort();
        let names = ["x".to_string(), "y".to_string()];
        let r: Vec<String> = ws.iter().map(|x| x.render(&names)).collect();
        assert_eq!(r, ["x", "y", "x*y", "y*x", "y^2"]);
    }

    #[test]
    fn products_and_brackets() {
        let a = xy();
        let (x, y) = (a.gen(0), a.gen(1));
        assert_eq!(a.render(&a.mul(&x, &y)), "x*y");
        let p = a.mul(&a.add(&x, &y), &a.sub(&x, &y));
        assert_eq!(a.render(&p), "-y^2 + y*x - x*y + x^2");
        assert_eq!(a.render(&a.bracket(&x, &y)), "-y*x + x*y");
        assert!(a.is_zero(&a.bracket(&x, &x)));
        let xy_ = a.mul(&x, &y);
        assert_eq!(a.render(&a.bracket(&xy_, &y)), "-y*x*y + x*y^2");
    }

    #[test]
    fn engel_two() {
        let a = xy();
        let e = a.engel_bracket(&a.gen(0), &a.gen(1), 2);
        assert_eq!(a.render(&e), "y^2*x - 2*y*x*y + x*y^2");
        assert_eq!(e, engel_closed_form(&a, 0, 1, 2));
    }

    #[test]
    fn closed_form_three_and_four() {
        let a = xy();
        let three = engel_closed_form(&a, 0, 1, 3);
        assert_eq!(a.render(&three), "-y^3*x + 3*y^2*x*y - 3*y*x*y^2 + x*y^3");
        let four = engel_closed_form(&a, 0, 1, 4);
        assert_eq!(
            a.render(&four),
            "y^4*x - 4*y^3*x*y + 6*y^2*x*y^2 - 4*y*x*y^3 + x*y^4"
        );
    }

    #[test]
    fn subwords_of_support_word() {
        assert_eq!(w("yxyyyxy").subwords().len(), 19);
    }
}
