//! Operations shared by every associative carrier: the free algebra and the
//! finite-dimensional quotients.

use alloc::vec::Vec;

/// An associative (not necessarily unital) algebra whose elements are
/// plain values and whose operations live on the algebra object.
pub trait Associative {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `ab - ba`.
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    /// `[u, v, ..., v]` with `v` repeated `k` times, bracketed from the left.
    fn engel_bracket(&self, u: &Self::Elem, v: &Self::Elem, k: usize) -> Self::Elem {
        let mut acc = u.clone();
        for _ in 0..k {
            acc = self.bracket(&acc, v);
        }
        acc
    }

    /// Left-normed bracket `[e0, e1, ..., en]`.
    fn left_normed(&self, elems: &[Self::Elem]) -> Self::Elem {
        let Some((first, rest)) = elems.split_first() else {
            return self.zero();
        };
        rest.iter()
            .fold(first.clone(), |acc, e| self.bracket(&acc, e))
    }

    /// `a^k` for `k >= 1`.
    fn power(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        assert!(k >= 1, "power of a non-unital element needs k >= 1");
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Powers `a, a^2, ..., a^k`, stopping early once a power is zero.
    fn powers(&self, a: &Self::Elem, k: usize) -> Vec<Self::Elem> {
        let mut out = Vec::with_capacity(k);
        let mut p = a.clone();
        for _ in 0..k {
            if self.is_zero(&p) {
                break;
            }
            out.push(p.clone());
            p = self.mul(&p, a);
        }
        out
    }
}
