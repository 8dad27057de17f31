//! Reduced row echelon form over a field, grown one vector at a time.

use alloc::vec::Vec;

use crate::scalars::Field;

/// A subspace of `K^n` kept in fully reduced echelon form.
///
/// The pivot of a row is its first nonzero coordinate, normalized to 1, and
/// every other row is zero in that coordinate.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<K: Field> {
    field: K,
    n: usize,
    rows: Vec<(usize, Vec<K::Elem>)>,
}

impl<K: Field> Echelon<K> {
    pub fn new(field: K, n: usize) -> Self {
        Echelon {
            field,
            n,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows sorted by pivot.
    pub fn rows(&self) -> &[(usize, Vec<K::Elem>)] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.iter().any(|(p, _)| *p == col)
    }

    /// Subtracts multiples of the rows until `v` vanishes on every pivot.
    pub fn reduce(&self, v: &mut [K::Elem]) {
        debug_assert_eq!(v.len(), self.n);
        let f = &self.field;
        for (p, row) in &self.rows {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, mut v: Vec<K::Elem>) -> bool {
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pivot]).expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if f.is_zero(&row[pivot]) {
                continue;
            }
            let c = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{PrimeField, Rationals, Ring};

    #[test]
    fn rank_of_dependent_vectors() {
        let f = Rationals;
        let q = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(q(&[0, 2, 4])));
        assert!(e.insert(q(&[1, 1, 1])));
        assert!(!e.insert(q(&[2, 4, 6])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.rows()[0].1, q(&[1, 0, -1]));
        assert_eq!(e.rows()[1].1, q(&[0, 1, 2]));
    }

    #[test]
    fn prime_field_collapse() {
        let f = PrimeField::new(3).unwrap();
        let mut e = Echelon::new(f, 2);
        assert!(e.insert(alloc::vec![1, 2]));
        assert!(!e.insert(alloc::vec![2, 1]));
    }
}
