//! Recomputes the graded dimensions of the instance algebra from scratch:
//! explicit word lists, explicit multiples of h1 and h2, and a small
//! rational elimination written here. Nothing from the crate is used
//! except for the final comparison.

use std::collections::BTreeMap;

use engel_core::{Presentation, PrimeField, QuotientAlgebra, Rationals};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

type Word = Vec<u8>; // 0 = x, 1 = y

fn words(len: usize) -> Vec<Word> {
    (0..1u32 << len)
        .map(|bits| (0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect())
        .collect()
}

fn w(s: &str) -> Word {
    s.bytes().map(|b| if b == b'x' { 0 } else { 1 }).collect()
}

fn is_factor(small: &[u8], big: &[u8]) -> bool {
    small.len() <= big.len() && big.windows(small.len()).any(|win| win == small)
}

/// Membership in the monomial ideal, straight from the six clauses.
fn monomial_relation(word: &[u8]) -> bool {
    let support = [w("yxyyyxy"), w("yyxyxyy")];
    let xs = word.iter().filter(|&&l| l == 0).count();
    word.len() >= 8
        || xs >= 3
        || (word.len() == 7 && !support.iter().any(|s| s == word))
        || (word.len() <= 6 && !support.iter().any(|s| is_factor(word, s)))
}

type Vector = BTreeMap<Word, BigRational>;

fn poly(terms: &[(i64, &str)]) -> Vector {
    terms
        .iter()
        .map(|&(c, s)| (w(s), BigRational::from_integer(BigInt::from(c))))
        .collect()
}

fn multiply(left: &[u8], p: &Vector, right: &[u8]) -> Vector {
    p.iter()
        .map(|(m, c)| {
            let mut word = left.to_vec();
            word.extend_from_slice(m);
            word.extend_from_slice(right);
            (word, c.clone())
        })
        .filter(|(word, _)| !monomial_relation(word))
        .collect()
}

fn rank(mut rows: Vec<Vector>) -> usize {
    let mut r = 0;
    let mut pivots: Vec<Vector> = Vec::new();
    for row in rows.iter_mut() {
        for p in &pivots {
            let (lead, lc) = p.iter().next().unwrap();
            if let Some(c) = row.get(lead).cloned() {
                let f = c / lc;
                for (m, v) in p {
                    let e = row.entry(m.clone()).or_insert_with(BigRational::zero);
                    *e -= &f * v;
                }
                row.retain(|_, v| !v.is_zero());
            }
        }
        if !row.is_empty() {
            pivots.push(row.clone());
            r += 1;
        }
    }
    r
}

fn oracle_dims() -> (Vec<usize>, Vec<usize>) {
    let h1 = poly(&[(2, "xyyyxy"), (-5, "yxyxyy"), (-2, "yxyyyx"), (5, "yyxyxy")]);
    let h2 = poly(&[(2, "yxyyyxy"), (-5, "yyxyxyy")]);
    let mut rows: BTreeMap<usize, Vec<Vector>> = BTreeMap::new();
    for (h, d) in [(&h1, 6usize), (&h2, 7)] {
        for extra in 0..=(7 - d) {
            for split in 0..=extra {
                for l in words(split) {
                    for r in words(extra - split) {
                        rows.entry(d + extra).or_default().push(multiply(&l, h, &r));
                    }
                }
            }
        }
    }
    let mut monomial = Vec::new();
    let mut full = Vec::new();
    for d in 1..=7 {
        let survivors = words(d).iter().filter(|x| !monomial_relation(x)).count();
        monomial.push(survivors);
        full.push(survivors - rank(rows.remove(&d).unwrap_or_default()));
    }
    (monomial, full)
}

#[test]
fn graded_dimensions_match_oracle() {
    let (monomial, full) = oracle_dims();
    let spec = Presentation::engel_counterexample();
    let b = QuotientAlgebra::build(&spec, Rationals).unwrap();
    let c = QuotientAlgebra::build(&spec.monomial_part(), Rationals).unwrap();
    assert_eq!(b.graded_dims(), full);
    assert_eq!(c.graded_dims(), monomial);
    assert_eq!(full.iter().sum::<usize>(), 26);
    assert_eq!(b.dim(), 26);
    assert_eq!(b.nilpotency_degree(), 8);
}

#[test]
fn dimension_is_stable_over_large_primes() {
    let (_, full) = oracle_dims();
    let spec = Presentation::engel_counterexample();
    for p in [5, 7, 11, 101] {
        let f = PrimeField::new(p).unwrap();
        let b = QuotientAlgebra::build(&spec.with_characteristic(p).unwrap(), f).unwrap();
        assert_eq!(b.graded_dims(), full, "p = {p}");
    }
}

#[test]
fn every_word_of_length_eight_vanishes() {
    let spec = Presentation::engel_counterexample();
    let b = QuotientAlgebra::build(&spec, Rationals).unwrap();
    let free = spec.free_algebra();
    for word in words(8) {
        let idx: Vec<usize> = word.iter().map(|&l| l as usize).collect();
        let p = free.word(engel_core::Word::from_indices(&idx).unwrap());
        assert!(b.normal_form(&p).coords().iter().all(Zero::is_zero));
    }
}
