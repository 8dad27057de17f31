use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{render_coefficient, Field, Ring, ScalarRing};
use crate::error::ScalarError;

/// Ordered indeterminate names, each with a positive weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedVariableSet {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl WeightedVariableSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends an indeterminate and returns its index.
    pub fn push(&mut self, name: &str, weight: u32) -> Result<usize, ScalarError> {
        if weight == 0 {
            return Err(ScalarError::ZeroWeight(name.to_string()));
        }
        if self.index_of(name).is_some() {
            return Err(ScalarError::DuplicateVariable(name.to_string()));
        }
        self.names.push(name.to_string());
        self.weights.push(weight);
        Ok(self.names.len() - 1)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn weight(&self, var: usize) -> u32 {
        self.weights[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The monomial consisting of a single indeterminate.
    pub fn monomial(&self, var: usize) -> Monomial {
        Monomial::var(var as u32, self.weights[var])
    }
}

/// A power product of indeterminates, stored sparsely as `(index, exponent)`
/// pairs sorted by index, with its weight cached.
///
/// `Ord` is graded lexicographic: total degree first, then the monomial with
/// the larger exponent at the first differing indeterminate is larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    weight: u32,
    degree: u32,
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            weight: 0,
            degree: 0,
            exps: Vec::new(),
        }
    }

    pub fn var(var: u32, weight: u32) -> Self {
        Monomial {
            weight,
            degree: 1,
            exps: alloc::vec![(var, 1)],
        }
    }

    /// Builds a monomial from `(index, exponent)` pairs; `weights` gives the
    /// weight of each index.
    pub fn from_exponents(pairs: &[(usize, u32)], vars: &WeightedVariableSet) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            for _ in 0..e {
                m = m.mul(&vars.monomial(v));
            }
        }
        m
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v as usize == var)
            .map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            weight: self.weight + other.weight,
            degree: self.degree + other.degree,
            exps,
        }
    }

    /// Removes `var` entirely, returning the reduced monomial and the exponent
    /// that was removed.
    fn split_off(&self, var: u32, var_weight: u32) -> (Monomial, u32) {
        match self.exps.iter().position(|&(v, _)| v == var) {
            None => (self.clone(), 0),
            Some(pos) => {
                let e = self.exps[pos].1;
                let mut exps = self.exps.clone();
                exps.remove(pos);
                (
                    Monomial {
                        weight: self.weight - e * var_weight,
                        degree: self.degree - e,
                        exps,
                    },
                    e,
                )
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps) {
                if a.0 != b.0 {
                    // the earlier indeterminate appears only in one of them
                    return b.0.cmp(&a.0);
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.exps.len().cmp(&other.exps.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest weight among the terms, `None` for zero.
    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weight).min()
    }
}

/// Polynomials over a base field in a fixed weighted indeterminate set,
/// optionally truncated: every product term of weight above `cap` is dropped.
///
/// Dropping all terms of weight above a bound is reduction modulo an ideal,
/// so the truncated operations still form a commutative ring.
#[derive(Clone, Debug)]
pub struct PolyRing<K: Field> {
    base: K,
    vars: Arc<WeightedVariableSet>,
    cap: Option<u32>,
}

impl<K: Field> PolyRing<K> {
    pub fn new(base: K, vars: WeightedVariableSet) -> Self {
        PolyRing {
            base,
            vars: Arc::new(vars),
            cap: None,
        }
    }

    pub fn truncated(base: K, vars: WeightedVariableSet, cap: u32) -> Self {
        PolyRing {
            base,
            vars: Arc::new(vars),
            cap: Some(cap),
        }
    }

    /// Same indeterminates, different truncation weight.
    pub fn with_cap(&self, cap: Option<u32>) -> Self {
        PolyRing {
            base: self.base.clone(),
            vars: Arc::clone(&self.vars),
            cap,
        }
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn vars(&self) -> &WeightedVariableSet {
        &self.vars
    }

    pub fn base_field(&self) -> &K {
        &self.base
    }

    pub fn constant(&self, c: &K::Elem) -> Poly<K::Elem> {
        self.monomial(Monomial::one(), c.clone())
    }

    pub fn var(&self, var: usize) -> Poly<K::Elem> {
        self.monomial(self.vars.monomial(var), self.base.one())
    }

    pub fn monomial(&self, m: Monomial, c: K::Elem) -> Poly<K::Elem> {
        let mut terms = BTreeMap::new();
        if !self.base.is_zero(&c) && self.within_cap(&m, self.cap) {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    fn within_cap(&self, m: &Monomial, cap: Option<u32>) -> bool {
        cap.is_none_or(|c| m.weight <= c)
    }

    fn accumulate(&self, terms: &mut BTreeMap<Monomial, K::Elem>, m: Monomial, c: K::Elem) {
        match terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                self.base.add_assign(e.get_mut(), &c);
                if self.base.is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    /// Product with every term of weight above `cap` discarded.
    pub fn mul_truncated(
        &self,
        x: &Poly<K::Elem>,
        y: &Poly<K::Elem>,
        cap: Option<u32>,
    ) -> Poly<K::Elem> {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &x.terms {
            for (m2, c2) in &y.terms {
                if cap.is_some_and(|c| m1.weight + m2.weight > c) {
                    continue;
                }
                let c = self.base.mul(c1, c2);
                if !self.base.is_zero(&c) {
                    self.accumulate(&mut terms, m1.mul(m2), c);
                }
            }
        }
        Poly { terms }
    }

    /// Drops the terms of weight above `cap`.
    pub fn truncate(&self, x: &Poly<K::Elem>, cap: u32) -> Poly<K::Elem> {
        Poly {
            terms: x
                .terms
                .iter()
                .filter(|(m, _)| m.weight <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn coefficient(&self, x: &Poly<K::Elem>, m: &Monomial) -> K::Elem {
        x.terms.get(m).cloned().unwrap_or_else(|| self.base.zero())
    }

    /// The constant term.
    pub fn constant_term(&self, x: &Poly<K::Elem>) -> K::Elem {
        self.coefficient(x, &Monomial::one())
    }

    /// Substitutes a base-field value for one indeterminate.
    pub fn substitute(&self, x: &Poly<K::Elem>, var: usize, value: &K::Elem) -> Poly<K::Elem> {
        let mut terms = BTreeMap::new();
        let w = self.vars.weight(var);
        for (m, c) in &x.terms {
            let (rest, e) = m.split_off(var as u32, w);
            let c = if e == 0 {
                c.clone()
            } else {
                self.base.mul(c, &self.base.pow(value, e))
            };
            if !self.base.is_zero(&c) {
                self.accumulate(&mut terms, rest, c);
            }
        }
        Poly { terms }
    }

    /// Indeterminates that occur in `x`, ascending.
    pub fn occurring_vars(&self, x: &Poly<K::Elem>) -> Vec<usize> {
        let mut out: Vec<usize> = x
            .terms
            .keys()
            .flat_map(|m| m.exps.iter().map(|&(v, _)| v as usize))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .map(|&(v, e)| {
                let name = self.vars.name(v as usize);
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{}^{}", name, e)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl<K: Field> Ring for PolyRing<K> {
    type Elem = Poly<K::Elem>;

    fn zero(&self) -> Poly<K::Elem> {
        Poly::zero()
    }

    fn one(&self) -> Poly<K::Elem> {
        self.constant(&self.base.one())
    }

    fn from_int(&self, n: i64) -> Poly<K::Elem> {
        self.constant(&self.base.from_int(n))
    }

    fn add(&self, a: &Poly<K::Elem>, b: &Poly<K::Elem>) -> Poly<K::Elem> {
        let mut out = a.clone();
        self.add_assign(&mut out, b);
        out
    }

    fn add_assign(&self, a: &mut Poly<K::Elem>, b: &Poly<K::Elem>) {
        for (m, c) in &b.terms {
            self.accumulate(&mut a.terms, m.clone(), c.clone());
        }
    }

    fn neg(&self, a: &Poly<K::Elem>) -> Poly<K::Elem> {
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.base.neg(c)))
                .collect(),
        }
    }

    fn mul(&self, a: &Poly<K::Elem>, b: &Poly<K::Elem>) -> Poly<K::Elem> {
        self.mul_truncated(a, b, self.cap)
    }

    fn is_zero(&self, a: &Poly<K::Elem>) -> bool {
        a.terms.is_empty()
    }

    fn inv(&self, a: &Poly<K::Elem>) -> Result<Poly<K::Elem>, ScalarError> {
        if a.terms.is_empty() {
            return Err(ScalarError::DivisionByZero);
        }
        if a.terms.len() != 1 || !a.terms.keys().next().is_some_and(Monomial::is_one) {
            return Err(ScalarError::NonConstantInverse);
        }
        Ok(self.constant(&self.base.inv(&self.constant_term(a))?))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    /// Terms in descending graded-lex order with explicit signs, e.g.
    /// `alpha^2 - beta^2`. Prime-field coefficients print as bare residues.
    fn render(&self, a: &Poly<K::Elem>) -> String {
        if a.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in a.terms.iter().rev().enumerate() {
            let mut coeff = render_coefficient(&self.base, c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&coeff);
            } else {
                if coeff != "1" {
                    out.push_str(&coeff);
                    out.push('*');
                }
                out.push_str(&self.render_monomial(m));
            }
        }
        out
    }
}

impl<K: Field> ScalarRing<K> for PolyRing<K> {
    fn base(&self) -> &K {
        &self.base
    }

    fn embed(&self, k: &K::Elem) -> Poly<K::Elem> {
        self.constant(k)
    }

    fn scale(&self, a: &Poly<K::Elem>, k: &K::Elem) -> Poly<K::Elem> {
        if self.base.is_zero(k) {
            return Poly::zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.base.mul(c, k)))
                .collect(),
        }
    }
}
