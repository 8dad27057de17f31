//! Elements with indeterminate coefficients.
//!
//! A generic element of a quotient algebra carries one fresh indeterminate
//! per basis coordinate, weighted by the degree of that basis word. Every
//! coordinate of a product expression is then a polynomial whose terms all
//! have weight equal to the degree of the coordinate, so truncating the
//! coefficients at weight `c` is the same as working modulo `B^(c+1)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::quotient::{AlgebraElement, ElementRing, QuotientAlgebra};
use crate::scalars::{Field, Poly, PolyRing, Ring, WeightedVariableSet};

/// Generic element over a polynomial ring.
pub type GenericElement<K> = AlgebraElement<Poly<<K as Ring>::Elem>>;

/// Collects indeterminates for several generic elements sharing one
/// polynomial ring.
#[derive(Clone, Debug, Default)]
pub struct GenericBuilder {
    vars: WeightedVariableSet,
    elems: Vec<(usize, Vec<(usize, usize)>)>,
}

impl GenericBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// A fully generic element with indeterminates `prefix_1 ... prefix_dim`.
    pub fn element<K: Field>(
        &mut self,
        alg: &QuotientAlgebra<K>,
        prefix: &str,
    ) -> Result<usize, Error> {
        self.element_from_degree(alg, prefix, 1)
    }

    /// A generic element supported on basis words of degree `>= min_degree`.
    /// Indeterminates keep the numbering of the full basis.
    pub fn element_from_degree<K: Field>(
        &mut self,
        alg: &QuotientAlgebra<K>,
        prefix: &str,
        min_degree: usize,
    ) -> Result<usize, Error> {
        let mut slots = Vec::new();
        for i in 0..alg.dim() {
            let d = alg.degree(i);
            if d >= min_degree {
                let var = self.vars.push(&format!("{}_{}", prefix, i + 1), d as u32)?;
                slots.push((i, var));
            }
        }
        self.elems.push((alg.dim(), slots));
        Ok(self.elems.len() - 1)
    }

    /// A generic element on chosen basis coordinates with chosen names.
    pub fn element_on<K: Field>(
        &mut self,
        alg: &QuotientAlgebra<K>,
        coords: &[(usize, &str)],
    ) -> Result<usize, Error> {
        let mut slots = Vec::new();
        for &(i, name) in coords {
            let var = self.vars.push(name, alg.degree(i) as u32)?;
            slots.push((i, var));
        }
        self.elems.push((alg.dim(), slots));
        Ok(self.elems.len() - 1)
    }

    /// The polynomial ring (truncated at `cap`) and the elements, in the
    /// order they were declared.
    pub fn finish<K: Field>(self, base: K, cap: Option<u32>) -> (PolyRing<K>, Vec<GenericElement<K>>) {
        let ring = match cap {
            Some(c) => PolyRing::truncated(base, self.vars, c),
            None => PolyRing::new(base, self.vars),
        };
        let elems = self
            .elems
            .iter()
            .map(|(dim, slots)| {
                let mut coords = alloc::vec![ring.zero(); *dim];
                for &(i, var) in slots {
                    coords[i] = ring.var(var);
                }
                AlgebraElement::from_coords(coords)
            })
            .collect();
        (ring, elems)
    }
}

/// Drops coefficient terms of weight above `cap`.
pub fn truncate<K: Field>(ring: &PolyRing<K>, u: &GenericElement<K>, cap: u32) -> GenericElement<K> {
    u.map(|c| ring.truncate(c, cap))
}

/// Runs `steps` steps `x -> step(x, j)` starting from `start`, where every
/// step's output has at least one indeterminate of weight `>= 1` from a
/// source not yet used (the step vanishes when that source is zero).
///
/// A coefficient term of the intermediate value `x` that already exceeds
/// `top - remaining` can only end up in terms of weight above `top`, which
/// vanish in an algebra with `B^(top+1) = 0`. The chain therefore runs with
/// the cap rising from `top - steps` to `top`.
pub fn scheduled_chain<'a, K, F>(
    alg: &'a QuotientAlgebra<K>,
    ring: &PolyRing<K>,
    start: &GenericElement<K>,
    steps: usize,
    mut step: F,
) -> GenericElement<K>
where
    K: Field,
    F: FnMut(&ElementRing<'a, K, PolyRing<K>>, &GenericElement<K>, usize) -> GenericElement<K>,
{
    use crate::algebra::Associative;
    let top = alg.nilpotency_degree() - 1;
    if steps >= top {
        return alg.over(ring.clone()).zero();
    }
    let cap0 = (top - steps) as u32;
    let mut x = truncate(ring, start, cap0);
    for j in 0..steps {
        let cap = (top - steps + j + 1) as u32;
        let r = alg.over(ring.with_cap(Some(cap)));
        x = step(&r, &x, j);
    }
    x
}

/// The indeterminate names of a polynomial ring, for reports.
pub fn variable_names<K: Field>(ring: &PolyRing<K>) -> Vec<String> {
    let vars = ring.vars();
    (0..vars.len()).map(|v| String::from(vars.name(v))).collect()
}
