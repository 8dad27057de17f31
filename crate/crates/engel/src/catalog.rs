//! The claim catalog: every checked statement about the instance, grouped
//! by acceptance criterion. Expected outcomes come from a separate claims
//! file, so a failing identity can be an asserted negative.
//!
//! Instance expressions are written over `a` and `b`, which stand for the
//! first two generators of the loaded presentation.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use engel_core::bch::{bch_product, phi_is_homomorphism, phi_is_homomorphism_at, star_engel_check};
use engel_core::expr::parse_poly;
use engel_core::freealg::engel_closed_form;
use engel_core::group::{
    characteristic_scan, circle, filtration_check, group_engel_word, hull_inv, hull_mul, is_one, one,
    quasi_inverse, unit, FilteredIdentity, ScanEntry, UnitalElement,
};
use engel_core::lie::{f_decomposition, lie_lower_central_series, Strategy};
use engel_core::{
    AlgebraElement, Associative, ElementRing, Error, Field, FreeAlgebra, FreePolynomial, Presentation,
    PrimeField, QuotientAlgebra, Rationals, Ring, Verdict, Witness, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use crate::drivers::lie_engel_check_par;
use crate::io::{parse_presentation, render_presentation};
use crate::report::{ClaimRecord, Status, WitnessRecord};

type Q = num_rational::BigRational;
type B = QuotientAlgebra<Rationals>;

/// Result of evaluating one claim.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub holds: bool,
    pub witness: Option<WitnessRecord>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(w: WitnessRecord) -> Self {
        Outcome {
            holds: false,
            witness: Some(w),
        }
    }

    fn and(self, other: Outcome) -> Outcome {
        if self.holds {
            other
        } else {
            self
        }
    }

    fn note(value: impl Into<String>) -> WitnessRecord {
        WitnessRecord {
            args: Vec::new(),
            value: value.into(),
            coordinates: Vec::new(),
            expected: None,
        }
    }
}

/// Renders an element with its basis coordinates.
pub fn element_record<K: Field>(
    alg: &QuotientAlgebra<K>,
    args: &[AlgebraElement<K::Elem>],
    value: &AlgebraElement<K::Elem>,
) -> WitnessRecord {
    let r = alg.arith();
    WitnessRecord {
        args: args.iter().map(|a| r.render(a)).collect(),
        value: r.render(value),
        coordinates: value.coords().iter().map(|c| alg.field().render(c)).collect(),
        expected: None,
    }
}

/// Outcome of an identity check over all arguments.
pub fn verdict_outcome<K: Field>(alg: &QuotientAlgebra<K>, v: &Verdict<K::Elem>) -> Outcome {
    match (&v.holds, &v.witness) {
        (true, _) => Outcome::pass(),
        (false, Some(w)) => Outcome::fail(element_record(alg, &w.args, &w.value)),
        (false, None) => Outcome::fail(Outcome::note(
            "nonzero for generic arguments; every tried specialization vanishes over this field",
        )),
    }
}

fn same<K: Field>(
    alg: &QuotientAlgebra<K>,
    got: &AlgebraElement<K::Elem>,
    want: &AlgebraElement<K::Elem>,
) -> Outcome {
    if got == want {
        return Outcome::pass();
    }
    let mut w = element_record(alg, &[], got);
    w.expected = Some(alg.arith().render(want));
    Outcome::fail(w)
}

fn same_debug<T: Debug + PartialEq>(got: T, want: T) -> Outcome {
    if got == want {
        return Outcome::pass();
    }
    let mut w = Outcome::note(format!("{got:?}"));
    w.expected = Some(format!("{want:?}"));
    Outcome::fail(w)
}

fn zero<K: Field>(alg: &QuotientAlgebra<K>, label: &str, u: &AlgebraElement<K::Elem>) -> Outcome {
    if alg.arith().is_zero(u) {
        return Outcome::pass();
    }
    let mut w = element_record(alg, &[], u);
    w.args = vec![label.to_string()];
    w.expected = Some("0".into());
    Outcome::fail(w)
}

fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes
        .into_iter()
        .find(|o| !o.holds)
        .unwrap_or_else(Outcome::pass)
}

/// Shared inputs: the presentation, the seed and lazily built algebras.
pub struct Context {
    spec: Presentation,
    seed: u64,
    b: OnceLock<B>,
    c: OnceLock<B>,
    primes: Mutex<BTreeMap<u64, Arc<QuotientAlgebra<PrimeField>>>>,
    scans: Mutex<BTreeMap<u64, Arc<ScanEntry>>>,
}

impl Context {
    /// The catalog is stated over the rationals and needs two generators.
    pub fn new(spec: Presentation, seed: u64) -> Result<Self, Error> {
        if spec.characteristic() != 0 {
            return Err(Error::Unsupported(format!(
                "the claim catalog is stated in characteristic 0, the document declares {}",
                spec.characteristic()
            )));
        }
        if spec.generators().len() < 2 {
            return Err(Error::Unsupported("the claim catalog needs two generators".into()));
        }
        Ok(Context {
            spec,
            seed,
            b: OnceLock::new(),
            c: OnceLock::new(),
            primes: Mutex::new(BTreeMap::new()),
            scans: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn spec(&self) -> &Presentation {
        &self.spec
    }

    fn b(&self) -> Result<&B, Error> {
        if let Some(b) = self.b.get() {
            return Ok(b);
        }
        let b = QuotientAlgebra::build(&self.spec, Rationals)?;
        Ok(self.b.get_or_init(|| b))
    }

    /// The quotient by the monomial clauses alone.
    fn c(&self) -> Result<&B, Error> {
        if let Some(c) = self.c.get() {
            return Ok(c);
        }
        let c = QuotientAlgebra::build(&self.spec.monomial_part(), Rationals)?;
        Ok(self.c.get_or_init(|| c))
    }

    fn over(&self, p: u64) -> Result<Arc<QuotientAlgebra<PrimeField>>, Error> {
        if let Some(a) = self.primes.lock().expect("lock").get(&p) {
            return Ok(a.clone());
        }
        let alg = Arc::new(QuotientAlgebra::build(
            &self.spec.with_characteristic(p)?,
            PrimeField::new(p)?,
        )?);
        Ok(self.primes.lock().expect("lock").entry(p).or_insert(alg).clone())
    }

    fn scan(&self, p: u64) -> Result<Arc<ScanEntry>, Error> {
        if let Some(s) = self.scans.lock().expect("lock").get(&p) {
            return Ok(s.clone());
        }
        let entry = Arc::new(characteristic_scan(&self.spec, &[p])?.remove(0));
        Ok(self.scans.lock().expect("lock").entry(p).or_insert(entry).clone())
    }

    /// Rewrites `a` and `b` to the first two generator names.
    fn names(&self, text: &str) -> String {
        let g = self.spec.generators();
        text.chars()
            .map(|ch| match ch {
                'a' => g[0].clone(),
                'b' => g[1].clone(),
                other => other.to_string(),
            })
            .collect()
    }

    fn el<K: Field>(&self, alg: &QuotientAlgebra<K>, text: &str) -> Result<AlgebraElement<K::Elem>, Error> {
        alg.parse(&self.names(text))
    }

    fn word(&self, text: &str) -> Result<Word, Error> {
        self.spec.parse_word(&self.names(text))
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

type Run = fn(&Context) -> Result<Outcome, Error>;

/// One catalog entry.
pub struct ClaimDef {
    pub id: &'static str,
    pub criterion: u8,
    pub statement: &'static str,
    run: Run,
}

impl ClaimDef {
    pub fn run(&self, ctx: &Context) -> Result<Outcome, Error> {
        (self.run)(ctx)
    }

    pub fn anchor(&self) -> String {
        format!("criterion {}: {}", self.criterion, CRITERIA[self.criterion as usize - 1])
    }
}

/// Short names of the acceptance criteria, in order.
pub const CRITERIA: [&str; 10] = [
    "basis and dimensions",
    "relations",
    "closed form of Engel brackets",
    "multihomogeneous components",
    "Lie Engel conditions",
    "group Engel conditions",
    "nilpotency class",
    "BCH group",
    "characteristic scan",
    "engine properties",
];

macro_rules! claims {
    ($($criterion:literal $id:literal $statement:literal => $run:expr;)*) => {
        vec![$(ClaimDef { id: $id, criterion: $criterion, statement: $statement, run: $run },)*]
    };
}

fn survivors_by_degree(alg: &B) -> Vec<usize> {
    let top = alg.nilpotency_degree() - 1;
    (1..=top)
        .map(|d| alg.survivors().iter().filter(|w| w.degree() == d).count())
        .collect()
}

fn words_of_degree(ctx: &Context, list: &[Word], d: usize) -> Vec<String> {
    let mut out: Vec<String> = list
        .iter()
        .filter(|w| w.degree() == d)
        .map(|w| ctx.spec.render_word(w))
        .collect();
    out.sort();
    out
}

fn word_list(ctx: &Context, list: &[&str]) -> Result<Vec<String>, Error> {
    let mut out = list
        .iter()
        .map(|s| Ok(ctx.spec.render_word(&ctx.word(s)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    out.sort();
    Ok(out)
}

const MONOMIAL_RELATIONS: [&str; 6] = ["a^2", "a*b^2*a", "b^4", "b^2*a*b^2", "a*b*a*b^3", "b^3*a*b*a"];

fn product_of_letters(r: &ElementRing<'_, Rationals, Rationals>, w: &Word) -> AlgebraElement<Q> {
    let mut acc = r.generator(w.letters()[0] as usize);
    for &l in &w.letters()[1..] {
        acc = r.mul(&acc, &r.generator(l as usize));
    }
    acc
}

fn bracket_of(r: &ElementRing<'_, Rationals, Rationals>, pattern: &str) -> AlgebraElement<Q> {
    let elems: Vec<_> = pattern
        .chars()
        .map(|c| r.generator(if c == 'a' { 0 } else { 1 }))
        .collect();
    r.left_normed(&elems)
}

fn bracket_identity(ctx: &Context, pattern: &str, value: &str) -> Result<Outcome, Error> {
    let mut out = Outcome::pass();
    for alg in [ctx.c()?, ctx.b()?] {
        let r = alg.arith();
        out = out.and(same(alg, &bracket_of(&r, pattern), &ctx.el(alg, value)?));
    }
    Ok(out)
}

fn chain_identity(ctx: &Context, k: usize) -> Result<Outcome, Error> {
    let alg = ctx.b()?;
    let r = alg.arith();
    let (a, b) = (r.generator(0), r.generator(1));
    let e = r.engel_bracket(&a, &b, k);
    let be = r.mul(&b, &e);
    let (extra, coefficient) = match k {
        1 => ("a*b*a + b^2*a - b*a*b", 0),
        2 => ("a*b*a*b - b*a*b*a", -2),
        3 => ("a*b*a*b^2 - 2*b*a*b*a*b + b^2*a*b*a", -3),
        _ => ("-3*b*a*b*a*b^2 + 3*b^2*a*b*a*b", -4),
    };
    let right = r.add(&r.add(&e, &ctx.el(alg, extra)?), &r.scale_int(&be, coefficient));
    let id = FilteredIdentity {
        label: format!("k = {k}"),
        left: group_engel_word(&r, &a, &b, k),
        right: unit(&r, &right),
        order: k + 3,
    };
    if id.holds(&r) {
        return Ok(Outcome::pass());
    }
    let mut w = element_record(alg, &[a, b], &id.left.part);
    w.expected = Some(format!("{} modulo B^{}", r.render(&right), id.order));
    Ok(Outcome::fail(w))
}

fn witness_is_generators<K: Field>(
    alg: &QuotientAlgebra<K>,
    v: &Verdict<K::Elem>,
    value: &AlgebraElement<K::Elem>,
) -> Outcome {
    let r = alg.arith();
    let expected = Witness {
        args: vec![r.generator(0), r.generator(1)],
        value: value.clone(),
    };
    match &v.witness {
        Some(w) if *w == expected => Outcome::pass(),
        Some(w) => {
            let mut rec = element_record(alg, &w.args, &w.value);
            rec.expected = Some(format!(
                "({}, {}) with value {}",
                r.render(&expected.args[0]),
                r.render(&expected.args[1]),
                r.render(value)
            ));
            Outcome::fail(rec)
        }
        None => Outcome::fail(Outcome::note("identity holds, so there is no witness")),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into())
}

fn random_element(alg: &B, rng: &mut ChaCha8Rng) -> AlgebraElement<Q> {
    let coords = (0..alg.dim())
        .map(|_| {
            if rng.gen_bool(0.5) {
                Q::from_integer(0.into())
            } else {
                random_rational(rng)
            }
        })
        .collect();
    AlgebraElement::from_coords(coords)
}

fn random_free(free: &FreeAlgebra<Rationals>, rng: &mut ChaCha8Rng) -> FreePolynomial<Q> {
    let n = free.generators().len();
    let terms = (0..rng.gen_range(0..6)).map(|_| {
        let len = rng.gen_range(1..=9);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let c = Q::from_integer(rng.gen_range(-9i64..=9).into());
        (Word::from_indices(&letters).expect("nonempty"), c)
    });
    free.from_terms(terms)
}

const TRIALS: usize = 24;

fn lie_engel_outcome<K>(alg: &QuotientAlgebra<K>, n: usize, strategy: Strategy) -> Result<Outcome, Error>
where
    K: Field + Send + Sync,
    K::Elem: Send + Sync,
{
    Ok(verdict_outcome(alg, &lie_engel_check_par(alg, n, strategy)?))
}

fn scan_witness(ctx: &Context, p: u64) -> Result<Outcome, Error> {
    let s = ctx.scan(p)?;
    let is_zero = s.witness_part.coords().iter().all(|&c| c == 0);
    // the coefficient 6 vanishes exactly in characteristics 2 and 3
    let should_vanish = 6 % p == 0;
    if is_zero == should_vanish && s.matches_six_top_word {
        return Ok(Outcome::pass());
    }
    let mut w = Outcome::note(s.witness_rendered.clone());
    w.coordinates = s.witness_part.coords().iter().map(u64::to_string).collect();
    w.expected = Some(format!("image of {}", ctx.names("6*b^2*a*b*a*b^2")));
    Ok(Outcome::fail(w))
}

fn scan_flag(holds: bool) -> Outcome {
    if holds {
        Outcome::pass()
    } else {
        Outcome::fail(Outcome::note("see the 5-Engel claims for a witness"))
    }
}

/// All claims, in report order.
pub fn catalog() -> Vec<ClaimDef> {
    claims! {
        1 "basis.survivors-per-degree"
            "words surviving the monomial relations number 2, 3, 5, 6, 6, 4, 2 in degrees 1 to 7"
            => |ctx| Ok(same_debug(survivors_by_degree(ctx.b()?), vec![2, 3, 5, 6, 6, 4, 2]));
        1 "basis.degree-6-survivors"
            "the degree-6 survivors are ab^3ab, babab^2, bab^3a and b^2abab"
            => |ctx| Ok(same_debug(
                words_of_degree(ctx, ctx.b()?.survivors(), 6),
                word_list(ctx, &["a*b^3*a*b", "b*a*b*a*b^2", "b*a*b^3*a", "b^2*a*b*a*b"])?,
            ));
        1 "basis.degree-7-survivors"
            "the degree-7 survivors are bab^3ab and b^2abab^2"
            => |ctx| Ok(same_debug(
                words_of_degree(ctx, ctx.b()?.survivors(), 7),
                word_list(ctx, &["b*a*b^3*a*b", "b^2*a*b*a*b^2"])?,
            ));
        1 "basis.ideal-dimension"
            "the polynomial relations span a 2-dimensional ideal modulo the monomial ones"
            => |ctx| {
                let b = ctx.b()?;
                Ok(same_debug((b.ideal_dim(), b.ideal_is_closed()), (2, true)))
            };
        1 "basis.graded-dimensions"
            "B has dimension 26 with graded dimensions 2, 3, 5, 6, 6, 3, 1; C has dimension 28"
            => |ctx| Ok(same_debug(
                (ctx.b()?.dim(), ctx.b()?.graded_dims(), ctx.c()?.dim()),
                (26, vec![2, 3, 5, 6, 6, 3, 1], 28),
            ));
        1 "basis.top-degree"
            "the degree-7 part of B is spanned by b^2abab^2"
            => |ctx| Ok(same_debug(
                words_of_degree(ctx, ctx.b()?.basis(), 7),
                word_list(ctx, &["b^2*a*b*a*b^2"])?,
            ));

        2 "relations.monomial-members"
            "a^2, ab^2a, b^4, b^2ab^2, abab^3, b^3aba and every word with one a and five or six b's vanish in C"
            => |ctx| {
                let c = ctx.c()?;
                let mut out = Vec::new();
                for w in MONOMIAL_RELATIONS {
                    out.push(zero(c, w, &ctx.el(c, w)?));
                }
                for total in [5, 6] {
                    for i in 0..=total {
                        let w = format!("b^{i}*a*b^{}", total - i).replace("b^0*", "").replace("*b^0", "");
                        out.push(zero(c, &w, &ctx.el(c, &w)?));
                    }
                }
                Ok(all(out))
            };
        2 "relations.zero-products"
            "a^2 = ab^2a = b^4 = b^2ab^2 = abab^3 = b^3aba = 0 as products in B"
            => |ctx| {
                let b = ctx.b()?;
                let r = b.arith();
                let mut out = Vec::new();
                for w in MONOMIAL_RELATIONS {
                    out.push(zero(b, w, &product_of_letters(&r, &ctx.word(w)?)));
                }
                Ok(all(out))
            };
        2 "relations.h-table"
            "modulo the monomial relations ah1 = h1a = 0, bh1 = -h1b = h2 and ah2 = h2a = bh2 = h2b = 0"
            => |ctx| {
                let c = ctx.c()?;
                let r = c.arith();
                let h1 = ctx.el(c, "2*a*b^3*a*b - 5*b*a*b*a*b^2 - 2*b*a*b^3*a + 5*b^2*a*b*a*b")?;
                let h2 = ctx.el(c, "2*b*a*b^3*a*b - 5*b^2*a*b*a*b^2")?;
                let (a, b) = (r.generator(0), r.generator(1));
                Ok(all([
                    zero(c, "a*h1", &r.mul(&a, &h1)),
                    zero(c, "h1*a", &r.mul(&h1, &a)),
                    same(c, &r.mul(&b, &h1), &h2),
                    same(c, &r.neg(&r.mul(&h1, &b)), &h2),
                    zero(c, "a*h2", &r.mul(&a, &h2)),
                    zero(c, "h2*a", &r.mul(&h2, &a)),
                    zero(c, "b*h2", &r.mul(&b, &h2)),
                    zero(c, "h2*b", &r.mul(&h2, &b)),
                ]))
            };

        3 "brackets.closed-form"
            "[x, (k) y] = sum over i of (-1)^i C(k,i) y^i x y^(k-i) in the free algebra for k = 1..7"
            => |ctx| {
                let free = ctx.spec.free_algebra();
                let (x, y) = (free.gen(0), free.gen(1));
                Ok(all((1..=7).map(|k| {
                    let it = free.engel_bracket(&x, &y, k);
                    let cf = engel_closed_form(&free, 0, 1, k);
                    if it == cf {
                        Outcome::pass()
                    } else {
                        let mut w = Outcome::note(free.render(&it));
                        w.args = vec![format!("k = {k}")];
                        w.expected = Some(free.render(&cf));
                        Outcome::fail(w)
                    }
                })))
            };

        4 "f.degree-rule"
            "f0, f4, f6, f8, f10, f12, f14, f16 and f18 vanish in C"
            => |ctx| {
                let c = ctx.c()?;
                let f = f_decomposition(c)?;
                Ok(all([0, 4, 6, 8, 10, 12, 14, 16, 18].map(|i| zero(c, &format!("f{i}"), f.get(i)))))
            };
        4 "f.f1-in-c"
            "f1 = -15babab^2 + 15b^2abab - 6bab^3a + 6ab^3ab in C"
            => |ctx| {
                let c = ctx.c()?;
                let f = f_decomposition(c)?;
                Ok(same(c, f.get(1), &ctx.el(c, "-15*b*a*b*a*b^2 + 15*b^2*a*b*a*b - 6*b*a*b^3*a + 6*a*b^3*a*b")?))
            };
        4 "f.f1-multiple-of-h1"
            "f1 is three times the image of h1 in C"
            => |ctx| {
                let c = ctx.c()?;
                let f = f_decomposition(c)?;
                let h1 = ctx.el(c, "2*a*b^3*a*b - 5*b*a*b*a*b^2 - 2*b*a*b^3*a + 5*b^2*a*b*a*b")?;
                Ok(same(c, f.get(1), &c.arith().scale_int(&h1, 3)))
            };
        4 "f.f7-negates-f1"
            "f7 = -f1 in C"
            => |ctx| {
                let c = ctx.c()?;
                let f = f_decomposition(c)?;
                Ok(same(c, f.get(7), &c.arith().neg(f.get(1))))
            };
        4 "f.vanish-in-b"
            "f0 through f19 all vanish in B"
            => |ctx| {
                let b = ctx.b()?;
                let f = f_decomposition(b)?;
                Ok(all(f.components.iter().map(|x| zero(b, &x.label, &x.value))))
            };
        4 "f.no-other-monomials"
            "no coefficient monomial outside the twenty listed ones occurs, in C or in B"
            => |ctx| {
                let mut out = Vec::new();
                for alg in [ctx.c()?, ctx.b()?] {
                    let f = f_decomposition(alg)?;
                    out.extend(f.unexpected.iter().map(|(label, v)| {
                        let mut w = element_record(alg, &[], v);
                        w.args = vec![label.clone()];
                        Outcome::fail(w)
                    }));
                }
                Ok(all(out))
            };

        5 "lie.engel-5.symbolic.q"
            "[u, (5) v] = 0 for all u, v in B over Q, by generic coefficients"
            => |ctx| lie_engel_outcome(ctx.b()?, 5, Strategy::Symbolic);
        5 "lie.engel-5.symbolic.f5"
            "[u, (5) v] = 0 for all u, v in B over F_5, by generic coefficients"
            => |ctx| lie_engel_outcome(&*ctx.over(5)?, 5, Strategy::Symbolic);
        5 "lie.engel-5.symbolic.f7"
            "[u, (5) v] = 0 for all u, v in B over F_7, by generic coefficients"
            => |ctx| lie_engel_outcome(&*ctx.over(7)?, 5, Strategy::Symbolic);
        5 "lie.engel-5.symmetrized.q"
            "[u, (5) v] = 0 over Q, by symmetrized sums over basis multisets"
            => |ctx| lie_engel_outcome(ctx.b()?, 5, Strategy::Symmetrized);
        5 "lie.engel-5.symmetrized.f5"
            "[u, (5) v] = 0 over F_5, by symmetrized sums over basis multisets"
            => |ctx| lie_engel_outcome(&*ctx.over(5)?, 5, Strategy::Symmetrized);
        5 "lie.engel-5.symmetrized.f7"
            "[u, (5) v] = 0 over F_7, by symmetrized sums over basis multisets"
            => |ctx| lie_engel_outcome(&*ctx.over(7)?, 5, Strategy::Symmetrized);
        5 "lie.engel-4"
            "[u, (4) v] = 0 for all u, v in B"
            => |ctx| lie_engel_outcome(ctx.b()?, 4, Strategy::Symbolic);
        5 "lie.engel-4.witness"
            "the 4-Engel witness is (a, b) with [a, (4) b] = -4bab^3 - 4b^3ab"
            => |ctx| {
                let b = ctx.b()?;
                let v = lie_engel_check_par(b, 4, Strategy::Symbolic)?;
                let value = ctx.el(b, "-4*b*a*b^3 - 4*b^3*a*b")?;
                let r = b.arith();
                let recomputed = r.engel_bracket(&r.generator(0), &r.generator(1), 4);
                Ok(witness_is_generators(b, &v, &value).and(same(b, &recomputed, &value)))
            };
        5 "lie.bracket.aba"
            "[a, b, a] = 2aba"
            => |ctx| bracket_identity(ctx, "aba", "2*a*b*a");
        5 "lie.bracket.aba-bbb"
            "[aba, b, b, b] = -3babab^2 + 3b^2abab"
            => |ctx| {
                let mut out = Outcome::pass();
                for alg in [ctx.c()?, ctx.b()?] {
                    let r = alg.arith();
                    let got = r.engel_bracket(&ctx.el(alg, "a*b*a")?, &r.generator(1), 3);
                    out = out.and(same(alg, &got, &ctx.el(alg, "-3*b*a*b*a*b^2 + 3*b^2*a*b*a*b")?));
                }
                Ok(out)
            };
        5 "lie.bracket.ababbb"
            "[a, b, a, b, b, b] = -6babab^2 + 6b^2abab"
            => |ctx| bracket_identity(ctx, "ababbb", "-6*b*a*b*a*b^2 + 6*b^2*a*b*a*b");
        5 "lie.bracket.abba"
            "[a, b, b, a] = [a, b, a, b]"
            => |ctx| {
                let mut out = Outcome::pass();
                for alg in [ctx.c()?, ctx.b()?] {
                    let r = alg.arith();
                    out = out.and(same(alg, &bracket_of(&r, "abba"), &bracket_of(&r, "abab")));
                }
                Ok(out)
            };
        5 "lie.bracket.abbba"
            "[a, b, b, b, a] = 2ab^3a + 3b^2aba + 3abab^2"
            => |ctx| bracket_identity(ctx, "abbba", "2*a*b^3*a + 3*b^2*a*b*a + 3*a*b*a*b^2");
        5 "lie.bracket.abbbab"
            "[a, b, b, b, a, b] = 2ab^3ab + 3b^2abab - 2bab^3a - 3babab^2"
            => |ctx| bracket_identity(ctx, "abbbab", "2*a*b^3*a*b + 3*b^2*a*b*a*b - 2*b*a*b^3*a - 3*b*a*b*a*b^2");
        5 "lie.bracket.abbbba"
            "[a, b, b, b, b, a] = -4bab^3a + 4ab^3ab"
            => |ctx| bracket_identity(ctx, "abbbba", "-4*b*a*b^3*a + 4*a*b^3*a*b");

        6 "group.chain.k1"
            "((1+a), (1+b)) = 1 + [a,b] + aba + b^2a - bab modulo B^4"
            => |ctx| chain_identity(ctx, 1);
        6 "group.chain.k2"
            "((1+a), (2) (1+b)) = 1 + [a,b,b] + abab - baba - 2b[a,b,b] modulo B^5"
            => |ctx| chain_identity(ctx, 2);
        6 "group.chain.k3"
            "((1+a), (3) (1+b)) = 1 + [a,b,b,b] + abab^2 - 2babab + b^2aba - 3b[a,b,b,b] modulo B^6"
            => |ctx| chain_identity(ctx, 3);
        6 "group.chain.k4"
            "((1+a), (4) (1+b)) = 1 + [a,(4)b] - 3babab^2 + 3b^2abab - 4b[a,(4)b] modulo B^7"
            => |ctx| chain_identity(ctx, 4);
        6 "group.chain.k5"
            "((1+a), (5) (1+b)) = 1 + 6b^2abab^2 exactly"
            => |ctx| {
                let b = ctx.b()?;
                let r = b.arith();
                let g = group_engel_word(&r, &r.generator(0), &r.generator(1), 5);
                let want = UnitalElement { part: ctx.el(b, "6*b^2*a*b*a*b^2")?, ..one(&r) };
                if g == want {
                    return Ok(Outcome::pass());
                }
                let mut w = element_record(b, &[r.generator(0), r.generator(1)], &g.part);
                w.expected = Some(r.render(&want.part));
                Ok(Outcome::fail(w))
            };
        6 "group.engel-5"
            "((1+u), (5) (1+v)) = 1 for all u, v in B"
            => |ctx| Ok(verdict_outcome(ctx.b()?, &engel_core::group::group_engel_check(ctx.b()?, 5)?));
        6 "group.engel-5.witness"
            "the first 5-Engel witness is (a, b), with Engel word 1 + 6b^2abab^2"
            => |ctx| {
                let b = ctx.b()?;
                let v = engel_core::group::group_engel_check(b, 5)?;
                Ok(witness_is_generators(b, &v, &ctx.el(b, "6*b^2*a*b*a*b^2")?))
            };
        6 "group.engel-6"
            "((1+u), (6) (1+v)) = 1 for all u, v in B"
            => |ctx| Ok(verdict_outcome(ctx.b()?, &engel_core::group::group_engel_check(ctx.b()?, 6)?));
        6 "group.engel-7"
            "((1+u), (7) (1+v)) = 1 for all u, v in B"
            => |ctx| Ok(verdict_outcome(ctx.b()?, &engel_core::group::group_engel_check(ctx.b()?, 7)?));

        7 "lie.lower-central-class"
            "the lower central series of the Lie algebra of B terminates at class 7"
            => |ctx| Ok(same_debug(lie_lower_central_series(ctx.b()?).class(), 7));
        7 "group.class"
            "1 + B has class exactly 7: a weight-7 commutator is nontrivial and weight 8 is trivial"
            => |ctx| {
                let b = ctx.b()?;
                let n = engel_core::group::group_nilpotency(b)?;
                let out = same_debug((n.class, n.next_weight_trivial, n.upper_bound), (7, true, 7));
                Ok(match (out.holds, &n.witness) {
                    (true, Some(_)) => out,
                    (true, None) => Outcome::fail(Outcome::note("no nontrivial weight-7 commutator found")),
                    (false, _) => out,
                })
            };
        7 "group.class-bounded-by-lie"
            "the class of 1 + B is at most the class of the Lie algebra of B"
            => |ctx| {
                let b = ctx.b()?;
                let g = engel_core::group::group_nilpotency(b)?.class;
                let l = lie_lower_central_series(b).class();
                Ok(if g <= l {
                    Outcome::pass()
                } else {
                    Outcome::fail(Outcome::note(format!("group class {g}, Lie class {l}")))
                })
            };

        8 "bch.phi-homomorphism.generic"
            "log(1 + (u o v)) = log(1+u) * log(1+v) for generic u, v"
            => |ctx| Ok(if phi_is_homomorphism(ctx.b()?)? {
                Outcome::pass()
            } else {
                Outcome::fail(Outcome::note("generic values differ"))
            });
        8 "bch.phi-homomorphism.random"
            "log(1 + (u o v)) = log(1+u) * log(1+v) for seeded random u, v"
            => |ctx| {
                let b = ctx.b()?;
                let r = b.arith();
                let mut rng = ctx.rng(8);
                for _ in 0..TRIALS {
                    let (u, v) = (random_element(b, &mut rng), random_element(b, &mut rng));
                    if !phi_is_homomorphism_at(&r, &u, &v)? {
                        let mut w = element_record(b, &[u.clone(), v.clone()], &circle(&r, &u, &v));
                        w.expected = Some("phi(u o v) = phi(u) * phi(v)".into());
                        return Ok(Outcome::fail(w));
                    }
                }
                Ok(Outcome::pass())
            };
        8 "bch.degree-two"
            "u * v agrees with u + v + [u,v]/2 in degrees 1 and 2"
            => |ctx| {
                let b = ctx.b()?;
                let r = b.arith();
                let half = Rationals.inv(&Rationals.from_int(2))?;
                let mut rng = ctx.rng(9);
                for _ in 0..TRIALS {
                    let (u, v) = (random_element(b, &mut rng), random_element(b, &mut rng));
                    let s = bch_product(&r, &u, &v)?;
                    let e = r.add(&r.add(&u, &v), &r.scale(&r.bracket(&u, &v), &half));
                    for d in 1..=2 {
                        let (got, want) = (r.graded_component(&s, d), r.graded_component(&e, d));
                        if got != want {
                            let mut w = element_record(b, &[u, v], &got);
                            w.expected = Some(r.render(&want));
                            return Ok(Outcome::fail(w));
                        }
                    }
                }
                Ok(Outcome::pass())
            };
        8 "bch.star-engel-5"
            "(u, (5) v) = 0 for all u, v in the BCH group of B"
            => |ctx| Ok(verdict_outcome(ctx.b()?, &star_engel_check(ctx.b()?, 5)?.verdict));
        8 "bch.star-engel-5.value"
            "at (log(1+a), log(1+b)) the 5-Engel word of the BCH group is 6b^2abab^2"
            => |ctx| {
                let b = ctx.b()?;
                Ok(same(b, &star_engel_check(b, 5)?.value_at_generators, &ctx.el(b, "6*b^2*a*b*a*b^2")?))
            };
        8 "bch.star-engel-6"
            "(u, (6) v) = 0 for all u, v in the BCH group of B"
            => |ctx| Ok(verdict_outcome(ctx.b()?, &star_engel_check(ctx.b()?, 6)?.verdict));

        9 "char.witness.f2"
            "over F_2 the part of ((1+a), (5) (1+b)) is 6b^2abab^2 = 0"
            => |ctx| scan_witness(ctx, 2);
        9 "char.witness.f3"
            "over F_3 the part of ((1+a), (5) (1+b)) is 6b^2abab^2 = 0"
            => |ctx| scan_witness(ctx, 3);
        9 "char.witness.f5"
            "over F_5 the part of ((1+a), (5) (1+b)) is 6b^2abab^2, which is nonzero"
            => |ctx| scan_witness(ctx, 5);
        9 "char.witness.f7"
            "over F_7 the part of ((1+a), (5) (1+b)) is 6b^2abab^2, which is nonzero"
            => |ctx| scan_witness(ctx, 7);
        9 "char.lie-engel-5.f5"
            "the Lie algebra of B over F_5 is 5-Engel"
            => |ctx| Ok(scan_flag(ctx.scan(5)?.lie_five_engel));
        9 "char.lie-engel-5.f7"
            "the Lie algebra of B over F_7 is 5-Engel"
            => |ctx| Ok(scan_flag(ctx.scan(7)?.lie_five_engel));
        9 "char.lie-engel-5.f2"
            "the Lie algebra of B over F_2 is 5-Engel"
            => |ctx| Ok(scan_flag(ctx.scan(2)?.lie_five_engel));
        9 "char.lie-engel-5.f3"
            "the Lie algebra of B over F_3 is 5-Engel"
            => |ctx| Ok(scan_flag(ctx.scan(3)?.lie_five_engel));
        9 "char.group-engel-5.f2"
            "1 + B over F_2 is 5-Engel"
            => |ctx| Ok(scan_flag(ctx.scan(2)?.group_five_engel));
        9 "char.group-engel-5.f3"
            "1 + B over F_3 is 5-Engel"
            => |ctx| Ok(scan_flag(ctx.scan(3)?.group_five_engel));

        10 "props.normal-form"
            "normal forms are linear, multiplicative and idempotent on seeded random polynomials"
            => |ctx| {
                let b = ctx.b()?;
                let r = b.arith();
                let free = ctx.spec.free_algebra();
                let mut rng = ctx.rng(10);
                for _ in 0..TRIALS {
                    let (p, s) = (random_free(&free, &mut rng), random_free(&free, &mut rng));
                    let k = random_rational(&mut rng);
                    let (np, ns) = (b.normal_form(&p), b.normal_form(&s));
                    let lifted = free.from_terms(
                        b.basis().iter().zip(np.coords()).map(|(w, c)| (w.clone(), c.clone())),
                    );
                    let checks = [
                        (b.normal_form(&free.mul(&p, &s)), r.mul(&np, &ns)),
                        (b.normal_form(&free.add(&p, &s)), r.add(&np, &ns)),
                        (b.normal_form(&free.scale(&p, &k)), r.scale(&np, &k)),
                        (b.normal_form(&lifted), np.clone()),
                    ];
                    for (got, want) in checks {
                        if got != want {
                            let mut w = element_record(b, &[], &got);
                            w.args = vec![free.render(&p), free.render(&s)];
                            w.expected = Some(r.render(&want));
                            return Ok(Outcome::fail(w));
                        }
                    }
                }
                Ok(Outcome::pass())
            };
        10 "props.grading"
            "the product of basis elements of degrees d and e lies in degree d + e"
            => |ctx| {
                let b = ctx.b()?;
                for i in 0..b.dim() {
                    for j in 0..b.dim() {
                        let d = b.degree(i) + b.degree(j);
                        if let Some((k, _)) = b.product(i, j).iter().find(|(k, _)| b.degree(*k) != d) {
                            return Ok(Outcome::fail(Outcome::note(format!(
                                "e{i} * e{j} has a component on e{k}"
                            ))));
                        }
                    }
                }
                Ok(Outcome::pass())
            };
        10 "props.circle-group"
            "the circle product is associative with identity 0, and 1 + B over F_7 is a group"
            => |ctx| {
                let b = ctx.b()?;
                let r = b.arith();
                let mut rng = ctx.rng(11);
                for _ in 0..TRIALS {
                    let u = random_element(b, &mut rng);
                    let v = random_element(b, &mut rng);
                    let w = random_element(b, &mut rng);
                    let left = circle(&r, &circle(&r, &u, &v), &w);
                    let right = circle(&r, &u, &circle(&r, &v, &w));
                    if left != right || circle(&r, &u, &r.zero()) != u {
                        let mut rec = element_record(b, &[u, v, w], &left);
                        rec.expected = Some(r.render(&right));
                        return Ok(Outcome::fail(rec));
                    }
                }
                let b7 = ctx.over(7)?;
                let r7 = b7.arith();
                for _ in 0..TRIALS {
                    let part = AlgebraElement::from_coords((0..b7.dim()).map(|_| rng.gen_range(0..7)).collect());
                    let g = UnitalElement { constant: rng.gen_range(1..7), part };
                    let gi = hull_inv(&r7, &g)?;
                    if !is_one(&r7, &hull_mul(&r7, &g, &gi)) || !is_one(&r7, &hull_mul(&r7, &gi, &g)) {
                        let mut rec = element_record(&b7, &[g.part.clone()], &gi.part);
                        rec.expected = Some("an inverse".into());
                        return Ok(Outcome::fail(rec));
                    }
                }
                Ok(Outcome::pass())
            };
        10 "props.quasi-inverse"
            "u o u' = u' o u = 0 for the quasi-inverse u', and b' = -b + b^2 - b^3"
            => |ctx| {
                let b = ctx.b()?;
                let r = b.arith();
                let out = same(b, &quasi_inverse(&r, &r.generator(1)), &ctx.el(b, "-b + b^2 - b^3")?);
                let mut rng = ctx.rng(12);
                for _ in 0..TRIALS {
                    let u = random_element(b, &mut rng);
                    let q = quasi_inverse(&r, &u);
                    for z in [circle(&r, &u, &q), circle(&r, &q, &u)] {
                        if !r.is_zero(&z) {
                            return Ok(Outcome::fail(element_record(b, &[u], &z)));
                        }
                    }
                }
                Ok(out)
            };
        10 "props.filtration"
            "((1+u), (1+v)) lies in 1 + B^(i+j) for u in B^i, v in B^j, for all i + j <= 8"
            => |ctx| {
                let b = ctx.b()?;
                for i in 1..8 {
                    for j in 1..=(8 - i) {
                        if !filtration_check(b, i, j)? {
                            return Ok(Outcome::fail(Outcome::note(format!("i = {i}, j = {j}"))));
                        }
                    }
                }
                Ok(Outcome::pass())
            };
        10 "props.parser-round-trip"
            "rendering then parsing returns the same polynomial, and the same presentation"
            => |ctx| {
                let free = ctx.spec.free_algebra();
                let mut rng = ctx.rng(13);
                for _ in 0..TRIALS {
                    let p = random_free(&free, &mut rng);
                    let text = free.render(&p);
                    if parse_poly(&text, &free).ok() != Some(p) {
                        return Ok(Outcome::fail(Outcome::note(text)));
                    }
                }
                let doc = render_presentation(&ctx.spec);
                match parse_presentation(&doc) {
                    Ok(s) if s == ctx.spec => Ok(Outcome::pass()),
                    _ => Ok(Outcome::fail(Outcome::note(doc))),
                }
            };
    }
}

/// Expected outcome of one claim, as listed in a claims file.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub id: String,
    pub expect: Status,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClaimsFile {
    claim: Vec<Expectation>,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("malformed claims file: {0}")]
    Syntax(#[from] toml::de::Error),
    #[error("claims file lists unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("claims file lists `{0}` twice")]
    Duplicate(String),
    #[error("claim `{id}`: {source}")]
    Engine { id: String, source: Error },
}

/// The expectations shipped with the instance.
pub const CLAIMS: &str = include_str!("../fixtures/claims.toml");

pub fn parse_expectations(text: &str) -> Result<Vec<Expectation>, CatalogError> {
    let file: ClaimsFile = toml::from_str(text)?;
    let known = catalog();
    let mut seen = std::collections::BTreeSet::new();
    for e in &file.claim {
        if !known.iter().any(|c| c.id == e.id) {
            return Err(CatalogError::UnknownClaim(e.id.clone()));
        }
        if !seen.insert(e.id.as_str()) {
            return Err(CatalogError::Duplicate(e.id.clone()));
        }
    }
    Ok(file.claim)
}

/// Turns an outcome into a report line.
pub fn record(
    id: &str,
    statement: &str,
    anchor: String,
    expected: Status,
    outcome: Outcome,
    timing_ms: Option<u64>,
) -> ClaimRecord {
    let observed = if outcome.holds { Status::Pass } else { Status::Fail };
    let exploratory = expected == Status::Exploratory;
    ClaimRecord {
        id: id.into(),
        statement: statement.into(),
        anchor,
        expected,
        status: if exploratory { Status::Exploratory } else { observed },
        matches: exploratory || observed == expected,
        witness: outcome.witness,
        observed: exploratory.then_some(observed),
        timing_ms,
    }
}

/// Runs the listed claims in parallel and returns them in catalog order.
pub fn run(
    ctx: &Context,
    expectations: &[Expectation],
    timing: bool,
) -> Result<Vec<(u8, ClaimRecord)>, CatalogError> {
    let defs: Vec<(ClaimDef, Status)> = catalog()
        .into_iter()
        .filter_map(|d| {
            let e = expectations.iter().find(|e| e.id == d.id)?;
            Some((d, e.expect))
        })
        .collect();
    defs.par_iter()
        .map(|(d, expect)| {
            let start = Instant::now();
            let outcome = d.run(ctx).map_err(|source| CatalogError::Engine {
                id: d.id.to_string(),
                source,
            })?;
            let ms = timing.then(|| start.elapsed().as_millis() as u64);
            Ok((d.criterion, record(d.id, d.statement, d.anchor(), *expect, outcome, ms)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_criteria_ordered() {
        let defs = catalog();
        let mut ids: Vec<_> = defs.iter().map(|d| d.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), defs.len());
        assert!(defs.windows(2).all(|w| w[0].criterion <= w[1].criterion));
        assert!(defs.iter().all(|d| (1..=10).contains(&d.criterion)));
    }

    #[test]
    fn shipped_claims_cover_the_catalog() {
        let e = parse_expectations(CLAIMS).unwrap();
        assert_eq!(e.len(), catalog().len());
    }

    #[test]
    fn claims_file_errors() {
        assert!(matches!(
            parse_expectations("[[claim]]\nid = \"nope\"\nexpect = \"pass\"\n"),
            Err(CatalogError::UnknownClaim(_))
        ));
        let twice = "[[claim]]\nid = \"group.engel-6\"\nexpect = \"pass\"\n[[claim]]\nid = \"group.engel-6\"\nexpect = \"pass\"\n";
        assert!(matches!(parse_expectations(twice), Err(CatalogError::Duplicate(_))));
    }

    #[test]
    fn catalog_needs_characteristic_zero() {
        let spec = Presentation::engel_counterexample().with_characteristic(5).unwrap();
        assert!(Context::new(spec, 0).is_err());
    }

    #[test]
    fn exploratory_claims_always_match() {
        let r = record("x", "s", "a".into(), Status::Exploratory, Outcome::pass(), None);
        assert!(r.matches);
        assert_eq!(r.status, Status::Exploratory);
        assert_eq!(r.observed, Some(Status::Pass));
        let r = record("x", "s", "a".into(), Status::Fail, Outcome::pass(), None);
        assert!(!r.matches);
    }
}
