use std::sync::OnceLock;

use engel_core::expr::parse_poly;
use engel_core::freealg::word_divides;
use engel_core::group::{circle, hull_inv, hull_mul, is_one, quasi_inverse, UnitalElement};
use engel_core::{
    AlgebraElement, Associative, FreeAlgebra, FreePolynomial, Presentation, PrimeField, QuotientAlgebra,
    Rationals, Ring, Word,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn b() -> &'static QuotientAlgebra<Rationals> {
    static B: OnceLock<QuotientAlgebra<Rationals>> = OnceLock::new();
    B.get_or_init(|| QuotientAlgebra::build(&Presentation::engel_counterexample(), Rationals).unwrap())
}

fn b7() -> &'static QuotientAlgebra<PrimeField> {
    static B: OnceLock<QuotientAlgebra<PrimeField>> = OnceLock::new();
    B.get_or_init(|| {
        let spec = Presentation::engel_counterexample().with_characteristic(7).unwrap();
        QuotientAlgebra::build(&spec, PrimeField::new(7).unwrap()).unwrap()
    })
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..2, 1..=9).prop_map(|l| Word::from_indices(&l).unwrap())
}

fn free_poly() -> impl Strategy<Value = Vec<(Word, i64)>> {
    prop::collection::vec((word(), -9i64..=9), 0..6)
}

fn to_free(terms: &[(Word, i64)]) -> FreePolynomial<BigRational> {
    let a = FreeAlgebra::new(Rationals, &["x", "y"]);
    a.from_terms(terms.iter().map(|(w, c)| (w.clone(), q(*c, 1))))
}

fn element() -> impl Strategy<Value = AlgebraElement<BigRational>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -5i64..=5], 26)
        .prop_map(|c| AlgebraElement::from_coords(c.into_iter().map(|n| q(n, 1)).collect()))
}

fn element_mod7() -> impl Strategy<Value = AlgebraElement<u64>> {
    prop::collection::vec(0u64..7, 26).prop_map(AlgebraElement::from_coords)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ring_axioms(a in rational(), b in rational(), c in rational()) {
        let r = Rationals;
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
        if !r.is_zero(&a) {
            prop_assert!(r.is_one(&r.mul(&a, &r.inv(&a).unwrap())));
        }
    }

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 101, 65521]), a: u64, b: u64, c: u64) {
        let f = PrimeField::new(p).unwrap();
        let (a, b, c) = (a % p, b % p, c % p);
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if a != 0 {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        prop_assert!(f.is_zero(&f.from_int(p as i64)));
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in rational(), b in rational()) {
        let f = PrimeField::new(7).unwrap();
        let r = Rationals;
        let red = |x: &BigRational| f.reduce_rational(x);
        if let (Ok(ra), Ok(rb)) = (red(&a), red(&b)) {
            prop_assert_eq!(red(&r.add(&a, &b)).unwrap(), f.add(&ra, &rb));
            prop_assert_eq!(red(&r.mul(&a, &b)).unwrap(), f.mul(&ra, &rb));
        }
    }

    #[test]
    fn normal_form_is_linear_and_multiplicative(p in free_poly(), s in free_poly(), k in -4i64..=4) {
        let alg = b();
        let r = alg.arith();
        let free = FreeAlgebra::new(Rationals, &["x", "y"]);
        let (p, s) = (to_free(&p), to_free(&s));
        let np = alg.normal_form(&p);
        let ns = alg.normal_form(&s);
        prop_assert_eq!(alg.normal_form(&free.mul(&p, &s)), r.mul(&np, &ns));
        prop_assert_eq!(alg.normal_form(&free.add(&p, &s)), r.add(&np, &ns));
        prop_assert_eq!(alg.normal_form(&free.scale(&p, &q(k, 1))), r.scale_int(&np, k));
    }

    #[test]
    fn normal_form_is_idempotent(p in free_poly()) {
        let alg = b();
        let free = FreeAlgebra::new(Rationals, &["x", "y"]);
        let n = alg.normal_form(&to_free(&p));
        // lift the normal form back along the basis words
        let lifted = free.from_terms(
            alg.basis().iter().zip(n.coords()).map(|(w, c)| (w.clone(), c.clone())),
        );
        prop_assert_eq!(alg.normal_form(&lifted), n);
    }

    #[test]
    fn multiplication_respects_the_grading(i in 0usize..26, j in 0usize..26) {
        let alg = b();
        let d = alg.degree(i) + alg.degree(j);
        for (k, _) in alg.product(i, j) {
            prop_assert_eq!(alg.degree(*k), d);
        }
        if d >= 8 {
            prop_assert!(alg.product(i, j).is_empty());
        }
    }

    #[test]
    fn algebra_is_associative(u in element(), v in element(), w in element()) {
        let r = b().arith();
        prop_assert_eq!(r.mul(&r.mul(&u, &v), &w), r.mul(&u, &r.mul(&v, &w)));
    }

    #[test]
    fn circle_group_axioms(u in element(), v in element(), w in element()) {
        let r = b().arith();
        prop_assert_eq!(circle(&r, &circle(&r, &u, &v), &w), circle(&r, &u, &circle(&r, &v, &w)));
        prop_assert_eq!(circle(&r, &u, &r.zero()), u.clone());
        let qi = quasi_inverse(&r, &u);
        prop_assert!(r.is_zero(&circle(&r, &u, &qi)));
        prop_assert!(r.is_zero(&circle(&r, &qi, &u)));
    }

    #[test]
    fn hull_inverse_mod_7(u in element_mod7(), c in 1u64..7) {
        let r = b7().arith();
        let g = UnitalElement { constant: c, part: u };
        let gi = hull_inv(&r, &g).unwrap();
        prop_assert!(is_one(&r, &hull_mul(&r, &g, &gi)));
        prop_assert!(is_one(&r, &hull_mul(&r, &gi, &g)));
    }

    #[test]
    fn engel_bracket_is_linear_in_first_argument(u in element(), w in element(), v in element(), n in 1usize..7) {
        let r = b().arith();
        prop_assert_eq!(
            r.engel_bracket(&r.add(&u, &w), &v, n),
            r.add(&r.engel_bracket(&u, &v, n), &r.engel_bracket(&w, &v, n))
        );
    }

    #[test]
    fn parse_render_round_trip(p in free_poly(), den in 1i64..=6) {
        let free = FreeAlgebra::new(Rationals, &["x", "y"]);
        let p = free.scale(&to_free(&p), &q(1, den));
        let text = free.render(&p);
        prop_assert_eq!(parse_poly(&text, &free).unwrap(), p);
    }

    #[test]
    fn divisibility_is_a_factor_test(m in word(), left in prop::collection::vec(0usize..2, 0..4), right in prop::collection::vec(0usize..2, 0..4)) {
        let mut n: Vec<usize> = left.clone();
        n.extend(m.letters().iter().map(|&l| l as usize));
        n.extend(right.iter().copied());
        let n = Word::from_indices(&n).unwrap();
        prop_assert!(word_divides(m.letters(), n.letters()));
        prop_assert!(m.divides(&n));
        prop_assert_eq!(word_divides(n.letters(), m.letters()), n == m);
    }
}
