use std::sync::Arc;

use cleft_core::algebra::hom::RingHom;
use cleft_core::algebra::linalg::{det, det_cofactor};
use cleft_core::algebra::ring::DEFAULT_KMAX;
use cleft_core::catalog::{lambda_base, make_scheme, LambdaMode, SchemeTag};
use cleft_core::{Frac, LocalizedRing, Monomial, Poly, PrimeField, F3};
use proptest::prelude::*;

type Terms = Vec<(u32, u32, i64)>;

fn poly2(terms: &Terms) -> Poly<F3> {
    Poly::from_terms(2, terms.iter().map(|&(a, b, c)| (Monomial::from_exponents(vec![a, b]), F3::from_i64(c))))
}

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((0u32..3, 0u32..3, -1i64..=1), 0..5)
}

fn frac_parts() -> impl Strategy<Value = (Terms, u32, u32)> {
    (terms(), 0u32..3, 0u32..3)
}

/// `F_3[X, Y][1/(X+1), 1/Y]`
fn base() -> Arc<LocalizedRing<F3>> {
    let r = LocalizedRing::<F3>::base(vec!["X".into(), "Y".into()], vec![]).unwrap();
    let dens = vec![r.parse_poly("X + 1").unwrap(), r.parse_poly("Y").unwrap()];
    LocalizedRing::base(vec!["X".into(), "Y".into()], dens).unwrap()
}

fn frac(r: &LocalizedRing<F3>, (t, e0, e1): &(Terms, u32, u32)) -> Frac<F3> {
    r.normalize(r.frac(poly2(t), vec![*e0, *e1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn localized_ring_axioms(a in frac_parts(), b in frac_parts(), c in frac_parts()) {
        let r = base();
        let (a, b, c) = (frac(&r, &a), frac(&r, &b), frac(&r, &c));
        prop_assert!(r.equal(&r.add(&a, &b), &r.add(&b, &a)));
        prop_assert!(r.equal(&r.mul(&a, &b), &r.mul(&b, &a)));
        prop_assert!(r.equal(&r.mul(&r.mul(&a, &b), &c), &r.mul(&a, &r.mul(&b, &c))));
        prop_assert!(r.equal(&r.mul(&a, &r.add(&b, &c)), &r.add(&r.mul(&a, &b), &r.mul(&a, &c))));
        prop_assert!(r.is_zero(&r.sub(&a, &a)));
        prop_assert!(r.equal(&r.mul(&a, &r.one()), &a));
    }

    #[test]
    fn frobenius_is_additive(a in frac_parts(), b in frac_parts()) {
        let r = base();
        let (a, b) = (frac(&r, &a), frac(&r, &b));
        prop_assert!(r.equal(&r.pow(&r.add(&a, &b), 3), &r.add(&r.pow(&a, 3), &r.pow(&b, 3))));
    }

    #[test]
    fn frobenius_of_polynomial_is_power(t in terms()) {
        let f = poly2(&t);
        prop_assert_eq!(f.frobenius(3), f.pow(3));
    }

    #[test]
    fn exact_divide_inverts_multiplication(f in terms(), g in terms()) {
        let (f, g) = (poly2(&f), poly2(&g));
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn equality_ignores_representation(a in frac_parts(), k in 0u32..3) {
        let r = base();
        let x = frac(&r, &a);
        // multiply numerator and denominator by (X+1)^k
        let d = r.denominators()[0].pow(k);
        let y = r.frac(x.num.mul(&d), vec![x.den[0] + k, x.den[1]]);
        prop_assert!(r.equal(&x, &y));
    }

    #[test]
    fn units_invert(a in frac_parts(), e0 in 0u32..3, e1 in 0u32..3) {
        let r = base();
        let x = frac(&r, &a);
        // a product of designated denominators over a power of them is a unit
        let u = r.frac(r.denominators()[0].pow(e0).mul(&r.denominators()[1].pow(e1)), vec![a.1, a.2]);
        let inv = r.invert(&u, DEFAULT_KMAX).unwrap();
        prop_assert!(r.is_one(&r.mul(&u, &inv)));
        prop_assert!(r.equal(&r.mul(&r.mul(&x, &u), &inv), &x));
    }

    #[test]
    fn hom_respects_operations(a in frac_parts(), b in frac_parts()) {
        let r = base();
        // Y ↦ Y^2 keeps both denominators units
        let h = RingHom::over_base(r.clone(), r.clone(), vec![]).unwrap();
        let s = RingHom::new(r.clone(), r.clone(), vec![Some(r.var("X")), Some(r.pow(&r.var("Y"), 2))]).unwrap();
        let (a, b) = (frac(&r, &a), frac(&r, &b));
        for f in [&h, &s] {
            prop_assert!(r.equal(&f.apply(&r.mul(&a, &b)).unwrap(), &r.mul(&f.apply(&a).unwrap(), &f.apply(&b).unwrap())));
            prop_assert!(r.equal(&f.apply(&r.add(&a, &b)).unwrap(), &r.add(&f.apply(&a).unwrap(), &f.apply(&b).unwrap())));
        }
    }

    #[test]
    fn nilpotent_perturbations_of_one_invert(t in terms(), k in 1u32..3) {
        let (base, l) = lambda_base::<F3>(LambdaMode::Symbolic, false).unwrap();
        let g = make_scheme(SchemeTag::GammaLambda, 1, &base, &l).unwrap();
        let c = g.carrier();
        let tv = c.var(g.generator());
        // 1 + T^k·f(L, L) is a unit since T^3 = 0
        let f = poly2(&t);
        let fl = Poly::from_terms(1, f.terms().map(|(m, a)| (Monomial::from_exponents(vec![m.exponents()[0] + m.exponents()[1]]), *a)));
        let x = c.add(&c.one(), &c.mul(&c.pow(&tv, k), &c.from_base(&base.poly(fl))));
        let inv = c.invert(&x, DEFAULT_KMAX).unwrap();
        prop_assert!(c.is_one(&c.mul(&x, &inv)));
    }

    #[test]
    fn determinant_matches_cofactor_expansion(entries in prop::collection::vec(terms(), 9)) {
        let m: Vec<Vec<Poly<F3>>> = entries.chunks(3).map(|row| row.iter().map(poly2).collect()).collect();
        prop_assert_eq!(det(&m, 2), det_cofactor(&m, 2));
    }

    #[test]
    fn text_form_parses_back(a in frac_parts()) {
        let r = base();
        let x = frac(&r, &a);
        prop_assert!(r.equal(&r.parse(&r.to_text(&x)).unwrap(), &x));
    }
}
