use proptest::prelude::*;
use sln_core::askey_wilson::{aw4_table, AwElement, StructTable};
use sln_core::exactnum::{Laurent, LinComb, Param, ParamPoly, Rational, RationalFn, Ring, Var};
use sln_core::loop_algebra::{LoopAlgebra, LoopElement, Theta};
use sln_core::onsager::{OnsagerAlgebra, OnsagerElement};

fn coeff() -> impl Strategy<Value = ParamPoly> {
    (-4i64..=4, 1i64..=3, 0usize..3).prop_map(|(n, d, p)| {
        let r = ParamPoly::frac(n, d);
        match p {
            0 => r,
            1 => r.times(&ParamPoly::param(Param::Alpha)),
            _ => r.plus(&ParamPoly::param(Param::Mu(1))),
        }
    })
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((coeff(), -3i32..=3, -3i32..=3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Laurent::zero(), |acc, (c, a, b)| {
            acc.plus(&Laurent::scalar(c).times(&Laurent::var_pow(Var::X, a)).times(&Laurent::var_pow(Var::Y, b)))
        })
    })
}

fn nonzero_laurent() -> impl Strategy<Value = Laurent> {
    laurent().prop_filter("nonzero", |l| !l.is_zero())
}

fn combination<S: Clone + std::fmt::Debug>(basis: Vec<S>) -> impl Strategy<Value = Vec<(S, i64)>> {
    let len = basis.len();
    prop::collection::vec((0..len, -3i64..=3), 1..4)
        .prop_map(move |picks| picks.into_iter().map(|(i, c)| (basis[i].clone(), c)).collect())
}

fn loop_element(alg: LoopAlgebra, levels: i32) -> impl Strategy<Value = LoopElement> {
    combination(alg.basis(levels)).prop_map(|v| LinComb::from_terms(v.into_iter().map(|(s, c)| (s, ParamPoly::int(c)))))
}

fn onsager_element(ons: OnsagerAlgebra, levels: i32) -> impl Strategy<Value = OnsagerElement> {
    combination(ons.basis(levels)).prop_map(|v| LinComb::from_terms(v.into_iter().map(|(s, c)| (s, ParamPoly::int(c)))))
}

fn aw_element(t: StructTable) -> impl Strategy<Value = AwElement> {
    combination((0..t.dim()).collect()).prop_map(move |v| {
        let mut out = AwElement::zero();
        for (i, c) in v {
            out.add_scaled(&t.elem(i), &ParamPoly::int(c));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
        prop_assert_eq!(a.times(&Laurent::one()), a.clone());
    }

    #[test]
    fn inversion_is_an_involution(a in laurent()) {
        let inv = Laurent::var_pow(Var::X, -1);
        let twice = a.substitute(Var::X, &inv).unwrap().substitute(Var::X, &inv).unwrap();
        prop_assert_eq!(twice, a.clone());
        prop_assert_eq!(a.rename(Var::X, Var::X1).rename(Var::X1, Var::X), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!(a.times(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn rational_function_equality(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent(), d in nonzero_laurent()) {
        let f = RationalFn::new(a.clone(), b.clone()).unwrap();
        let g = RationalFn::new(a.times(&c), b.times(&c)).unwrap();
        prop_assert_eq!(&f, &g);
        let h = RationalFn::new(c.clone(), d.clone()).unwrap();
        prop_assert_eq!(f.add(&h), h.add(&f));
        prop_assert_eq!(f.mul(&h).sub(&h.mul(&f)), RationalFn::zero());
        prop_assert!(f.sub(&g).is_zero());
    }

    #[test]
    fn rational_arithmetic(n1 in -50i64..50, d1 in 1i64..20, n2 in -50i64..50, d2 in 1i64..20) {
        let (a, b) = (Rational::new(n1, d1), Rational::new(n2, d2));
        prop_assert_eq!(a.plus(&b).minus(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.times(&b).times(&b.recip()), a);
        }
    }

    #[test]
    fn param_poly_display_round_trips(c in coeff(), d in coeff()) {
        let p = c.times(&d).plus(&c);
        prop_assert_eq!(ParamPoly::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn loop_algebra_is_a_lie_algebra(
        a in loop_element(LoopAlgebra::new(3).unwrap(), 2),
        b in loop_element(LoopAlgebra::new(3).unwrap(), 2),
        c in loop_element(LoopAlgebra::new(3).unwrap(), 2),
    ) {
        let alg = LoopAlgebra::new(3).unwrap();
        prop_assert!(alg.bracket(&a, &b).plus(&alg.bracket(&b, &a)).is_zero());
        prop_assert!(alg.jacobi_residual(&a, &b, &c).is_zero());
        let t = |v: &LoopElement| alg.apply_theta(&Theta::Theta1, v).unwrap();
        prop_assert_eq!(t(&alg.bracket(&a, &b)), alg.bracket(&t(&a), &t(&b)));
    }

    #[test]
    fn onsager_embedding_is_a_morphism(
        a in onsager_element(OnsagerAlgebra::new(4).unwrap(), 5),
        b in onsager_element(OnsagerAlgebra::new(4).unwrap(), 5),
    ) {
        let ons = OnsagerAlgebra::new(4).unwrap();
        let alg = ons.loop_algebra();
        prop_assert_eq!(ons.embed(&ons.bracket(&a, &b)), alg.bracket(&ons.embed(&a), &ons.embed(&b)));
    }

    #[test]
    fn aw_tables_satisfy_jacobi(a in aw_element(aw4_table()), b in aw_element(aw4_table()), c in aw_element(aw4_table())) {
        let t = aw4_table();
        let br = |x: &AwElement, y: &AwElement| t.bracket(x, y);
        let j = br(&a, &br(&b, &c)).plus(&br(&b, &br(&c, &a))).plus(&br(&c, &br(&a, &b)));
        prop_assert!(j.is_zero());
        prop_assert!(br(&a, &b).plus(&br(&b, &a)).is_zero());
    }
}
