use mvtrop_core::algebra::{GroupElem, LGroup, MvAlgebra, MvValue, TropValue};
use mvtrop_core::functors::{
    check_closure, check_duality, delta, delta_inverse, detrop, theta, theta_perfect, theta_perfect_inverse, trop,
};
use mvtrop_core::qpoints::Characteristic;
use mvtrop_core::Rational;
use proptest::prelude::*;

fn groups() -> Vec<LGroup> {
    vec![
        LGroup::Integers,
        LGroup::q_subgroup(Characteristic::rationals()),
        LGroup::q_subgroup(Characteristic::localization(&[2]).unwrap()),
        LGroup::q_subgroup(Characteristic::localization(&[2, 3]).unwrap()),
        LGroup::lex(LGroup::Integers),
    ]
}

fn group_with(k: usize) -> impl Strategy<Value = (LGroup, Vec<GroupElem>)> {
    let gs = groups();
    (0..gs.len(), proptest::collection::vec(any::<prop::sample::Index>(), k)).prop_map(move |(i, idx)| {
        let g = gs[i].clone();
        let frag = g.enumerate(8);
        let xs = idx.iter().map(|ix| frag[ix.index(frag.len())].clone()).collect();
        (g, xs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn tropical_semifield_laws((g, v) in group_with(3)) {
        let s = trop(&g);
        let [x, y, z] = [0, 1, 2].map(|i| TropValue::Finite(v[i].clone()));
        prop_assert_eq!(s.plus(&x, &x), x.clone());
        prop_assert_eq!(s.times(&x, &s.inverse(&x).unwrap()), s.one());
        prop_assert_eq!(s.times(&x, &s.plus(&y, &z)), s.plus(&s.times(&x, &y), &s.times(&x, &z)));
        prop_assert_eq!(s.times(&x, &s.zero()), s.zero());
        prop_assert_eq!(s.plus(&x, &s.zero()), x.clone());
        prop_assert!(s.inverse(&s.zero()).is_err());
    }

    #[test]
    fn group_carriers_are_closed((g, v) in group_with(2)) {
        let (x, y) = (&v[0], &v[1]);
        for r in [g.add(x, y), g.neg(x), g.meet(x, y), g.join(x, y), g.sub(x, y)] {
            prop_assert!(g.contains(&r), "{} not in {}", r, g);
        }
        prop_assert_eq!(g.sub(&g.add(x, y), y), x.clone());
    }
}

#[test]
fn functor_round_trips() {
    for g in groups() {
        assert_eq!(detrop(&trop(&g)), g);
        assert_eq!(delta_inverse(&delta(&g)).unwrap(), g);
    }
    for p in [MvAlgebra::Chang, delta(&LGroup::q_subgroup(Characteristic::rationals()))] {
        assert_eq!(theta_perfect_inverse(&theta_perfect(&p).unwrap()), p);
    }
}

#[test]
fn theta_of_finite_vc_algebras_is_a_bisemiring() {
    for k in 1..=4 {
        let a = MvAlgebra::boolean(k).unwrap();
        let r = theta(&a).check_axioms(0);
        assert!(r.is_valid(), "{a}: {r}");
        assert_eq!(theta(&a).elements(0).len(), 1 << k);
    }
}

#[test]
fn theta_is_an_isomorphism_invariant() {
    let c2 = MvAlgebra::FiniteChain { n: 2 };
    let c3 = MvAlgebra::FiniteChain { n: 3 };
    let a = MvAlgebra::product(vec![c2.clone(), c3.clone()]).unwrap();
    let b = MvAlgebra::product(vec![c3, c2]).unwrap();
    let swap = |x: &MvValue| match x {
        MvValue::Tuple(xs) => MvValue::Tuple(vec![xs[1].clone(), xs[0].clone()]),
        _ => unreachable!(),
    };
    let ta = theta(&a).elements(0);
    let tb = theta(&b).elements(0);
    assert_eq!(ta.len(), tb.len());
    assert!(ta.iter().all(|x| tb.contains(&swap(x))));
}

#[test]
fn theta_of_the_rational_interval_has_the_closed_form() {
    let a = MvAlgebra::RationalInterval;
    let t = theta(&a);
    for d in 1..=100i64 {
        for n in 0..=d {
            let q = Rational::new(n, d);
            let expected = q <= Rational::new(2, 3) || q == Rational::one();
            assert_eq!(t.contains(&MvValue::Scalar(q.clone())), expected, "{q}");
        }
    }
}

#[test]
fn duality_and_closure_on_chang_fragments() {
    assert!(check_duality(&MvAlgebra::Chang, 25).is_valid());
    assert!(check_closure(&MvAlgebra::Chang, 15).is_valid());
}
