#![allow(dead_code)]

use mvtrop_core::algebra::{LGroup, MvAlgebra, MvValue};
use mvtrop_core::functors::{delta, glue::glue_boolean_perfect};
use mvtrop_core::qpoints::Characteristic;
use proptest::prelude::*;

pub const FRAGMENT_BOUND: u64 = 6;

pub fn shipped_algebras() -> Vec<MvAlgebra> {
    let mut out: Vec<MvAlgebra> = (2..=7).map(|n| MvAlgebra::FiniteChain { n }).collect();
    out.extend([
        MvAlgebra::RationalInterval,
        MvAlgebra::Chang,
        delta(&LGroup::q_subgroup(Characteristic::rationals())),
        delta(&LGroup::q_subgroup(Characteristic::localization(&[2]).unwrap())),
        delta(&LGroup::lex(LGroup::Integers)),
        MvAlgebra::boolean(2).unwrap(),
        MvAlgebra::product(vec![MvAlgebra::FiniteChain { n: 3 }, MvAlgebra::Chang]).unwrap(),
        glue_boolean_perfect(&MvAlgebra::boolean(2).unwrap(), &MvAlgebra::Chang).unwrap(),
    ]);
    out
}

/// An algebra together with `k` elements of its bounded fragment.
pub fn algebra_with(k: usize) -> impl Strategy<Value = (MvAlgebra, Vec<MvValue>)> {
    let algs = shipped_algebras();
    (0..algs.len(), proptest::collection::vec(any::<prop::sample::Index>(), k)).prop_map(move |(i, idx)| {
        let a = algs[i].clone();
        let frag = a.enumerate(FRAGMENT_BOUND);
        let xs = idx.iter().map(|ix| frag[ix.index(frag.len())].clone()).collect();
        (a, xs)
    })
}
