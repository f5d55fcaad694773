use proptest::prelude::*;
use skein_core::diagram::{OrientedTangleWord, Sign, SliceKind};
use skein_core::jaeger::{bmw_monomial, psi, BmwGen, SkeinElement};
use skein_core::schur::oriented_word;
use skein_core::RatFun;

use Sign::{Minus, Plus};
use SliceKind::{Cap, Cup, Vertex4};

fn gen() -> impl Strategy<Value = BmwGen> {
    prop_oneof![Just(BmwGen::E(1)), Just(BmwGen::E(2)), Just(BmwGen::Rho(1)), Just(BmwGen::Rho(2))]
}

fn resolutions(gens: &[BmwGen]) -> Vec<OrientedTangleWord> {
    psi(&bmw_monomial(3, gens).unwrap()).unwrap().iter().map(|(w, _)| w.clone()).collect()
}

/// `(a^{-1} q)^r`
fn prefactor(r: i32) -> RatFun {
    RatFun::mono(-1, 1).pow(r).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rotation_is_additive_under_composition(
        top in prop::collection::vec(gen(), 1..3),
        bottom in prop::collection::vec(gen(), 1..3),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        let (xs, ys) = (resolutions(&top), resolutions(&bottom));
        prop_assume!(!xs.is_empty() && !ys.is_empty());
        let (x, y) = (i.get(&xs), j.get(&ys));
        if let Some(z) = x.compose(y).unwrap() {
            prop_assert_eq!(z.rot(), x.rot() + y.rot());
            prop_assert_eq!(prefactor(z.rot()), &prefactor(x.rot()) * &prefactor(y.rot()));
        }
    }
}

fn pic(slices: &[(SliceKind, usize)], bottom: &[Sign], cups: &[Sign]) -> SkeinElement {
    SkeinElement::diagram(oriented_word(2, slices, bottom, cups).unwrap())
}

#[test]
fn digon_contributions_with_opposite_strands() {
    let l = [Minus, Plus];
    let rho2 = psi(&bmw_monomial(2, &[BmwGen::Rho(1), BmwGen::Rho(1)]).unwrap()).unwrap();
    let mut restricted = SkeinElement::zero();
    for (w, c) in rho2.iter() {
        if w.bottom() == l && w.top() == l {
            restricted.add_term(w.clone(), c.clone());
        }
    }
    // Both mixed cap-cup terms are the same word once vertical strands are dropped.
    let expect = [
        (pic(&[], &l, &[]), RatFun::mono(0, -2)),
        (pic(&[(Cap, 1), (Cup, 1)], &l, &[Minus]), &RatFun::integer(2) * &RatFun::mono(-1, 1)),
        (pic(&[(Vertex4, 1), (Vertex4, 1)], &l, &[]), RatFun::one()),
        (pic(&[(Cap, 1), (Cup, 1), (Cap, 1), (Cup, 1)], &l, &[Minus, Minus]), RatFun::mono(-2, 4)),
    ]
    .iter()
    .fold(SkeinElement::zero(), |acc, (x, c)| acc.add(&x.scale(c)));
    assert_eq!(restricted, expect);
}
