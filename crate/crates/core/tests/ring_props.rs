use proptest::prelude::*;
use skein_core::ring::{bracket, delta, quantum_int, BiLaurent, LaurentQ, RatFun};

fn poly() -> impl Strategy<Value = BiLaurent> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -3i32..=3), 0..4).prop_map(|ts| {
        ts.into_iter().fold(BiLaurent::zero(), |acc, (c, i, j)| &acc + &(&BiLaurent::integer(c) * &BiLaurent::mono(i, j)))
    })
}

fn nonzero_poly() -> impl Strategy<Value = BiLaurent> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

/// `[m]` as an explicit sum of powers of `q`.
fn quantum_int_oracle(m: i32) -> LaurentQ {
    let s = (0..m.abs()).fold(LaurentQ::zero(), |acc, j| &acc + &LaurentQ::q_pow(m.abs() - 1 - 2 * j));
    if m < 0 {
        -&s
    } else {
        s
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in ratfun(), y in ratfun(), z in ratfun()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn division_inverts_multiplication(x in ratfun(), y in ratfun()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x.clone());
        prop_assert!((&y * &y.inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_form_ignores_common_factors(n in poly(), d in nonzero_poly(), f in nonzero_poly()) {
        let a = RatFun::new(&n * &f, &d * &f).unwrap();
        let b = RatFun::new(n, d).unwrap();
        prop_assert_eq!(a.num(), b.num());
        prop_assert_eq!(a.den(), b.den());
    }

    #[test]
    fn specialization_is_a_ring_map(x in poly(), y in poly(), n in 2i32..=5) {
        let (rx, ry) = (RatFun::from_bilaurent(x), RatFun::from_bilaurent(y));
        let s = |r: &RatFun| r.specialize_a(n).unwrap();
        prop_assert_eq!(s(&(&rx + &ry)), &s(&rx) + &s(&ry));
        prop_assert_eq!(s(&(&rx * &ry)), &s(&rx) * &s(&ry));
    }

    #[test]
    fn bracket_specializes_to_quantum_integer(n in -3i32..=3, k in -6i32..=6, big_n in 2i32..=5) {
        prop_assert_eq!(bracket(n, k).specialize_a(big_n).unwrap(), quantum_int_oracle(n * big_n - k));
    }

    #[test]
    fn invert_vars_is_an_involutive_ring_map(x in ratfun(), y in ratfun()) {
        prop_assert_eq!(x.invert_vars().invert_vars(), x.clone());
        prop_assert_eq!((&x * &y).invert_vars(), &x.invert_vars() * &y.invert_vars());
    }
}

#[test]
fn quantum_integers_match_oracle() {
    for m in -8..=8 {
        assert_eq!(quantum_int(m), quantum_int_oracle(m), "m = {m}");
    }
}

#[test]
fn delta_specializes_to_loop_value() {
    for big_n in 2..=5 {
        let expect = &quantum_int_oracle(2 * big_n - 1) + &LaurentQ::one();
        assert_eq!(delta().specialize_a(big_n).unwrap(), expect);
    }
}
