mod common;

use common::{corpus_invariance_failures, determinism_corpus};
use skein_core::invariants::{default_orientation, homfly_with, kauffman_with, Strategy};

#[test]
fn reidemeister_and_mirror_invariance_on_corpus() {
    let fails = corpus_invariance_failures();
    assert!(fails.is_empty(), "{fails:?}");
}

#[test]
fn strategies_give_identical_canonical_values() {
    for d in determinism_corpus() {
        let o = default_orientation(&d);
        assert_eq!(kauffman_with(&d, Strategy::Forward).value, kauffman_with(&d, Strategy::Reverse).value);
        assert_eq!(homfly_with(&o, Strategy::Forward).unwrap().value, homfly_with(&o, Strategy::Reverse).unwrap().value);
    }
}
