//! Shared fixtures for the benchmarks.

use skein_core::diagram::{braid_closure, LinkDiagram};
use skein_core::ring::{bracket, delta};
use skein_core::RatFun;

/// Named braid closures, smallest first.
pub fn links() -> Vec<(&'static str, LinkDiagram)> {
    let b = |n: usize, w: &[i32]| braid_closure(n, w).expect("fixture braid is valid");
    vec![
        ("trefoil", b(2, &[1, 1, 1])),
        ("figure-eight", b(3, &[1, -2, 1, -2])),
        ("torus-2-5", b(2, &[1, 1, 1, 1, 1])),
        ("three-strand-8", b(3, &[1, 1, 2, 2, 1, 1, 2, 2])),
    ]
}

/// Rational functions with distinct denominators, typical of skein recursions.
pub fn rational_terms() -> Vec<RatFun> {
    (1..=6).map(|k| &bracket(k, -k) * &delta().pow(k % 3).expect("nonzero base")).collect()
}
