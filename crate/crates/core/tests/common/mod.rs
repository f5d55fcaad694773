#![allow(dead_code)]

use skein_core::diagram::{braid_closure, LinkDiagram, OrientedTangleWord, TangleWord};
use skein_core::invariants::moves::{insertion_pieces, instances, r3_insertions, transport, MoveKind};
use skein_core::invariants::{curl_factor, default_orientation, homfly, kauffman};
use skein_core::RatFun;

/// The eight named diagrams.
pub fn corpus() -> Vec<(&'static str, LinkDiagram)> {
    let b = |n: usize, w: &[i32]| braid_closure(n, w).unwrap();
    vec![
        ("unknot", b(1, &[])),
        ("kink+", b(2, &[1])),
        ("kink-", b(2, &[-1])),
        ("hopf+", b(2, &[1, 1])),
        ("hopf-", b(2, &[-1, -1])),
        ("trefoil+", b(2, &[1, 1, 1])),
        ("trefoil-", b(2, &[-1, -1, -1])),
        ("figure-eight", b(3, &[1, -2, 1, -2])),
    ]
}

/// Ten links with at most eight crossings.
pub fn determinism_corpus() -> Vec<LinkDiagram> {
    let b = |n: usize, w: &[i32]| braid_closure(n, w).unwrap();
    vec![
        b(1, &[]),
        b(2, &[1, 1]),
        b(2, &[1, 1, 1]),
        b(2, &[-1, -1, -1]),
        b(3, &[1, -2, 1, -2]),
        b(2, &[1, 1, 1, 1]),
        b(2, &[1, 1, 1, 1, 1]),
        b(3, &[1, 1, 1, 2, -1, 2]),
        b(3, &[1, -2, 1, -2, 1, -2]),
        b(3, &[1, 1, 2, 2, 1, 1, 2, 2]),
    ]
}

fn p(o: &OrientedTangleWord) -> RatFun {
    homfly(o).unwrap().value
}

fn f(w: &TangleWord) -> RatFun {
    kauffman(&LinkDiagram::new(w.clone()).unwrap()).value
}

/// Violations of Reidemeister invariance on one diagram, as readable strings.
pub fn invariance_failures(name: &str, d: &LinkDiagram) -> Vec<String> {
    let mut fails = Vec::new();
    let f0 = kauffman(d).value;
    for m in instances(d.word()) {
        // Only the third move rewrites the base diagram.
        let before = if m.kind == MoveKind::R3 { f(&m.before) } else { f0.clone() };
        let after = f(&m.after);
        let ok = match m.kind {
            MoveKind::R1 => after == &before * &curl_factor().pow(m.curl_writhe).unwrap(),
            _ => after == before,
        };
        if !ok {
            fails.push(format!("{name}: F under {:?}", m.kind));
        }
    }
    let o = default_orientation(d);
    let p0 = p(&o);
    for (kind, at, piece) in insertion_pieces(d.word()) {
        let after = d.word().insert(at, &piece).unwrap();
        match transport(&o, &after, at, piece.len(), 0) {
            Some(t) if p(&t) == p0 => {}
            Some(_) => fails.push(format!("{name}: P under {kind:?}")),
            None => fails.push(format!("{name}: no orientation after {kind:?}")),
        }
    }
    for (at, x, y) in r3_insertions(d.word()) {
        let wx = d.word().insert(at, &x).unwrap();
        let wy = d.word().insert(at, &y).unwrap();
        let comps = LinkDiagram::new(wx.clone()).unwrap().components();
        let ox = OrientedTangleWord::from_strand_choice(&wx, &vec![true; comps]);
        match transport(&ox, &wy, at, y.len(), x.len()) {
            Some(oy) if p(&ox) == p(&oy) => {}
            Some(_) => fails.push(format!("{name}: P under R3")),
            None => fails.push(format!("{name}: no orientation for R3")),
        }
    }
    let pm = p(&default_orientation(&d.mirror()));
    if pm != p0.invert_vars() {
        fails.push(format!("{name}: mirror symmetry"));
    }
    fails
}

/// [`invariance_failures`] over the whole corpus, one thread per diagram.
pub fn corpus_invariance_failures() -> Vec<String> {
    let c = corpus();
    std::thread::scope(|s| {
        let hs: Vec<_> = c.iter().map(|(n, d)| s.spawn(move || invariance_failures(n, d))).collect();
        hs.into_iter().flat_map(|h| h.join().unwrap()).collect()
    })
}
