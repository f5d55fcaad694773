//! The Jaeger homomorphism from BMW diagrams to oriented skein diagrams.

use super::element::{BmwElement, SkeinElement};
use crate::diagram::{GenSlice, OrientationString, OrientedTangleWord, Sign, SliceKind, TangleWord};
use crate::error::{Result, SkeinError};
use crate::ring::RatFun;

use Sign::{Minus, Plus};
use SliceKind::{Cap, Cup, Vertex4};

/// A BMW algebra generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BmwGen {
    /// Cap then cup at `i`.
    E(usize),
    /// Four-valent vertex at `i`.
    Rho(usize),
}

impl BmwGen {
    fn slices(self) -> Vec<GenSlice> {
        match self {
            BmwGen::E(i) => vec![GenSlice::new(Cap, i), GenSlice::new(Cup, i)],
            BmwGen::Rho(i) => vec![GenSlice::new(Vertex4, i)],
        }
    }
}

/// The word of the product `g_1 g_2 ... g_k` (so `g_k` is at the bottom).
pub fn bmw_product(n: usize, gens: &[BmwGen]) -> Result<TangleWord> {
    let slices: Vec<GenSlice> = gens.iter().rev().flat_map(|g| g.slices()).collect();
    TangleWord::new(n, slices)
}

pub fn bmw_monomial(n: usize, gens: &[BmwGen]) -> Result<BmwElement> {
    Ok(BmwElement::diagram(bmw_product(n, gens)?))
}

fn aq(k: i32) -> RatFun {
    RatFun::mono(-k, k)
}

fn pair(x: Sign, y: Sign) -> OrientationString {
    vec![x, y]
}

fn cupcap(bottom: OrientationString, top: OrientationString) -> OrientedTangleWord {
    let w = TangleWord { n_bottom: 2, n_top: 2, slices: vec![GenSlice::new(Cap, 1), GenSlice::new(Cup, 1)] };
    OrientedTangleWord::new(w, vec![bottom, vec![], top]).expect("oriented cupcap")
}

fn vertical(o: OrientationString) -> OrientedTangleWord {
    OrientedTangleWord::new(TangleWord::identity(o.len()), vec![o]).expect("oriented strands")
}

fn vertex(bottom: OrientationString) -> OrientedTangleWord {
    let top = vec![bottom[1], bottom[0]];
    let w = TangleWord { n_bottom: 2, n_top: 2, slices: vec![GenSlice::new(Vertex4, 1)] };
    OrientedTangleWord::new(w, vec![bottom, top]).expect("oriented vertex")
}

/// Cup-cap with rotation `+1`.
pub fn pic_lr() -> OrientedTangleWord {
    cupcap(pair(Minus, Plus), pair(Minus, Plus))
}

/// Cup-cap with rotation `-1`.
pub fn pic_rl() -> OrientedTangleWord {
    cupcap(pair(Plus, Minus), pair(Plus, Minus))
}

pub fn pic_downup() -> OrientedTangleWord {
    vertical(pair(Minus, Plus))
}

pub fn pic_updown() -> OrientedTangleWord {
    vertical(pair(Plus, Minus))
}

/// Oriented vertex with the given bottom pair: `crossu (+,+)`, `crossd (-,-)`,
/// `crossl (-,+)`, `crossr (+,-)`.
pub fn pic_vertex(x: Sign, y: Sign) -> OrientedTangleWord {
    vertex(pair(x, y))
}

/// Generator table images on the strands the generator touches.
pub fn psi_generator(g: Option<BmwGen>) -> SkeinElement {
    let mut out = SkeinElement::zero();
    match g {
        None => {
            out.add_term(vertical(vec![Plus]), RatFun::one());
            out.add_term(vertical(vec![Minus]), RatFun::one());
        }
        Some(BmwGen::E(_)) => {
            out.add_term(cupcap(pair(Minus, Plus), pair(Plus, Minus)), RatFun::one());
            out.add_term(cupcap(pair(Plus, Minus), pair(Minus, Plus)), RatFun::one());
            out.add_term(pic_lr(), aq(1));
            out.add_term(pic_rl(), aq(-1));
        }
        Some(BmwGen::Rho(_)) => {
            let (qi, q) = (RatFun::mono(0, -1), RatFun::mono(0, 1));
            out.add_term(pic_rl(), &qi * &aq(-1));
            out.add_term(pic_downup(), qi);
            out.add_term(pic_lr(), &q * &aq(1));
            out.add_term(pic_updown(), q);
            for (x, y) in [(Plus, Plus), (Minus, Minus), (Minus, Plus), (Plus, Minus)] {
                out.add_term(pic_vertex(x, y), RatFun::one());
            }
        }
    }
    out
}

fn all_strings(n: usize) -> Vec<OrientationString> {
    (0..1u32 << n)
        .map(|m| (0..n).map(|i| if m >> i & 1 == 0 { Plus } else { Minus }).collect())
        .collect()
}

/// `psi(1_n)`: the sum of all orientation idempotents.
pub fn psi_identity(n: usize) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for s in all_strings(n) {
        out.add_term(vertical(s), RatFun::one());
    }
    out
}

/// A two-strand local picture placed at strands `i, i+1` of `n`, summed over
/// orientations of the other strands.
fn embed(local: &SkeinElement, n: usize, i: usize) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (d, c) in local.iter() {
        for left in all_strings(i - 1) {
            for right in all_strings(n - i - 1) {
                let slices =
                    d.word().slices.iter().map(|s| GenSlice::new(s.kind, s.pos + i - 1)).collect();
                let levels = d
                    .levels()
                    .iter()
                    .map(|l| [left.clone(), l.clone(), right.clone()].concat())
                    .collect();
                let w = TangleWord::new(n, slices).expect("embedded word");
                out.add_term(OrientedTangleWord::new(w, levels).expect("embedded orientation"), c.clone());
            }
        }
    }
    out
}

/// Generators of a BMW word, bottom first (the reverse of [`bmw_product`] order).
pub fn bmw_factors(w: &TangleWord) -> Result<Vec<BmwGen>> {
    let mut out = Vec::new();
    let mut t = 0;
    while t < w.len() {
        let s = w.slices[t];
        match s.kind {
            Vertex4 => {
                out.push(BmwGen::Rho(s.pos));
                t += 1;
            }
            Cap if w.slices.get(t + 1) == Some(&GenSlice::new(Cup, s.pos)) => {
                out.push(BmwGen::E(s.pos));
                t += 2;
            }
            _ => return Err(SkeinError::Unsupported(format!("slice {t} is not part of a generator"))),
        }
    }
    Ok(out)
}

/// `psi` through the generator table and skein multiplication.
pub fn psi_table(w: &TangleWord) -> Result<SkeinElement> {
    if w.n_bottom != w.n_top {
        return Err(SkeinError::WidthMismatch { top: w.n_top, bottom: w.n_bottom });
    }
    let n = w.n_bottom;
    let mut acc = psi_identity(n);
    for g in bmw_factors(w)? {
        let i = match g {
            BmwGen::E(i) | BmwGen::Rho(i) => i,
        };
        acc = embed(&psi_generator(Some(g)), n, i).mul(&acc)?;
    }
    Ok(acc)
}

/// `psi` as a sum over vertex resolutions weighted by `(a^{-1} q)^rot` and the
/// local weights.
pub fn psi_resolve(w: &TangleWord) -> Result<SkeinElement> {
    w.validate()?;
    let mut out = SkeinElement::zero();
    for bottom in all_strings(w.n_bottom) {
        let mut st = Walk { slices: Vec::new(), levels: vec![bottom], qpow: 0 };
        walk(w, 0, &mut st, &mut out);
    }
    Ok(out)
}

struct Walk {
    slices: Vec<GenSlice>,
    levels: Vec<OrientationString>,
    qpow: i32,
}

fn walk(w: &TangleWord, t: usize, st: &mut Walk, out: &mut SkeinElement) {
    if t == w.len() {
        let word = TangleWord { n_bottom: w.n_bottom, n_top: w.n_top, slices: st.slices.clone() };
        let d = OrientedTangleWord::new(word, st.levels.clone()).expect("resolution is consistent");
        let c = &aq(d.rot()) * &RatFun::mono(0, st.qpow);
        out.add_term(d, c);
        return;
    }
    let g = w.slices[t];
    let k = g.pos - 1;
    let cur = st.levels.last().unwrap().clone();
    let mut go = |st: &mut Walk, add: Vec<(GenSlice, OrientationString)>, dq: i32| {
        let n = add.len();
        for (s, l) in add {
            st.slices.push(s);
            st.levels.push(l);
        }
        st.qpow += dq;
        walk(w, t + 1, st, out);
        st.qpow -= dq;
        for _ in 0..n {
            st.slices.pop();
            st.levels.pop();
        }
    };
    match g.kind {
        Cup => {
            for x in [Plus, Minus] {
                let mut l = cur.clone();
                l.splice(k..k, [x, x.flip()]);
                go(st, vec![(g, l)], 0);
            }
        }
        Cap => {
            if cur[k] != cur[k + 1] {
                let mut l = cur.clone();
                l.drain(k..k + 2);
                go(st, vec![(g, l)], 0);
            }
        }
        _ => {
            let mut sw = cur.clone();
            sw.swap(k, k + 1);
            go(st, vec![(GenSlice::new(Vertex4, g.pos), sw)], 0);
            if cur[k] != cur[k + 1] {
                // Vertical keeps the pair; cup-cap reproduces it above.
                let dq = if cur[k] == Minus { -1 } else { 1 };
                go(st, vec![], dq);
                let mut mid = cur.clone();
                mid.drain(k..k + 2);
                go(st, vec![(GenSlice::new(Cap, g.pos), mid), (GenSlice::new(Cup, g.pos), cur.clone())], -dq);
            }
        }
    }
}

/// Linear extension of `psi_resolve`.
pub fn psi(x: &BmwElement) -> Result<SkeinElement> {
    let mut out = SkeinElement::zero();
    for (w, c) in x.iter() {
        out = out.add(&psi_resolve(w)?.scale(c));
    }
    Ok(out)
}

/// Which crossing translation to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingKind {
    BmwPos,
    BmwNeg,
    SkeinPos,
    SkeinNeg,
}

/// A crossing written in generators of either algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translated {
    Bmw(BmwElement),
    Skein(SkeinElement),
}

/// `X_+ = q e - rho + q^{-1}`, `X_- = q^{-1} e - rho + q` in BMW;
/// `X_+ = a^{-1} q (vertical) - a^{-1} (vertex)`, `X_- = a q^{-1} (vertical) - a (vertex)` upward in skein.
pub fn crossing_translate(kind: CrossingKind) -> Translated {
    let e = bmw_product(2, &[BmwGen::E(1)]).unwrap();
    let rho = bmw_product(2, &[BmwGen::Rho(1)]).unwrap();
    let one = TangleWord::identity(2);
    let bmw = |ce: RatFun, c1: RatFun| {
        let mut x = BmwElement::zero();
        x.add_term(e.clone(), ce);
        x.add_term(rho.clone(), RatFun::integer(-1));
        x.add_term(one.clone(), c1);
        Translated::Bmw(x)
    };
    let skein = |s: i32| {
        let mut x = SkeinElement::zero();
        x.add_term(vertical(pair(Plus, Plus)), RatFun::mono(-s, s));
        x.add_term(pic_vertex(Plus, Plus), -RatFun::mono(-s, 0));
        Translated::Skein(x)
    };
    match kind {
        CrossingKind::BmwPos => bmw(RatFun::mono(0, 1), RatFun::mono(0, -1)),
        CrossingKind::BmwNeg => bmw(RatFun::mono(0, -1), RatFun::mono(0, 1)),
        CrossingKind::SkeinPos => skein(1),
        CrossingKind::SkeinNeg => skein(-1),
    }
}
