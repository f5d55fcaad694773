//! Jaeger's expansion of the Kauffman polynomial over oriented resolutions.

use crate::diagram::{GenSlice, LinkDiagram, OrientationString, OrientedTangleWord, Sign, SliceKind, TangleWord};
use crate::invariants::homfly;
use crate::ring::{q_minus_qinv, RatFun};

use Sign::{Minus, Plus};

/// Crossing geometry whose disoriented smoothings are the vertical `(-,+)` pair
/// (weight `z`) and the cup-cap pair over `(-,+)` (weight `-z`).
pub const P_SLICE: SliceKind = SliceKind::PosCross;

/// Local choice at one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalPicture {
    /// The crossing kept, with the orientation it inherits.
    Oriented,
    /// Vertical smoothing.
    Parallel,
    /// Cap-then-cup smoothing.
    CupCap,
}

/// One oriented complete resolution.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub choices: Vec<LocalPicture>,
    pub diagram: OrientedTangleWord,
    /// Product of the local weights.
    pub weight: RatFun,
    pub rot: i32,
}

/// The disoriented pair allowed by a crossing of this geometry.
fn disoriented_pair(kind: SliceKind) -> [Sign; 2] {
    if kind == P_SLICE {
        [Minus, Plus]
    } else {
        [Plus, Minus]
    }
}

/// `(parallel weight, cupcap weight)` as powers of `z = q - q^{-1}` with sign.
fn smoothing_signs(kind: SliceKind) -> (i32, i32) {
    if kind == P_SLICE {
        (1, -1)
    } else {
        (-1, 1)
    }
}

struct State {
    slices: Vec<GenSlice>,
    levels: Vec<OrientationString>,
    choices: Vec<LocalPicture>,
    /// The weight is `(-1)^neg * z^zpow`.
    zpow: u32,
    neg: bool,
}

/// Enumerates all oriented complete resolutions by backtracking over sections.
pub fn link_resolutions(d: &LinkDiagram) -> Vec<Resolution> {
    let mut out = Vec::new();
    let mut st = State { slices: Vec::new(), levels: vec![Vec::new()], choices: Vec::new(), zpow: 0, neg: false };
    recurse(d.word(), 0, &mut st, &mut out);
    out
}

fn push(st: &mut State, g: GenSlice, level: OrientationString) {
    st.slices.push(g);
    st.levels.push(level);
}

fn pop(st: &mut State, n: usize) {
    for _ in 0..n {
        st.slices.pop();
        st.levels.pop();
    }
}

fn recurse(word: &TangleWord, t: usize, st: &mut State, out: &mut Vec<Resolution>) {
    if t == word.len() {
        let w = TangleWord { n_bottom: 0, n_top: 0, slices: st.slices.clone() };
        let diagram = OrientedTangleWord::new(w, st.levels.clone()).expect("resolution is consistent");
        let mut weight = RatFun::from_bilaurent(q_minus_qinv()).pow(st.zpow as i32).unwrap();
        if st.neg {
            weight = -weight;
        }
        let rot = diagram.rot();
        out.push(Resolution { choices: st.choices.clone(), diagram, weight, rot });
        return;
    }
    let g = word.slices[t];
    let k = g.pos - 1;
    let cur = st.levels.last().unwrap().clone();
    match g.kind {
        SliceKind::Cup => {
            for x in [Plus, Minus] {
                let mut l = cur.clone();
                l.splice(k..k, [x, x.flip()]);
                push(st, g, l);
                recurse(word, t + 1, st, out);
                pop(st, 1);
            }
        }
        SliceKind::Cap => {
            if cur[k] != cur[k + 1] {
                let mut l = cur.clone();
                l.drain(k..k + 2);
                push(st, g, l);
                recurse(word, t + 1, st, out);
                pop(st, 1);
            }
        }
        kind => {
            let mut l = cur.clone();
            l.swap(k, k + 1);
            push(st, g, l);
            st.choices.push(LocalPicture::Oriented);
            recurse(word, t + 1, st, out);
            st.choices.pop();
            pop(st, 1);

            let pair = disoriented_pair(kind);
            if cur[k..k + 2] == pair {
                let (par, cc) = smoothing_signs(kind);
                st.zpow += 1;
                st.neg ^= par < 0;
                st.choices.push(LocalPicture::Parallel);
                recurse(word, t + 1, st, out);
                st.choices.pop();
                st.neg ^= par < 0;

                st.neg ^= cc < 0;
                let mut mid = cur.clone();
                mid.drain(k..k + 2);
                push(st, GenSlice::new(SliceKind::Cap, g.pos), mid);
                push(st, GenSlice::new(SliceKind::Cup, g.pos), cur.clone());
                st.choices.push(LocalPicture::CupCap);
                recurse(word, t + 1, st, out);
                st.choices.pop();
                pop(st, 2);
                st.neg ^= cc < 0;
                st.zpow -= 1;
            }
        }
    }
}

/// `a^{writhe} P`: the HOMFLY-PT polynomial normalized to a regular-isotopy invariant
/// with `X_+ - X_- = z * (vertical)`.
pub fn framed_homfly(d: &OrientedTangleWord) -> RatFun {
    let p = homfly(d).expect("closed diagram").value;
    &p * &RatFun::mono(d.writhe(), 0)
}

/// `sum (a^{-1} q)^rot * w * a^{writhe} P` over oriented complete resolutions.
pub fn jaeger_kauffman(d: &LinkDiagram) -> RatFun {
    let aq = RatFun::mono(-1, 1);
    link_resolutions(d)
        .into_iter()
        .map(|r| {
            let p = framed_homfly(&r.diagram);
            &(&aq.pow(r.rot).unwrap() * &r.weight) * &p
        })
        .sum()
}
