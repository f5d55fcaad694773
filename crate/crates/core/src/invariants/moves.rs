//! Reidemeister move instances on slice words, with orientation transport.

use crate::diagram::{GenSlice, OrientationString, OrientedTangleWord, Sign, SliceKind, TangleWord};

use SliceKind::{Cap, Cup, NegCross, PosCross};

/// Which move a generated instance realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1,
    R2,
    R3,
}

/// A diagram before and after one move.
#[derive(Clone, Debug)]
pub struct MoveInstance {
    pub kind: MoveKind,
    pub before: TangleWord,
    pub after: TangleWord,
    /// Writhe of the inserted curl for R1, otherwise zero.
    pub curl_writhe: i32,
}

fn g(kind: SliceKind, pos: usize) -> GenSlice {
    GenSlice::new(kind, pos)
}

/// The four curls on strand `j` (right or left of it, either crossing).
fn curls(j: usize) -> Vec<Vec<GenSlice>> {
    let mut out = Vec::new();
    for x in [PosCross, NegCross] {
        out.push(vec![g(Cup, j + 1), g(x, j), g(Cap, j + 1)]);
        out.push(vec![g(Cup, j), g(x, j + 1), g(Cap, j)]);
    }
    out
}

/// Writhe of the crossing in `curls(j)[idx]` (independent of `j`).
fn curl_writhe(idx: usize) -> i32 {
    let w = TangleWord::new(1, curls(1).swap_remove(idx)).expect("curl piece is valid");
    OrientedTangleWord::all_orientations(&w).remove(0).writhe()
}

fn r2_pairs(i: usize) -> [[GenSlice; 2]; 2] {
    [[g(PosCross, i), g(NegCross, i)], [g(NegCross, i), g(PosCross, i)]]
}

/// Equal-link pairs for the braid-like third move on strands `i, i+1, i+2`.
fn r3_pairs(i: usize) -> Vec<(Vec<GenSlice>, Vec<GenSlice>)> {
    let (a, b) = (i, i + 1);
    let mut out = Vec::new();
    for x in [PosCross, NegCross] {
        out.push((vec![g(x, a), g(x, b), g(x, a)], vec![g(x, b), g(x, a), g(x, b)]));
    }
    // a b a^-1 = b^-1 a b
    out.push((
        vec![g(PosCross, a), g(PosCross, b), g(NegCross, a)],
        vec![g(NegCross, b), g(PosCross, a), g(PosCross, b)],
    ));
    out
}

/// Move instances obtained by inserting local pieces at every level of `w`.
pub fn instances(w: &TangleWord) -> Vec<MoveInstance> {
    let widths = w.widths();
    let mut out = Vec::new();
    for (at, &width) in widths.iter().enumerate() {
        for j in 1..=width {
            for (idx, piece) in curls(j).into_iter().enumerate() {
                if let Ok(after) = w.insert(at, &piece) {
                    let cw = curl_writhe(idx);
                    out.push(MoveInstance { kind: MoveKind::R1, before: w.clone(), after, curl_writhe: cw });
                }
            }
        }
        for i in 1..width {
            for pair in r2_pairs(i) {
                let after = w.insert(at, &pair).expect("R2 piece fits");
                out.push(MoveInstance { kind: MoveKind::R2, before: w.clone(), after, curl_writhe: 0 });
            }
        }
        for i in 1..width.saturating_sub(1) {
            for (x, y) in r3_pairs(i) {
                let before = w.insert(at, &x).expect("R3 piece fits");
                let after = w.insert(at, &y).expect("R3 piece fits");
                out.push(MoveInstance { kind: MoveKind::R3, before, after, curl_writhe: 0 });
            }
        }
    }
    out
}

/// Orientations of `after` that agree with `d` away from the inserted piece.
///
/// `after` must be `d.word()` with `piece_len` slices inserted before slice `at`,
/// or with the same region rewritten to a piece of equal length.
pub fn transport(d: &OrientedTangleWord, after: &TangleWord, at: usize, piece_len: usize, removed: usize) -> Option<OrientedTangleWord> {
    let levels = d.levels();
    let widths = after.widths();
    let cups = after.slices[at..at + piece_len].iter().filter(|s| s.kind == Cup).count();
    for mask in 0..1u32 << cups {
        let mut lv: Vec<OrientationString> = levels[..=at].to_vec();
        let mut cur = levels[at].clone();
        let mut c = 0;
        let mut ok = true;
        for s in &after.slices[at..at + piece_len] {
            let k = s.pos - 1;
            match s.kind {
                Cup => {
                    let x = if mask >> c & 1 == 0 { Sign::Plus } else { Sign::Minus };
                    c += 1;
                    cur.splice(k..k, [x, x.flip()]);
                }
                Cap => {
                    if cur[k] == cur[k + 1] {
                        ok = false;
                        break;
                    }
                    cur.drain(k..k + 2);
                }
                _ => cur.swap(k, k + 1),
            }
            lv.push(cur.clone());
        }
        if !ok || cur != levels[at + removed] {
            continue;
        }
        lv.extend_from_slice(&levels[at + removed + 1..]);
        if lv.len() != widths.len() {
            continue;
        }
        if let Ok(o) = OrientedTangleWord::new(after.clone(), lv) {
            return Some(o);
        }
    }
    None
}

/// Pieces usable for oriented checks: `(kind, position, piece)` insertions into `w`.
pub fn insertion_pieces(w: &TangleWord) -> Vec<(MoveKind, usize, Vec<GenSlice>)> {
    let widths = w.widths();
    let mut out = Vec::new();
    for (at, &width) in widths.iter().enumerate() {
        for j in 1..=width {
            for piece in curls(j) {
                out.push((MoveKind::R1, at, piece));
            }
        }
        for i in 1..width {
            for pair in r2_pairs(i) {
                out.push((MoveKind::R2, at, pair.to_vec()));
            }
        }
    }
    out
}

/// Both sides of every third-move pair insertable at each level.
pub fn r3_insertions(w: &TangleWord) -> Vec<(usize, Vec<GenSlice>, Vec<GenSlice>)> {
    let widths = w.widths();
    let mut out = Vec::new();
    for (at, &width) in widths.iter().enumerate() {
        for i in 1..width.saturating_sub(1) {
            for (x, y) in r3_pairs(i) {
                out.push((at, x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn curl_writhes_are_unit() {
        let w: Vec<i32> = (0..4).map(curl_writhe).collect();
        assert_eq!(w.iter().map(|x| x.abs()).sum::<i32>(), 4);
        assert_eq!(w.iter().sum::<i32>(), 0);
    }

    #[test]
    fn instances_are_valid_words() {
        let d = braid_closure(2, &[1]).unwrap();
        let ms = instances(d.word());
        assert!(ms.iter().any(|m| m.kind == MoveKind::R3));
        for m in ms {
            assert!(m.after.validate().is_ok());
            assert!(m.before.validate().is_ok());
        }
    }

    #[test]
    fn transport_through_r2() {
        let d = braid_closure(2, &[1]).unwrap();
        let o = crate::invariants::default_orientation(&d);
        let after = d.word().insert(3, &r2_pairs(3)[0]).unwrap();
        assert!(transport(&o, &after, 3, 2, 0).is_some());
    }
}
