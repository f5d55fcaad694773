//! Locating the first crossing that breaks the descending condition.

use crate::diagram::{Next, SliceKind, Step, TangleWord, Tracer};

/// Order in which components and base points are chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Components in tracer order, each from its first segment.
    #[default]
    Forward,
    /// Components in reverse order, each from the middle of its path.
    Reverse,
}

/// Components as segment paths, each listed in its direction of travel.
/// `dirs` gives, per strand, whether to travel it as traced (`true`) or reversed.
pub(crate) fn walk_order(tr: &Tracer<'_>, dirs: Option<&[bool]>, strategy: Strategy) -> Vec<Vec<Step>> {
    let mut comps: Vec<Vec<Step>> = tr.strands();
    if let Some(d) = dirs {
        for (c, fwd) in comps.iter_mut().zip(d) {
            if !fwd {
                reverse_path(c);
            }
        }
    }
    if strategy == Strategy::Reverse {
        comps.reverse();
        for c in comps.iter_mut() {
            let m = c.len() / 2;
            c.rotate_left(m);
        }
    }
    comps
}

fn reverse_path(c: &mut [Step]) {
    c.reverse();
    for s in c.iter_mut() {
        s.up = !s.up;
    }
}

/// The crossing slice passed when leaving `s`, with the bottom position of the strand there.
fn crossed_at(word: &TangleWord, s: Step) -> Option<(usize, usize)> {
    let t = if s.up { s.level } else { s.level.checked_sub(1)? };
    let g = word.slices.get(t)?;
    if !g.kind.is_crossing() {
        return None;
    }
    let k = g.pos - 1;
    if s.pos != k && s.pos != k + 1 {
        return None;
    }
    // Position at the bottom of the crossing of the strand being followed.
    let bottom_pos = if s.up { s.pos } else if s.pos == k { k + 1 } else { k };
    Some((t, bottom_pos))
}

fn is_over(kind: SliceKind, k: usize, bottom_pos: usize) -> bool {
    match kind {
        SliceKind::PosCross => bottom_pos == k,
        _ => bottom_pos == k + 1,
    }
}

/// First crossing, in walk order, whose first passage is underneath.
pub(crate) fn first_bad_crossing(word: &TangleWord, comps: &[Vec<Step>]) -> Option<usize> {
    let mut seen = vec![false; word.len()];
    let tr = Tracer::new(word);
    for c in comps {
        for s in c {
            if let Next::Seg(_) = tr.next(*s) {
                if let Some((t, bp)) = crossed_at(word, *s) {
                    if !seen[t] {
                        seen[t] = true;
                        let g = word.slices[t];
                        if !is_over(g.kind, g.pos - 1, bp) {
                            return Some(t);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Component index of every crossing strand end: `(slice, comp of strand at bottom k, comp at bottom k+1)`.
pub(crate) fn crossing_components(word: &TangleWord, comps: &[Vec<Step>]) -> Vec<(usize, usize, usize)> {
    let widths = word.widths();
    let mut owner = vec![Vec::new(); widths.len()];
    for (l, w) in widths.iter().enumerate() {
        owner[l] = vec![usize::MAX; *w];
    }
    for (ci, c) in comps.iter().enumerate() {
        for s in c {
            owner[s.level][s.pos] = ci;
        }
    }
    word.slices
        .iter()
        .enumerate()
        .filter(|(_, g)| g.kind.is_crossing())
        .map(|(t, g)| (t, owner[t][g.pos - 1], owner[t][g.pos]))
        .collect()
}
