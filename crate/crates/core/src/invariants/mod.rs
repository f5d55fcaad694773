//! Kauffman and HOMFLY-PT polynomials of closed diagrams by skein recursion
//! down to descending diagrams.

mod descend;
pub mod moves;

use std::collections::HashMap;

use crate::diagram::{GenSlice, LinkDiagram, OrientedTangleWord, SliceKind, TangleWord, Tracer};
use crate::error::{Result, SkeinError};
use crate::ring::{delta, unknot_homfly, q_minus_qinv, RatFun};

pub use descend::Strategy;

/// Recursion counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub nodes: u64,
    pub cache_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: RatFun,
    pub stats: Stats,
}

/// The crossing slice that plays the role of `X_+` in
/// `F(X_+) - F(X_-) = z (F(cupcap) - F(vertical))`.
pub const XPLUS: SliceKind = SliceKind::NegCross;

/// Kauffman curl factor for a self-crossing of writhe `+1`.
pub fn curl_factor() -> RatFun {
    match XPLUS {
        SliceKind::NegCross => RatFun::mono(2, -1),
        _ => RatFun::mono(-2, 1),
    }
}

fn z() -> RatFun {
    RatFun::from_bilaurent(q_minus_qinv())
}

fn replace(word: &TangleWord, t: usize, with: &[GenSlice]) -> TangleWord {
    let mut slices = word.slices[..t].to_vec();
    slices.extend_from_slice(with);
    slices.extend_from_slice(&word.slices[t + 1..]);
    TangleWord { n_bottom: word.n_bottom, n_top: word.n_top, slices }
}

fn switched(word: &TangleWord, t: usize) -> TangleWord {
    let g = word.slices[t];
    replace(word, t, &[GenSlice::new(g.kind.mirrored(), g.pos)])
}

fn self_writhe(word: &TangleWord, comps: &[Vec<crate::diagram::Step>]) -> i32 {
    let fwd = vec![true; comps.len()];
    let o = OrientedTangleWord::from_strand_choice(word, &fwd);
    descend::crossing_components(word, comps)
        .into_iter()
        .filter(|(_, c1, c2)| c1 == c2)
        .map(|(t, _, _)| o.crossing_sign(t))
        .sum()
}

/// Kauffman value of a descending diagram: `delta^components * curl^self-writhe`.
pub fn eval_terminal(d: &LinkDiagram) -> Result<RatFun> {
    let word = d.word();
    let tr = Tracer::new(word);
    let comps = descend::walk_order(&tr, None, Strategy::Forward);
    if descend::first_bad_crossing(word, &comps).is_some() {
        return Err(SkeinError::NotTerminal);
    }
    Ok(terminal_kauffman(word, &comps))
}

fn terminal_kauffman(word: &TangleWord, comps: &[Vec<crate::diagram::Step>]) -> RatFun {
    let w = self_writhe(word, comps);
    let c = comps.len() as i32;
    &delta().pow(c).unwrap() * &curl_factor().pow(w).unwrap()
}

struct Kauffman {
    strategy: Strategy,
    memo: HashMap<TangleWord, RatFun>,
    stats: Stats,
}

impl Kauffman {
    fn eval(&mut self, word: &TangleWord) -> RatFun {
        self.stats.nodes += 1;
        if let Some(v) = self.memo.get(word) {
            self.stats.cache_hits += 1;
            return v.clone();
        }
        let tr = Tracer::new(word);
        let comps = descend::walk_order(&tr, None, self.strategy);
        let v = match descend::first_bad_crossing(word, &comps) {
            None => terminal_kauffman(word, &comps),
            Some(t) => {
                let g = word.slices[t];
                let sw = self.eval(&switched(word, t));
                let horiz = self.eval(&replace(
                    word,
                    t,
                    &[GenSlice::new(SliceKind::Cap, g.pos), GenSlice::new(SliceKind::Cup, g.pos)],
                ));
                let vert = self.eval(&replace(word, t, &[]));
                let diff = &z() * &(&horiz - &vert);
                if g.kind == XPLUS {
                    &sw + &diff
                } else {
                    &sw - &diff
                }
            }
        };
        self.memo.insert(word.clone(), v.clone());
        v
    }
}

/// Two-variable Kauffman polynomial (regular-isotopy invariant).
pub fn kauffman(d: &LinkDiagram) -> InvariantResult {
    kauffman_with(d, Strategy::Forward)
}

pub fn kauffman_with(d: &LinkDiagram, strategy: Strategy) -> InvariantResult {
    let mut k = Kauffman { strategy, memo: HashMap::new(), stats: Stats::default() };
    let value = k.eval(d.word());
    InvariantResult { value, stats: k.stats }
}

struct Homfly {
    strategy: Strategy,
    memo: HashMap<OrientedTangleWord, RatFun>,
    stats: Stats,
}

/// Strand directions that reproduce the stored orientation.
fn strand_dirs(d: &OrientedTangleWord, tr: &Tracer<'_>) -> Vec<bool> {
    tr.strands()
        .iter()
        .map(|p| {
            let s = p[0];
            (d.levels()[s.level][s.pos] == crate::diagram::Sign::Plus) == s.up
        })
        .collect()
}

/// Oriented smoothing of crossing slice `t`.
fn oriented_smoothing(d: &OrientedTangleWord, t: usize) -> OrientedTangleWord {
    let g = d.word().slices[t];
    let k = g.pos - 1;
    let below = &d.levels()[t];
    let mut levels = d.levels().to_vec();
    let word = if below[k] == below[k + 1] {
        levels.remove(t + 1);
        replace(d.word(), t, &[])
    } else {
        let mut mid = below.clone();
        mid.drain(k..k + 2);
        levels.insert(t + 1, mid);
        replace(d.word(), t, &[GenSlice::new(SliceKind::Cap, g.pos), GenSlice::new(SliceKind::Cup, g.pos)])
    };
    OrientedTangleWord::new(word, levels).expect("oriented smoothing stays consistent")
}

fn oriented_switch(d: &OrientedTangleWord, t: usize) -> OrientedTangleWord {
    OrientedTangleWord::new(switched(d.word(), t), d.levels().to_vec()).expect("switch keeps orientation")
}

impl Homfly {
    fn eval(&mut self, d: &OrientedTangleWord) -> RatFun {
        self.stats.nodes += 1;
        if let Some(v) = self.memo.get(d) {
            self.stats.cache_hits += 1;
            return v.clone();
        }
        let tr = Tracer::new(d.word());
        let dirs = strand_dirs(d, &tr);
        let comps = descend::walk_order(&tr, Some(&dirs), self.strategy);
        let v = match descend::first_bad_crossing(d.word(), &comps) {
            None => unknot_homfly().pow(comps.len() as i32).unwrap(),
            Some(t) => {
                let sw = self.eval(&oriented_switch(d, t));
                let zero = self.eval(&oriented_smoothing(d, t));
                let zp = &z() * &zero;
                if d.crossing_sign(t) > 0 {
                    &(&RatFun::mono(-2, 0) * &sw) + &(&RatFun::mono(-1, 0) * &zp)
                } else {
                    &(&RatFun::mono(2, 0) * &sw) - &(&RatFun::mono(1, 0) * &zp)
                }
            }
        };
        self.memo.insert(d.clone(), v.clone());
        v
    }
}

/// HOMFLY-PT polynomial with `a P(+) - a^{-1} P(-) = (q - q^{-1}) P(0)` and unknot `[a]`.
pub fn homfly(d: &OrientedTangleWord) -> Result<InvariantResult> {
    homfly_with(d, Strategy::Forward)
}

pub fn homfly_with(d: &OrientedTangleWord, strategy: Strategy) -> Result<InvariantResult> {
    if !d.word().is_closed() {
        return Err(SkeinError::NotClosed);
    }
    let mut h = Homfly { strategy, memo: HashMap::new(), stats: Stats::default() };
    let value = h.eval(d);
    Ok(InvariantResult { value, stats: h.stats })
}

/// Orientation obtained by running every strand in its traced direction.
pub fn default_orientation(d: &LinkDiagram) -> OrientedTangleWord {
    OrientedTangleWord::from_strand_choice(d.word(), &vec![true; d.components()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    fn homfly_of(d: &LinkDiagram) -> RatFun {
        homfly(&default_orientation(d)).unwrap().value
    }

    #[test]
    fn unknot_and_unlink() {
        let u = braid_closure(1, &[]).unwrap();
        assert_eq!(kauffman(&u).value, delta());
        assert_eq!(homfly_of(&u), unknot_homfly());
        let two = braid_closure(2, &[]).unwrap();
        assert_eq!(kauffman(&two).value, &delta() * &delta());
        assert_eq!(homfly_of(&two), &unknot_homfly() * &unknot_homfly());
    }

    #[test]
    fn kinks_scale_kauffman_only() {
        for (w, e) in [(1, 1), (-1, -1)] {
            let k = braid_closure(2, &[w]).unwrap();
            let expect = &delta() * &curl_factor().pow(e).unwrap();
            assert_eq!(kauffman(&k).value, expect);
            assert_eq!(homfly_of(&k), unknot_homfly());
        }
    }

    #[test]
    fn strategies_agree_on_trefoil() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(kauffman_with(&t, Strategy::Forward).value, kauffman_with(&t, Strategy::Reverse).value);
        let o = default_orientation(&t);
        assert_eq!(homfly_with(&o, Strategy::Forward).unwrap().value, homfly_with(&o, Strategy::Reverse).unwrap().value);
    }
}
