use std::fmt;

use super::strands::Tracer;
use super::word::{SliceKind, TangleWord};
use crate::error::{Result, SkeinError};

/// Vertical direction of a strand at a generic horizontal section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

pub type OrientationString = Vec<Sign>;

pub fn orientation_string(s: &str) -> Option<OrientationString> {
    s.chars()
        .map(|c| match c {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            _ => None,
        })
        .collect()
}

pub fn format_orientation(s: &[Sign]) -> String {
    s.iter().map(|x| x.symbol()).collect()
}

/// `(number of +, number of -)`.
pub fn count_pm(s: &[Sign]) -> (usize, usize) {
    let p = s.iter().filter(|x| **x == Sign::Plus).count();
    (p, s.len() - p)
}

/// A word with the orientation of every section: `levels[t]` lies below slice `t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTangleWord {
    word: TangleWord,
    levels: Vec<OrientationString>,
}

impl fmt::Debug for OrientedTangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", format_orientation(&self.levels[0]))?;
        for (s, l) in self.word.slices.iter().zip(&self.levels[1..]) {
            write!(f, " {:?}@{} {}", s.kind, s.pos, format_orientation(l))?;
        }
        write!(f, "]")
    }
}

impl OrientedTangleWord {
    /// Checks that `levels` is a consistent orientation of `word`.
    pub fn new(word: TangleWord, levels: Vec<OrientationString>) -> Result<Self> {
        word.validate()?;
        let widths = word.widths();
        if levels.len() != widths.len() {
            return Err(SkeinError::BadOrientation { index: 0 });
        }
        for (t, l) in levels.iter().enumerate() {
            if l.len() != widths[t] {
                return Err(SkeinError::BadOrientation { index: t });
            }
        }
        for (index, g) in word.slices.iter().enumerate() {
            if !slice_consistent(g.kind, g.pos - 1, &levels[index], &levels[index + 1]) {
                return Err(SkeinError::BadOrientation { index });
            }
        }
        Ok(Self { word, levels })
    }

    /// Orientation given by traversing strand `k` of `Tracer::strands` forward iff `forward[k]`.
    pub fn from_strand_choice(word: &TangleWord, forward: &[bool]) -> Self {
        let tr = Tracer::new(word);
        let strands = tr.strands();
        assert_eq!(strands.len(), forward.len(), "one choice per strand");
        let mut levels: Vec<OrientationString> =
            tr.widths().iter().map(|w| vec![Sign::Plus; *w]).collect();
        for (path, fwd) in strands.iter().zip(forward) {
            for s in path {
                levels[s.level][s.pos] = if s.up == *fwd { Sign::Plus } else { Sign::Minus };
            }
        }
        Self { word: word.clone(), levels }
    }

    /// All consistent orientations, one per choice of direction on each strand.
    pub fn all_orientations(word: &TangleWord) -> Vec<Self> {
        let k = Tracer::new(word).strands().len();
        (0..1u64 << k)
            .map(|m| {
                let fwd: Vec<bool> = (0..k).map(|i| m >> i & 1 == 0).collect();
                Self::from_strand_choice(word, &fwd)
            })
            .collect()
    }

    pub fn word(&self) -> &TangleWord {
        &self.word
    }

    pub fn levels(&self) -> &[OrientationString] {
        &self.levels
    }

    pub fn bottom(&self) -> &[Sign] {
        &self.levels[0]
    }

    pub fn top(&self) -> &[Sign] {
        self.levels.last().unwrap()
    }

    /// Counts of `+` and `-` at the bottom boundary.
    pub fn n_pm(&self) -> (usize, usize) {
        count_pm(self.bottom())
    }

    /// Per-slice contributions: cap over `(-,+)` is `+1`, cup under `(+,-)` is `-1`.
    pub fn rot(&self) -> i32 {
        let mut r = 0;
        for (t, g) in self.word.slices.iter().enumerate() {
            let k = g.pos - 1;
            match g.kind {
                SliceKind::Cap if self.levels[t][k] == Sign::Minus => r += 1,
                SliceKind::Cup if self.levels[t + 1][k] == Sign::Plus => r -= 1,
                _ => {}
            }
        }
        r
    }

    /// Stacks `self` above `bottom`; `None` when the boundary orientations differ.
    pub fn compose(&self, bottom: &Self) -> Result<Option<Self>> {
        let word = self.word.compose(&bottom.word)?;
        if bottom.top() != self.bottom() {
            return Ok(None);
        }
        let mut levels = bottom.levels.clone();
        levels.extend_from_slice(&self.levels[1..]);
        Ok(Some(Self { word, levels }))
    }

    /// Sign of crossing slice `t`: `+1` when both strands run the same vertical way
    /// through a positive slice.
    pub fn crossing_sign(&self, t: usize) -> i32 {
        let g = self.word.slices[t];
        if !g.kind.is_crossing() {
            return 0;
        }
        let k = g.pos - 1;
        let same = self.levels[t][k] == self.levels[t][k + 1];
        let s = if same { 1 } else { -1 };
        match g.kind {
            SliceKind::PosCross => s,
            SliceKind::NegCross => -s,
            _ => 0,
        }
    }

    pub fn writhe(&self) -> i32 {
        (0..self.word.len()).map(|t| self.crossing_sign(t)).sum()
    }
}

fn slice_consistent(kind: SliceKind, k: usize, below: &[Sign], above: &[Sign]) -> bool {
    match kind {
        SliceKind::Cup => {
            above[k] != above[k + 1]
                && below[..k] == above[..k]
                && below[k..] == above[k + 2..]
        }
        SliceKind::Cap => {
            below[k] != below[k + 1]
                && above[..k] == below[..k]
                && above[k..] == below[k + 2..]
        }
        _ => {
            below[..k] == above[..k]
                && below[k + 2..] == above[k + 2..]
                && below[k] == above[k + 1]
                && below[k + 1] == above[k]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::word::GenSlice;

    fn os(s: &str) -> OrientationString {
        orientation_string(s).unwrap()
    }

    fn circle(inner: &str) -> OrientedTangleWord {
        let w = TangleWord::new(0, vec![GenSlice::new(SliceKind::Cup, 1), GenSlice::new(SliceKind::Cap, 1)])
            .unwrap();
        OrientedTangleWord::new(w, vec![os(""), os(inner), os("")]).unwrap()
    }

    #[test]
    fn circle_rotation_numbers() {
        assert_eq!(circle("-+").rot(), 1);
        assert_eq!(circle("+-").rot(), -1);
    }

    #[test]
    fn vertical_strand_has_no_rotation() {
        for s in ["+", "-"] {
            let d = OrientedTangleWord::new(TangleWord::identity(1), vec![os(s)]).unwrap();
            assert_eq!(d.rot(), 0);
        }
    }

    #[test]
    fn mismatched_compose_is_zero() {
        let a = OrientedTangleWord::new(TangleWord::identity(2), vec![os("+-")]).unwrap();
        let b = OrientedTangleWord::new(TangleWord::identity(2), vec![os("-+")]).unwrap();
        assert_eq!(a.compose(&b).unwrap(), None);
        assert!(a.compose(&a).unwrap().is_some());
    }

    #[test]
    fn inconsistent_cup_rejected() {
        let w = TangleWord::single(0, SliceKind::Cup, 1).unwrap();
        assert!(OrientedTangleWord::new(w, vec![os(""), os("++")]).is_err());
    }

    #[test]
    fn section_counts() {
        let d = OrientedTangleWord::new(TangleWord::identity(3), vec![os("-++")]).unwrap();
        assert_eq!(d.n_pm(), (2, 1));
    }
}
