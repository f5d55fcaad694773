use serde::{Deserialize, Serialize};

use crate::error::{Result, SkeinError};

/// The elementary generator a slice places at one position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SliceKind {
    Cup,
    Cap,
    /// Over strand runs from bottom-left to top-right.
    PosCross,
    /// Over strand runs from bottom-right to top-left.
    NegCross,
    /// Four-valent graph vertex.
    Vertex4,
}

impl SliceKind {
    pub fn is_crossing(self) -> bool {
        matches!(self, SliceKind::PosCross | SliceKind::NegCross)
    }

    /// Crossings and vertices: the two strands at `pos, pos+1` swap positions.
    pub fn is_swap(self) -> bool {
        matches!(self, SliceKind::PosCross | SliceKind::NegCross | SliceKind::Vertex4)
    }

    pub fn mirrored(self) -> Self {
        match self {
            SliceKind::PosCross => SliceKind::NegCross,
            SliceKind::NegCross => SliceKind::PosCross,
            k => k,
        }
    }
}

/// A generator at 1-based position `pos`, acting on strands `pos, pos+1`
/// (for a cup: creating new strands at `pos, pos+1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenSlice {
    pub kind: SliceKind,
    pub pos: usize,
}

impl GenSlice {
    pub fn new(kind: SliceKind, pos: usize) -> Self {
        Self { kind, pos }
    }

    /// Strand count above the slice, given `w` strands below it.
    pub fn width_above(&self, w: usize) -> usize {
        match self.kind {
            SliceKind::Cup => w + 2,
            SliceKind::Cap => w.saturating_sub(2),
            _ => w,
        }
    }

    fn fits(&self, w: usize) -> bool {
        match self.kind {
            SliceKind::Cup => self.pos >= 1 && self.pos <= w + 1,
            _ => self.pos >= 1 && self.pos < w,
        }
    }
}

/// A planar diagram as a bottom-to-top list of slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TangleWord {
    pub n_bottom: usize,
    pub n_top: usize,
    pub slices: Vec<GenSlice>,
}

impl TangleWord {
    /// Builds a word and computes `n_top` from the slices.
    pub fn new(n_bottom: usize, slices: Vec<GenSlice>) -> Result<Self> {
        let mut w = n_bottom;
        for (index, s) in slices.iter().enumerate() {
            if !s.fits(w) {
                return Err(SkeinError::BadPos { index });
            }
            w = s.width_above(w);
        }
        Ok(Self { n_bottom, n_top: w, slices })
    }

    pub fn identity(n: usize) -> Self {
        Self { n_bottom: n, n_top: n, slices: Vec::new() }
    }

    pub fn single(n: usize, kind: SliceKind, pos: usize) -> Result<Self> {
        Self::new(n, vec![GenSlice::new(kind, pos)])
    }

    /// Cap then cup at `i`: the generator `e_i`.
    pub fn cupcap(n: usize, i: usize) -> Result<Self> {
        Self::new(n, vec![GenSlice::new(SliceKind::Cap, i), GenSlice::new(SliceKind::Cup, i)])
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.n_bottom == 0 && self.n_top == 0
    }

    /// `widths()[t]` is the strand count below slice `t`; the last entry is `n_top`.
    pub fn widths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut w = self.n_bottom;
        out.push(w);
        for s in &self.slices {
            w = s.width_above(w);
            out.push(w);
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let mut w = self.n_bottom;
        for (index, s) in self.slices.iter().enumerate() {
            if s.kind == SliceKind::Cap && w < 2 {
                return Err(SkeinError::BadPos { index });
            }
            if !s.fits(w) {
                return Err(SkeinError::BadPos { index });
            }
            w = s.width_above(w);
        }
        if w != self.n_top {
            return Err(SkeinError::BadWidth { index: self.slices.len() });
        }
        Ok(())
    }

    /// Stacks `self` on top of `bottom`.
    pub fn compose(&self, bottom: &TangleWord) -> Result<TangleWord> {
        if self.n_bottom != bottom.n_top {
            return Err(SkeinError::WidthMismatch { top: self.n_bottom, bottom: bottom.n_top });
        }
        let mut slices = bottom.slices.clone();
        slices.extend_from_slice(&self.slices);
        Ok(TangleWord { n_bottom: bottom.n_bottom, n_top: self.n_top, slices })
    }

    /// Places `right` to the right of `self`, with `self` acting first.
    pub fn juxtapose(&self, right: &TangleWord) -> TangleWord {
        let mut slices = self.slices.clone();
        let shift = self.n_top;
        slices.extend(right.slices.iter().map(|s| GenSlice::new(s.kind, s.pos + shift)));
        TangleWord {
            n_bottom: self.n_bottom + right.n_bottom,
            n_top: self.n_top + right.n_top,
            slices,
        }
    }

    /// Swaps every crossing.
    pub fn mirror(&self) -> TangleWord {
        TangleWord {
            n_bottom: self.n_bottom,
            n_top: self.n_top,
            slices: self.slices.iter().map(|s| GenSlice::new(s.kind.mirrored(), s.pos)).collect(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.kind.is_crossing()).count()
    }

    /// Inserts `piece` (a word of equal boundary width) before slice `at`.
    pub fn insert(&self, at: usize, piece: &[GenSlice]) -> Result<TangleWord> {
        let mut slices = self.slices[..at].to_vec();
        slices.extend_from_slice(piece);
        slices.extend_from_slice(&self.slices[at..]);
        let w = TangleWord::new(self.n_bottom, slices)?;
        if w.n_top != self.n_top {
            return Err(SkeinError::BadWidth { index: at });
        }
        Ok(w)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<TangleWord> {
        let w: TangleWord = serde_json::from_value(v.clone())
            .map_err(|e| SkeinError::Parse { field: "slices".into(), message: e.to_string() })?;
        w.validate()?;
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_on_one_strand_rejected() {
        let w = TangleWord { n_bottom: 1, n_top: 0, slices: vec![GenSlice::new(SliceKind::Cap, 1)] };
        assert_eq!(w.validate(), Err(SkeinError::BadPos { index: 0 }));
    }

    #[test]
    fn trefoil_braid_word_validates() {
        let x = GenSlice::new(SliceKind::PosCross, 1);
        let w = TangleWord::new(2, vec![x, x, x]).unwrap();
        assert!(w.validate().is_ok());
        assert!(TangleWord::identity(3).validate().is_ok());
    }

    #[test]
    fn wrong_top_width_rejected() {
        let w = TangleWord { n_bottom: 2, n_top: 2, slices: vec![GenSlice::new(SliceKind::Cap, 1)] };
        assert_eq!(w.validate(), Err(SkeinError::BadWidth { index: 1 }));
    }

    #[test]
    fn compose_checks_widths() {
        let e = TangleWord::cupcap(2, 1).unwrap();
        assert_eq!(e.compose(&e).unwrap().len(), 4);
        let err = TangleWord::identity(3).compose(&e);
        assert_eq!(err, Err(SkeinError::WidthMismatch { top: 3, bottom: 2 }));
    }

    #[test]
    fn json_uses_lowercase_kinds() {
        let w = TangleWord::cupcap(2, 1).unwrap();
        let s = w.to_json().to_string();
        assert!(s.contains(r#""kind":"cap""#));
        assert_eq!(TangleWord::from_json(&w.to_json()).unwrap(), w);
    }
}
