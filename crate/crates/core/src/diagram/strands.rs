//! Strand tracing through a slice word.
//!
//! A segment `(t, p)` is the piece of strand at 0-based position `p` between
//! slice `t - 1` and slice `t`. Its upper end lies on slice `t`, its lower end
//! on slice `t - 1`.

use super::word::{SliceKind, TangleWord};

/// One step of a traversal: the segment and whether it is run upward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub level: usize,
    pub pos: usize,
    pub up: bool,
}

/// Where the traversal continues after leaving a segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Next {
    Seg(Step),
    Boundary,
}

/// Segment adjacency for a fixed word.
pub struct Tracer<'a> {
    word: &'a TangleWord,
    widths: Vec<usize>,
    offsets: Vec<usize>,
}

impl<'a> Tracer<'a> {
    pub fn new(word: &'a TangleWord) -> Self {
        let widths = word.widths();
        let mut offsets = Vec::with_capacity(widths.len() + 1);
        let mut acc = 0;
        for w in &widths {
            offsets.push(acc);
            acc += w;
        }
        offsets.push(acc);
        Self { word, widths, offsets }
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn segment_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn index(&self, level: usize, pos: usize) -> usize {
        self.offsets[level] + pos
    }

    /// Continues from `s` through the slice at its far end.
    pub fn next(&self, s: Step) -> Next {
        let (t, p) = (s.level, s.pos);
        if s.up {
            let Some(g) = self.word.slices.get(t) else { return Next::Boundary };
            let k = g.pos - 1;
            let seg = |level, pos, up| Next::Seg(Step { level, pos, up });
            match g.kind {
                SliceKind::Cap if p == k => seg(t, k + 1, false),
                SliceKind::Cap if p == k + 1 => seg(t, k, false),
                SliceKind::Cap if p > k + 1 => seg(t + 1, p - 2, true),
                SliceKind::Cup if p >= k => seg(t + 1, p + 2, true),
                x if x.is_swap() && p == k => seg(t + 1, k + 1, true),
                x if x.is_swap() && p == k + 1 => seg(t + 1, k, true),
                _ => seg(t + 1, p, true),
            }
        } else {
            if t == 0 {
                return Next::Boundary;
            }
            let g = self.word.slices[t - 1];
            let k = g.pos - 1;
            let seg = |level, pos, up| Next::Seg(Step { level, pos, up });
            match g.kind {
                SliceKind::Cup if p == k => seg(t, k + 1, true),
                SliceKind::Cup if p == k + 1 => seg(t, k, true),
                SliceKind::Cup if p > k + 1 => seg(t - 1, p - 2, false),
                SliceKind::Cap if p >= k => seg(t - 1, p + 2, false),
                x if x.is_swap() && p == k => seg(t - 1, k + 1, false),
                x if x.is_swap() && p == k + 1 => seg(t - 1, k, false),
                _ => seg(t - 1, p, false),
            }
        }
    }

    /// Follows the strand starting at `s` until it closes up or leaves the diagram.
    pub fn run(&self, start: Step) -> Vec<Step> {
        let mut out = vec![start];
        let mut cur = start;
        while let Next::Seg(n) = self.next(cur) {
            if n.level == start.level && n.pos == start.pos {
                break;
            }
            out.push(n);
            cur = n;
        }
        out
    }

    /// All strands: open ones first (from the bottom boundary, then the top), then closed cycles.
    pub fn strands(&self) -> Vec<Vec<Step>> {
        let mut seen = vec![false; self.segment_count()];
        let mut out = Vec::new();
        let mark = |path: &Vec<Step>, seen: &mut Vec<bool>| {
            for s in path {
                seen[self.index(s.level, s.pos)] = true;
            }
        };
        let top = self.widths.len() - 1;
        let starts = (0..self.widths[0])
            .map(|p| Step { level: 0, pos: p, up: true })
            .chain((0..self.widths[top]).map(|p| Step { level: top, pos: p, up: false }));
        for s in starts {
            if !seen[self.index(s.level, s.pos)] {
                let path = self.run(s);
                mark(&path, &mut seen);
                out.push(path);
            }
        }
        for level in 0..self.widths.len() {
            for pos in 0..self.widths[level] {
                if !seen[self.index(level, pos)] {
                    let path = self.run(Step { level, pos, up: true });
                    mark(&path, &mut seen);
                    out.push(path);
                }
            }
        }
        out
    }
}
