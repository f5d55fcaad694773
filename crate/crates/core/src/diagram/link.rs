use serde_json::Value;

use super::strands::Tracer;
use super::word::{GenSlice, SliceKind, TangleWord};
use crate::error::{Result, SkeinError};

/// A closed diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    word: TangleWord,
}

impl LinkDiagram {
    pub fn new(word: TangleWord) -> Result<Self> {
        word.validate()?;
        if !word.is_closed() {
            return Err(SkeinError::NotClosed);
        }
        Ok(Self { word })
    }

    pub fn word(&self) -> &TangleWord {
        &self.word
    }

    pub fn into_word(self) -> TangleWord {
        self.word
    }

    pub fn components(&self) -> usize {
        Tracer::new(&self.word).strands().len()
    }

    pub fn mirror(&self) -> Self {
        Self { word: self.word.mirror() }
    }

    pub fn crossing_count(&self) -> usize {
        self.word.crossing_count()
    }

    /// Disjoint union with a crossingless circle on the left.
    pub fn with_unknot(&self) -> Self {
        let mut slices = vec![GenSlice::new(SliceKind::Cup, 1), GenSlice::new(SliceKind::Cap, 1)];
        slices.extend_from_slice(&self.word.slices);
        Self { word: TangleWord { n_bottom: 0, n_top: 0, slices } }
    }

    /// Reads either a tangle object or a braid object with `"closure": "trace"`.
    pub fn from_json(v: &Value) -> Result<Self> {
        if v.get("strands").is_some() || v.get("word").is_some() {
            let strands = v
                .get("strands")
                .and_then(Value::as_u64)
                .ok_or_else(|| perr("strands", "expected a non-negative integer"))?
                as usize;
            let word = v
                .get("word")
                .and_then(Value::as_array)
                .ok_or_else(|| perr("word", "expected an array of integers"))?
                .iter()
                .map(|x| x.as_i64().map(|i| i as i32).ok_or_else(|| perr("word", "expected integers")))
                .collect::<Result<Vec<i32>>>()?;
            match v.get("closure").map(|c| c.as_str()) {
                None | Some(Some("trace")) => {}
                _ => return Err(perr("closure", "only \"trace\" is supported")),
            }
            return braid_closure(strands, &word);
        }
        let w = TangleWord::from_json(v)?;
        Self::new(w)
    }
}

fn perr(field: &str, msg: &str) -> SkeinError {
    SkeinError::Parse { field: field.into(), message: msg.into() }
}

/// Slices for the braid word alone, acting on positions `offset+1 .. offset+n`.
pub fn braid_slices(n: usize, word: &[i32], offset: usize) -> Result<Vec<GenSlice>> {
    word.iter()
        .map(|&g| {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= n {
                return Err(SkeinError::BadIndex(g));
            }
            let kind = if g > 0 { SliceKind::PosCross } else { SliceKind::NegCross };
            Ok(GenSlice::new(kind, offset + i))
        })
        .collect()
}

/// Trace closure: `n` nested cups, the braid on the right half, `n` nested caps.
pub fn braid_closure(n: usize, word: &[i32]) -> Result<LinkDiagram> {
    let mut slices: Vec<GenSlice> = (1..=n).map(|i| GenSlice::new(SliceKind::Cup, i)).collect();
    slices.extend(braid_slices(n, word, n)?);
    slices.extend((1..=n).rev().map(|i| GenSlice::new(SliceKind::Cap, i)));
    LinkDiagram::new(TangleWord::new(0, slices)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_component_counts() {
        assert_eq!(braid_closure(2, &[]).unwrap().components(), 2);
        assert_eq!(braid_closure(2, &[1]).unwrap().components(), 1);
        assert_eq!(braid_closure(2, &[1, 1]).unwrap().components(), 2);
        assert_eq!(braid_closure(2, &[1, 1, 1]).unwrap().components(), 1);
        assert_eq!(braid_closure(3, &[1, -2, 1, -2]).unwrap().components(), 1);
        assert_eq!(braid_closure(1, &[]).unwrap().components(), 1);
    }

    #[test]
    fn trefoil_has_three_crossings() {
        assert_eq!(braid_closure(2, &[1, 1, 1]).unwrap().crossing_count(), 3);
    }

    #[test]
    fn bad_generator_index() {
        assert_eq!(braid_closure(2, &[2]), Err(SkeinError::BadIndex(2)));
        assert_eq!(braid_closure(2, &[0]), Err(SkeinError::BadIndex(0)));
    }

    #[test]
    fn braid_json() {
        let v: Value = serde_json::from_str(r#"{"strands":2,"word":[1,1,1],"closure":"trace"}"#).unwrap();
        assert_eq!(LinkDiagram::from_json(&v).unwrap(), braid_closure(2, &[1, 1, 1]).unwrap());
        let bad: Value = serde_json::from_str(r#"{"strands":2,"word":"x"}"#).unwrap();
        assert!(matches!(LinkDiagram::from_json(&bad), Err(SkeinError::Parse { field, .. }) if field == "word"));
    }

    #[test]
    fn open_word_is_not_a_link() {
        assert_eq!(LinkDiagram::new(TangleWord::identity(2)), Err(SkeinError::NotClosed));
    }
}
