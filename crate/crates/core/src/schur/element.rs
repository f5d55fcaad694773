use std::collections::BTreeMap;

use super::matrix::SchurMatrix;
use super::matrix::max_dim_from_env;
use super::tensor::{
    add_vec, apply_divided_in, basis_vec, scale_vec, wedge_basis, weight_basis, weight_dim, GlWeight, Letters, Seq,
    Subsets, TVec,
};
use crate::error::{Result, SkeinError};
use crate::ring::LaurentQ;

/// `E_{+i}^{(κ)}` (`Raise`) or `E_{-i}^{(κ)}` (`Lower`), 1-based `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Raise(usize, u32),
    Lower(usize, u32),
}

impl Op {
    /// Target weight, or `None` when it leaves the dominant cone of `ℕ^n`.
    pub fn shift(self, l: &[usize]) -> Option<GlWeight> {
        let (i, k) = match self {
            Op::Raise(i, k) => (i, k as i64),
            Op::Lower(i, k) => (i, -(k as i64)),
        };
        let mut out = l.to_vec();
        let a = out[i - 1] as i64 + k;
        let b = out[i] as i64 - k;
        if a < 0 || b < 0 {
            return None;
        }
        out[i - 1] = a as usize;
        out[i] = b as usize;
        Some(out)
    }

    pub fn apply(self, space: Space, v: &TVec) -> Result<TVec> {
        let (i, raise, k) = match self {
            Op::Raise(i, k) => (i, true, k),
            Op::Lower(i, k) => (i, false, k),
        };
        match space {
            Space::Tensor => apply_divided_in::<Letters>(v, i, raise, k),
            Space::Wedge(_) => apply_divided_in::<Subsets>(v, i, raise, k),
        }
    }
}

/// A module on which elements are evaluated.
///
/// `Tensor` is `V^{⊗d}`, faithful for `S_q(n,d)`. `Wedge(N)` is `(∧_q V)^{⊗N}`,
/// on which `S_q(n,d)` acts through its quotient by the irreducibles with more than
/// `N` columns; there a pair of slots `(N, 0)` is a genuinely empty boundary, which
/// is what the skein relations need.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Tensor,
    Wedge(usize),
}

impl Space {
    /// Basis of the `λ` weight space.
    pub fn basis(self, l: &[usize]) -> Result<Vec<Seq>> {
        match self {
            Space::Tensor => {
                let (dim, bound) = (weight_dim(l), max_dim_from_env());
                if dim > bound as u128 {
                    return Err(SkeinError::TooLarge { dim: dim.min(usize::MAX as u128) as usize, bound });
                }
                Ok(weight_basis(l))
            }
            Space::Wedge(big_n) => Ok(wedge_basis(l, big_n)),
        }
    }
}

/// Monomial `ops[last] ... ops[0] 1_source`: `ops[0]` acts first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: GlWeight,
    pub ops: Vec<Op>,
}

impl Path {
    pub fn idempotent(l: GlWeight) -> Self {
        Self { source: l, ops: Vec::new() }
    }

    pub fn target(&self) -> Option<GlWeight> {
        let mut l = self.source.clone();
        for op in &self.ops {
            l = op.shift(&l)?;
        }
        Some(l)
    }

    pub fn degree(&self) -> usize {
        self.source.iter().sum()
    }

    pub fn apply(&self, space: Space, v: &TVec) -> Result<TVec> {
        let mut cur = v.clone();
        for op in &self.ops {
            if cur.is_empty() {
                break;
            }
            cur = op.apply(space, &cur)?;
        }
        Ok(cur)
    }
}

/// An element of `⊕_d S_q(n,d)` as a formal combination of monomials in the
/// divided powers, evaluated exactly on tensor space on demand.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurElement {
    terms: BTreeMap<Path, LaurentQ>,
}

impl SchurElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(p: Path, c: LaurentQ) -> Self {
        let mut out = Self::zero();
        out.add_term(p, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Path, LaurentQ)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (p, c) in it {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, p: Path, c: LaurentQ) {
        if c.is_zero() || p.target().is_none() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &LaurentQ)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&LaurentQ::integer(-1)))
    }

    /// `self * o`: `o` acts first; monomials with mismatched weights vanish.
    pub fn mul(&self, o: &Self) -> Self {
        let mut by_source: BTreeMap<&GlWeight, Vec<(&Path, &LaurentQ)>> = BTreeMap::new();
        for (p, c) in &self.terms {
            by_source.entry(&p.source).or_default().push((p, c));
        }
        let mut out = Self::zero();
        for (q, d) in &o.terms {
            let Some(t) = q.target() else { continue };
            for (p, c) in by_source.get(&t).into_iter().flatten() {
                let mut ops = q.ops.clone();
                ops.extend_from_slice(&p.ops);
                out.add_term(Path { source: q.source.clone(), ops }, *c * d);
            }
        }
        out
    }

    /// Source weights that carry at least one monomial.
    pub fn sources(&self) -> Vec<GlWeight> {
        let mut out: Vec<GlWeight> = self.terms.keys().map(|p| p.source.clone()).collect();
        out.dedup();
        out
    }

    /// Degrees `d` with a nonzero block candidate.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().map(Path::degree).collect();
        out.sort();
        out.dedup();
        out
    }

    /// `self` applied to a vector of weight `l`.
    pub fn apply(&self, space: Space, l: &[usize], v: &TVec) -> Result<TVec> {
        let mut out = TVec::new();
        for (p, c) in self.terms.range(Path::idempotent(l.to_vec())..) {
            if p.source != l {
                break;
            }
            add_vec(&mut out, &scale_vec(&p.apply(space, v)?, c));
        }
        Ok(out)
    }

    /// Matrix of `self` on every weight space it touches, as columns keyed by
    /// `(source weight, basis vector)`.
    pub fn images(&self, space: Space) -> Result<Vec<((GlWeight, Seq), TVec)>> {
        let mut out = Vec::new();
        for l in self.sources() {
            for s in space.basis(&l)? {
                let v = self.apply(space, &l, &basis_vec(s.clone()))?;
                out.push(((l.clone(), s), v));
            }
        }
        Ok(out)
    }

    /// The degree `d` part as a matrix.
    pub fn block(&self, space: Space, d: usize) -> Result<SchurMatrix> {
        let mut cols = Vec::new();
        for l in self.sources().into_iter().filter(|l| l.iter().sum::<usize>() == d) {
            for s in space.basis(&l)? {
                let v = self.apply(space, &l, &basis_vec(s.clone()))?;
                cols.push((s, v));
            }
        }
        Ok(SchurMatrix::from_columns(cols))
    }

    /// All blocks, keyed by degree.
    pub fn blocks(&self, space: Space) -> Result<BTreeMap<usize, SchurMatrix>> {
        self.degrees().into_iter().map(|d| self.block(space, d).map(|m| (d, m))).collect()
    }

    /// Exact vanishing of the operator on `space`.
    pub fn vanishes(&self, space: Space) -> Result<bool> {
        for l in self.sources() {
            for s in space.basis(&l)? {
                if !self.apply(space, &l, &basis_vec(s))?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn equals(&self, o: &Self, space: Space) -> Result<bool> {
        self.sub(o).vanishes(space)
    }
}
