use std::collections::BTreeMap;

use super::tensor::{add_into, add_vec, apply_divided, basis_vec, content, scale_vec, weights, GlWeight, Seq, TVec};
use crate::error::{Result, SkeinError};
use crate::ring::LaurentQ;

/// Default bound on the dimension of a fully enumerated tensor space or weight space.
pub const DEFAULT_MAX_DIM: usize = 4096;

/// Reads `SKEIN_FORGE_MAX_DIM`, falling back to [`DEFAULT_MAX_DIM`].
pub fn max_dim_from_env() -> usize {
    std::env::var("SKEIN_FORGE_MAX_DIM").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}

/// Exact sparse matrix on `V^{⊗d}`, stored by columns; empty columns are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurMatrix {
    cols: BTreeMap<Seq, TVec>,
}

impl SchurMatrix {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_columns<I: IntoIterator<Item = (Seq, TVec)>>(it: I) -> Self {
        Self { cols: it.into_iter().filter(|(_, v)| !v.is_empty()).collect() }
    }

    /// Diagonal projection onto the given basis tensors.
    pub fn projection<'a, I: IntoIterator<Item = &'a Seq>>(basis: I) -> Self {
        Self::from_columns(basis.into_iter().map(|s| (s.clone(), basis_vec(s.clone()))))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn columns(&self) -> impl Iterator<Item = (&Seq, &TVec)> {
        self.cols.iter()
    }

    pub fn entry(&self, row: &Seq, col: &Seq) -> LaurentQ {
        self.cols.get(col).and_then(|v| v.get(row)).cloned().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.cols.values().map(|v| v.len()).sum()
    }

    pub fn apply(&self, v: &TVec) -> TVec {
        let mut out = TVec::new();
        for (s, c) in v {
            if let Some(col) = self.cols.get(s) {
                add_vec(&mut out, &scale_vec(col, c));
            }
        }
        out
    }

    /// `self * rhs`
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_columns(rhs.cols.iter().map(|(s, v)| (s.clone(), self.apply(v))))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut cols = self.cols.clone();
        for (s, v) in &rhs.cols {
            let e = cols.entry(s.clone()).or_default();
            add_vec(e, v);
            if e.is_empty() {
                cols.remove(s);
            }
        }
        Self { cols }
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        Self::from_columns(self.cols.iter().map(|(s, v)| (s.clone(), scale_vec(v, c))))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&LaurentQ::integer(-1)))
    }

    pub fn trace(&self) -> LaurentQ {
        let mut t = LaurentQ::zero();
        for (s, v) in &self.cols {
            if let Some(x) = v.get(s) {
                t += x;
            }
        }
        t
    }

    /// Restriction `P self P` to the span of `basis`.
    pub fn restrict(&self, basis: &[Seq]) -> Self {
        let keep: std::collections::BTreeSet<&Seq> = basis.iter().collect();
        Self::from_columns(self.cols.iter().filter(|(s, _)| keep.contains(s)).map(|(s, v)| {
            let mut w = TVec::new();
            for (r, x) in v {
                if keep.contains(r) {
                    add_into(&mut w, r.clone(), x.clone());
                }
            }
            (s.clone(), w)
        }))
    }
}

/// `V^{⊗d}` for `gl_n` with its full basis.
#[derive(Clone, Debug)]
pub struct TensorContext {
    pub n: usize,
    pub d: usize,
    basis: Vec<Seq>,
}

/// One factor of a product in `S_q(n,d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symbol {
    /// `E_{+i}^{(κ)}` when `raise`, else `E_{-i}^{(κ)}`.
    E { i: usize, raise: bool, kappa: u32 },
    /// `1_λ`; zero when `λ` is not a weight of `V^{⊗d}`.
    Idem(GlWeight),
}

pub fn build_rep(n: usize, d: usize) -> Result<TensorContext> {
    build_rep_bounded(n, d, max_dim_from_env())
}

pub fn build_rep_bounded(n: usize, d: usize, bound: usize) -> Result<TensorContext> {
    if n == 0 {
        return Err(SkeinError::InvalidArgs("rank must be positive".into()));
    }
    let dim = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if dim > bound as u128 {
        return Err(SkeinError::TooLarge { dim: dim.min(usize::MAX as u128) as usize, bound });
    }
    let mut basis = vec![Seq::new()];
    for _ in 0..d {
        basis = basis
            .into_iter()
            .flat_map(|s| {
                (0..n as u8).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    basis.sort();
    Ok(TensorContext { n, d, basis })
}

impl TensorContext {
    pub fn basis(&self) -> &[Seq] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn weights(&self) -> Vec<GlWeight> {
        weights(self.n, self.d)
    }

    pub fn identity(&self) -> SchurMatrix {
        SchurMatrix::projection(&self.basis)
    }

    pub fn idempotent(&self, l: &[usize]) -> SchurMatrix {
        if l.len() != self.n {
            return SchurMatrix::zero();
        }
        SchurMatrix::projection(self.basis.iter().filter(|s| content(s, self.n) == l))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(SkeinError::BadIndex(i as i32));
        }
        Ok(())
    }

    pub fn generator(&self, i: usize, raise: bool) -> Result<SchurMatrix> {
        self.divided_power(i, raise, 1)
    }

    /// `E_{±i}^{(κ)}` with every entry divided exactly by `[κ]!`.
    pub fn divided_power(&self, i: usize, raise: bool, kappa: u32) -> Result<SchurMatrix> {
        self.check_index(i)?;
        let mut cols = Vec::with_capacity(self.basis.len());
        for s in &self.basis {
            cols.push((s.clone(), apply_divided(&basis_vec(s.clone()), i, raise, kappa)?));
        }
        Ok(SchurMatrix::from_columns(cols))
    }

    pub fn symbol(&self, x: &Symbol) -> Result<SchurMatrix> {
        match x {
            Symbol::E { i, raise, kappa } => self.divided_power(*i, *raise, *kappa),
            Symbol::Idem(l) => Ok(self.idempotent(l)),
        }
    }

    /// The product `x_1 x_2 ... x_k`; `x_k` acts first.
    pub fn eval_word(&self, word: &[Symbol]) -> Result<SchurMatrix> {
        let mut acc = self.identity();
        for x in word.iter().rev() {
            acc = self.symbol(x)?.mul(&acc);
        }
        Ok(acc)
    }
}
