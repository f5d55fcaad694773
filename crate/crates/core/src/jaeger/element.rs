use std::collections::BTreeMap;

use crate::diagram::{OrientedTangleWord, TangleWord};
use crate::error::Result;
use crate::ring::RatFun;

/// A finite formal combination of diagrams with no zero coefficients,
/// iterated in the diagrams' total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, RatFun>,
}

/// Unoriented diagrams: elements of the BMW algebra before relations.
pub type BmwElement = LinComb<TangleWord>;
/// Oriented diagrams: elements of the skein algebra before relations.
pub type SkeinElement = LinComb<OrientedTangleWord>;

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(k: K, c: RatFun) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &K) -> RatFun {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatFun::integer(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Bilinear extension of a partial product on diagrams (`None` means zero).
    pub fn product_with<F>(&self, o: &Self, mut f: F) -> Result<Self>
    where
        F: FnMut(&K, &K) -> Result<Option<K>>,
    {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                if let Some(k) = f(k1, k2)? {
                    out.add_term(k, c1 * c2);
                }
            }
        }
        Ok(out)
    }
}

impl BmwElement {
    pub fn diagram(w: TangleWord) -> Self {
        Self::term(w, RatFun::one())
    }

    /// `self * o`: `self` stacked on top of `o`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.product_with(o, |x, y| x.compose(y).map(Some))
    }
}

impl SkeinElement {
    pub fn diagram(w: OrientedTangleWord) -> Self {
        Self::term(w, RatFun::one())
    }

    /// `self * o` with orientation mismatches giving zero.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.product_with(o, |x, y| x.compose(y))
    }
}
