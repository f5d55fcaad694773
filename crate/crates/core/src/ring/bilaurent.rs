use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigRational, One, Zero};

use super::laurent::LaurentQ;
use super::upoly::{Poly2, UPoly};
use crate::error::{Result, SkeinError};

/// A Laurent polynomial in `(a, q)`; keys are `(a-exponent, q-exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i32, i32), BigRational>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn integer(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), 0, 0)
    }

    /// `c * a^i * q^j`
    pub fn monomial(c: BigRational, i: i32, j: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn mono(i: i32, j: i32) -> Self {
        Self::monomial(BigRational::one(), i, j)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), BigRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn from_laurent(p: &LaurentQ) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((0, e), c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Number of nonzero terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: i32, j: i32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lex-largest term on `(a-degree, q-degree)`.
    pub fn leading(&self) -> Option<((i32, i32), &BigRational)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, k: (i32, i32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Multiplies by `a^i q^j`.
    pub fn shift(&self, i: i32, j: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|((x, y), v)| ((x + i, y + j), v.clone())).collect(),
        }
    }

    /// Substitutes `a -> a^{-1}, q -> q^{-1}`.
    pub fn invert_vars(&self) -> Self {
        Self { terms: self.terms.iter().map(|((x, y), v)| ((-x, -y), v.clone())).collect() }
    }

    /// Substitutes `a -> q^n`.
    pub fn specialize_a(&self, n: i32) -> LaurentQ {
        LaurentQ::from_terms(self.terms.iter().map(|((x, y), v)| (x * n + y, v.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Smallest a-exponent and smallest q-exponent, or `(0,0)` for zero.
    pub fn min_exps(&self) -> (i32, i32) {
        let i = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let j = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (i, j)
    }

    /// Writes `self = a^i q^j * P` with `P` a polynomial divisible by neither variable.
    pub(crate) fn to_poly2(&self) -> ((i32, i32), Poly2) {
        let (i0, j0) = self.min_exps();
        let mut rows: BTreeMap<i32, Vec<(i32, BigRational)>> = BTreeMap::new();
        for ((x, y), v) in &self.terms {
            rows.entry(x - i0).or_default().push((y - j0, v.clone()));
        }
        let top = rows.keys().next_back().copied().unwrap_or(-1);
        let mut c = Vec::with_capacity((top + 1) as usize);
        for r in 0..=top {
            let p = match rows.get(&r) {
                None => UPoly::zero(),
                Some(t) => {
                    let hi = t.iter().map(|x| x.0).max().unwrap();
                    let mut v = vec![BigRational::zero(); (hi + 1) as usize];
                    for (e, x) in t {
                        v[*e as usize] = x.clone();
                    }
                    UPoly::new(v)
                }
            };
            c.push(p);
        }
        ((i0, j0), Poly2::new(c))
    }

    pub(crate) fn from_poly2(shift: (i32, i32), p: &Poly2) -> Self {
        let mut out = Self::zero();
        for (x, row) in p.c.iter().enumerate() {
            for (y, v) in row.coeffs().iter().enumerate() {
                out.add_term((shift.0 + x as i32, shift.1 + y as i32), v.clone());
            }
        }
        out
    }

    /// Exact quotient in the Laurent ring, or `NotDivisible`.
    pub fn exact_div(&self, d: &BiLaurent) -> Result<BiLaurent> {
        if d.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sp, sd) = (self.min_exps(), d.min_exps());
        // After clearing monomials both are polynomials and the quotient must be one too.
        let mut r = self.shift(-sp.0, -sp.1);
        let dd = d.shift(-sd.0, -sd.1);
        let (lk, lc) = dd.leading().map(|(k, c)| (k, c.clone())).unwrap();
        let inv = lc.recip();
        let mut quo = Self::zero();
        while let Some((k, c)) = r.leading().map(|(k, c)| (k, c.clone())) {
            let (x, y) = (k.0 - lk.0, k.1 - lk.1);
            if x < 0 || y < 0 {
                return Err(SkeinError::NotDivisible);
            }
            let f = c * &inv;
            r -= &dd.shift(x, y).scale(&f);
            quo.add_term((x, y), f);
        }
        Ok(quo.shift(sp.0 - sd.0, sp.1 - sd.1))
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms.iter().rev() {
            super::write_term(f, c, &[("a", *i), ("q", *j)], first)?;
            first = false;
        }
        Ok(())
    }
}

impl AddAssign<&BiLaurent> for BiLaurent {
    fn add_assign(&mut self, rhs: &BiLaurent) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&BiLaurent> for BiLaurent {
    fn sub_assign(&mut self, rhs: &BiLaurent) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl Add<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

impl Mul<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Add for BiLaurent {
    type Output = BiLaurent;
    fn add(mut self, rhs: BiLaurent) -> BiLaurent {
        self += &rhs;
        self
    }
}

impl Sub for BiLaurent {
    type Output = BiLaurent;
    fn sub(mut self, rhs: BiLaurent) -> BiLaurent {
        self -= &rhs;
        self
    }
}

impl Mul for BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: BiLaurent) -> BiLaurent {
        &self * &rhs
    }
}

impl Neg for BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bl(t: &[((i32, i32), i64)]) -> BiLaurent {
        BiLaurent::from_terms(t.iter().map(|&(k, c)| (k, BigRational::from_integer(c.into()))))
    }

    #[test]
    fn quantum_two_by_division() {
        let p = bl(&[((0, 2), 1), ((0, -2), -1)]);
        let d = bl(&[((0, 1), 1), ((0, -1), -1)]);
        assert_eq!(p.exact_div(&d).unwrap(), bl(&[((0, 1), 1), ((0, -1), 1)]));
        assert_eq!(BiLaurent::zero().exact_div(&d).unwrap(), BiLaurent::zero());
        let bad = bl(&[((0, 2), 1), ((0, 0), 1)]);
        assert_eq!(bad.exact_div(&d), Err(SkeinError::NotDivisible));
    }

    #[test]
    fn mixed_division_round_trip() {
        let x = bl(&[((1, -1), 2), ((-2, 3), -1), ((0, 0), 5)]);
        let y = bl(&[((1, 0), 1), ((-1, 1), -3)]);
        let p = &x * &y;
        assert_eq!(p.exact_div(&y).unwrap(), x);
        assert_eq!(p.exact_div(&x).unwrap(), y);
    }

    #[test]
    fn poly2_round_trip() {
        let x = bl(&[((1, -1), 2), ((-2, 3), -1), ((0, 0), 5)]);
        let (s, p) = x.to_poly2();
        assert_eq!(BiLaurent::from_poly2(s, &p), x);
    }
}
