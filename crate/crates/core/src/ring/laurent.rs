use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigRational, One, Zero};

use super::upoly::UPoly;
use crate::error::{Result, SkeinError};

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn integer(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), 0)
    }

    /// `c * q^e`
    pub fn monomial(c: BigRational, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Number of nonzero terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect() }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Splits into `q^shift * p(q)` with `p` an ordinary polynomial not divisible by `q`.
    pub(crate) fn to_upoly(&self) -> (i32, UPoly) {
        let Some(lo) = self.min_exp() else {
            return (0, UPoly::zero());
        };
        let hi = self.max_exp().unwrap();
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, v) in &self.terms {
            c[(e - lo) as usize] = v.clone();
        }
        (lo, UPoly::new(c))
    }

    pub(crate) fn from_upoly(shift: i32, p: &UPoly) -> Self {
        Self::from_terms(
            p.coeffs().iter().enumerate().map(|(i, c)| (shift + i as i32, c.clone())),
        )
    }

    /// Exact quotient in the Laurent ring, or `NotDivisible`.
    pub fn exact_div(&self, d: &LaurentQ) -> Result<LaurentQ> {
        if d.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sp, p) = self.to_upoly();
        let (sd, dp) = d.to_upoly();
        let (quo, rem) = p.div_rem(&dp);
        if !rem.is_zero() {
            return Err(SkeinError::NotDivisible);
        }
        Ok(Self::from_upoly(sp - sd, &quo))
    }

    /// Evaluates at a rational point `q = x` (x must be nonzero when negative exponents occur).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num::pow(x.clone(), *e as usize)
            } else {
                num::pow(x.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            super::write_term(f, c, &[("q", *e)], first)?;
            first = false;
        }
        Ok(())
    }
}

impl Add<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentQ {
    type Output = LaurentQ;
    fn add(mut self, rhs: LaurentQ) -> LaurentQ {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentQ {
    type Output = LaurentQ;
    fn sub(mut self, rhs: LaurentQ) -> LaurentQ {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

impl Mul<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: LaurentQ) -> LaurentQ {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lq(t: &[(i32, i64)]) -> LaurentQ {
        LaurentQ::from_terms(t.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))))
    }

    #[test]
    fn exact_division() {
        let p = lq(&[(2, 1), (-2, -1)]);
        let d = lq(&[(1, 1), (-1, -1)]);
        assert_eq!(p.exact_div(&d).unwrap(), lq(&[(1, 1), (-1, 1)]));
        assert_eq!(LaurentQ::zero().exact_div(&d).unwrap(), LaurentQ::zero());
        assert_eq!(lq(&[(2, 1), (0, 1)]).exact_div(&d), Err(SkeinError::NotDivisible));
        assert_eq!(p.exact_div(&LaurentQ::zero()), Err(SkeinError::DivisionByZero));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = lq(&[(3, 2), (0, 1)]);
        let y = lq(&[(3, 2)]);
        let d = &x - &y;
        assert_eq!(d, LaurentQ::one());
        assert_eq!(d.len(), 1);
    }
}
