use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One};

use super::bilaurent::BiLaurent;
use super::laurent::LaurentQ;
use crate::error::{Result, SkeinError};

/// An element of Q(a, q) stored as a reduced fraction of Laurent polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit, `den` has all minimal exponents
/// equal to zero, and the lex-leading coefficient of `den` is `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: BiLaurent,
    den: BiLaurent,
}

impl RatFun {
    pub fn new(num: BiLaurent, den: BiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: BiLaurent, den: BiLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        if g.len() > 1 {
            return Self::reduced(num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"));
        }
        Self::reduced(num, den)
    }

    /// Normalizes a fraction already known to be in lowest terms.
    fn reduced(num: BiLaurent, den: BiLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (i, j) = den.min_exps();
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap().recip();
        Self { num: num.shift(-i, -j).scale(&lc), den: den.shift(-i, -j).scale(&lc) }
    }

    pub fn zero() -> Self {
        Self { num: BiLaurent::zero(), den: BiLaurent::one() }
    }

    pub fn one() -> Self {
        Self { num: BiLaurent::one(), den: BiLaurent::one() }
    }

    pub fn integer(c: i64) -> Self {
        Self { num: BiLaurent::integer(c), den: BiLaurent::one() }
    }

    pub fn rational(c: BigRational) -> Self {
        Self { num: BiLaurent::monomial(c, 0, 0), den: BiLaurent::one() }
    }

    /// `a^i q^j`
    pub fn mono(i: i32, j: i32) -> Self {
        Self { num: BiLaurent::mono(i, j), den: BiLaurent::one() }
    }

    pub fn from_bilaurent(p: BiLaurent) -> Self {
        Self { num: p, den: BiLaurent::one() }
    }

    pub fn from_laurent(p: &LaurentQ) -> Self {
        Self::from_bilaurent(BiLaurent::from_laurent(p))
    }

    pub fn num(&self) -> &BiLaurent {
        &self.num
    }

    pub fn den(&self) -> &BiLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the Laurent polynomial when the denominator is `1`.
    pub fn as_bilaurent(&self) -> Option<&BiLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok(Self { num: base.num.pow(k.unsigned_abs()), den: base.den.pow(k.unsigned_abs()) })
    }

    /// Substitutes `a -> a^{-1}, q -> q^{-1}`.
    pub fn invert_vars(&self) -> Self {
        Self::canonical(self.num.invert_vars(), self.den.invert_vars())
    }

    /// Substitutes `a = q^n` and returns the resulting Laurent polynomial.
    pub fn specialize_a(&self, n: i32) -> Result<LaurentQ> {
        let d = self.den.specialize_a(n);
        if d.is_zero() {
            return Err(SkeinError::NotPolynomial);
        }
        self.num
            .specialize_a(n)
            .exact_div(&d)
            .map_err(|_| SkeinError::NotPolynomial)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if self.is_zero() || c.is_one() {
            return self.clone();
        }
        if num::Zero::is_zero(c) {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }
}

/// Polynomial gcd of two Laurent polynomials, up to a unit.
fn poly_gcd(x: &BiLaurent, y: &BiLaurent) -> BiLaurent {
    if x.len() == 1 || y.len() == 1 {
        return BiLaurent::one();
    }
    let (_, px) = x.to_poly2();
    let (_, py) = y.to_poly2();
    BiLaurent::from_poly2((0, 0), &px.gcd(&py))
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Both operands are reduced, so only `gcd(d1, d2)` can cancel.
        let g = poly_gcd(&self.den, &rhs.den);
        if g.len() == 1 {
            return RatFun::reduced(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den);
        }
        let (d1, d2) = (self.den.exact_div(&g).expect("gcd divides"), rhs.den.exact_div(&g).expect("gcd divides"));
        let t = &self.num * &d2 + &rhs.num * &d1;
        if t.is_zero() {
            return RatFun::zero();
        }
        let h = poly_gcd(&t, &g);
        let (t, g) = if h.len() > 1 { (t.exact_div(&h).expect("gcd divides"), g.exact_div(&h).expect("gcd divides")) } else { (t, g) };
        RatFun::reduced(t, &(&d1 * &d2) * &g)
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_bilaurent(&self.num * &rhs.num);
        }
        // Cross-cancel: `gcd(n1, d2)` and `gcd(n2, d1)` are the only common factors.
        let cancel = |n: &BiLaurent, d: &BiLaurent| {
            let g = poly_gcd(n, d);
            if g.len() > 1 {
                (n.exact_div(&g).expect("gcd divides"), d.exact_div(&g).expect("gcd divides"))
            } else {
                (n.clone(), d.clone())
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFun::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(it: I) -> RatFun {
        it.fold(RatFun::zero(), |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmq() -> BiLaurent {
        &BiLaurent::mono(0, 1) - &BiLaurent::mono(0, -1)
    }

    #[test]
    fn reduces_common_factor() {
        let p = &BiLaurent::mono(0, 2) - &BiLaurent::mono(0, -2);
        let r = RatFun::new(p, qmq()).unwrap();
        let expect = &BiLaurent::mono(0, 1) + &BiLaurent::mono(0, -1);
        assert_eq!(r.as_bilaurent(), Some(&expect));
    }

    #[test]
    fn irreducible_fraction_is_kept() {
        let am = &BiLaurent::mono(1, 0) - &BiLaurent::mono(-1, 0);
        let r = RatFun::new(am, qmq()).unwrap();
        assert_eq!(r.den().min_exps(), (0, 0));
        assert_eq!(r.den().len(), 2);
        assert!(r.as_bilaurent().is_none());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFun::new(BiLaurent::one(), BiLaurent::zero()), Err(SkeinError::DivisionByZero));
        assert_eq!(RatFun::one().checked_div(&RatFun::zero()), Err(SkeinError::DivisionByZero));
    }

    #[test]
    fn scalar_multiples_agree() {
        let x = RatFun::new(BiLaurent::integer(2), qmq().scale(&BigRational::from_integer(4.into())))
            .unwrap();
        let y = RatFun::new(BiLaurent::one(), qmq().scale(&BigRational::from_integer(2.into())))
            .unwrap();
        assert_eq!(x, y);
    }
}
