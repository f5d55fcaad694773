//! Dense polynomial helpers used for exact division and gcd computations.
//!
//! `UPoly` is a polynomial in one variable over Q; `Poly2` is a polynomial in
//! `a` whose coefficients are `UPoly`s in `q`.

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly {
    c: Vec<BigRational>,
}

impl UPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, x: &BigRational) -> Self {
        Self::new(self.c.iter().map(|v| v * x).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::new(c)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let mut q = vec![BigRational::zero(); self.c.len() - dd];
        let inv = d.lc().recip();
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[k + j] -= &f * dj;
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().recip())
    }

    /// Monic gcd over Q, computed by a primitive remainder sequence over Z.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (zprim(&self.c), zprim(&o.c));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return Self::new(vec![BigRational::one()]);
            }
            let r = zprim(&zprem(&a, &b));
            a = b;
            b = r;
        }
        Self::new(a.into_iter().map(BigRational::from_integer).collect()).monic()
    }
}

/// Integer primitive part of a rational coefficient vector, trimmed, positive leading term.
fn zprim(c: &[BigRational]) -> Vec<BigInt> {
    let den = c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut v: Vec<BigInt> = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    let g = if v.last().is_some_and(|x| x.is_negative()) { -g } else { g };
    v.iter().map(|x| x / &g).collect()
}

/// `lc(b)^(deg a - deg b + 1) a mod b` over Z; `a` at least as long as `b`.
fn zprem(a: &[BigInt], b: &[BigInt]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= bj * &lr;
        }
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r.into_iter().map(BigRational::from_integer).collect()
}

/// Polynomial in `a` with coefficients in Q[q]; index = power of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly2 {
    pub c: Vec<UPoly>,
}

impl Poly2 {
    pub fn new(mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    fn lc(&self) -> &UPoly {
        self.c.last().unwrap()
    }

    fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.degree() == Some(0) {
                break;
            }
        }
        g
    }

    fn div_upoly(&self, d: &UPoly) -> Self {
        Self::new(
            self.c
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn scale_upoly(&self, d: &UPoly) -> Self {
        Self::new(self.c.iter().map(|x| x.mul(d)).collect())
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_upoly(&self.content())
    }

    /// Pseudo-remainder of `self` by `d` with respect to `a`.
    fn prem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dd = d.degree();
        let lcd = d.lc().clone();
        while !r.is_zero() && r.degree() >= dd {
            let k = r.degree() - dd;
            let lcr = r.lc().clone();
            let mut next = r.scale_upoly(&lcd).c;
            for (j, dj) in d.c.iter().enumerate() {
                next[k + j] = next[k + j].sub(&dj.mul(&lcr));
            }
            r = Self::new(next);
        }
        r
    }

    /// Sufficient test for a gcd free of `a`: at a point `q0` where neither leading
    /// coefficient vanishes, a common factor of positive `a`-degree survives.
    fn coprime_in_a(&self, o: &Self) -> bool {
        for q0 in 2..6i64 {
            let x = BigRational::from_integer(q0.into());
            let (p, r) = (self.at_q(&x), o.at_q(&x));
            if p.degree() != Some(self.degree()) || r.degree() != Some(o.degree()) {
                continue;
            }
            return p.gcd(&r).degree() == Some(0);
        }
        false
    }

    fn at_q(&self, x: &BigRational) -> UPoly {
        UPoly::new(self.c.iter().map(|u| u.eval(x)).collect())
    }

    /// Greatest common divisor up to a rational scalar.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        // Free of `a` on one side: only the contents interact.
        for (x, y) in [(self, o), (o, self)] {
            if x.degree() == 0 {
                let mut g = x.c[0].clone();
                for c in &y.c {
                    if g.degree() == Some(0) {
                        break;
                    }
                    g = g.gcd(c);
                }
                return Self::new(vec![g]);
            }
        }
        let cont = self.content().gcd(&o.content());
        if self.coprime_in_a(o) {
            return Self::new(vec![cont]);
        }
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale_upoly(&cont)
    }
}
