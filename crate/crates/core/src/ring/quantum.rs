//! Quantum integers, factorials, binomials and the two-variable bracket.

use num::BigRational;

use super::bilaurent::BiLaurent;
use super::laurent::LaurentQ;
use super::ratfun::RatFun;
use crate::error::{Result, SkeinError};

/// `[m] = q^{m-1} + q^{m-3} + ... + q^{1-m}`, odd in `m`.
pub fn quantum_int(m: i32) -> LaurentQ {
    if m < 0 {
        return -quantum_int(-m);
    }
    LaurentQ::from_terms((0..m).map(|t| (m - 1 - 2 * t, BigRational::from_integer(1.into()))))
}

/// `[k]! = [1][2]...[k]`
pub fn quantum_factorial(k: u32) -> LaurentQ {
    (1..=k as i32).fold(LaurentQ::one(), |acc, m| &acc * &quantum_int(m))
}

/// `[k]! / ([k-j]! [j]!)` for `k >= j >= 0`.
pub fn quantum_binom(k: i32, j: i32) -> Result<LaurentQ> {
    if j < 0 || k < j {
        return Err(SkeinError::InvalidArgs(format!("quantum_binom({k},{j}) needs k >= j >= 0")));
    }
    Ok(qbin(k, j as u32))
}

/// Binomial with arbitrary integer top: `[m][m-1]...[m-t+1] / [t]!`.
pub fn qbin(m: i32, t: u32) -> LaurentQ {
    let num = (0..t as i32).fold(LaurentQ::one(), |acc, s| &acc * &quantum_int(m - s));
    num.exact_div(&quantum_factorial(t)).expect("quantum binomials are Laurent polynomials")
}

/// `q - q^{-1}`
pub fn q_minus_qinv() -> BiLaurent {
    &BiLaurent::mono(0, 1) - &BiLaurent::mono(0, -1)
}

/// `(a^n q^{-k} - a^{-n} q^k) / (q - q^{-1})`; specializes at `a = q^N` to `[nN - k]`.
pub fn bracket(n: i32, k: i32) -> RatFun {
    let num = &BiLaurent::mono(n, -k) - &BiLaurent::mono(-n, k);
    RatFun::new(num, q_minus_qinv()).expect("q - q^{-1} is nonzero")
}

/// How a relation coefficient written `[a^n, k]` is turned into a bracket.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// `[a^n, k]` means `bracket(n, -k)`: the reading under which every relation holds.
    #[default]
    Consistent,
    /// `[a^n, k]` means `bracket(n, k)` verbatim.
    Literal,
}

impl SignConvention {
    pub fn from_flip(flip: bool) -> Self {
        if flip {
            Self::Literal
        } else {
            Self::Consistent
        }
    }
}

/// The relation coefficient written `[a^n, k]`, read under `conv`.
pub fn relation_bracket(n: i32, k: i32, conv: SignConvention) -> RatFun {
    match conv {
        SignConvention::Consistent => bracket(n, -k),
        SignConvention::Literal => bracket(n, k),
    }
}

/// `[a] = (a - a^{-1}) / (q - q^{-1})`, the HOMFLY-PT value of the unknot.
pub fn unknot_homfly() -> RatFun {
    bracket(1, 0)
}

/// Loop value written `[a^2, -1] + 1`.
pub fn delta_with(conv: SignConvention) -> RatFun {
    &relation_bracket(2, -1, conv) + &RatFun::one()
}

/// `(a^2 q^{-1} - a^{-2} q) / (q - q^{-1}) + 1`, the Kauffman value of the unknot.
pub fn delta() -> RatFun {
    delta_with(SignConvention::Consistent)
}
