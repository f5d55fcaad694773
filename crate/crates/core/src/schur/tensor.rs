//! Vectors in `V^{⊗d}` or `(∧_q V)^{⊗N}` and the action of `E_{±i}` through the coproduct
//! `Δ(E_i) = E_i ⊗ K_i K_{i+1}^{-1} + 1 ⊗ E_i`,
//! `Δ(E_{-i}) = E_{-i} ⊗ 1 + K_i^{-1} K_{i+1} ⊗ E_{-i}`.

use std::collections::BTreeMap;

use crate::error::{Result, SkeinError};
use crate::ring::{quantum_factorial, LaurentQ};

/// A basis tensor `v_{j_1} ⊗ ... ⊗ v_{j_d}`, stored with 0-based letters.
pub type Seq = Vec<u8>;

/// A finite combination of basis tensors without zero entries.
pub type TVec = BTreeMap<Seq, LaurentQ>;

/// A `gl_n` weight `λ`; `λ_j` counts how often letter `j` occurs.
pub type GlWeight = Vec<usize>;

pub fn content(s: &[u8], n: usize) -> GlWeight {
    let mut w = vec![0; n];
    for &x in s {
        w[x as usize] += 1;
    }
    w
}

/// `λ̄_i = λ_i - λ_{i+1}` for 1-based `i`.
pub fn bar(l: &[usize], i: usize) -> i32 {
    l[i - 1] as i32 - l[i] as i32
}

/// `d! / (λ_1! ... λ_n!)`
pub fn weight_dim(l: &[usize]) -> u128 {
    let d: usize = l.iter().sum();
    let mut out: u128 = 1;
    let mut k = 0u128;
    for &x in l {
        for j in 1..=x as u128 {
            k += 1;
            out = out * k / j;
        }
    }
    debug_assert_eq!(k, d as u128);
    out
}

/// All sequences of content `l`, in increasing lexicographic order.
pub fn weight_basis(l: &[usize]) -> Vec<Seq> {
    let mut out = Vec::new();
    let mut rest = l.to_vec();
    let d: usize = l.iter().sum();
    let mut cur = Vec::with_capacity(d);
    fill(&mut rest, &mut cur, d, &mut out);
    out
}

fn fill(rest: &mut [usize], cur: &mut Seq, d: usize, out: &mut Vec<Seq>) {
    if cur.len() == d {
        out.push(cur.clone());
        return;
    }
    for j in 0..rest.len() {
        if rest[j] > 0 {
            rest[j] -= 1;
            cur.push(j as u8);
            fill(rest, cur, d, out);
            cur.pop();
            rest[j] += 1;
        }
    }
}

/// All weights of `n` parts summing to `d`.
pub fn weights(n: usize, d: usize) -> Vec<GlWeight> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in weights(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn add_into(acc: &mut TVec, s: Seq, c: LaurentQ) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&s) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                acc.remove(&s);
            }
        }
        None => {
            acc.insert(s, c);
        }
    }
}

pub fn scale_vec(v: &TVec, c: &LaurentQ) -> TVec {
    if c.is_zero() {
        return TVec::new();
    }
    v.iter().map(|(s, x)| (s.clone(), x * c)).collect()
}

pub fn add_vec(acc: &mut TVec, v: &TVec) {
    for (s, x) in v {
        add_into(acc, s.clone(), x.clone());
    }
}

/// How a tensor factor is stored: a single letter of `V`, or a subset of letters
/// (a basis vector of `∧_q V`) as a bitmask.
pub trait Encoding {
    fn has(x: u8, j: u8) -> bool;
    fn moved(x: u8, from: u8, to: u8) -> u8;
}

/// Factors of `V^{⊗d}`.
pub struct Letters;

/// Factors of `(∧_q V)^{⊗N}`.
pub struct Subsets;

impl Encoding for Letters {
    fn has(x: u8, j: u8) -> bool {
        x == j
    }
    fn moved(_: u8, _: u8, to: u8) -> u8 {
        to
    }
}

impl Encoding for Subsets {
    fn has(x: u8, j: u8) -> bool {
        x >> j & 1 == 1
    }
    fn moved(x: u8, from: u8, to: u8) -> u8 {
        (x & !(1 << from)) | 1 << to
    }
}

/// `E_i` (raise: letter `i` becomes `i-1` in 0-based form) or `E_{-i}` on one tensor.
fn generator_on<En: Encoding>(s: &[u8], i: usize, raise: bool, out: &mut TVec, c: &LaurentQ) {
    let (lo, hi) = ((i - 1) as u8, i as u8);
    let (from, to) = if raise { (hi, lo) } else { (lo, hi) };
    // Exponent of `K_i K_{i+1}^{-1}` on one factor.
    let k = |x: u8| En::has(x, lo) as i32 - En::has(x, hi) as i32;
    let mut emit = |t: usize, e: i32| {
        if En::has(s[t], from) && !En::has(s[t], to) {
            let mut u = s.to_vec();
            u[t] = En::moved(s[t], from, to);
            add_into(out, u, c * &LaurentQ::q_pow(e));
        }
    };
    let mut e: i32 = 0;
    if raise {
        for t in (0..s.len()).rev() {
            emit(t, e);
            e += k(s[t]);
        }
    } else {
        for (t, x) in s.iter().enumerate() {
            emit(t, e);
            e -= k(*x);
        }
    }
}

/// `E_{±i}` applied to `v` in the module selected by `En`.
pub fn apply_generator_in<En: Encoding>(v: &TVec, i: usize, raise: bool) -> TVec {
    let mut out = TVec::new();
    for (s, c) in v {
        generator_on::<En>(s, i, raise, &mut out, c);
    }
    out
}

/// `E_{±i}^{(κ)} = E_{±i}^κ / [κ]!` applied to `v` in the module selected by `En`.
pub fn apply_divided_in<En: Encoding>(v: &TVec, i: usize, raise: bool, kappa: u32) -> Result<TVec> {
    let mut cur = v.clone();
    for _ in 0..kappa {
        if cur.is_empty() {
            return Ok(cur);
        }
        cur = apply_generator_in::<En>(&cur, i, raise);
    }
    if kappa < 2 {
        return Ok(cur);
    }
    let f = quantum_factorial(kappa);
    cur.into_iter()
        .map(|(s, c)| c.exact_div(&f).map(|x| (s, x)).map_err(|_| SkeinError::NotDivisible))
        .collect()
}

/// `E_{±i}` on `V^{⊗d}`.
pub fn apply_generator(v: &TVec, i: usize, raise: bool) -> TVec {
    apply_generator_in::<Letters>(v, i, raise)
}

/// `E_{±i}^{(κ)}` on `V^{⊗d}`.
pub fn apply_divided(v: &TVec, i: usize, raise: bool, kappa: u32) -> Result<TVec> {
    apply_divided_in::<Letters>(v, i, raise, kappa)
}

/// Basis of the `λ` weight space of `(∧_q V)^{⊗N}`: `N`-tuples of subsets of
/// `{0..n-1}` in which letter `j` occurs `λ_j` times.
pub fn wedge_basis(l: &[usize], big_n: usize) -> Vec<Seq> {
    let n = l.len();
    assert!(n <= 8, "subsets are stored in one byte");
    if l.iter().any(|&x| x > big_n) {
        return Vec::new();
    }
    let mut out = vec![(Vec::with_capacity(big_n), vec![0usize; n])];
    for t in 0..big_n {
        let left = big_n - t - 1;
        let mut next = Vec::new();
        for (s, used) in out {
            for m in 0..1u16 << n {
                let mut u = used.clone();
                let ok = (0..n).all(|j| {
                    u[j] += (m >> j & 1) as usize;
                    u[j] <= l[j] && u[j] + left >= l[j]
                });
                if ok {
                    let mut s2: Seq = s.clone();
                    s2.push(m as u8);
                    next.push((s2, u));
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|(s, _)| s).collect()
}

pub fn basis_vec(s: Seq) -> TVec {
    let mut v = TVec::new();
    v.insert(s, LaurentQ::one());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raise_on_natural_module() {
        let v = apply_generator(&basis_vec(vec![1]), 1, true);
        assert_eq!(v, basis_vec(vec![0]));
        assert!(apply_generator(&basis_vec(vec![0]), 1, true).is_empty());
    }

    #[test]
    fn weight_space_sizes() {
        assert_eq!(weight_basis(&[2, 1, 1]).len(), 12);
        assert_eq!(weight_dim(&[3, 3, 3]), 1680);
        let total: usize = weights(3, 4).iter().map(|w| weight_basis(w).len()).sum();
        assert_eq!(total, 81);
        assert_eq!(wedge_basis(&[3, 3, 3], 4).len(), 64);
        assert_eq!(wedge_basis(&[1, 2], 3).len(), 9);
        assert!(wedge_basis(&[4, 0], 3).is_empty());
    }

    #[test]
    fn exterior_factor_is_minuscule() {
        // On one factor `∧_q V` with n = 2, E_1 maps {1} to {0} and kills {0, 1}.
        let v = apply_generator_in::<Subsets>(&basis_vec(vec![0b10]), 1, true);
        assert_eq!(v, basis_vec(vec![0b01]));
        assert!(apply_generator_in::<Subsets>(&basis_vec(vec![0b11]), 1, true).is_empty());
    }
}
