//! The map `alpha` from oriented skein diagrams into `S_q(n, Δ_N)` and the two
//! routes to `theta` on BMW elements.
//!
//! Every strand of an oriented section occupies one slot of a `gl_m` weight:
//! `+` carries `1`, `-` carries `N-1`. A cap fuses its two slots into the pair
//! `(N, 0)`, which stays in place until a cup at the same position reopens it.
//! Words wider than their bottom boundary get `(N, 0)` pairs appended on the
//! right, so `m = n + 2·pad`.

use super::element::{Op, Path, SchurElement};
use super::tensor::GlWeight;
use crate::diagram::{OrientedTangleWord, Sign, SliceKind, TangleWord};
use crate::error::{Result, SkeinError};
use crate::jaeger::{bmw_factors, psi, BmwElement, BmwGen, SkeinElement};
use crate::ring::{LaurentQ, RatFun};

use Sign::{Minus, Plus};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Strand,
    HoleLeft,
    HoleRight,
}

fn label(s: Sign, big_n: usize) -> usize {
    match s {
        Plus => 1,
        Minus => big_n - 1,
    }
}

/// `λ(ℓ)` for a boundary orientation.
pub fn lambda_of(l: &[Sign], big_n: usize) -> GlWeight {
    l.iter().map(|s| label(*s, big_n)).collect()
}

fn check_rank(big_n: usize) -> Result<()> {
    if big_n < 2 {
        return Err(SkeinError::InvalidArgs(format!("N must be at least 2, got {big_n}")));
    }
    Ok(())
}

/// Hole pairs needed on the right for `w`.
pub fn padding(w: &TangleWord) -> usize {
    let max = w.widths().into_iter().max().unwrap_or(w.n_bottom);
    (max - w.n_bottom).div_ceil(2)
}

fn unsupported(t: usize, why: &str) -> SkeinError {
    SkeinError::Unsupported(format!("slice {t}: {why}"))
}

/// The monomial `alpha(w)` with `pad` hole pairs on the right; its coefficient is `1`.
pub fn alpha_path(w: &OrientedTangleWord, big_n: usize, pad: usize) -> Result<Path> {
    check_rank(big_n)?;
    let n = w.word().n_bottom;
    let mut slots = vec![Slot::Strand; n];
    let mut source = lambda_of(w.bottom(), big_n);
    for _ in 0..pad {
        slots.extend([Slot::HoleLeft, Slot::HoleRight]);
        source.extend([big_n, 0]);
    }
    let strand_slot = |slots: &[Slot], k: usize| -> Option<usize> {
        slots.iter().enumerate().filter(|(_, s)| **s == Slot::Strand).nth(k).map(|(j, _)| j)
    };
    let mut ops = Vec::new();
    let nm2 = (big_n - 2) as u32;
    let nm1 = (big_n - 1) as u32;
    for (t, g) in w.word().slices.iter().enumerate() {
        let k = g.pos - 1;
        let below = &w.levels()[t];
        let above = &w.levels()[t + 1];
        if g.kind == SliceKind::Cup {
            let s = if k == 0 { 0 } else { strand_slot(&slots, k - 1).map(|j| j + 1).ok_or_else(|| unsupported(t, "bad cup"))? };
            if slots.get(s) != Some(&Slot::HoleLeft) {
                return Err(unsupported(t, "cup without an adjacent hole pair"));
            }
            let kappa = if above[k] == Minus { 1 } else { nm1 };
            ops.push(Op::Lower(s + 1, kappa));
            slots[s] = Slot::Strand;
            slots[s + 1] = Slot::Strand;
            continue;
        }
        let s = strand_slot(&slots, k).ok_or_else(|| unsupported(t, "position out of range"))?;
        if strand_slot(&slots, k + 1) != Some(s + 1) {
            return Err(unsupported(t, "strands separated by a hole"));
        }
        let i = s + 1;
        match g.kind {
            SliceKind::Cap => {
                let kappa = if below[k] == Minus { 1 } else { nm1 };
                ops.push(Op::Raise(i, kappa));
                slots[s] = Slot::HoleLeft;
                slots[s + 1] = Slot::HoleRight;
            }
            SliceKind::Vertex4 => match (below[k], below[k + 1]) {
                (x, y) if x == y => ops.extend([Op::Raise(i, 1), Op::Lower(i, 1)]),
                (Minus, _) if nm2 > 0 => ops.push(Op::Lower(i, nm2)),
                (Plus, _) if nm2 > 0 => ops.push(Op::Raise(i, nm2)),
                _ => {}
            },
            _ => return Err(unsupported(t, "crossings have no Schur image")),
        }
    }
    Ok(Path { source, ops })
}

/// `alpha(x)` with coefficients specialized at `a = q^N`.
pub fn alpha(x: &SkeinElement, big_n: usize) -> Result<SchurElement> {
    check_rank(big_n)?;
    let pad = x.iter().map(|(w, _)| padding(w.word())).max().unwrap_or(0);
    let mut out = SchurElement::zero();
    for (w, c) in x.iter() {
        out.add_term(alpha_path(w, big_n, pad)?, c.specialize_a(big_n as i32)?);
    }
    Ok(out)
}

/// Which construction of `theta` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `alpha ∘ psi`.
    Composed,
    /// Products of the algebraic generator table.
    Direct,
}

/// Weights `λ(ℓ)` over all `ℓ` with the pair at slots `i, i+1` replaced by `(a, b)`,
/// listed once per orientation of the remaining strands.
pub fn hat(n: usize, big_n: usize, i: usize, a: usize, b: usize) -> Vec<GlWeight> {
    let rest = n - 2;
    (0..1u32 << rest)
        .map(|m| {
            let mut l: GlWeight = (0..rest).map(|j| if m >> j & 1 == 0 { 1 } else { big_n - 1 }).collect();
            l.splice(i - 1..i - 1, [a, b]);
            l
        })
        .collect()
}

/// `1̂`: the sum of `1_{λ(ℓ)}` over all orientations `ℓ` of `n` strands.
pub fn hat_identity(n: usize, big_n: usize) -> SchurElement {
    let mut out = SchurElement::zero();
    for m in 0..1u32 << n {
        let l = (0..n).map(|j| if m >> j & 1 == 0 { 1 } else { big_n - 1 }).collect();
        out.add_term(Path::idempotent(l), LaurentQ::one());
    }
    out
}

fn local(out: &mut SchurElement, n: usize, big_n: usize, i: usize, ab: (usize, usize), ops: &[Op], c: LaurentQ) {
    for l in hat(n, big_n, i, ab.0, ab.1) {
        out.add_term(Path { source: l, ops: ops.to_vec() }, c.clone());
    }
}

/// The direct table image of one generator on `n` strands.
pub fn theta_generator(g: BmwGen, n: usize, big_n: usize) -> Result<SchurElement> {
    check_rank(big_n)?;
    let m = big_n - 1;
    let (nm1, nm2) = (m as u32, (big_n - 2) as u32);
    let e = |k: u32| if k == 0 { vec![] } else { vec![Op::Raise(0, k)] };
    let f = |k: u32| if k == 0 { vec![] } else { vec![Op::Lower(0, k)] };
    let cat = |x: Vec<Op>, y: Vec<Op>| [x, y].concat();
    let mut out = SchurElement::zero();
    let mut put = |ab: (usize, usize), ops: Vec<Op>, c: LaurentQ, i: usize| {
        let ops: Vec<Op> = ops
            .into_iter()
            .map(|o| match o {
                Op::Raise(_, k) => Op::Raise(i, k),
                Op::Lower(_, k) => Op::Lower(i, k),
            })
            .collect();
        local(&mut out, n, big_n, i, ab, &ops, c);
    };
    let q = |k: i32| LaurentQ::q_pow(k);
    let mi = m as i32;
    match g {
        BmwGen::E(i) => {
            check_index(i, n)?;
            put((m, 1), cat(e(1), f(nm1)), q(0), i);
            put((1, m), cat(e(nm1), f(1)), q(0), i);
            put((m, 1), cat(e(1), f(1)), q(-mi), i);
            put((1, m), cat(f(1), e(1)), q(mi), i);
        }
        BmwGen::Rho(i) => {
            check_index(i, n)?;
            put((1, m), cat(f(1), e(1)), q(mi - 1), i);
            put((m, 1), vec![], q(-1), i);
            put((m, 1), cat(e(1), f(1)), q(1 - mi), i);
            put((1, m), vec![], q(1), i);
            put((1, 1), cat(e(1), f(1)), q(0), i);
            put((1, m), e(nm2), q(0), i);
            put((m, 1), f(nm2), q(0), i);
            put((m, m), cat(e(1), f(1)), q(0), i);
        }
    }
    Ok(out)
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(SkeinError::BadIndex(i as i32));
    }
    Ok(())
}

/// `theta(w)` for one BMW word through the direct table.
fn theta_direct_word(w: &TangleWord, big_n: usize) -> Result<SchurElement> {
    let gens = bmw_factors(w)?;
    if gens.is_empty() {
        return Ok(hat_identity(w.n_bottom, big_n));
    }
    let mut acc: Option<SchurElement> = None;
    for g in gens {
        let x = theta_generator(g, w.n_bottom, big_n)?;
        acc = Some(match acc {
            None => x,
            Some(a) => x.mul(&a),
        });
    }
    Ok(acc.unwrap_or_default())
}

/// `theta(x)` at `a = q^N`.
pub fn theta(x: &BmwElement, big_n: usize, route: Route) -> Result<SchurElement> {
    check_rank(big_n)?;
    match route {
        Route::Composed => alpha(&psi(x)?, big_n),
        Route::Direct => {
            let mut out = SchurElement::zero();
            for (w, c) in x.iter() {
                out = out.add(&theta_direct_word(w, big_n)?.scale(&c.specialize_a(big_n as i32)?));
            }
            Ok(out)
        }
    }
}

/// Convenience: `theta` of a product of generators.
pub fn theta_word(n: usize, gens: &[BmwGen], big_n: usize, route: Route) -> Result<SchurElement> {
    let w = crate::jaeger::bmw_product(n, gens)?;
    theta(&BmwElement::diagram(w), big_n, route)
}

/// Scalar `c` specialized at `a = q^N`.
pub fn specialize(c: &RatFun, big_n: usize) -> Result<LaurentQ> {
    c.specialize_a(big_n as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jaeger::{pic_lr, pic_vertex, psi_identity};
    use crate::schur::Space;

    #[test]
    fn vertical_strands_are_idempotents() {
        let x = psi_identity(2);
        let a = alpha(&x, 3).unwrap();
        assert_eq!(a.len(), 4);
        for (p, c) in a.terms() {
            assert!(p.ops.is_empty());
            assert!(c.is_one());
        }
    }

    #[test]
    fn upward_vertex_commutes_on_equal_labels() {
        let x = alpha(&SkeinElement::diagram(pic_vertex(Plus, Plus)), 3).unwrap();
        let swapped = SchurElement::term(Path { source: vec![1, 1], ops: vec![Op::Lower(1, 1), Op::Raise(1, 1)] }, LaurentQ::one());
        assert!(x.equals(&swapped, Space::Tensor).unwrap());
    }

    #[test]
    fn cupcap_passes_through_a_hole() {
        let p = alpha_path(&pic_lr(), 3, 0).unwrap();
        assert_eq!(p.source, vec![2, 1]);
        assert_eq!(p.ops, vec![Op::Raise(1, 1), Op::Lower(1, 1)]);
        assert_eq!(p.target(), Some(vec![2, 1]));
    }

    #[test]
    fn routes_agree_on_generators() {
        for big_n in 2..=4 {
            for n in 2..=3 {
                for i in 1..n {
                    for g in [BmwGen::E(i), BmwGen::Rho(i)] {
                        let c = theta_word(n, &[g], big_n, Route::Composed).unwrap();
                        let d = theta_word(n, &[g], big_n, Route::Direct).unwrap();
                        assert!(c.equals(&d, Space::Tensor).unwrap(), "{g:?} n={n} N={big_n}");
                        assert!(c.equals(&d, Space::Wedge(big_n)).unwrap(), "{g:?} n={n} N={big_n}");
                    }
                }
                let c = theta_word(n, &[], big_n, Route::Composed).unwrap();
                assert!(c.equals(&hat_identity(n, big_n), Space::Wedge(big_n)).unwrap());
            }
        }
    }
}
