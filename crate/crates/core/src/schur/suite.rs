//! Relation checks in the Schur model and the Hecke block.

use super::alpha::{alpha, theta, Route};
use super::element::{SchurElement, Space};
use super::matrix::SchurMatrix;
use super::tensor::content;
use crate::diagram::{GenSlice, OrientationString, OrientedTangleWord, Sign, SliceKind, TangleWord};
use crate::error::{Result, SkeinError};
use crate::jaeger::{bmw_relations, kink_coefficient, kink_word, psi, BmwElement, SkeinElement};
use crate::ring::{relation_bracket, RatFun, SignConvention};

use Sign::{Minus, Plus};
use SliceKind::{Cap, Cup, Vertex4};

/// An oriented word from its bottom orientation; each cup takes the next entry of
/// `cups` as the sign of its left end.
pub fn oriented_word(n: usize, slices: &[(SliceKind, usize)], bottom: &[Sign], cups: &[Sign]) -> Result<OrientedTangleWord> {
    let gs: Vec<GenSlice> = slices.iter().map(|(k, p)| GenSlice::new(*k, *p)).collect();
    let w = TangleWord::new(n, gs.clone())?;
    let mut levels: Vec<OrientationString> = vec![bottom.to_vec()];
    let mut cups = cups.iter();
    for g in &gs {
        let mut l = levels.last().unwrap().clone();
        let k = g.pos - 1;
        match g.kind {
            Cup => {
                let x = *cups.next().ok_or_else(|| SkeinError::InvalidArgs("missing cup orientation".into()))?;
                l.splice(k..k, [x, x.flip()]);
            }
            Cap => {
                l.drain(k..k + 2);
            }
            _ => l.swap(k, k + 1),
        }
        levels.push(l);
    }
    OrientedTangleWord::new(w, levels)
}

/// `lhs = rhs` in the oriented skein algebra.
#[derive(Clone, Debug)]
pub struct SkeinRelation {
    pub name: String,
    pub lhs: SkeinElement,
    pub rhs: SkeinElement,
}

fn signs(s: &str) -> Vec<Sign> {
    s.chars().map(|c| if c == '+' { Plus } else { Minus }).collect()
}

fn pic(n: usize, slices: &[(SliceKind, usize)], bottom: &str, cups: &str) -> SkeinElement {
    SkeinElement::diagram(oriented_word(n, slices, &signs(bottom), &signs(cups)).expect("relation picture"))
}

fn lin(terms: &[(SkeinElement, RatFun)]) -> SkeinElement {
    terms.iter().fold(SkeinElement::zero(), |acc, (x, c)| acc.add(&x.scale(c)))
}

/// The defining skein relations, the loop values and the derived relation for
/// three strands oriented up, down, up.
pub fn skein_relations(conv: SignConvention) -> Vec<SkeinRelation> {
    let one = RatFun::one;
    let br = |k: i32| relation_bracket(1, k, conv);
    let circle = |x: &str| pic(0, &[(Cup, 1), (Cap, 1)], "", x);
    let rel = |name: &str, lhs: SkeinElement, rhs: SkeinElement| SkeinRelation { name: name.into(), lhs, rhs };
    let v = |p: usize| (Vertex4, p);
    let lr = [(Cap, 1), (Cup, 1)];
    let lr23 = [(Cap, 2), (Cup, 2)];
    vec![
        rel("R1MOY", pic(1, &[(Cup, 2), v(1), (Cap, 2)], "+", "+"), pic(1, &[], "+", "").scale(&br(-1))),
        rel("R2aMOY", pic(2, &[v(1), v(1)], "++", ""), pic(2, &[v(1)], "++", "").scale(&(&RatFun::mono(0, 1) + &RatFun::mono(0, -1)))),
        rel(
            "R2bMOY",
            pic(2, &[v(1), v(1)], "-+", ""),
            lin(&[(pic(2, &[], "-+", ""), one()), (pic(2, &lr, "-+", "-"), br(-2))]),
        ),
        rel(
            "R3MOY",
            lin(&[(pic(3, &[v(1), v(2), v(1)], "+++", ""), one()), (pic(3, &[v(2)], "+++", ""), one())]),
            lin(&[(pic(3, &[v(2), v(1), v(2)], "+++", ""), one()), (pic(3, &[v(1)], "+++", ""), one())]),
        ),
        rel("loop-r", circle("+"), pic(0, &[], "", "").scale(&br(0))),
        rel("loop-l", circle("-"), pic(0, &[], "", "").scale(&br(0))),
        rel(
            "SPLITMOY",
            pic(2, &[v(1), (Cup, 3), (Cap, 3)], "++", "+"),
            pic(2, &[v(1)], "++", "").scale(&br(0)),
        ),
        rel(
            "R3bMOY",
            lin(&[(pic(3, &[v(1), v(2), v(1)], "+-+", ""), one()), (pic(3, &lr23, "+-+", "-"), br(-3))]),
            lin(&[(pic(3, &[v(2), v(1), v(2)], "+-+", ""), one()), (pic(3, &lr, "+-+", "+"), br(-3))]),
        ),
    ]
}

/// Bottom width of a skein relation.
fn width(r: &SkeinRelation) -> usize {
    r.lhs.iter().next().map(|(w, _)| w.word().n_bottom).unwrap_or(0)
}

/// Names of the relations that fail in the Schur model at `a = q^N`: every BMW
/// relation on `n` strands through `theta`, the one-strand kink, and every skein
/// relation on at most `n` strands through `alpha`. All are evaluated on
/// `(∧_q V)^{⊗N}`.
pub fn bmw_relation_suite(n: usize, big_n: usize, conv: SignConvention) -> Result<Vec<String>> {
    let space = Space::Wedge(big_n);
    let mut fails = Vec::new();
    for r in bmw_relations(n, conv) {
        let l = theta(&r.lhs, big_n, Route::Composed)?;
        let rr = theta(&r.rhs, big_n, Route::Composed)?;
        if !l.equals(&rr, space)? {
            fails.push(r.name);
        }
    }
    let mut kink = BmwElement::diagram(kink_word());
    kink.add_term(TangleWord::identity(1), -kink_coefficient());
    if !alpha(&psi(&kink)?, big_n)?.vanishes(space)? {
        fails.push("kink".into());
    }
    for r in skein_relations(conv) {
        if width(&r) <= n && !skein_relation_holds(&r, big_n)? {
            fails.push(r.name);
        }
    }
    Ok(fails)
}

/// `alpha(lhs - rhs) = 0` on `(∧_q V)^{⊗N}`.
pub fn skein_relation_holds(r: &SkeinRelation, big_n: usize) -> Result<bool> {
    alpha(&r.lhs.sub(&r.rhs), big_n)?.vanishes(Space::Wedge(big_n))
}

/// `1_{(1^n)} x 1_{(1^n)}` on `V^{⊗n}`; only `d = n` has this block.
pub fn hecke_block(x: &SchurElement, d: usize) -> Result<SchurMatrix> {
    let n = x.sources().first().map(|l| l.len()).unwrap_or(d);
    if d != n {
        return Err(SkeinError::NoSuchBlock(d));
    }
    let ones = vec![1; n];
    let only = SchurElement::from_terms(x.terms().filter(|(p, _)| p.source == ones).map(|(p, c)| (p.clone(), c.clone())));
    let m = only.block(Space::Tensor, d)?;
    let basis: Vec<_> = super::tensor::weight_basis(&ones);
    let r = m.restrict(&basis);
    debug_assert!(r.columns().all(|(s, _)| content(s, n) == ones));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jaeger::BmwGen::{E, Rho};
    use crate::schur::{build_rep, theta_word, Symbol};

    #[test]
    fn skein_relations_hold_at_n3() {
        for r in skein_relations(SignConvention::Consistent) {
            assert!(skein_relation_holds(&r, 3).unwrap(), "{}", r.name);
        }
    }

    #[test]
    fn wrong_digon_coefficient_is_detected() {
        let mut r = skein_relations(SignConvention::Consistent).remove(1);
        assert_eq!(r.name, "R2aMOY");
        r.rhs = r.rhs.scale(&RatFun::integer(2));
        assert!(!skein_relation_holds(&r, 3).unwrap());
    }

    #[test]
    fn two_strand_suite_passes() {
        assert_eq!(bmw_relation_suite(2, 3, SignConvention::Consistent).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn hecke_block_of_rho_is_b() {
        let ctx = build_rep(2, 2).unwrap();
        let ones = vec![1, 1];
        let b = ctx
            .eval_word(&[
                Symbol::Idem(ones.clone()),
                Symbol::E { i: 1, raise: true, kappa: 1 },
                Symbol::E { i: 1, raise: false, kappa: 1 },
                Symbol::Idem(ones),
            ])
            .unwrap();
        let h = hecke_block(&theta_word(2, &[Rho(1)], 3, Route::Direct).unwrap(), 2).unwrap();
        assert_eq!(h, b);
        assert!(hecke_block(&theta_word(2, &[E(1)], 3, Route::Direct).unwrap(), 2).unwrap().is_zero());
        assert_eq!(hecke_block(&theta_word(2, &[E(1)], 3, Route::Direct).unwrap(), 3), Err(SkeinError::NoSuchBlock(3)));
    }
}
