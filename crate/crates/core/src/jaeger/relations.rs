//! Defining relations of the BMW algebra and their images under `psi`.

use super::element::{BmwElement, SkeinElement};
use super::psi::{bmw_product, psi, BmwGen};
use crate::diagram::{GenSlice, SliceKind, TangleWord};
use crate::ring::{bracket, delta_with, relation_bracket, RatFun, SignConvention};

use BmwGen::{E, Rho};

/// `lhs = rhs` in `BMW_n`.
#[derive(Clone, Debug)]
pub struct BmwRelation {
    pub name: String,
    pub n: usize,
    pub lhs: BmwElement,
    pub rhs: BmwElement,
}

impl BmwRelation {
    pub fn difference(&self) -> BmwElement {
        self.lhs.sub(&self.rhs)
    }
}

/// Kink coefficient `[a](q^2 a^{-1} + q^{-2} a)`.
pub fn kink_coefficient() -> RatFun {
    &bracket(1, 0) * &(&RatFun::mono(-1, 2) + &RatFun::mono(1, -2))
}

/// Digon cup-cap coefficient `[a^2,-3] + 1`.
pub fn digon_coefficient(conv: SignConvention) -> RatFun {
    &relation_bracket(2, -3, conv) + &RatFun::one()
}

/// Tail coefficient `[a^2,-4]` of the five-term relation.
pub fn r3_coefficient(conv: SignConvention) -> RatFun {
    relation_bracket(2, -4, conv)
}

fn word(n: usize, gens: &[BmwGen]) -> BmwElement {
    BmwElement::diagram(bmw_product(n, gens).expect("generator indices in range"))
}

fn comb(n: usize, terms: &[(&[BmwGen], RatFun)]) -> BmwElement {
    let mut out = BmwElement::zero();
    for (g, c) in terms {
        out.add_term(bmw_product(n, g).expect("generator indices in range"), c.clone());
    }
    out
}

fn rel(name: String, n: usize, lhs: BmwElement, rhs: BmwElement) -> BmwRelation {
    BmwRelation { name, n, lhs, rhs }
}

/// Words on the two sides of the five-term relation, each `(word, uses the tail coefficient)`.
pub const R3_LHS: [(&[BmwGen], bool); 5] = [
    (&[Rho(1), Rho(2), Rho(1)], false),
    (&[E(2), Rho(1)], false),
    (&[Rho(1), E(2)], false),
    (&[Rho(2)], false),
    (&[E(2)], true),
];

pub const R3_RHS: [(&[BmwGen], bool); 5] = [
    (&[Rho(2), Rho(1), Rho(2)], false),
    (&[E(1), Rho(2)], false),
    (&[Rho(2), E(1)], false),
    (&[Rho(1)], false),
    (&[E(1)], true),
];

fn reflect(g: BmwGen) -> BmwGen {
    match g {
        E(i) => E(3 - i),
        Rho(i) => Rho(3 - i),
    }
}

fn r3_side(side: &[(Vec<BmwGen>, bool)], k: &RatFun) -> BmwElement {
    let terms: Vec<(&[BmwGen], RatFun)> =
        side.iter().map(|(g, t)| (g.as_slice(), if *t { k.clone() } else { RatFun::one() })).collect();
    comb(3, &terms)
}

/// Every defining relation on `n` strands, in algebra form, for `n` in `1..=3`.
pub fn bmw_relations(n: usize, conv: SignConvention) -> Vec<BmwRelation> {
    let c = kink_coefficient();
    let d = digon_coefficient(conv);
    let delta = delta_with(conv);
    let qq = &RatFun::mono(0, 1) + &RatFun::mono(0, -1);
    let mut out = Vec::new();
    for i in 1..n {
        out.push(rel(format!("kink-above-{i}"), n, word(n, &[E(i), Rho(i)]), word(n, &[E(i)]).scale(&c)));
        out.push(rel(format!("kink-below-{i}"), n, word(n, &[Rho(i), E(i)]), word(n, &[E(i)]).scale(&c)));
        out.push(rel(
            format!("digon-{i}"),
            n,
            word(n, &[Rho(i), Rho(i)]),
            comb(n, &[(&[Rho(i)], qq.clone()), (&[E(i)], d.clone())]),
        ));
        out.push(rel(format!("loop-{i}"), n, word(n, &[E(i), E(i)]), word(n, &[E(i)]).scale(&delta)));
    }
    if n == 3 {
        out.push(rel("kink-arc-1".into(), 3, word(3, &[E(1), Rho(2), E(1)]), word(3, &[E(1)]).scale(&c)));
        out.push(rel("kink-arc-2".into(), 3, word(3, &[E(2), Rho(1), E(2)]), word(3, &[E(2)]).scale(&c)));
        out.push(rel("isotopy-121".into(), 3, word(3, &[E(1), E(2), E(1)]), word(3, &[E(1)])));
        out.push(rel("isotopy-212".into(), 3, word(3, &[E(2), E(1), E(2)]), word(3, &[E(2)])));
        let k = r3_coefficient(conv);
        let owned = |side: &[(&[BmwGen], bool)]| -> Vec<(Vec<BmwGen>, bool)> {
            side.iter().map(|(g, t)| (g.to_vec(), *t)).collect()
        };
        out.push(rel("five-term".into(), 3, r3_side(&owned(&R3_LHS), &k), r3_side(&owned(&R3_RHS), &k)));
        // Reflection in a vertical line exchanges the indices 1 and 2.
        let reflected = |side: &[(&[BmwGen], bool)]| -> Vec<(Vec<BmwGen>, bool)> {
            side.iter().map(|(g, t)| (g.iter().map(|x| reflect(*x)).collect(), *t)).collect()
        };
        out.push(rel(
            "five-term-reflected".into(),
            3,
            r3_side(&reflected(&R3_LHS), &k),
            r3_side(&reflected(&R3_RHS), &k),
        ));
    }
    out
}

/// The single-strand kink with its loop on the right.
pub fn kink_word() -> TangleWord {
    let s = vec![
        GenSlice::new(SliceKind::Cup, 2),
        GenSlice::new(SliceKind::Vertex4, 1),
        GenSlice::new(SliceKind::Cap, 2),
    ];
    TangleWord::new(1, s).expect("kink word")
}

/// `psi(lhs - rhs)` for the kink on one strand and every algebra-form relation on
/// two and three strands, as raw skein combinations.
pub fn relation_images(conv: SignConvention) -> Vec<(String, SkeinElement)> {
    let mut kink = BmwElement::diagram(kink_word());
    kink.add_term(TangleWord::identity(1), -kink_coefficient());
    let mut out = vec![("kink".to_string(), psi(&kink).expect("valid word"))];
    for n in 2..=3 {
        for r in bmw_relations(n, conv) {
            out.push((format!("{}@{}", r.name, n), psi(&r.difference()).expect("valid word")));
        }
    }
    out
}
