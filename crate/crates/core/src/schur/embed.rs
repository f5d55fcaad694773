//! Injectivity, route agreement, loop and Hecke checks for `theta`.

use super::alpha::{specialize, theta, theta_word, Route};
use super::element::{SchurElement, Space};
use super::matrix::{build_rep, SchurMatrix, Symbol};
use super::rank::rank_of_span;
use super::suite::hecke_block;
use crate::error::{Result, SkeinError};
use crate::jaeger::{BmwElement, BmwGen};
use crate::ring::{delta, quantum_int, LaurentQ};
use crate::diagram::TangleWord;

use BmwGen::{E, Rho};

fn check_n(n: usize) -> Result<()> {
    if !(2..=3).contains(&n) {
        return Err(SkeinError::InvalidArgs(format!("n must be 2 or 3, got {n}")));
    }
    Ok(())
}

/// `(2n-1)!!`, the dimension of the BMW algebra on `n` strands.
pub fn bmw_dimension(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

/// Words whose images span the BMW algebra on `n ∈ {2, 3}` strands.
pub fn spanning_set(n: usize) -> Result<Vec<Vec<BmwGen>>> {
    check_n(n)?;
    Ok(if n == 2 {
        vec![vec![], vec![E(1)], vec![Rho(1)]]
    } else {
        vec![
            vec![],
            vec![Rho(1)],
            vec![Rho(2)],
            vec![Rho(1), Rho(2)],
            vec![Rho(2), Rho(1)],
            vec![Rho(1), Rho(2), Rho(1)],
            vec![E(1)],
            vec![E(2)],
            vec![E(1), E(2)],
            vec![E(2), E(1)],
            vec![E(1), Rho(2)],
            vec![Rho(2), E(1)],
            vec![E(2), Rho(1)],
            vec![Rho(1), E(2)],
            vec![Rho(1), E(2), Rho(1)],
        ]
    })
}

/// Rank of the `theta`-images of [`spanning_set`] on `(∧_q V)^{⊗N}`.
pub fn theta_rank(n: usize, big_n: usize) -> Result<usize> {
    let images = spanning_set(n)?
        .iter()
        .map(|w| theta_word(n, w, big_n, Route::Composed))
        .collect::<Result<Vec<_>>>()?;
    rank_of_span(&images, Space::Wedge(big_n))
}

/// Generator names on which the two `theta` routes differ on `space`.
pub fn route_mismatches(n: usize, big_n: usize, space: Space) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let id = BmwElement::diagram(TangleWord::identity(n));
    if !theta(&id, big_n, Route::Composed)?.equals(&theta(&id, big_n, Route::Direct)?, space)? {
        fails.push("1".into());
    }
    for i in 1..n {
        for g in [E(i), Rho(i)] {
            let c = theta_word(n, &[g], big_n, Route::Composed)?;
            let d = theta_word(n, &[g], big_n, Route::Direct)?;
            if !c.equals(&d, space)? {
                fails.push(gen_name(g));
            }
        }
    }
    Ok(fails)
}

pub fn gen_name(g: BmwGen) -> String {
    match g {
        E(i) => format!("e{i}"),
        Rho(i) => format!("rho{i}"),
    }
}

fn delta_at(big_n: usize) -> Result<LaurentQ> {
    specialize(&delta(), big_n)
}

/// `theta(e_i) theta(e_i) = δ theta(e_i)` as operators on `space`.
pub fn loop_square_holds(n: usize, i: usize, big_n: usize, space: Space) -> Result<bool> {
    let t = theta_word(n, &[E(i)], big_n, Route::Direct)?;
    t.mul(&t).equals(&t.scale(&delta_at(big_n)?), space)
}

/// `theta(e_i e_i) = δ theta(e_i)` through `alpha ∘ psi`.
pub fn loop_composed_holds(n: usize, i: usize, big_n: usize) -> Result<bool> {
    let sq = theta_word(n, &[E(i), E(i)], big_n, Route::Composed)?;
    let t = theta_word(n, &[E(i)], big_n, Route::Composed)?;
    sq.equals(&t.scale(&delta_at(big_n)?), Space::Wedge(big_n))
}

/// `b_i = 1_{(1^n)} E_{+i} E_{-i} 1_{(1^n)}` on `V^{⊗n}`.
pub fn hecke_generator(n: usize, i: usize) -> Result<SchurMatrix> {
    let ctx = build_rep(n, n)?;
    let ones = vec![1; n];
    ctx.eval_word(&[
        Symbol::Idem(ones.clone()),
        Symbol::E { i, raise: true, kappa: 1 },
        Symbol::E { i, raise: false, kappa: 1 },
        Symbol::Idem(ones),
    ])
}

/// Names of the violated Hecke-block statements for `n = d` strands.
pub fn hecke_failures(n: usize, big_n: usize) -> Result<Vec<String>> {
    check_n(n)?;
    let mut fails = Vec::new();
    let two = quantum_int(2);
    let block = |g: BmwGen| -> Result<SchurMatrix> {
        let x: SchurElement = theta_word(n, &[g], big_n, Route::Composed)?;
        hecke_block(&x, n)
    };
    let mut bs = Vec::new();
    for i in 1..n {
        let b = block(Rho(i))?;
        if b != hecke_generator(n, i)? {
            fails.push(format!("hecke(rho{i}) = b{i}"));
        }
        if b.mul(&b) != b.scale(&two) {
            fails.push(format!("b{i}^2 = [2] b{i}"));
        }
        if big_n >= 3 && !block(E(i))?.is_zero() {
            fails.push(format!("hecke(e{i}) = 0"));
        }
        bs.push(b);
    }
    if n == 3 {
        let (b1, b2) = (&bs[0], &bs[1]);
        let lhs = b1.mul(b2).mul(b1).add(b2);
        let rhs = b2.mul(b1).mul(b2).add(b1);
        if lhs != rhs {
            fails.push("b1 b2 b1 + b2 = b2 b1 b2 + b1".into());
        }
    }
    Ok(fails)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_are_double_factorials() {
        assert_eq!(bmw_dimension(2), 3);
        assert_eq!(bmw_dimension(3), 15);
        assert_eq!(spanning_set(3).unwrap().len(), 15);
        assert!(spanning_set(4).is_err());
    }

    #[test]
    fn two_strand_checks_at_n3() {
        assert_eq!(theta_rank(2, 3).unwrap(), 3);
        assert!(route_mismatches(2, 3, Space::Wedge(3)).unwrap().is_empty());
        assert!(loop_square_holds(2, 1, 3, Space::Wedge(3)).unwrap());
        assert!(loop_composed_holds(2, 1, 3).unwrap());
        assert!(hecke_failures(2, 3).unwrap().is_empty());
    }
}
