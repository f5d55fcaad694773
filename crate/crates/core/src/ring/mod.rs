//! Exact coefficient rings: Laurent polynomials in `q` and in `(a, q)`, the
//! rational function field Q(a, q), and quantum numbers.

mod bilaurent;
pub mod json;
mod laurent;
mod quantum;
mod ratfun;
mod upoly;

use std::fmt;

use num::{BigRational, One, Signed};

pub use bilaurent::BiLaurent;
pub use laurent::LaurentQ;
pub use quantum::{
    bracket, delta, delta_with, q_minus_qinv, qbin, quantum_binom, quantum_factorial, quantum_int,
    relation_bracket, unknot_homfly, SignConvention,
};
pub use ratfun::RatFun;

/// Writes one monomial `c * x^e * ...` with a sign separator unless it is first.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    vars: &[(&str, i32)],
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    let abs = c.abs();
    let mono: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if mono.is_empty() {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    write!(f, "{}", mono.join("*"))
}
