//! Finite-presentation relations of `S_q(n,d)` and the divided-power identities,
//! checked as exact matrix equalities in a [`TensorContext`].

use std::collections::HashMap;

use super::matrix::{SchurMatrix, TensorContext};
use super::tensor::{bar, content, GlWeight};
use crate::error::Result;
use crate::ring::{qbin, quantum_int};

struct Powers<'a> {
    ctx: &'a TensorContext,
    cache: HashMap<(usize, bool, u32), SchurMatrix>,
}

impl<'a> Powers<'a> {
    fn new(ctx: &'a TensorContext) -> Self {
        Self { ctx, cache: HashMap::new() }
    }

    fn get(&mut self, i: usize, raise: bool, k: u32) -> Result<SchurMatrix> {
        if k == 0 {
            return Ok(self.ctx.identity());
        }
        if let Some(m) = self.cache.get(&(i, raise, k)) {
            return Ok(m.clone());
        }
        let m = self.ctx.divided_power(i, raise, k)?;
        self.cache.insert((i, raise, k), m.clone());
        Ok(m)
    }
}

/// `m 1_λ`: the columns of `m` indexed by tensors of content `λ`.
fn on_weight(m: &SchurMatrix, l: &[usize], n: usize) -> SchurMatrix {
    SchurMatrix::from_columns(m.columns().filter(|(s, _)| content(s, n) == l).map(|(s, v)| (s.clone(), v.clone())))
}

fn shifted(l: &[usize], i: usize, k: i64) -> Option<GlWeight> {
    let mut out = l.to_vec();
    let a = out[i - 1] as i64 + k;
    let b = out[i] as i64 - k;
    if a < 0 || b < 0 {
        return None;
    }
    out[i - 1] = a as usize;
    out[i] = b as usize;
    Some(out)
}

fn record(fails: &mut Vec<String>, ok: bool, name: impl FnOnce() -> String) {
    if !ok {
        fails.push(name());
    }
}

/// Names of the violated relations among: orthogonal idempotents summing to 1,
/// weight shifting, the commutator, and the Serre relations.
pub fn presentation_failures(ctx: &TensorContext) -> Result<Vec<String>> {
    let n = ctx.n;
    let mut fails = Vec::new();
    let ws = ctx.weights();
    let idem: Vec<SchurMatrix> = ws.iter().map(|l| ctx.idempotent(l)).collect();
    let mut sum = SchurMatrix::zero();
    for (a, la) in ws.iter().enumerate() {
        sum = sum.add(&idem[a]);
        for (b, lb) in ws.iter().enumerate() {
            let p = idem[a].mul(&idem[b]);
            let expect = if a == b { idem[a].clone() } else { SchurMatrix::zero() };
            record(&mut fails, p == expect, || format!("1_{la:?} 1_{lb:?}"));
        }
    }
    record(&mut fails, sum == ctx.identity(), || "sum of idempotents".into());
    let mut pw = Powers::new(ctx);
    for i in 1..n {
        for raise in [true, false] {
            let e = pw.get(i, raise, 1)?;
            for (a, l) in ws.iter().enumerate() {
                let lhs = e.mul(&idem[a]);
                let rhs = match shifted(l, i, if raise { 1 } else { -1 }) {
                    Some(m) => ctx.idempotent(&m).mul(&lhs),
                    None => SchurMatrix::zero(),
                };
                record(&mut fails, lhs == rhs, || format!("E_{}{i} 1_{l:?} weight shift", sgn(raise)));
            }
        }
        for j in 1..n {
            let (ei, fj) = (pw.get(i, true, 1)?, pw.get(j, false, 1)?);
            let comm = ei.mul(&fj).sub(&fj.mul(&ei));
            let mut expect = SchurMatrix::zero();
            if i == j {
                for (a, l) in ws.iter().enumerate() {
                    expect = expect.add(&idem[a].scale(&quantum_int(bar(l, i))));
                }
            }
            record(&mut fails, comm == expect, || format!("[E_{i}, E_-{j}]"));
            if i.abs_diff(j) == 1 {
                for raise in [true, false] {
                    let (x, y) = (pw.get(i, raise, 1)?, pw.get(j, raise, 1)?);
                    let xx = x.mul(&x);
                    let serre = xx.mul(&y).sub(&x.mul(&y).mul(&x).scale(&quantum_int(2))).add(&y.mul(&xx));
                    record(&mut fails, serre.is_zero(), || format!("Serre E_{}{i} E_{}{j}", sgn(raise), sgn(raise)));
                }
            } else if i.abs_diff(j) > 1 {
                for raise in [true, false] {
                    let (x, y) = (pw.get(i, raise, 1)?, pw.get(j, raise, 1)?);
                    record(&mut fails, x.mul(&y) == y.mul(&x), || format!("E_{i} E_{j} commute"));
                }
            }
        }
    }
    Ok(fails)
}

fn sgn(raise: bool) -> &'static str {
    if raise {
        "+"
    } else {
        "-"
    }
}

/// Names of the violated divided-power identities for exponents up to `d`.
pub fn divided_power_failures(ctx: &TensorContext) -> Result<Vec<String>> {
    let (n, d) = (ctx.n, ctx.d as u32);
    let mut fails = Vec::new();
    let ws = ctx.weights();
    let mut pw = Powers::new(ctx);
    for i in 1..n {
        for raise in [true, false] {
            for k in 1..=d {
                let e = pw.get(i, raise, k)?;
                for l in &ws {
                    let lhs = on_weight(&e, l, n);
                    let rhs = match shifted(l, i, if raise { k as i64 } else { -(k as i64) }) {
                        Some(m) => ctx.idempotent(&m).mul(&lhs),
                        None => SchurMatrix::zero(),
                    };
                    record(&mut fails, lhs == rhs, || format!("E_{}{i}^({k}) 1_{l:?} shift", sgn(raise)));
                }
                for m in 1..=d - k {
                    let lhs = e.mul(&pw.get(i, raise, m)?);
                    let rhs = pw.get(i, raise, k + m)?.scale(&qbin((k + m) as i32, k));
                    record(&mut fails, lhs == rhs, || format!("E_{}{i}^({k}) E^({m})", sgn(raise)));
                }
            }
        }
        for k in 1..=d {
            for m in 1..=d {
                let up_down = pw.get(i, true, k)?.mul(&pw.get(i, false, m)?);
                let down_up = pw.get(i, false, m)?.mul(&pw.get(i, true, k)?);
                let mut xs = Vec::new();
                for t in 0..=k.min(m) {
                    let (e, f) = (pw.get(i, true, k - t)?, pw.get(i, false, m - t)?);
                    xs.push((f.mul(&e), e.mul(&f)));
                }
                for l in &ws {
                    let b = bar(l, i);
                    let mut rhs1 = SchurMatrix::zero();
                    let mut rhs2 = SchurMatrix::zero();
                    for (t, (x1, x2)) in xs.iter().enumerate() {
                        let t = t as u32;
                        let c1 = qbin(k as i32 - m as i32 + b, t);
                        let c2 = qbin(-(k as i32) + m as i32 - b, t);
                        rhs1 = rhs1.add(&on_weight(x1, l, n).scale(&c1));
                        rhs2 = rhs2.add(&on_weight(x2, l, n).scale(&c2));
                    }
                    record(&mut fails, on_weight(&up_down, l, n) == rhs1, || {
                        format!("E_{i}^({k}) E_-{i}^({m}) 1_{l:?}")
                    });
                    record(&mut fails, on_weight(&down_up, l, n) == rhs2, || {
                        format!("E_-{i}^({m}) E_{i}^({k}) 1_{l:?}")
                    });
                }
            }
        }
        for j in 1..n {
            for k in 1..=d {
                for m in 1..=d {
                    if i.abs_diff(j) > 1 {
                        let (x, y) = (pw.get(i, true, k)?, pw.get(j, true, m)?);
                        record(&mut fails, x.mul(&y) == y.mul(&x), || format!("E_{i}^({k}) E_{j}^({m})"));
                    }
                    if i != j {
                        for raise in [true, false] {
                            let (x, y) = (pw.get(i, raise, k)?, pw.get(j, !raise, m)?);
                            record(&mut fails, x.mul(&y) == y.mul(&x), || {
                                format!("E_{}{i}^({k}) E_{}{j}^({m})", sgn(raise), sgn(!raise))
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(fails)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::build_rep;

    #[test]
    fn small_contexts_satisfy_the_presentation() {
        for (n, d) in [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let ctx = build_rep(n, d).unwrap();
            assert_eq!(presentation_failures(&ctx).unwrap(), Vec::<String>::new(), "n={n} d={d}");
            assert_eq!(divided_power_failures(&ctx).unwrap(), Vec::<String>::new(), "n={n} d={d}");
        }
    }
}
