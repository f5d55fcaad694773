use std::collections::BTreeMap;

use super::element::{SchurElement, Space};
use super::tensor::{GlWeight, Seq};
use crate::error::Result;
use crate::ring::LaurentQ;

type Coord = (GlWeight, Seq, Seq);
type Row = BTreeMap<Coord, LaurentQ>;

fn flatten(x: &SchurElement, space: Space) -> Result<Row> {
    let mut row = Row::new();
    for ((l, col), v) in x.images(space)? {
        for (r, c) in v {
            row.insert((l.clone(), col.clone(), r), c);
        }
    }
    Ok(row)
}

/// Rank over `Q(q)` of rows with entries in `Q[q, q^{-1}]`, by fraction-free
/// elimination with full pivoting. Every division by the previous pivot is exact.
pub fn bareiss_rank(mut rows: Vec<Row>) -> Result<usize> {
    rows.retain(|r| !r.is_empty());
    let mut prev = LaurentQ::one();
    let mut rank = 0;
    while !rows.is_empty() {
        // Smallest pivot keeps intermediate degrees low.
        let (pi, key) = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(k, v)| (v.len(), i, k)))
            .min_by_key(|(len, i, _)| (*len, *i))
            .map(|(_, i, k)| (i, k.clone()))
            .expect("nonempty rows");
        let pivot_row = rows.swap_remove(pi);
        let p = pivot_row[&key].clone();
        let mut next = Vec::with_capacity(rows.len());
        for r in rows {
            let f = r.get(&key).cloned().unwrap_or_default();
            let mut out = Row::new();
            let keys: std::collections::BTreeSet<&Coord> = r.keys().chain(pivot_row.keys()).collect();
            for k in keys {
                let a = r.get(k).map(|x| x * &p).unwrap_or_default();
                let b = if f.is_zero() { LaurentQ::zero() } else { pivot_row.get(k).map(|x| x * &f).unwrap_or_default() };
                let v = (&a - &b).exact_div(&prev)?;
                if !v.is_zero() {
                    out.insert(k.clone(), v);
                }
            }
            if !out.is_empty() {
                next.push(out);
            }
        }
        rows = next;
        prev = p;
        rank += 1;
    }
    Ok(rank)
}

/// Dimension of the span of `elems` acting on `space`.
pub fn rank_of_span(elems: &[SchurElement], space: Space) -> Result<usize> {
    let rows = elems.iter().map(|x| flatten(x, space)).collect::<Result<Vec<_>>>()?;
    bareiss_rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(u8, LaurentQ)]) -> Row {
        entries.iter().map(|(j, c)| ((vec![], vec![], vec![*j]), c.clone())).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        let q = LaurentQ::q_pow(1);
        let one = LaurentQ::one();
        // [[q, 1], [q^2, q]] is singular.
        let sing = vec![row(&[(0, q.clone()), (1, one.clone())]), row(&[(0, &q * &q), (1, q.clone())])];
        assert_eq!(bareiss_rank(sing).unwrap(), 1);
        let full = vec![row(&[(0, q.clone()), (1, one.clone())]), row(&[(0, one.clone()), (1, q.clone())])];
        assert_eq!(bareiss_rank(full).unwrap(), 2);
        assert_eq!(bareiss_rank(vec![row(&[]), row(&[])]).unwrap(), 0);
    }
}
