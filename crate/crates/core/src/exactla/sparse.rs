//! Sparse elimination for the rank of very sparse matrices with small
//! entries, such as simplicial boundary maps.
//!
//! Only unit pivots are used, so over `Z` the entries stay integral and the
//! rank over `Q` is preserved exactly. Pivots are picked by the Markowitz
//! cost to limit fill-in. Whatever is left once no unit remains is handed
//! back to the caller for dense elimination.

use std::collections::BTreeSet;

use super::field::{inv_mod, mul_mod};

pub(crate) type SparseRow<T> = Vec<(usize, T)>;

pub(crate) trait Arith {
    type T: Copy + PartialEq;
    fn is_zero(&self, x: Self::T) -> bool;
    fn is_unit(&self, x: Self::T) -> bool;
    /// `f` with `a + f * pivot = 0`, for a unit `pivot`.
    fn cancel(&self, a: Self::T, pivot: Self::T) -> Self::T;
    /// `x + f * y`, `None` on overflow.
    fn axpy(&self, x: Self::T, f: Self::T, y: Self::T) -> Option<Self::T>;
    fn mul(&self, f: Self::T, y: Self::T) -> Option<Self::T>;
}

pub(crate) struct Integers;

impl Arith for Integers {
    type T = i64;
    fn is_zero(&self, x: i64) -> bool {
        x == 0
    }
    fn is_unit(&self, x: i64) -> bool {
        x == 1 || x == -1
    }
    fn cancel(&self, a: i64, pivot: i64) -> i64 {
        -a * pivot
    }
    fn axpy(&self, x: i64, f: i64, y: i64) -> Option<i64> {
        x.checked_add(f.checked_mul(y)?)
    }
    fn mul(&self, f: i64, y: i64) -> Option<i64> {
        f.checked_mul(y)
    }
}

pub(crate) struct Residues(pub u64);

impl Arith for Residues {
    type T = u64;
    fn is_zero(&self, x: u64) -> bool {
        x == 0
    }
    fn is_unit(&self, x: u64) -> bool {
        x != 0
    }
    fn cancel(&self, a: u64, pivot: u64) -> u64 {
        let p = self.0;
        mul_mod(p - a, inv_mod(pivot, p), p)
    }
    fn axpy(&self, x: u64, f: u64, y: u64) -> Option<u64> {
        Some((x + mul_mod(f, y, self.0)) % self.0)
    }
    fn mul(&self, f: u64, y: u64) -> Option<u64> {
        Some(mul_mod(f, y, self.0))
    }
}

/// Eliminates with unit pivots as long as possible. Returns the number of
/// pivots taken and the remaining nonzero rows, whose rank must be added.
pub(crate) fn reduce<A: Arith>(rows: Vec<SparseRow<A::T>>, ncols: usize, a: &A) -> (usize, Vec<SparseRow<A::T>>) {
    let mut rows: Vec<Option<SparseRow<A::T>>> = rows.into_iter().map(Some).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row.as_ref().unwrap() {
            col_rows[c].insert(r);
        }
    }
    let mut rank = 0;
    'outer: loop {
        // Markowitz choice among unit entries.
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            let Some(row) = row else { continue };
            for &(c, v) in row {
                if !a.is_unit(v) {
                    continue;
                }
                let cost = (row.len() - 1) * (col_rows[c].len() - 1);
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        break;
                    }
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = rows[pr].take().unwrap();
        let pv = pivot_row.iter().find(|e| e.0 == pc).unwrap().1;
        for &(c, _) in &pivot_row {
            col_rows[c].remove(&pr);
        }
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for k in targets {
            let row = rows[k].as_ref().unwrap();
            let av = row.iter().find(|e| e.0 == pc).unwrap().1;
            let f = a.cancel(av, pv);
            let Some(merged) = combine(row, f, &pivot_row, a) else {
                // Overflow: put the pivot row back and stop here.
                for &(c, _) in &pivot_row {
                    col_rows[c].insert(pr);
                }
                rows[pr] = Some(pivot_row);
                break 'outer;
            };
            for &(c, _) in row {
                col_rows[c].remove(&k);
            }
            for &(c, _) in &merged {
                col_rows[c].insert(k);
            }
            rows[k] = if merged.is_empty() { None } else { Some(merged) };
        }
        rank += 1;
    }
    (rank, rows.into_iter().flatten().collect())
}

/// `x + f * y` on sorted sparse rows, dropping zeros.
fn combine<A: Arith>(x: &SparseRow<A::T>, f: A::T, y: &SparseRow<A::T>, a: &A) -> Option<SparseRow<A::T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (c, v) = match (x.get(i), y.get(j)) {
            (Some(&(cx, vx)), Some(&(cy, vy))) if cx == cy => {
                i += 1;
                j += 1;
                (cx, a.axpy(vx, f, vy)?)
            }
            (Some(&(cx, vx)), Some(&(cy, _))) if cx < cy => {
                i += 1;
                (cx, vx)
            }
            (Some(&(cx, vx)), None) => {
                i += 1;
                (cx, vx)
            }
            (_, Some(&(cy, vy))) => {
                j += 1;
                (cy, a.mul(f, vy)?)
            }
            (None, None) => unreachable!(),
        };
        if !a.is_zero(v) {
            out.push((c, v));
        }
    }
    Some(out)
}
