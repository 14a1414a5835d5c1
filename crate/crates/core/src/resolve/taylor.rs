use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{FreeBasis, MonomialMatrix, Resolution};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, ScalarMatrix};
use crate::sqfcore::{MonomialIdeal, SqfDegree};

/// Largest generator count accepted by [`taylor_minimized`].
pub const TAYLOR_MAX_GENS: usize = 14;

type Column = BTreeMap<usize, BigRational>;

/// A chain complex of free modules with sparse columns, shrunk in place by
/// cancelling unit entries.
struct SparseComplex {
    degrees: Vec<Vec<SqfDegree>>,
    alive: Vec<Vec<bool>>,
    /// `diffs[t][c]` is column `c` of `d_t`; `diffs[0]` is unused.
    diffs: Vec<Vec<Column>>,
    field: FieldSpec,
}

impl SparseComplex {
    fn find_unit(&self) -> Option<(usize, usize, usize)> {
        for t in 1..self.diffs.len() {
            for (c, col) in self.diffs[t].iter().enumerate() {
                if !self.alive[t][c] {
                    continue;
                }
                for (&r, x) in col {
                    if self.degrees[t - 1][r] == self.degrees[t][c] && !x.is_zero() {
                        return Some((t, r, c));
                    }
                }
            }
        }
        None
    }

    /// Gaussian elimination of the pair `c ∈ L_t`, `r ∈ L_{t-1}`:
    /// `d_t' = d_t - d_t[·,c] a^{-1} d_t[r,·]`, then drop row `c` of `d_{t+1}`
    /// and column `r` of `d_{t-1}`.
    fn cancel(&mut self, t: usize, r: usize, c: usize) {
        let f = self.field;
        let a_inv = f.inv(&self.diffs[t][c][&r]).expect("unit pivot");
        let pivot_col = std::mem::take(&mut self.diffs[t][c]);
        self.alive[t][c] = false;
        for x in 0..self.diffs[t].len() {
            if !self.alive[t][x] {
                continue;
            }
            let Some(b) = self.diffs[t][x].remove(&r) else { continue };
            let factor = f.mul(&b, &a_inv);
            let col = &mut self.diffs[t][x];
            for (&y, v) in &pivot_col {
                if y == r {
                    continue;
                }
                let cur = col.remove(&y).unwrap_or_else(BigRational::zero);
                let next = f.sub(&cur, &f.mul(v, &factor));
                if !next.is_zero() {
                    col.insert(y, next);
                }
            }
        }
        if t + 1 < self.diffs.len() {
            for col in self.diffs[t + 1].iter_mut() {
                col.remove(&c);
            }
        }
        self.alive[t - 1][r] = false;
        if t >= 2 {
            self.diffs[t - 1][r].clear();
        }
    }
}

/// Minimal resolution obtained from the Taylor complex of the generators by
/// cancelling unit entries until none remain.
///
/// The Taylor basis in step `t` is the `(t+1)`-subsets of the generators with
/// their lcm degrees; the face `S ∖ {g_k}` appears with sign `(-1)^k`. This
/// construction shares nothing with [`super::minimal_resolution`] beyond the
/// field arithmetic, which is why it serves as an oracle.
pub fn taylor_minimized(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Resolution> {
    ideal.ensure_proper_nonzero()?;
    let mut gens = ideal.gens().to_vec();
    gens.sort_by(SqfDegree::cmp_graded);
    let m = gens.len();
    if m > TAYLOR_MAX_GENS {
        return Err(Error::GuardExceeded { what: "Taylor generators", value: m, limit: TAYLOR_MAX_GENS });
    }

    // subsets[t] = the (t+1)-subsets of generator indices, as bitmasks.
    let mut subsets: Vec<Vec<u32>> = vec![Vec::new(); m];
    for s in 1u32..(1 << m) {
        subsets[s.count_ones() as usize - 1].push(s);
    }
    let lcm = |s: u32| {
        (0..m).filter(|&i| s & (1 << i) != 0).fold(SqfDegree::EMPTY, |acc, i| acc.union(gens[i]))
    };
    let degrees: Vec<Vec<SqfDegree>> = subsets.iter().map(|level| level.iter().map(|&s| lcm(s)).collect()).collect();
    let mut diffs: Vec<Vec<Column>> = vec![Vec::new(); m];
    for t in 1..m {
        let index: BTreeMap<u32, usize> = subsets[t - 1].iter().enumerate().map(|(i, &s)| (s, i)).collect();
        diffs[t] = subsets[t]
            .iter()
            .map(|&s| {
                (0..m)
                    .filter(|&i| s & (1 << i) != 0)
                    .enumerate()
                    .map(|(k, i)| {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        (index[&(s & !(1 << i))], field.from_i64(sign))
                    })
                    .collect()
            })
            .collect();
    }
    let alive = degrees.iter().map(|d| vec![true; d.len()]).collect();
    let mut cx = SparseComplex { degrees, alive, diffs, field };

    while let Some((t, r, c)) = cx.find_unit() {
        if t == 1 {
            return Err(Error::Inconsistent("unit entry next to the augmentation".into()));
        }
        cx.cancel(t, r, c);
    }

    // Surviving generators, re-ordered canonically (stable on equal degrees).
    let order: Vec<Vec<usize>> = (0..m)
        .map(|t| {
            let mut idx: Vec<usize> = (0..cx.degrees[t].len()).filter(|&i| cx.alive[t][i]).collect();
            idx.sort_by(|&a, &b| cx.degrees[t][a].cmp_graded(&cx.degrees[t][b]));
            idx
        })
        .collect();
    let len = order.iter().rposition(|o| !o.is_empty()).map_or(0, |k| k + 1);
    let bases: Vec<FreeBasis> = order[..len]
        .iter()
        .enumerate()
        .map(|(t, o)| FreeBasis::new(o.iter().map(|&i| cx.degrees[t][i]).collect()))
        .collect();
    let mut mats = Vec::new();
    for t in 1..len {
        let row_pos: BTreeMap<usize, usize> = order[t - 1].iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut scalars = ScalarMatrix::zeros(order[t - 1].len(), order[t].len());
        for (j, &c) in order[t].iter().enumerate() {
            for (r, x) in &cx.diffs[t][c] {
                scalars.set(row_pos[r], j, x.clone());
            }
        }
        mats.push(MonomialMatrix { rows: bases[t - 1].clone(), cols: bases[t].clone(), scalars });
    }
    Ok(Resolution::from_parts(bases, mats, ideal.clone(), field))
}
