//! Dense elimination over `GF(p)` with 64-bit residues.

use super::field::{inv_mod, mul_mod};

/// Reduces `rows` in place. With `full` the result is in reduced row echelon
/// form; otherwise only rows below each pivot are cleared. Returns the pivot
/// column of each leading row. Pivots are the first nonzero entry found in
/// column order.
pub(crate) fn eliminate(rows: &mut [Vec<u64>], ncols: usize, p: u64, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r][c..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, below) = tail.split_first_mut().expect("pivot row");
        let above: &mut [Vec<u64>] = if full { head } else { &mut [] };
        for row in below.iter_mut().chain(above.iter_mut()) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                if y != 0 {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    eliminate(&mut rows, ncols, p, false).len()
}

/// Right null space basis, one vector per free column, with a 1 at that column.
pub(crate) fn kernel(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivots = eliminate(&mut rows, ncols, p, true);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = (p - rows[k][f]) % p;
            }
            v
        })
        .collect()
}

/// Incrementally built echelon basis of a subspace of `GF(p)^len`.
pub(crate) struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub(crate) fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for (c, row) in &self.rows {
            let f = v[*c];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        v
    }

    /// Adds `v` to the spanning set; false if it was already in the span.
    pub(crate) fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[c], self.p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, self.p);
        }
        self.rows.push((c, v));
        true
    }

    pub(crate) fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }
}
