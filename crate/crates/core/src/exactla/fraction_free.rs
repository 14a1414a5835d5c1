//! Fraction-free (Bareiss) elimination for rational matrices.
//!
//! Rows are first scaled to integers, which changes neither the rank nor the
//! right null space. Every intermediate entry is then a minor of the scaled
//! matrix, so the divisions by the previous pivot are exact. The elimination
//! runs on `i128` and restarts on `BigInt` on the first overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait Int: Clone + PartialEq {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    /// `(a*b - c*d) / e`, `None` on overflow.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Int for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(x % e, 0);
        Some(x / e)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Int for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a * b - c * d;
        if e.is_one() {
            return Some(x);
        }
        debug_assert!((&x % e).is_zero());
        Some(x / e)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Scales each rational row by the lcm of its denominators.
pub(crate) fn integer_rows(rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.into_iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Result of a fraction-free elimination: pivot columns and the last pivot,
/// which (for the Gauss–Jordan variant) is the common value of all pivot entries.
pub(crate) struct Reduced<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub last_pivot: T,
}

fn eliminate_with<T: Int>(mut rows: Vec<Vec<T>>, ncols: usize, full: bool) -> Option<Reduced<T>> {
    let mut pivots = Vec::new();
    let mut prev = T::unit();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| !rows[i][c].is_nil()) else {
            continue;
        };
        rows.swap(r, i);
        let piv = rows[r][c].clone();
        let prow = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || (!full && k < r) {
                continue;
            }
            let f = row[c].clone();
            // Rows below with a zero in the pivot column still need the
            // rescaling by piv/prev to keep the minor invariant.
            for j in 0..ncols {
                if j == c {
                    continue;
                }
                row[j] = T::cross(&piv, &row[j], &f, &prow[j], &prev)?;
            }
            row[c] = T::nil();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    Some(Reduced { rows, pivots, last_pivot: prev })
}

pub(crate) fn eliminate(rows: Vec<Vec<BigInt>>, ncols: usize, full: bool) -> Reduced<BigInt> {
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128()).collect())
        .collect();
    if let Some(small) = small {
        if let Some(red) = eliminate_with(small, ncols, full) {
            return Reduced {
                rows: red.rows.iter().map(|r| r.iter().map(Int::to_big).collect()).collect(),
                pivots: red.pivots,
                last_pivot: red.last_pivot.to_big(),
            };
        }
    }
    eliminate_with(rows, ncols, full).expect("BigInt arithmetic cannot overflow")
}

pub(crate) fn rank(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    eliminate(rows, ncols, false).pivots.len()
}

/// Primitive integer kernel vectors, one per free column (positive there).
pub(crate) fn kernel(rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let red = eliminate(rows, ncols, true);
    let mut is_pivot = vec![false; ncols];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    let d = red.last_pivot;
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigInt::zero(); ncols];
            v[f] = d.clone();
            for (k, &c) in red.pivots.iter().enumerate() {
                v[c] = -red.rows[k][f].clone();
            }
            primitive(v, f)
        })
        .collect()
}

/// Divides by the content and makes the entry at `lead` positive.
pub(crate) fn primitive(mut v: Vec<BigInt>, lead: usize) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let flip = v[lead].is_negative();
    for x in v.iter_mut() {
        *x = &*x / &g;
        if flip {
            *x = -&*x;
        }
    }
    v
}

/// Incremental echelon basis over `Z`, eliminating by cross-multiplication.
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (c, row) in &self.rows {
            if v[*c].is_zero() {
                continue;
            }
            let f = v[*c].clone();
            let piv = &row[*c];
            for (x, y) in v.iter_mut().zip(row) {
                *x = piv * &*x - &f * y;
            }
            let lead = v.iter().position(|x| !x.is_zero()).unwrap_or(0);
            v = primitive(v, lead);
        }
        v
    }

    pub(crate) fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(c) => {
                self.rows.push((c, primitive(v, c)));
                true
            }
            None => false,
        }
    }

    pub(crate) fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }
}
