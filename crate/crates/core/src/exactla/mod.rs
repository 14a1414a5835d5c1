//! Exact linear algebra over `Q` and `GF(p)`: ranks, kernels, complements of
//! subspaces, and homology dimensions of two-term chain pieces.
//!
//! Matrices are dense. Over `Q` elimination is fraction-free; over `GF(p)`
//! it runs on 64-bit residues. Pivots are always the first nonzero entry in
//! column order, so bases come out the same on every run.

mod field;
mod fraction_free;
mod modp;
mod sparse;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use field::{format_scalar, FieldSpec};

/// A column vector of field elements.
pub type Vector = Vec<BigRational>;

/// Dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::from_integer(1.into()));
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        ScalarMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Like [`from_rows`](Self::from_rows) but keeps `cols` when there are no rows.
    pub fn from_rows_with_cols(rows: Vec<Vec<BigRational>>, cols: usize) -> Self {
        if rows.is_empty() {
            return Self::zeros(0, cols);
        }
        let m = Self::from_rows(rows);
        assert_eq!(m.cols, cols, "column count mismatch");
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                s.set(a, b, self.get(i, j).clone());
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Product over `field`; panics on a dimension mismatch.
    pub fn mul(&self, other: &ScalarMatrix, field: FieldSpec) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        for x in out.entries.iter_mut() {
            *x = field.reduce(x);
        }
        out
    }

    fn residue_rows(&self, p: u64) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| FieldSpec::residue(p, x)).collect())
            .collect()
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ScalarMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

fn int_vec(v: Vec<BigInt>) -> Vector {
    v.into_iter().map(BigRational::from_integer).collect()
}

fn residue_vec(v: Vec<u64>) -> Vector {
    v.into_iter().map(|x| BigRational::from_integer(BigInt::from(x))).collect()
}

fn residues(p: u64, v: &[BigRational]) -> Vec<u64> {
    v.iter().map(|x| FieldSpec::residue(p, x)).collect()
}

pub fn rank(m: &ScalarMatrix, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field {
        FieldSpec::Rationals => fraction_free::rank(fraction_free::integer_rows(m.to_rows()), m.cols),
        FieldSpec::Prime(p) => modp::rank(m.residue_rows(p as u64), m.cols, p as u64),
    }
}

/// Rank of an integer matrix given by rows, without going through [`ScalarMatrix`].
pub fn rank_of_integer_rows(rows: &[Vec<i64>], ncols: usize, field: FieldSpec) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    match field {
        FieldSpec::Rationals => fraction_free::rank(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            ncols,
        ),
        FieldSpec::Prime(p) => {
            let p = p as u64;
            let rows = rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
            modp::rank(rows, ncols, p)
        }
    }
}

/// Rank of a sparse integer matrix whose rows are `(column, value)` pairs
/// sorted by column. Meant for boundary-like matrices with unit entries.
pub fn rank_of_sparse_rows(rows: Vec<Vec<(usize, i64)>>, ncols: usize, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => {
            let (r, rest) = sparse::reduce(rows, ncols, &sparse::Integers);
            let (dense, width) = densify(&rest, BigInt::from);
            r + if dense.is_empty() { 0 } else { fraction_free::rank(dense, width) }
        }
        FieldSpec::Prime(p) => {
            let p = p as u64;
            let rows = rows
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|(c, x)| (c, x.rem_euclid(p as i64) as u64))
                        .filter(|e| e.1 != 0)
                        .collect()
                })
                .collect();
            let (r, rest) = sparse::reduce(rows, ncols, &sparse::Residues(p));
            let (dense, width) = densify(&rest, |x| x);
            r + if dense.is_empty() { 0 } else { modp::rank(dense, width, p) }
        }
    }
}

/// Dense copy of the rows restricted to the columns that occur.
fn densify<T: Copy, U: Clone + Zero>(rows: &[Vec<(usize, T)>], conv: impl Fn(T) -> U) -> (Vec<Vec<U>>, usize) {
    let mut cols: Vec<usize> = rows.iter().flatten().map(|e| e.0).collect();
    cols.sort_unstable();
    cols.dedup();
    let dense = rows
        .iter()
        .map(|row| {
            let mut d = vec![U::zero(); cols.len()];
            for &(c, x) in row {
                d[cols.binary_search(&c).unwrap()] = conv(x);
            }
            d
        })
        .collect();
    (dense, cols.len())
}

/// Basis of the right null space, `cols - rank` vectors.
///
/// Each vector corresponds to one non-pivot column and is supported on that
/// column and the pivot columns. Over `Q` the vectors are primitive integer
/// vectors; over `GF(p)` the free coordinate is 1.
pub fn kernel_basis(m: &ScalarMatrix, field: FieldSpec) -> Vec<Vector> {
    if m.rows == 0 {
        return (0..m.cols)
            .map(|j| {
                let mut v = vec![BigRational::zero(); m.cols];
                v[j] = BigRational::from_integer(1.into());
                v
            })
            .collect();
    }
    match field {
        FieldSpec::Rationals => fraction_free::kernel(fraction_free::integer_rows(m.to_rows()), m.cols)
            .into_iter()
            .map(int_vec)
            .collect(),
        FieldSpec::Prime(p) => modp::kernel(m.residue_rows(p as u64), m.cols, p as u64)
            .into_iter()
            .map(residue_vec)
            .collect(),
    }
}

/// Incremental span membership over a fixed field.
pub struct SpanBuilder {
    inner: SpanInner,
}

enum SpanInner {
    Rational(fraction_free::Echelon),
    Prime(u64, modp::Echelon),
}

impl SpanBuilder {
    pub fn new(field: FieldSpec) -> Self {
        let inner = match field {
            FieldSpec::Rationals => SpanInner::Rational(fraction_free::Echelon::new()),
            FieldSpec::Prime(p) => SpanInner::Prime(p as u64, modp::Echelon::new(p as u64)),
        };
        SpanBuilder { inner }
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        match &mut self.inner {
            SpanInner::Rational(e) => e.insert(fraction_free::integer_rows(vec![v.to_vec()]).remove(0)),
            SpanInner::Prime(p, e) => e.insert(residues(*p, v)),
        }
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        match &self.inner {
            SpanInner::Rational(e) => e.contains(&fraction_free::integer_rows(vec![v.to_vec()])[0]),
            SpanInner::Prime(p, e) => e.contains(&residues(*p, v)),
        }
    }
}

/// Picks members of `v` whose classes form a basis of `span(v) / span(s)`.
///
/// The choice is greedy in the order of `v`. Fails if some member of `s` lies
/// outside `span(v)`.
pub fn complement_basis(v: &[Vector], s: &[Vector], field: FieldSpec) -> Result<Vec<Vector>> {
    let mut span_v = SpanBuilder::new(field);
    for x in v {
        span_v.insert(x);
    }
    if let Some(k) = s.iter().position(|x| !span_v.contains(x)) {
        return Err(Error::Precondition(format!(
            "subspace vector #{k} is not in the span of the ambient vectors"
        )));
    }
    let mut acc = SpanBuilder::new(field);
    for x in s {
        acc.insert(x);
    }
    Ok(v.iter().filter(|x| acc.insert(x)).cloned().collect())
}

/// `dim ker(out) - rank(into)` for `into: V_{p+1} -> V_p`, `out: V_p -> V_{p-1}`.
///
/// The composite `out ∘ into` must vanish.
pub fn homology_dim(out: &ScalarMatrix, into: &ScalarMatrix, field: FieldSpec) -> Result<usize> {
    if out.cols != into.rows {
        return Err(Error::Inconsistent(format!(
            "chain maps do not compose: {}x{} after {}x{}",
            out.rows, out.cols, into.rows, into.cols
        )));
    }
    if out.rows > 0 && into.cols > 0 && !out.mul(into, field).is_zero() {
        return Err(Error::Inconsistent("consecutive differentials do not compose to zero".into()));
    }
    let ker = out.cols - rank(out, field);
    let im = rank(into, field);
    Ok(ker - im)
}

#[cfg(test)]
mod tests;
