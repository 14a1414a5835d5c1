//! Minimal `Z^n`-graded free resolutions of squarefree monomial ideals.
//!
//! A resolution is stored as monomial matrices: each differential
//! `d_t: L_t -> L_{t-1}` keeps the multidegree of every free generator and a
//! scalar matrix, with the entry in row `h`, column `g` standing for
//! `scalar · x^(deg g ∖ deg h)`. Because every Betti degree of a squarefree
//! ideal is squarefree, all the data lives in squarefree degrees.
//!
//! [`minimal_resolution`] builds the resolution degree by degree from kernels;
//! [`taylor_minimized`] is an independent construction used as an oracle; and
//! [`strand_dual`] extracts the dualized linear strands whose homology gives
//! Lyubeznik numbers.

mod strand;
mod syzygy;
mod taylor;

use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{format_scalar, FieldSpec, ScalarMatrix};
use crate::simphom::BettiTable;
use crate::sqfcore::{MonomialIdeal, SqfDegree};

pub use strand::{strand_dual, StrandDualComplex};
pub use syzygy::minimal_resolution;
pub use taylor::{taylor_minimized, TAYLOR_MAX_GENS};

/// Ordered generator degrees of one free module `L_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeBasis {
    degrees: Vec<SqfDegree>,
}

impl FreeBasis {
    pub fn new(degrees: Vec<SqfDegree>) -> Self {
        FreeBasis { degrees }
    }

    pub fn degrees(&self) -> &[SqfDegree] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Whether the degrees are sorted by size, then lexicographically.
    pub fn is_canonical(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0].cmp_graded(&w[1]).is_le())
    }

    /// Number of generators of each total degree.
    pub fn count_of_total_degree(&self, total: usize) -> usize {
        self.degrees.iter().filter(|d| d.len() == total).count()
    }

    pub(crate) fn indices_within(&self, alpha: SqfDegree) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i].is_subset(alpha)).collect()
    }

    pub(crate) fn indices_of_total(&self, total: usize) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i].len() == total).collect()
    }
}

/// A differential `L_t -> L_{t-1}` with rows indexed by the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub rows: FreeBasis,
    pub cols: FreeBasis,
    pub scalars: ScalarMatrix,
}

impl MonomialMatrix {
    /// Checks that every nonzero scalar joins a strictly smaller row degree
    /// to a larger column degree, so no entry is a unit.
    pub fn check_minimal(&self) -> Result<()> {
        for i in 0..self.scalars.rows() {
            for j in 0..self.scalars.cols() {
                if self.scalars.get(i, j).is_zero() {
                    continue;
                }
                let (r, c) = (self.rows.degrees[i], self.cols.degrees[j]);
                if !r.is_proper_subset(c) {
                    return Err(Error::Inconsistent(format!(
                        "nonminimal entry between degrees {r} and {c}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A minimal free resolution `0 <- L_0 <- L_1 <- ... <- L_m` of an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    bases: Vec<FreeBasis>,
    diffs: Vec<MonomialMatrix>,
    ideal: MonomialIdeal,
    field: FieldSpec,
}

impl Resolution {
    pub(crate) fn from_parts(
        bases: Vec<FreeBasis>,
        diffs: Vec<MonomialMatrix>,
        ideal: MonomialIdeal,
        field: FieldSpec,
    ) -> Self {
        debug_assert_eq!(bases.len(), diffs.len() + 1);
        Resolution { bases, diffs, ideal, field }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.ideal.n()
    }

    /// Free modules `L_0, ..., L_m`.
    pub fn bases(&self) -> &[FreeBasis] {
        &self.bases
    }

    /// `d_t` for `t ≥ 1`; `None` past the end.
    pub fn differential(&self, t: usize) -> Option<&MonomialMatrix> {
        t.checked_sub(1).and_then(|k| self.diffs.get(k))
    }

    /// Index `m` of the last free module.
    pub fn length(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::new(self.n());
        for (j, b) in self.bases.iter().enumerate() {
            for &d in &b.degrees {
                t.add(j, d, 1);
            }
        }
        t
    }

    /// Verifies `d_t ∘ d_{t+1} = 0` for all `t` and that `L_1` maps into the
    /// kernel of the augmentation `L_0 -> I`. All monomials along a composite
    /// `x^(c∖b) · x^(b∖a)` equal `x^(c∖a)`, so the degreewise identity is the
    /// scalar identity.
    pub fn check_complex(&self) -> Result<()> {
        if let Some(d1) = self.diffs.first() {
            let ones = ScalarMatrix::from_rows_with_cols(
                vec![vec![self.field.from_i64(1); d1.rows.len()]],
                d1.rows.len(),
            );
            if !ones.mul(&d1.scalars, self.field).is_zero() {
                return Err(Error::Inconsistent("d_1 does not map into the kernel of L_0 -> I".into()));
            }
        }
        for (t, pair) in self.diffs.windows(2).enumerate() {
            if !pair[0].scalars.mul(&pair[1].scalars, self.field).is_zero() {
                return Err(Error::Inconsistent(format!("d_{} ∘ d_{} is not zero", t + 1, t + 2)));
            }
        }
        Ok(())
    }

    pub fn check_minimal(&self) -> Result<()> {
        self.diffs.iter().try_for_each(MonomialMatrix::check_minimal)
    }

    /// One line per free generator:
    /// `t=<step> col=<degree> : (<row degree>, <scalar>) ...`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (t, basis) in self.bases.iter().enumerate() {
            for (j, col) in basis.degrees.iter().enumerate() {
                write!(out, "t={t} col={col} :").unwrap();
                if let Some(d) = self.differential(t) {
                    for i in 0..d.scalars.rows() {
                        let x = d.scalars.get(i, j);
                        if !x.is_zero() {
                            write!(out, " ({}, {})", d.rows.degrees[i], format_scalar(x)).unwrap();
                        }
                    }
                }
                out.push('\n');
            }
        }
        out
    }
}
