use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::resolve::{minimal_resolution, strand_dual, Resolution};
use crate::sqfcore::MonomialIdeal;
use crate::Options;

/// The upper-triangular table `λ_{p,i}`, `0 ≤ p ≤ i ≤ d`.
///
/// Serialized as `{"d": d, "entries": [[λ_{p,0}, ..., λ_{p,d}] for p]}`,
/// a full `(d+1) × (d+1)` matrix whose entries below the diagonal are zero.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct LyubeznikTable {
    d: usize,
    /// Row-major, `entries[p * (d + 1) + i]`.
    entries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    d: usize,
    entries: Vec<Vec<usize>>,
}

impl TryFrom<TableRepr> for LyubeznikTable {
    type Error = Error;

    fn try_from(r: TableRepr) -> Result<Self> {
        let mut t = LyubeznikTable::zero(r.d);
        if r.entries.len() != r.d + 1 || r.entries.iter().any(|row| row.len() != r.d + 1) {
            return Err(Error::InvalidInput(format!("table entries must be {0}x{0}", r.d + 1)));
        }
        for (p, row) in r.entries.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                if v != 0 && p > i {
                    return Err(Error::InvalidInput(format!("entry ({p}, {i}) lies below the diagonal")));
                }
                if v != 0 {
                    t.set(p, i, v);
                }
            }
        }
        Ok(t)
    }
}

impl From<LyubeznikTable> for TableRepr {
    fn from(t: LyubeznikTable) -> Self {
        let entries = (0..=t.d).map(|p| (0..=t.d).map(|i| t.get(p, i)).collect()).collect();
        TableRepr { d: t.d, entries }
    }
}

impl LyubeznikTable {
    pub fn zero(d: usize) -> Self {
        LyubeznikTable { d, entries: vec![0; (d + 1) * (d + 1)] }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `λ_{p,i}`; zero outside `0 ≤ p ≤ i ≤ d`.
    pub fn get(&self, p: usize, i: usize) -> usize {
        if p > i || i > self.d {
            return 0;
        }
        self.entries[p * (self.d + 1) + i]
    }

    /// # Panics
    /// If `(p, i)` lies outside `0 ≤ p ≤ i ≤ d`.
    pub fn set(&mut self, p: usize, i: usize, value: usize) {
        assert!(p <= i && i <= self.d, "({p}, {i}) outside the table shape for d = {}", self.d);
        self.entries[p * (self.d + 1) + i] = value;
    }

    /// Nonzero entries as `((p, i), λ)`, by row then column.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        let w = self.d + 1;
        self.entries.iter().enumerate().filter(|(_, &v)| v != 0).map(move |(k, &v)| ((k / w, k % w), v))
    }

    /// Trivial means `λ_{d,d} = 1` and every other entry vanishes.
    pub fn is_trivial(&self) -> bool {
        self.nonzero().eq([((self.d, self.d), 1)])
    }
}

impl fmt::Debug for LyubeznikTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LyubeznikTable(d={}", self.d)?;
        for ((p, i), v) in self.nonzero() {
            write!(f, ", λ[{p},{i}]={v}")?;
        }
        write!(f, ")")
    }
}

/// Lyubeznik table of `R/I` over `field`.
///
/// The entries in column `i = n - r` are the homology dimensions of the dual
/// of the `r`-linear strand of the minimal resolution of `I^∨`.
pub fn lyubeznik_table(ideal: &MonomialIdeal, field: FieldSpec, opts: &Options) -> Result<LyubeznikTable> {
    ideal.ensure_proper_nonzero()?;
    let dual = ideal.alexander_dual()?;
    let res = minimal_resolution(&dual, field, opts)?;
    table_from_dual_resolution(&res, ideal.complex().krull_dim())
}

/// Assembles the table from a minimal resolution of `I^∨`, where `d` is the
/// Krull dimension of `R/I`.
///
/// Homology in a column past `d`, in `λ_{0,0}` when `d ≥ 1`, or a vanishing
/// `λ_{d,d}` are internal-consistency errors.
pub fn table_from_dual_resolution(res: &Resolution, d: usize) -> Result<LyubeznikTable> {
    let n = res.n();
    let field = res.field();
    let columns: Vec<(usize, Vec<usize>)> = (0..=n)
        .into_par_iter()
        .map(|r| {
            let strand = strand_dual(res, r);
            if strand.is_zero_complex() {
                return Ok((n - r, Vec::new()));
            }
            let h = (0..=strand.top()).map(|p| strand.homology(p, field)).collect::<Result<Vec<_>>>()?;
            Ok((n - r, h))
        })
        .collect::<Result<_>>()?;

    let mut table = LyubeznikTable::zero(d);
    for (i, homology) in columns {
        for (p, v) in homology.into_iter().enumerate().filter(|&(_, v)| v != 0) {
            if i > d || (i == 0 && d >= 1) {
                return Err(Error::Inconsistent(format!("nonzero λ[{p},{i}] outside the table, d = {d}")));
            }
            table.set(p, i, v);
        }
    }
    if table.get(d, d) == 0 {
        return Err(Error::Inconsistent("λ[d,d] vanishes".into()));
    }
    Ok(table)
}
