use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{FreeBasis, MonomialMatrix, Resolution};
use crate::error::{Error, Result};
use crate::exactla::{complement_basis, kernel_basis, FieldSpec, ScalarMatrix, Vector};
use crate::simphom::hochster_betti;
use crate::sqfcore::{MonomialIdeal, SqfDegree};
use crate::Options;

/// Minimal free resolution of a squarefree ideal, built one squarefree
/// degree at a time.
///
/// For step `t` and each degree `α` (by size, then lexicographically), the
/// kernel of `d_t` restricted to degree `α` is computed; the syzygies already
/// chosen in degrees strictly below `α` span part of it, and a complement of
/// that span becomes the new generators of `L_{t+1}` in degree `α`. Only
/// degrees that are unions of `L_t`-generator degrees can carry new
/// generators, so the others are skipped.
///
/// With `opts.oracle_check` the Betti numbers are compared against
/// [`hochster_betti`] and a mismatch is an [`Error::Inconsistent`].
pub fn minimal_resolution(ideal: &MonomialIdeal, field: FieldSpec, opts: &Options) -> Result<Resolution> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.n();
    opts.check_vars(n)?;
    opts.check_gens(ideal.gens().len())?;

    let mut gens = ideal.gens().to_vec();
    gens.sort_by(SqfDegree::cmp_graded);
    let mut bases = vec![FreeBasis::new(gens)];
    let mut diffs: Vec<MonomialMatrix> = Vec::new();

    loop {
        let t = bases.len() - 1;
        let cur = &bases[t];
        let prev = diffs.last();
        let (degrees, columns) = next_syzygies(n, cur, prev, field)?;
        if degrees.is_empty() {
            break;
        }
        if t + 1 > n {
            return Err(Error::Inconsistent(format!("resolution longer than n = {n}")));
        }
        let next = FreeBasis::new(degrees);
        let scalars = ScalarMatrix::from_columns(cur.len(), &columns);
        diffs.push(MonomialMatrix { rows: cur.clone(), cols: next.clone(), scalars });
        bases.push(next);
    }

    let res = Resolution::from_parts(bases, diffs, ideal.clone(), field);
    if opts.oracle_check {
        let oracle = hochster_betti(ideal, field, opts)?;
        if oracle != res.betti() {
            return Err(Error::Inconsistent(
                "resolution Betti numbers disagree with Hochster's formula".into(),
            ));
        }
    }
    Ok(res)
}

/// Degrees that are unions of at least two generator degrees of `basis`,
/// sorted by size and then lexicographically.
fn candidate_degrees(n: usize, basis: &FreeBasis) -> Vec<SqfDegree> {
    let degs = basis.degrees();
    let mut out: Vec<SqfDegree> = (0..1u64 << n)
        .into_par_iter()
        .map(SqfDegree::from_bits)
        .filter(|&alpha| {
            let mut count = 0;
            let mut cover = SqfDegree::EMPTY;
            for d in degs.iter().filter(|d| d.is_subset(alpha)) {
                count += 1;
                cover = cover.union(*d);
            }
            count >= 2 && cover == alpha
        })
        .collect();
    out.sort_by(SqfDegree::cmp_graded);
    out
}

/// Kernel of `d_t` in degree `alpha`, in coordinates over the generators of
/// `L_t` lying below `alpha` (`within`).
fn kernel_at(
    alpha: SqfDegree,
    within: &[usize],
    prev: Option<&MonomialMatrix>,
    field: FieldSpec,
) -> Vec<Vector> {
    let m = match prev {
        // d_0 is the augmentation L_0 -> I, which is 1 on each generator.
        None => ScalarMatrix::from_rows(vec![vec![field.from_i64(1); within.len()]]),
        Some(d) => {
            let rows = d.rows.indices_within(alpha);
            d.scalars.submatrix(&rows, within)
        }
    };
    kernel_basis(&m, field)
}

type Syzygies = (Vec<SqfDegree>, Vec<Vector>);

fn next_syzygies(n: usize, cur: &FreeBasis, prev: Option<&MonomialMatrix>, field: FieldSpec) -> Result<Syzygies> {
    let candidates = candidate_degrees(n, cur);
    let mut degrees: Vec<SqfDegree> = Vec::new();
    let mut columns: Vec<Vector> = Vec::new();

    let mut start = 0;
    while start < candidates.len() {
        let size = candidates[start].len();
        let end = candidates[start..].iter().position(|a| a.len() != size).map_or(candidates.len(), |k| start + k);
        // Degrees of equal size never lie below one another, so their kernels
        // are independent of the generators chosen at this level.
        let kernels: Vec<(Vec<usize>, Vec<Vector>)> = candidates[start..end]
            .par_iter()
            .map(|&alpha| {
                let within = cur.indices_within(alpha);
                let k = kernel_at(alpha, &within, prev, field);
                (within, k)
            })
            .collect();
        for (&alpha, (within, kernel)) in candidates[start..end].iter().zip(kernels) {
            if kernel.is_empty() {
                continue;
            }
            let below: Vec<Vector> = degrees
                .iter()
                .zip(&columns)
                .filter(|(d, _)| d.is_proper_subset(alpha))
                .map(|(_, col)| restrict(col, &within))
                .collect();
            for v in complement_basis(&kernel, &below, field)? {
                let mut col = vec![BigRational::zero(); cur.len()];
                for (&i, x) in within.iter().zip(v) {
                    col[i] = x;
                }
                degrees.push(alpha);
                columns.push(col);
            }
        }
        start = end;
    }
    Ok((degrees, columns))
}

fn restrict(col: &[BigRational], within: &[usize]) -> Vector {
    debug_assert!(col
        .iter()
        .enumerate()
        .all(|(i, x)| x.is_zero() || within.contains(&i)));
    within.iter().map(|&i| col[i].clone()).collect()
}
