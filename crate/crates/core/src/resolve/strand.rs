use super::Resolution;
use crate::error::Result;
use crate::exactla::{homology_dim, FieldSpec, ScalarMatrix};

/// The dual of the `r`-linear strand of a resolution, as a complex of vector
/// spaces `0 <- V_0 <- V_1 <- ... <- V_{n-r} <- 0`.
///
/// `V_p` has one basis vector per generator of `L_{n-r-p}` in total degree
/// `n - p`, and `∂_p: V_p -> V_{p-1}` is the transpose of the scalar block of
/// `d_{n-r-p+1}` between the strand generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandDualComplex {
    r: usize,
    dims: Vec<usize>,
    /// `diffs[p - 1] = ∂_p` for `1 ≤ p ≤ n - r`.
    diffs: Vec<ScalarMatrix>,
}

impl StrandDualComplex {
    pub fn r(&self) -> usize {
        self.r
    }

    /// Top position `n - r`.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// `dim V_p`, zero outside `0..=n-r`.
    pub fn dim(&self, p: usize) -> usize {
        self.dims.get(p).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `∂_p: V_p -> V_{p-1}`; the zero map at both ends.
    pub fn boundary(&self, p: usize) -> ScalarMatrix {
        if p == 0 {
            return ScalarMatrix::zeros(0, self.dim(0));
        }
        match self.diffs.get(p - 1) {
            Some(m) => m.clone(),
            None => ScalarMatrix::zeros(self.dim(p - 1), self.dim(p)),
        }
    }

    pub fn is_zero_complex(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `dim H_p`, checking `∂_p ∘ ∂_{p+1} = 0` on the way.
    pub fn homology(&self, p: usize, field: FieldSpec) -> Result<usize> {
        homology_dim(&self.boundary(p), &self.boundary(p + 1), field)
    }

    /// `Σ_p (-1)^p dim V_p`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// Dualized `r`-linear strand of `res`. Strands without generators give the
/// zero complex. Requires `r ≤ n`.
pub fn strand_dual(res: &Resolution, r: usize) -> StrandDualComplex {
    let n = res.n();
    assert!(r <= n, "strand index {r} exceeds n = {n}");
    let top = n - r;
    let strand_indices = |j: usize| -> Vec<usize> {
        res.bases().get(j).map_or_else(Vec::new, |b| b.indices_of_total(j + r))
    };
    // Position p holds the strand of L_{n-r-p}.
    let index: Vec<Vec<usize>> = (0..=top).map(|p| strand_indices(top - p)).collect();
    let dims = index.iter().map(Vec::len).collect();
    let diffs = (1..=top)
        .map(|p| {
            let j = top - p;
            match res.differential(j + 1) {
                Some(d) => d.scalars.submatrix(&index[p], &index[p - 1]).transpose(),
                None => ScalarMatrix::zeros(index[p - 1].len(), index[p].len()),
            }
        })
        .collect();
    StrandDualComplex { r, dims, diffs }
}
