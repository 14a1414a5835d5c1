use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::simphom::lc_face_table;
use crate::sqfcore::SimplicialComplex;

/// Krull dimensions of the deficiency modules `K^i = Ext^{n-i}(K[Δ], R)` for
/// `0 ≤ i ≤ d`, with `-1` standing for the zero module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeficiencyProfile {
    dims: Vec<i64>,
}

/// Deficiency dimensions of `K[Δ]`.
///
/// By local duality `dim K^i` is the largest `|σ|` over the faces carrying a
/// nonzero piece of `H^i_m(K[Δ])`, i.e. with `H̃_{i-|σ|-1}(lk σ) ≠ 0`.
pub fn deficiency_dims(delta: &SimplicialComplex, field: FieldSpec) -> Result<DeficiencyProfile> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let d = delta.krull_dim();
    let mut dims = vec![-1i64; d + 1];
    for (i, sigma) in lc_face_table(delta, field).into_keys() {
        let slot = dims
            .get_mut(i)
            .ok_or_else(|| Error::Inconsistent(format!("local cohomology in degree {i} > {d}")))?;
        *slot = (*slot).max(sigma.len() as i64);
    }
    Ok(DeficiencyProfile { dims })
}

impl DeficiencyProfile {
    pub fn from_dims(dims: Vec<i64>) -> Self {
        assert!(!dims.is_empty());
        DeficiencyProfile { dims }
    }

    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    pub fn d(&self) -> usize {
        self.dims.len() - 1
    }

    /// `dim K^i`, `-1` past `d`.
    pub fn get(&self, i: usize) -> i64 {
        self.dims.get(i).copied().unwrap_or(-1)
    }

    /// Smallest `i` with `K^i ≠ 0`.
    pub fn depth(&self) -> usize {
        self.dims.iter().position(|&x| x >= 0).unwrap_or(self.d())
    }

    pub fn is_cm(&self) -> bool {
        self.depth() == self.d()
    }

    /// Every `K^i` with `i < d` has finite length.
    pub fn is_generalized_cm(&self) -> bool {
        self.dims[..self.d()].iter().all(|&x| x <= 0)
    }

    fn middle(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        (1..self.d()).map(|i| (i, self.dims[i]))
    }

    /// Largest `r` with `S_r`: `dim K^i ≤ i - r` for `1 ≤ i ≤ d - 1`, capped
    /// at `d` and never below 1.
    pub fn serre_max(&self) -> usize {
        let bound = self
            .middle()
            .filter(|&(_, x)| x >= 0)
            .map(|(i, x)| i as i64 - x)
            .min()
            .unwrap_or(self.d() as i64);
        bound.min(self.d() as i64).max(1) as usize
    }

    /// Smallest `r` with `CM_r`, i.e. `K^i` of dimension below `r` for
    /// `1 ≤ i ≤ d - 1`. Zero exactly for Cohen–Macaulay rings.
    pub fn cm_codim_min(&self) -> usize {
        self.middle().map(|(_, x)| x + 1).max().unwrap_or(0).max(0) as usize
    }
}
