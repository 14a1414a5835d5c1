//! Lyubeznik tables and the ring invariants they are compared against.

mod deficiency;
mod gamma;
mod table;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactla::FieldSpec;
use crate::resolve::{minimal_resolution, Resolution};
use crate::sqfcore::{MonomialIdeal, SimplicialComplex};
use crate::Options;

pub use deficiency::{deficiency_dims, DeficiencyProfile};
pub use gamma::{face_height, gamma_components, gamma_graph, GammaGraph};
pub use table::{lyubeznik_table, table_from_dual_resolution, LyubeznikTable};
pub use verify::{verify, verify_with_table, CheckRecord, Relation, Report, Status};

/// Everything computed about one ideal: the complex, the resolution of the
/// dual, the table and the deficiency profile.
///
/// ```
/// use lyubeznik::exactla::FieldSpec;
/// use lyubeznik::invariants::Analysis;
/// use lyubeznik::sqfcore::{MonomialIdeal, SqfDegree};
///
/// // Two skew lines: (x1, x2) ∩ (x3, x4).
/// let n = 4;
/// let g = |v: [usize; 2]| SqfDegree::from_vars(n, v).unwrap();
/// let ideal = MonomialIdeal::from_gens(n, &[g([1, 3]), g([1, 4]), g([2, 3]), g([2, 4])]).unwrap();
/// let a = Analysis::compute(&ideal, FieldSpec::Rationals, &Default::default()).unwrap();
/// assert_eq!(a.table.get(0, 1), 1);
/// assert_eq!(a.table.get(2, 2), 2);
/// assert!(!a.verify().has_failures());
/// ```
#[derive(Clone, Debug)]
pub struct Analysis {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub complex: SimplicialComplex,
    pub dual_resolution: Resolution,
    pub table: LyubeznikTable,
    pub deficiency: DeficiencyProfile,
}

/// Depth, dimension and the Cohen–Macaulay type conditions of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingProperties {
    pub dim: usize,
    pub depth: usize,
    pub equidimensional: bool,
    pub cohen_macaulay: bool,
    pub generalized_cm: bool,
    pub serre_max: usize,
    pub cm_codim_min: usize,
    pub deficiency: DeficiencyProfile,
}

impl Analysis {
    pub fn compute(ideal: &MonomialIdeal, field: FieldSpec, opts: &Options) -> Result<Self> {
        ideal.ensure_proper_nonzero()?;
        let complex = ideal.complex();
        let dual_resolution = minimal_resolution(&ideal.alexander_dual()?, field, opts)?;
        let table = table_from_dual_resolution(&dual_resolution, complex.krull_dim())?;
        let deficiency = deficiency_dims(&complex, field)?;
        Ok(Analysis { ideal: ideal.clone(), field, complex, dual_resolution, table, deficiency })
    }

    pub fn dim(&self) -> usize {
        self.complex.krull_dim()
    }

    pub fn properties(&self) -> RingProperties {
        ring_properties(&self.complex, &self.deficiency)
    }

    pub fn verify(&self) -> Report {
        verify(self)
    }
}

pub fn ring_properties(complex: &SimplicialComplex, def: &DeficiencyProfile) -> RingProperties {
    RingProperties {
        dim: complex.krull_dim(),
        depth: def.depth(),
        equidimensional: complex.is_equidimensional(),
        cohen_macaulay: def.is_cm(),
        generalized_cm: def.is_generalized_cm(),
        serre_max: def.serre_max(),
        cm_codim_min: def.cm_codim_min(),
        deficiency: def.clone(),
    }
}

/// The full verification report for `I` over `field`.
pub fn verify_report(ideal: &MonomialIdeal, field: FieldSpec, opts: &Options) -> Result<Report> {
    Ok(Analysis::compute(ideal, field, opts)?.verify())
}

#[cfg(test)]
mod tests;
