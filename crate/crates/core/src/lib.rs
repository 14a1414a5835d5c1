//! Lyubeznik tables of Stanley–Reisner rings.
//!
//! For a squarefree monomial ideal `I ⊆ K[x_1, ..., x_n]` the Lyubeznik numbers
//! `λ_{p,i}(R/I)` are read off from the homology of the dualized linear strands
//! of the minimal free resolution of the Alexander dual `I^∨`. This crate
//! computes those resolutions exactly (over `Q` or a prime field), assembles
//! the table, and relates it to the deficiency modules, the Serre conditions
//! `S_r`, the `CM_r` conditions, and the graphs `Γ_t` on the minimal primes.
//!
//! The modules build on one another:
//!
//! - [`sqfcore`]: squarefree degrees, complexes, ideals, dualities.
//! - [`exactla`]: exact ranks, kernels and homology over `Q` and `GF(p)`.
//! - [`simphom`]: reduced simplicial homology and Hochster-type formulas.
//! - [`resolve`]: minimal multigraded resolutions and linear strands.
//! - [`invariants`]: tables, deficiency dimensions, `Γ_t`, verification.
//! - [`cli`]: job files, rendering, bundled fixtures and the command front end.
//!
//! ```
//! use lyubeznik::{exactla::FieldSpec, invariants, sqfcore::*};
//!
//! // (x1x3, x1x2, x2x3) in five variables has a trivial table.
//! let n = 5;
//! let g = |v: &[usize]| SqfDegree::from_vars(n, v.iter().copied()).unwrap();
//! let ideal = MonomialIdeal::from_gens(n, &[g(&[1, 3]), g(&[1, 2]), g(&[2, 3])]).unwrap();
//! let table = invariants::lyubeznik_table(&ideal, FieldSpec::Rationals, &Default::default()).unwrap();
//! assert!(table.is_trivial());
//! ```

pub mod cli;
pub mod error;
pub mod exactla;
pub mod invariants;
pub mod resolve;
pub mod simphom;
pub mod sqfcore;

pub use error::{Error, Result};

/// Size guards shared by the expensive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Cross-check every resolution against the Hochster Betti oracle.
    pub oracle_check: bool,
    /// Largest variable count accepted for `2^n` sweeps.
    pub max_vars: usize,
    /// Largest number of generators accepted for the ideal being resolved.
    pub max_gens: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { oracle_check: true, max_vars: 20, max_gens: 4096 }
    }
}

impl Options {
    /// Lifts both guards (the bitmask representation still caps `n` at 64).
    pub fn forced(self) -> Self {
        Options { max_vars: sqfcore::MAX_VARS, max_gens: usize::MAX, ..self }
    }

    pub(crate) fn check_vars(&self, n: usize) -> Result<()> {
        if n > self.max_vars {
            return Err(Error::GuardExceeded { what: "variables", value: n, limit: self.max_vars });
        }
        Ok(())
    }

    pub(crate) fn check_gens(&self, count: usize) -> Result<()> {
        if count > self.max_gens {
            return Err(Error::GuardExceeded { what: "generators", value: count, limit: self.max_gens });
        }
        Ok(())
    }
}
