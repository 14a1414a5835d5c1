//! Squarefree combinatorics: degrees, simplicial complexes, squarefree
//! monomial ideals, and the Stanley–Reisner and Alexander dualities between them.

mod complex;
mod degree;
mod ideal;

pub use complex::SimplicialComplex;
pub use degree::{maximalize, minimal_transversals, minimalize, SqfDegree, MAX_VARS};
pub use ideal::{MonomialIdeal, PrimeDecomposition};
