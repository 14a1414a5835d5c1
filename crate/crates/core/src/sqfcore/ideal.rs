use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;
use super::degree::{minimal_transversals, minimalize, SqfDegree};
use crate::error::{Error, Result};

/// A squarefree monomial ideal, kept as its minimal generators.
///
/// The zero ideal has no generators and the unit ideal has the single
/// generator `∅` (the monomial 1). Everything else is a proper nonzero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<SqfDegree>,
}

/// An ideal written as an intersection of face primes `P_A = (x_i : i ∈ A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDecomposition {
    pub n: usize,
    pub components: Vec<SqfDegree>,
}

impl MonomialIdeal {
    /// Minimalizes `raw` to the antichain generating the same ideal.
    ///
    /// An empty list gives the zero ideal; a list containing `∅` gives the
    /// unit ideal.
    pub fn from_gens(n: usize, raw: &[SqfDegree]) -> Result<Self> {
        let full = SqfDegree::full(n);
        if let Some(bad) = raw.iter().find(|g| !g.is_subset(full)) {
            return Err(Error::VariableOutOfRange { index: bad.max_var(), n });
        }
        Ok(MonomialIdeal { n, gens: minimalize(raw.to_vec()) })
    }

    /// Intersection of the face primes of `dec`.
    pub fn from_primes(dec: &PrimeDecomposition) -> Result<Self> {
        let full = SqfDegree::full(dec.n);
        for c in &dec.components {
            if c.is_empty() {
                return Err(Error::UnitPrime);
            }
            if !c.is_subset(full) {
                return Err(Error::VariableOutOfRange { index: c.max_var(), n: dec.n });
            }
        }
        let delta = SimplicialComplex::from_facets(
            dec.n,
            dec.components.iter().map(|c| c.complement(dec.n)),
        );
        Ok(MonomialIdeal::of_complex(&delta))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![SqfDegree::EMPTY] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[SqfDegree] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [SqfDegree::EMPTY]
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::DegenerateIdeal("zero"))
        } else if self.is_unit() {
            Err(Error::DegenerateIdeal("unit"))
        } else {
            Ok(())
        }
    }

    /// Whether the squarefree monomial `x^alpha` lies in the ideal.
    pub fn contains(&self, alpha: SqfDegree) -> bool {
        self.gens.iter().any(|g| g.is_subset(alpha))
    }

    /// Stanley–Reisner complex: the squarefree degrees outside the ideal.
    ///
    /// Facets are the complements of the minimal transversals of the
    /// generators. The zero ideal gives the full simplex and the unit ideal
    /// the void complex.
    pub fn complex(&self) -> SimplicialComplex {
        if self.is_unit() {
            return SimplicialComplex::void(self.n);
        }
        let facets = minimal_transversals(&self.gens)
            .into_iter()
            .map(|t| t.complement(self.n));
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Stanley–Reisner ideal of `delta`, generated by its minimal nonfaces.
    pub fn of_complex(delta: &SimplicialComplex) -> Self {
        let n = delta.n();
        if delta.is_void() {
            return MonomialIdeal::unit(n);
        }
        let cofacets: Vec<_> = delta.facets().iter().map(|f| f.complement(n)).collect();
        MonomialIdeal { n, gens: minimal_transversals(&cofacets) }
    }

    /// Alexander dual: generated by the complements of the facets of the
    /// Stanley–Reisner complex, equivalently by the supports of the minimal primes.
    pub fn alexander_dual(&self) -> Result<Self> {
        self.ensure_proper_nonzero()?;
        Ok(MonomialIdeal { n: self.n, gens: minimal_transversals(&self.gens) })
    }

    /// Irredundant decomposition into face primes.
    pub fn minimal_primes(&self) -> Result<PrimeDecomposition> {
        self.ensure_proper_nonzero()?;
        Ok(PrimeDecomposition { n: self.n, components: minimal_transversals(&self.gens) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(vars: &[usize]) -> SqfDegree {
        SqfDegree::from_vars(10, vars.iter().copied()).unwrap()
    }

    #[test]
    fn from_gens_prunes_multiples() {
        let i = MonomialIdeal::from_gens(3, &[d(&[1, 2]), d(&[1, 2, 3])]).unwrap();
        assert_eq!(i.gens(), &[d(&[1, 2])]);
        let i = MonomialIdeal::from_gens(5, &[d(&[1, 3]), d(&[1, 2]), d(&[2, 3])]).unwrap();
        assert_eq!(i.gens(), &[d(&[1, 2]), d(&[1, 3]), d(&[2, 3])]);
    }

    #[test]
    fn degenerate_ideals_are_flagged() {
        let z = MonomialIdeal::from_gens(2, &[]).unwrap();
        assert!(z.is_zero() && !z.is_proper_nonzero());
        let u = MonomialIdeal::from_gens(2, &[d(&[1]), SqfDegree::EMPTY]).unwrap();
        assert!(u.is_unit());
        assert_eq!(z.alexander_dual(), Err(Error::DegenerateIdeal("zero")));
        assert_eq!(u.alexander_dual(), Err(Error::DegenerateIdeal("unit")));
        assert!(MonomialIdeal::from_gens(2, &[d(&[3])]).is_err());
    }

    #[test]
    fn complex_of_small_ideals() {
        let i = MonomialIdeal::from_gens(2, &[d(&[1, 2])]).unwrap();
        assert_eq!(i.complex().facets(), &[d(&[1]), d(&[2])]);
        let i = MonomialIdeal::from_gens(3, &[d(&[1, 2]), d(&[1, 3]), d(&[2, 3])]).unwrap();
        assert_eq!(i.complex().facets(), &[d(&[1]), d(&[2]), d(&[3])]);
        assert_eq!(MonomialIdeal::zero(3).complex(), SimplicialComplex::simplex(3));
        assert!(MonomialIdeal::unit(3).complex().is_void());
    }

    #[test]
    fn ideal_of_degenerate_complexes() {
        assert!(MonomialIdeal::of_complex(&SimplicialComplex::simplex(4)).is_zero());
        assert!(MonomialIdeal::of_complex(&SimplicialComplex::void(4)).is_unit());
        let m = MonomialIdeal::of_complex(&SimplicialComplex::empty(3));
        assert_eq!(m.gens(), &[d(&[1]), d(&[2]), d(&[3])]);
    }

    #[test]
    fn primes_of_two_points() {
        let dec = PrimeDecomposition { n: 2, components: vec![d(&[1]), d(&[2])] };
        let i = MonomialIdeal::from_primes(&dec).unwrap();
        assert_eq!(i.gens(), &[d(&[1, 2])]);
        let bad = PrimeDecomposition { n: 2, components: vec![SqfDegree::EMPTY] };
        assert_eq!(MonomialIdeal::from_primes(&bad), Err(Error::UnitPrime));
    }

    #[test]
    fn principal_dual_is_prime() {
        let i = MonomialIdeal::from_gens(2, &[d(&[1, 2])]).unwrap();
        assert_eq!(i.alexander_dual().unwrap().gens(), &[d(&[1]), d(&[2])]);
    }
}
