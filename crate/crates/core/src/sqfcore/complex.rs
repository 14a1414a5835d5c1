use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::degree::{maximalize, SqfDegree};

/// A simplicial complex on the vertex set `{1, ..., n}`, stored by facets.
///
/// Two degenerate values are kept apart: the *void* complex has no faces at
/// all (no facets), while the *empty* complex has the single face `∅`. Their
/// reduced homology differs, so the distinction matters downstream.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<SqfDegree>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating family; non-maximal members are dropped.
    pub fn from_facets<I: IntoIterator<Item = SqfDegree>>(n: usize, facets: I) -> Self {
        let facets = maximalize(facets.into_iter().collect());
        debug_assert!(facets.iter().all(|f| f.is_subset(SqfDegree::full(n))));
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![SqfDegree::EMPTY] }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![SqfDegree::full(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[SqfDegree] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets == [SqfDegree::EMPTY]
    }

    pub fn is_face(&self, sigma: SqfDegree) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// All faces, sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<SqfDegree> {
        let mut seen = BTreeSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(SqfDegree::cmp_graded);
        out
    }

    /// Faces grouped by cardinality: `result[k]` lists the faces with `k`
    /// vertices, each group sorted lexicographically.
    pub fn faces_by_size(&self) -> Vec<Vec<SqfDegree>> {
        let faces = self.faces();
        let top = faces.last().map_or(0, |f| f.len());
        let mut out = vec![Vec::new(); if self.is_void() { 0 } else { top + 1 }];
        for f in faces {
            out[f.len()].push(f);
        }
        for group in &mut out {
            group.sort();
        }
        out
    }

    /// `f`-vector indexed by face size (`f[0] = 1` counts `∅`).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`. The link of a non-face is the void complex.
    pub fn link(&self, sigma: SqfDegree) -> SimplicialComplex {
        let facets: Vec<_> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Faces contained in `alpha`.
    pub fn restrict(&self, alpha: SqfDegree) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        SimplicialComplex::from_facets(self.n, self.facets.iter().map(|f| f.intersection(alpha)))
    }

    /// Krull dimension of the face ring: the largest facet size. The void
    /// complex (the zero ring) reports 0.
    pub fn krull_dim(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_equidimensional(&self) -> bool {
        let d = self.krull_dim();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// True when some vertex lies in every facet. Cones are acyclic.
    pub fn is_cone(&self) -> bool {
        if self.facets.is_empty() {
            return false;
        }
        let common = self
            .facets
            .iter()
            .fold(SqfDegree::full(self.n), |acc, f| acc.intersection(*f));
        !common.is_empty()
    }

    /// Union of all facets.
    pub fn vertex_support(&self) -> SqfDegree {
        self.facets.iter().fold(SqfDegree::EMPTY, |acc, f| acc.union(*f))
    }
}
