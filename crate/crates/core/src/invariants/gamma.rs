use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::sqfcore::{MonomialIdeal, SimplicialComplex, SqfDegree};

/// The graph `Γ_t` on the minimal primes of `R/I`, one vertex per facet of Δ.
///
/// Two primes are joined when the height of their sum in `R/I` is at most
/// `t`. The sum of the primes of facets `F` and `G` is the prime of `F ∩ G`,
/// whose height in `R/I` is `max{|H| : H ⊇ F ∩ G facet} - |F ∩ G|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaGraph {
    pub t: usize,
    pub vertices: Vec<SqfDegree>,
    pub edges: Vec<(usize, usize)>,
    pub components: usize,
}

/// Height in `K[Δ]` of the prime of the face `sigma`.
pub fn face_height(delta: &SimplicialComplex, sigma: SqfDegree) -> usize {
    let top = delta.facets().iter().filter(|h| sigma.is_subset(**h)).map(|h| h.len()).max();
    top.expect("sigma must be a face") - sigma.len()
}

pub fn gamma_graph(delta: &SimplicialComplex, t: usize) -> GammaGraph {
    let vertices = delta.facets().to_vec();
    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if face_height(delta, vertices[a].intersection(vertices[b])) <= t {
                edges.push((a, b));
            }
        }
    }
    let components = count_components(vertices.len(), &edges);
    GammaGraph { t, vertices, edges, components }
}

pub fn gamma_components(ideal: &MonomialIdeal, t: usize) -> GammaGraph {
    gamma_graph(&ideal.complex(), t)
}

fn count_components(len: usize, edges: &[(usize, usize)]) -> usize {
    let mut uf = UnionFind::<usize>::new(len);
    let mut components = len;
    for &(a, b) in edges {
        if uf.union(a, b) {
            components -= 1;
        }
    }
    components
}

impl GammaGraph {
    /// The induced subgraph on the facets of maximal size.
    pub fn top_dimensional(&self) -> GammaGraph {
        let d = self.vertices.iter().map(|v| v.len()).max().unwrap_or(0);
        let keep: Vec<usize> = (0..self.vertices.len()).filter(|&k| self.vertices[k].len() == d).collect();
        let pos = |k: usize| keep.iter().position(|&x| x == k);
        let edges: Vec<(usize, usize)> =
            self.edges.iter().filter_map(|&(a, b)| Some((pos(a)?, pos(b)?))).collect();
        let components = count_components(keep.len(), &edges);
        GammaGraph { t: self.t, vertices: keep.iter().map(|&k| self.vertices[k]).collect(), edges, components }
    }
}
