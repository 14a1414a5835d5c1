//! Reduced simplicial homology with field coefficients, and the two
//! Hochster-type formulas built on it: multigraded Betti numbers of a
//! squarefree ideal, and the graded pieces of local cohomology of a face ring.
//!
//! Over a field homology and cohomology have equal dimensions, so only
//! homology is computed.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactla::{rank_of_sparse_rows, FieldSpec};
use crate::sqfcore::{MonomialIdeal, SimplicialComplex, SqfDegree};
use crate::Options;

/// Dimensions of `H̃_k(Δ; K)` for `k ≥ -1`, nonzero entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: BTreeMap<i64, usize>,
    void: bool,
}

impl HomologyProfile {
    pub fn get(&self, k: i64) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    /// Set when the input was the void complex; all dimensions are then 0.
    pub fn is_void(&self) -> bool {
        self.void
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    /// `Σ_k (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|(&k, &v)| if k.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) }).sum()
    }
}

/// Signed boundary map from faces of size `s` to faces of size `s - 1`, one
/// sparse row per larger face with columns indexed by the smaller faces.
/// Removing the vertex in position `t` of the sorted face carries the sign
/// `(-1)^t`.
fn boundary_rows(lower: &[SqfDegree], upper: &[SqfDegree]) -> Vec<Vec<(usize, i64)>> {
    let index: HashMap<SqfDegree, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    upper
        .iter()
        .map(|face| {
            let mut row: Vec<(usize, i64)> = face
                .iter()
                .enumerate()
                .map(|(t, v)| (index[&face.without(v)], if t % 2 == 0 { 1 } else { -1 }))
                .collect();
            row.sort_unstable();
            row
        })
        .collect()
}

/// Reduced homology of `delta` over `field`.
///
/// The empty complex `{∅}` has `H̃_{-1} = 1`; the void complex has no
/// homology at all and the profile is flagged.
pub fn reduced_homology(delta: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    if delta.is_void() {
        return HomologyProfile { dims: BTreeMap::new(), void: true };
    }
    if delta.is_cone() {
        return HomologyProfile::default();
    }
    let faces = delta.faces_by_size();
    let top = faces.len() - 1;
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows = boundary_rows(&faces[s - 1], &faces[s]);
        ranks[s] = rank_of_sparse_rows(rows, faces[s - 1].len(), field);
    }
    let mut dims = BTreeMap::new();
    for s in 0..=top {
        let h = faces[s].len() - ranks[s] - ranks[s + 1];
        if h > 0 {
            dims.insert(s as i64 - 1, h);
        }
    }
    HomologyProfile { dims, void: false }
}

/// Reduced Euler characteristic from the f-vector, `Σ_s (-1)^{s-1} f_s`.
pub fn reduced_euler_from_faces(delta: &SimplicialComplex) -> i64 {
    delta
        .f_vector()
        .iter()
        .enumerate()
        .map(|(s, &f)| if s % 2 == 1 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Multigraded Betti numbers `β_{j,α}` of a squarefree ideal.
///
/// Stored sparsely; the coarse view sums over degrees of equal size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiTableRepr", from = "BettiTableRepr")]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, SqfDegree), usize>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    step: usize,
    degree: SqfDegree,
    beta: usize,
}

#[derive(Serialize, Deserialize)]
struct BettiTableRepr {
    n: usize,
    entries: Vec<BettiEntry>,
}

impl From<BettiTable> for BettiTableRepr {
    fn from(t: BettiTable) -> Self {
        BettiTableRepr {
            n: t.n,
            entries: t
                .entries
                .into_iter()
                .map(|((step, degree), beta)| BettiEntry { step, degree, beta })
                .collect(),
        }
    }
}

impl From<BettiTableRepr> for BettiTable {
    fn from(r: BettiTableRepr) -> Self {
        let mut t = BettiTable::new(r.n);
        for e in r.entries {
            t.add(e.step, e.degree, e.beta);
        }
        t
    }
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable { n, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, step: usize, degree: SqfDegree, beta: usize) {
        if beta > 0 {
            *self.entries.entry((step, degree)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, step: usize, degree: SqfDegree) -> usize {
        self.entries.get(&(step, degree)).copied().unwrap_or(0)
    }

    /// Nonzero fine-graded entries `((j, α), β_{j,α})`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, SqfDegree), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `(j, ℓ) ↦ Σ_{|α| = ℓ} β_{j,α}`.
    pub fn coarse(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (&(j, a), &b) in &self.entries {
            *out.entry((j, a.len())).or_insert(0) += b;
        }
        out
    }

    pub fn coarse_get(&self, step: usize, total: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, a), _)| *j == step && a.len() == total)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Index of the last nonzero homological step, `None` for an empty table.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|(j, _)| *j).max()
    }

    pub fn total(&self, step: usize) -> usize {
        self.entries.iter().filter(|((j, _), _)| *j == step).map(|(_, &b)| b).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Betti numbers of `ideal` from Hochster's formula
/// `β_{j,α} = dim H̃_{|α|-j-2}(Δ|_α)`, swept over all `2^n` squarefree degrees.
///
/// Degrees whose restriction is a cone are skipped. The sweep runs in
/// parallel; the assembled table does not depend on scheduling.
pub fn hochster_betti(ideal: &MonomialIdeal, field: FieldSpec, opts: &Options) -> Result<BettiTable> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.n();
    opts.check_vars(n)?;
    let delta = ideal.complex();
    // α = ∅ only carries the free module R of R/I.
    let found: Vec<(SqfDegree, HomologyProfile)> = (1..1u64 << n)
        .into_par_iter()
        .filter_map(|bits| {
            let alpha = SqfDegree::from_bits(bits);
            let sub = delta.restrict(alpha);
            if sub.is_cone() {
                return None;
            }
            let h = reduced_homology(&sub, field);
            (!h.is_acyclic()).then_some((alpha, h))
        })
        .collect();
    let mut table = BettiTable::new(n);
    for (alpha, h) in found {
        for (k, dim) in h.nonzero() {
            let j = alpha.len() as i64 - k - 2;
            debug_assert!(j >= 0);
            table.add(j as usize, alpha, dim);
        }
    }
    Ok(table)
}

/// Graded pieces of the local cohomology `H^i_m(K[Δ])` indexed by faces:
/// `σ ↦ dim H̃_{i-|σ|-1}(lk σ)`, nonzero entries only.
pub fn lc_face_dims(delta: &SimplicialComplex, i: usize, field: FieldSpec) -> BTreeMap<SqfDegree, usize> {
    delta
        .faces()
        .into_iter()
        .filter(|s| s.len() <= i)
        .filter_map(|sigma| {
            let k = i as i64 - sigma.len() as i64 - 1;
            let h = reduced_homology(&delta.link(sigma), field).get(k);
            (h > 0).then_some((sigma, h))
        })
        .collect()
}

/// All local cohomology pieces at once: `(i, σ) ↦ dim`, for `0 ≤ i ≤ dim`.
///
/// Each link is processed once, so this is cheaper than calling
/// [`lc_face_dims`] for every `i`.
pub fn lc_face_table(delta: &SimplicialComplex, field: FieldSpec) -> BTreeMap<(usize, SqfDegree), usize> {
    let faces = delta.faces();
    let found: Vec<Vec<((usize, SqfDegree), usize)>> = faces
        .par_iter()
        .map(|&sigma| {
            reduced_homology(&delta.link(sigma), field)
                .nonzero()
                .map(|(k, dim)| (((k + 1) as usize + sigma.len(), sigma), dim))
                .collect()
        })
        .collect();
    found.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(vars: &[usize]) -> SqfDegree {
        SqfDegree::from_vars(12, vars.iter().copied()).unwrap()
    }

    /// The 6-vertex triangulation of the real projective plane.
    pub(crate) fn rp2() -> SimplicialComplex {
        let tri = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
        ];
        SimplicialComplex::from_facets(6, tri.iter().map(|t| d(t)))
    }

    #[test]
    fn hollow_triangle() {
        let t = SimplicialComplex::from_facets(3, [d(&[1, 2]), d(&[2, 3]), d(&[1, 3])]);
        let h = reduced_homology(&t, FieldSpec::Rationals);
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(1, 1)]);
    }

    #[test]
    fn empty_and_void_conventions() {
        let h = reduced_homology(&SimplicialComplex::empty(3), FieldSpec::Rationals);
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(-1, 1)]);
        let v = reduced_homology(&SimplicialComplex::void(3), FieldSpec::Rationals);
        assert!(v.is_void() && v.is_acyclic());
        assert!(!h.is_void());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        let p = rp2();
        assert_eq!(p.f_vector(), vec![1, 6, 15, 10]);
        let h2 = reduced_homology(&p, FieldSpec::Prime(2));
        assert_eq!(h2.get(1), 1);
        assert_eq!(h2.get(2), 1);
        let hq = reduced_homology(&p, FieldSpec::Rationals);
        assert!(hq.is_acyclic());
        // Boundary ranks: ∂_2 (15x10) and ∂_1 (6x15).
        let faces = p.faces_by_size();
        let b3 = boundary_rows(&faces[2], &faces[3]);
        assert_eq!(rank_of_sparse_rows(b3.clone(), 15, FieldSpec::Rationals), 10);
        assert_eq!(rank_of_sparse_rows(b3, 15, FieldSpec::Prime(2)), 9);
        let b2 = boundary_rows(&faces[1], &faces[2]);
        assert_eq!(rank_of_sparse_rows(b2, 6, FieldSpec::Rationals), 5);
    }

    #[test]
    fn hochster_principal_ideal() {
        let j = MonomialIdeal::from_gens(2, &[d(&[1, 2])]).unwrap();
        let b = hochster_betti(&j, FieldSpec::Rationals, &Options::default()).unwrap();
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![((0, d(&[1, 2])), 1)]);
    }

    #[test]
    fn hochster_guard() {
        let j = MonomialIdeal::from_gens(21, &[d(&[1, 2])]).unwrap();
        let opts = Options { max_vars: 20, ..Options::default() };
        assert!(matches!(
            hochster_betti(&j, FieldSpec::Rationals, &opts),
            Err(crate::Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn lc_two_points() {
        let two = SimplicialComplex::from_facets(2, [d(&[1]), d(&[2])]);
        assert!(lc_face_dims(&two, 0, FieldSpec::Rationals).is_empty());
        let one = lc_face_dims(&two, 1, FieldSpec::Rationals);
        assert_eq!(one, BTreeMap::from([(d(&[]), 1), (d(&[1]), 1), (d(&[2]), 1)]));
    }

    #[test]
    fn lc_simplex_only_top() {
        let s = SimplicialComplex::simplex(3);
        for i in 0..3 {
            assert!(lc_face_dims(&s, i, FieldSpec::Rationals).is_empty());
        }
        assert_eq!(lc_face_dims(&s, 3, FieldSpec::Rationals), BTreeMap::from([(d(&[1, 2, 3]), 1)]));
    }

    #[test]
    fn lc_table_matches_per_degree() {
        let p = rp2();
        let table = lc_face_table(&p, FieldSpec::Prime(2));
        for i in 0..=3 {
            let direct = lc_face_dims(&p, i, FieldSpec::Prime(2));
            let from_table: BTreeMap<_, _> =
                table.iter().filter(|((k, _), _)| *k == i).map(|((_, s), &v)| (*s, v)).collect();
            assert_eq!(direct, from_table);
        }
    }

    #[test]
    fn betti_serde_round_trip() {
        let mut b = BettiTable::new(3);
        b.add(0, d(&[1]), 2);
        b.add(1, d(&[1, 2]), 1);
        let js = serde_json::to_string(&b).unwrap();
        let back: BettiTable = serde_json::from_str(&js).unwrap();
        assert_eq!(b, back);
    }
}
