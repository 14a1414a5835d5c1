#![allow(dead_code)]

use std::collections::BTreeMap;

use lyubeznik::cli::fixture;
use lyubeznik::sqfcore::{MonomialIdeal, PrimeDecomposition, SimplicialComplex, SqfDegree};
use rand::Rng;

pub fn deg(n: usize, vars: &[usize]) -> SqfDegree {
    SqfDegree::from_vars(n, vars.iter().copied()).unwrap()
}

pub fn fixture_ideal(name: &str) -> MonomialIdeal {
    fixture(name).unwrap().job().ideal().unwrap()
}

/// The 18 primes exactly as printed for the S_2 example in eight variables.
pub const PRINTED_EX4_PRIMES: [[usize; 4]; 18] = [
    [1, 2, 3, 4], [1, 2, 4, 6], [1, 2, 5, 6], [1, 2, 5, 7], [1, 2, 7, 8], [1, 3, 4, 6],
    [1, 3, 5, 6], [1, 3, 5, 7], [1, 3, 6, 8], [1, 6, 7, 8], [2, 4, 5, 7], [2, 4, 6, 8],
    [2, 4, 7, 8], [3, 4, 5, 6], [3, 4, 6, 8], [3, 4, 7, 8], [4, 5, 6, 7], [5, 6, 7, 8],
];

pub fn printed_ex4() -> MonomialIdeal {
    let components = PRINTED_EX4_PRIMES.iter().map(|p| deg(8, p)).collect();
    MonomialIdeal::from_primes(&PrimeDecomposition { n: 8, components }).unwrap()
}

/// The 6-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    let tri = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ];
    SimplicialComplex::from_facets(6, tri.iter().map(|t| deg(6, t)))
}

/// A random proper nonzero squarefree ideal in at most `max_n` variables
/// with at most `max_gens` generators.
pub fn random_ideal(rng: &mut impl Rng, max_n: usize, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(2..=max_n);
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<SqfDegree> = (0..count)
        .map(|_| loop {
            let bits = rng.gen_range(1..(1u64 << n));
            // Bias towards small supports, which give richer resolutions.
            let g = SqfDegree::from_bits(bits);
            if g.len() <= 3 || rng.gen_bool(0.3) {
                break g;
            }
        })
        .collect();
    MonomialIdeal::from_gens(n, &gens).unwrap()
}

/// The Stanley-Reisner ideal of a random complex given by 2 to 6 random
/// facets; unlike random generators this often gives non-CM rings.
pub fn random_facet_ideal(rng: &mut impl Rng, max_n: usize) -> MonomialIdeal {
    let n = rng.gen_range(3..=max_n);
    let count = rng.gen_range(2..=6);
    let facets: Vec<SqfDegree> = (0..count)
        .map(|_| loop {
            let f = SqfDegree::from_bits(rng.gen_range(1..(1u64 << n)));
            if f.len() >= 2 && f.len() < n {
                break f;
            }
        })
        .collect();
    MonomialIdeal::of_complex(&SimplicialComplex::from_facets(n, facets))
}

/// Components of Γ_1 restricted to facets of maximal size, computed by a
/// plain depth-first search; heights of `F ∩ G` are `d - |F ∩ G|` there.
pub fn top_gamma1_components(delta: &SimplicialComplex) -> usize {
    let d = delta.krull_dim();
    let top: Vec<SqfDegree> = delta.facets().iter().copied().filter(|f| f.len() == d).collect();
    let mut seen = vec![false; top.len()];
    let mut count = 0;
    for s in 0..top.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(a) = stack.pop() {
            for b in 0..top.len() {
                if !seen[b] && d - top[a].intersection(top[b]).len() <= 1 {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    count
}

/// Coarse Betti numbers `(step, total degree) -> β` from a fine table.
pub fn coarse(b: &lyubeznik::simphom::BettiTable) -> BTreeMap<(usize, usize), usize> {
    b.coarse()
}
