use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn qv(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

const GF2: FieldSpec = FieldSpec::Prime(2);
const GF5: FieldSpec = FieldSpec::Prime(5);

/// Textbook Gauss–Jordan with exact fractions, used as the oracle for the
/// fraction-free path. Returns (rank, kernel vectors with a 1 at their free column).
fn naive_rref(m: &ScalarMatrix) -> (usize, Vec<Vector>) {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, i);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (k, row) in a.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let kernel = (0..cols)
        .filter(|f| !pivots.contains(f))
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = -a[k][f].clone();
            }
            v
        })
        .collect();
    (pivots.len(), kernel)
}

fn free_column(v: &Vector) -> usize {
    // The last nonzero coordinate of a basis vector from either routine is its free column.
    v.iter().rposition(|x| !x.is_zero()).unwrap()
}

#[test]
fn rank_examples() {
    assert_eq!(rank(&ScalarMatrix::identity(3), FieldSpec::Rationals), 3);
    assert_eq!(rank(&ScalarMatrix::zeros(3, 4), FieldSpec::Rationals), 0);
    let m = ScalarMatrix::from_i64_rows(&[vec![2, 4, 6], vec![1, 2, 3]]);
    assert_eq!(rank(&m, FieldSpec::Rationals), 1);
    assert_eq!(rank(&m, GF5), 1);
    assert_eq!(rank(&m, GF2), 1);
}

#[test]
fn kernel_examples() {
    let k = kernel_basis(&ScalarMatrix::from_i64_rows(&[vec![1, 1]]), FieldSpec::Rationals);
    assert_eq!(k, vec![qv(&[-1, 1])]);
    let inv = ScalarMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]]);
    assert!(kernel_basis(&inv, FieldSpec::Rationals).is_empty());
    assert!(kernel_basis(&inv, GF5).is_empty());
    let k = kernel_basis(&ScalarMatrix::from_i64_rows(&[vec![1, 1, 1]]), GF2);
    assert_eq!(k, vec![qv(&[1, 1, 0]), qv(&[1, 0, 1])]);
    let m = ScalarMatrix::from_i64_rows(&[vec![1, 1, 1]]);
    for v in kernel_basis(&m, GF2) {
        let col = ScalarMatrix::from_columns(3, &[v]);
        assert!(m.mul(&col, GF2).is_zero());
    }
}

#[test]
fn kernel_of_matrix_without_rows() {
    let m = ScalarMatrix::zeros(0, 3);
    assert_eq!(kernel_basis(&m, FieldSpec::Rationals).len(), 3);
}

#[test]
fn complement_examples() {
    let e1 = qv(&[1, 0]);
    let e2 = qv(&[0, 1]);
    let f = FieldSpec::Rationals;
    assert_eq!(complement_basis(&[e1.clone(), e2.clone()], std::slice::from_ref(&e1), f).unwrap(), vec![e2.clone()]);
    assert!(complement_basis(&[e1.clone(), e2.clone()], &[e1.clone(), e2.clone()], f).unwrap().is_empty());
    let v = [qv(&[1, 0]), qv(&[1, 1]), qv(&[0, 1])];
    let c = complement_basis(&v, &[qv(&[1, 1])], f).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0], qv(&[1, 0]));
    let err = complement_basis(std::slice::from_ref(&e1), &[e2], f);
    assert!(matches!(err, Err(Error::Precondition(_))));
}

#[test]
fn homology_dim_examples() {
    let f = FieldSpec::Rationals;
    assert_eq!(homology_dim(&ScalarMatrix::zeros(0, 3), &ScalarMatrix::zeros(3, 0), f).unwrap(), 3);
    // K --(1,1)^T--> K^2 --[1,-1]--> K is exact in the middle.
    let into = ScalarMatrix::from_i64_rows(&[vec![1], vec![1]]);
    let out = ScalarMatrix::from_i64_rows(&[vec![1, -1]]);
    assert_eq!(homology_dim(&out, &into, f).unwrap(), 0);
    // A surjection K^12 -> K^5 with nothing coming in leaves a 7-dimensional kernel.
    let mut out = ScalarMatrix::zeros(5, 12);
    for i in 0..5 {
        out.set(i, i, q(1));
        out.set(i, i + 5, q(i as i64 + 2));
    }
    assert_eq!(homology_dim(&out, &ScalarMatrix::zeros(12, 0), f).unwrap(), 7);
}

#[test]
fn homology_dim_rejects_nonzero_composite() {
    let into = ScalarMatrix::from_i64_rows(&[vec![1], vec![0]]);
    let out = ScalarMatrix::from_i64_rows(&[vec![1, 1]]);
    assert!(matches!(homology_dim(&out, &into, FieldSpec::Rationals), Err(Error::Inconsistent(_))));
    // Over GF(2) the same data [1,1]·(1,1)^T vanishes.
    let into = ScalarMatrix::from_i64_rows(&[vec![1], vec![1]]);
    assert_eq!(homology_dim(&out, &into, GF2).unwrap(), 0);
}

#[test]
fn i128_overflow_falls_back_to_bigint() {
    let big = 1i64 << 62;
    let m = ScalarMatrix::from_i64_rows(&[
        vec![big, big - 1, 3],
        vec![big - 3, big, 7],
        vec![big - 5, big - 7, big],
    ]);
    let (r, k) = naive_rref(&m);
    assert_eq!(rank(&m, FieldSpec::Rationals), r);
    assert_eq!(kernel_basis(&m, FieldSpec::Rationals).len(), k.len());
}

#[test]
fn rational_entries_are_scaled_per_row() {
    let half = BigRational::new(1.into(), 2.into());
    let m = ScalarMatrix::from_rows(vec![vec![half.clone(), q(1)], vec![q(1), q(2)]]);
    assert_eq!(rank(&m, FieldSpec::Rationals), 1);
    assert_eq!(rank(&m, FieldSpec::Prime(3)), 1);
    assert_eq!(kernel_basis(&m, FieldSpec::Rationals), vec![qv(&[-2, 1])]);
}

fn small_matrix(max: usize) -> impl Strategy<Value = ScalarMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r)
            .prop_map(|rows| ScalarMatrix::from_i64_rows(&rows))
    })
}

/// Sparse-ish low-rank matrices exercise the rank-deficient paths.
fn low_rank_matrix(max: usize) -> impl Strategy<Value = ScalarMatrix> {
    (1..=max, 1..=max, 1..=4usize).prop_flat_map(|(r, c, k)| {
        (
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), r),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), k),
        )
            .prop_map(|(a, b)| {
                let a = ScalarMatrix::from_i64_rows(&a);
                let b = ScalarMatrix::from_i64_rows(&b);
                a.mul(&b, FieldSpec::Rationals)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fraction_free_matches_naive_fractions(m in prop_oneof![small_matrix(30), low_rank_matrix(30)]) {
        let (r, k) = naive_rref(&m);
        prop_assert_eq!(rank(&m, FieldSpec::Rationals), r);
        let ours = kernel_basis(&m, FieldSpec::Rationals);
        prop_assert_eq!(ours.len(), k.len());
        for (a, b) in ours.iter().zip(&k) {
            let f = free_column(a);
            prop_assert_eq!(f, free_column(b));
            let scale = a[f].clone();
            let scaled: Vector = b.iter().map(|x| x * &scale).collect();
            prop_assert_eq!(a, &scaled);
        }
    }

    #[test]
    fn rank_of_transpose(m in small_matrix(12), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(p)] {
            prop_assert_eq!(rank(&m, f), rank(&m.transpose(), f));
            prop_assert_eq!(kernel_basis(&m, f).len() + rank(&m, f), m.cols());
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in low_rank_matrix(10), p in prop::sample::select(vec![2u32, 3, 101])) {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(p)] {
            let k = kernel_basis(&m, f);
            if !k.is_empty() {
                prop_assert!(m.mul(&ScalarMatrix::from_columns(m.cols(), &k), f).is_zero());
            }
        }
    }

    #[test]
    fn prime_rank_agrees_with_rational_rank(m in small_matrix(12)) {
        let rq = rank(&m, FieldSpec::Rationals);
        let r1 = rank(&m, FieldSpec::Prime(1_000_000_007));
        let r2 = rank(&m, FieldSpec::Prime(998_244_353));
        prop_assert!(r1 <= rq && r2 <= rq);
        // Every minor is far below the product of the two primes, so one of
        // them sees each nonzero pivot.
        prop_assert_eq!(r1.max(r2), rq);
        prop_assert!(rank(&m, GF2) <= rq);
    }
}

fn sparse_matrix() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1usize..14, 1usize..14).prop_flat_map(|(r, c)| {
        let entry = prop_oneof![6 => Just(0i64), 3 => prop::sample::select(vec![1i64, -1]), 1 => -3i64..=3];
        (prop::collection::vec(prop::collection::vec(entry, c), r), Just(c))
    })
}

fn to_sparse(rows: &[Vec<i64>]) -> Vec<Vec<(usize, i64)>> {
    rows.iter().map(|r| r.iter().enumerate().filter(|e| *e.1 != 0).map(|(c, &x)| (c, x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sparse_rank_matches_dense((rows, c) in sparse_matrix(), p in prop::sample::select(vec![2u32, 3, 7])) {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(p)] {
            prop_assert_eq!(rank_of_sparse_rows(to_sparse(&rows), c, f), rank_of_integer_rows(&rows, c, f));
        }
    }
}

#[test]
fn sparse_rank_survives_overflow() {
    // Entries of size 2^40 overflow i64 after one elimination step.
    let big = 1i64 << 40;
    let rows = vec![vec![1, big, 0], vec![big, 1, 1], vec![0, big, big]];
    assert_eq!(rank_of_sparse_rows(to_sparse(&rows), 3, FieldSpec::Rationals), rank_of_integer_rows(&rows, 3, FieldSpec::Rationals));
}
