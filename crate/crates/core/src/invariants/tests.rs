use super::*;
use crate::sqfcore::SqfDegree;

fn d(vars: &[usize]) -> SqfDegree {
    SqfDegree::from_vars(12, vars.iter().copied()).unwrap()
}

fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
    let g: Vec<_> = gens.iter().map(|v| d(v)).collect();
    MonomialIdeal::from_gens(n, &g).unwrap()
}

fn analyze(i: &MonomialIdeal) -> Analysis {
    Analysis::compute(i, FieldSpec::Rationals, &Options::default()).unwrap()
}

#[test]
fn maximal_ideal_gives_one_by_one_table() {
    let a = analyze(&ideal(3, &[&[1], &[2], &[3]]));
    assert_eq!(a.table.d(), 0);
    assert_eq!(a.table.get(0, 0), 1);
    assert!(a.table.is_trivial());
    assert_eq!(a.deficiency.dims(), &[0]);
    assert!(a.deficiency.is_cm());
}

#[test]
fn two_points() {
    let a = analyze(&ideal(2, &[&[1, 2]]));
    assert!(a.table.is_trivial());
    assert_eq!(a.deficiency.dims(), &[-1, 1]);
    assert_eq!(a.deficiency.depth(), 1);
}

#[test]
fn hollow_triangle_is_cm() {
    let a = analyze(&ideal(3, &[&[1, 2, 3]]));
    let p = a.properties();
    assert_eq!((p.dim, p.depth, p.cohen_macaulay, p.serre_max, p.cm_codim_min), (2, 2, true, 2, 0));
    assert!(a.table.is_trivial());
    assert!(!a.verify().has_failures());
}

/// Two planes meeting in a point: depth 1, and two top components.
#[test]
fn two_disjoint_edges() {
    let a = analyze(&ideal(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
    let nonzero: Vec<_> = a.table.nonzero().collect();
    assert_eq!(nonzero, vec![((0, 1), 1), ((2, 2), 2)]);
    assert_eq!(a.deficiency.dims(), &[-1, 0, 2]);
    let p = a.properties();
    assert_eq!((p.depth, p.generalized_cm, p.serre_max, p.cm_codim_min), (1, true, 1, 1));
    let report = a.verify();
    assert!(!report.has_failures(), "{report:?}");
    assert_eq!(report.get("cm1-top").unwrap().status, Status::Pass);
    assert_eq!(report.get("top-entry-components").unwrap().rhs, 2);
}

#[test]
fn gamma_counts() {
    let i = ideal(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
    assert_eq!(gamma_components(&i, 1).components, 2);
    let g = gamma_components(&i, 2);
    assert_eq!((g.components, g.edges.clone()), (1, vec![(0, 1)]));
    let single = ideal(3, &[&[1], &[2]]);
    for t in 0..4 {
        assert_eq!(gamma_components(&single, t).components, 1);
    }
}

#[test]
fn face_height_in_quotient() {
    // An edge {1,2} and a triangle {3,4,5}.
    let delta = SimplicialComplex::from_facets(5, [d(&[1, 2]), d(&[3, 4, 5])]);
    assert_eq!(face_height(&delta, d(&[1])), 1);
    assert_eq!(face_height(&delta, d(&[])), 3);
    assert_eq!(face_height(&delta, d(&[3, 4])), 1);
}

#[test]
fn mutated_table_fails_with_witness() {
    let a = analyze(&ideal(3, &[&[1, 2, 3]]));
    let mut t = a.table.clone();
    t.set(0, 1, 4);
    let report = verify_with_table(&a, &t);
    assert!(report.has_failures());
    let f = report.get("cm-codim-vanishing").unwrap();
    assert_eq!(f.status, Status::Fail);
    assert_eq!(f.witness.as_deref(), Some("λ[0,1] = 4"));
}

#[test]
fn table_serde() {
    let mut t = LyubeznikTable::zero(2);
    t.set(0, 1, 1);
    t.set(2, 2, 2);
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(s, r#"{"d":2,"entries":[[0,1,0],[0,0,0],[0,0,2]]}"#);
    assert_eq!(serde_json::from_str::<LyubeznikTable>(&s).unwrap(), t);
    assert!(serde_json::from_str::<LyubeznikTable>(r#"{"d":1,"entries":[[0,0],[1,1]]}"#).is_err());
    assert!(serde_json::from_str::<LyubeznikTable>(r#"{"d":1,"entries":[[0,0]]}"#).is_err());
}

#[test]
fn report_serde() {
    let a = analyze(&ideal(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
    let r = a.verify();
    let s = serde_json::to_string(&r).unwrap();
    assert!(s.starts_with(r#"[{"check-id":"shape","status":"PASS""#), "{s}");
    assert_eq!(serde_json::from_str::<Report>(&s).unwrap(), r);
}

#[test]
fn deficiency_rejects_void() {
    assert!(deficiency_dims(&SimplicialComplex::void(2), FieldSpec::Rationals).is_err());
}
