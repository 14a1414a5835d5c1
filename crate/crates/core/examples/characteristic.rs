//! The six-vertex projective plane: its homology, and so its table, depends
//! on the characteristic.

use lyubeznik::cli::render;
use lyubeznik::exactla::FieldSpec;
use lyubeznik::invariants::lyubeznik_table;
use lyubeznik::simphom::reduced_homology;
use lyubeznik::sqfcore::{MonomialIdeal, SimplicialComplex, SqfDegree};

const TRIANGLES: [[usize; 3]; 10] = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
];

fn main() -> lyubeznik::Result<()> {
    let facets = TRIANGLES.iter().map(|t| SqfDegree::from_vars(6, t.iter().copied())).collect::<Result<Vec<_>, _>>()?;
    let delta = SimplicialComplex::from_facets(6, facets);
    let ideal = MonomialIdeal::of_complex(&delta);
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        let h: Vec<_> = reduced_homology(&delta, field).nonzero().collect();
        println!("over {field}: reduced homology {h:?}");
        println!("{}", render::table(&lyubeznik_table(&ideal, field, &Default::default())?));
    }
    Ok(())
}
