//! Minimal resolution of the dual of a small ideal as monomial matrices,
//! with the linear strand complexes whose homology gives the table.

use lyubeznik::exactla::FieldSpec;
use lyubeznik::resolve::{minimal_resolution, strand_dual};
use lyubeznik::sqfcore::{MonomialIdeal, SqfDegree};

fn main() -> lyubeznik::Result<()> {
    // Two skew lines in P^3: (x1, x2) ∩ (x3, x4).
    let n = 4;
    let g = |v: [usize; 2]| SqfDegree::from_vars(n, v);
    let ideal = MonomialIdeal::from_gens(n, &[g([1, 3])?, g([1, 4])?, g([2, 3])?, g([2, 4])?])?;
    let dual = ideal.alexander_dual()?;
    let res = minimal_resolution(&dual, FieldSpec::Rationals, &Default::default())?;
    print!("{}", res.dump());
    for r in 0..=n {
        let s = strand_dual(&res, r);
        if s.is_zero_complex() {
            continue;
        }
        let h: Vec<usize> = (0..s.dims().len()).map(|p| s.homology(p, FieldSpec::Rationals)).collect::<Result<_, _>>()?;
        println!("strand {r}: dims {:?}, homology {h:?}", s.dims());
    }
    Ok(())
}
