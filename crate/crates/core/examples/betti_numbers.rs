//! Betti numbers of an ideal and of its Alexander dual, computed by the
//! syzygy engine and by Hochster's formula.

use lyubeznik::cli::render;
use lyubeznik::exactla::FieldSpec;
use lyubeznik::resolve::minimal_resolution;
use lyubeznik::simphom::hochster_betti;
use lyubeznik::sqfcore::{MonomialIdeal, SqfDegree};
use lyubeznik::Options;

fn main() -> lyubeznik::Result<()> {
    // The 5-cycle x1x2, x2x3, x3x4, x4x5, x5x1.
    let n = 5;
    let gens: Vec<SqfDegree> = (1..=n).map(|k| SqfDegree::from_vars(n, [k, k % n + 1])).collect::<Result<_, _>>()?;
    let ideal = MonomialIdeal::from_gens(n, &gens)?;
    let opts = Options::default();
    for (label, target) in [("I", ideal.clone()), ("dual of I", ideal.alexander_dual()?)] {
        let res = minimal_resolution(&target, FieldSpec::Rationals, &opts)?;
        let betti = res.betti();
        assert_eq!(betti, hochster_betti(&target, FieldSpec::Rationals, &opts)?);
        println!("{label}:\n{}", render::betti(&betti));
    }
    Ok(())
}
