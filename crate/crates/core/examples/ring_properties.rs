//! Depth, deficiency dimensions and the S_r / CM_r conditions of every
//! bundled fixture.

use lyubeznik::cli::FIXTURES;
use lyubeznik::exactla::FieldSpec;
use lyubeznik::invariants::{deficiency_dims, ring_properties};

fn main() -> lyubeznik::Result<()> {
    println!("{:<8} {:>3} {:>5} {:>4} {:>5} {:>4}  deficiency", "name", "dim", "depth", "S_r", "CM_r", "gCM");
    for f in FIXTURES {
        let complex = f.job().ideal()?.complex();
        let p = ring_properties(&complex, &deficiency_dims(&complex, FieldSpec::Rationals)?);
        println!(
            "{:<8} {:>3} {:>5} {:>4} {:>5} {:>4}  {:?}",
            f.name,
            p.dim,
            p.depth,
            p.serre_max,
            p.cm_codim_min,
            if p.generalized_cm { "yes" } else { "no" },
            p.deficiency.dims()
        );
    }
    Ok(())
}
