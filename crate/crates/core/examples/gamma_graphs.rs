//! Components of Γ_t for every t, next to the table entries they control.

use lyubeznik::cli::fixture;
use lyubeznik::exactla::FieldSpec;
use lyubeznik::invariants::{gamma_components, lyubeznik_table};

fn main() -> lyubeznik::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ex1-I".into());
    let ideal = fixture(&name)?.job().ideal()?;
    let d = ideal.complex().krull_dim();
    for t in 0..=d {
        let g = gamma_components(&ideal, t);
        println!("t = {t}: {} vertices, {} edges, {} components", g.vertices.len(), g.edges.len(), g.components);
    }
    let table = lyubeznik_table(&ideal, FieldSpec::Rationals, &Default::default())?;
    let top = gamma_components(&ideal, 1).top_dimensional().components;
    println!("λ[{d},{d}] = {}, components of Γ_1 on top-dimensional primes = {top}", table.get(d, d));
    Ok(())
}
