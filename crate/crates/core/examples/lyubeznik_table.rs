//! Lyubeznik table of a bundled fixture (default `ex4`), over Q.
//!
//!     cargo run --example lyubeznik_table -- ex1-J

use lyubeznik::cli::{fixture, render};
use lyubeznik::exactla::FieldSpec;
use lyubeznik::invariants::lyubeznik_table;

fn main() -> lyubeznik::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ex4".into());
    let f = fixture(&name)?;
    let ideal = f.job().ideal()?;
    let table = lyubeznik_table(&ideal, FieldSpec::Rationals, &Default::default())?;
    println!("{}: {}\n", f.name, f.description());
    print!("{}", render::table(&table));
    for ((p, i), v) in table.nonzero() {
        println!("λ[{p},{i}] = {v}");
    }
    Ok(())
}
