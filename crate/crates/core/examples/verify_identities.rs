//! Runs the verification report on a fixture, then again with one entry of
//! the table changed to show what a failure looks like.

use lyubeznik::cli::{fixture, render};
use lyubeznik::exactla::FieldSpec;
use lyubeznik::invariants::{verify_with_table, Analysis};

fn main() -> lyubeznik::Result<()> {
    let ideal = fixture("ex4")?.job().ideal()?;
    let a = Analysis::compute(&ideal, FieldSpec::Rationals, &Default::default())?;
    print!("{}", render::report(&a.verify()));

    let mut table = a.table.clone();
    table.set(3, 4, 6);
    let report = verify_with_table(&a, &table);
    println!("\nwith λ[3,4] set to 6:");
    for rec in report.failures() {
        println!("{}: {} {} {}", rec.id, rec.lhs, rec.relation.symbol(), rec.rhs);
    }
    Ok(())
}
