use std::fmt::Write as _;

use super::job::JobSpec;
use super::render;
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::invariants::Analysis;
use crate::simphom::hochster_betti;
use crate::Options;

/// A bundled example ideal with its expected text output over `Q` and `GF(2)`.
pub struct Fixture {
    pub name: &'static str,
    json: &'static str,
    golden_q: &'static str,
    golden_gf2: &'static str,
}

macro_rules! fixture {
    ($name:literal) => {
        Fixture {
            name: $name,
            json: include_str!(concat!("../../fixtures/", $name, ".json")),
            golden_q: include_str!(concat!("../../fixtures/golden/", $name, ".Q.txt")),
            golden_gf2: include_str!(concat!("../../fixtures/golden/", $name, ".GF2.txt")),
        }
    };
}

pub const FIXTURES: &[Fixture] =
    &[fixture!("ex4"), fixture!("ex1-I"), fixture!("ex1-J"), fixture!("ex2-in"), fixture!("ex3-gin")];

/// The fields every fixture is run over.
pub const FIXTURE_FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::Prime(2)];

pub fn fixture(name: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown fixture {name:?}")))
}

impl Fixture {
    pub fn job(&self) -> JobSpec {
        JobSpec::parse(self.json).expect("bundled fixture parses")
    }

    pub fn description(&self) -> String {
        self.job().description.unwrap_or_default()
    }

    pub fn golden(&self, field: FieldSpec) -> Option<&'static str> {
        match field {
            FieldSpec::Rationals => Some(self.golden_q),
            FieldSpec::Prime(2) => Some(self.golden_gf2),
            _ => None,
        }
    }

    pub fn golden_file_name(&self, field: FieldSpec) -> String {
        let tag = match field {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("GF{p}"),
        };
        format!("{}.{tag}.txt", self.name)
    }
}

/// Full text transcript of one fixture: table, Betti numbers of the dual,
/// ring properties and the verification report.
///
/// The Betti numbers are cross-checked against Hochster's formula even when
/// the oracle is switched off in `opts`.
pub fn transcript(job: &JobSpec, field: FieldSpec, opts: &Options) -> Result<(String, bool)> {
    let ideal = job.ideal()?;
    let a = Analysis::compute(&ideal, field, opts)?;
    let betti = a.dual_resolution.betti();
    if betti != hochster_betti(a.dual_resolution.ideal(), field, opts)? {
        return Err(Error::Inconsistent("dual Betti numbers disagree with Hochster's formula".into()));
    }
    let report = a.verify();
    let mut out = String::new();
    writeln!(out, "field: {field}").unwrap();
    writeln!(out, "\n[table]\n{}", render::table(&a.table)).unwrap();
    writeln!(out, "[betti of dual]\n{}", render::betti(&betti)).unwrap();
    writeln!(out, "[props]\n{}", render::props(&a.properties())).unwrap();
    write!(out, "[verify]\n{}", render::report(&report)).unwrap();
    Ok((out, !report.has_failures()))
}
