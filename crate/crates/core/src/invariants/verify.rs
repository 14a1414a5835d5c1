use serde::{Deserialize, Serialize};

use super::gamma::gamma_graph;
use super::{Analysis, LyubeznikTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Reported for reference; never counts as a failure.
    Info,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    #[serde(rename = "check-id")]
    pub id: String,
    pub status: Status,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub gate: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Ordered list of check outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}

struct Gate {
    open: bool,
    text: String,
}

fn always() -> Gate {
    Gate { open: true, text: "none".into() }
}

fn gate(open: bool, text: impl Into<String>) -> Gate {
    Gate { open, text: text.into() }
}

#[derive(Default)]
struct Builder {
    records: Vec<CheckRecord>,
}

impl Builder {
    fn push(&mut self, id: impl Into<String>, g: &Gate, lhs: i64, rel: Relation, rhs: i64, witness: Option<String>) {
        let status = match (g.open, rel.holds(lhs, rhs)) {
            (false, _) => Status::Skipped,
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
        };
        let witness = (status == Status::Fail)
            .then(|| witness.unwrap_or_else(|| format!("{lhs} {} {rhs} fails", rel.symbol())));
        self.records.push(CheckRecord { id: id.into(), status, lhs, rhs, relation: rel, gate: g.text.clone(), witness });
    }

    fn skipped(&mut self, id: impl Into<String>, g: &Gate, rel: Relation) {
        self.push(id, g, 0, rel, 0, None);
    }

    fn info(&mut self, id: impl Into<String>, g: &Gate, lhs: i64, rhs: i64, witness: Option<String>) {
        let status = if g.open { Status::Info } else { Status::Skipped };
        let witness = witness.filter(|_| g.open);
        self.records.push(CheckRecord {
            id: id.into(),
            status,
            lhs,
            rhs,
            relation: Relation::Eq,
            gate: g.text.clone(),
            witness,
        });
    }
}

/// Sum of the entries at `cells`, with the first nonzero one as witness.
fn vanishing(t: &LyubeznikTable, cells: impl IntoIterator<Item = (usize, usize)>) -> (i64, Option<String>) {
    let mut sum = 0;
    let mut witness = None;
    for (p, i) in cells {
        let v = t.get(p, i);
        if v != 0 {
            sum += v as i64;
            witness.get_or_insert_with(|| format!("λ[{p},{i}] = {v}"));
        }
    }
    (sum, witness)
}

/// Runs every check against `table`, which normally is `analysis.table` but
/// may be replaced to exercise the failure paths.
pub fn verify_with_table(analysis: &Analysis, table: &LyubeznikTable) -> Report {
    let t = table;
    let l = |p: usize, i: usize| t.get(p, i) as i64;
    let d = analysis.dim();
    let delta = &analysis.complex;
    let def = &analysis.deficiency;
    let serre = def.serre_max();
    let cmr = def.cm_codim_min();
    let equi = delta.is_equidimensional();
    let gamma = |k: usize| gamma_graph(delta, k).components as i64;
    let mut b = Builder::default();

    b.push("shape", &always(), l(d, d), Relation::Ge, 1, None);
    b.push(
        "top-entry-components",
        &gate(true, "Γ_1 on top-dimensional components"),
        l(d, d),
        Relation::Eq,
        gamma_graph(delta, 1).top_dimensional().components as i64,
        None,
    );

    let g = gate(equi && d >= 3, "equidimensional, d >= 3");
    if g.open {
        b.push("graph-lambda01", &g, l(0, 1), Relation::Eq, gamma(d - 1) - 1, None);
        b.push("graph-lambda12", &g, l(1, 2), Relation::Eq, gamma(d - 2) - gamma(d - 1), None);
        for i in 1..=d - 2 {
            b.push(format!("graph-bound-{i}"), &g, l(i, i + 1), Relation::Ge, gamma(d - i - 1) - gamma(d - i), None);
        }
    } else {
        for id in ["graph-lambda01", "graph-lambda12"] {
            b.skipped(id, &g, Relation::Eq);
        }
        b.skipped("graph-bound", &g, Relation::Ge);
    }

    let g = gate(serre >= 2, format!("S_r with r = serre_max = {serre} >= 2"));
    let (sum, w) = vanishing(t, (0..d).flat_map(|i| (0..=i).filter(move |&p| p + serre > i).map(move |p| (p, i))));
    b.push("serre-vanishing", &g, sum, Relation::Eq, 0, w);
    let (sum, w) = vanishing(t, (0..d).flat_map(|i| (i..i + serre).map(move |c| (i, c))));
    b.info("serre-vanishing-literal", &g, sum, 0, w);
    b.push("serre-equidimensional", &g, equi as i64, Relation::Eq, 1, None);

    let g = gate(true, format!("CM_r with r = cm_codim_min = {cmr}"));
    let (sum, w) = vanishing(t, (0..d).flat_map(|i| (cmr..=i).map(move |p| (p, i))));
    b.push("cm-codim-vanishing", &g, sum, Relation::Eq, 0, w);

    let g = gate(cmr <= 1 && d >= 2, "CM_1, d >= 2");
    if g.open {
        b.push("cm1-top", &g, l(d, d), Relation::Eq, l(0, 1) + 1, None);
        for p in 2..d {
            b.push(format!("cm1-column-{p}"), &g, l(p, d), Relation::Eq, l(0, d - p + 1), None);
        }
    } else {
        b.skipped("cm1-top", &g, Relation::Eq);
    }

    let g = gate(cmr <= 2 && d >= 2, "CM_2, d >= 2");
    if g.open {
        b.push("cm2-top", &g, l(d, d), Relation::Eq, l(0, 1) + l(1, 2) + 1, None);
    } else {
        b.skipped("cm2-top", &g, Relation::Eq);
    }
    let g = gate(cmr <= 2 && d >= 3, "CM_2, d >= 3");
    if g.open {
        b.push("cm2-column-2", &g, l(2, d), Relation::Eq, l(0, d - 1), None);
        for p in 3..d {
            b.push(format!("cm2-column-{p}"), &g, l(p, d), Relation::Eq, l(0, d - p + 1) + l(1, d - p + 2), None);
        }
    } else {
        b.skipped("cm2-column-2", &g, Relation::Eq);
    }

    let g = gate(def.is_cm(), "Cohen-Macaulay");
    b.push("cm-trivial", &g, t.is_trivial() as i64, Relation::Eq, 1, None);

    let n = analysis.ideal.n();
    let betti = analysis.dual_resolution.betti().coarse();
    let strand_euler = |i: usize| -> i64 {
        let r = n - i;
        betti
            .iter()
            .filter(|(&(j, total), _)| total == j + r && j <= i)
            .map(|(&(j, _), &b)| if (i - j).is_multiple_of(2) { b as i64 } else { -(b as i64) })
            .sum()
    };
    for i in 0..=d {
        let lhs = (0..=i).map(|p| if p % 2 == 0 { l(p, i) } else { -l(p, i) }).sum();
        b.push(format!("euler-column-{i}"), &always(), lhs, Relation::Eq, strand_euler(i), None);
    }
    let beyond: Vec<usize> = (d + 1..=n).filter(|&i| strand_euler(i) != 0).collect();
    let w = beyond.first().map(|i| format!("column {i} has strand Euler characteristic {}", strand_euler(*i)));
    b.push("euler-beyond-top", &always(), beyond.len() as i64, Relation::Eq, 0, w);

    // A nonzero λ_{p,i} forces K^i ≠ 0, so the first nonzero column is at
    // least the depth. Equality can fail without equidimensionality.
    let first_column = (0..=d).find(|&i| (0..=i).any(|p| t.get(p, i) != 0)).map_or(-1, |i| i as i64);
    b.push("depth-column", &always(), first_column, Relation::Ge, def.depth() as i64, None);
    b.info("depth-column-equal", &always(), first_column, def.depth() as i64, None);

    Report { records: b.records }
}

pub fn verify(analysis: &Analysis) -> Report {
    verify_with_table(analysis, &analysis.table)
}
