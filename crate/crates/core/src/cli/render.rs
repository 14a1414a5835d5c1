//! Plain-text renderings. All output is deterministic for a given input.

use std::fmt::Write as _;

use super::job::JobSpec;
use crate::invariants::{GammaGraph, LyubeznikTable, Report, RingProperties, Status};
use crate::simphom::BettiTable;

/// The table as an upper-triangular matrix, rows `p`, columns `i`.
pub fn table(t: &LyubeznikTable) -> String {
    let d = t.d();
    let w = (0..=d)
        .flat_map(|p| (p..=d).map(move |i| (p, i)))
        .map(|(p, i)| t.get(p, i).to_string().len())
        .chain([d.to_string().len()])
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    write!(out, "{:>4}", "p\\i").unwrap();
    for i in 0..=d {
        write!(out, " {i:>w$}").unwrap();
    }
    out.push('\n');
    for p in 0..=d {
        write!(out, "{p:>4}").unwrap();
        for i in 0..=d {
            if i < p {
                write!(out, " {:>w$}", "").unwrap();
            } else {
                write!(out, " {:>w$}", t.get(p, i)).unwrap();
            }
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    out
}

/// Betti numbers in the usual row/column layout: column `j` is the step,
/// row `r` holds `β_{j,j+r}`, zeros are shown as `.`.
pub fn betti(b: &BettiTable) -> String {
    let coarse = b.coarse();
    let Some(len) = b.length() else {
        return "zero\n".into();
    };
    let rows: Vec<usize> = {
        let mut r: Vec<usize> = coarse.keys().map(|&(j, total)| total - j).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    let cell = |j: usize, r: usize| match coarse.get(&(j, j + r)) {
        Some(v) => v.to_string(),
        None => ".".into(),
    };
    let totals: Vec<String> = (0..=len).map(|j| b.total(j).to_string()).collect();
    let w = totals.iter().map(String::len).chain((0..=len).map(|j| j.to_string().len())).max().unwrap_or(1);
    let label = rows.iter().map(|r| r.to_string().len() + 1).max().unwrap_or(0).max("total:".len());

    let mut out = String::new();
    write!(out, "{:label$}", "").unwrap();
    for j in 0..=len {
        write!(out, " {j:>w$}").unwrap();
    }
    out.push('\n');
    write!(out, "{:>label$}", "total:").unwrap();
    for t in &totals {
        write!(out, " {t:>w$}").unwrap();
    }
    out.push('\n');
    for &r in &rows {
        write!(out, "{:>label$}", format!("{r}:")).unwrap();
        for j in 0..=len {
            write!(out, " {:>w$}", cell(j, r)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn props(p: &RingProperties) -> String {
    let dims: Vec<String> = p.deficiency.dims().iter().map(i64::to_string).collect();
    let mut out = String::new();
    writeln!(out, "dim:              {}", p.dim).unwrap();
    writeln!(out, "depth:            {}", p.depth).unwrap();
    writeln!(out, "equidimensional:  {}", p.equidimensional).unwrap();
    writeln!(out, "cohen-macaulay:   {}", p.cohen_macaulay).unwrap();
    writeln!(out, "generalized-cm:   {}", p.generalized_cm).unwrap();
    writeln!(out, "serre (S_r):      {}", p.serre_max).unwrap();
    writeln!(out, "cm_r (min r):     {}", p.cm_codim_min).unwrap();
    writeln!(out, "deficiency dims:  [{}]", dims.join(", ")).unwrap();
    out
}

/// Vertices are listed as primes: the variables outside each facet.
pub fn gamma(g: &GammaGraph, job: &JobSpec) -> String {
    let n = job.n();
    let mut out = String::new();
    writeln!(out, "t = {}", g.t).unwrap();
    writeln!(out, "components: {}", g.components).unwrap();
    writeln!(out, "vertices:").unwrap();
    for (k, v) in g.vertices.iter().enumerate() {
        writeln!(out, "  {k}: {}", job.prime(v.complement(n))).unwrap();
    }
    writeln!(out, "edges:").unwrap();
    for (a, b) in &g.edges {
        writeln!(out, "  {a} -- {b}").unwrap();
    }
    out
}

pub fn report(r: &Report) -> String {
    let id_w = r.records.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in &r.records {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Info => "INFO",
        };
        write!(out, "{status} {:id_w$}", c.id).unwrap();
        if c.status != Status::Skipped {
            write!(out, "  {} {} {}", c.lhs, c.relation.symbol(), c.rhs).unwrap();
        }
        if c.gate != "none" {
            write!(out, "  [{}]", c.gate).unwrap();
        }
        if let Some(w) = &c.witness {
            write!(out, "  witness: {w}").unwrap();
        }
        out.push('\n');
    }
    writeln!(
        out,
        "{} passed, {} failed, {} skipped, {} info",
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::Skipped),
        r.count(Status::Info)
    )
    .unwrap();
    out
}
