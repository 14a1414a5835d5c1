//! Command-line front end: job files, bundled fixtures and output formats.
//!
//! Exit codes: 0 on success, 1 for bad input or an exceeded guard, 2 for an
//! internal-consistency failure, 3 when verification reports a failure or a
//! fixture differs from its expected output.

mod fixtures;
mod job;
pub mod render;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::invariants::{deficiency_dims, gamma_graph, lyubeznik_table, ring_properties, verify_with_table, Analysis};
use crate::resolve::minimal_resolution;
use crate::sqfcore::MonomialIdeal;
use crate::Options;

pub use fixtures::{fixture, transcript, Fixture, FIXTURES, FIXTURE_FIELDS};
pub use job::JobSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lyubeznik", version, about = "Lyubeznik tables and related invariants of squarefree monomial ideals")]
pub struct Cli {
    /// Coefficient field: Q or GF(p). Overrides the job file.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Skip the Hochster cross-check of each resolution.
    #[arg(long, global = true)]
    no_oracle: bool,
    /// Lift the size guards on variables and generators.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lyubeznik table of R/I.
    Table { input: String },
    /// Multigraded Betti numbers of I, or of its Alexander dual.
    Betti {
        input: String,
        #[arg(long)]
        dual: bool,
    },
    /// Dimension, depth, deficiency dimensions, S_r and CM_r.
    Props { input: String },
    /// The graph Γ_t on the minimal primes.
    Gamma {
        input: String,
        #[arg(long)]
        t: usize,
    },
    /// Check every identity and vanishing statement against the computed table.
    Verify {
        input: String,
        /// Overwrite one table entry before checking: p,i,value.
        #[arg(long, hide = true, value_parser = parse_mutation)]
        mutate: Option<(usize, usize, usize)>,
    },
    /// Dump the minimal resolution of I (or its dual) as monomial matrices.
    Resolution {
        input: String,
        #[arg(long)]
        dual: bool,
    },
    /// Bundled example ideals.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Debug, Subcommand)]
enum FixtureAction {
    /// List the bundled fixtures.
    List,
    /// Run fixtures over Q and GF(2) and compare with the expected output.
    Run {
        names: Vec<String>,
        /// Rewrite the expected outputs in the source tree.
        #[arg(long, hide = true)]
        bless: bool,
    },
}

fn parse_mutation(s: &str) -> std::result::Result<(usize, usize, usize), String> {
    let parts: Vec<usize> = s.split(',').map(|x| x.trim().parse().map_err(|_| format!("bad number in {s:?}"))).collect::<std::result::Result<_, _>>()?;
    match parts[..] {
        [p, i, v] => Ok((p, i, v)),
        _ => Err("expected p,i,value".into()),
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn options(cli: &Cli) -> Options {
    let opts = Options { oracle_check: !cli.no_oracle, ..Options::default() };
    if cli.force {
        opts.forced()
    } else {
        opts
    }
}

/// `-` reads standard input, `@name` a bundled fixture, anything else a file.
fn load_job(input: &str) -> Result<JobSpec> {
    if let Some(name) = input.strip_prefix('@') {
        return Ok(fixture(name)?.job());
    }
    let mut text = String::new();
    if input == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    } else {
        text = std::fs::read_to_string(input).map_err(|e| Error::InvalidInput(format!("{input}: {e}")))?;
    }
    JobSpec::parse(&text)
}

fn field_for(cli: &Cli, job: &JobSpec) -> Result<FieldSpec> {
    match &cli.field {
        Some(tag) => tag.parse(),
        None => Ok(job.field_spec()?.unwrap_or(FieldSpec::Rationals)),
    }
}

fn emit<T: Serialize>(cli: &Cli, out: &mut dyn Write, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    let s = if cli.json {
        serde_json::to_string_pretty(value).expect("serializable") + "\n"
    } else {
        text()
    };
    out.write_all(s.as_bytes()).map_err(|e| Error::InvalidInput(e.to_string()))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let opts = options(cli);
    let setup = |input: &str| -> Result<(JobSpec, MonomialIdeal, FieldSpec)> {
        let job = load_job(input)?;
        let ideal = job.ideal()?;
        ideal.ensure_proper_nonzero()?;
        let field = field_for(cli, &job)?;
        Ok((job, ideal, field))
    };
    match &cli.command {
        Command::Table { input } => {
            let (_, ideal, field) = setup(input)?;
            let t = lyubeznik_table(&ideal, field, &opts)?;
            emit(cli, out, &t, || render::table(&t))?;
        }
        Command::Betti { input, dual } => {
            let (_, ideal, field) = setup(input)?;
            let target = if *dual { ideal.alexander_dual()? } else { ideal };
            let b = minimal_resolution(&target, field, &opts)?.betti();
            emit(cli, out, &b, || render::betti(&b))?;
        }
        Command::Props { input } => {
            let (_, ideal, field) = setup(input)?;
            opts.check_vars(ideal.n())?;
            let complex = ideal.complex();
            let p = ring_properties(&complex, &deficiency_dims(&complex, field)?);
            emit(cli, out, &p, || render::props(&p))?;
        }
        Command::Gamma { input, t } => {
            let (job, ideal, _) = setup(input)?;
            let g = gamma_graph(&ideal.complex(), *t);
            emit(cli, out, &g, || render::gamma(&g, &job))?;
        }
        Command::Verify { input, mutate } => {
            let (_, ideal, field) = setup(input)?;
            let a = Analysis::compute(&ideal, field, &opts)?;
            let mut table = a.table.clone();
            if let Some((p, i, v)) = *mutate {
                if p > i || i > table.d() {
                    return Err(Error::InvalidInput(format!("({p}, {i}) is outside the table")));
                }
                table.set(p, i, v);
            }
            let report = verify_with_table(&a, &table);
            emit(cli, out, &report, || render::report(&report))?;
            if report.has_failures() {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Resolution { input, dual } => {
            let (_, ideal, field) = setup(input)?;
            let target = if *dual { ideal.alexander_dual()? } else { ideal };
            let dump = minimal_resolution(&target, field, &opts)?.dump();
            out.write_all(dump.as_bytes()).map_err(|e| Error::InvalidInput(e.to_string()))?;
        }
        Command::Fixtures { action: FixtureAction::List } => {
            for f in FIXTURES {
                writeln!(out, "{:<8} {}", f.name, f.description()).map_err(|e| Error::InvalidInput(e.to_string()))?;
            }
        }
        Command::Fixtures { action: FixtureAction::Run { names, bless } } => {
            return run_fixtures(cli, names, *bless, &opts, out, err);
        }
    }
    Ok(EXIT_OK)
}

fn run_fixtures(
    cli: &Cli,
    names: &[String],
    bless: bool,
    opts: &Options,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let selected: Vec<&Fixture> = if names.is_empty() {
        FIXTURES.iter().collect()
    } else {
        names.iter().map(|n| fixture(n)).collect::<Result<_>>()?
    };
    let fields: Vec<FieldSpec> = match &cli.field {
        Some(tag) => vec![tag.parse()?],
        None => FIXTURE_FIELDS.to_vec(),
    };
    let io = |e: std::io::Error| Error::InvalidInput(e.to_string());
    let mut code = EXIT_OK;
    for f in selected {
        for &field in &fields {
            let (text, clean) = transcript(&f.job(), field, opts)?;
            if bless {
                let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
                    .join("fixtures/golden")
                    .join(f.golden_file_name(field));
                std::fs::write(&path, &text).map_err(io)?;
                writeln!(out, "{} {field}: wrote {}", f.name, path.display()).map_err(io)?;
                continue;
            }
            let verdict = match f.golden(field) {
                Some(g) if g == text && clean => "ok",
                Some(g) if g == text => "verification failed",
                Some(_) => "differs from expected output",
                None => {
                    if clean {
                        "ok (no expected output for this field)"
                    } else {
                        "verification failed"
                    }
                }
            };
            if !verdict.starts_with("ok") {
                code = EXIT_VERIFY;
                if let Some(g) = f.golden(field) {
                    if let Some((k, (a, b))) = g.lines().zip(text.lines()).enumerate().find(|(_, (a, b))| a != b) {
                        writeln!(err, "{} {field}: line {}: expected {a:?}, got {b:?}", f.name, k + 1).map_err(io)?;
                    }
                }
            }
            writeln!(out, "{} {field}: {verdict}", f.name).map_err(io)?;
        }
    }
    Ok(code)
}
