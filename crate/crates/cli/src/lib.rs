//! Command-line front end: document parsing, analysis reports, catalog
//! emission and the theorem battery.
//!
//! Exit codes: 0 success, 1 validation or semantic failure, 2 a battery row
//! failed, 3 I/O or syntax error.

pub mod document;
pub mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use superlie::battery::{self, BatteryConfig};
use superlie::catalog::{CatalogObject, CatalogSpec};
use superlie::invariants::classify_rank_one;
use superlie::par::Execution;
use superlie::{Field, SkewSuperMap};

use document::{build, emit, parse, Object};
use report::{analyze, AnalyzeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BATTERY: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Largest grid bound `verify-theorems` accepts.
pub const MAX_BOUND: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "superlie", version, about = "Analyze class-two nilpotent Lie superalgebras and skew-supersymmetric maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full invariant report: X_f, Schur multiplier, epicenter, capability.
    Analyze {
        file: PathBuf,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Plain-text report (the default).
        #[arg(long)]
        text: bool,
    },
    /// Check the document and the structure it describes.
    Validate { file: PathBuf },
    /// Emit a document for a catalog family.
    Catalog {
        family: Family,
        /// Family parameters, e.g. `m n` or, for `random`, `m n r s`.
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// `rational` or a prime p ≥ 5.
        #[arg(long, default_value = "rational")]
        field: String,
        /// Seed for `random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the theorem battery and print one row per instance.
    VerifyTheorems {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        json: bool,
        /// Disable the parallel fan-out.
        #[arg(long)]
        sequential: bool,
    },
    /// Rank-one classification as H(m,n)⊕A(k|l) or H_m⊕A(k|l).
    Classify { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    HeisenbergEven,
    HeisenbergOdd,
    Abelian,
    GenericFull,
    GenericEvenFull,
    GenericOddFull,
    Random,
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub fn parse_field(text: &str) -> Result<Field, String> {
    match text.trim().to_ascii_lowercase().as_str() {
        "rational" | "q" => Ok(Field::Rational),
        other => {
            let p: u64 = other.parse().map_err(|_| format!("field must be `rational` or a prime, got {text:?}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze { file, json, .. } => cmd_analyze(&file, json),
        Command::Validate { file } => cmd_validate(&file),
        Command::Catalog { family, params, out, field, seed } => cmd_catalog(family, &params, out.as_deref(), &field, seed),
        Command::VerifyTheorems { max_m, max_n, field, json, sequential } => {
            cmd_verify_theorems(max_m, max_n, &field, json, sequential)
        }
        Command::Classify { file } => cmd_classify(&file),
    }
}

fn load(path: &Path) -> Result<(document::InputDocument, Object), Outcome> {
    let text = fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_IO, format!("cannot read {}: {e}", path.display())))?;
    let doc = parse(&text).map_err(|e| Outcome::fail(EXIT_IO, format!("{}: {e}", path.display())))?;
    let object = build(&doc).map_err(|errors| {
        let mut msg = String::new();
        for e in errors {
            let _ = writeln!(msg, "{}: {e}", path.display());
        }
        Outcome::fail(EXIT_INVALID, msg)
    })?;
    Ok((doc, object))
}

pub fn cmd_analyze(path: &Path, json: bool) -> Outcome {
    let (doc, object) = match load(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    match analyze(&doc, &object) {
        Ok(r) => Outcome::ok(if json { report::to_json(&r) } else { report::to_text(&r) }),
        Err(AnalyzeError::Invalid(problems)) => Outcome::fail(EXIT_INVALID, problems.join("\n")),
        Err(AnalyzeError::HigherClass) => Outcome::fail(
            EXIT_INVALID,
            "nilpotency class is greater than two; the invariants are defined for class at most two",
        ),
    }
}

pub fn cmd_validate(path: &Path) -> Outcome {
    let (_, object) = match load(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let problems = document::validate(&object);
    if problems.is_empty() {
        Outcome::ok("valid\n".into())
    } else {
        Outcome::fail(EXIT_INVALID, problems.join("\n"))
    }
}

fn catalog_spec(family: Family, params: &[usize], seed: u64) -> Result<CatalogSpec, String> {
    let want = |n: usize, usage: &str| {
        if params.len() == n {
            Ok(())
        } else {
            Err(format!("expected {usage}, got {} parameter(s)", params.len()))
        }
    };
    Ok(match family {
        Family::HeisenbergEven => {
            want(2, "`m n`")?;
            CatalogSpec::HeisenbergEven { m: params[0], n: params[1] }
        }
        Family::HeisenbergOdd => {
            want(1, "`m`")?;
            CatalogSpec::HeisenbergOdd { m: params[0] }
        }
        Family::Abelian => {
            want(2, "`m n`")?;
            CatalogSpec::Abelian { m: params[0], n: params[1] }
        }
        Family::GenericFull => {
            want(2, "`m n`")?;
            CatalogSpec::GenericFull { m: params[0], n: params[1] }
        }
        Family::GenericEvenFull => {
            want(2, "`m n`")?;
            CatalogSpec::GenericEvenFull { m: params[0], n: params[1] }
        }
        Family::GenericOddFull => {
            want(2, "`m n`")?;
            CatalogSpec::GenericOddFull { m: params[0], n: params[1] }
        }
        Family::Random => {
            want(4, "`m n r s`")?;
            CatalogSpec::Random { m: params[0], n: params[1], r: params[2], s: params[3], seed }
        }
    })
}

pub fn cmd_catalog(family: Family, params: &[usize], out: Option<&Path>, field: &str, seed: u64) -> Outcome {
    let field = match parse_field(field) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_INVALID, e),
    };
    let object = match catalog_spec(family, params, seed).and_then(|s| s.build(field).map_err(|e| e.to_string())) {
        Ok(o) => o,
        Err(e) => return Outcome::fail(EXIT_INVALID, e),
    };
    let doc = match &object {
        CatalogObject::Lie(l) => document::lie_document(l),
        CatalogObject::Map(f) => document::map_document(f),
    };
    let text = emit(&doc);
    match out {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(EXIT_IO, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(text),
    }
}

pub fn cmd_verify_theorems(max_m: usize, max_n: usize, field: &str, json: bool, sequential: bool) -> Outcome {
    if max_m > MAX_BOUND || max_n > MAX_BOUND {
        return Outcome::fail(EXIT_INVALID, format!("bounds must be at most {MAX_BOUND} (got m ≤ {max_m}, n ≤ {max_n})"));
    }
    let field = match parse_field(field) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_INVALID, e),
    };
    let mut config = BatteryConfig::bounded(max_m, max_n, field);
    if sequential {
        config.execution = Execution::Sequential;
    }
    let results = battery::run(&config);
    let all_passed = results.iter().all(|r| r.passed());
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(&results).expect("rows serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for r in &results {
            let _ = writeln!(s, "# criterion {}: {} — {}", r.id, r.title, if r.passed() { "PASS" } else { "FAIL" });
            for row in &r.rows {
                let _ = writeln!(
                    s,
                    "{:>2}  {}  {}  expected: {}  computed: {}",
                    row.criterion,
                    if row.passed { "PASS" } else { "FAIL" },
                    row.instance,
                    row.expected,
                    row.computed
                );
            }
        }
        let rows: usize = results.iter().map(|r| r.rows.len()).sum();
        let failed: usize = results.iter().map(|r| r.failures().count()).sum();
        let _ = writeln!(s, "{} rows, {} failed", rows, failed);
        s
    };
    Outcome { code: if all_passed { EXIT_OK } else { EXIT_BATTERY }, stdout, stderr: String::new() }
}

pub fn cmd_classify(path: &Path) -> Outcome {
    let (_, object) = match load(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let problems = document::validate(&object);
    if !problems.is_empty() {
        return Outcome::fail(EXIT_INVALID, problems.join("\n"));
    }
    let f = match &object {
        Object::Lie(l) => match SkewSuperMap::from_lie(l) {
            Ok(f) => f,
            Err(e) => return Outcome::fail(EXIT_INVALID, e.to_string()),
        },
        Object::Map(f) => f.clone(),
    };
    match classify_rank_one(&f) {
        Ok(c) => Outcome::ok(format!("{c}\n")),
        Err(e) => Outcome::fail(EXIT_INVALID, e.to_string()),
    }
}
