//! Command-line front end. [`run`] takes the argument list and two writers
//! and returns the process exit code:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 1    | `pgshell` decided "not a PG-shell"        |
//! | 2    | bad input (usage, file, parse, precondition) |
//! | 3    | an internal consistency check failed      |

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::catalog;
use crate::error::{Error, Result};
use crate::field::{Coeff, FieldDescriptor, Fp, Rational, DEFAULT_PRIME};
use crate::format::{self, Parsed, SourceFile};
use crate::groebner::{hilbert_function, saturate_irrelevant};
use crate::ideal::Ideal;
use crate::resolution::minimal_resolution;
use crate::ring::{MonomialOrder, RingDescriptor};
use crate::shell::{criteria_suite, invariants, pgshell_check, tensor_resolution, Method, ShellReport, Verdict};

/// Version tag of the JSON report schema (`schema/report.v1.json`).
pub const SCHEMA_VERSION: &str = "report.v1";

#[derive(Parser, Debug)]
#[command(name = "pgshell", version, about = "Betti tables, invariants and PG-shell checks for homogeneous ideals")]
pub struct Cli {
    /// Machine-readable output (see schema/report.v1.json).
    #[arg(long, global = true)]
    pub json: bool,
    /// Recompute over a second field (QQ <-> ZZ/32003) and report agreement.
    #[arg(long, global = true)]
    pub field_check: bool,
    /// Seed for pseudo-random catalog entries.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Treat inhomogeneous generators as errors.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis (degrevlex).
    Gb { file: PathBuf, ideal: String },
    /// Graded Betti table of S/I.
    Betti { file: PathBuf, ideal: String },
    /// Dimension, degree, depth, regularity and structural flags.
    Invariants { file: PathBuf, ideal: String },
    /// Decide whether W is a PG-shell of V (ideals named in FILE).
    Pgshell {
        file: PathBuf,
        v: String,
        w: String,
        /// chain, oracle or both.
        #[arg(long, default_value = "chain")]
        method: Method,
    },
    /// Run the PG-shell criteria against the direct verdict.
    Criteria { file: PathBuf, v: String, w: String },
    /// Resolve S/(I_Y + I_Z) as a tensor product of resolutions.
    TensorRes { file: PathBuf, y: String, z: String },
    /// Saturation with respect to the irrelevant ideal.
    Saturate { file: PathBuf, ideal: String },
    /// Print a catalog ideal in the input format.
    Catalog {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
    },
    /// Hilbert function of S/I in degrees 0..=M.
    Hilbert {
        file: PathBuf,
        ideal: String,
        #[arg(long)]
        max: u32,
    },
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::NotMinimal | Error::SingularMatrix | Error::DegreeMismatch { .. } => 3,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::InvalidField(_) | Error::InvalidRing(_) => "ring",
        Error::RingMismatch => "ring-mismatch",
        Error::ZeroDenominator => "zero-denominator",
        Error::Inhomogeneous(_) => "inhomogeneous",
        Error::WeightedRing => "weighted-ring",
        Error::NotStabilized { .. } => "not-stabilized",
        Error::ContainmentFailed => "containment",
        Error::NotMember(_) => "not-member",
        Error::Precondition(_) => "precondition",
        Error::NotCompleteIntersection(_) => "not-complete-intersection",
        Error::Internal(_) | Error::NotMinimal | Error::SingularMatrix | Error::DegreeMismatch { .. } => "internal",
    }
}

fn error_json(e: &Error) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(error_kind(e)));
    obj.insert("message".into(), json!(e.to_string()));
    if let Error::Parse { line, column, .. } = e {
        obj.insert("line".into(), json!(line));
        obj.insert("column".into(), json!(column));
    }
    json!({ "error": Value::Object(obj) })
}

/// What a command produced: one JSON object, its human rendering, and the
/// exit code.
struct Outcome {
    json: Map<String, Value>,
    text: String,
    exit: i32,
}

impl Outcome {
    fn new(key: &str, value: Value, text: String) -> Self {
        let mut json = Map::new();
        json.insert(key.into(), value);
        Outcome { json, text, exit: 0 }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialise")
}

fn read_source(path: &PathBuf) -> Result<SourceFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    format::parse_source(&text)
}

/// The same declarations over another field.
fn over_field(src: &SourceFile, field: FieldDescriptor) -> Result<SourceFile> {
    let ring = RingDescriptor::new(field, src.ring.names().to_vec(), src.ring.weights().to_vec(), MonomialOrder::DegRevLex)?;
    Ok(SourceFile { ring, ..src.clone() })
}

fn render_shell(rep: &ShellReport) -> String {
    let mut s = format!("verdict: {}\nmethod: {}\n", rep.verdict, rep.method);
    if rep.table.is_empty() {
        s.push_str("table: empty (Tor_q(R_W) = 0 for q >= 1)\n");
    } else {
        s.push_str("   q    m  source  target  rank  injective\n");
        for e in &rep.table {
            let _ = writeln!(
                s,
                "{:>4} {:>4} {:>7} {:>7} {:>5}  {}",
                e.q,
                e.m,
                e.source_dim,
                e.target_dim,
                e.rank,
                if e.injective { "yes" } else { "no" }
            );
        }
    }
    if let Some(w) = &rep.witness {
        let _ = writeln!(s, "witness: q = {}, m = {}, verified = {}", w.q, w.m, w.verified);
        if let Some(c) = &w.generator_coefficients {
            let parts: Vec<String> = c.iter().map(|(g, x)| format!("{x}*f{g}")).collect();
            let _ = writeln!(s, "  generators: {}", parts.join(" + "));
        }
        let _ = writeln!(s, "  cycle: {}", w.cycle);
    }
    if !rep.cross_checked.is_empty() {
        let qs: Vec<String> = rep.cross_checked.iter().map(|q| q.to_string()).collect();
        let _ = writeln!(s, "cross-checked: q = {}", qs.join(", "));
    }
    s
}

fn render_record(value: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            if k == "betti" {
                continue;
            }
            let shown = match v {
                Value::String(x) => x.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(s, "{k}: {shown}");
        }
    }
    s
}

fn gb_outcome<K: Coeff>(ideal: &Ideal<K>) -> Outcome {
    let gb = ideal.groebner();
    let elements: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
    let leading: Vec<String> = gb.leading_monomials().iter().map(|m| ideal.ring().format_monomial(m)).collect();
    let mut text = String::new();
    for g in &elements {
        let _ = writeln!(text, "{g}");
    }
    Outcome::new("groebner_basis", json!({ "elements": elements, "leading_monomials": leading }), text)
}

fn betti_outcome<K: Coeff>(ideal: &Ideal<K>) -> Result<Outcome> {
    let b = minimal_resolution(ideal)?.betti()?;
    Ok(Outcome::new("betti", b.to_json(), b.render()))
}

fn invariants_outcome<K: Coeff>(ideal: &Ideal<K>) -> Result<Outcome> {
    let rec = invariants(ideal)?;
    let value = to_value(&rec);
    let mut text = render_record(&value);
    text.push_str("betti:\n");
    text.push_str(&rec.betti.render());
    Ok(Outcome::new("invariants", value, text))
}

fn pgshell_outcome<K: Coeff>(v: &Ideal<K>, w: &Ideal<K>, method: Method) -> Result<Outcome> {
    let rep = pgshell_check(v, w, method)?;
    let mut o = Outcome::new("shell", to_value(&rep), render_shell(&rep));
    o.exit = if rep.verdict == Verdict::PgShell { 0 } else { 1 };
    for w in &rep.warnings {
        push_warning(&mut o, w.clone());
    }
    Ok(o)
}

fn criteria_outcome<K: Coeff>(v: &Ideal<K>, w: &Ideal<K>) -> Result<Outcome> {
    let rep = criteria_suite(v, w)?;
    let mut text = format!("verdict: {}\n", rep.verdict);
    for c in &rep.criteria {
        if c.applicable {
            let _ = writeln!(
                text,
                "{}: predicted {}; observed {}; {}",
                c.name,
                c.predicted.as_deref().unwrap_or("-"),
                c.observed.as_deref().unwrap_or("-"),
                if c.consistent == Some(true) { "consistent" } else { "INCONSISTENT" }
            );
        } else {
            let _ = writeln!(text, "{}: skipped ({})", c.name, c.reason.as_deref().unwrap_or(""));
        }
    }
    for n in &rep.notes {
        let _ = writeln!(text, "note: {n}");
    }
    let mut o = Outcome::new("criteria", to_value(&rep), text);
    if !rep.all_consistent() {
        o.exit = 3;
    }
    Ok(o)
}

fn tensor_outcome<K: Coeff>(y: &Ideal<K>, z: &Ideal<K>) -> Result<Outcome> {
    let (res, rep) = tensor_resolution(y, z)?;
    let mut text = format!(
        "codim: {} + {} = {}\nlength: {}\n",
        rep.codim_y,
        rep.codim_z,
        rep.codim_sum,
        res.length()
    );
    text.push_str(&rep.betti.render());
    let _ = writeln!(text, "verified complex: {}", rep.complex.passed());
    let _ = writeln!(text, "matches convolution: {}", rep.matches_convolution);
    let _ = writeln!(text, "matches direct resolution: {}", rep.matches_direct);
    let _ = writeln!(text, "Y over Y+Z: {}\nZ over Y+Z: {}", rep.y_over_sum, rep.z_over_sum);
    let mut o = Outcome::new("tensor", to_value(&rep), text);
    if !rep.passed() {
        o.exit = 3;
    }
    Ok(o)
}

fn saturate_outcome<K: Coeff>(ideal: &Ideal<K>) -> Result<Outcome> {
    let (sat, changed) = saturate_irrelevant(ideal)?;
    let gens: Vec<String> = sat.generators().iter().map(|g| g.to_string()).collect();
    let mut text = format!("changed: {changed}\n");
    for g in &gens {
        let _ = writeln!(text, "{g}");
    }
    Ok(Outcome::new("saturation", json!({ "changed": changed, "generators": gens }), text))
}

fn hilbert_outcome<K: Coeff>(ideal: &Ideal<K>, max: u32) -> Result<Outcome> {
    let h = hilbert_function(ideal, max)?;
    let poly: Option<Vec<String>> = h.hilbert_polynomial.as_ref().map(|c| c.iter().map(|x| x.to_string()).collect());
    let mut text = String::new();
    for (m, v) in h.values.iter().enumerate() {
        let _ = writeln!(text, "{m}: {v}");
    }
    if let Some(p) = &poly {
        let _ = writeln!(text, "polynomial (increasing powers): {}", p.join(", "));
    }
    let _ = writeln!(text, "stabilization degree: {}", h.stabilization_degree);
    Ok(Outcome::new(
        "hilbert",
        json!({ "values": h.values, "polynomial": poly, "stabilization_degree": h.stabilization_degree }),
        text,
    ))
}

fn push_warning(o: &mut Outcome, w: String) {
    o.json
        .entry("warnings")
        .or_insert_with(|| json!([]))
        .as_array_mut()
        .expect("warnings is an array")
        .push(json!(w));
}

/// Value compared by `--field-check`.
fn fingerprint<K: Coeff>(cmd: &Command, p: &Parsed<K>) -> Result<Value> {
    Ok(match cmd {
        Command::Gb { ideal, .. } => {
            let i = p.ideal(ideal)?;
            let lms: Vec<String> = i.groebner().leading_monomials().iter().map(|m| i.ring().format_monomial(m)).collect();
            json!(lms)
        }
        Command::Betti { ideal, .. } | Command::Invariants { ideal, .. } => minimal_resolution(p.ideal(ideal)?)?.betti()?.to_json(),
        Command::Saturate { ideal, .. } => {
            let (sat, _) = saturate_irrelevant(p.ideal(ideal)?)?;
            json!(hilbert_function(&sat, 2 * sat.ring().num_vars() as u32 + 4).map(|h| h.values).unwrap_or_default())
        }
        Command::Hilbert { ideal, max, .. } => json!(hilbert_function(p.ideal(ideal)?, *max)?.values),
        Command::Pgshell { v, w, method, .. } => {
            let r = pgshell_check(p.ideal(v)?, p.ideal(w)?, *method)?;
            json!({ "verdict": r.verdict, "table": r.table })
        }
        Command::Criteria { v, w, .. } => json!(pgshell_check(p.ideal(v)?, p.ideal(w)?, Method::ChainMap)?.verdict),
        Command::TensorRes { y, z, .. } => to_value(&tensor_resolution(p.ideal(y)?, p.ideal(z)?)?.1.betti),
        Command::Catalog { .. } => Value::Null,
    })
}

fn field_check(cli: &Cli, src: &SourceFile) -> Value {
    let other = match src.field() {
        FieldDescriptor::Rationals => FieldDescriptor::Prime(DEFAULT_PRIME),
        FieldDescriptor::Prime(_) => FieldDescriptor::Rationals,
    };
    let run = || -> Result<(Value, Value)> {
        let alt = over_field(src, other)?;
        let here = match src.field() {
            FieldDescriptor::Rationals => fingerprint(&cli.command, &src.build::<Rational>(cli.strict)?)?,
            FieldDescriptor::Prime(_) => fingerprint(&cli.command, &src.build::<Fp>(cli.strict)?)?,
        };
        let there = match other {
            FieldDescriptor::Rationals => fingerprint(&cli.command, &alt.build::<Rational>(cli.strict)?)?,
            FieldDescriptor::Prime(_) => fingerprint(&cli.command, &alt.build::<Fp>(cli.strict)?)?,
        };
        Ok((here, there))
    };
    match run() {
        Ok((a, b)) => json!({ "field": other.to_string(), "agrees": a == b }),
        Err(e) => json!({ "field": other.to_string(), "agrees": null, "error": e.to_string() }),
    }
}

fn execute<K: Coeff>(cli: &Cli, src: &SourceFile) -> Result<Outcome> {
    let p: Parsed<K> = src.build(cli.strict)?;
    let mut o = match &cli.command {
        Command::Gb { ideal, .. } => gb_outcome(p.ideal(ideal)?),
        Command::Betti { ideal, .. } => betti_outcome(p.ideal(ideal)?)?,
        Command::Invariants { ideal, .. } => invariants_outcome(p.ideal(ideal)?)?,
        Command::Pgshell { v, w, method, .. } => pgshell_outcome(p.ideal(v)?, p.ideal(w)?, *method)?,
        Command::Criteria { v, w, .. } => criteria_outcome(p.ideal(v)?, p.ideal(w)?)?,
        Command::TensorRes { y, z, .. } => tensor_outcome(p.ideal(y)?, p.ideal(z)?)?,
        Command::Saturate { ideal, .. } => saturate_outcome(p.ideal(ideal)?)?,
        Command::Hilbert { ideal, max, .. } => hilbert_outcome(p.ideal(ideal)?, *max)?,
        Command::Catalog { .. } => unreachable!("catalog reads no file"),
    };
    let mut warnings = p.warnings.clone();
    if !src.field().is_exact() {
        warnings.push(format!("computed over {}; results are probabilistic for characteristic zero", src.field()));
    }
    for w in warnings.into_iter().rev() {
        let arr = o.json.entry("warnings").or_insert_with(|| json!([]));
        arr.as_array_mut().expect("array").insert(0, json!(w));
    }
    Ok(o)
}

/// Identifier form of a catalog name (`ci2-3` becomes `ci2_3`).
pub fn catalog_ideal_name(name: &str) -> String {
    name.replace('-', "_")
}

fn catalog_outcome(name: &str, params: &[i64], seed: u64) -> Result<Outcome> {
    let e = catalog::by_name::<Rational>(FieldDescriptor::Rationals, name, params, seed)?;
    let ident = catalog_ideal_name(&e.name);
    let source = format::print_source("S", e.ring(), &[(ident.as_str(), &e.ideal)]);
    let expected = e.expected.as_ref().map(|x| {
        json!({
            "betti": crate::resolution::BettiTable::from_entries(x.betti.iter().copied()).to_json(),
            "dim": x.dim,
            "degree": x.degree,
            "depth": x.depth,
            "reg_r": x.reg_r,
            "is_complete_intersection": x.is_complete_intersection,
            "is_2linear": x.is_2linear,
            "is_acm": x.is_acm,
            "delta_genus": x.delta_genus,
            "source": x.source,
        })
    });
    Ok(Outcome::new(
        "catalog",
        json!({ "name": e.name, "ideal": ident, "source": source, "expected": expected, "notes": e.notes }),
        source.clone(),
    ))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let (file, mut o) = match &cli.command {
        Command::Catalog { name, params } => (None, catalog_outcome(name, params, cli.seed)?),
        Command::Gb { file, .. }
        | Command::Betti { file, .. }
        | Command::Invariants { file, .. }
        | Command::Pgshell { file, .. }
        | Command::Criteria { file, .. }
        | Command::TensorRes { file, .. }
        | Command::Saturate { file, .. }
        | Command::Hilbert { file, .. } => {
            let src = read_source(file)?;
            let o = match src.field() {
                FieldDescriptor::Rationals => execute::<Rational>(cli, &src)?,
                FieldDescriptor::Prime(_) => execute::<Fp>(cli, &src)?,
            };
            (Some(src), o)
        }
    };
    if cli.field_check {
        match &file {
            Some(src) => {
                let fc = field_check(cli, src);
                let _ = writeln!(
                    o.text,
                    "field check over {}: {}",
                    fc["field"].as_str().unwrap_or("?"),
                    match fc["agrees"].as_bool() {
                        Some(true) => "agrees".to_string(),
                        Some(false) => "DISAGREES".to_string(),
                        None => format!("not applicable ({})", fc["error"].as_str().unwrap_or("")),
                    }
                );
                o.json.insert("field_check".into(), fc);
            }
            None => push_warning(&mut o, "--field-check has no effect on catalog".into()),
        }
    }
    Ok(o)
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            if cli.json {
                let _ = writeln!(out, "{}", Value::Object(o.json));
            } else {
                let _ = write!(out, "{}", o.text);
                if let Some(Value::Array(ws)) = o.json.get("warnings") {
                    for w in ws {
                        let _ = writeln!(err, "warning: {}", w.as_str().unwrap_or_default());
                    }
                }
            }
            o.exit
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", error_json(&e));
            }
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
