//! The `pbr` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input
//! error, 3 resource limit reached.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::collection::Collection;
use crate::coxeter::{CoxeterSystem, CoxeterType};
use crate::error::Error;
use crate::input::GroupFile;
use crate::product::ParabolicProduct;
use crate::report::Report;
use crate::ring::{set_cross_check, PbrElement};
use crate::units::UnitGroup;
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "pbr",
    version,
    about = "Partial Burnside rings: tables of marks, unit groups and product-structure checks",
    after_help = "TARGET is a Coxeter type such as A2, B3, D4, I2(5) or A1xB2, or the path of a group file."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Check every ring product against the double-coset expansion.
    #[arg(long, global = true)]
    pub cross_check: bool,

    /// List every unit, not just generators.
    #[arg(long, global = true)]
    pub all_units: bool,

    #[arg(long, value_name = "N", global = true)]
    pub max_elements: Option<usize>,

    #[arg(long, value_name = "N", global = true)]
    pub max_members: Option<usize>,

    #[arg(long, value_name = "N", global = true)]
    pub max_classes: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of marks of the parabolic (or file-seeded) collection.
    Marks { target: String },
    /// Unit group of the partial Burnside ring.
    Units { target: String },
    /// Sign unit of a Coxeter group: coefficients and marks.
    SignUnit { target: String },
    /// Check a structural identity for a Coxeter type.
    Verify { claim: Claim, target: String },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// Unit order formula, sign-unit factorization, matching collections.
    #[value(name = "product-formula", alias = "thm4.3")]
    ProductFormula,
    /// Units generated by -1 and the embedded sign units.
    #[value(name = "generators", alias = "cor4.7")]
    Generators,
    /// Tensor product of factor rings matches the product ring.
    #[value(name = "tensor", alias = "lemma3.1")]
    Tensor,
    /// Marks of embedded elements factor through the factor marks.
    #[value(name = "mark-factorization", alias = "lemma3.4")]
    MarkFactorization,
    /// Kernel of the unit-tuple map.
    #[value(name = "kernel", alias = "lemma3.5")]
    Kernel,
}

enum Target {
    Coxeter(CoxeterType),
    File(GroupFile),
}

fn resolve(target: &str) -> Result<Target, Error> {
    let path = Path::new(target);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("{target}: {e}")))?;
        return GroupFile::parse(&text).map(Target::File);
    }
    CoxeterType::parse(target).map(Target::Coxeter)
}

struct Outcome {
    text: String,
    passed: bool,
}

fn ok(text: String) -> Result<Outcome, Error> {
    Ok(Outcome { text, passed: true })
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return e.exit_code();
        }
    };
    if cli.options.cross_check {
        set_cross_check(true);
    }
    match execute(&cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            if outcome.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ResourceLimit { .. } => EXIT_LIMIT,
                Error::Internal(_) => EXIT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn limits(o: &Options) -> Limits {
    let d = Limits::default();
    Limits {
        max_elements: o.max_elements.unwrap_or(d.max_elements),
        max_members: o.max_members.unwrap_or(d.max_members),
        max_classes: o.max_classes.unwrap_or(d.max_classes),
        max_factors: d.max_factors,
    }
}

fn usage(msg: &str) -> Error {
    Error::parse(0, msg)
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let o = &cli.options;
    let limits = limits(o);
    if o.format == Format::Csv && !matches!(cli.command, Command::Marks { .. }) {
        return Err(usage("csv output is only available for `marks`"));
    }
    match &cli.command {
        Command::Marks { target } => {
            let (c, notes) = collection_for(target, &limits)?;
            ok(render_marks(&c, &notes, o.format))
        }
        Command::Units { target } => {
            let (c, notes) = collection_for(target, &limits)?;
            let u = UnitGroup::compute(&c, &limits)?;
            ok(render_units(&u, &notes, o))
        }
        Command::SignUnit { target } => {
            let ty = match resolve(target)? {
                Target::Coxeter(ty) => ty,
                Target::File(_) => return Err(usage("sign-unit needs a Coxeter type, not a group file")),
            };
            let w = CoxeterSystem::realize(&ty, &limits)?;
            let c = w.parabolic_collection(&limits)?;
            let eps = w.sign_unit(&c)?;
            ok(render_sign_unit(&ty, &eps, o.format))
        }
        Command::Verify { claim, target } => {
            let ty = match resolve(target)? {
                Target::Coxeter(ty) => ty,
                Target::File(_) => return Err(usage("verify needs a Coxeter type, not a group file")),
            };
            let analysis = ParabolicProduct::analyze(&ty, &limits)?;
            let report = match claim {
                Claim::ProductFormula => analysis.product_formula_report(),
                Claim::Generators => analysis.generators_report(),
                Claim::Tensor => analysis.structure_constants_report(),
                Claim::MarkFactorization => analysis.mark_factorization_report(),
                Claim::Kernel => analysis.kernel_report(),
            };
            Ok(Outcome {
                passed: report.passed(),
                text: render_report(&report, o.format),
            })
        }
    }
}

fn collection_for(target: &str, limits: &Limits) -> Result<(Collection, Vec<String>), Error> {
    match resolve(target)? {
        Target::Coxeter(ty) => {
            let w = CoxeterSystem::realize(&ty, limits)?;
            Ok((w.parabolic_collection(limits)?, ty.notes()))
        }
        Target::File(f) => Ok((f.build(limits)?.1, Vec::new())),
    }
}

fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn bigs(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

fn labels(c: &Collection) -> Vec<String> {
    (0..c.class_count()).map(|k| c.class_label(k)).collect()
}

fn group_json(c: &Collection) -> Value {
    let g = c.group();
    json!({
        "label": g.label(),
        "order": g.order(),
        "degree": g.degree(),
    })
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn render_marks(c: &Collection, notes: &[String], format: Format) -> String {
    let t = c.mark_matrix();
    let labels = labels(c);
    match format {
        Format::Json => {
            let classes: Vec<Value> = c
                .classes()
                .iter()
                .enumerate()
                .map(|(k, cl)| {
                    json!({
                        "index": k,
                        "label": labels[k],
                        "order": cl.representative.order(),
                        "class_size": cl.size(),
                        "representative_generators":
                            cl.representative.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let matrix: Vec<Value> = t.rows().iter().map(|r| bigs(r)).collect();
            to_json(&json!({
                "group": group_json(c),
                "classes": classes,
                "matrix": matrix,
                "notes": notes,
            }))
        }
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "class,{}", labels.join(","));
            for (k, row) in t.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "{},{}", labels[k], cells.join(","));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let g = c.group();
            let _ = writeln!(
                s,
                "group {} (order {}, degree {}), {} classes",
                g.label().unwrap_or("G"),
                g.order(),
                g.degree(),
                c.class_count()
            );
            for n in notes {
                let _ = writeln!(s, "note: {n}");
            }
            let width = t
                .rows()
                .iter()
                .flatten()
                .map(|x| x.to_string().len())
                .chain(labels.iter().map(String::len))
                .max()
                .unwrap_or(1);
            let _ = write!(s, "{:>width$}", "");
            for l in &labels {
                let _ = write!(s, " {l:>width$}");
            }
            s.push('\n');
            for (k, row) in t.rows().iter().enumerate() {
                let _ = write!(s, "{:>width$}", labels[k]);
                for x in row {
                    let _ = write!(s, " {:>width$}", x.to_string());
                }
                s.push('\n');
            }
            for (k, cl) in c.classes().iter().enumerate() {
                let gens: Vec<String> = cl.representative.generators().iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    s,
                    "{}: {} conjugate(s), generated by {}",
                    labels[k],
                    cl.size(),
                    if gens.is_empty() { "()".to_string() } else { gens.join(", ") }
                );
            }
            s
        }
    }
}

fn render_units(u: &UnitGroup, notes: &[String], o: &Options) -> String {
    let c = u.collection();
    match o.format {
        Format::Json => {
            let mut v = json!({
                "group": group_json(c),
                "classes": labels(c),
                "order": u.order(),
                "rank": u.rank(),
                "generators": u.generators().iter().map(|g| bigs(g.coeffs())).collect::<Vec<_>>(),
                "notes": notes,
            });
            if o.all_units {
                v["all_units"] = Value::Array(u.units().iter().map(|x| bigs(x.coeffs())).collect());
            }
            to_json(&v)
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "unit group of order {} = 2^{}, rank {}",
                u.order(),
                u.rank() + 1,
                u.rank()
            );
            for n in notes {
                let _ = writeln!(s, "note: {n}");
            }
            let _ = writeln!(s, "generators:");
            for g in u.generators() {
                let _ = writeln!(s, "  {g}    marks {}", sign_string(g));
            }
            if o.all_units {
                let _ = writeln!(s, "units:");
                for x in u.units() {
                    let _ = writeln!(s, "  {x}    marks {}", sign_string(x));
                }
            }
            s
        }
    }
}

fn sign_string(x: &PbrElement) -> String {
    let parts: Vec<String> = x.marks().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn render_sign_unit(ty: &CoxeterType, eps: &PbrElement, format: Format) -> String {
    let c = eps.collection();
    match format {
        Format::Json => to_json(&json!({
            "type": ty.to_string(),
            "classes": labels(c),
            "coefficients": bigs(eps.coeffs()),
            "marks": bigs(&eps.marks()),
            "notes": ty.notes(),
        })),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "sign unit of {ty}: {eps}");
            let _ = writeln!(s, "marks: {}", sign_string(eps));
            for n in ty.notes() {
                let _ = writeln!(s, "note: {n}");
            }
            s
        }
    }
}

fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => to_json(&serde_json::to_value(r).expect("serializable")),
        _ => r.to_table(),
    }
}
