//! Command-line front end: evaluate expressions in either basis, run the
//! identity suites, and emit dimension tables and presentation reports as
//! deterministic JSON, CSV, or plain text.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input-document
//! error, 3 domain error (genus too small, bad gonality, bad nodes, ...).

pub mod document;
pub mod suites;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use document::{
    parse_document, serialize_newton, serialize_pontryagin, ElementDocument, ParsedElement, Side,
};
use suites::{run_suite, CheckResult, Suite};
use tautring::{
    dimension_table, expand_ktuple, format_rat, fourier_backward, fourier_forward,
    generator_bound, hyperelliptic_report, intersection_number, theta_mul, theta_power,
    trigonal_report, JacobianContext, KTuple, PresentationReport,
};

#[derive(Parser)]
#[command(
    name = "tautring",
    version,
    about = "Exact calculator for tautological classes on Jacobians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Curve genus (required by every subcommand).
    #[arg(long, global = true)]
    genus: Option<u32>,

    /// Gonality assumption; kills high level components on both sides.
    #[arg(long, global = true)]
    gonality: Option<u32>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Comma-separated node override for the component bridge, e.g. "2,3,4".
    #[arg(long, global = true)]
    nodes: Option<String>,

    /// Write the primary output to FILE instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Intersection basis to convolution basis.
    Fwd,
    /// Convolution basis to intersection basis.
    Bwd,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate surviving basis monomials per bidegree (p, s).
    Dims,
    /// Expand a power of theta in the convolution basis.
    ThetaPower {
        /// Exponent j in theta^j.
        #[arg(long)]
        power: u32,
    },
    /// Transform an element document between the two bases.
    Fourier {
        #[arg(long, value_enum)]
        direction: Direction,
        /// Input document path; stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Expand (k1*C)*...*(kr*C) in the convolution basis.
    Expand {
        /// Comma-separated integers, e.g. "1,2,2".
        #[arg(long)]
        ktuple: String,
    },
    /// Intersection degree of theta^m times an expanded tuple.
    Intersect {
        /// Exponent m.
        #[arg(long)]
        theta_exponent: u32,
        /// Comma-separated integers, e.g. "1,2,2".
        #[arg(long)]
        ktuple: String,
    },
    /// Run an identity suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Presentation report for the gonality-2 quotient.
    Hyperelliptic,
    /// Presentation report for the gonality-3 quotient.
    Trigonal,
    /// Largest generator index ever needed: floor((g+1)/2).
    Bound,
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn domain(e: tautring::Error) -> Failure {
    Failure::Domain(e.to_string())
}

struct Output {
    body: String,
    warnings: Vec<String>,
    exit: i32,
}

/// Runs the CLI against explicit streams; returns the process exit code.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };

    let out_path = cli.out.clone();
    match execute(cli, stdin) {
        Ok(output) => {
            for w in &output.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            match out_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, output.body.as_bytes()) {
                        let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                }
                None => {
                    let _ = write!(stdout, "{}", output.body);
                }
            }
            output.exit
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            3
        }
    }
}

fn required_genus(cli: &Cli) -> Result<u32, Failure> {
    cli.genus
        .ok_or_else(|| Failure::Usage("the --genus flag is required".into()))
}

fn parse_int_list(text: &str, what: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("invalid {what} entry {piece:?}")))
        })
        .collect()
}

fn build_context(genus: u32, gonality: Option<u32>, nodes: &Option<String>) -> Result<JacobianContext, Failure> {
    let ctx = match gonality {
        Some(d) => JacobianContext::with_gonality(genus, d),
        None => JacobianContext::new(genus),
    }
    .map_err(domain)?;
    match nodes {
        Some(list) => {
            let nodes = parse_int_list(list, "node")?;
            ctx.with_nodes(nodes).map_err(domain)
        }
        None => Ok(ctx),
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let format = cli.format;
    let genus = required_genus(&cli)?;
    match cli.command {
        Command::Dims => {
            let ctx = build_context(genus, cli.gonality, &cli.nodes)?;
            Ok(Output {
                body: render_dims(&ctx, format),
                warnings: Vec::new(),
                exit: 0,
            })
        }
        Command::ThetaPower { power } => {
            let ctx = build_context(genus, cli.gonality, &cli.nodes)?;
            let x = theta_power(&ctx, power);
            Ok(Output {
                body: render_element(&serialize_pontryagin(&x), &x.to_string(), format),
                warnings: Vec::new(),
                exit: 0,
            })
        }
        Command::Fourier { direction, input } => {
            let text = match &input {
                Some(path) => std::fs::read_to_string(path).map_err(|e| {
                    Failure::Usage(format!("cannot read {}: {e}", path.display()))
                })?,
                None => {
                    let mut buf = String::new();
                    stdin
                        .read_to_string(&mut buf)
                        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
                    buf
                }
            };
            let doc: ElementDocument = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("invalid element document: {e}")))?;
            if doc.genus != genus {
                return Err(Failure::Usage(format!(
                    "document genus {} does not match --genus {genus}",
                    doc.genus
                )));
            }
            let gonality = match (cli.gonality, doc.gonality) {
                (Some(a), Some(b)) if a != b => {
                    return Err(Failure::Usage(format!(
                        "document gonality {b} does not match --gonality {a}"
                    )))
                }
                (flag, doc) => flag.or(doc),
            };
            let ctx = build_context(genus, gonality, &cli.nodes)?;
            let expected_side = match direction {
                Direction::Fwd => Side::Newton,
                Direction::Bwd => Side::Pontryagin,
            };
            if doc.side != expected_side {
                return Err(Failure::Usage(format!(
                    "direction expects a {expected_side}-side document, got {}",
                    doc.side
                )));
            }
            let mut warnings = Vec::new();
            let parsed = parse_document(&doc, &ctx, &mut warnings).map_err(Failure::Usage)?;
            let body = match parsed {
                ParsedElement::Newton(x) => {
                    let y = fourier_forward(&x);
                    render_element(&serialize_pontryagin(&y), &y.to_string(), format)
                }
                ParsedElement::Pontryagin(x) => {
                    let y = fourier_backward(&x);
                    render_element(&serialize_newton(&y), &y.to_string(), format)
                }
            };
            Ok(Output {
                body,
                warnings,
                exit: 0,
            })
        }
        Command::Expand { ktuple } => {
            let ctx = build_context(genus, cli.gonality, &cli.nodes)?;
            let entries = parse_int_list(&ktuple, "ktuple")?;
            let x = expand_ktuple(&ctx, &KTuple::new(entries));
            Ok(Output {
                body: render_element(&serialize_pontryagin(&x), &x.to_string(), format),
                warnings: Vec::new(),
                exit: 0,
            })
        }
        Command::Intersect {
            theta_exponent,
            ktuple,
        } => {
            let ctx = build_context(genus, cli.gonality, &cli.nodes)?;
            let entries = parse_int_list(&ktuple, "ktuple")?;
            let mut x = expand_ktuple(&ctx, &KTuple::new(entries));
            for _ in 0..theta_exponent {
                x = theta_mul(&x);
            }
            let degree = intersection_number(&x).map_err(domain)?;
            Ok(Output {
                body: render_value(genus, &format_rat(&degree), format),
                warnings: Vec::new(),
                exit: 0,
            })
        }
        Command::Verify { suite } => {
            let ctx = build_context(genus, cli.gonality, &cli.nodes)?;
            let checks = run_suite(&ctx, suite);
            let ok = checks.iter().all(|c| c.ok);
            Ok(Output {
                body: render_suite(&ctx, suite, &checks, ok, format),
                warnings: Vec::new(),
                exit: if ok { 0 } else { 1 },
            })
        }
        Command::Hyperelliptic => {
            let report = hyperelliptic_report(genus).map_err(domain)?;
            Ok(Output {
                body: render_report(&report, format),
                warnings: Vec::new(),
                exit: 0,
            })
        }
        Command::Trigonal => {
            let report = trigonal_report(genus).map_err(domain)?;
            Ok(Output {
                body: render_report(&report, format),
                warnings: Vec::new(),
                exit: 0,
            })
        }
        Command::Bound => {
            let bound = generator_bound(genus).map_err(domain)?;
            Ok(Output {
                body: format!("{bound}\n"),
                warnings: Vec::new(),
                exit: 0,
            })
        }
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut body = serde_json::to_string_pretty(value).expect("infallible serialization");
    body.push('\n');
    body
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

#[derive(Serialize)]
struct DimEntryDoc {
    p: u32,
    s: u32,
    dim: usize,
}

#[derive(Serialize)]
struct DimsDoc {
    genus: u32,
    gonality: Option<u32>,
    entries: Vec<DimEntryDoc>,
}

fn render_dims(ctx: &JacobianContext, format: Format) -> String {
    let table = dimension_table(ctx);
    match format {
        Format::Json => to_pretty_json(&DimsDoc {
            genus: table.genus(),
            gonality: table.gonality(),
            entries: table
                .entries()
                .map(|((p, s), dim)| DimEntryDoc { p, s, dim })
                .collect(),
        }),
        Format::Csv => {
            let mut body = String::from("p,s,dim\n");
            for ((p, s), dim) in table.entries() {
                body.push_str(&format!("{p},{s},{dim}\n"));
            }
            body
        }
        Format::Text => {
            let mut body = match table.gonality() {
                Some(d) => format!("genus {}, gonality {d}\n", table.genus()),
                None => format!("genus {}\n", table.genus()),
            };
            for ((p, s), dim) in table.entries() {
                body.push_str(&format!("p={p} s={s} dim={dim}\n"));
            }
            body
        }
    }
}

fn render_element(doc: &ElementDocument, display: &str, format: Format) -> String {
    match format {
        Format::Json => to_pretty_json(doc),
        Format::Csv => {
            let mut body = String::from("monomial,coeff\n");
            for term in &doc.terms {
                let monomial = term
                    .monomial
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                body.push_str(&format!("{},{}\n", csv_escape(&monomial), term.coeff));
            }
            body
        }
        Format::Text => format!("{display}\n"),
    }
}

#[derive(Serialize)]
struct ValueDoc {
    genus: u32,
    value: String,
}

fn render_value(genus: u32, value: &str, format: Format) -> String {
    match format {
        Format::Json => to_pretty_json(&ValueDoc {
            genus,
            value: value.to_string(),
        }),
        Format::Csv => format!("value\n{value}\n"),
        Format::Text => format!("{value}\n"),
    }
}

#[derive(Serialize)]
struct CheckDoc {
    name: String,
    ok: bool,
    detail: String,
}

#[derive(Serialize)]
struct SuiteDoc {
    genus: u32,
    gonality: Option<u32>,
    suite: String,
    ok: bool,
    checks: Vec<CheckDoc>,
}

fn render_suite(
    ctx: &JacobianContext,
    suite: Suite,
    checks: &[CheckResult],
    ok: bool,
    format: Format,
) -> String {
    match format {
        Format::Json => to_pretty_json(&SuiteDoc {
            genus: ctx.genus(),
            gonality: ctx.gonality(),
            suite: suite.name().to_string(),
            ok,
            checks: checks
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.clone(),
                    ok: c.ok,
                    detail: c.detail.clone(),
                })
                .collect(),
        }),
        Format::Csv => {
            let mut body = String::from("name,ok,detail\n");
            for c in checks {
                body.push_str(&format!(
                    "{},{},{}\n",
                    csv_escape(&c.name),
                    c.ok,
                    csv_escape(&c.detail)
                ));
            }
            body
        }
        Format::Text => {
            let mut body = String::new();
            for c in checks {
                let status = if c.ok { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    body.push_str(&format!("{status} {}\n", c.name));
                } else {
                    body.push_str(&format!("{status} {} ({})\n", c.name, c.detail));
                }
            }
            body.push_str(&format!(
                "suite {} at genus {}: {}\n",
                suite.name(),
                ctx.genus(),
                if ok { "ok" } else { "FAILED" }
            ));
            body
        }
    }
}

#[derive(Serialize)]
struct GeneratorDoc {
    name: String,
    codimension: u32,
    level: u32,
}

#[derive(Serialize)]
struct LambdaDoc {
    a: u32,
    b: u32,
    value: String,
}

#[derive(Serialize)]
struct ReportDoc {
    genus: u32,
    gonality: u32,
    generators: Vec<GeneratorDoc>,
    relations: Vec<(u32, u32)>,
    k: Option<u32>,
    lambda_table: Vec<LambdaDoc>,
    verdict: bool,
    diagnostics: Vec<String>,
}

fn relation_name(r: u32, s: u32) -> String {
    let mut factors = Vec::new();
    if r == 1 {
        factors.push("theta".to_string());
    } else if r > 1 {
        factors.push(format!("theta^{r}"));
    }
    if s == 1 {
        factors.push("eta".to_string());
    } else if s > 1 {
        factors.push(format!("eta^{s}"));
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn render_report(report: &PresentationReport, format: Format) -> String {
    match format {
        Format::Json => to_pretty_json(&ReportDoc {
            genus: report.genus,
            gonality: report.gonality,
            generators: report
                .generators
                .iter()
                .map(|g| GeneratorDoc {
                    name: g.name.clone(),
                    codimension: g.codimension,
                    level: g.level,
                })
                .collect(),
            relations: report.relations.clone(),
            k: report.k,
            lambda_table: report
                .lambda_table
                .iter()
                .map(|(&(a, b), v)| LambdaDoc {
                    a,
                    b,
                    value: format_rat(v),
                })
                .collect(),
            verdict: report.verdict,
            diagnostics: report.diagnostics.clone(),
        }),
        Format::Csv => {
            let mut body = String::from("kind,a,b,value\n");
            for g in &report.generators {
                body.push_str(&format!(
                    "generator,{},{},{}\n",
                    g.codimension,
                    g.level,
                    csv_escape(&g.name)
                ));
            }
            for &(r, s) in &report.relations {
                body.push_str(&format!("relation,{r},{s},{}\n", relation_name(r, s)));
            }
            if let Some(k) = report.k {
                body.push_str(&format!("k,{k},,\n"));
            }
            for (&(a, b), v) in &report.lambda_table {
                body.push_str(&format!("lambda,{a},{b},{}\n", format_rat(v)));
            }
            body.push_str(&format!("verdict,,,{}\n", report.verdict));
            for d in &report.diagnostics {
                body.push_str(&format!("diagnostic,,,{}\n", csv_escape(d)));
            }
            body
        }
        Format::Text => {
            let mut body = format!("genus {}, gonality {}\n", report.genus, report.gonality);
            let generators = report
                .generators
                .iter()
                .map(|g| format!("{} (codim {}, level {})", g.name, g.codimension, g.level))
                .collect::<Vec<_>>()
                .join("; ");
            body.push_str(&format!("generators: {generators}\n"));
            let relations = report
                .relations
                .iter()
                .map(|&(r, s)| relation_name(r, s))
                .collect::<Vec<_>>()
                .join(", ");
            body.push_str(&format!("relations: {relations}\n"));
            if let Some(k) = report.k {
                body.push_str(&format!("k = {k}\n"));
            }
            for (&(a, b), v) in &report.lambda_table {
                body.push_str(&format!("lambda({a},{b}) = {}\n", format_rat(v)));
            }
            body.push_str(&format!("verdict: {}\n", report.verdict));
            for d in &report.diagnostics {
                body.push_str(&format!("diagnostic: {d}\n"));
            }
            body
        }
    }
}
