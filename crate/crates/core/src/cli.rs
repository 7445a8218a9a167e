//! Command-line front end. [`run`] parses an argument vector and returns the
//! exit code together with what would be written to stdout and stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dirac_complex::{build_complex, e1_page, jet_sequence, rank_feasibility, Variant};
use crate::direct_images::{image_rows, images_csv};
use crate::error::{check_stable_range, Error, Result};
use crate::partitions::{enumerate, Filter, Partition};
use crate::relative_bgg::{build_graph, lambda_weight};
use crate::verify::{run_suite, Suite, SuiteReport};
use crate::weights::rho;
use crate::weyl::{bruhat_covers, WeylElement};

pub const TOOL: &str = "kdirac";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = TOOL, version, about = "Partitions, Weyl elements, relative BGG graphs, direct images and jet tables for k-Dirac complexes")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// List partitions of the k x n box with their statistics
    Partitions(Common),
    /// Print the Weyl element w_a of each partition
    Weyl(Common),
    /// Export the relative BGG graph
    Bgg(Common),
    /// Tabulate direct images
    Images(Common),
    /// Export the k-Dirac complex graph
    Complex(Common),
    /// Jet dimension sequence, rank report and first spectral page
    Jets(Common),
    /// Run a verification suite
    Verify {
        /// bijection, balanced, length, rho-shift, kostant, images, structure, ranks, euler or all
        suite: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args, Clone)]
struct Common {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Jet order
    #[arg(long)]
    r: Option<usize>,
    /// Largest jet order swept by the verification suites
    #[arg(long, default_value_t = 6)]
    rmax: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Sym)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// all, symmetric, symmetric_with_r=J or size=P
    #[arg(long, default_value = "all")]
    filter: String,
    /// A single partition, e.g. 4,3,1
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Full,
    Sym,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::Sym => Variant::Sym,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl Format {
    fn name(&self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::usage(text),
            };
        }
    };
    let (verb, common) = match &cli.verb {
        Verb::Partitions(c) => ("partitions", c),
        Verb::Weyl(c) => ("weyl", c),
        Verb::Bgg(c) => ("bgg", c),
        Verb::Images(c) => ("images", c),
        Verb::Complex(c) => ("complex", c),
        Verb::Jets(c) => ("jets", c),
        Verb::Verify { common, .. } => ("verify", common),
    };
    let result =
        check_stable_range(common.k, common.n).and_then(|_| dispatch(&cli.verb, verb, common));
    let (code, body) = match result {
        Ok(pair) => pair,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    match &common.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

fn allowed(verb: &str, format: Format, formats: &[Format]) -> Result<()> {
    if formats.contains(&format) {
        Ok(())
    } else {
        let names: Vec<&str> = formats.iter().map(|f| f.name()).collect();
        Err(Error::domain(format!(
            "format {} is not available for {verb} (use {})",
            format.name(),
            names.join(", ")
        )))
    }
}

fn with_header(verb: &str, c: &Common, data: Value) -> String {
    let mut params = json!({"verb": verb, "k": c.k, "n": c.n});
    if let Some(r) = c.r {
        params["r"] = json!(r);
    }
    if verb == "verify" {
        params["rmax"] = json!(c.rmax);
    }
    if verb == "jets" {
        params["variant"] = json!(Variant::from(c.variant).to_string());
    }
    if verb == "partitions" || verb == "weyl" {
        params["filter"] = json!(c.filter);
    }
    if let Some(p) = &c.parts {
        params["parts"] = json!(p);
    }
    let doc = json!({"tool": TOOL, "version": VERSION, "params": params, "data": data});
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn selected(c: &Common) -> Result<Vec<Partition>> {
    match &c.parts {
        Some(p) => Ok(vec![Partition::new(p, c.k, c.n)?]),
        None => enumerate(c.k, c.n, c.filter.parse::<Filter>()?),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn stats_line(a: &Partition) -> String {
    format!(
        "{a} size={} d={} q={} r={} conjugate=({}) {}",
        a.size(),
        a.d(),
        a.q(),
        a.r(),
        join(a.conjugate()),
        if a.is_symmetric() {
            "symmetric"
        } else {
            "non-symmetric"
        }
    )
}

fn dispatch(cmd: &Verb, verb: &str, c: &Common) -> Result<(i32, String)> {
    match cmd {
        Verb::Partitions(_) => partitions_cmd(verb, c).map(|s| (0, s)),
        Verb::Weyl(_) => weyl_cmd(verb, c).map(|s| (0, s)),
        Verb::Bgg(_) => bgg_cmd(verb, c).map(|s| (0, s)),
        Verb::Images(_) => images_cmd(verb, c).map(|s| (0, s)),
        Verb::Complex(_) => complex_cmd(verb, c).map(|s| (0, s)),
        Verb::Jets(_) => jets_cmd(verb, c).map(|s| (0, s)),
        Verb::Verify { suite, .. } => verify_cmd(verb, suite, c),
    }
}

fn partitions_cmd(verb: &str, c: &Common) -> Result<String> {
    allowed(verb, c.format, &[Format::Text, Format::Json, Format::Csv])?;
    let parts = selected(c)?;
    Ok(match c.format {
        Format::Json => {
            let data: Vec<Value> = parts
                .iter()
                .map(|a| {
                    json!({
                        "id": a.to_string(),
                        "parts": a.parts(),
                        "size": a.size(),
                        "d": a.d(),
                        "q": a.q(),
                        "r": a.r(),
                        "conjugate": a.conjugate(),
                        "symmetric": a.is_symmetric(),
                    })
                })
                .collect();
            with_header(verb, c, json!(data))
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::internal(e.to_string());
            wtr.write_record(["partition", "size", "d", "q", "r", "conjugate", "symmetric"])
                .map_err(io)?;
            for a in &parts {
                wtr.write_record([
                    a.to_string(),
                    a.size().to_string(),
                    a.d().to_string(),
                    a.q().to_string(),
                    a.r().to_string(),
                    format!("({})", join(a.conjugate())),
                    a.is_symmetric().to_string(),
                ])
                .map_err(io)?;
            }
            String::from_utf8(
                wtr.into_inner()
                    .map_err(|e| Error::internal(e.to_string()))?,
            )
            .expect("utf-8 fields")
        }
        _ => {
            let mut out = String::new();
            for a in &parts {
                writeln!(out, "{}", stats_line(a)).expect("write to string");
            }
            if let [single] = &parts[..] {
                out.push_str(&single.young_diagram());
                writeln!(out, "transpose {}", stats_line(&single.transpose()))
                    .expect("write to string");
            }
            out
        }
    })
}

fn weyl_cmd(verb: &str, c: &Common) -> Result<String> {
    allowed(verb, c.format, &[Format::Text, Format::Json, Format::Dot])?;
    let parts = selected(c)?;
    let lam = lambda_weight(c.k, c.n)?;
    let shifted = lam.add(&rho(lam.split())?)?;
    let label = |a: &Partition| {
        let w = a.weyl_element();
        (
            w.clone(),
            a.symbolic_word(),
            w.word().map(<[usize]>::to_vec).unwrap_or_default(),
        )
    };
    Ok(match c.format {
        Format::Json => {
            let data: Vec<Value> = parts
                .iter()
                .map(|a| {
                    let (w, sym, word) = label(a);
                    json!({
                        "id": a.to_string(),
                        "word": word,
                        "symbolic": sym,
                        "one_line": w.one_line(),
                        "length": w.length(),
                    })
                })
                .collect();
            with_header(
                verb,
                c,
                json!({"lambda": lam, "lambda_plus_rho": shifted, "elements": data}),
            )
        }
        Format::Dot => {
            let elts: Vec<WeylElement> = parts.iter().map(Partition::weyl_element).collect();
            let names: std::collections::HashMap<WeylElement, String> = parts
                .iter()
                .map(|a| (a.weyl_element(), a.to_string()))
                .collect();
            bruhat_covers(&elts)?.to_dot(|w| names.get(w).cloned().unwrap_or_else(|| w.one_line()))
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "lambda = {lam}").expect("write to string");
            writeln!(out, "lambda+rho = {shifted}").expect("write to string");
            for a in &parts {
                let (w, sym, word) = label(a);
                let sym = if sym.is_empty() { "e".to_string() } else { sym };
                writeln!(out, "{a} w = {sym}").expect("write to string");
                writeln!(
                    out,
                    "  indices=[{}] length={} one-line={}",
                    join(&word),
                    w.length(),
                    w.one_line()
                )
                .expect("write to string");
            }
            out
        }
    })
}

fn bgg_cmd(verb: &str, c: &Common) -> Result<String> {
    allowed(verb, c.format, &[Format::Text, Format::Json, Format::Dot])?;
    let g = build_graph(c.k, c.n)?;
    Ok(match c.format {
        Format::Json => with_header(verb, c, g.to_json()),
        Format::Dot => g.to_dot(),
        _ => {
            let mut out = String::new();
            for (a, w) in &g.nodes {
                writeln!(out, "{a} |a|={} lambda_a={w}", a.size()).expect("write to string");
            }
            for &(i, j) in &g.arrows {
                writeln!(out, "{} -> {}", g.nodes[i].0, g.nodes[j].0).expect("write to string");
            }
            out
        }
    })
}

fn images_cmd(verb: &str, c: &Common) -> Result<String> {
    allowed(verb, c.format, &[Format::Text, Format::Json, Format::Csv])?;
    Ok(match c.format {
        Format::Csv => images_csv(c.k, c.n)?,
        Format::Json => with_header(
            verb,
            c,
            serde_json::to_value(image_rows(c.k, c.n)?).expect("rows serialize"),
        ),
        _ => {
            let mut out = String::new();
            for row in image_rows(c.k, c.n)? {
                match row.degree {
                    Some(d) => writeln!(
                        out,
                        "{} mu={} degree={d} dim={}",
                        row.partition, row.mu, row.dim
                    ),
                    None => writeln!(out, "{} 0", row.partition),
                }
                .expect("write to string");
            }
            out
        }
    })
}

fn complex_cmd(verb: &str, c: &Common) -> Result<String> {
    allowed(verb, c.format, &[Format::Text, Format::Json, Format::Dot])?;
    let cx = build_complex(c.k, c.n)?;
    Ok(match c.format {
        Format::Json => with_header(verb, c, cx.to_json()),
        Format::Dot => cx.to_dot(),
        _ => {
            let mut out = String::new();
            for node in &cx.nodes {
                writeln!(
                    out,
                    "O_{} {} mu={} degree={} q={} dim={}",
                    node.slot,
                    node.partition,
                    node.mu,
                    node.degree,
                    node.partition.q(),
                    node.dim
                )
                .expect("write to string");
            }
            for arrow in &cx.arrows {
                writeln!(
                    out,
                    "{} -> {} order={}",
                    cx.nodes[arrow.source].partition, cx.nodes[arrow.target].partition, arrow.order
                )
                .expect("write to string");
            }
            out
        }
    })
}

fn jets_cmd(verb: &str, c: &Common) -> Result<String> {
    allowed(verb, c.format, &[Format::Text, Format::Json, Format::Csv])?;
    let r = c.r.ok_or_else(|| Error::domain("jets needs --r"))?;
    let variant = Variant::from(c.variant);
    let seq = jet_sequence(c.k, c.n, r, variant)?;
    let report = rank_feasibility(&seq);
    let page = e1_page(c.k, c.n, r, variant)?;
    Ok(match c.format {
        Format::Csv => page.to_csv(),
        Format::Json => with_header(
            verb,
            c,
            json!({
                "sequence": seq.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "ranks": report,
                "e1_page": page.to_json(),
                "e1_euler": page.euler().to_string(),
            }),
        ),
        _ => {
            let mut out = String::new();
            writeln!(out, "sequence = ({})", join(&seq)).expect("write to string");
            writeln!(out, "ranks = ({})", join(&report.ranks)).expect("write to string");
            writeln!(out, "kernel0 = {}", report.kernel0).expect("write to string");
            writeln!(out, "feasible = {}", report.ok).expect("write to string");
            writeln!(out, "{}", page.label).expect("write to string");
            out.push_str(&page.to_csv());
            writeln!(out, "euler = {}", page.euler()).expect("write to string");
            out
        }
    })
}

fn verify_cmd(verb: &str, suite: &str, c: &Common) -> Result<(i32, String)> {
    allowed(verb, c.format, &[Format::Text, Format::Json])?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>()?]
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    let mut skipped: Vec<(Suite, String)> = Vec::new();
    for s in suites {
        match run_suite(s, c.k, c.n, c.rmax) {
            Ok(rep) => reports.push(rep),
            // `all` reports suites beyond the enumeration limits instead of aborting
            Err(e @ Error::Capacity { .. }) if suite == "all" => skipped.push((s, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    let code = if reports.iter().all(SuiteReport::ok) {
        0
    } else {
        1
    };
    let body = match c.format {
        Format::Json => with_header(
            verb,
            c,
            json!({
                "reports": reports.iter().map(|r| json!({
                    "suite": r.suite,
                    "ok": r.ok(),
                    "cases": r.cases,
                    "summary": r.summary,
                    "failures": r.failures,
                })).collect::<Vec<_>>(),
                "skipped": skipped.iter().map(|(s, why)| json!({"suite": s, "reason": why})).collect::<Vec<_>>(),
            }),
        ),
        _ => {
            let mut out: String = reports.iter().map(|r| r.line() + "\n").collect();
            for (s, why) in &skipped {
                writeln!(out, "skip {s} k={} n={}: {why}", c.k, c.n).expect("write to string");
            }
            out
        }
    };
    Ok((code, body))
}
