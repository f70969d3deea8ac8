//! `webbasis`: listings, exports and theorem checks for the web and tableau
//! bases of the (n,n) Specht module.
//!
//! Exit codes: 0 success, 1 a theorem check failed, 2 usage error,
//! 3 internal defect.

mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use webbasis::suites::{self, Context, SUITES};
use webbasis::transition::{conjecture_report, TransitionMatrix};
use webbasis::webs::{tableau_to_web, web_to_tableau};
use webbasis::{Error, Int, Tableau, Web, WebBasis};

/// Largest default `n` for commands that build the transition matrix.
const MATRIX_MAX_N: usize = 8;
/// Largest default `n` for enumeration and graph commands.
const ENUM_MAX_N: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "webbasis",
    version,
    about = "Web and tableau bases of the (n,n) Specht module"
)]
struct Cli {
    /// Half the number of boundary points (tableau shape (n,n)).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,

    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Directory for cached transition matrices.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Comma-separated check suites to run (default: all).
    #[arg(long, global = true, value_delimiter = ',')]
    checks: Option<Vec<String>>,

    /// Lift the default size caps.
    #[arg(long, global = true)]
    max_n_override: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List tableaux and their webs side by side.
    Enum,
    /// Export the tableau or web graph.
    Graph {
        #[arg(long, value_enum, default_value_t = GraphKind::Web)]
        graph: GraphKind,
    },
    /// Round-trip a tableau ("1 3 | 2 4") or a web ("(1,4)(2,3)").
    Bijection { object: String },
    /// Export the transition matrix.
    Matrix,
    /// Run the theorem check suites.
    Check,
    /// Report on nonnegativity and support of the transition matrix.
    Conjecture,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Dot,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphKind {
    Web,
    Tableau,
}

enum Failure {
    Usage(String),
    Defect(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Defect(_) => Failure::Defect(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Outcome {
    text: String,
    theorem_failed: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.theorem_failed { 1 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Defect(msg)) => {
            eprintln!("internal defect: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let (default, allowed): (Format, &[Format]) = match cli.command {
        Command::Enum | Command::Bijection { .. } => (Format::Text, &[Format::Text, Format::Json]),
        Command::Graph { .. } => (Format::Dot, &[Format::Dot, Format::Text, Format::Json]),
        Command::Matrix => (Format::Csv, &[Format::Csv, Format::Text, Format::Json]),
        Command::Check | Command::Conjecture => (Format::Json, &[Format::Json, Format::Text]),
    };
    let format = cli.format.unwrap_or(default);
    if !allowed.contains(&format) {
        return Err(Failure::Usage(
            format!("--format {format:?} is not available for this command").to_lowercase(),
        ));
    }
    if cli.checks.is_some() && !matches!(cli.command, Command::Check) {
        return Err(Failure::Usage(
            "--checks applies only to the check command".into(),
        ));
    }
    let uses_matrix = matches!(
        cli.command,
        Command::Matrix | Command::Check | Command::Conjecture
    );
    if cli.cache_dir.is_some() && !uses_matrix {
        return Err(Failure::Usage(
            "--cache-dir applies only to matrix, check and conjecture".into(),
        ));
    }

    let n = match (&cli.command, cli.n) {
        (Command::Bijection { object }, given) => {
            let inferred = parse_object(object)?.n();
            if given.is_some_and(|g| g as usize != inferred) {
                return Err(Failure::Usage(format!(
                    "object has n = {inferred}, --n says {}",
                    given.unwrap()
                )));
            }
            inferred
        }
        (_, Some(n)) => n as usize,
        (_, None) => return Err(Failure::Usage("--n is required".into())),
    };
    let cap = if uses_matrix {
        MATRIX_MAX_N
    } else {
        ENUM_MAX_N
    };
    if n > cap && !cli.max_n_override {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the default cap {cap}; pass --max-n-override"
        )));
    }

    let text = match &cli.command {
        Command::Enum => enumerate(n, format)?,
        Command::Graph { graph } => graph_export(n, *graph, format)?,
        Command::Bijection { object } => bijection(object, format)?,
        Command::Matrix => {
            let ctx = context(cli, n)?;
            matrix_export(ctx.matrix()?, format)
        }
        Command::Check => return check(cli, n, format),
        Command::Conjecture => conjecture(cli, n, format)?,
    };
    Ok(Outcome {
        text,
        theorem_failed: false,
    })
}

/// A check context whose matrix comes from the cache when one is configured.
fn context(cli: &Cli, n: usize) -> Result<Context, Failure> {
    let ctx = Context::new(n)?;
    let Some(dir) = &cli.cache_dir else {
        return Ok(ctx);
    };
    let basis = &ctx.bases()?.webs;
    if let Some(m) = cache::load(dir, basis) {
        return Ok(ctx.with_matrix(m));
    }
    let m = ctx.matrix()?.clone();
    cache::store(dir, basis, &m)
        .map_err(|e| Failure::Defect(format!("writing cache in {}: {e}", dir.display())))?;
    Ok(ctx)
}

enum Object {
    Tableau(Tableau),
    Web(Web),
}

impl Object {
    fn n(&self) -> usize {
        match self {
            Object::Tableau(t) => t.n(),
            Object::Web(w) => w.n(),
        }
    }
}

fn parse_object(text: &str) -> Result<Object, Failure> {
    let text = text.trim();
    if text.starts_with('(') {
        Ok(Object::Web(text.parse()?))
    } else {
        Ok(Object::Tableau(text.parse()?))
    }
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n"
}

fn enumerate(n: usize, format: Format) -> Result<String, Failure> {
    let basis = WebBasis::new(n)?;
    let rows: Vec<(usize, &Web, Tableau)> = basis
        .webs()
        .iter()
        .enumerate()
        .map(|(k, w)| (k, w, web_to_tableau(w)))
        .collect();
    Ok(match format {
        Format::Json => pretty(&json!({
            "n": n,
            "count": rows.len(),
            "pairs": rows.iter().map(|(k, w, t)| json!({
                "index": k,
                "tableau": t.to_string(),
                "web": w.to_string(),
                "nesting": w.nesting_number(),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let width = rows
                .iter()
                .map(|(_, _, t)| t.to_string().len())
                .max()
                .unwrap_or(0);
            let mut out = format!(
                "# n = {n}: {} tableau/web pairs under psi, canonical web order\n",
                rows.len()
            );
            for (k, w, t) in &rows {
                let _ = writeln!(
                    out,
                    "{k:>4}  {:<width$}  {w}  nesting {}",
                    t.to_string(),
                    w.nesting_number()
                );
            }
            out
        }
    })
}

fn graph_export(n: usize, kind: GraphKind, format: Format) -> Result<String, Failure> {
    let bases = webbasis::Bases::new(n)?;
    let (g, name) = match kind {
        GraphKind::Web => (&bases.web_graph, format!("web_graph_n{n}")),
        GraphKind::Tableau => (&bases.tableau_graph, format!("tableau_graph_n{n}")),
    };
    Ok(match format {
        Format::Dot => g.to_dot(&name),
        Format::Json => pretty(&json!({
            "name": name,
            "vertices": g.names(),
            "edges": g.edges().iter().map(|e| json!({
                "src": g.name(e.src),
                "dst": g.name(e.dst),
                "label": e.label,
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = format!(
                "# {name}: {} vertices, {} edges\n",
                g.vertex_count(),
                g.edges().len()
            );
            for e in g.edges() {
                let _ = writeln!(out, "{} --s{}--> {}", g.name(e.src), e.label, g.name(e.dst));
            }
            out
        }
    })
}

fn bijection(text: &str, format: Format) -> Result<String, Failure> {
    let (tableau, web) = match parse_object(text)? {
        Object::Tableau(t) => {
            let w = tableau_to_web(&t);
            (t, w)
        }
        Object::Web(w) => (web_to_tableau(&w), w),
    };
    let (back_t, back_w) = (web_to_tableau(&web), tableau_to_web(&tableau));
    if back_t != tableau || back_w != web {
        return Err(Failure::Defect(format!(
            "round trip failed for {tableau} / {web}"
        )));
    }
    Ok(match format {
        Format::Json => pretty(&json!({
            "tableau": tableau.to_string(),
            "web": web.to_string(),
            "round_trip": true,
        })),
        _ => format!("tableau {tableau}\nweb     {web}\nround trip ok\n"),
    })
}

fn entry_json(v: &Int) -> Value {
    i64::try_from(v)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(v.to_string()))
}

fn matrix_export(m: &TransitionMatrix<Int>, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "n": m.n,
            "labels": m.labels,
            "entries": (0..m.size())
                .map(|r| m.entries.row(r).iter().map(entry_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let width = m
                .entries
                .entries()
                .map(|(_, _, v)| v.to_string().len())
                .max()
                .unwrap_or(1);
            let mut out = String::new();
            for r in 0..m.size() {
                let row: Vec<String> = m
                    .entries
                    .row(r)
                    .iter()
                    .map(|v| format!("{v:>width$}"))
                    .collect();
                let _ = writeln!(out, "{}  {}", row.join(" "), m.labels[r]);
            }
            out
        }
        _ => m.to_csv(),
    }
}

fn check(cli: &Cli, n: usize, format: Format) -> Result<Outcome, Failure> {
    let selected: Vec<&suites::Suite> = match &cli.checks {
        None => SUITES.iter().collect(),
        Some(names) => names
            .iter()
            .map(|name| {
                suites::suite(name.trim()).ok_or_else(|| {
                    let known: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
                    Failure::Usage(format!(
                        "unknown check {name:?}; known: {}",
                        known.join(", ")
                    ))
                })
            })
            .collect::<Result<_, _>>()?,
    };
    let ctx = context(cli, n)?;
    let mut reports = Vec::new();
    for s in selected {
        reports.push(suites::run_suite(s, &ctx, cli.max_n_override)?);
    }
    let pass = reports.iter().all(|r| r.pass());
    let text = match format {
        Format::Json => pretty(&json!({ "n": n, "pass": pass, "suites": reports })),
        _ => {
            let mut out = String::new();
            for r in &reports {
                let status = match (r.pass(), r.stat("skipped")) {
                    (true, Some(_)) => "SKIP",
                    (true, None) => "PASS",
                    (false, _) => "FAIL",
                };
                let stats: Vec<String> =
                    r.stats().iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "{status} {:<18} {}", r.name(), stats.join(" "));
                for w in r.witnesses() {
                    let _ = writeln!(
                        out,
                        "     {} [{}] {}",
                        w.kind,
                        w.subject.join(" "),
                        w.detail
                    );
                }
            }
            let _ = writeln!(
                out,
                "{}",
                if pass {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            );
            out
        }
    };
    Ok(Outcome {
        text,
        theorem_failed: !pass,
    })
}

fn conjecture(cli: &Cli, n: usize, format: Format) -> Result<String, Failure> {
    let ctx = context(cli, n)?;
    let report = conjecture_report(ctx.matrix()?, ctx.poset()?);
    let nonnegative = report.stat("negative_entries") == Some(0);
    let support = report.stat("support_mismatches") == Some(0);
    Ok(match format {
        Format::Json => pretty(&json!({
            "n": n,
            "nonnegativity_holds": nonnegative,
            "support_equals_order": support,
            "report": report,
        })),
        _ => {
            let mut out = format!(
                "n = {n}\nnonnegativity holds: {nonnegative}\nsupport equals the order: {support}\n"
            );
            for w in report.witnesses() {
                let _ = writeln!(
                    out,
                    "finding {} [{}] {}",
                    w.kind,
                    w.subject.join(" "),
                    w.detail
                );
            }
            out
        }
    })
}
