use std::fmt::Display;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use expander_lp::certify::{certify_with, CertifyOptions};
use expander_lp::families::FamilySpec;
use expander_lp::graph::{edge_expansion, parse_graph6, write_graph6, EXPANSION_CAP};
use expander_lp::lpbound::{
    certificate_from_spectrum_with_tol, default_degree, duality_gap, lp_bound_dual,
    lp_bound_primal, BoundCertificate, Conditions, DEFAULT_SLACK_TOL,
};
use expander_lp::scalar::{parse_decimal, Scalar};
use expander_lp::simplex::{LpSolution, LpStatus};
use expander_lp::spectral::{self, Spectrum, SPECTRUM_CAP};
use expander_lp::{Error, Graph};
use num_rational::BigRational;
use serde_json::{json, Value};

const EXIT_OTHER: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SIZE: u8 = 3;
const EXIT_INVALID_CERTIFICATE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "expander-lp", version, about = "LP bounds and extremal-expander certification for regular graphs")]
struct Cli {
    /// Output format; defaults to json for certify and text elsewhere.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Eigenvalue clustering tolerance (default 1e-8 * max(1, k)).
    #[arg(long, global = true)]
    tol_cluster: Option<f64>,
    /// Absolute slack for certificate conditions at irrational eigenvalues.
    #[arg(long, global = true, default_value_t = DEFAULT_SLACK_TOL)]
    tol_slack: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural and spectral summary of a graph6 graph.
    Analyze {
        /// graph6 file, or "-" for stdin.
        input: PathBuf,
    },
    /// Upper bound on the order of a k-regular graph with the given nontrivial eigenvalues.
    Bound {
        #[arg(long)]
        k: u32,
        /// Comma-separated distinct nontrivial eigenvalues; decimals, or sqrt(q) and -sqrt(q).
        #[arg(long, allow_hyphen_values = true)]
        eigenvalues: String,
        /// LP degree u (default 2d - 1).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Extremal-expander certification report for a graph6 graph.
    Certify {
        /// graph6 file, or "-" for stdin.
        input: PathBuf,
    },
    /// Print a family member as graph6, e.g. "cycle:5", "pg2:3", "kneser:7,3".
    Generate { spec: String },
    /// Certify every generated row of the extremal-expander table.
    Table2 {
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Certificate,
    Lp,
    Both,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Graph6 { .. }
            | Error::UnsupportedFamily(_)
            | Error::InvalidEigenvalues(_)
            | Error::EmptySpectrum
            | Error::DegreeTooSmall(_)
            | Error::InvalidArgument(_) => EXIT_PARSE,
            Error::TooLarge { .. } | Error::DegreeTooLarge(_) => EXIT_SIZE,
            _ => EXIT_OTHER,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_OTHER, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let text = |default: Format| cli.format.unwrap_or(default) == Format::Text;
    match &cli.command {
        Command::Analyze { input } => analyze(&read_graph(input)?, cli, text(Format::Text)),
        Command::Bound { k, eigenvalues, degree, method } => {
            bound(*k, eigenvalues, *degree, *method, cli, text(Format::Text))
        }
        Command::Certify { input } => {
            let g = read_graph(input)?;
            if g.vertex_count() > SPECTRUM_CAP {
                return Err(Error::TooLarge { v: g.vertex_count(), cap: SPECTRUM_CAP }.into());
            }
            let opts = CertifyOptions { cluster_tol: cli.tol_cluster, slack_tol: cli.tol_slack };
            let report = certify_with(&g, &opts);
            if text(Format::Json) {
                let v = serde_json::to_value(&report).expect("report serializes");
                print_text(&v);
            } else {
                println!("{}", report.to_json());
            }
            Ok(())
        }
        Command::Generate { spec } => {
            let spec: FamilySpec = spec.parse()?;
            let mut code = write_graph6(&spec.build()?)?;
            code.push(b'\n');
            io::stdout().write_all(&code)?;
            Ok(())
        }
        Command::Table2 { json } => {
            let as_text = !*json && text(Format::Text);
            table2(cli, as_text)
        }
    }
}

fn read_graph(input: &PathBuf) -> Result<Graph, Failure> {
    let bytes = if input.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(input)
            .map_err(|e| fail(EXIT_OTHER, format!("cannot read {}: {e}", input.display())))?
    };
    Ok(parse_graph6(&bytes)?)
}

fn emit(value: &Value, text: bool) {
    if text {
        print_text(value);
    } else {
        println!("{}", serde_json::to_string_pretty(value).expect("json value serializes"));
    }
}

/// One `key: value` line per top-level field, nested values inline as JSON.
fn print_text(value: &Value) {
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                match v {
                    Value::String(s) => println!("{key}: {s}"),
                    Value::Null => println!("{key}: -"),
                    other => println!("{key}: {other}"),
                }
            }
        }
        other => println!("{other}"),
    }
}

fn spectrum_json(spec: &Spectrum) -> Value {
    spec.entries.iter().map(|e| json!([e.value, e.multiplicity])).collect()
}

fn analyze(g: &Graph, cli: &Cli, text: bool) -> CmdResult {
    let v = g.vertex_count();
    if v > SPECTRUM_CAP {
        return Err(Error::TooLarge { v, cap: SPECTRUM_CAP }.into());
    }
    let k = g.regularity();
    let connected = g.is_connected();
    let spec = spectral::spectrum(g, cli.tol_cluster)?;
    let regular_connected = k.is_some() && connected;
    let girth_traces = if regular_connected && g.girth().is_some() {
        Some(spectral::girth_via_traces(g)?)
    } else {
        None
    };
    let gap = match k {
        Some(_) if v > 1 => Some(spectral::spectral_gap_with(g, &spec)?),
        _ => None,
    };
    let distance_regular = if regular_connected {
        g.is_distance_regular()?.map(|a| json!({ "b": a.b, "c": a.c }))
    } else {
        None
    };
    let expansion = if (2..=EXPANSION_CAP).contains(&v) {
        let r = edge_expansion(g)?;
        Some(json!({
            "h": r.h.to_string(),
            "h_float": *r.h.numer() as f64 / *r.h.denom() as f64,
            "witness": r.witness,
        }))
    } else {
        None
    };
    let report = json!({
        "v": v,
        "edges": g.edge_count(),
        "regular": k,
        "connected": connected,
        "girth_bfs": g.girth(),
        "girth_traces": girth_traces,
        "diameter": if connected { Some(g.diameter()?) } else { None },
        "bipartite": g.is_bipartite(),
        "spectrum": spectrum_json(&spec),
        "spectral_gap": gap,
        "distance_regular": distance_regular,
        "edge_expansion": expansion,
    });
    emit(&report, text);
    Ok(())
}

enum Eigenvalues {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

fn parse_eigenvalue_token(token: &str) -> Option<f64> {
    let t = token.trim();
    let (sign, rest) = match t.strip_prefix('-') {
        Some(r) => (-1.0, r.trim()),
        None => (1.0, t.strip_prefix('+').unwrap_or(t).trim()),
    };
    if let Some(arg) = rest.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        let q: f64 = arg.trim().parse().ok()?;
        return (q >= 0.0).then(|| sign * q.sqrt());
    }
    let x: f64 = rest.parse().ok()?;
    x.is_finite().then_some(sign * x)
}

fn parse_eigenvalues(csv: &str) -> Result<Eigenvalues, Failure> {
    let tokens: Vec<&str> = csv.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    if tokens.is_empty() {
        return Err(Error::EmptySpectrum.into());
    }
    if let Some(mut exact) = tokens.iter().map(|t| parse_decimal(t)).collect::<Option<Vec<_>>>() {
        exact.sort_by(|a, b| b.cmp(a));
        if exact.windows(2).any(|w| w[0] == w[1]) {
            return Err(fail(EXIT_PARSE, "eigenvalues must be distinct"));
        }
        return Ok(Eigenvalues::Exact(exact));
    }
    let mut floats = Vec::with_capacity(tokens.len());
    for t in &tokens {
        floats.push(
            parse_eigenvalue_token(t)
                .ok_or_else(|| fail(EXIT_PARSE, format!("cannot parse eigenvalue {t:?}")))?,
        );
    }
    floats.sort_by(|a, b| b.total_cmp(a));
    if floats.windows(2).any(|w| w[0] == w[1]) {
        return Err(fail(EXIT_PARSE, "eigenvalues must be distinct"));
    }
    Ok(Eigenvalues::Float(floats))
}

fn conditions_json(c: &Conditions) -> Value {
    serde_json::to_value(c).expect("conditions serialize")
}

fn exact_string<T: Scalar + Display>(x: &T) -> Option<String> {
    T::EXACT.then(|| x.to_string())
}

fn certificate_json<T: Scalar + Display>(cert: &BoundCertificate<T>) -> Value {
    json!({
        "valid": cert.is_valid(),
        "f_coeffs": cert.coeffs_f64(),
        "f_coeffs_exact": T::EXACT.then(|| cert.f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        "f_at_k": cert.f_at_k.to_f64(),
        "f0": cert.f0.to_f64(),
        "bound": cert.bound.as_ref().map(Scalar::to_f64),
        "bound_exact": cert.bound.as_ref().and_then(exact_string),
        "conditions": conditions_json(&cert.conditions),
    })
}

fn lp_json<T: Scalar + Display>(sol: &LpSolution<T>, finite_when: LpStatus) -> Value {
    let optimal = sol.status == LpStatus::Optimal;
    json!({
        "status": sol.status,
        "objective": if optimal { json!(sol.objective.to_f64()) } else if sol.status == finite_when { Value::Null } else { json!("infinity") },
        "objective_exact": if optimal { exact_string(&sol.objective) } else { None },
        "variables": if optimal { Some(sol.variables.iter().map(Scalar::to_f64).collect::<Vec<_>>()) } else { None },
    })
}

fn bound_with<T: Scalar + Display>(
    k: u32,
    taus: &[T],
    degree: Option<usize>,
    method: Method,
    slack_tol: f64,
) -> Result<(Value, bool), Failure> {
    let u = degree.unwrap_or_else(|| default_degree(taus.len()));
    let mut out = serde_json::Map::new();
    out.insert("k".into(), json!(k));
    out.insert("eigenvalues".into(), json!(taus.iter().map(Scalar::to_f64).collect::<Vec<_>>()));
    out.insert("exact".into(), json!(T::EXACT));
    let mut valid = true;
    if method != Method::Lp {
        let cert = certificate_from_spectrum_with_tol(k, taus, slack_tol)?;
        valid = cert.is_valid();
        out.insert("certificate".into(), certificate_json(&cert));
    }
    if method != Method::Certificate {
        let dual = lp_bound_dual(k, taus, u)?;
        let primal = lp_bound_primal(k, taus, u)?;
        out.insert("degree".into(), json!(u));
        // An infeasible dual means no polynomial of this degree certifies
        // any bound: the primal is unbounded and the bound is infinite.
        out.insert("lp_dual".into(), lp_json(&dual, LpStatus::Unbounded));
        out.insert("lp_primal".into(), lp_json(&primal, LpStatus::Infeasible));
        let bound = match dual.status {
            LpStatus::Optimal => json!(dual.objective.to_f64()),
            _ => json!("infinity"),
        };
        out.insert("lp_bound".into(), bound);
        out.insert(
            "duality_gap".into(),
            json!(duality_gap(&primal, &dual).map(|g| g.to_f64())),
        );
    }
    Ok((Value::Object(out), valid))
}

fn bound(
    k: u32,
    csv: &str,
    degree: Option<usize>,
    method: Method,
    cli: &Cli,
    text: bool,
) -> CmdResult {
    if k < 2 {
        return Err(Error::DegreeTooSmall(k).into());
    }
    let (report, valid) = match parse_eigenvalues(csv)? {
        Eigenvalues::Exact(taus) => bound_with(k, &taus, degree, method, cli.tol_slack)?,
        Eigenvalues::Float(taus) => bound_with(k, &taus, degree, method, cli.tol_slack)?,
    };
    emit(&report, text);
    if method == Method::Certificate && !valid {
        return Err(fail(EXIT_INVALID_CERTIFICATE, "certificate conditions not met"));
    }
    Ok(())
}

fn table2(cli: &Cli, text: bool) -> CmdResult {
    let opts = CertifyOptions { cluster_tol: cli.tol_cluster, slack_tol: cli.tol_slack };
    let mut rows = Vec::new();
    for spec in FamilySpec::table_rows() {
        let g = spec.build()?;
        let report = certify_with(&g, &opts);
        let lp = report.lp.as_ref();
        rows.push(json!({
            "name": spec.to_string(),
            "v": report.v,
            "k": report.k,
            "g": report.girth,
            "spectrum": report.spectrum,
            "lp_bound": lp.and_then(|l| l.bound),
            "tight": lp.is_some_and(|l| l.tight),
            "verdict": report.verdict,
        }));
    }
    if !text {
        println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
        return Ok(());
    }
    println!("{:<22} {:>4} {:>3} {:>3} {:>9} {:>6}  spectrum", "name", "v", "k", "g", "bound", "tight");
    for r in &rows {
        let spectrum: Vec<String> = r["spectrum"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|e| format!("{}^{}", fmt_eigenvalue(e[0].as_f64().unwrap_or(f64::NAN)), e[1]))
            .collect();
        let bound = r["lp_bound"].as_f64().map_or("-".to_string(), |b| format!("{b:.3}"));
        println!(
            "{:<22} {:>4} {:>3} {:>3} {:>9} {:>6}  {}",
            r["name"].as_str().unwrap_or(""),
            r["v"].to_string(),
            r["k"].to_string(),
            r["g"].to_string(),
            bound,
            if r["tight"].as_bool() == Some(true) { "yes" } else { "no" },
            spectrum.join(" "),
        );
    }
    Ok(())
}

fn fmt_eigenvalue(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.4}")
    }
}
