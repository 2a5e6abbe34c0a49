//! The `ksrd` command line.
//!
//! Exit codes: 0 success or proper, 1 negative verdict, 2 usage or format
//! error, 3 resource budget exceeded. Results go to stdout only on success
//! paths; errors go to stderr.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ksrd_core::constructions::{construct, formula};
use ksrd_core::discharging::{check_discharge, discharge_cubic_2srd};
use ksrd_core::solver::{
    gamma_ksrd_bruteforce, gamma_ksrd_exact, related_numbers, KDomConvention, SolveOptions, DEFAULT_NODE_BUDGET,
    DEFAULT_SPACE_BUDGET,
};
use ksrd_core::{
    is_proper, make_family, min_capacity_slack, ConstructionError, DischargeError, FamilyError, FamilySpec, Graph,
    Labeling, LabelingError, Limits, SolveError, VerifyError,
};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::format::{parse_graph, parse_labeling_any, write_graph, write_labeling, FormatError};
use crate::random::{random_connected_graph, rng};
use crate::repro::{run_sweep, write_csv, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Edge density of `random:<n>` graphs when none is given.
const DEFAULT_DENSITY: f64 = 0.3;

#[derive(Debug, Parser)]
#[command(name = "ksrd", version, about = "k-strong Roman domination: verify, solve, construct, certify")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Seed for `random:<n>[,density]` graph sources.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    Standard,
    Verbatim,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Edge-list file, family spec (e.g. `dn:7`, `knp:5,4`) or `random:<n>[,density]`.
    #[arg(long)]
    graph: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a family graph.
    Family {
        /// Family spec, e.g. `grid2:9`.
        #[arg(long, alias = "graph")]
        family: String,
    },
    /// Decide whether a labeling is a proper k-SRD function.
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        /// Labeling file, inline labels (`"0 2 0"`) or JSON `{"k":..,"labels":[..]}`.
        #[arg(long)]
        labels: String,
        #[arg(long)]
        k: Option<usize>,
        /// Enumeration budget (DFS nodes).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compute γ_{k-SRD} exactly.
    Gamma {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: usize,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        oracle: bool,
        /// Branch-and-bound node budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit the explicit construction for a family member.
    Construct {
        #[arg(long, alias = "graph")]
        family: String,
        #[arg(long)]
        k: usize,
        /// Also write the labeling (text format) to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form value of γ_{k-SRD} for a family member.
    Formula {
        #[arg(long, alias = "graph")]
        family: String,
        #[arg(long)]
        k: usize,
    },
    /// γ, γ_k, γ_{kR} and the inequalities relating them to γ_{k-SRD}.
    Relations {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Convention::Standard)]
        convention: Convention,
        /// Exhaustive-search space budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the cubic discharging rules on a proper 2-SRD labeling.
    Discharge {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        labels: String,
    },
    /// Run the full reproduction sweep and write a CSV report.
    Repro {
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the brute-force comparison column.
        #[arg(long)]
        no_bruteforce: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Discharge(#[from] DischargeError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn verify_exit(e: &VerifyError) -> i32 {
    match e {
        VerifyError::BudgetExceeded { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify(e) => verify_exit(e),
            CliError::Solve(SolveError::BudgetExceeded { .. } | SolveError::TooLarge(_)) => EXIT_RESOURCE,
            CliError::Solve(SolveError::Verify(e)) => verify_exit(e),
            CliError::Construction(ConstructionError::Verify(e)) => verify_exit(e),
            CliError::Construction(ConstructionError::SelfCheckFailed { .. }) => EXIT_NEGATIVE,
            CliError::Discharge(DischargeError::Verify(e)) => verify_exit(e),
            CliError::Discharge(DischargeError::Improper | DischargeError::NoRule(_)) => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        }
    }

    /// Extra stderr context; the best incumbent for an exhausted search.
    fn note(&self) -> Option<String> {
        match self {
            CliError::Solve(SolveError::BudgetExceeded { best, .. }) => Some(format!(
                "best labeling found (weight {}, not proven optimal): {}",
                best.weight(),
                write_labeling(best).trim_end()
            )),
            _ => None,
        }
    }
}

/// A command's result: a JSON object and the exit code it implies.
struct Outcome {
    value: Value,
    exit: i32,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, exit: EXIT_OK }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// A resolved `--graph` argument, with the family spec when it was one.
struct Source {
    graph: Graph,
    spec: Option<FamilySpec>,
}

fn load_graph(src: &str, seed: u64) -> Result<Source, CliError> {
    let path = Path::new(src);
    if path.is_file() {
        return Ok(Source { graph: parse_graph(&read_file(path)?)?, spec: None });
    }
    if let Some(params) = src.strip_prefix("random:") {
        let (n, density) = match params.split_once(',') {
            Some((n, d)) => (n, d.trim().parse::<f64>().ok().filter(|d| (0.0..=1.0).contains(d))),
            None => (params, Some(DEFAULT_DENSITY)),
        };
        let (Ok(n), Some(density)) = (n.trim().parse::<usize>(), density) else {
            return Err(CliError::Usage(format!("bad random graph spec {src:?}; expected random:<n>[,density]")));
        };
        return Ok(Source { graph: random_connected_graph(&mut rng(seed), n, density), spec: None });
    }
    if src.contains(':') {
        let spec: FamilySpec = src.parse()?;
        return Ok(Source { graph: make_family(&spec)?, spec: Some(spec) });
    }
    Err(CliError::Usage(format!("{src:?} is neither a file nor a family spec")))
}

fn load_labels(src: &str, graph: &Graph, k: Option<usize>) -> Result<Labeling, CliError> {
    let path = Path::new(src);
    let text = if path.is_file() { read_file(path)? } else { src.to_string() };
    Ok(parse_labeling_any(&text, graph, k)?)
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn cmd_family(spec: &str) -> Result<Outcome, CliError> {
    let spec: FamilySpec = spec.parse()?;
    let g = make_family(&spec)?;
    Ok(Outcome::ok(json!({
        "family": spec.to_string(),
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "cubic": g.is_cubic(),
        "max_degree": g.max_degree(),
        "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        "names": g.names(),
    })))
}

fn cmd_verify(src: &Source, labels: &str, k: Option<usize>, budget: Option<u64>) -> Result<Outcome, CliError> {
    let g = &src.graph;
    let f = load_labels(labels, g, k)?;
    let limits = Limits { budget: budget.unwrap_or(Limits::default().budget) };
    let start = Instant::now();
    let verdict = is_proper(g, &f, limits)?;
    let slack = min_capacity_slack(g, &f, limits)?;
    let mut out = json!({ "proper": verdict.proper, "k": f.k(), "weight": f.weight() });
    if let Some(w) = &verdict.witness {
        out["witness"] = to_value(&w.vertices());
        out["deficiency_set"] = to_value(&verdict.deficiency_set);
    }
    // null encodes +inf (no zero vertex)
    out["slack"] = to_value(&slack);
    out["stats"] = json!({ "subsets_checked": verdict.subsets_checked, "ms": millis(start) });
    Ok(Outcome { value: out, exit: if verdict.proper { EXIT_OK } else { EXIT_NEGATIVE } })
}

fn cmd_gamma(src: &Source, k: usize, oracle: bool, budget: Option<u64>) -> Result<Outcome, CliError> {
    let g = &src.graph;
    let seed = src.spec.as_ref().and_then(|s| construct(s, k).ok());
    let options = SolveOptions { node_budget: budget.unwrap_or(DEFAULT_NODE_BUDGET), seed, ..Default::default() };
    let start = Instant::now();
    let r = gamma_ksrd_exact(g, k, &options)?;
    let elapsed = millis(start);
    let mut out = json!({
        "gamma": r.gamma,
        "labels": r.optimal.labels(),
        "nodes": r.stats.nodes,
    });
    let mut exit = EXIT_OK;
    if oracle {
        let (brute, _) = gamma_ksrd_bruteforce(g, k, DEFAULT_SPACE_BUDGET)?;
        out["oracle_gamma"] = json!(brute);
        out["agrees"] = json!(brute == r.gamma);
        if brute != r.gamma {
            exit = EXIT_NEGATIVE;
        }
    }
    out["stats"] = json!({
        "ms": elapsed,
        "weight_prunes": r.stats.weight_prunes,
        "defense_prunes": r.stats.defense_prunes,
        "leaves_checked": r.stats.leaves_checked,
    });
    Ok(Outcome { value: out, exit })
}

fn cmd_construct(spec: &str, k: usize, out_path: Option<&Path>) -> Result<Outcome, CliError> {
    let spec: FamilySpec = spec.parse()?;
    let f = construct(&spec, k)?;
    let r = formula(&spec, k)?;
    if let Some(path) = out_path {
        std::fs::write(path, write_labeling(&f)).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    }
    Ok(Outcome::ok(json!({
        "family": spec.to_string(),
        "k": k,
        "weight": f.weight(),
        "kind": r.kind.as_str(),
        "source": r.source,
        "verified": true,
        "labels": f.labels(),
    })))
}

fn cmd_formula(spec: &str, k: usize) -> Result<Outcome, CliError> {
    let r = formula(&spec.parse()?, k)?;
    Ok(Outcome::ok(json!({ "value": r.value, "kind": r.kind.as_str(), "source": r.source })))
}

fn cmd_relations(src: &Source, k: usize, convention: Convention, budget: Option<u64>) -> Result<Outcome, CliError> {
    let g = &src.graph;
    let convention = match convention {
        Convention::Standard => KDomConvention::Standard,
        Convention::Verbatim => KDomConvention::Verbatim,
    };
    let r = related_numbers(g, k, convention, budget.unwrap_or(DEFAULT_SPACE_BUDGET))?;
    let srd = gamma_ksrd_exact(g, k, &SolveOptions::default())?.gamma;
    let n = g.vertex_count() as u64;
    let k64 = k as u64;
    let mut checks = vec![
        ("gamma_ksrd <= gamma_kr", Some(srd <= r.gamma_kr)),
        ("gamma_kr <= 2 * gamma_k", r.gamma_k_dom.map(|gk| r.gamma_kr <= 2 * gk)),
        ("gamma_ksrd <= (k + 1) * gamma", Some(srd <= (k64 + 1) * r.gamma_dom)),
        ("gamma_ksrd <= n", Some(srd <= n)),
    ];
    if k64 < n {
        checks.push(("gamma_ksrd >= k + 1", Some(srd > k64)));
    }
    let failed = checks.iter().any(|(_, h)| *h == Some(false));
    let checks: Vec<Value> =
        checks.into_iter().map(|(rel, holds)| json!({ "relation": rel, "holds": holds })).collect();
    Ok(Outcome {
        value: json!({
            "n": n,
            "k": k,
            "gamma_ksrd": srd,
            "gamma_dom": r.gamma_dom,
            "gamma_k_dom": r.gamma_k_dom,
            "gamma_kr": r.gamma_kr,
            "checks": checks,
        }),
        exit: if failed { EXIT_NEGATIVE } else { EXIT_OK },
    })
}

fn cmd_discharge(src: &Source, labels: &str) -> Result<Outcome, CliError> {
    let g = &src.graph;
    let f = load_labels(labels, g, Some(2))?;
    let state = discharge_cubic_2srd(g, &f)?;
    let report = check_discharge(&state);
    let transfers: Vec<Value> = state
        .transfers
        .iter()
        .map(|t| json!({ "from": t.from, "to": t.to, "amount_thirds": t.amount, "rule": t.rule.as_str() }))
        .collect();
    Ok(Outcome {
        value: json!({
            "ok": report.ok,
            "min_charge_thirds": report.min_charge,
            "conserved": report.conserved,
            "total_thirds": state.total(),
            "weight": state.weight,
            "charges_thirds": state.charges,
            "transfers": transfers,
            "violations": report.details,
        }),
        exit: if report.ok { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn cmd_repro(out_path: Option<&Path>, bruteforce: bool, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let rows = run_sweep(bruteforce);
    match out_path {
        Some(path) => {
            let file =
                std::fs::File::create(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
            write_csv(&rows, file)?;
        }
        None => write_csv(&rows, &mut *stdout)?,
    }
    let failures: Vec<Value> = rows
        .iter()
        .filter(|r| r.status != Status::Ok)
        .map(|r| json!({ "family": r.family, "params": r.params, "k": r.k, "detail": r.detail }))
        .collect();
    let value = json!({
        "rows": rows.len(),
        "bruteforced": rows.iter().filter(|r| r.bruteforce_value.is_some()).count(),
        "failures": failures,
        "stats": { "ms": millis(start) },
    });
    Ok(Outcome { exit: if failures.is_empty() { EXIT_OK } else { EXIT_NEGATIVE }, value })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render(value: &Value, format: OutputFormat, out: &mut dyn Write) -> Result<(), CliError> {
    let io_err = |source| CliError::Io { path: PathBuf::from("<stdout>"), source };
    match format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(value)?).map_err(io_err),
        OutputFormat::Text => {
            let Value::Object(map) = value else { return writeln!(out, "{}", scalar(value)).map_err(io_err) };
            for (key, v) in map {
                writeln!(out, "{key}: {}", scalar(v)).map_err(io_err)?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let Value::Object(map) = value else { return writeln!(out, "{}", scalar(value)).map_err(io_err) };
            let mut w = csv::Writer::from_writer(out);
            w.write_record(map.keys())?;
            w.write_record(map.values().map(scalar))?;
            w.flush().map_err(io_err)
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let seed = cli.seed;
    match cli.command {
        Command::Family { family } => {
            if cli.format == OutputFormat::Text {
                let g = make_family(&family.parse()?)?;
                write!(stdout, "{}", write_graph(&g))
                    .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })?;
                return Ok(Outcome { value: Value::Null, exit: EXIT_OK });
            }
            cmd_family(&family)
        }
        Command::Verify { graph, labels, k, budget } => {
            cmd_verify(&load_graph(&graph.graph, seed)?, &labels, k, budget)
        }
        Command::Gamma { graph, k, oracle, budget } => cmd_gamma(&load_graph(&graph.graph, seed)?, k, oracle, budget),
        Command::Construct { family, k, out } => cmd_construct(&family, k, out.as_deref()),
        Command::Formula { family, k } => cmd_formula(&family, k),
        Command::Relations { graph, k, convention, budget } => {
            cmd_relations(&load_graph(&graph.graph, seed)?, k, convention, budget)
        }
        Command::Discharge { graph, labels } => cmd_discharge(&load_graph(&graph.graph, seed)?, &labels),
        Command::Repro { out, no_bruteforce } => {
            let to_stdout = out.is_none();
            let outcome = cmd_repro(out.as_deref(), !no_bruteforce, stdout)?;
            // with the CSV on stdout, the summary is not printed
            if to_stdout {
                return Ok(Outcome { value: Value::Null, exit: outcome.exit });
            }
            Ok(outcome)
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let format = cli.format;
    let mut buffer = Vec::new();
    let result = dispatch(cli, &mut buffer).and_then(|outcome| {
        if !outcome.value.is_null() {
            render(&outcome.value, format, &mut buffer)?;
        }
        Ok(outcome.exit)
    });
    match result {
        Ok(code) => {
            let _ = stdout.write_all(&buffer);
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if let Some(note) = e.note() {
                let _ = writeln!(stderr, "{note}");
            }
            e.exit_code()
        }
    }
}
