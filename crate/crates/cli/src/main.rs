//! `truncdim`: generate graphs, compute `dim_k` / `dim_{k,f}`, print closed
//! forms and structural verdicts, and run verification suites.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use truncdim::formulas::{self, Formula, PathOrCycle};
use truncdim::generators::{Family, GenError};
use truncdim::graph::edgelist;
use truncdim::harness::{self, SuiteParams};
use truncdim::solvers::{self, ExactOptions, SearchStats};
use truncdim::{characterize, rational, resolve, Graph, GraphError, Rational};

#[derive(Parser)]
#[command(name = "truncdim", version, about = "Exact k-truncated metric dimension")]
struct Cli {
    /// Worker threads for suites (default: all cores). Never changes results.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a family member as an edge list.
    ///
    /// Families: path N, cycle N, complete N, grid S T, petersen, wheel N
    /// (order N), fan N (P_N + K_1), multipartite A B .., spider L1 L2 ..,
    /// caterpillar X ALPHA, substar X S, gap-h M, gap-g M, random-tree N,
    /// random N P.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute dim_k and/or dim_{k,f} of an edge-list graph.
    Dim {
        /// Edge-list file; standard input when absent or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(long)]
        json: bool,
        /// Largest order accepted by the exact integer search.
        #[arg(long, default_value_t = solvers::DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Print the closed-form value for a family, as `num/den` or
    /// `lo/den..hi/den`. Families take the same parameters as `gen`.
    Formula {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Print every structural predicate verdict as JSON.
    Characterize {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Dump the reduced constraint system as JSON.
    Profile {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Run a verification suite; exits 4 if any case fails.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long, default_value_t = harness::DEFAULT_SEED)]
        seed: u64,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Fractional,
    Integer,
    Both,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Limit(truncdim::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Failed(_) => 4,
        }
    }
}

impl From<truncdim::Error> for CliError {
    fn from(e: truncdim::Error) -> Self {
        match e {
            truncdim::Error::SizeLimit { .. } => CliError::Limit(e),
            truncdim::Error::Verification(m) => CliError::Failed(m),
            truncdim::Error::UnknownSuite(_) => CliError::Usage(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn io_err(what: &str, e: io::Error) -> CliError {
    CliError::Input(format!("{what}: {e}"))
}

fn read_graph(input: &Option<PathBuf>) -> Result<Graph, CliError> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| io_err(&p.display().to_string(), e))?
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| io_err("stdin", e))?;
            s
        }
    };
    Ok(edgelist::parse(&text)?)
}

fn emit(s: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    writeln!(out, "{s}").map_err(|e| io_err("stdout", e))
}

/// Integers as JSON numbers when they fit in `i64`, otherwise as strings.
fn big_json(b: &num_bigint::BigInt) -> Value {
    let s = b.to_string();
    s.parse::<i64>().map_or(Value::String(s), Value::from)
}

fn frac_json(r: &Rational) -> Value {
    json!({ "num": big_json(r.numer()), "den": big_json(r.denom()) })
}

fn gen(family: &str, params: &[String], seed: u64, out: &Option<PathBuf>) -> Result<(), CliError> {
    let g = Family::parse(family, params, seed)?.build()?;
    let text = edgelist::write(&g);
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_err(&p.display().to_string(), e)),
        None => {
            io::stdout().write_all(text.as_bytes()).map_err(|e| io_err("stdout", e))
        }
    }
}

fn dim(input: &Option<PathBuf>, k: u32, mode: Mode, as_json: bool, limit: usize) -> Result<(), CliError> {
    let g = read_graph(input)?;
    let mut verified = true;
    let mut witness = serde_json::Map::new();
    let integer = if mode != Mode::Fractional {
        let w = solvers::dim_k_exact_with(&g, k, ExactOptions { limit }, &mut SearchStats::default())?;
        verified &= resolve::check_resolving_set(&g, k, &w.set)?;
        witness.insert("set".into(), json!(w.set.iter().collect::<Vec<_>>()));
        Some(w.size)
    } else {
        None
    };
    let fractional = if mode != Mode::Integer {
        let w = solvers::dim_kf(&g, k)?;
        verified &= resolve::check_resolving_function(&g, k, &w.values)?;
        let dual_total: Rational = w.dual.iter().sum();
        verified &= dual_total == w.total;
        witness.insert("values".into(), json!(w.values.iter().map(rational::format).collect::<Vec<_>>()));
        witness.insert("dual".into(), json!(w.dual.iter().map(rational::format).collect::<Vec<_>>()));
        Some(w.total)
    } else {
        None
    };
    if as_json {
        let v = json!({
            "n": g.order(),
            "k": k,
            "dim_k": integer,
            "dim_kf": fractional.as_ref().map(frac_json),
            "witness": witness,
            "verified": verified,
        });
        emit(&serde_json::to_string_pretty(&v).expect("json values serialize"))?;
    } else {
        if let Some(d) = integer {
            emit(&format!("dim_k={d}"))?;
        }
        if let Some(f) = &fractional {
            emit(&format!("dim_kf={}", rational::format(f)))?;
        }
    }
    if verified {
        Ok(())
    } else {
        Err(CliError::Failed("witness failed re-verification".into()))
    }
}

fn ints(params: &[String], want: usize, family: &str) -> Result<Vec<u64>, CliError> {
    let v: Vec<u64> = params
        .iter()
        .map(|p| p.parse().map_err(|_| CliError::Input(format!("{family}: `{p}` is not a nonnegative integer"))))
        .collect::<Result<_, _>>()?;
    if want != usize::MAX && v.len() != want {
        return Err(CliError::Input(format!("{family}: expected {want} parameter(s), got {}", v.len())));
    }
    Ok(v)
}

fn formula(family: &str, params: &[String], k: u32) -> Result<(), CliError> {
    let k64 = u64::from(k);
    let line = |name: &str, f: &Formula| format!("{name}={} ({})", f.value, f.branch);
    let mut lines = Vec::new();
    match family {
        "path" | "cycle" => {
            let n = ints(params, 1, family)?[0];
            let (f, kind) = if family == "path" {
                (formulas::path_kf(n, k64)?, PathOrCycle::Path)
            } else {
                (formulas::cycle_kf(n, k64)?, PathOrCycle::Cycle)
            };
            lines.push(line("dim_kf", &f));
            let (d, branch) = formulas::path_cycle_dim_k(n, k64, kind)?;
            lines.push(format!("dim_k={d} ({branch})"));
        }
        "fan" => lines.push(line("dim_kf", &formulas::fan_kf(ints(params, 1, family)?[0], k64)?)),
        "wheel" => {
            // `gen wheel N` has order N, the closed form is indexed by cycle length.
            let n = ints(params, 1, family)?[0];
            let cycle_len = n.checked_sub(1).ok_or_else(|| CliError::Input("wheel: order must be positive".into()))?;
            lines.push(line("dim_kf", &formulas::wheel_kf(cycle_len, k64)?));
        }
        "multipartite" => {
            let parts: Vec<usize> = ints(params, usize::MAX, family)?.into_iter().map(|p| p as usize).collect();
            lines.push(line("dim_kf", &formulas::multipartite_f(&parts)?));
        }
        "petersen" => {
            ints(params, 0, family)?;
            lines.push(line("dim_kf", &formulas::petersen_kf(k64)?));
        }
        "grid" => {
            let v = ints(params, 2, family)?;
            lines.push(line("dim_f", &formulas::grid_f(v[0], v[1])?));
            let pred = characterize::grid_dim1f_eq_dimf(v[0] as usize, v[1] as usize)?;
            lines.push(format!("dim_1f=dim_f: {pred}"));
        }
        "spider" | "caterpillar" | "substar" | "random-tree" => {
            let t = Family::parse(family, params, 0)?.build()?;
            lines.push(line("dim_f", &formulas::tree_f(&t)?));
            if !t.is_path() {
                lines.push(format!("dim={}", formulas::tree_dim(&t)?));
            }
        }
        other => return Err(CliError::Input(format!("no closed form for family `{other}`"))),
    }
    emit(&lines.join("\n"))
}

fn characterize_cmd(input: &Option<PathBuf>, k: u32) -> Result<(), CliError> {
    if k < 1 {
        return Err(truncdim::Error::InvalidK.into());
    }
    let g = read_graph(input)?;
    let mut v = json!({
        "n": g.order(),
        "k": k,
        "short_path": characterize::is_short_path(&g, k),
        "twin_classes_ge2": characterize::all_twin_classes_ge2(&g)?,
        "is_tree": g.is_tree(),
    });
    if g.is_tree() && g.order() >= 2 {
        let p = characterize::tree_profile(&g)?;
        let single = match characterize::tree_single_major_kf_eq_f(&g, k) {
            Ok(b) => Value::Bool(b),
            Err(truncdim::Error::Precondition(_)) => Value::Null,
            Err(e) => return Err(e.into()),
        };
        v["tree"] = json!({
            "dim1f_eq_dimf": characterize::tree_dim1f_eq_dimf(&g)?,
            "dim1_eq_dim": characterize::tree_dim1_eq_dim(&g)?,
            "single_major_kf_eq_f": single,
            "profile": p,
        });
    }
    emit(&serde_json::to_string_pretty(&v).expect("json values serialize"))
}

fn profile(input: &Option<PathBuf>, k: u32) -> Result<(), CliError> {
    let g = read_graph(input)?;
    let sys = resolve::constraint_system(&g, k)?;
    let v = json!({
        "n": sys.n,
        "k": sys.k,
        "untruncated": sys.untruncated,
        "constraints": sys.constraints.iter().map(|s| s.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
        "provenance": sys.provenance,
    });
    emit(&serde_json::to_string_pretty(&v).expect("json values serialize"))
}

fn verify(suite: &str, max_n: Option<usize>, max_k: Option<u32>, seed: u64, out: &Option<PathBuf>) -> Result<(), CliError> {
    let params = SuiteParams { max_n, max_k, seed };
    let report = harness::run_suite(suite, &params)?;
    emit(&report.to_string())?;
    if let Some(p) = out {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        fs::write(p, text).map_err(|e| io_err(&p.display().to_string(), e))?;
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} of {} cases failed", report.summary.failed, report.summary.total)))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    }
    match &cli.cmd {
        Cmd::Gen { family, params, seed, out } => gen(family, params, *seed, out),
        Cmd::Dim { input, k, mode, json, limit } => dim(input, *k, *mode, *json, *limit),
        Cmd::Formula { family, params, k } => formula(family, params, *k),
        Cmd::Characterize { input, k } => characterize_cmd(input, *k),
        Cmd::Profile { input, k } => profile(input, *k),
        Cmd::Verify { suite, max_n, max_k, seed, json } => verify(suite, *max_n, *max_k, *seed, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
