//! Command-line front end: analyze graphs, generate families, run the
//! verification suites, export tables and certificates, and play.

/// Writes to stdout; a closed pipe ends the process quietly.
macro_rules! outr {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if let Err(e) = write!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("failed writing to stdout: {e}");
        }
    }};
}

macro_rules! out {
    ($($arg:tt)*) => {{
        outr!($($arg)*);
        outr!("\n");
    }};
}

mod play;

use clap::{Args, Parser, Subcommand, ValueEnum};
use copthrottle::chordal::{chordal_throttling, clique_decomposition, is_chordal, lexbfs_order, ChordalThrottling};
use copthrottle::families::{generate_named, FamilySpec};
use copthrottle::game::{cop_number, solve, CopConfig};
use copthrottle::graph::{io, radius, Graph};
use copthrottle::strategy::{feedback_bound, staged_decomposition, PlacementCertificate, StagedParams};
use copthrottle::throttling::{throttling_report, ReportOptions, ThrottlingReport};
use copthrottle::verify::{run_suite, Suite, SuiteConfig};
use copthrottle::{Budget, Error};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "copthrottle", version, about = "Cop number, capture time and cop throttling for Cops and Robbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Throttling table, cop number and chordal checks for one graph.
    Analyze(AnalyzeArgs),
    /// Emit a graph from a named family.
    Generate(GenerateArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Play against the exact optimal opponent.
    Play(PlayArgs),
    /// Export the solved game table for a fixed number of cops.
    Solve(SolveArgs),
    /// Build and validate a strategy certificate.
    Certify(CertifyArgs),
    /// Export the elimination ordering and clique decomposition.
    Chordal(ChordalArgs),
}

#[derive(Args, Clone)]
struct GraphSource {
    /// Graph file (JSON, edge list or graph6).
    #[arg(long, conflicts_with = "family")]
    input: Option<String>,
    /// Family spec such as `path:n=9`, `path(9)` or `petersen`.
    #[arg(long)]
    family: Option<String>,
    /// Family parameter `key=value` (repeatable).
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// Seed for random families.
    #[arg(long)]
    seed: Option<u64>,
    /// Positional graph: a file path or a family spec.
    #[arg(conflicts_with_all = ["input", "family"])]
    graph: Option<String>,
}

#[derive(Args, Clone, Copy)]
struct BudgetArg {
    /// Work budget in elementary steps.
    #[arg(long, default_value_t = copthrottle::budget::DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
    Graph6,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    budget: BudgetArg,
    /// Largest number of cops to solve for.
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Number of graphs; successive ones use successive seeds.
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (or use `--suite`).
    #[arg(conflicts_with = "suite_flag")]
    suite: Option<String>,
    #[arg(long = "suite")]
    suite_flag: Option<String>,
    /// Run every suite.
    #[arg(long, conflicts_with_all = ["suite", "suite_flag"])]
    all: bool,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Suite parameter `key=value`; `l` sets the M(l) order for `m-ell`.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// graph6 corpus replacing the generated one.
    #[arg(long)]
    input: Option<String>,
    #[command(flatten)]
    budget: BudgetArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Robber,
    Cops,
}

#[derive(Args)]
struct PlayArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    budget: BudgetArg,
    #[arg(long, default_value_t = 1)]
    cops: usize,
    /// The side you play.
    #[arg(long = "as", value_enum, default_value = "robber")]
    side: Side,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    budget: BudgetArg,
    #[arg(long, default_value_t = 1)]
    cops: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    Staged,
    Feedback,
    BallCover,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    budget: BudgetArg,
    #[arg(long, value_enum, default_value = "feedback")]
    strategy: StrategyKind,
    /// Cop positions for `ball-cover` (default: a center).
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    cops: Vec<usize>,
    /// Ball radius for `ball-cover` (default: the largest distance to a cop).
    #[arg(long)]
    radius: Option<u32>,
    /// Staged parameters as `long_len,guard_r1,star_deg,mid_len,guard_r2`.
    #[arg(long, value_delimiter = ',', num_args = 5)]
    staged: Vec<usize>,
    /// Reserve cops for `staged`.
    #[arg(long)]
    reserve: Option<usize>,
}

#[derive(Args)]
struct ChordalArgs {
    #[command(flatten)]
    source: GraphSource,
}

/// Errors mapped to exit codes: 1 input, 2 budget, 3 verification.
enum Failure {
    Core(Error),
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Play(a) => play_cmd(a),
        Command::Solve(a) => solve_cmd(a),
        Command::Certify(a) => certify(a),
        Command::Chordal(a) => chordal(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 2 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}

fn family_spec(text: &str, params: &[String], seed: Option<u64>) -> CliResult<FamilySpec> {
    let mut spec = FamilySpec::parse(text)?;
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--param expects key=value, got `{p}`")))?;
        spec.params.insert(k.trim().to_string(), v.trim().to_string());
    }
    if let Some(s) = seed {
        spec.params.insert("seed".into(), s.to_string());
    }
    Ok(spec)
}

fn read_file(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn load_graph(src: &GraphSource) -> CliResult<Graph> {
    let from_file = |path: &str| -> CliResult<Graph> { Ok(io::parse_any(&read_file(path)?)?.with_name(path)) };
    match (&src.input, &src.family, &src.graph) {
        (Some(path), _, _) => from_file(path),
        (None, Some(f), _) => Ok(generate_named(&family_spec(f, &src.params, src.seed)?)?),
        (None, None, Some(g)) if std::path::Path::new(g).is_file() => from_file(g),
        (None, None, Some(g)) => Ok(generate_named(&family_spec(g, &src.params, src.seed)?)?),
        (None, None, None) => Err(Failure::Usage("give a graph: --input FILE, --family SPEC or a positional spec".into())),
    }
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    name: Option<&'a str>,
    n: usize,
    m: usize,
    connected: bool,
    cop_number: usize,
    th_sum: u64,
    th_prod: u64,
    chordal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    chordal_summary: Option<ChordalSummary>,
    throttling: &'a ThrottlingReport,
}

#[derive(Serialize)]
struct ChordalSummary {
    radius: usize,
    /// Whether the exact product throttling number equals `1 + rad(G)`.
    prod_identity_holds: bool,
    fast: ChordalThrottling,
}

fn analyze(a: AnalyzeArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    let budget = Budget(a.budget.budget);
    let report = throttling_report(&g, ReportOptions { k_max: a.k_max, budget, ..ReportOptions::default() })?;
    let c = cop_number(&g, budget)?;
    let chordal = is_chordal(&g);
    let chordal_summary = if chordal && g.is_connected() {
        let rad = radius(&g).finite().expect("connected");
        Some(ChordalSummary {
            radius: rad,
            prod_identity_holds: report.complete && report.th_prod == 1 + rad as u64,
            fast: chordal_throttling(&g, budget)?,
        })
    } else {
        None
    };
    let out = AnalyzeReport {
        name: g.name(),
        n: g.n(),
        m: g.m(),
        connected: g.is_connected(),
        cop_number: c,
        th_sum: report.th_sum,
        th_prod: report.th_prod,
        chordal,
        chordal_summary,
        throttling: &report,
    };
    match a.format {
        Format::Json => out!("{}", serde_json::to_string_pretty(&out).expect("serializes")),
        Format::Csv => outr!("{}", report.to_csv()),
        Format::Dot => outr!("{}", io::to_dot(&g)),
        Format::Graph6 => out!("{}", io::to_graph6(&g)),
        Format::Text => {
            out!("graph {} (n = {}, m = {})", g.name().unwrap_or("-"), g.n(), g.m());
            out!("cop number c(G) = {c}");
            outr!("{}", report.to_csv());
            if !report.skipped.is_empty() {
                out!("skipped k (radius bound): {:?}", report.skipped);
            }
            out!("th_c = {} at k = {:?}", report.th_sum, report.th_sum_ks);
            out!("th_c^x = {} at k = {:?}", report.th_prod, report.th_prod_ks);
            if !report.complete {
                out!("sweep stopped early at k_max; values are upper bounds");
            }
            out!("chordal: {chordal}");
            if let Some(s) = &out.chordal_summary {
                out!(
                    "1 + rad(G) = {}; exact th_c^x {} it",
                    1 + s.radius,
                    if s.prod_identity_holds { "equals" } else { "differs from" }
                );
            }
        }
    }
    Ok(())
}

fn generate(a: GenerateArgs) -> CliResult<()> {
    let mut graphs = Vec::new();
    for i in 0..a.count {
        let mut src = a.source.clone();
        src.seed = Some(a.source.seed.unwrap_or(0) + i as u64);
        if a.count == 1 && a.source.seed.is_none() {
            src.seed = None;
        }
        graphs.push(load_graph(&src)?);
    }
    for g in &graphs {
        match a.format {
            Format::Json => out!("{}", io::to_json(g)),
            Format::Dot => outr!("{}", io::to_dot(g)),
            Format::Graph6 => out!("{}", io::to_graph6(g)),
            Format::Csv | Format::Text => outr!("{}", io::to_edge_list(g)),
        }
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> CliResult<()> {
    let suites: Vec<Suite> = if a.all {
        Suite::ALL.to_vec()
    } else {
        let name = a
            .suite
            .or(a.suite_flag)
            .ok_or_else(|| Failure::Usage("name a suite or pass --all".into()))?;
        vec![name.parse()?]
    };
    let mut cfg = SuiteConfig {
        count: a.count,
        max_n: a.max_n,
        seed: a.seed,
        budget: Budget(a.budget.budget),
        ..SuiteConfig::default()
    };
    for p in &a.params {
        match p.split_once('=') {
            Some(("l", v)) => {
                cfg.ell = Some(v.parse().map_err(|_| Failure::Usage(format!("bad value in `{p}`")))?);
            }
            _ => return Err(Failure::Usage(format!("unknown suite parameter `{p}`"))),
        }
    }
    if let Some(path) = &a.input {
        cfg.graphs = Some(io::read_graph6_corpus(&read_file(path)?)?);
    }
    let mut failed = Vec::new();
    let mut reports = Vec::new();
    for s in suites {
        let r = run_suite(s, &cfg)?;
        if !r.ok() {
            failed.push(s.name());
        }
        if a.format == Format::Json {
            reports.push(r);
        } else {
            out!("{}", r.summary());
        }
    }
    if a.format == Format::Json {
        out!("{}", serde_json::to_string_pretty(&reports).expect("serializes"));
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(failed.join(", ")))
    }
}

fn play_cmd(a: PlayArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    let table = solve(&g, a.cops, Budget(a.budget.budget))?;
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let human = match a.side {
        Side::Robber => play::Human::Robber,
        Side::Cops => play::Human::Cops,
    };
    play::run(&table, human, stdin.lock(), stdout.lock())
        .map_err(|e| Failure::Usage(format!("console error: {e}")))
}

fn solve_cmd(a: SolveArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    let table = solve(&g, a.cops, Budget(a.budget.budget))?;
    match a.format {
        Format::Json => out!("{}", serde_json::to_string(&table.entries()).expect("serializes")),
        _ => {
            out!("cops,robber,value");
            for e in table.entries() {
                let cops = CopConfig::new(e.0.clone())?;
                out!("{cops},{},{}", e.1, e.2);
            }
        }
    }
    Ok(())
}

fn certify(a: CertifyArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    let budget = Budget(a.budget.budget);
    let cert: PlacementCertificate = match a.strategy {
        StrategyKind::Feedback => feedback_bound(&g, budget)?,
        StrategyKind::Staged => {
            let mut params = match a.staged.as_slice() {
                [] => StagedParams::from_lambert(g.n())?,
                [l1, r1, d, l2, r2] => StagedParams {
                    long_len: *l1,
                    guard_r1: *r1,
                    star_deg: *d,
                    mid_len: *l2,
                    guard_r2: *r2,
                    reserve: None,
                },
                _ => return Err(Failure::Usage("--staged takes five values".into())),
            };
            params.reserve = a.reserve;
            staged_decomposition(&g, params, budget)?
        }
        StrategyKind::BallCover => {
            let cops = if a.cops.is_empty() {
                vec![copthrottle::graph::center(&g).ok_or_else(|| Failure::Usage("empty graph".into()))?]
            } else {
                a.cops.clone()
            };
            let s = CopConfig::new(cops)?;
            let radius = match a.radius {
                Some(r) => r,
                None => copthrottle::chordal::max_distance(&g, s.positions())
                    .finite()
                    .ok_or(Error::Disconnected)? as u32,
            };
            copthrottle::chordal::ball_cover_strategy(&g, &s, radius, budget)?
        }
    };
    out!("{}", cert.to_json());
    if cert.validated {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "certificate with claimed bound {} did not validate",
            cert.claimed_bound
        )))
    }
}

#[derive(Serialize)]
struct ChordalExport {
    ordering: copthrottle::chordal::EliminationOrdering,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<copthrottle::chordal::CliqueDecomposition>,
}

fn chordal(a: ChordalArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    let ordering = lexbfs_order(&g);
    let decomposition = if ordering.chordal && g.is_connected() { Some(clique_decomposition(&g)?) } else { None };
    out!("{}", serde_json::to_string_pretty(&ChordalExport { ordering, decomposition }).expect("serializes"));
    Ok(())
}
