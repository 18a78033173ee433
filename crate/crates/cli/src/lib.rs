//! Argument parsing and command execution for the `annihilator` binary.
//!
//! [`parse_args`] turns an argument list into a validated [`CommandPlan`];
//! [`run`] executes a plan and returns the exit code with everything that
//! should go to stdout and stderr. Nothing here touches the process
//! environment except [`configure_threads`].

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::PathBuf;

use annihilator::verify::{CheckResult, Suite};
use annihilator::{
    classify_with_budget, decode_graph6, encode_graph6, scan_enumerated, scan_graph6_reader, AnalysisReport,
    Classification, Error, FamilySpec, Graph, ScanFilter, ScanReport, DEFAULT_ENUMERATION_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Largest order the built-in enumeration scans.
pub const SCAN_MAX_N: usize = 8;
/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "ANNIHILATOR_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Tsv,
}

/// What `family` prints.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// graph6 string plus the closed-form table.
    #[default]
    Table,
    /// The graph6 string alone.
    G6,
}

#[derive(Debug, Parser)]
#[command(name = "annihilator", version, about = "Annihilation numbers and Koenig-Egervary graphs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Leave timings out so that repeated runs print identical bytes.
    #[arg(long)]
    deterministic: bool,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Analyze graphs given as graph6 or by family name.
    Analyze {
        #[arg(long, group = "input")]
        g6: Option<String>,
        /// File with one graph6 string per line.
        #[arg(long, group = "input")]
        file: Option<PathBuf>,
        /// Read graph6 lines from standard input.
        #[arg(long, group = "input")]
        stdin: bool,
        /// A family spec such as `ke-even`, `fixed:tree6` or `std:C6`.
        #[arg(long, group = "input")]
        family: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// Maximum number of maximum independent sets to enumerate.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Build a family member and print it with its closed-form invariants.
    Family {
        /// `spider-odd`, `spider-even`, `bip-even`, `bip-odd`, `ke-even`,
        /// `ke-odd`, `fixed:<id>` or `std:<kind>`.
        spec: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        emit: Emit,
        #[command(flatten)]
        output: Output,
    },
    /// Classify every graph of a universe.
    Scan {
        /// Scan all graphs on 1..=N vertices (N <= 8).
        #[arg(long, group = "input")]
        n: Option<usize>,
        #[arg(long, group = "input")]
        file: Option<PathBuf>,
        #[arg(long, group = "input")]
        stdin: bool,
        /// Keep connected graphs only.
        #[arg(long, conflicts_with = "disconnected")]
        connected: bool,
        /// Keep disconnected graphs only.
        #[arg(long)]
        disconnected: bool,
        /// Keep graphs with this independence number.
        #[arg(long)]
        alpha: Option<usize>,
        /// Connected KE graphs with alpha = 3, h >= n/2 and condition (ii).
        #[arg(long, conflicts_with_all = ["connected", "disconnected", "alpha"])]
        alpha3: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run the acceptance checks.
    Verify {
        /// Run only these check ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[command(flatten)]
        output: Output,
    },
}

/// Where graphs come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Graph6(String),
    File(PathBuf),
    Stdin,
    Family { spec: FamilySpec, k: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanSource {
    Enumerated(usize),
    File(PathBuf),
    Stdin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze { input: Input, budget: usize },
    Family { spec: FamilySpec, k: Option<usize>, emit: Emit },
    Scan { source: ScanSource, filter: ScanFilter, budget: usize },
    Verify { only: Vec<u8> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandPlan {
    pub command: Command,
    pub format: Format,
    pub deterministic: bool,
}

/// A rejected command line. `message` is ready to print; help and version
/// requests also come back this way with `is_info` set.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct UsageError {
    pub message: String,
    pub is_info: bool,
}

impl UsageError {
    fn new(message: impl std::fmt::Display) -> UsageError {
        UsageError { message: format!("error: {message}\n"), is_info: false }
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_info {
            EXIT_OK
        } else {
            EXIT_USAGE
        }
    }
}

/// Parses arguments without the program name.
pub fn parse_args<I, S>(argv: I) -> Result<CommandPlan, UsageError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("annihilator".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        let is_info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
        UsageError { message: e.render().to_string(), is_info }
    })?;

    let (command, output) = match cli.command {
        Cmd::Analyze { g6, file, stdin, family, k, budget, output } => {
            let input = match (g6, file, stdin, family) {
                (Some(s), ..) => Input::Graph6(s),
                (_, Some(p), ..) => Input::File(p),
                (_, _, true, _) => Input::Stdin,
                (.., Some(f)) => {
                    let spec = parse_family(&f, k)?;
                    Input::Family { spec, k }
                }
                _ => return Err(UsageError::new("analyze needs one of --g6, --file, --stdin or --family")),
            };
            if k.is_some() && !matches!(input, Input::Family { .. }) {
                return Err(UsageError::new("--k only applies together with --family"));
            }
            (Command::Analyze { input, budget }, output)
        }
        Cmd::Family { spec, k, emit, output } => {
            let spec = parse_family(&spec, k)?;
            (Command::Family { spec, k, emit }, output)
        }
        Cmd::Scan { n, file, stdin, connected, disconnected, alpha, alpha3, budget, output } => {
            let source = match (n, file, stdin) {
                (Some(n), ..) => {
                    if !(1..=SCAN_MAX_N).contains(&n) {
                        return Err(UsageError::new(format!(
                            "--n must be between 1 and {SCAN_MAX_N}; pipe larger graphs in as graph6"
                        )));
                    }
                    ScanSource::Enumerated(n)
                }
                (_, Some(p), _) => ScanSource::File(p),
                (_, _, true) => ScanSource::Stdin,
                _ => return Err(UsageError::new("scan needs one of --n, --file or --stdin")),
            };
            let filter = if alpha3 {
                ScanFilter::alpha3_connected()
            } else {
                ScanFilter { connected_only: connected, disconnected_only: disconnected, alpha, ..ScanFilter::default() }
            };
            (Command::Scan { source, filter, budget }, output)
        }
        Cmd::Verify { only, output } => {
            if let Some(bad) = only.iter().find(|&&id| id == 0 || id > Suite::CHECKS) {
                return Err(UsageError::new(format!("no check with id {bad}; ids run from 1 to {}", Suite::CHECKS)));
            }
            (Command::Verify { only }, output)
        }
    };
    Ok(CommandPlan { command, format: output.format, deterministic: output.deterministic })
}

fn parse_family(s: &str, k: Option<usize>) -> Result<FamilySpec, UsageError> {
    let spec: FamilySpec = s.parse().map_err(|e: Error| UsageError::new(e.to_string()))?;
    match (spec.takes_k(), k) {
        (true, None) => Err(UsageError::new(format!("{s} needs --k"))),
        (false, Some(_)) => Err(UsageError::new(format!("{s} takes no --k"))),
        _ => Ok(spec),
    }
}

/// Result of running a plan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl std::fmt::Display) -> Outcome {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Sizes the global rayon pool from `ANNIHILATOR_THREADS`, if set.
pub fn configure_threads() -> Result<(), UsageError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| UsageError::new(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    // Fails only if a pool already exists, in which case it is kept.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Runs a plan, reading standard input when the plan asks for it.
pub fn run(plan: &CommandPlan) -> Outcome {
    run_with_stdin(plan, io::stdin().lock())
}

pub fn run_with_stdin(plan: &CommandPlan, stdin: impl BufRead) -> Outcome {
    match &plan.command {
        Command::Analyze { input, budget } => analyze(plan, input, *budget, stdin),
        Command::Family { spec, k, emit } => family(plan, spec, *k, *emit),
        Command::Scan { source, filter, budget } => scan(plan, source, *filter, *budget, stdin),
        Command::Verify { only } => verify(plan, only),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn read_graphs(input: &Input, stdin: impl BufRead) -> Result<Vec<Graph>, Outcome> {
    let lines = |reader: Box<dyn BufRead + '_>| -> Result<Vec<Graph>, Outcome> {
        let mut out = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Outcome::fail(EXIT_USAGE, e))?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            out.push(decode_graph6(line).map_err(|e| Outcome::fail(EXIT_USAGE, format!("line {}: {e}", i + 1)))?);
        }
        if out.is_empty() {
            return Err(Outcome::fail(EXIT_USAGE, "no graphs in input"));
        }
        Ok(out)
    };
    match input {
        Input::Graph6(s) => Ok(vec![decode_graph6(s.trim()).map_err(|e| Outcome::fail(EXIT_USAGE, e))?]),
        Input::File(p) => {
            let f = File::open(p).map_err(|e| Outcome::fail(EXIT_USAGE, format!("{}: {e}", p.display())))?;
            lines(Box::new(BufReader::new(f)))
        }
        Input::Stdin => lines(Box::new(stdin)),
        Input::Family { spec, k } => Ok(vec![spec.build(*k).map_err(|e| Outcome::fail(EXIT_USAGE, e))?]),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set_names(g: &Graph, set: annihilator::VertexSet) -> String {
    let names: Vec<String> = set.iter().map(|v| g.name(v)).collect();
    format!("{{{}}}", names.join(", "))
}

fn analysis_text(g: &Graph, r: &AnalysisReport, out: &mut String) {
    let degrees: Vec<String> = r.degree_sequence.values().iter().map(usize::to_string).collect();
    let _ = writeln!(out, "graph6          {}", encode_graph6(g));
    let _ = writeln!(out, "n, m            {}, {}", r.n, r.m);
    let _ = writeln!(out, "degrees         {}", degrees.join(" "));
    let _ = writeln!(out, "alpha, mu, h    {}, {}, {}", r.alpha, r.mu, r.h);
    let _ = writeln!(out, "bipartite       {}", yes(r.is_bipartite));
    let _ = writeln!(out, "KE              {}", yes(r.is_ke));
    let _ = writeln!(out, "h >= n/2        {}", yes(r.in_conjecture_scope));
    let _ = writeln!(out, "alpha = h       {}", yes(r.condition_i));
    let _ = writeln!(out, "KE, MIS maximal {}", yes(r.condition_ii));
    let _ = writeln!(out, "classification  {}", r.classification.as_str());
    let _ = writeln!(out, "maximum independent sets: {}", r.mis_annotations.len());
    for a in &r.mis_annotations {
        let _ = writeln!(
            out,
            "  {}  deg = {}  annihilating: {}  maximal: {}  maximum: {}",
            set_names(g, a.set),
            a.deg_sum,
            yes(a.is_annihilating),
            yes(a.is_maximal),
            yes(a.is_maximum)
        );
    }
}

const ANALYSIS_TSV_HEADER: &str =
    "graph6\tn\tm\talpha\tmu\th\tis_bipartite\tis_ke\tin_conjecture_scope\tcondition_i\tcondition_ii\tmis_count\tclassification";

fn analysis_tsv_row(g: &Graph, r: &AnalysisReport) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        encode_graph6(g),
        r.n,
        r.m,
        r.alpha,
        r.mu,
        r.h,
        r.is_bipartite,
        r.is_ke,
        r.in_conjecture_scope,
        r.condition_i,
        r.condition_ii,
        r.mis_annotations.len(),
        r.classification.as_str()
    )
}

fn analysis_json(g: &Graph, r: &AnalysisReport) -> serde_json::Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("graph6".into(), json!(encode_graph6(g)));
    if let Some(names) = g.names() {
        obj.insert("vertex_names".into(), json!(names));
    }
    v
}

fn analyze(plan: &CommandPlan, input: &Input, budget: usize, stdin: impl BufRead) -> Outcome {
    let graphs = match read_graphs(input, stdin) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut reports = Vec::with_capacity(graphs.len());
    for g in &graphs {
        match classify_with_budget(g, budget) {
            Ok(r) => reports.push(r),
            Err(e) => return Outcome::fail(exit_code_for(&e), format!("{}: {e}", encode_graph6(g))),
        }
    }
    let mut out = String::new();
    match plan.format {
        Format::Text => {
            for (i, (g, r)) in graphs.iter().zip(&reports).enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                analysis_text(g, r, &mut out);
            }
        }
        Format::Tsv => {
            out.push_str(ANALYSIS_TSV_HEADER);
            out.push('\n');
            for (g, r) in graphs.iter().zip(&reports) {
                out.push_str(&analysis_tsv_row(g, r));
                out.push('\n');
            }
        }
        Format::Json => {
            // One object per line when more than one graph is analyzed.
            for (g, r) in graphs.iter().zip(&reports) {
                let v = analysis_json(g, r);
                let text = if graphs.len() == 1 { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) };
                out.push_str(&text.expect("json values serialize"));
                out.push('\n');
            }
        }
    }
    Outcome { code: EXIT_OK, stdout: out, stderr: String::new() }
}

fn family(plan: &CommandPlan, spec: &FamilySpec, k: Option<usize>, emit: Emit) -> Outcome {
    let g = match spec.build(k) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let g6 = encode_graph6(&g);
    if emit == Emit::G6 {
        return Outcome { code: EXIT_OK, stdout: format!("{g6}\n"), stderr: String::new() };
    }
    let expected = spec.expected(k);
    let (alpha, h) = (annihilator::independence_number(&g), annihilator::annihilation_number(&g));
    let actual = [("n", g.n()), ("m", g.m()), ("alpha", alpha), ("h", h)];
    let claimed = |name: &str| -> Option<usize> {
        let cf = expected?;
        match name {
            "n" => Some(cf.n),
            "m" => Some(cf.m),
            "alpha" => Some(cf.alpha),
            _ => cf.h,
        }
    };
    let mut out = String::new();
    match plan.format {
        Format::Json => {
            let v = json!({
                "graph6": g6,
                "k": k,
                "vertex_names": g.names(),
                "expected": expected,
                "actual": { "n": g.n(), "m": g.m(), "alpha": alpha, "h": h },
            });
            out = serde_json::to_string_pretty(&v).expect("json values serialize");
            out.push('\n');
        }
        Format::Tsv => {
            out.push_str("invariant\texpected\tactual\n");
            for (name, value) in actual {
                let e = claimed(name).map_or_else(|| "-".to_string(), |c| c.to_string());
                let _ = writeln!(out, "{name}\t{e}\t{value}");
            }
        }
        Format::Text => {
            let _ = writeln!(out, "graph6  {g6}");
            if let Some(names) = g.names() {
                let _ = writeln!(out, "vertices  {}", names.join(" "));
            }
            let _ = writeln!(out, "{:<8}{:>10}{:>8}", "", "expected", "actual");
            for (name, value) in actual {
                let e = claimed(name).map_or_else(|| "-".to_string(), |c| c.to_string());
                let _ = writeln!(out, "{name:<8}{e:>10}{value:>8}");
            }
        }
    }
    Outcome { code: EXIT_OK, stdout: out, stderr: String::new() }
}

fn scan(plan: &CommandPlan, source: &ScanSource, filter: ScanFilter, budget: usize, stdin: impl BufRead) -> Outcome {
    let report = match source {
        ScanSource::Enumerated(n) => scan_enumerated(*n, filter, budget),
        ScanSource::File(p) => match File::open(p) {
            Ok(f) => scan_graph6_reader(BufReader::new(f), filter, budget),
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("{}: {e}", p.display())),
        },
        ScanSource::Stdin => scan_graph6_reader(stdin, filter, budget),
    };
    let mut report = match report {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit_code_for(&e), e),
    };
    if plan.deterministic {
        report = report.without_timing();
    }
    let stdout = match plan.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Tsv => scan_tsv(&report),
        Format::Text => scan_text(&report),
    };
    let (code, stderr) = if report.errors.is_empty() {
        (EXIT_OK, String::new())
    } else {
        (EXIT_BUDGET, format!("error: {} graphs exceeded the enumeration budget of {budget}\n", report.errors.len()))
    };
    Outcome { code, stdout, stderr }
}

fn scan_tsv(r: &ScanReport) -> String {
    let mut out = String::from("bucket\tcount\n");
    for c in Classification::ALL {
        let _ = writeln!(out, "{}\t{}", c.as_str(), r.buckets.get(c));
    }
    out
}

fn scan_text(r: &ScanReport) -> String {
    let mut out = String::new();
    let orders: Vec<String> = r.universe.orders.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "source     {} (orders {})", r.universe.source, orders.join(","));
    let _ = writeln!(out, "examined   {}", r.examined);
    let _ = writeln!(out, "excluded   {}", r.excluded);
    for c in Classification::ALL {
        let _ = writeln!(out, "{:<24} {}", c.as_str(), r.buckets.get(c));
    }
    let _ = writeln!(out, "budget errors            {}", r.errors.len());
    for w in &r.counterexamples {
        let rep = &w.report;
        let _ = writeln!(
            out,
            "  {:<24} {:<12} n={} m={} alpha={} mu={} h={}",
            rep.classification.as_str(),
            w.graph6,
            rep.n,
            rep.m,
            rep.alpha,
            rep.mu,
            rep.h
        );
    }
    if let Some(t) = r.elapsed_seconds {
        let _ = writeln!(out, "elapsed    {t:.3}s");
    }
    out
}

fn verify(plan: &CommandPlan, only: &[u8]) -> Outcome {
    let suite = Suite::new();
    let results: Vec<CheckResult> = if only.is_empty() {
        suite.run_all()
    } else {
        only.iter().filter_map(|&id| suite.run_one(id)).collect()
    };
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut out = String::new();
    match plan.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = results
                .iter()
                .map(|r| {
                    let mut v = json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail,
                                        "limit_seconds": r.limit_seconds });
                    if !plan.deterministic {
                        v["elapsed_seconds"] = json!(r.elapsed_seconds);
                    }
                    v
                })
                .collect();
            out = serde_json::to_string_pretty(&rows).expect("json values serialize");
            out.push('\n');
        }
        Format::Tsv => {
            out.push_str(if plan.deterministic {
                "id\tname\tpassed\tlimit_seconds\tdetail\n"
            } else {
                "id\tname\tpassed\telapsed_seconds\tlimit_seconds\tdetail\n"
            });
            for r in &results {
                let timing =
                    if plan.deterministic { String::new() } else { format!("{:.3}\t", r.elapsed_seconds) };
                let _ = writeln!(out, "{}\t{}\t{}\t{timing}{}\t{}", r.id, r.name, r.passed, r.limit_seconds, r.detail);
            }
        }
        Format::Text => {
            for r in &results {
                if plan.deterministic {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{status} {:>2} {:<34} {}", r.id, r.name, r.detail);
                } else {
                    let _ = writeln!(out, "{r}");
                }
            }
            let _ = writeln!(out, "{} of {} checks passed", results.len() - failed, results.len());
        }
    }
    Outcome { code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY }, stdout: out, stderr: String::new() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_g6_defaults_to_text() {
        let plan = parse_args(["analyze", "--g6", "C~"]).unwrap();
        assert_eq!(plan.format, Format::Text);
        assert_eq!(plan.command, Command::Analyze { input: Input::Graph6("C~".into()), budget: DEFAULT_ENUMERATION_BUDGET });
    }

    #[test]
    fn family_emission_plan() {
        let plan = parse_args(["family", "ke-even", "--k", "3", "--emit", "g6"]).unwrap();
        assert!(matches!(plan.command, Command::Family { k: Some(3), emit: Emit::G6, .. }));
    }

    #[test]
    fn scan_cap_is_a_usage_error() {
        let e = parse_args(["scan", "--n", "9"]).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_USAGE);
        assert!(parse_args(["scan", "--n", "8"]).is_ok());
    }

    #[test]
    fn input_sources_are_exclusive_and_required() {
        assert!(parse_args(["analyze", "--g6", "C~", "--stdin"]).is_err());
        assert!(parse_args(["analyze"]).is_err());
        assert!(parse_args(["analyze", "--g6", "C~", "--k", "2"]).is_err());
        assert!(parse_args(["family", "ke-even"]).is_err());
        assert!(parse_args(["family", "fixed:tree6", "--k", "1"]).is_err());
        assert!(parse_args(["analyze", "--g6", "C~", "--bogus"]).is_err());
    }

    #[test]
    fn help_is_not_an_error_exit() {
        let e = parse_args(["--help"]).unwrap_err();
        assert!(e.is_info);
        assert_eq!(e.exit_code(), EXIT_OK);
    }

    #[test]
    fn verify_ids_are_checked() {
        assert!(parse_args(["verify", "--only", "12"]).is_err());
        assert!(parse_args(["verify", "--only", "1,11"]).is_ok());
    }
}
