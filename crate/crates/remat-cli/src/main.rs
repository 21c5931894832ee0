//! Command-line front end for the remat library.
//!
//! One binary, one subcommand per workflow. Graphs travel as graph6 words,
//! either inline (`--g6`, repeatable) or as a line stream (`--input FILE`,
//! `-` for stdin); the family commands fall back to the built-in connected
//! enumeration when no input is given. Everything on stdout is JSON: one
//! document per input graph for analyze/find/oracle, a single report for
//! verify/hunt/fkd. Failures become `{"error": ...}` documents on stderr.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 precondition violated,
//! 3 counterexample candidate found, 4 search budget exhausted.

use std::env;
use std::fs;
use std::io::{self, BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use remat::connectivity::{has_connectivity, vertex_connectivity};
use remat::enumerate::{enumerate_connected_graphs, EnumFilter, ENUMERATION_GUARD};
use remat::finders::{
    bounded_exact_search, find_half_delta_matching, find_matching_high_k,
    find_one_removable_delta, find_one_removable_minhalf, find_removable_2matching,
    find_two_removable_near_delta, FinderError, FinderOutcome, SearchBudget, SearchOutcome,
};
use remat::graph6::{ingest_graph6_stream, parse_graph6, write_graph6};
use remat::oracle::max_removable_matching;
use remat::structure::classify_exception;
use remat::verify::{empirical_f, hunt_conjecture, verify_theorem, SweepParams, VerifyError};
use remat::{Graph, Matching};

#[derive(Parser)]
#[command(name = "remat", version, about = "Removable matchings in k-connected graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Worker threads for the verify/hunt/fkd fan-out; 0 keeps rayon's default.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    jobs: usize,
    /// Search node budget; falls back to REMAT_BUDGET_NODES, then the built-in default.
    #[arg(long, global = true, value_name = "NODES")]
    budget_nodes: Option<u64>,
    /// Search time budget in milliseconds; falls back to REMAT_BUDGET_MS.
    #[arg(long, global = true, value_name = "MS")]
    budget_ms: Option<u64>,
    /// Omit wall-clock fields so identical runs emit identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Accepted for forward compatibility; every current command is deterministic.
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,
}

#[derive(Args)]
struct InputArgs {
    /// Inline graph6 word; repeat for several graphs.
    #[arg(long = "g6", value_name = "WORD", conflicts_with = "input")]
    g6: Vec<String>,
    /// File of graph6 lines, or "-" for standard input.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Abort on the first malformed line instead of skipping it.
    #[arg(long, requires = "input")]
    strict: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Connectivity parameter of the statement.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Extra minimum-degree floor; doubles as t for one-delta and as the
    /// target δ for pro:matching.
    #[arg(long, default_value_t = 0)]
    delta: usize,
    /// Smallest order to consider.
    #[arg(long, default_value_t = 1, value_name = "N")]
    n_min: usize,
    /// Largest order to consider.
    #[arg(long, visible_alias = "n", default_value_t = ENUMERATION_GUARD, value_name = "N")]
    n_max: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Structural profile of each input graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Find a k-removable matching under a chosen policy.
    Find {
        #[command(flatten)]
        input: InputArgs,
        /// Connectivity to preserve.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Which guarantee to invoke.
        #[arg(long, value_enum)]
        policy: Policy,
        /// Matching size for the one-delta and exact policies.
        #[arg(long, value_name = "T")]
        size: Option<usize>,
    },
    /// Exact maximum k-removable matching, graph by graph.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Connectivity to preserve.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Sweep a proved theorem over a graph family and tally the outcomes.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Registered id: halin, ckl, two-matching, half-delta, one-delta,
        /// half-n-min, two-near-delta, or mader-audit.
        #[arg(long, value_name = "ID")]
        theorem: String,
        /// Also write any counterexamples to this file, one graph6 word per line.
        #[arg(long, value_name = "PATH")]
        counterexample_file: Option<PathBuf>,
    },
    /// Observed f(k, δ) lower bound over a family, with minimizer witnesses.
    Fkd {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
        /// Largest order in the family; members need n ≥ 2δ.
        #[arg(long, visible_alias = "n", default_value_t = ENUMERATION_GUARD, value_name = "N")]
        n_max: usize,
        /// Also write the minimizer witnesses to this file.
        #[arg(long, value_name = "PATH")]
        witness_file: Option<PathBuf>,
    },
    /// Sweep an open conjecture and flag counterexample candidates.
    Hunt {
        #[command(flatten)]
        family: FamilyArgs,
        /// Registered id: con:matching, con:half-n-min, or pro:matching.
        #[arg(long, value_name = "ID")]
        conjecture: String,
        /// Also write any candidates to this file, one graph6 word per line.
        #[arg(long, value_name = "PATH")]
        counterexample_file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Policy {
    /// 2-matching at δ ≥ k + 1.
    Two,
    /// ⌈(δ+1)/2⌉-matching for k ≤ 3.
    HalfDelta,
    /// ⌈(δ+1)/2⌉-matching for k ≥ 4, δ ≥ 3k − 1.
    HighK,
    /// 1-removable t-matching at δ ≥ t ≥ 3, n ≥ 2t (pass t as --size).
    OneDelta,
    /// 1-removable min{⌊n/2⌋, δ}-matching at δ ≥ 3.
    HalfNMin,
    /// 2-removable (δ−2)- or (δ−3)-matching at δ ≥ 5.
    TwoNearDelta,
    /// Bounded exhaustive search for a matching of exactly --size edges.
    Exact,
}

impl Policy {
    fn name(self) -> &'static str {
        match self {
            Policy::Two => "two",
            Policy::HalfDelta => "half-delta",
            Policy::HighK => "high-k",
            Policy::OneDelta => "one-delta",
            Policy::HalfNMin => "half-n-min",
            Policy::TwoNearDelta => "two-near-delta",
            Policy::Exact => "exact",
        }
    }
}

enum Failure {
    Usage(String),
    Parse(String),
    Io(String),
    Precondition(String),
    Budget(String),
    Internal(String),
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Parse(_) => "parse",
            Failure::Io(_) => "io",
            Failure::Precondition(_) => "precondition",
            Failure::Budget(_) => "budget",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m)
            | Failure::Parse(m)
            | Failure::Io(m)
            | Failure::Precondition(m)
            | Failure::Budget(m)
            | Failure::Internal(m) => m,
        }
    }

    fn exit(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Parse(_) | Failure::Io(_) => 1,
            Failure::Precondition(_) | Failure::Internal(_) => 2,
            Failure::Budget(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            return fail(&Failure::Usage(err.to_string().trim_end().to_string()));
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => fail(&f),
    }
}

fn fail(f: &Failure) -> ExitCode {
    let doc = json!({"error": {"kind": f.kind(), "message": f.message()}});
    eprintln!("{doc}");
    ExitCode::from(f.exit())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let global = &cli.global;
    if global.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(global.jobs)
            .build_global();
    }
    let _ = global.seed;
    let budget = resolve_budget(global.budget_nodes, global.budget_ms)?;
    match cli.command {
        Command::Analyze { input } => cmd_analyze(&input),
        Command::Find {
            input,
            k,
            policy,
            size,
        } => cmd_find(&input, k, policy, size, &budget),
        Command::Oracle { input, k } => cmd_oracle(&input, k, &budget),
        Command::Verify {
            family,
            theorem,
            counterexample_file,
        } => cmd_sweep(
            SweepKind::Theorem(theorem),
            &family,
            counterexample_file.as_deref(),
            &budget,
            global.no_timing,
        ),
        Command::Hunt {
            family,
            conjecture,
            counterexample_file,
        } => cmd_sweep(
            SweepKind::Conjecture(conjecture),
            &family,
            counterexample_file.as_deref(),
            &budget,
            global.no_timing,
        ),
        Command::Fkd {
            input,
            k,
            delta,
            n_max,
            witness_file,
        } => cmd_fkd(&input, k, delta, n_max, witness_file.as_deref(), &budget),
    }
}

fn resolve_budget(nodes: Option<u64>, ms: Option<u64>) -> Result<SearchBudget, Failure> {
    let fallback = SearchBudget::default();
    let node_limit = match nodes {
        Some(v) => v,
        None => env_limit("REMAT_BUDGET_NODES")?.unwrap_or(fallback.node_limit),
    };
    let time_limit = match ms {
        Some(v) => Duration::from_millis(v),
        None => env_limit("REMAT_BUDGET_MS")?
            .map(Duration::from_millis)
            .unwrap_or(fallback.time_limit),
    };
    Ok(SearchBudget {
        node_limit,
        time_limit,
    })
}

fn env_limit(name: &str) -> Result<Option<u64>, Failure> {
    match env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{name} must be an unsigned integer, got {raw:?}"))),
        Err(env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Failure::Usage(format!("{name}: {e}"))),
    }
}

/// Reads the graphs named by `--g6`/`--input`, or None when neither is given.
fn load_graphs(args: &InputArgs) -> Result<Option<Vec<Graph>>, Failure> {
    if !args.g6.is_empty() {
        let mut graphs = Vec::with_capacity(args.g6.len());
        for word in &args.g6 {
            graphs.push(parse_graph6(word).map_err(|e| Failure::Parse(format!("{word:?}: {e}")))?);
        }
        return Ok(Some(graphs));
    }
    let Some(path) = &args.input else {
        return Ok(None);
    };
    let reader: Box<dyn BufRead> = if path == Path::new("-") {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let file =
            fs::File::open(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        Box::new(BufReader::new(file))
    };
    let outcome =
        ingest_graph6_stream(reader, args.strict).map_err(|e| Failure::Parse(e.to_string()))?;
    if !outcome.skipped.is_empty() {
        let doc = json!({"warning": {"kind": "skipped-lines", "count": outcome.skipped.len()}});
        eprintln!("{doc}");
    }
    Ok(Some(outcome.graphs))
}

fn require_graphs(args: &InputArgs, command: &str) -> Result<Vec<Graph>, Failure> {
    load_graphs(args)?
        .ok_or_else(|| Failure::Usage(format!("{command} needs graphs; pass --g6 or --input")))
}

fn enumerated_source(n_min: usize, n_max: usize) -> Result<Vec<Graph>, Failure> {
    if n_max > ENUMERATION_GUARD {
        return Err(Failure::Precondition(format!(
            "the built-in enumeration stops at n = {ENUMERATION_GUARD}; stream larger graphs with --input"
        )));
    }
    let mut graphs = Vec::new();
    for n in n_min.max(1)..=n_max {
        graphs.extend(
            enumerate_connected_graphs(n, &EnumFilter::default())
                .map_err(|e| Failure::Precondition(e.to_string()))?,
        );
    }
    Ok(graphs)
}

fn emit(out: &mut impl io::Write, doc: &Value) -> Result<(), Failure> {
    writeln!(out, "{doc}").map_err(|e| Failure::Io(e.to_string()))
}

fn cmd_analyze(input: &InputArgs) -> Result<u8, Failure> {
    let graphs = require_graphs(input, "analyze")?;
    let mut out = io::stdout().lock();
    for g in &graphs {
        let word = write_graph6(g);
        let kappa = vertex_connectivity(g)
            .map_err(|e| Failure::Precondition(format!("{word}: {e}")))?;
        let doc = json!({
            "graph6": word,
            "n": g.n(),
            "m": g.edges().len(),
            "delta": g.min_degree(),
            "kappa": kappa,
            "exception_class": classify_exception(g),
        });
        emit(&mut out, &doc)?;
    }
    Ok(0)
}

fn cmd_find(
    input: &InputArgs,
    k: usize,
    policy: Policy,
    size: Option<usize>,
    budget: &SearchBudget,
) -> Result<u8, Failure> {
    let graphs = require_graphs(input, "find")?;
    let size = validate_policy_flags(policy, k, size)?;
    let mut exit = 0u8;
    let mut out = io::stdout().lock();
    for g in &graphs {
        let word = write_graph6(g);
        match dispatch_finder(g, k, policy, size, budget) {
            Ok(FinderOutcome::Matching(m)) => {
                check_certificate(g, k, &m, &word)?;
                let doc = json!({"graph6": word, "matching": m, "certified": true});
                emit(&mut out, &doc)?;
            }
            Ok(FinderOutcome::Exception(fam)) => {
                let mut doc = serde_json::to_value(fam).expect("exception serializes");
                doc["graph6"] = Value::String(word);
                emit(&mut out, &doc)?;
            }
            Err(FinderError::NotFound { .. }) => {
                let doc = json!({"graph6": word, "not_found": true});
                emit(&mut out, &doc)?;
                exit = 3;
            }
            Err(FinderError::BudgetExhausted) => {
                return Err(Failure::Budget(format!("{word}: search budget exhausted")));
            }
            Err(FinderError::PreconditionViolated { reason }) => {
                return Err(Failure::Precondition(format!("{word}: {reason}")));
            }
        }
    }
    Ok(exit)
}

/// The one-delta, half-n-min, and two-near-delta guarantees fix k; the
/// explicit --k must agree instead of being silently ignored.
fn validate_policy_flags(policy: Policy, k: usize, size: Option<usize>) -> Result<usize, Failure> {
    let takes_size = matches!(policy, Policy::OneDelta | Policy::Exact);
    if takes_size && size.is_none() {
        return Err(Failure::Usage(format!(
            "--size is required for the {} policy",
            policy.name()
        )));
    }
    if !takes_size && size.is_some() {
        return Err(Failure::Usage(format!(
            "--size does not apply to the {} policy",
            policy.name()
        )));
    }
    let fixed_k = match policy {
        Policy::OneDelta | Policy::HalfNMin => Some(1),
        Policy::TwoNearDelta => Some(2),
        _ => None,
    };
    if let Some(want) = fixed_k {
        if k != want {
            return Err(Failure::Precondition(format!(
                "the {} policy preserves {want}-connectivity, got --k {k}",
                policy.name()
            )));
        }
    }
    Ok(size.unwrap_or(0))
}

fn dispatch_finder(
    g: &Graph,
    k: usize,
    policy: Policy,
    size: usize,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    match policy {
        Policy::Two => find_removable_2matching(g, k, budget),
        Policy::HalfDelta => find_half_delta_matching(g, k, budget),
        Policy::HighK => find_matching_high_k(g, k, budget),
        Policy::OneDelta => find_one_removable_delta(g, size, budget),
        Policy::HalfNMin => find_one_removable_minhalf(g, budget),
        Policy::TwoNearDelta => find_two_removable_near_delta(g, budget),
        Policy::Exact => {
            if !has_connectivity(g, k) {
                return Err(FinderError::PreconditionViolated {
                    reason: format!("graph is not {k}-connected"),
                });
            }
            match bounded_exact_search(g, k, size, budget) {
                SearchOutcome::Found(m) => Ok(FinderOutcome::Matching(m)),
                SearchOutcome::Exhausted => Err(FinderError::NotFound {
                    graph6: write_graph6(g),
                }),
                SearchOutcome::BudgetExhausted => Err(FinderError::BudgetExhausted),
            }
        }
    }
}

fn check_certificate(g: &Graph, k: usize, m: &Matching, word: &str) -> Result<(), Failure> {
    let kept = g
        .delete_matching(m)
        .map(|h| has_connectivity(&h, k))
        .unwrap_or(false);
    if kept {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "{word}: finder returned a matching that fails the removal re-check"
        )))
    }
}

fn cmd_oracle(input: &InputArgs, k: usize, budget: &SearchBudget) -> Result<u8, Failure> {
    let graphs = require_graphs(input, "oracle")?;
    let mut exit = 0u8;
    let mut out = io::stdout().lock();
    for g in &graphs {
        let word = write_graph6(g);
        let result = max_removable_matching(g, k, budget)
            .map_err(|e| Failure::Precondition(format!("{word}: {e}")))?;
        if !result.exhaustive {
            exit = 4;
        }
        let mut doc = serde_json::to_value(&result).expect("oracle result serializes");
        doc["graph6"] = Value::String(word);
        emit(&mut out, &doc)?;
    }
    Ok(exit)
}

enum SweepKind {
    Theorem(String),
    Conjecture(String),
}

fn cmd_sweep(
    kind: SweepKind,
    family: &FamilyArgs,
    side_file: Option<&Path>,
    budget: &SearchBudget,
    no_timing: bool,
) -> Result<u8, Failure> {
    let params = SweepParams {
        k: family.k,
        delta: family.delta,
        n_min: family.n_min,
        n_max: family.n_max,
    };
    let source = match load_graphs(&family.input)? {
        Some(graphs) => graphs,
        None => enumerated_source(family.n_min, family.n_max)?,
    };
    let mut report = match &kind {
        SweepKind::Theorem(id) => verify_theorem(id, &params, &source, budget),
        SweepKind::Conjecture(id) => hunt_conjecture(id, &params, &source, budget),
    }
    .map_err(verify_failure)?;
    if no_timing {
        report.wall_time_ms = None;
    }
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    if let Some(path) = side_file {
        write_lines(path, &report.counterexamples)?;
    }
    Ok(if report.counterexamples.is_empty() { 0 } else { 3 })
}

fn cmd_fkd(
    input: &InputArgs,
    k: usize,
    delta: usize,
    n_max: usize,
    witness_file: Option<&Path>,
    budget: &SearchBudget,
) -> Result<u8, Failure> {
    let source = match load_graphs(input)? {
        Some(graphs) => graphs,
        None => enumerated_source(1, n_max)?,
    };
    let table = empirical_f(k, delta, n_max, &source, budget).map_err(verify_failure)?;
    println!("{}", serde_json::to_string(&table).expect("table serializes"));
    if let Some(path) = witness_file {
        write_lines(path, &table.witnesses)?;
    }
    Ok(0)
}

fn write_lines(path: &Path, lines: &[String]) -> Result<(), Failure> {
    let mut body = lines.join("\n");
    if !body.is_empty() {
        body.push('\n');
    }
    fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn verify_failure(e: VerifyError) -> Failure {
    match e {
        VerifyError::UnknownTheorem { .. } | VerifyError::UnknownConjecture { .. } => {
            Failure::Usage(e.to_string())
        }
        VerifyError::BadParams { .. } | VerifyError::EmptyFamily => {
            Failure::Precondition(e.to_string())
        }
        VerifyError::BudgetExhausted { .. } => Failure::Budget(e.to_string()),
        VerifyError::InternalBug { .. } => Failure::Internal(e.to_string()),
    }
}
