//! Command-line front end: exact independent-set counts, named graph
//! constructions, criticality reports, isomorphism-free enumeration, and
//! exhaustive verification, with graph6 on stdin/stdout and JSON reports.
//!
//! Exit codes: 0 success (or a met expectation), 1 verification failure,
//! 2 usage error, 3 budget exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use indsets::counting::independence_vector;
use indsets::criticality::{
    criticality, decompose_critical_2, find_section5_patterns, Decomposition2,
};
use indsets::enumeration::{enumerate, enumerate_shard, partition_work, EnumSpec, ShardSpec};
use indsets::verifier::{self, Budget, SuiteConfig, Verdict};
use indsets::{constructions, graph6, Error, Graph};

const EXIT_VERIFICATION_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "indsets",
    version,
    about = "Exact independent-set counting and extremal verification for small graphs"
)]
struct Cli {
    /// Cap the worker-thread count (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count independent sets in graph6 inputs.
    Count(CountArgs),
    /// Emit a named graph family as graph6.
    Construct(ConstructArgs),
    /// Criticality reports (JSON) for graph6 inputs.
    Critical(CriticalArgs),
    /// Enumerate isomorphism classes as graph6 lines.
    Enumerate(EnumerateArgs),
    /// Run a verification check or suite and emit JSON reports.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CountArgs {
    /// Count independent sets of this size.
    #[arg(long, conflicts_with = "all")]
    t: Option<usize>,
    /// Report the full count vector and total instead.
    #[arg(long)]
    all: bool,
    /// Input file of graph6 lines; stdin when omitted or "-".
    input: Option<String>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Vertex count n (bipartite-style families).
    #[arg(long)]
    n: Option<usize>,
    /// Minimum degree / small-part size.
    #[arg(long)]
    delta: Option<usize>,
    /// Path/cycle/empty length k.
    #[arg(long)]
    k: Option<usize>,
    /// Part sizes for multipartite, e.g. "2,2,1".
    #[arg(long)]
    parts: Option<String>,
    /// Inside edges for extremal_plus, e.g. "0-1,1-2".
    #[arg(long)]
    inside: Option<String>,
    /// graph6 operands for disjoint_union.
    #[arg(long)]
    first: Option<String>,
    #[arg(long)]
    second: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    CompleteBipartite,
    ExtremalPlus,
    Windmill,
    Path,
    Cycle,
    Empty,
    Multipartite,
    ConjectureMultipartite,
    DisjointUnion,
}

#[derive(Args)]
struct CriticalArgs {
    #[arg(long)]
    delta: usize,
    /// Attach the delta=2 structural decomposition.
    #[arg(long)]
    decompose: bool,
    /// Attach the delta=3 two-triangle rewiring patterns.
    #[arg(long)]
    patterns: bool,
    /// Input file of graph6 lines; stdin when omitted or "-".
    input: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    delta: usize,
    /// Require minimum degree exactly delta instead of at least delta.
    #[arg(long)]
    exact_min_degree: bool,
    #[arg(long)]
    connected: bool,
    /// Edge- and vertex-critical graphs only.
    #[arg(long)]
    critical: bool,
    #[arg(long)]
    vertex_critical: bool,
    #[arg(long)]
    max_edges: Option<usize>,
    /// Opt in to the n = 10 budget.
    #[arg(long)]
    allow_n10: bool,
    /// Print only the class count.
    #[arg(long)]
    count: bool,
    #[arg(long, requires = "shard_count")]
    shard_index: Option<usize>,
    #[arg(long, requires = "shard_index")]
    shard_count: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: size_t, equality_class, vertex_critical_strict,
    /// no_high_degree_equality, total_count, monotone_step,
    /// deletion_identity.
    #[arg(long, conflicts_with = "suite")]
    check: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Expected verdict; the process succeeds when it is met.
    #[arg(long, value_enum, default_value_t = ExpectArg::Holds)]
    expect: ExpectArg,
    #[arg(long)]
    max_classes: Option<usize>,
    #[arg(long)]
    allow_n10: bool,
    /// Abort with the budget exit code once this much wall time has passed.
    #[arg(long)]
    timeout_seconds: Option<f64>,
    /// JSON suite configuration file; runs every item.
    #[arg(long)]
    suite: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    Holds,
    Violated,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        // ignore failure if a pool already exists (e.g. in tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(match err {
                Error::BudgetExceeded(_) => EXIT_BUDGET,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(command: &Command) -> Result<u8, Error> {
    match command {
        Command::Count(args) => cmd_count(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Critical(args) => cmd_critical(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Reads graph6 lines from the file or stdin, tagging errors with their
/// 1-based line number.
fn read_graphs(input: &Option<String>) -> Result<Vec<Graph>, Error> {
    let text = match input.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Graph6(format!("stdin: {}", e)))?;
            buf
        }
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Error::Graph6(format!("{}: {}", path, e)))?
        }
    };
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g =
            graph6::decode(line).map_err(|e| Error::Graph6(format!("line {}: {}", idx + 1, e)))?;
        out.push(g);
    }
    Ok(out)
}

fn cmd_count(args: &CountArgs) -> Result<u8, Error> {
    if args.t.is_none() && !args.all {
        return Err(Error::InvalidSpec("pass --t SIZE or --all".into()));
    }
    let graphs = read_graphs(&args.input)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        let v = independence_vector(g)?;
        if let Some(t) = args.t {
            writeln!(out, "{}", v.get(t)).map_err(io_err)?;
        } else {
            let counts: Vec<String> = v.counts().iter().map(u64::to_string).collect();
            writeln!(out, "{} total={}", counts.join(","), v.total()?).map_err(io_err)?;
        }
    }
    Ok(0)
}

fn io_err(e: io::Error) -> Error {
    Error::Internal(format!("write failed: {}", e))
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, Error> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (a, b) = p
                .trim()
                .split_once('-')
                .ok_or_else(|| Error::InvalidSpec(format!("bad edge '{}', expected U-V", p)))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("bad vertex '{}'", x)))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

fn cmd_construct(args: &ConstructArgs) -> Result<u8, Error> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| Error::InvalidSpec(format!("--{} is required for this family", name)))
    };
    let g = match args.family {
        Family::CompleteBipartite => {
            let n = need(args.n, "n")?;
            let delta = need(args.delta, "delta")?;
            if delta > n {
                return Err(Error::InvalidSpec("delta must be at most n".into()));
            }
            constructions::complete_bipartite(delta, n - delta)?
        }
        Family::ExtremalPlus => {
            let n = need(args.n, "n")?;
            let delta = need(args.delta, "delta")?;
            let inside = match &args.inside {
                Some(s) => parse_pairs(s)?,
                None => Vec::new(),
            };
            constructions::extremal_plus_inside_edges(delta, n, &inside)?
        }
        Family::Windmill => constructions::windmill(need(args.n, "n")?)?,
        Family::Path => constructions::path(need(args.k, "k")?)?,
        Family::Cycle => constructions::cycle(need(args.k, "k")?)?,
        Family::Empty => constructions::empty_graph(need(args.k, "k")?)?,
        Family::Multipartite => {
            let spec = args
                .parts
                .as_deref()
                .ok_or_else(|| Error::InvalidSpec("--parts is required".into()))?;
            let parts: Vec<usize> = spec
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidSpec(format!("bad part size '{}'", p)))
                })
                .collect::<Result<_, _>>()?;
            constructions::complete_multipartite(&parts)?
        }
        Family::ConjectureMultipartite => {
            constructions::conjecture_multipartite(need(args.n, "n")?, need(args.delta, "delta")?)?
        }
        Family::DisjointUnion => {
            let a = args
                .first
                .as_deref()
                .ok_or_else(|| Error::InvalidSpec("--first graph6 is required".into()))?;
            let b = args
                .second
                .as_deref()
                .ok_or_else(|| Error::InvalidSpec("--second graph6 is required".into()))?;
            constructions::disjoint_union(&graph6::decode(a)?, &graph6::decode(b)?)?
        }
    };
    println!("{}", graph6::encode(&g)?);
    Ok(0)
}

fn decomposition_json(d: &Decomposition2) -> serde_json::Value {
    match d {
        Decomposition2::Cycle => json!({ "kind": "cycle" }),
        Decomposition2::PathSplit { y1, y2, v1, v2 } => {
            let y2_vertices: Vec<usize> = (0..64).filter(|v| y2 & (1u64 << v) != 0).collect();
            json!({
                "kind": "path_split",
                "y1": y1,
                "y2": y2_vertices,
                "v1": v1,
                "v2": v2,
            })
        }
    }
}

fn cmd_critical(args: &CriticalArgs) -> Result<u8, Error> {
    let graphs = read_graphs(&args.input)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        let report = criticality(g, args.delta)?;
        let mut obj = serde_json::to_value(&report)?;
        let map = obj.as_object_mut().expect("report serializes to an object");
        map.insert("graph6".into(), json!(graph6::encode(g)?));
        if args.decompose {
            if args.delta != 2 {
                return Err(Error::InvalidSpec("--decompose requires --delta 2".into()));
            }
            let d = decompose_critical_2(g)?;
            map.insert("decomposition".into(), decomposition_json(&d));
        }
        if args.patterns {
            if args.delta != 3 {
                return Err(Error::InvalidSpec("--patterns requires --delta 3".into()));
            }
            let patterns = find_section5_patterns(g)?;
            map.insert("patterns".into(), serde_json::to_value(&patterns)?);
        }
        writeln!(out, "{}", serde_json::to_string(&obj)?).map_err(io_err)?;
    }
    Ok(0)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<u8, Error> {
    let mut spec = EnumSpec::new(args.n, args.delta);
    spec.exact_min_degree = args.exact_min_degree;
    spec.connected_only = args.connected;
    spec.critical_only = args.critical;
    spec.vertex_critical_only = args.vertex_critical;
    spec.max_edges = args.max_edges;
    spec.allow_large = args.allow_n10;
    let classes = match (args.shard_index, args.shard_count) {
        (Some(index), Some(count)) => {
            if index >= count {
                return Err(Error::InvalidSpec(
                    "shard index must be below shard count".into(),
                ));
            }
            let shards: Vec<ShardSpec> = partition_work(&spec, count)?;
            enumerate_shard(&shards[index])?
        }
        _ => enumerate(&spec)?,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if args.count {
        writeln!(out, "{}", classes.len()).map_err(io_err)?;
    } else {
        for g in &classes {
            writeln!(out, "{}", graph6::encode(g)?).map_err(io_err)?;
        }
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Error> {
    let budget = Budget {
        max_classes: args.max_classes,
        allow_large: args.allow_n10,
    };
    let start = Instant::now();
    let over_time = |start: &Instant| -> Result<(), Error> {
        if let Some(limit) = args.timeout_seconds {
            if start.elapsed().as_secs_f64() > limit {
                return Err(Error::BudgetExceeded(format!(
                    "wall clock exceeded {} seconds",
                    limit
                )));
            }
        }
        Ok(())
    };

    if let Some(path) = &args.suite {
        let text =
            fs::read_to_string(path).map_err(|e| Error::InvalidSpec(format!("{}: {}", path, e)))?;
        let mut config: SuiteConfig = serde_json::from_str(&text)?;
        if args.max_classes.is_some() {
            config.budget.max_classes = args.max_classes;
        }
        if args.allow_n10 {
            config.budget.allow_large = true;
        }
        let result = verifier::run_suite(&config)?;
        over_time(&start)?;
        println!("{}", serde_json::to_string_pretty(&result)?);
        return Ok(if result.passed {
            0
        } else {
            EXIT_VERIFICATION_FAILURE
        });
    }

    let check = args
        .check
        .as_deref()
        .ok_or_else(|| Error::InvalidSpec("pass --check NAME or --suite FILE".into()))?;
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| Error::InvalidSpec(format!("--{} is required for this check", name)))
    };
    let expect = match args.expect {
        ExpectArg::Holds => Verdict::Holds,
        ExpectArg::Violated => Verdict::Violated,
    };
    let (mut report, passed) = match check {
        "size_t" => {
            let mut r = verifier::check_size_t(
                need(args.n, "n")?,
                need(args.delta, "delta")?,
                need(args.t, "t")?,
                &budget,
            )?;
            r.runtime_seconds = Some(start.elapsed().as_secs_f64());
            let ok = r.verdict == expect;
            (serde_json::to_value(&r)?, ok)
        }
        "equality_class" => {
            let mut r = verifier::check_equality_class(
                need(args.n, "n")?,
                need(args.delta, "delta")?,
                need(args.t, "t")?,
                &budget,
            )?;
            r.runtime_seconds = Some(start.elapsed().as_secs_f64());
            let ok = r.matches.unwrap_or(true);
            (serde_json::to_value(&r)?, ok)
        }
        "vertex_critical_strict" => {
            let mut r = verifier::check_vertex_critical_strict(
                need(args.n, "n")?,
                need(args.delta, "delta")?,
                need(args.t, "t")?,
                &budget,
            )?;
            r.runtime_seconds = Some(start.elapsed().as_secs_f64());
            let ok = r.verdict == expect;
            (serde_json::to_value(&r)?, ok)
        }
        "no_high_degree_equality" => {
            let mut r = verifier::check_no_high_degree_equality(need(args.n, "n")?, &budget)?;
            r.runtime_seconds = Some(start.elapsed().as_secs_f64());
            let ok = r.verdict == expect;
            (serde_json::to_value(&r)?, ok)
        }
        "total_count" => {
            let mut r = verifier::check_total_count(
                need(args.n, "n")?,
                need(args.delta, "delta")?,
                &budget,
            )?;
            r.runtime_seconds = Some(start.elapsed().as_secs_f64());
            let ok = r.verdict == expect;
            (serde_json::to_value(&r)?, ok)
        }
        "monotone_step" => {
            let mut r = verifier::check_monotone_step(
                need(args.n, "n")?,
                need(args.delta, "delta")?,
                &budget,
            )?;
            r.runtime_seconds = Some(start.elapsed().as_secs_f64());
            let ok = r.verdict == expect;
            (serde_json::to_value(&r)?, ok)
        }
        "deletion_identity" => {
            let mut r = verifier::check_deletion_identity(
                need(args.n, "n")?,
                need(args.delta, "delta")?,
                &budget,
            )?;
            r.runtime_seconds = Some(start.elapsed().as_secs_f64());
            let ok = r.verdict == expect;
            (serde_json::to_value(&r)?, ok)
        }
        other => {
            return Err(Error::InvalidSpec(format!("unknown check '{}'", other)));
        }
    };
    over_time(&start)?;
    if let Some(map) = report.as_object_mut() {
        map.insert("expected".into(), serde_json::to_value(expect)?);
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if passed { 0 } else { EXIT_VERIFICATION_FAILURE })
}
