//! Command-line front door: compute permutation Tutte polynomials and
//! classical Tutte polynomials, verify the identity/inequality suites, scan
//! the H(a,b,c) family for counterexamples, run the free-tree survey, and
//! produce seeded Monte Carlo estimates.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use permutte::classic_tutte::{
    activities_poly, decompose_check, decompose_summands, identity_labeling, tutte_del_con,
    tutte_subset_oracle,
};
use permutte::graph::{
    all_bipartite_graphs, parse_graph_auto, random_connected_multigraph, BipGraph, GraphDoc,
};
use permutte::perm_tutte::{brute_force_poly, monte_carlo_eval, Engine, EvalPoint};
use permutte::ratpoly::{parse_rational, Rational};
use permutte::survey::{survey, tree_decompose};
use permutte::verify::{
    check_gluing, check_identities, check_inequality_suite, counterexample_scan, CheckReport,
    CheckStatus,
};
use permutte::Error;

#[derive(Parser)]
#[command(
    name = "permutte",
    about = "Permutation Tutte polynomials, Tutte polynomials, and their identities in exact arithmetic",
    version
)]
struct Cli {
    /// Number of worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation Tutte polynomial of a bipartite graph
    Compute(ComputeArgs),
    /// Classical Tutte polynomial of a multigraph
    Tutte(TutteArgs),
    /// Run an identity or inequality suite; NDJSON reports on stdout
    Verify(VerifyArgs),
    /// Scan the H(a,b,c) family for P_x < 1 counterexamples
    Scan(ScanArgs),
    /// Survey minimum P over free trees on m vertices (TSV row)
    Survey(SurveyArgs),
    /// Seeded Monte Carlo estimate of a permutation Tutte value
    Estimate(EstimateArgs),
    /// Decompose a tree into two balanced edge-disjoint subtrees
    Decompose(DecomposeArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph file (bipartite JSON or `bip a b` edge list)
    graph: String,
    /// Evaluate at a point "x,y" instead of printing the polynomial
    #[arg(long)]
    at: Option<String>,
    #[arg(long, value_enum, default_value_t = ComputeMethod::Auto)]
    method: ComputeMethod,
    /// Print the alternating number alt(H) instead
    #[arg(long)]
    alt: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComputeMethod {
    Auto,
    Brute,
    Recursive,
}

#[derive(Args)]
struct TutteArgs {
    /// Graph file (multigraph JSON or `multi n` edge list)
    graph: String,
    #[arg(long, value_enum, default_value_t = TutteMethod::Subset)]
    method: TutteMethod,
    /// Edge ranking for --method activities, e.g. "3,1,2" (default identity)
    #[arg(long)]
    labeling: Option<String>,
    /// With --method decompose, print each spanning tree's summand
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TutteMethod {
    Subset,
    Delcon,
    Activities,
    Decompose,
}

#[derive(Args)]
struct VerifyArgs {
    /// identities | inequalities | brylawski | gluing
    #[arg(value_enum)]
    target: VerifyTarget,
    /// Corpus bound: all bipartite graphs up to this many vertices
    #[arg(long, default_value_t = 6)]
    max_vertices: usize,
    /// Seed for randomized targets
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of random instances for randomized targets
    #[arg(long, default_value_t = 50)]
    count: usize,
    /// Check a single graph file instead of the corpus
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Identities,
    Inequalities,
    Brylawski,
    Gluing,
}

#[derive(Args)]
struct ScanArgs {
    /// Range of a, "lo..hi" inclusive (or a single value)
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long)]
    c: String,
    /// Evaluation parameter x, a rational like 2 or 29243/10000
    #[arg(long, default_value = "2")]
    x: String,
}

#[derive(Args)]
struct SurveyArgs {
    /// Number of tree vertices
    m: usize,
    /// Permit m beyond the surveyed range 2..=18
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct EstimateArgs {
    graph: String,
    /// Point "x,y" (floats)
    #[arg(long)]
    at: String,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Tree file (bipartite JSON or edge list)
    graph: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(cli.command) {
        Ok(violations) => {
            if violations == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::InvalidArgs(_)
        | Error::InvalidSpec
        | Error::UnknownVertex(_)
        | Error::DuplicateVertex(_)
        | Error::EdgeWithinSide(_, _)
        | Error::UnknownEdge(_) => 2,
        Error::Disconnected
        | Error::NotSpanningTree
        | Error::ContractLoop(_)
        | Error::NotALeaf(_)
        | Error::IncompatibleSides
        | Error::TooSmall
        | Error::NotSimple
        | Error::TooLarge(_)
        | Error::Budget(_) => 3,
    }
}

/// Runs a command; returns the number of violated checks (0 = all good).
fn run(command: Command) -> permutte::Result<usize> {
    match command {
        Command::Compute(args) => cmd_compute(args),
        Command::Tutte(args) => cmd_tutte(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Survey(args) => cmd_survey(args),
        Command::Estimate(args) => cmd_estimate(args),
        Command::Decompose(args) => cmd_decompose(args),
    }
}

fn load(path: &str) -> permutte::Result<GraphDoc> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    parse_graph_auto(&text)
}

fn parse_point(s: &str) -> permutte::Result<EvalPoint> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected \"x,y\", got `{s}`")))?;
    Ok(EvalPoint::new(parse_rational(x)?, parse_rational(y)?))
}

fn parse_float_point(s: &str) -> permutte::Result<(f64, f64)> {
    let pt = parse_point(s)?;
    let to_f = |r: &Rational| -> f64 {
        let num: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
        let den: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
        num / den
    };
    Ok((to_f(&pt.x), to_f(&pt.y)))
}

fn parse_range(s: &str) -> permutte::Result<std::ops::RangeInclusive<u32>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo
            .parse()
            .map_err(|_| Error::Parse(format!("bad range `{s}`")))?;
        let hi: u32 = hi
            .parse()
            .map_err(|_| Error::Parse(format!("bad range `{s}`")))?;
        Ok(lo..=hi)
    } else {
        let v: u32 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad range `{s}`")))?;
        Ok(v..=v)
    }
}

fn cmd_compute(args: ComputeArgs) -> permutte::Result<usize> {
    let h = load(&args.graph)?.bipartite()?;
    let engine = Engine::new();
    if args.alt {
        println!("{}", engine.alt(&h)?);
        return Ok(0);
    }
    if let Some(at) = &args.at {
        let pt = parse_point(at)?;
        let value = match args.method {
            ComputeMethod::Brute => brute_force_poly(&h)?.eval(&pt.x, &pt.y),
            _ => engine.evaluate(&h, &pt)?,
        };
        println!("{value}");
        return Ok(0);
    }
    let poly = match args.method {
        ComputeMethod::Brute => brute_force_poly(&h)?,
        _ => engine.compute_poly(&h)?,
    };
    println!("{poly}");
    Ok(0)
}

fn cmd_tutte(args: TutteArgs) -> permutte::Result<usize> {
    let g = load(&args.graph)?.multigraph()?;
    match args.method {
        TutteMethod::Subset => println!("{}", tutte_subset_oracle(&g)?),
        TutteMethod::Delcon => println!("{}", tutte_del_con(&g)),
        TutteMethod::Activities => {
            let labeling = match &args.labeling {
                None => identity_labeling(&g),
                Some(s) => s
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad labeling entry `{t}`")))
                    })
                    .collect::<permutte::Result<Vec<u32>>>()?,
            };
            println!("{}", activities_poly(&g, &labeling)?);
        }
        TutteMethod::Decompose => {
            let engine = Engine::new();
            if args.verbose {
                for (tree, poly) in decompose_summands(&g, &engine)? {
                    println!("T={tree:?}: {poly}");
                }
            }
            let (classic, decomposed) = decompose_check(&g, &engine)?;
            println!("{decomposed}");
            if classic != decomposed {
                eprintln!("MISMATCH against deletion-contraction: {classic}");
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn emit_reports(reports: &[CheckReport]) -> usize {
    let mut violations = 0;
    for report in reports {
        println!("{}", report.to_json());
        if report.status == CheckStatus::Violated {
            violations += 1;
        }
    }
    violations
}

fn cmd_verify(args: VerifyArgs) -> permutte::Result<usize> {
    let engine = Engine::new();
    let mut reports: Vec<CheckReport> = Vec::new();
    let corpus: Vec<BipGraph> = match &args.graph {
        Some(path) => vec![load(path)?.bipartite()?],
        None => all_bipartite_graphs(args.max_vertices),
    };
    match args.target {
        VerifyTarget::Identities => {
            for (i, h) in corpus.iter().enumerate() {
                reports.extend(check_identities(&engine, h, &format!("#{i} {}", h.descriptor()))?);
            }
        }
        VerifyTarget::Inequalities => {
            for (i, h) in corpus.iter().enumerate() {
                reports.extend(check_inequality_suite(
                    &engine,
                    h,
                    &format!("#{i} {}", h.descriptor()),
                )?);
            }
        }
        VerifyTarget::Brylawski => {
            for (i, h) in corpus.iter().enumerate() {
                let label = format!("#{i} {}", h.descriptor());
                let m = h.num_vertices() as u32;
                for order in 0..m {
                    reports.push(CheckReport::eq(
                        format!("brylawski(h={order})"),
                        label.clone(),
                        permutte::verify::brylawski_sum(&engine, h, order)?,
                        Rational::from_integer(0.into()),
                    ));
                }
                for k in 0..=3 {
                    reports.push(CheckReport::eq(
                        format!("brylawski(h=m+{k})"),
                        label.clone(),
                        permutte::verify::brylawski_sum(&engine, h, m + k)?,
                        permutte::verify::brylawski_expected(&engine, h, m + k)?,
                    ));
                }
            }
            // graphic form on random connected multigraphs
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            for i in 0..args.count {
                let g = random_connected_multigraph(&mut rng, 1 + (i % 6));
                let m = g.num_edges() as u32;
                for order in 0..=m + 2 {
                    reports.push(CheckReport::eq(
                        format!("brylawski-graphic(h={order})"),
                        format!("random#{i} {}", g.descriptor()),
                        permutte::verify::brylawski_graph_sum(&g, order)?,
                        permutte::verify::brylawski_graph_expected(&g, order)?,
                    ));
                }
            }
        }
        VerifyTarget::Gluing => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut done = 0;
            while done < args.count {
                let n1 = 2 + rng.gen_range(0..5);
                let t1 = random_tree(&mut rng, n1);
                let n2 = 2 + rng.gen_range(0..5);
                let t2 = random_tree(&mut rng, n2);
                let r1 = *pick(&mut rng, &t1.vertices().collect::<Vec<_>>());
                let side = t1.side_of(r1)?;
                let candidates: Vec<u32> = t2
                    .vertices()
                    .filter(|&v| t2.side_of(v).unwrap() == side)
                    .collect();
                if candidates.is_empty() {
                    continue;
                }
                let r2 = *pick(&mut rng, &candidates);
                let x = if rng.gen_bool(0.5) {
                    Rational::from_integer(2.into())
                } else {
                    Rational::from_integer(3.into())
                };
                reports.extend(check_gluing(&engine, &t1, r1, &t2, r2, &x)?);
                done += 1;
            }
        }
    }
    let violations = emit_reports(&reports);
    eprintln!(
        "{} checks, {} violated, {} not applicable",
        reports.len(),
        violations,
        reports
            .iter()
            .filter(|r| r.status == CheckStatus::NotApplicable)
            .count()
    );
    Ok(violations)
}

fn pick<'a, T, R: Rng>(rng: &mut R, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

fn random_tree<R: Rng>(rng: &mut R, n: usize) -> BipGraph {
    let mut edges = Vec::new();
    for v in 2..=n as u32 {
        edges.push((rng.gen_range(1..v), v));
    }
    // 2-color by BFS
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in &edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut color = vec![u8::MAX; n + 1];
    color[1] = 0;
    let mut queue = std::collections::VecDeque::from([1u32]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u as usize] {
            if color[w as usize] == u8::MAX {
                color[w as usize] = 1 - color[u as usize];
                queue.push_back(w);
            }
        }
    }
    BipGraph::new(
        (1..=n as u32).filter(|&v| color[v as usize] == 0).collect(),
        (1..=n as u32).filter(|&v| color[v as usize] == 1).collect(),
        edges,
    )
    .expect("random tree is bipartite")
}

fn cmd_scan(args: ScanArgs) -> permutte::Result<usize> {
    let x = parse_rational(&args.x)?;
    let reports = counterexample_scan(
        parse_range(&args.a)?,
        parse_range(&args.b)?,
        parse_range(&args.c)?,
        &x,
    );
    for report in &reports {
        println!("{}", report.to_json());
    }
    eprintln!("{} violating specs", reports.len());
    // scan exists to find violations: finding them is success
    Ok(0)
}

fn cmd_survey(args: SurveyArgs) -> permutte::Result<usize> {
    if args.m > 18 && !args.allow_large {
        return Err(Error::InvalidArgs(
            "survey beyond m = 18 needs --allow-large".into(),
        ));
    }
    let engine = Engine::new();
    let row = survey(args.m, &engine)?;
    println!("{}", row.tsv_line());
    Ok(0)
}

fn cmd_estimate(args: EstimateArgs) -> permutte::Result<usize> {
    let h = load(&args.graph)?.bipartite()?;
    let (x, y) = parse_float_point(&args.at)?;
    let est = monte_carlo_eval(&h, x, y, args.samples, args.seed);
    println!(
        "{:.6} ± {:.6} (samples={}, seed={})",
        est.mean, est.std_error, est.samples, est.seed
    );
    Ok(0)
}

fn cmd_decompose(args: DecomposeArgs) -> permutte::Result<usize> {
    let t = load(&args.graph)?.bipartite()?;
    let (h1, h2) = tree_decompose(&t)?;
    println!("{}", h1.to_json());
    println!("{}", h2.to_json());
    Ok(0)
}

