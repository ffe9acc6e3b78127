//! Command-line front end: solve DIMACS instances in four parameter
//! modes, inspect bounds, decompositions and reduction traces, generate
//! seeded corpora, and run the oracle verification sweep.
//!
//! Exit status for `solve`: 0 = yes, 1 = no, 2 = error. `verify` exits 1
//! when any check fails and prints the failing seeds.

mod dimacs;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use vcover::graph::{Graph, VertexId};
use vcover::reduce::{Budget, ReductionStep};
use vcover::solver::{self, ParamMode, SolveReport};
use vcover::{gallai, lpvc, matching, oracle, reduce};

/// Environment variable overriding the default brute-force oracle cap.
const ORACLE_CAP_VAR: &str = "VCOVER_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "vcover",
    version,
    about = "Exact vertex cover solving by branch-and-reduce above the Lovasz-Plummer bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a DIMACS instance in one of the four parameter modes.
    Solve {
        path: PathBuf,
        /// vc: budget k; agvc: MM + param; vcal: ceil(LP) + param;
        /// vcalp: (2LP - MM) + param
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// The budget (vc) or the excess above the mode's lower bound.
        #[arg(long)]
        param: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Print MM, LP, the Lovasz-Plummer bound, and (within the oracle
    /// cap) the exact optimum.
    Bounds {
        path: PathBuf,
        /// Brute-force oracle cap (default 20, or VCOVER_ORACLE_CAP).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print the Gallai-Edmonds decomposition.
    Decompose { path: PathBuf },
    /// Apply the reduction rules exhaustively and print the trace.
    Reduce {
        path: PathBuf,
        /// Classical vertex cover budget to reduce against.
        #[arg(long)]
        k: i64,
    },
    /// Write a seeded G(n, p) instance as a DIMACS file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep seeded random instances and check the solver against the
    /// brute-force oracles; prints failing seeds, exit 1 on any failure.
    Verify {
        /// Largest instance size in the sweep.
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Number of instances.
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Brute-force oracle cap (default 20, or VCOVER_ORACLE_CAP).
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Vc,
    Agvc,
    Vcal,
    Vcalp,
}

impl ModeArg {
    fn to_mode(self, param: i64) -> ParamMode {
        match self {
            ModeArg::Vc => ParamMode::Plain { k: param },
            ModeArg::Agvc => ParamMode::AboveMatching { excess: param },
            ModeArg::Vcal => ParamMode::AboveLp { excess: param },
            ModeArg::Vcalp => ParamMode::AboveLovaszPlummer { excess: param },
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModeArg::Vc => "vc",
            ModeArg::Agvc => "agvc",
            ModeArg::Vcal => "vcal",
            ModeArg::Vcalp => "vcalp",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            path,
            mode,
            param,
            format,
        } => cmd_solve(&path, mode, param, format),
        Command::Bounds { path, cap } => cmd_bounds(&path, cap),
        Command::Decompose { path } => cmd_decompose(&path),
        Command::Reduce { path, k } => cmd_reduce(&path, k),
        Command::Gen { n, p, seed, out } => cmd_gen(n, p, seed, &out),
        Command::Verify {
            n_max,
            samples,
            seed,
            jobs,
            cap,
        } => cmd_verify(n_max, samples, seed, jobs, cap),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let g = dimacs::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g)
}

/// External 1-based label of an internal vertex.
fn label(v: VertexId) -> u32 {
    v.0 + 1
}

fn label_set(set: &BTreeSet<VertexId>) -> String {
    let labels: Vec<String> = set.iter().map(|&v| label(v).to_string()).collect();
    labels.join(" ")
}

fn oracle_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(ORACLE_CAP_VAR)
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(oracle::OPT_CAP)
}

fn cmd_solve(path: &Path, mode: ModeArg, param: i64, format: FormatArg) -> Result<ExitCode> {
    if param < 0 {
        bail!("--param must be nonnegative");
    }
    let g = load_graph(path)?;
    let report = solver::solve_mode(&g, mode.to_mode(param));
    match format {
        FormatArg::Text => print!("{}", render_text(&report)),
        FormatArg::Json => println!("{}", render_json(&report, mode, param)),
    }
    Ok(ExitCode::from(u8::from(!report.answer)))
}

fn render_text(report: &SolveReport) -> String {
    let mut out = String::new();
    let b = &report.initial_bounds;
    writeln!(out, "answer: {}", if report.answer { "YES" } else { "NO" }).unwrap();
    if let Some(cert) = &report.certificate {
        writeln!(out, "certificate ({}): {}", cert.len(), label_set(cert)).unwrap();
    }
    writeln!(out, "matching-number: {}", b.matching_number).unwrap();
    writeln!(out, "lp: {}", b.lp).unwrap();
    writeln!(out, "lovasz-plummer-bound: {}", b.lovasz_plummer).unwrap();
    writeln!(out, "budget-k: {}", b.budget).unwrap();
    writeln!(out, "measure-k-hat: {}", b.measure).unwrap();
    writeln!(out, "nodes-visited: {}", report.nodes_visited).unwrap();
    writeln!(out, "max-depth: {}", report.max_depth).unwrap();
    let r = &report.reductions_applied;
    writeln!(
        out,
        "reductions: rule1={} rule2={} rule3={}",
        r.rule1, r.rule2, r.rule3
    )
    .unwrap();
    out
}

fn render_json(report: &SolveReport, mode: ModeArg, param: i64) -> serde_json::Value {
    let b = &report.initial_bounds;
    serde_json::json!({
        "answer": report.answer,
        "certificate": report
            .certificate
            .as_ref()
            .map(|cert| cert.iter().map(|&v| label(v)).collect::<Vec<u32>>()),
        "nodes_visited": report.nodes_visited,
        "max_depth": report.max_depth,
        "reductions": {
            "rule1": report.reductions_applied.rule1,
            "rule2": report.reductions_applied.rule2,
            "rule3": report.reductions_applied.rule3,
        },
        "bounds": {
            "matching_number": b.matching_number,
            "lp": b.lp.to_string(),
            "lp_decimal": b.lp.as_f64(),
            "lovasz_plummer": b.lovasz_plummer,
            "k": b.budget,
            "k_hat": b.measure,
        },
        "mode": mode.name(),
        "parameter": param,
    })
}

fn cmd_bounds(path: &Path, cap: Option<usize>) -> Result<ExitCode> {
    let g = load_graph(path)?;
    let budget = Budget::for_graph(&g, 0);
    println!("matching-number: {}", budget.mm);
    println!("lp: {}", budget.lp);
    println!("lovasz-plummer-bound: {}", budget.lovasz_plummer());
    let cap = oracle_cap(cap);
    if g.vertex_count() <= cap {
        let (opt, _) = oracle::brute_opt_with_cap(&g, cap).expect("cap checked");
        println!("opt: {opt}");
        let chain_ok = 2 * budget.mm <= budget.lp.doubled()
            && budget.lp.doubled() <= 2 * budget.lovasz_plummer()
            && budget.lovasz_plummer() <= opt as i64;
        if !chain_ok {
            bail!(
                "internal error: lower-bound chain violated (mm={} lp={} bound={} opt={})",
                budget.mm,
                budget.lp,
                budget.lovasz_plummer(),
                opt
            );
        }
    } else {
        println!("opt: skipped (instance above oracle cap {cap})");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(path: &Path) -> Result<ExitCode> {
    let g = load_graph(path)?;
    let d = gallai::decompose(&g);
    println!("o: {}", label_set(&d.exposable));
    println!("i: {}", label_set(&d.boundary));
    println!("p: {}", label_set(&d.perfectly_matched));
    let comps: Vec<String> = d
        .exposable_components
        .iter()
        .map(|c| format!("[{}]", label_set(c)))
        .collect();
    println!("o-components: {}", comps.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(path: &Path, k: i64) -> Result<ExitCode> {
    if k < 0 {
        bail!("--k must be nonnegative");
    }
    let g = load_graph(path)?;
    let budget = Budget::for_graph(&g, k);
    let (reduced, final_budget, trace) = reduce::reduce_exhaustively(g, budget);
    for (i, step) in trace.steps.iter().enumerate() {
        let line = match step {
            ReductionStep::Rule1 { ones, zeros } => format!(
                "rule1 ones={{{}}} zeros={{{}}}",
                label_set(ones),
                label_set(zeros)
            ),
            ReductionStep::Rule2 {
                witness,
                neighborhood,
            } => format!(
                "rule2 witness={{{}}} neighborhood={{{}}}",
                label_set(witness),
                label_set(neighborhood)
            ),
            ReductionStep::Rule3 {
                witness,
                neighborhood,
                merged,
            } => format!(
                "rule3 witness={{{}}} neighborhood={{{}}} merged={}",
                label_set(witness),
                label_set(neighborhood),
                label(*merged)
            ),
            ReductionStep::BranchPick { picked } => {
                format!("branch picked={{{}}}", label_set(picked))
            }
        };
        println!("step {}: {}", i + 1, line);
    }
    println!(
        "final: vertices={} edges={} k={} mm={} lp={} measure={}",
        reduced.vertex_count(),
        reduced.edge_count(),
        final_budget.k,
        final_budget.mm,
        final_budget.lp,
        final_budget.measure()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(n: usize, p: f64, seed: u64, out: &Path) -> Result<ExitCode> {
    if !(0.0..=1.0).contains(&p) {
        bail!("--p must lie in [0, 1]");
    }
    let g = oracle::random_graph(n, p, seed);
    let mut text = format!("c G(n,p) instance: n={n} p={p} seed={seed}\n");
    text.push_str(&dimacs::serialize(&g));
    std::fs::write(out, text).with_context(|| format!("writing {}", out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    n_max: usize,
    samples: usize,
    seed: u64,
    jobs: Option<usize>,
    cap: Option<usize>,
) -> Result<ExitCode> {
    let cap = oracle_cap(cap);
    if n_max > cap {
        bail!("--n-max {n_max} exceeds the oracle cap {cap}");
    }
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }

    struct Failure {
        n: usize,
        p: f64,
        seed: u64,
        what: String,
    }

    let specs: Vec<(usize, f64, u64)> = (0..samples as u64)
        .map(|i| {
            let n = 1 + (i as usize % n_max);
            let p = [0.2, 0.4, 0.6][(i / n_max as u64) as usize % 3];
            (n, p, seed.wrapping_add(i))
        })
        .collect();

    let failures: Vec<Failure> = specs
        .par_iter()
        .flat_map_iter(|&(n, p, inst_seed)| {
            let g = oracle::random_graph(n, p, inst_seed);
            let mut bad: Vec<Failure> = Vec::new();
            let mut fail = |what: String| {
                bad.push(Failure {
                    n,
                    p,
                    seed: inst_seed,
                    what,
                });
            };

            let (opt, _) = oracle::brute_opt_with_cap(&g, cap).expect("n_max <= cap");
            let budget = Budget::for_graph(&g, 0);
            if !(2 * budget.mm <= budget.lp.doubled()
                && budget.lp.doubled() <= 2 * budget.lovasz_plummer()
                && budget.lovasz_plummer() <= opt as i64)
            {
                fail("lower-bound chain violated".into());
            }

            for k in 0..=n as i64 {
                let rep = solver::solve(&g, k);
                if rep.answer != (k >= opt as i64) {
                    fail(format!("answer disagrees with the oracle at k={k}"));
                }
                if let Some(cert) = &rep.certificate {
                    if !(g.is_vertex_cover(cert) && cert.len() as i64 <= k) {
                        fail(format!("invalid certificate at k={k}"));
                    }
                }
            }

            let (reduced, _, _) =
                reduce::reduce_exhaustively(g.clone(), Budget::for_graph(&g, n as i64));
            if !reduced.is_empty() && reduced.vertex_count() <= oracle::SURPLUS_CAP {
                let (s, _) = oracle::brute_surplus(&reduced).expect("within cap");
                if s < 2 {
                    fail(format!("reduced graph has surplus {s}"));
                }
            }

            if n <= oracle::GALLAI_CAP {
                let d = gallai::decompose(&g);
                if d != oracle::brute_gallai_edmonds(&g).expect("within cap") {
                    fail("decomposition disagrees with the oracle".into());
                }
            }

            if g.vertex_count() <= oracle::LP_CAP
                && lpvc::lp_value(&g) != oracle::brute_lp(&g).expect("within cap")
            {
                fail("LP value disagrees with the oracle".into());
            }
            if g.vertex_count() <= oracle::MATCHING_CAP
                && matching::matching_number(&g)
                    != oracle::brute_matching_number(&g).expect("within cap")
            {
                fail("matching number disagrees with the oracle".into());
            }

            bad.into_iter()
        })
        .collect();

    let failed_instances: BTreeSet<u64> = failures.iter().map(|f| f.seed).collect();
    println!(
        "verified {} instances (n <= {n_max}, p in {{0.2, 0.4, 0.6}}): {} ok, {} failed",
        samples,
        samples - failed_instances.len(),
        failed_instances.len()
    );
    for f in &failures {
        println!(
            "fail: n={} p={} seed={:#x}: {}",
            f.n, f.p, f.seed, f.what
        );
    }
    if failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
