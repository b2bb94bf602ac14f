//! Command-line surface: solve and measure instance files, brute-force
//! them for comparison, fuzz the solver against the oracle, verify
//! potential tables, and emit random instances.

use clap::{Parser, Subcommand};
use hs3::families::{global_max, verify_table};
use hs3::fuzz::run_case;
use hs3::io;
use hs3::measure::{bundled_psi4, PsiTable};
use hs3::oracle::oracle_min_set;
use hs3::rules::Instance;
use hs3::solver::{solve, solve_minimum, SolveConfig};
use rayon::prelude::*;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hs3", version, about = "Exact 3-hitting-set solver with a verified branching analysis")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the instance has a hitting set within the budget
    Solve {
        file: PathBuf,
        /// Budget; overrides the k recorded in the file header
        #[arg(long)]
        k: Option<i64>,
        /// Explore the whole search tree instead of stopping at the first yes
        #[arg(long)]
        full_tree: bool,
        /// Print the hitting set on a yes answer
        #[arg(long)]
        cert: bool,
    },
    /// Report the minimum hitting set size via the branching solver
    Min { file: PathBuf },
    /// Report the minimum hitting set size via brute force
    Oracle { file: PathBuf },
    /// Differentially test the solver against the oracle on random instances
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
    },
    /// Check a potential table's properties and per-rule branching numbers
    VerifyMeasure {
        /// Table file (`psi <dhat>` header then `m c value` lines); the
        /// bundled max-degree-4 table when omitted
        #[arg(long)]
        table: Option<PathBuf>,
        /// Bound the worst branching number over all rules
        #[arg(long, default_value_t = 2.0409)]
        target: f64,
    },
    /// Emit a random instance file on stdout
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: usize,
        /// Probability that a sampled edge has two vertices
        #[arg(long, default_value_t = 0.5)]
        p2: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Budget recorded in the header; defaults to n
        #[arg(long)]
        k: Option<i64>,
    },
}

const OK: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("HS3_THREADS") {
        let Ok(threads) = threads.parse::<usize>() else {
            eprintln!("error: HS3_THREADS must be a thread count, got {threads:?}");
            return ExitCode::from(USAGE);
        };
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool is built once, before any parallel work");
    }
    let code = match Cli::parse().cmd {
        Cmd::Solve {
            file,
            k,
            full_tree,
            cert,
        } => cmd_solve(&file, k, full_tree, cert),
        Cmd::Min { file } => cmd_min(&file),
        Cmd::Oracle { file } => cmd_oracle(&file),
        Cmd::Fuzz { count, seed, max_n } => Ok(cmd_fuzz(count, seed, max_n)),
        Cmd::VerifyMeasure { table, target } => cmd_verify_measure(table.as_deref(), target),
        Cmd::Gen {
            n,
            edges,
            p2,
            seed,
            k,
        } => cmd_gen(n, edges, p2, seed, k),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn load(path: &std::path::Path) -> Result<Instance, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    io::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn join(vs: &[u32]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_solve(path: &std::path::Path, k: Option<i64>, full_tree: bool, cert: bool) -> Result<u8, String> {
    let inst = load(path)?;
    let k = k.unwrap_or(inst.k);
    let report = solve(
        &inst.graph,
        k,
        &SolveConfig {
            full_tree,
            ..SolveConfig::default()
        },
    );
    println!("decision={}", if report.decision { "yes" } else { "no" });
    println!("k={k}");
    println!("leaves={}", report.leaves);
    println!("max_depth={}", report.max_depth);
    if cert {
        if let Some(c) = &report.certificate {
            println!("cert={}", join(c));
        }
    }
    for v in &report.violations {
        println!("violation={v}");
    }
    Ok(if report.violations.is_empty() {
        OK
    } else {
        CHECK_FAILED
    })
}

fn cmd_min(path: &std::path::Path) -> Result<u8, String> {
    let inst = load(path)?;
    let (min, cert) = solve_minimum(&inst.graph, &SolveConfig::default());
    println!("min={min}");
    println!("cert={}", join(&cert));
    Ok(OK)
}

fn cmd_oracle(path: &std::path::Path) -> Result<u8, String> {
    let inst = load(path)?;
    let cert = oracle_min_set(&inst.graph, None).expect("uncapped search always finds a set");
    println!("min={}", cert.len());
    println!("cert={}", join(&cert));
    Ok(OK)
}

fn cmd_fuzz(count: usize, seed: u64, max_n: usize) -> u8 {
    let reports: Vec<_> = (0..count)
        .into_par_iter()
        .map(|i| run_case(i, seed, max_n))
        .collect();
    let mut failed = 0usize;
    for r in &reports {
        println!(
            "case={} seed={} n={} m={} min={} ok={}",
            r.index,
            r.seed,
            r.n,
            r.edges,
            r.min,
            r.ok()
        );
        for f in r.failures() {
            println!("case={} fail={f}", r.index);
            failed += 1;
        }
    }
    println!("cases={count}");
    println!("failures={failed}");
    if failed == 0 {
        OK
    } else {
        CHECK_FAILED
    }
}

fn cmd_verify_measure(table: Option<&std::path::Path>, target: f64) -> Result<u8, String> {
    let owned;
    let psi: &PsiTable = match table {
        None => bundled_psi4(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            owned = PsiTable::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            &owned
        }
    };
    println!("dhat={}", psi.dhat);
    let property_violations = psi.check_properties();
    for v in &property_violations {
        println!("property_violation={v}");
    }
    println!(
        "properties={}",
        if property_violations.is_empty() {
            "ok"
        } else {
            "fail"
        }
    );
    let reports = verify_table(psi);
    let mut vector_failures = 0usize;
    for r in &reports {
        match r.max_bn {
            None => println!("rule={} max=NA", r.rule),
            Some(max) => {
                let (v, tag) = r.worst.as_ref().expect("a max implies a witness");
                let entries = v
                    .0
                    .iter()
                    .map(|x| format!("{x:.4}"))
                    .collect::<Vec<_>>()
                    .join(",");
                println!(
                    "rule={} max={max:.4} vectors={} worst=({entries}) case=\"{tag}\"",
                    r.rule, r.distinct
                );
            }
        }
        for f in &r.failures {
            println!("vector_failure={f}");
            vector_failures += 1;
        }
        for n in &r.notes {
            println!("note={} {n}", r.rule);
        }
    }
    match global_max(&reports) {
        None => println!("global_max=NA"),
        Some(g) => println!("global_max={g:.4}"),
    }
    println!("target={target}");
    let pass = property_violations.is_empty()
        && vector_failures == 0
        && global_max(&reports).is_none_or(|g| g <= target + 0.005);
    println!("pass={pass}");
    Ok(if pass { OK } else { CHECK_FAILED })
}

fn cmd_gen(n: usize, edges: usize, p2: f64, seed: u64, k: Option<i64>) -> Result<u8, String> {
    let g = io::generate(&io::GenConfig {
        n,
        edge_count: edges,
        p2,
        seed,
    })
    .map_err(|e| e.to_string())?;
    print!("{}", io::serialize(&g, k.unwrap_or(n as i64)));
    Ok(OK)
}
