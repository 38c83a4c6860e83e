//! The `specert` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a verification found
//! violations, 3 the eigensolver did not converge.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::certifiers::{find_k_tree, find_win_violator_with, perfect_matching, WIN_N_CAP};
use crate::corpus::{all_graphs, connected_graphs_range};
use crate::error::{input, Error, Result};
use crate::families::{
    ktree_extremal, matching_extremal, matching_extremal_partition, phi_quartic, q_matching_extremal,
    quotient_b_pi, rho_matching_extremal, win_family, WinFamilyParams,
};
use crate::graph::{BipartiteGraph, Graph};
use crate::graph6::{from_graph6, read_stream, to_graph6};
use crate::spectral::{
    a_matrix, das_bound, hong_bound, largest_eigenvalue_dense, quotient_matrix, spectral_radius_with, SolverOptions,
    DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE,
};
use crate::verify::{
    self, BipartiteStream, HamiltonTheorem, MatchingTheorem, RunConfig, VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATIONS: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "specert", version, about = "Spectral conditions for spanning k-trees and perfect matchings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectral radius of A_a = aD + A with the Hong and Das bounds.
    Spectral {
        /// graph6 string, or `-` to read one graph per line from stdin.
        graph: String,
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Print an extremal family member as graph6.
    GenFamily {
        #[command(subcommand)]
        family: Family,
    },
    /// Closed-form spectral radius of the matching extremal graph.
    ClosedForm {
        kind: ClosedKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Produce a certificate for a graph.
    Certify {
        #[command(subcommand)]
        what: CertifyKind,
    },
    /// Run a verification harness and print its JSON report.
    Verify(VerifyArgs),
    /// The 4 x 4 quotient of A_a(K_{s+1,s} ∇₁ K_{n-s-1,n-s}).
    Quotient {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0.0)]
        a: f64,
    },
    /// Print all non-isomorphic graphs of one order as graph6.
    Corpus {
        #[arg(long)]
        n: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// K1 ∇ (K_{n-k-1} ∪ k K1).
    Ktree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// K_s ∇ (K_{n_1} ∪ ... ∪ K_{n_t}).
    Win {
        #[arg(long)]
        s: usize,
        /// Clique sizes, nonincreasing, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// K_{s+1,s} ∇₁ K_{n-s-1,n-s}, X on the first n vertices.
    Matching {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClosedKind {
    Rho,
    Q,
}

#[derive(Subcommand, Debug)]
enum CertifyKind {
    /// Spanning tree of maximum degree at most k, or null.
    Ktree {
        #[arg(long)]
        k: usize,
        graph: String,
    },
    /// Perfect matching or Hall violator.
    Matching {
        graph: String,
        /// Take X to be the first NX vertices instead of two-colouring.
        #[arg(long)]
        nx: Option<usize>,
    },
    /// Set S with c(G - S) > (k - 2)|S| + 2, or null.
    Win {
        #[arg(long)]
        k: usize,
        graph: String,
        #[arg(long, default_value_t = WIN_N_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Harness {
    Thm11,
    Thm12,
    Thm13,
    Thm14,
    Thm15,
    Lemma11,
    Lemma31,
    Lemma41,
    Lemma42,
    Bounds,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    harness: Harness,
    /// Write the JSON report here as well as to stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Write per-item rows as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "SPECERT_WORKERS")]
    workers: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    margin: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS)]
    max_iterations: usize,
    /// graph6 file (or `-` for stdin) instead of the built-in stream. For
    /// bipartite harnesses the first half of the vertices forms X.
    #[arg(long)]
    input: Option<String>,
    /// Corpus orders for thm11, thm12, lemma11 and bounds.
    #[arg(long)]
    min_n: Option<usize>,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[arg(long)]
    delta: Option<usize>,
    /// Part size for thm14/thm15; exhaustive up to 4, random above.
    #[arg(long, default_value_t = 4)]
    nx: usize,
    /// Number of random graphs (thm13, and thm14/thm15 with nx > 4).
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_s: usize,
    #[arg(long, default_value_t = 5)]
    max_t: usize,
    /// Random deeper deletions for lemma42.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Run lemma42 below its order guard.
    #[arg(long)]
    relax_guard: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Convergence { .. } => EXIT_NONCONVERGENCE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read_graphs(spec: &str, stdin: &mut dyn BufRead) -> Result<Vec<Graph>> {
    if spec == "-" {
        read_stream(stdin)
    } else {
        Ok(vec![from_graph6(spec.trim().as_bytes())?])
    }
}

fn read_input(path: &str, stdin: &mut dyn BufRead) -> Result<Vec<Graph>> {
    if path == "-" {
        read_stream(stdin)
    } else {
        read_stream(std::io::BufReader::new(std::fs::File::open(path)?))
    }
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, line: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{line}\n"))?,
        None => writeln!(out, "{line}")?,
    }
    Ok(())
}

fn dispatch(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Spectral { graph, a, tol } => {
            let opts = SolverOptions {
                tol,
                ..SolverOptions::default()
            };
            for g in read_graphs(&graph, stdin)? {
                let r = spectral_radius_with(&a_matrix(&g, a)?, &opts)?;
                let line = json!({
                    "graph6": to_graph6(&g),
                    "n": g.order(),
                    "m": g.edge_count(),
                    "a": a,
                    "rho_a": r.radius,
                    "residual": r.residual,
                    "iterations": r.iterations,
                    "hong": hong_bound(&g).ok(),
                    "das": das_bound(&g).ok(),
                });
                writeln!(out, "{line}")?;
            }
        }
        Command::GenFamily { family } => {
            let (g, path) = match family {
                Family::Ktree { n, k, out } => (ktree_extremal(n, k)?, out),
                Family::Win { s, parts, out } => (win_family(&WinFamilyParams::new(s, parts)?)?, out),
                Family::Matching { n, s, out } => (matching_extremal(n, s)?.to_graph(), out),
            };
            emit(out, path.as_ref(), &to_graph6(&g))?;
        }
        Command::ClosedForm { kind, n, delta } => {
            let g = matching_extremal(n, delta)?.to_graph();
            let (name, a, value) = match kind {
                ClosedKind::Rho => ("rho", 0.0, rho_matching_extremal(n, delta)?),
                ClosedKind::Q => ("q", 1.0, q_matching_extremal(n, delta)?),
            };
            let eig = spectral_radius_with(&a_matrix(&g, a)?, &SolverOptions::default())?.radius;
            let line = json!({
                "kind": name,
                "n": n,
                "delta": delta,
                "closed_form": value,
                "eigensolver": eig,
                "difference": (value - eig).abs(),
            });
            writeln!(out, "{line}")?;
        }
        Command::Certify { what } => certify(what, stdin, out)?,
        Command::Verify(args) => return run_verify(args, stdin, out),
        Command::Quotient { n, s, a } => {
            let b = quotient_b_pi(n, s, a)?;
            let lambda1 = largest_eigenvalue_dense(&b)?;
            // compare with the quotient computed from the graph itself
            let g = matching_extremal(n, s)?.to_graph();
            let q = quotient_matrix(&a_matrix(&g, a)?, &matching_extremal_partition(n, s)?)?;
            let line = json!({
                "n": n,
                "s": s,
                "a": a,
                "matrix": b.rows(),
                "lambda1": lambda1,
                "phi_at_lambda1": phi_quartic(n as f64, s as f64, a, lambda1),
                "matches_graph_quotient": q.matrix == b,
                "equitable": q.equitable,
            });
            writeln!(out, "{line}")?;
        }
        Command::Corpus { n, all } => {
            let graphs = if all { all_graphs(n)? } else { connected_graphs_range(n, n)? };
            for g in graphs {
                writeln!(out, "{}", to_graph6(&g))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn certify(what: CertifyKind, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    match what {
        CertifyKind::Ktree { k, graph } => {
            for g in read_graphs(&graph, stdin)? {
                let c = find_k_tree(&g, k)?;
                writeln!(out, "{}", serde_json::to_string(&c)?)?;
            }
        }
        CertifyKind::Win { k, graph, cap } => {
            for g in read_graphs(&graph, stdin)? {
                let c = find_win_violator_with(&g, k, cap)?;
                writeln!(out, "{}", serde_json::to_string(&c)?)?;
            }
        }
        CertifyKind::Matching { graph, nx } => {
            for g in read_graphs(&graph, stdin)? {
                let b = match nx {
                    Some(nx) => BipartiteGraph::from_graph(&g, nx)?,
                    None => BipartiteGraph::from_graph_two_coloring(&g)?.0,
                };
                writeln!(out, "{}", perfect_matching(&b)?.to_json())?;
            }
        }
    }
    Ok(())
}

fn corpus_or_input(args: &VerifyArgs, default_min: usize, stdin: &mut dyn BufRead) -> Result<Vec<Graph>> {
    match &args.input {
        Some(path) => read_input(path, stdin),
        None => connected_graphs_range(args.min_n.unwrap_or(default_min), args.max_n),
    }
}

fn required(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| input(format!("this harness needs --{flag}")))
}

fn bipartite_input(graphs: Vec<Graph>) -> Result<Vec<BipartiteGraph>> {
    graphs
        .iter()
        .map(|g| {
            if g.order() % 2 != 0 {
                return Err(input("bipartite input graphs need an even order"));
            }
            BipartiteGraph::from_graph(g, g.order() / 2)
        })
        .collect()
}

fn run_verify(args: VerifyArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let mut cfg = RunConfig {
        tolerance: args.tol,
        margin: args.margin,
        seed: args.seed,
        max_iterations: args.max_iterations,
        ..RunConfig::default()
    };
    if let Some(w) = args.workers {
        cfg.workers = w;
    }
    cfg.validate()?;
    let report: VerificationReport = match args.harness {
        Harness::Thm11 => verify::verify_hamilton_theorem(
            &corpus_or_input(&args, 4, stdin)?,
            HamiltonTheorem::Adjacency,
            &cfg,
        )?,
        Harness::Thm12 => verify::verify_hamilton_theorem(
            &corpus_or_input(&args, 4, stdin)?,
            HamiltonTheorem::SignlessLaplacian,
            &cfg,
        )?,
        Harness::Bounds => verify::verify_bounds(&corpus_or_input(&args, 1, stdin)?, &cfg)?,
        Harness::Lemma11 => {
            verify::verify_win_direction(&corpus_or_input(&args, 1, stdin)?, args.k.unwrap_or(2), &cfg)?
        }
        Harness::Thm13 => {
            let k = args.k.unwrap_or(3);
            match &args.input {
                Some(path) => verify::verify_ktree_theorem(&read_input(path, stdin)?, k, args.a, &cfg)?,
                None => {
                    let n = args.n.unwrap_or(2 * k + 16);
                    let stream = verify::thm13_stream(n, k, args.a, args.count.unwrap_or(500), &cfg)?;
                    let mut r = verify::verify_ktree_theorem(&stream.graphs, k, args.a, &cfg)?;
                    r.seed = Some(cfg.seed);
                    r.population = format!(
                        "{} random connected graphs meeting the threshold ({} draws), n = {n}, k = {k}, a = {}",
                        stream.graphs.len(),
                        stream.attempts,
                        args.a
                    );
                    r
                }
            }
        }
        Harness::Thm14 | Harness::Thm15 => {
            let theorem = if args.harness == Harness::Thm14 {
                MatchingTheorem::ExtremalThreshold
            } else {
                MatchingTheorem::SimpleThreshold
            };
            let stream = match &args.input {
                Some(path) => BipartiteStream::Given(bipartite_input(read_input(path, stdin)?)?),
                None if args.nx <= 4 => BipartiteStream::Exhaustive { nx: args.nx },
                None => BipartiteStream::Random {
                    nx: args.nx,
                    count: args.count.unwrap_or(100_000),
                    seed: cfg.seed,
                },
            };
            verify::verify_matching_theorems(&stream, theorem, required(args.delta, "delta")?, args.a, &cfg)?
        }
        Harness::Lemma31 => verify::verify_lemma31(args.n.unwrap_or(20), args.max_s, args.max_t, &cfg)?,
        Harness::Lemma41 => verify::verify_lemma41(args.n.unwrap_or(30), &cfg)?,
        Harness::Lemma42 => verify::verify_lemma42(
            required(args.n, "n")?,
            required(args.delta, "delta")?,
            !args.relax_guard,
            args.samples,
            &cfg,
        )?,
    };
    writeln!(out, "{}", report.to_json())?;
    if let Some(p) = &args.report {
        report.write_json(p)?;
    }
    if let Some(p) = &args.csv {
        report.write_csv_file(p)?;
    }
    Ok(if report.has_violations() { EXIT_VIOLATIONS } else { EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["specert"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[], "").0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(call(&["spectral", "!!!"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn spectral_from_stdin() {
        let (code, out, _) = call(&["spectral", "-"], "C~\n\nA_\n");
        assert_eq!(code, EXIT_OK);
        let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 2);
        assert!((lines[0]["rho_a"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    }

    #[test]
    fn non_convergence_exit_code() {
        let (code, _, err) = call(&["verify", "bounds", "--max-n", "5", "--max-iterations", "1"], "");
        assert_eq!(code, EXIT_NONCONVERGENCE, "{err}");
    }
}
