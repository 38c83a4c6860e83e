//! Verification harnesses: stream graphs, compare spectral values with a
//! threshold, ask a certifier, and aggregate verdicts into a report.
//!
//! A graph is judged as follows, with `margin` from [`RunConfig`]:
//!
//! 1. value below `threshold - margin`: vacuous;
//! 2. otherwise a certificate is found: confirmed;
//! 3. otherwise the graph is the named extremal graph: extremal equality;
//! 4. otherwise value above `threshold + margin`: violated;
//! 5. otherwise (inside the margin band, no certificate): vacuous.

mod bounds;
mod hamilton;
mod ktree;
mod lemmas;
mod matching;
mod streams;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certifiers::Certificate;
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spectral::{spectral_radius_with, a_matrix, SolverOptions, DEFAULT_MAX_ITERATIONS};

pub use bounds::{verify_bounds, EQUALITY_WINDOW};
pub use hamilton::{hamilton_exceptions, verify_hamilton_theorem, verify_hamilton_theorems, HamiltonTheorem};
pub use ktree::{verify_ktree_theorem, verify_win_direction};
pub use lemmas::{verify_lemma31, verify_lemma41, verify_lemma42};
pub use matching::{verify_matching_theorems, BipartiteStream, MatchingTheorem};
pub use streams::{all_bipartite, random_bipartite, thm13_stream, Thm13Stream};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub win_n_cap: usize,
    pub brute_matching_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            win_n_cap: crate::certifiers::WIN_N_CAP,
            brute_matching_cap: crate::certifiers::BRUTE_MATCHING_CAP,
        }
    }
}

/// Numeric and execution settings shared by all harnesses.
///
/// `workers` is not serialized, so reports do not depend on it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub tolerance: f64,
    pub margin: f64,
    #[serde(skip, default = "default_workers")]
    pub workers: usize,
    pub seed: u64,
    pub caps: Caps,
    pub max_iterations: usize,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tolerance: 1e-10,
            margin: 1e-8,
            workers: default_workers(),
            seed: 0,
            caps: Caps::default(),
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(input(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if !(self.margin >= self.tolerance) {
            return Err(input(format!(
                "margin {} must be at least the tolerance {}",
                self.margin, self.tolerance
            )));
        }
        if self.workers == 0 || self.caps.win_n_cap == 0 || self.caps.brute_matching_cap == 0 {
            return Err(input("workers and caps must be positive"));
        }
        Ok(())
    }

    pub fn solver(&self) -> SolverOptions {
        SolverOptions {
            tol: self.tolerance,
            max_iterations: self.max_iterations,
        }
    }

    /// `rho_a(g)` with this configuration's solver settings.
    pub fn rho_a(&self, g: &Graph, a: f64) -> Result<f64> {
        Ok(spectral_radius_with(&a_matrix(g, a)?, &self.solver())?.radius)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Vacuous,
    Confirmed,
    ExtremalEquality,
    Violated,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub checked: usize,
    pub vacuous: usize,
    pub confirmed: usize,
    pub extremal_equality: usize,
    pub violated: usize,
}

impl Counts {
    fn add(&mut self, v: Verdict) {
        self.checked += 1;
        match v {
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Confirmed => self.confirmed += 1,
            Verdict::ExtremalEquality => self.extremal_equality += 1,
            Verdict::Violated => self.violated += 1,
        }
    }
}

/// One checked item. `a` is absent for purely combinatorial checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub a: Option<f64>,
    pub rho_a: Option<f64>,
    pub threshold: Option<f64>,
    pub verdict: Verdict,
    pub certificate_type: Option<String>,
    /// Name of the extremal or exceptional graph matched, if any.
    pub extremal: Option<String>,
}

/// Everything needed to re-check a violated item on its own.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub a: Option<f64>,
    pub rho_a: Option<f64>,
    pub threshold: Option<f64>,
    pub certifier: String,
    pub witness: Option<Certificate>,
    pub diagnostic: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub population: String,
    pub config: RunConfig,
    pub counts: Counts,
    pub violations: Vec<Violation>,
    pub tolerances: BTreeMap<String, f64>,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub rows: Vec<Row>,
}

impl VerificationReport {
    pub fn has_violations(&self) -> bool {
        self.counts.violated > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_json().as_bytes())?;
        f.write_all(b"\n")?;
        Ok(())
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        for row in &self.rows {
            out.serialize(row)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn write_csv_file(&self, path: &Path) -> Result<()> {
        self.write_csv(std::fs::File::create(path)?)
    }
}

/// The outcome of asking a certifier.
pub(crate) enum Probe {
    Found(Certificate),
    Absent { witness: Option<Certificate>, reason: String },
}

pub(crate) struct Outcome {
    pub row: Row,
    pub violation: Option<Violation>,
}

/// Identity of a checked item.
pub(crate) struct Item {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub a: Option<f64>,
}

impl Item {
    pub fn of(g: &Graph, a: Option<f64>) -> Item {
        Item {
            graph6: to_graph6(g),
            n: g.order(),
            m: g.edge_count(),
            a,
        }
    }

    pub fn outcome(self, rho: Option<f64>, threshold: Option<f64>, verdict: Verdict) -> Outcome {
        Outcome {
            row: Row {
                graph6: self.graph6,
                n: self.n,
                m: self.m,
                a: self.a,
                rho_a: rho,
                threshold,
                verdict,
                certificate_type: None,
                extremal: None,
            },
            violation: None,
        }
    }

    /// A violated row carrying its diagnostic.
    pub fn violated(
        self,
        rho: Option<f64>,
        threshold: Option<f64>,
        certifier: &str,
        witness: Option<Certificate>,
        diagnostic: String,
    ) -> Outcome {
        let violation = Violation {
            graph6: self.graph6.clone(),
            a: self.a,
            rho_a: rho,
            threshold,
            certifier: certifier.to_string(),
            witness,
            diagnostic,
        };
        let mut o = self.outcome(rho, threshold, Verdict::Violated);
        o.violation = Some(violation);
        o
    }
}

/// Applies the verdict rule from the module docs. `extremal` returns the
/// name of the matched extremal graph.
pub(crate) fn judge(
    item: Item,
    value: f64,
    threshold: f64,
    margin: f64,
    certifier: &str,
    certify: impl FnOnce() -> Result<Probe>,
    extremal: impl FnOnce() -> Result<Option<String>>,
) -> Result<Outcome> {
    if value < threshold - margin {
        return Ok(item.outcome(Some(value), Some(threshold), Verdict::Vacuous));
    }
    let (witness, reason) = match certify()? {
        Probe::Found(c) => {
            let kind = c.kind().to_string();
            let mut o = item.outcome(Some(value), Some(threshold), Verdict::Confirmed);
            o.row.certificate_type = Some(kind);
            return Ok(o);
        }
        Probe::Absent { witness, reason } => (witness, reason),
    };
    if let Some(name) = extremal()? {
        let mut o = item.outcome(Some(value), Some(threshold), Verdict::ExtremalEquality);
        o.row.certificate_type = witness.map(|w| w.kind().to_string());
        o.row.extremal = Some(name);
        return Ok(o);
    }
    if value > threshold + margin {
        let diagnostic = format!("value {value} exceeds threshold {threshold} and {reason}");
        return Ok(item.violated(Some(value), Some(threshold), certifier, witness, diagnostic));
    }
    let mut o = item.outcome(Some(value), Some(threshold), Verdict::Vacuous);
    o.row.certificate_type = witness.map(|w| w.kind().to_string());
    Ok(o)
}

/// Maps `f` over `items` on `workers` threads, keeping input order. The
/// first failing item (in input order) determines the error.
pub(crate) fn run_parallel<T, F>(items: &[T], workers: usize, f: F) -> Result<Vec<Outcome>>
where
    T: Sync,
    F: Fn(&T) -> Result<Outcome> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<Outcome>> = pool.install(|| items.par_iter().map(&f).collect());
    results.into_iter().collect()
}

pub(crate) struct ReportSpec<'a> {
    pub theorem_id: &'a str,
    pub population: String,
    pub config: &'a RunConfig,
    pub tolerances: Vec<(&'a str, f64)>,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

impl ReportSpec<'_> {
    pub fn assemble(self, outcomes: Vec<Outcome>) -> VerificationReport {
        let mut counts = Counts::default();
        let mut violations = Vec::new();
        let mut rows = Vec::with_capacity(outcomes.len());
        for o in outcomes {
            counts.add(o.row.verdict);
            violations.extend(o.violation);
            rows.push(o.row);
        }
        violations.sort_by(|x, y| {
            x.graph6
                .cmp(&y.graph6)
                .then(x.a.unwrap_or(0.0).total_cmp(&y.a.unwrap_or(0.0)))
        });
        let mut tolerances: BTreeMap<String, f64> = BTreeMap::new();
        tolerances.insert("tolerance".into(), self.config.tolerance);
        tolerances.insert("margin".into(), self.config.margin);
        for (k, v) in self.tolerances {
            tolerances.insert(k.into(), v);
        }
        VerificationReport {
            theorem_id: self.theorem_id.to_string(),
            population: self.population,
            config: self.config.clone(),
            counts,
            violations,
            tolerances,
            seed: self.seed,
            notes: self.notes,
            rows,
        }
    }
}

pub(crate) fn require_a01(a: f64) -> Result<()> {
    if a != 0.0 && a != 1.0 {
        return Err(input(format!("theorems are stated for a = 0 or a = 1, got {a}")));
    }
    Ok(())
}

pub(crate) fn require_connected(graphs: &[Graph]) -> Result<()> {
    if let Some((i, g)) = graphs.iter().enumerate().find(|(_, g)| !g.is_connected()) {
        return Err(input(format!(
            "graph {} ({}) is not connected",
            i + 1,
            to_graph6(g)
        )));
    }
    Ok(())
}
