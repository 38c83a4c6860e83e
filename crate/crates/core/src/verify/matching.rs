//! Perfect matchings in balanced bipartite graphs of minimum degree `δ`.

use super::streams::{all_bipartite, random_bipartite};
use super::{judge, require_a01, run_parallel, Item, Probe, ReportSpec, RunConfig, Verdict, VerificationReport};
use crate::certifiers::{perfect_matching, Certificate};
use crate::error::{input, Result};
use crate::families::{is_matching_extremal, q_matching_extremal, rho_matching_extremal};
use crate::graph::BipartiteGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingTheorem {
    /// Threshold `rho_a` of `K_{δ+1,δ} ∇₁ K_{n-δ-1,n-δ}`, `a ∈ {0, 1}`.
    ExtremalThreshold,
    /// Threshold `sqrt(n(n-δ-1))` for `n >= δ³/2 + δ²/2 + δ + 4`, `a = 0`.
    SimpleThreshold,
}

/// Where the bipartite graphs come from.
#[derive(Clone, Debug)]
pub enum BipartiteStream {
    /// All `nx x nx` biadjacency matrices.
    Exhaustive { nx: usize },
    /// Uniform random biadjacency matrices.
    Random { nx: usize, count: usize, seed: u64 },
    Given(Vec<BipartiteGraph>),
}

impl BipartiteStream {
    fn materialize(&self) -> Result<(Vec<BipartiteGraph>, String, Option<u64>)> {
        Ok(match self {
            BipartiteStream::Exhaustive { nx } => {
                let v = all_bipartite(*nx)?;
                let d = format!("all {} biadjacency matrices with nx = ny = {nx}", v.len());
                (v, d, None)
            }
            BipartiteStream::Random { nx, count, seed } => (
                random_bipartite(*nx, *count, *seed)?,
                format!("{count} uniform random biadjacency matrices with nx = ny = {nx}"),
                Some(*seed),
            ),
            BipartiteStream::Given(v) => (v.clone(), format!("{} given bipartite graphs", v.len()), None),
        })
    }
}

fn meets_simple_guard(n: usize, delta: usize) -> bool {
    2 * n >= delta.pow(3) + delta.pow(2) + 2 * delta + 8
}

/// Graphs whose minimum degree is not exactly `delta` are vacuous, as are,
/// for the simple threshold, graphs below the order guard. For `delta = n`
/// the only graph is `K_{n,n}` and the threshold is its own `rho_a`, which
/// is also the limit of the closed forms at `delta = n`.
pub fn verify_matching_theorems(
    stream: &BipartiteStream,
    theorem: MatchingTheorem,
    delta: usize,
    a: f64,
    cfg: &RunConfig,
) -> Result<VerificationReport> {
    cfg.validate()?;
    require_a01(a)?;
    if delta == 0 {
        return Err(input("minimum degree delta must be at least 1"));
    }
    if theorem == MatchingTheorem::SimpleThreshold && a != 0.0 {
        return Err(input("the sqrt(n(n-delta-1)) threshold is stated for a = 0 only"));
    }
    let (graphs, population, seed) = stream.materialize()?;
    if let Some(b) = graphs.iter().find(|b| !b.is_balanced()) {
        return Err(input(format!("stream holds an unbalanced graph ({} x {})", b.nx(), b.ny())));
    }
    let outcomes = run_parallel(&graphs, cfg.workers, |b| {
        let g = b.to_graph();
        let item = Item::of(&g, Some(a));
        let n = b.nx();
        if b.min_degree() != delta {
            return Ok(item.outcome(None, None, Verdict::Vacuous));
        }
        let threshold = match theorem {
            MatchingTheorem::ExtremalThreshold if n == delta => (1.0 + a) * n as f64,
            MatchingTheorem::ExtremalThreshold if a == 0.0 => rho_matching_extremal(n, delta)?,
            MatchingTheorem::ExtremalThreshold => q_matching_extremal(n, delta)?,
            MatchingTheorem::SimpleThreshold => {
                if n == delta || !meets_simple_guard(n, delta) {
                    return Ok(item.outcome(None, None, Verdict::Vacuous));
                }
                ((n * (n - delta - 1)) as f64).sqrt()
            }
        };
        judge(
            item,
            cfg.rho_a(&g, a)?,
            threshold,
            cfg.margin,
            "perfect_matching",
            || {
                Ok(match perfect_matching(b)? {
                    c @ Certificate::PerfectMatching(_) => Probe::Found(c),
                    w => Probe::Absent {
                        witness: Some(w),
                        reason: "has no perfect matching".into(),
                    },
                })
            },
            || {
                Ok(is_matching_extremal(b, n, delta)
                    .then(|| format!("K{},{}∇₁K{},{}", delta + 1, delta, n - delta - 1, n - delta)))
            },
        )
    })?;
    let id = match theorem {
        MatchingTheorem::ExtremalThreshold => "thm14",
        MatchingTheorem::SimpleThreshold => "thm15",
    };
    let mut notes = vec![format!("minimum degree filter: exactly {delta}")];
    if theorem == MatchingTheorem::SimpleThreshold {
        notes.push("orders with 2n < δ³ + δ² + 2δ + 8 are vacuous".into());
    }
    Ok(ReportSpec {
        theorem_id: id,
        population: format!("{population}, delta = {delta}, a = {a}"),
        config: cfg,
        tolerances: vec![],
        seed,
        notes,
    }
    .assemble(outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::matching_extremal;

    #[test]
    fn extremal_under_simple_threshold() {
        let b = matching_extremal(6, 1).unwrap();
        let r = verify_matching_theorems(
            &BipartiteStream::Given(vec![b]),
            MatchingTheorem::SimpleThreshold,
            1,
            0.0,
            &RunConfig::default(),
        )
        .unwrap();
        assert_eq!(r.rows[0].verdict, Verdict::ExtremalEquality);
        assert_eq!(r.rows[0].certificate_type.as_deref(), Some("hall_violator"));
    }

    #[test]
    fn complete_bipartite_confirmed() {
        // K_{4,4} minus a perfect matching is 3-regular, rho = 3 < 2 sqrt(3)
        let edges: Vec<_> = (0..4).flat_map(|x| (0..4).filter(move |&y| y != x).map(move |y| (x, y))).collect();
        let stream = BipartiteStream::Given(vec![BipartiteGraph::new(4, 4, &edges).unwrap(), BipartiteGraph::complete(4, 4)]);
        for a in [0.0, 1.0] {
            for (delta, expect) in [(3, [Verdict::Vacuous, Verdict::Vacuous]), (4, [Verdict::Vacuous, Verdict::Confirmed])] {
                let r = verify_matching_theorems(&stream, MatchingTheorem::ExtremalThreshold, delta, a, &RunConfig::default())
                    .unwrap();
                assert_eq!([r.rows[0].verdict, r.rows[1].verdict], expect);
            }
        }
    }

    #[test]
    fn exhaustive_three() {
        for delta in 1..=2 {
            for a in [0.0, 1.0] {
                let r = verify_matching_theorems(
                    &BipartiteStream::Exhaustive { nx: 3 },
                    MatchingTheorem::ExtremalThreshold,
                    delta,
                    a,
                    &RunConfig::default(),
                )
                .unwrap();
                assert_eq!(r.counts.checked, 512);
                assert_eq!(r.counts.violated, 0, "{:?}", r.violations);
            }
        }
    }

    #[test]
    fn guards() {
        let cfg = RunConfig::default();
        let s = BipartiteStream::Exhaustive { nx: 2 };
        assert!(verify_matching_theorems(&s, MatchingTheorem::SimpleThreshold, 1, 1.0, &cfg).is_err());
        assert!(verify_matching_theorems(&s, MatchingTheorem::ExtremalThreshold, 0, 0.0, &cfg).is_err());
        let un = BipartiteStream::Given(vec![BipartiteGraph::empty(2, 3)]);
        assert!(verify_matching_theorems(&un, MatchingTheorem::ExtremalThreshold, 1, 0.0, &cfg).is_err());
        assert!(meets_simple_guard(6, 1) && !meets_simple_guard(5, 1) && !meets_simple_guard(11, 2));
    }
}
