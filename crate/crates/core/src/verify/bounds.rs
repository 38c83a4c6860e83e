//! Hong's and Das's upper bounds.

use super::hamilton::order_range;
use super::{require_connected, run_parallel, Item, Outcome, ReportSpec, RunConfig, Verdict, VerificationReport};
use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::{das_bound, hong_bound};

/// Values within this distance of a bound count as equality.
pub const EQUALITY_WINDOW: f64 = 1e-9;

fn compare(item: Item, value: f64, bound: f64, name: &str) -> Outcome {
    if value > bound + EQUALITY_WINDOW {
        let diagnostic = format!("{value} exceeds the {name} bound {bound}");
        item.violated(Some(value), Some(bound), name, None, diagnostic)
    } else if value >= bound - EQUALITY_WINDOW {
        let mut o = item.outcome(Some(value), Some(bound), Verdict::ExtremalEquality);
        o.row.extremal = Some(format!("{name} equality"));
        o
    } else {
        item.outcome(Some(value), Some(bound), Verdict::Confirmed)
    }
}

/// Two rows per graph: `rho <= sqrt(2m - n + 1)` (`a = 0`) and
/// `q <= 2m/(n-1) + n - 2` (`a = 1`).
pub fn verify_bounds(graphs: &[Graph], cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    require_connected(graphs)?;
    let items: Vec<(&Graph, bool)> = graphs.iter().flat_map(|g| [(g, false), (g, true)]).collect();
    let outcomes = run_parallel(&items, cfg.workers, |&(g, signless)| {
        if !signless {
            let value = cfg.rho_a(g, 0.0)?;
            Ok(compare(Item::of(g, Some(0.0)), value, hong_bound(g)?, "hong"))
        } else if g.order() < 2 {
            Ok(Item::of(g, Some(1.0)).outcome(None, None, Verdict::Vacuous))
        } else {
            let value = cfg.rho_a(g, 1.0)?;
            Ok(compare(Item::of(g, Some(1.0)), value, das_bound(g)?, "das"))
        }
    })?;
    let (lo, hi) = order_range(graphs);
    Ok(ReportSpec {
        theorem_id: "bounds",
        population: format!("{} connected graphs, orders {lo}..={hi}, Hong (a = 0) and Das (a = 1)", graphs.len()),
        config: cfg,
        tolerances: vec![("equality_window", EQUALITY_WINDOW)],
        seed: None,
        notes: vec![],
    }
    .assemble(outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_equality_and_star() {
        let r = verify_bounds(&[Graph::complete(6), Graph::star(5), Graph::path(5)], &RunConfig::default()).unwrap();
        let v: Vec<_> = r.rows.iter().map(|r| r.verdict).collect();
        use Verdict::*;
        // stars meet both bounds: rho = sqrt(n - 1) and q = n
        assert_eq!(v, [ExtremalEquality, ExtremalEquality, ExtremalEquality, ExtremalEquality, Confirmed, Confirmed]);
        assert_eq!(r.counts.violated, 0);
    }
}
