//! Spanning k-trees: the spectral condition and the Win-condition direction.

use std::collections::BTreeMap;

use super::hamilton::order_range;
use super::{
    judge, require_a01, require_connected, run_parallel, Item, Probe, ReportSpec, RunConfig, Verdict,
    VerificationReport,
};
use crate::certifiers::{find_k_tree, find_win_violator_with};
use crate::error::{input, Result};
use crate::families::{is_ktree_extremal, ktree_extremal};
use crate::graph::Graph;

/// `rho_a(G) >= rho_a(K1∇(K_{n-k-1}∪kK1))` implies a k-tree unless `G` is
/// that graph. Graphs with `n < 2k + 16` are vacuous. Thresholds are
/// eigensolves of the extremal graph, one per order.
pub fn verify_ktree_theorem(graphs: &[Graph], k: usize, a: f64, cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    require_a01(a)?;
    if k < 2 {
        return Err(input(format!("k must be at least 2, got {k}")));
    }
    require_connected(graphs)?;
    let guard = 2 * k + 16;
    let mut thresholds = BTreeMap::new();
    for g in graphs {
        let n = g.order();
        if n >= guard && !thresholds.contains_key(&n) {
            thresholds.insert(n, cfg.rho_a(&ktree_extremal(n, k)?, a)?);
        }
    }
    let outcomes = run_parallel(graphs, cfg.workers, |g| {
        let item = Item::of(g, Some(a));
        let n = g.order();
        let Some(&threshold) = thresholds.get(&n) else {
            return Ok(item.outcome(None, None, Verdict::Vacuous));
        };
        judge(
            item,
            cfg.rho_a(g, a)?,
            threshold,
            cfg.margin,
            &format!("find_k_tree(k={k})"),
            || {
                Ok(match find_k_tree(g, k)? {
                    Some(c) => Probe::Found(c),
                    None => Probe::Absent {
                        witness: None,
                        reason: format!("has no {k}-tree"),
                    },
                })
            },
            || Ok(is_ktree_extremal(g, n, k).then(|| format!("K1∇(K{}∪{k}K1)", n - k - 1))),
        )
    })?;
    let (lo, hi) = order_range(graphs);
    Ok(ReportSpec {
        theorem_id: "thm13",
        population: format!("{} connected graphs, orders {lo}..={hi}, k = {k}, a = {a}", graphs.len()),
        config: cfg,
        tolerances: vec![],
        seed: None,
        notes: vec![format!("orders below {guard} are vacuous")],
    }
    .assemble(outcomes))
}

/// No set `S` with `c(G - S) > (k - 2)|S| + 2` implies a k-tree. Graphs with
/// a violator are vacuous; the others must yield a certificate.
pub fn verify_win_direction(graphs: &[Graph], k: usize, cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    require_connected(graphs)?;
    let outcomes = run_parallel(graphs, cfg.workers, |g| {
        let item = Item::of(g, None);
        if let Some(v) = find_win_violator_with(g, k, cfg.caps.win_n_cap)? {
            let mut o = item.outcome(None, None, Verdict::Vacuous);
            o.row.certificate_type = Some(v.kind().to_string());
            return Ok(o);
        }
        Ok(match find_k_tree(g, k)? {
            Some(c) => {
                let mut o = item.outcome(None, None, Verdict::Confirmed);
                o.row.certificate_type = Some(c.kind().to_string());
                o
            }
            None => item.violated(
                None,
                None,
                &format!("find_k_tree(k={k})"),
                None,
                "Win condition holds but no k-tree was found".into(),
            ),
        })
    })?;
    let (lo, hi) = order_range(graphs);
    Ok(ReportSpec {
        theorem_id: "lemma11",
        population: format!("{} connected graphs, orders {lo}..={hi}, k = {k}", graphs.len()),
        config: cfg,
        tolerances: vec![],
        seed: None,
        notes: vec![],
    }
    .assemble(outcomes))
}
