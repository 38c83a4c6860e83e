//! Hamilton paths from `rho(G) > n - 3` and from `q(G) >= 2n - 5`.

use super::{judge, require_connected, run_parallel, Item, Probe, ReportSpec, RunConfig, VerificationReport};
use crate::canon::are_isomorphic;
use crate::certifiers::find_k_tree;
use crate::error::Result;
use crate::families::is_ktree_extremal;
use crate::graph::{disjoint_union, join, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HamiltonTheorem {
    /// `rho(G) > n - 3`.
    Adjacency,
    /// `q(G) >= 2n - 5`.
    SignlessLaplacian,
}

impl HamiltonTheorem {
    fn id(self) -> &'static str {
        match self {
            HamiltonTheorem::Adjacency => "thm11",
            HamiltonTheorem::SignlessLaplacian => "thm12",
        }
    }

    fn a(self) -> f64 {
        match self {
            HamiltonTheorem::Adjacency => 0.0,
            HamiltonTheorem::SignlessLaplacian => 1.0,
        }
    }

    fn threshold(self, n: usize) -> f64 {
        let n = n as f64;
        match self {
            HamiltonTheorem::Adjacency => n - 3.0,
            HamiltonTheorem::SignlessLaplacian => 2.0 * n - 5.0,
        }
    }
}

fn name_of_family(n: usize) -> String {
    format!("K1∇(K{}∪2K1)", n - 3)
}

/// The listed exceptional graphs of order `n`, with display names.
/// For the adjacency version `K1∇(K_{n-3}∪2K1)` exists for every `n >= 4`.
pub fn hamilton_exceptions(theorem: HamiltonTheorem, n: usize) -> Vec<(String, Graph)> {
    let k2_4k1 = || join(&Graph::complete(2), &Graph::empty(4));
    let mut out = Vec::new();
    match theorem {
        HamiltonTheorem::Adjacency => {
            if n >= 4 {
                let rest = disjoint_union(&[Graph::complete(n - 3), Graph::empty(2)]).expect("nonempty");
                out.push((name_of_family(n), join(&Graph::empty(1), &rest)));
            }
            if n == 6 {
                out.push(("K2∇4K1".to_string(), k2_4k1()));
                let rest = disjoint_union(&[Graph::star(3), Graph::empty(1)]).expect("nonempty");
                out.push(("K1∇(K1,3∪K1)".to_string(), join(&Graph::empty(1), &rest)));
            }
        }
        HamiltonTheorem::SignlessLaplacian => match n {
            4 => out.push(("K1,3".to_string(), Graph::star(3))),
            5 => {
                let rest = disjoint_union(&[Graph::complete(2), Graph::empty(2)]).expect("nonempty");
                out.push(("K1∇(K2∪2K1)".to_string(), join(&Graph::empty(1), &rest)));
                out.push(("K1,4".to_string(), Graph::star(4)));
            }
            6 => out.push(("K2∇4K1".to_string(), k2_4k1())),
            _ => {}
        },
    }
    out
}

fn match_exception(theorem: HamiltonTheorem, g: &Graph) -> Result<Option<String>> {
    let n = g.order();
    // the infinite family is recognised structurally, so any order works
    if theorem == HamiltonTheorem::Adjacency && is_ktree_extremal(g, n, 2) {
        return Ok(Some(name_of_family(n)));
    }
    for (name, h) in hamilton_exceptions(theorem, n) {
        if h.edge_count() == g.edge_count() && h.order() <= 16 && are_isomorphic(g, &h)? {
            return Ok(Some(name));
        }
    }
    Ok(None)
}

/// Checks one theorem over connected graphs; orders below 4 are vacuous.
pub fn verify_hamilton_theorem(
    graphs: &[Graph],
    theorem: HamiltonTheorem,
    cfg: &RunConfig,
) -> Result<VerificationReport> {
    cfg.validate()?;
    require_connected(graphs)?;
    let a = theorem.a();
    let outcomes = run_parallel(graphs, cfg.workers, |g| {
        let item = Item::of(g, Some(a));
        let n = g.order();
        if n < 4 {
            return Ok(item.outcome(None, None, super::Verdict::Vacuous));
        }
        let value = cfg.rho_a(g, a)?;
        judge(
            item,
            value,
            theorem.threshold(n),
            cfg.margin,
            "find_k_tree(k=2)",
            || {
                Ok(match find_k_tree(g, 2)? {
                    Some(c) => Probe::Found(c),
                    None => Probe::Absent {
                        witness: None,
                        reason: "has no Hamilton path".into(),
                    },
                })
            },
            || match_exception(theorem, g),
        )
    })?;
    let (lo, hi) = order_range(graphs);
    Ok(ReportSpec {
        theorem_id: theorem.id(),
        population: format!("{} connected graphs, orders {lo}..={hi}", graphs.len()),
        config: cfg,
        tolerances: vec![],
        seed: None,
        notes: vec![],
    }
    .assemble(outcomes))
}

/// Both Hamilton-path theorems over the same stream.
pub fn verify_hamilton_theorems(
    graphs: &[Graph],
    cfg: &RunConfig,
) -> Result<(VerificationReport, VerificationReport)> {
    Ok((
        verify_hamilton_theorem(graphs, HamiltonTheorem::Adjacency, cfg)?,
        verify_hamilton_theorem(graphs, HamiltonTheorem::SignlessLaplacian, cfg)?,
    ))
}

pub(crate) fn order_range(graphs: &[Graph]) -> (usize, usize) {
    let lo = graphs.iter().map(Graph::order).min().unwrap_or(0);
    let hi = graphs.iter().map(Graph::order).max().unwrap_or(0);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    fn verdict(g: &Graph, t: HamiltonTheorem) -> (Verdict, Option<String>) {
        let r = verify_hamilton_theorem(std::slice::from_ref(g), t, &RunConfig::default()).unwrap();
        (r.rows[0].verdict, r.rows[0].extremal.clone())
    }

    #[test]
    fn k2_join_4k1_is_exceptional_for_both() {
        let g = join(&Graph::complete(2), &Graph::empty(4));
        for t in [HamiltonTheorem::Adjacency, HamiltonTheorem::SignlessLaplacian] {
            assert_eq!(verdict(&g, t), (Verdict::ExtremalEquality, Some("K2∇4K1".into())));
        }
    }

    #[test]
    fn star_k14_is_exceptional_for_q() {
        let (v, name) = verdict(&Graph::star(4), HamiltonTheorem::SignlessLaplacian);
        assert_eq!(v, Verdict::ExtremalEquality);
        assert_eq!(name.as_deref(), Some("K1,4"));
    }

    #[test]
    fn complete_graph_confirmed() {
        assert_eq!(verdict(&Graph::complete(7), HamiltonTheorem::Adjacency).0, Verdict::Confirmed);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::empty(4);
        assert!(verify_hamilton_theorem(&[g], HamiltonTheorem::Adjacency, &RunConfig::default()).is_err());
    }
}
