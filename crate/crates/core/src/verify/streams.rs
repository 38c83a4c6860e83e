//! Internally generated graph streams.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use super::RunConfig;
use crate::error::{input, Error, Result};
use crate::families::ktree_extremal;
use crate::graph::{BipartiteGraph, Graph};

/// Every `nx x nx` biadjacency matrix, in mask order. Limited to `nx <= 4`.
pub fn all_bipartite(nx: usize) -> Result<Vec<BipartiteGraph>> {
    if nx == 0 || nx > 4 {
        return Err(Error::Capacity(format!(
            "exhaustive bipartite streams cover 1 <= nx <= 4, got {nx}"
        )));
    }
    Ok((0u64..1 << (nx * nx))
        .map(|m| BipartiteGraph::from_mask(nx, nx, m))
        .collect())
}

/// `count` uniformly random `nx x nx` biadjacency matrices, `nx <= 8`.
pub fn random_bipartite(nx: usize, count: usize, seed: u64) -> Result<Vec<BipartiteGraph>> {
    if nx == 0 || nx > 8 {
        return Err(Error::Capacity(format!(
            "random bipartite streams cover 1 <= nx <= 8, got {nx}"
        )));
    }
    let bits = nx * nx;
    let mask = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| BipartiteGraph::from_mask(nx, nx, rng.gen::<u64>() & mask))
        .collect())
}

/// Random connected graphs that meet the k-tree threshold.
#[derive(Clone, Debug)]
pub struct Thm13Stream {
    pub graphs: Vec<Graph>,
    pub threshold: f64,
    pub attempts: usize,
}

/// Draws graphs until `count` of them have `rho_a >= threshold - margin`.
///
/// Even draws are `G(n, p)` with `p` uniform in `[0.85, 0.95]`; odd draws
/// add one to three random edges to the extremal graph, which keeps part of
/// the stream just above the threshold. Rejected draws are discarded.
pub fn thm13_stream(n: usize, k: usize, a: f64, count: usize, cfg: &RunConfig) -> Result<Thm13Stream> {
    let extremal = ktree_extremal(n, k)?;
    let threshold = cfg.rho_a(&extremal, a)?;
    let non_edges: Vec<(usize, usize)> = extremal.complement().edges();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut graphs = Vec::with_capacity(count);
    let limit = count.saturating_mul(1000).max(1000);
    let mut attempts = 0;
    while graphs.len() < count {
        if attempts == limit {
            return Err(input(format!(
                "only {} of {count} random graphs met the threshold after {limit} draws",
                graphs.len()
            )));
        }
        let g = if attempts % 2 == 0 {
            let p: f64 = rng.gen_range(0.85..0.95);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges)?
        } else {
            let extra = rng.gen_range(1..=3usize).min(non_edges.len());
            let mut g = extremal.clone();
            for &(u, v) in non_edges.choose_multiple(&mut rng, extra) {
                g = g.with_edge_added(u, v)?;
            }
            g
        };
        attempts += 1;
        if g.is_connected() && cfg.rho_a(&g, a)? >= threshold - cfg.margin {
            graphs.push(g);
        }
    }
    Ok(Thm13Stream {
        graphs,
        threshold,
        attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_bipartite(2).unwrap().len(), 16);
        assert_eq!(all_bipartite(4).unwrap().len(), 65536);
        assert!(all_bipartite(5).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_bipartite(5, 50, 7).unwrap();
        let b = random_bipartite(5, 50, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_bipartite(5, 50, 8).unwrap());
        assert!(a.iter().all(|g| g.nx() == 5 && g.ny() == 5));
    }

    #[test]
    fn thm13_stream_meets_threshold() {
        let cfg = RunConfig { seed: 3, ..RunConfig::default() };
        let s = thm13_stream(22, 3, 0.0, 10, &cfg).unwrap();
        assert_eq!(s.graphs.len(), 10);
        for g in &s.graphs {
            assert!(g.is_connected());
            assert!(cfg.rho_a(g, 0.0).unwrap() >= s.threshold - cfg.margin);
        }
    }
}
