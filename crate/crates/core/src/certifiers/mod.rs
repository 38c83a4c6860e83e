//! Exact existence checks that return checkable witnesses.

mod ktree;
mod matching;
mod win;

use serde::{Deserialize, Serialize};

use crate::graph::{BipartiteGraph, Graph, VertexSet};

pub use ktree::find_k_tree;
pub use matching::{count_perfect_matchings_brute, perfect_matching, BRUTE_MATCHING_CAP};
pub use win::{find_win_violator, find_win_violator_with, WIN_N_CAP};

/// A witness for (or against) a spanning structure.
///
/// JSON form: `{"type": "ktree" | "win_violator" | "matching" |
/// "hall_violator", "data": [...]}` with 0-based indices. Matching pairs
/// and Hall violators use part-local indices (`x` in `X`, `y` in `Y`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "data", rename_all = "snake_case")]
pub enum Certificate {
    #[serde(rename = "ktree")]
    KTree(Vec<(usize, usize)>),
    WinViolator(VertexSet),
    #[serde(rename = "matching")]
    PerfectMatching(Vec<(usize, usize)>),
    HallViolator(VertexSet),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::KTree(_) => "ktree",
            Certificate::WinViolator(_) => "win_violator",
            Certificate::PerfectMatching(_) => "matching",
            Certificate::HallViolator(_) => "hall_violator",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Checks that `edges` is a spanning tree of `g` with maximum degree `<= k`.
pub fn check_k_tree(g: &Graph, k: usize, edges: &[(usize, usize)]) -> Result<(), String> {
    let n = g.order();
    if edges.len() + 1 != n {
        return Err(format!("{} edges cannot span {n} vertices as a tree", edges.len()));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(format!("({u},{v}) is not an edge of the graph"));
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return Err(format!("({u},{v}) closes a cycle"));
        }
        parent[ru] = rv;
        deg[u] += 1;
        deg[v] += 1;
    }
    if let Some(v) = (0..n).find(|&v| deg[v] > k) {
        return Err(format!("vertex {v} has tree degree {} > {k}", deg[v]));
    }
    Ok(())
}

/// Checks `c(G - S) > (k - 2)|S| + 2`.
pub fn check_win_violator(g: &Graph, k: usize, s: &VertexSet) -> Result<(), String> {
    let c = g.components_after_removal(s).map_err(|e| e.to_string())?;
    let bound = (k.saturating_sub(2)) * s.len() + 2;
    if s.is_empty() || c <= bound {
        return Err(format!("c(G - S) = {c} does not exceed {bound}"));
    }
    Ok(())
}

/// Checks that `pairs` is a perfect matching of `b`.
pub fn check_perfect_matching(b: &BipartiteGraph, pairs: &[(usize, usize)]) -> Result<(), String> {
    if !b.is_balanced() || pairs.len() != b.nx() {
        return Err(format!("{} pairs cannot cover {} + {} vertices", pairs.len(), b.nx(), b.ny()));
    }
    let mut used_x = vec![false; b.nx()];
    let mut used_y = vec![false; b.ny()];
    for &(x, y) in pairs {
        if !b.has_edge(x, y) {
            return Err(format!("({x},{y}) is not an edge"));
        }
        if std::mem::replace(&mut used_x[x], true) || std::mem::replace(&mut used_y[y], true) {
            return Err(format!("pair ({x},{y}) reuses a vertex"));
        }
    }
    Ok(())
}

/// Checks `|N(S)| < |S|` for `S ⊆ X`.
pub fn check_hall_violator(b: &BipartiteGraph, s: &VertexSet) -> Result<(), String> {
    let ns = b.neighborhood(s).map_err(|e| e.to_string())?;
    if ns.len() >= s.len() {
        return Err(format!("|N(S)| = {} is not below |S| = {}", ns.len(), s.len()));
    }
    Ok(())
}
