//! Exhaustive lists of non-isomorphic graphs, built by vertex extension and
//! deduplicated by canonical code.

use std::collections::HashSet;

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Above this order the extension step gets slow enough to matter.
pub const MAX_CORPUS_ORDER: usize = 9;

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CORPUS_ORDER {
        return Err(Error::Capacity(format!(
            "graph corpus supports 1 <= n <= {MAX_CORPUS_ORDER}, got {n}"
        )));
    }
    Ok(())
}

fn extend(base: &[Graph], n: usize, connected_only: bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in base {
        for mask in 0u64..(1 << (n - 1)) {
            if connected_only && mask == 0 && n > 1 {
                continue;
            }
            let mut h = Graph::empty(n);
            for (u, v) in g.edges() {
                h.set(u, v);
            }
            for u in 0..n - 1 {
                if mask >> u & 1 == 1 {
                    h.set(u, n - 1);
                }
            }
            if connected_only && !h.is_connected() {
                continue;
            }
            let form = canon::canonical_form(&h).expect("n within canon limits");
            if seen.insert(to_graph6(&form)) {
                out.push(form);
            }
        }
    }
    sort(&mut out);
    out
}

fn sort(graphs: &mut [Graph]) {
    graphs.sort_by_cached_key(to_graph6);
}

/// Every graph on `n` vertices up to isomorphism, canonically labelled and
/// sorted by graph6 string.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        level = extend(&level, k, false);
    }
    Ok(level)
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    let base = all_graphs(n - 1)?;
    Ok(extend(&base, n, true))
}

/// Connected graphs for every order in `lo..=hi`, ordered by `n`.
pub fn connected_graphs_range(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut all_prev: Option<Vec<Graph>> = None;
    for n in lo.max(1)..=hi {
        check(n)?;
        if n == 1 {
            out.push(Graph::empty(1));
            all_prev = Some(vec![Graph::empty(1)]);
            continue;
        }
        let base = match all_prev.take() {
            Some(b) if b.first().map(Graph::order) == Some(n - 1) => b,
            _ => all_graphs(n - 1)?,
        };
        out.extend(extend(&base, n, true));
        if n < hi {
            all_prev = Some(extend(&base, n, false));
        }
    }
    Ok(out)
}
