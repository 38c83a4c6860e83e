//! Perfect matchings of balanced bipartite graphs.

use super::Certificate;
use crate::error::{input, Error, Result};
use crate::graph::{BipartiteGraph, VertexSet};

/// Largest part size accepted by [`count_perfect_matchings_brute`].
pub const BRUTE_MATCHING_CAP: usize = 8;

fn augment(b: &BipartiteGraph, x: usize, seen: &mut [bool], mate_y: &mut [Option<usize>]) -> bool {
    for y in b.neighbors_x(x) {
        if seen[y] {
            continue;
        }
        seen[y] = true;
        let current = mate_y[y];
        if current.is_none_or(|x2| augment(b, x2, seen, mate_y)) {
            mate_y[y] = Some(x);
            return true;
        }
    }
    false
}

/// A perfect matching, or a set `S ⊆ X` with `|N(S)| < |S|`.
///
/// Augmenting paths are tried from `x = 0, 1, ...` with neighbours in
/// ascending order, so the result is deterministic. The Hall violator is the
/// set of `X` vertices reachable by alternating paths from the first
/// unmatched `x` of a maximum matching.
pub fn perfect_matching(b: &BipartiteGraph) -> Result<Certificate> {
    if !b.is_balanced() {
        return Err(input(format!(
            "perfect matching needs |X| = |Y|, got {} and {}",
            b.nx(),
            b.ny()
        )));
    }
    let n = b.nx();
    let mut mate_y = vec![None; n];
    let mut unmatched = None;
    for x in 0..n {
        let mut seen = vec![false; n];
        if !augment(b, x, &mut seen, &mut mate_y) && unmatched.is_none() {
            unmatched = Some(x);
        }
    }
    let Some(root) = unmatched else {
        let mut pairs: Vec<(usize, usize)> = mate_y
            .iter()
            .enumerate()
            .map(|(y, x)| (x.expect("perfect"), y))
            .collect();
        pairs.sort_unstable();
        return Ok(Certificate::PerfectMatching(pairs));
    };
    let mut in_s = vec![false; n];
    let mut seen_y = vec![false; n];
    in_s[root] = true;
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for y in b.neighbors_x(x) {
            if std::mem::replace(&mut seen_y[y], true) {
                continue;
            }
            // y is matched, otherwise the matching would not be maximum
            let x2 = mate_y[y].expect("maximum matching");
            if !std::mem::replace(&mut in_s[x2], true) {
                stack.push(x2);
            }
        }
    }
    Ok(Certificate::HallViolator(
        (0..n).filter(|&x| in_s[x]).collect::<VertexSet>(),
    ))
}

/// Number of perfect matchings by Ryser's permanent formula.
pub fn count_perfect_matchings_brute(b: &BipartiteGraph) -> Result<u64> {
    if !b.is_balanced() {
        return Err(input("matching count needs a balanced graph"));
    }
    let n = b.nx();
    if n > BRUTE_MATCHING_CAP {
        return Err(Error::Capacity(format!(
            "brute-force matching count is limited to parts of size {BRUTE_MATCHING_CAP}, got {n}"
        )));
    }
    let rows: Vec<u32> = (0..n)
        .map(|x| b.neighbors_x(x).fold(0u32, |m, y| m | 1 << y))
        .collect();
    let mut total: i64 = 0;
    for cols in 1u32..1 << n {
        let prod: i64 = rows.iter().map(|r| (r & cols).count_ones() as i64).product();
        let sign = if (n - cols.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        total += sign * prod;
    }
    Ok(u64::try_from(total).expect("permanent of a 0/1 matrix is nonnegative"))
}
