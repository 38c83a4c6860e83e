//! Search for `S` with `c(G - S) > (k - 2)|S| + 2`.

use super::Certificate;
use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default order limit for the exhaustive search.
pub const WIN_N_CAP: usize = 20;

/// Next subset with the same popcount (Gosper).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn violates(g: &Graph, k: usize, mask: u64) -> bool {
    let s = mask.count_ones() as usize;
    g.components_after_removal_mask(mask) > (k - 2) * s + 2
}

fn to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn find_win_violator(g: &Graph, k: usize) -> Result<Option<Certificate>> {
    find_win_violator_with(g, k, WIN_N_CAP)
}

/// Tries subsets of cut vertices first, then every subset by increasing
/// size. Sizes `r` with `n - r <= (k - 2) r + 2` cannot violate and end the
/// search. Fails with a capacity error when `n > cap`.
pub fn find_win_violator_with(g: &Graph, k: usize, cap: usize) -> Result<Option<Certificate>> {
    if k < 2 {
        return Err(input(format!("Win condition needs k >= 2, got {k}")));
    }
    let n = g.order();
    if n > cap.min(63) {
        return Err(Error::Capacity(format!(
            "violator search is exhaustive and limited to n <= {}, got {n}",
            cap.min(63)
        )));
    }
    let feasible = |r: usize| n - r > (k - 2) * r + 2;

    let cuts: Vec<usize> = (0..n)
        .filter(|&v| g.components_after_removal_mask(1 << v) > 1)
        .collect();
    let a = cuts.len();
    for r in 1..=a {
        if !feasible(r) {
            break;
        }
        let mut pick = (1u64 << r) - 1;
        while pick < 1u64 << a {
            let mask = (0..a).filter(|&i| pick >> i & 1 == 1).fold(0u64, |m, i| m | 1 << cuts[i]);
            if violates(g, k, mask) {
                return Ok(Some(Certificate::WinViolator(to_set(mask))));
            }
            pick = next_combination(pick);
        }
    }

    for r in 1..n {
        if !feasible(r) {
            break;
        }
        let mut mask = (1u64 << r) - 1;
        while mask < 1u64 << n {
            if violates(g, k, mask) {
                return Ok(Some(Certificate::WinViolator(to_set(mask))));
            }
            mask = next_combination(mask);
        }
    }
    Ok(None)
}
