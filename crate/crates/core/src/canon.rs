//! Canonical labelling of small graphs by individualisation and refinement.
//!
//! Each leaf of the search tree fixes a vertex order; its code is the upper
//! triangle under that order in graph6 bit order. The canonical form is the
//! leaf with the largest code. Cells whose first vertex is a twin of every
//! other member are branched on once, since swapping twins is an
//! automorphism that fixes the partition.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled; the code of a leaf must fit in 128 bits.
pub const MAX_ORDER: usize = 16;

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let k = cells.len();
        let mut next: Cells = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u16; k];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn leaf_code(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.order())
        .filter(|&w| w != u && w != v)
        .all(|w| g.has_edge(u, w) == g.has_edge(v, w))
}

fn search(g: &Graph, cells: Cells, best: &mut Option<(u128, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
    else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = leaf_code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &cells[target];
    let first = cell[0];
    let all_twins = cell[1..].iter().all(|&v| twins(g, first, v));
    let branch: &[usize] = if all_twins { &cell[..1] } else { cell };
    for &v in branch {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend(cells[..target].iter().cloned());
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend(cells[target + 1..].iter().cloned());
        search(g, next, best);
    }
}

/// Canonical code and the vertex order realising it.
pub fn canonical_code(g: &Graph) -> Result<(u128, Vec<usize>)> {
    if g.order() > MAX_ORDER {
        return Err(Error::Capacity(format!(
            "canonical labelling supports n <= {MAX_ORDER}, got {}",
            g.order()
        )));
    }
    if g.order() == 0 {
        return Ok((0, Vec::new()));
    }
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    Ok(best.expect("search reaches at least one leaf"))
}

/// The canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_code(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_code(g)?.0 == canonical_code(h)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join};

    fn shuffled(g: &Graph, seed: usize) -> Graph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic scramble: rotate then reverse halves
        perm.rotate_left(seed % n.max(1));
        perm[..n / 2].reverse();
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        let graphs = [
            Graph::path(7),
            Graph::cycle(8),
            Graph::complete(9),
            join(&Graph::complete(2), &Graph::empty(4)),
            disjoint_union(&[Graph::cycle(4), Graph::path(3)]).unwrap(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in &graphs {
            for seed in 0..5 {
                let h = shuffled(g, seed);
                assert_eq!(canonical_form(g).unwrap(), canonical_form(&h).unwrap());
                assert!(are_isomorphic(g, &h).unwrap());
            }
        }
    }

    #[test]
    fn distinguishes_cospectral_pair() {
        // K_{1,4} and C4 ∪ K1 share the adjacency spectrum
        let star = Graph::star(4);
        let c4k1 = disjoint_union(&[Graph::cycle(4), Graph::empty(1)]).unwrap();
        assert!(!are_isomorphic(&star, &c4k1).unwrap());
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 versus two triangles
        let c6 = Graph::cycle(6);
        let two_k3 = disjoint_union(&[Graph::complete(3), Graph::complete(3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_k3).unwrap());
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(canonical_code(&Graph::empty(17)).is_err());
    }
}
