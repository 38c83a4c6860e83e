//! Exact search for a spanning tree with maximum degree at most `k`.
//!
//! The search grows a forest edge by edge. Each node propagates three rules
//! until nothing changes: an edge inside a component or at a saturated
//! vertex is dropped, a component with a single usable edge must take it,
//! and the components whose every usable edge ends at the same outside
//! vertex `w` must fit into the spare degree of `w`. A node also fails when
//! the usable edges no longer connect the components. Branching picks the
//! most constrained component and tries its first usable edge in, then out.

use super::{find, Certificate};
use crate::error::{input, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    parent: Vec<usize>,
    deg: Vec<usize>,
    status: Vec<Status>,
    chosen: usize,
}

struct Search<'a> {
    n: usize,
    k: usize,
    edges: &'a [(usize, usize)],
}

enum Step {
    Done,
    Dead,
    Branch(usize),
}

impl Search<'_> {
    fn include(&self, s: &mut State, e: usize) {
        let (u, v) = self.edges[e];
        s.status[e] = Status::In;
        s.deg[u] += 1;
        s.deg[v] += 1;
        let (ru, rv) = (find(&mut s.parent, u), find(&mut s.parent, v));
        s.parent[ru] = rv;
        s.chosen += 1;
    }

    fn propagate(&self, s: &mut State) -> Step {
        let n = self.n;
        loop {
            if s.chosen + 1 == n {
                return Step::Done;
            }
            let root: Vec<usize> = (0..n).map(|v| find(&mut s.parent, v)).collect();
            let mut count = vec![0usize; n];
            let mut first = vec![usize::MAX; n];
            // the single outside endpoint of every usable edge, if unique
            const MANY: usize = usize::MAX - 1;
            let mut target = vec![usize::MAX; n];
            let touch = |c: usize, w: usize, target: &mut [usize]| {
                target[c] = match target[c] {
                    usize::MAX => w,
                    t if t == w => t,
                    _ => MANY,
                };
            };
            let mut bridge: Vec<usize> = (0..n).collect();
            for (e, &(u, v)) in self.edges.iter().enumerate() {
                if s.status[e] != Status::Open {
                    continue;
                }
                let (cu, cv) = (root[u], root[v]);
                if cu == cv || s.deg[u] >= self.k || s.deg[v] >= self.k {
                    s.status[e] = Status::Out;
                    continue;
                }
                for c in [cu, cv] {
                    count[c] += 1;
                    if first[c] == usize::MAX {
                        first[c] = e;
                    }
                }
                touch(cu, v, &mut target);
                touch(cv, u, &mut target);
                let (bu, bv) = (find(&mut bridge, cu), find(&mut bridge, cv));
                bridge[bu] = bv;
            }
            let comps: Vec<usize> = (0..n).filter(|&v| root[v] == v).collect();
            let b0 = find(&mut bridge, comps[0]);
            if comps.iter().any(|&c| count[c] == 0 || find(&mut bridge, c) != b0) {
                return Step::Dead;
            }
            if let Some(&c) = comps.iter().find(|&&c| count[c] == 1) {
                self.include(s, first[c]);
                continue;
            }
            let mut demand = vec![0usize; n];
            for &c in &comps {
                let w = target[c];
                if w < MANY {
                    demand[w] += 1;
                    if demand[w] > self.k - s.deg[w] {
                        return Step::Dead;
                    }
                }
            }
            let best = comps.iter().copied().min_by_key(|&c| (count[c], c)).unwrap();
            return Step::Branch(first[best]);
        }
    }

    fn solve(&self, mut s: State) -> Option<State> {
        loop {
            match self.propagate(&mut s) {
                Step::Done => return Some(s),
                Step::Dead => return None,
                Step::Branch(e) => {
                    let mut with = s.clone();
                    self.include(&mut with, e);
                    if let Some(found) = self.solve(with) {
                        return Some(found);
                    }
                    s.status[e] = Status::Out;
                }
            }
        }
    }
}

/// Searches for a spanning tree of the connected graph `g` in which every
/// vertex has degree at most `k >= 2`. Returns `None` if there is none.
pub fn find_k_tree(g: &Graph, k: usize) -> Result<Option<Certificate>> {
    if k < 2 {
        return Err(input(format!("k-tree search needs k >= 2, got {k}")));
    }
    if !g.is_connected() {
        return Err(input("k-tree search needs a connected graph"));
    }
    let n = g.order();
    if n == 1 {
        return Ok(Some(Certificate::KTree(Vec::new())));
    }
    let edges = g.edges();
    let search = Search { n, k, edges: &edges };
    let start = State {
        parent: (0..n).collect(),
        deg: vec![0; n],
        status: vec![Status::Open; edges.len()],
        chosen: 0,
    };
    Ok(search.solve(start).map(|s| {
        let tree = edges
            .iter()
            .zip(&s.status)
            .filter(|(_, &st)| st == Status::In)
            .map(|(&e, _)| e)
            .collect();
        Certificate::KTree(tree)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certifiers::check_k_tree;
    use crate::corpus::connected_graphs;
    use crate::graph::{disjoint_union, join};

    fn tree_of(g: &Graph, k: usize) -> Option<Vec<(usize, usize)>> {
        match find_k_tree(g, k).unwrap() {
            Some(Certificate::KTree(t)) => {
                check_k_tree(g, k, &t).unwrap();
                Some(t)
            }
            None => None,
            Some(other) => panic!("{other:?}"),
        }
    }

    // exhaustive reference: every (n-1)-subset of edges
    fn brute(g: &Graph, k: usize) -> bool {
        let edges = g.edges();
        let n = g.order();
        let m = edges.len();
        if n == 1 {
            return true;
        }
        let mut pick: Vec<usize> = (0..n - 1).collect();
        if m < n - 1 {
            return false;
        }
        loop {
            let t: Vec<_> = pick.iter().map(|&i| edges[i]).collect();
            if check_k_tree(g, k, &t).is_ok() {
                return true;
            }
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if pick[i] < m - (n - 1 - i) {
                    pick[i] += 1;
                    for j in i + 1..n - 1 {
                        pick[j] = pick[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        assert!(tree_of(&Graph::path(5), 2).is_some());
        assert!(tree_of(&Graph::star(3), 2).is_none());
        assert!(tree_of(&Graph::star(3), 3).is_some());
        assert_eq!(tree_of(&Graph::empty(1), 2), Some(vec![]));
        assert!(tree_of(&Graph::complete(8), 2).is_some());
        assert!(tree_of(&Graph::complete_bipartite(3, 5), 2).is_none());
        assert!(tree_of(&Graph::complete_bipartite(3, 4), 2).is_some());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(find_k_tree(&Graph::path(3), 1).is_err());
        assert!(find_k_tree(&Graph::empty(2), 2).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 2..=7 {
            for g in connected_graphs(n).unwrap() {
                for k in 2..=3 {
                    assert_eq!(tree_of(&g, k).is_some(), brute(&g, k), "{g:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn extremal_graph_has_no_k_tree() {
        // K1 ∇ (K_{n-k-1} ∪ k K1) with n = 30, k = 4: five pendant-like leaves
        let (n, k) = (30, 4);
        let g = join(
            &Graph::empty(1),
            &disjoint_union(&[Graph::complete(n - k - 1), Graph::empty(k)]).unwrap(),
        );
        assert!(tree_of(&g, k).is_none());
        assert!(tree_of(&g, k + 1).is_some());
    }
}
