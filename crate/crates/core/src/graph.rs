//! Simple undirected graphs and two-part (bipartite) graphs.
//!
//! Adjacency is stored as one bit row per vertex. Graphs are immutable once
//! built; every operation that "modifies" a graph returns a new one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Checks that every member lies in `0..n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(input(format!(
                "vertex {v} out of range for a graph on {n} vertices"
            ))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is allowed here so that
    /// operand lists such as `0 K1` compose; [`Graph::new`] rejects it.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list, deduplicating repeated pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(input("graph must have at least one vertex"));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(input(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(input(format!("self-loop at vertex {u}")));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.set(0, n - 1);
        }
        g
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        join(&Graph::empty(1), &Graph::empty(leaves))
    }

    /// `K_{p,q}` as a plain graph, first part `0..p`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        join(&Graph::empty(p), &Graph::empty(q))
    }

    pub(crate) fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    fn clear(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row of `v` as a single word. Only valid for `n <= 64`.
    pub(crate) fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.rows[v * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n])
    }

    fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// `c(G - S)`: components of the subgraph induced on `V(G) \ S`.
    /// Zero when `S = V(G)`.
    pub fn components_after_removal(&self, s: &VertexSet) -> Result<usize> {
        s.check_range(self.n)?;
        let mut removed = vec![false; self.n];
        for v in s.iter() {
            removed[v] = true;
        }
        Ok(self.components_avoiding(&removed).len())
    }

    /// Word-parallel `c(G - S)` for `n <= 64`, `removed` as a bit mask.
    pub(crate) fn components_after_removal_mask(&self, removed: u64) -> usize {
        debug_assert!(self.n <= WORD);
        let all = if self.n == WORD { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut left = all & !removed;
        let mut count = 0;
        while left != 0 {
            count += 1;
            let mut frontier = left & left.wrapping_neg();
            let mut comp = frontier;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.row_word(v);
                }
                next &= left & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
        }
        count
    }

    /// Deletes `v v_i` and adds `u v_i` for every `v_i` in `targets`.
    pub fn rotate_edges(&self, u: usize, v: usize, targets: &VertexSet) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(input(format!("rotation endpoints ({u},{v}) out of range")));
        }
        if u == v {
            return Err(input("rotation needs two distinct vertices"));
        }
        targets.check_range(self.n)?;
        let mut g = self.clone();
        for t in targets.iter() {
            if t == u {
                return Err(input(format!("target {t} equals the receiving vertex")));
            }
            if !self.has_edge(v, t) || self.has_edge(u, t) {
                return Err(input(format!("target {t} is not in N({v}) \\ N({u})")));
            }
            g.clear(v, t);
            g.set(u, t);
        }
        Ok(g)
    }

    pub fn with_edge_removed(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(input(format!("({u},{v}) is not an edge")));
        }
        let mut g = self.clone();
        g.clear(u, v);
        Ok(g)
    }

    pub fn with_edge_added(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(input(format!("cannot add edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(input("permutation length differs from graph order"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(input("not a permutation"));
            }
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }
}

/// `g1 ∇ g2`: disjoint union with every cross edge. `g1` occupies `0..n1`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut g = Graph::empty(n1 + n2);
    for (u, v) in g1.edges() {
        g.set(u, v);
    }
    for (u, v) in g2.edges() {
        g.set(n1 + u, n1 + v);
    }
    for u in 0..n1 {
        for v in 0..n2 {
            g.set(u, n1 + v);
        }
    }
    g
}

/// Vertex-disjoint union, blocks placed in list order.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(input("disjoint union of an empty list"));
    }
    let total = parts.iter().map(Graph::order).sum();
    let mut g = Graph::empty(total);
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            g.set(offset + u, offset + v);
        }
        offset += p.order();
    }
    Ok(g)
}

/// Boundaries recorded by [`bipartite_join`]: `X1 = 0..x_split`,
/// `X2 = x_split..nx`, `Y1 = 0..y_split`, `Y2 = y_split..ny`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinProvenance {
    pub x_split: usize,
    pub y_split: usize,
}

/// Bipartite graph with explicit parts `X = 0..nx` and `Y = 0..ny`.
#[derive(Clone)]
pub struct BipartiteGraph {
    nx: usize,
    ny: usize,
    words: usize,
    rows: Vec<u64>,
    provenance: Option<JoinProvenance>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.nx == other.nx && self.ny == other.ny && self.rows == other.rows
    }
}

impl Eq for BipartiteGraph {}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("nx", &self.nx)
            .field("ny", &self.ny)
            .field("edges", &self.edges())
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl BipartiteGraph {
    pub fn empty(nx: usize, ny: usize) -> Self {
        let words = words_for(ny);
        BipartiteGraph {
            nx,
            ny,
            words,
            rows: vec![0; nx * words],
            provenance: None,
        }
    }

    /// Edges are `(x, y)` pairs with part-local indices.
    pub fn new(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = BipartiteGraph::empty(nx, ny);
        for &(x, y) in edges {
            if x >= nx || y >= ny {
                return Err(input(format!(
                    "edge ({x},{y}) outside parts of sizes {nx} and {ny}"
                )));
            }
            b.set(x, y);
        }
        Ok(b)
    }

    pub fn complete(nx: usize, ny: usize) -> Self {
        let mut b = BipartiteGraph::empty(nx, ny);
        for x in 0..nx {
            for y in 0..ny {
                b.set(x, y);
            }
        }
        b
    }

    /// Builds `nx x ny` graph from a row-major bit mask (bit `x*ny + y`).
    pub fn from_mask(nx: usize, ny: usize, mask: u64) -> Self {
        debug_assert!(nx * ny <= 64);
        let mut b = BipartiteGraph::empty(nx, ny);
        for x in 0..nx {
            for y in 0..ny {
                if mask >> (x * ny + y) & 1 == 1 {
                    b.set(x, y);
                }
            }
        }
        b
    }

    fn set(&mut self, x: usize, y: usize) {
        self.rows[x * self.words + y / WORD] |= 1 << (y % WORD);
    }

    fn clear(&mut self, x: usize, y: usize) {
        self.rows[x * self.words + y / WORD] &= !(1 << (y % WORD));
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn provenance(&self) -> Option<JoinProvenance> {
        self.provenance
    }

    pub fn is_balanced(&self) -> bool {
        self.nx == self.ny
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.nx && y < self.ny && self.rows[x * self.words + y / WORD] >> (y % WORD) & 1 == 1
    }

    pub fn neighbors_x(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.ny).filter(move |&y| self.has_edge(x, y))
    }

    pub fn neighbors_y(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.nx).filter(move |&x| self.has_edge(x, y))
    }

    pub fn degree_x(&self, x: usize) -> usize {
        self.rows[x * self.words..(x + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn degree_y(&self, y: usize) -> usize {
        self.neighbors_y(y).count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.nx)
            .flat_map(|x| self.neighbors_x(x).map(move |y| (x, y)))
            .collect()
    }

    /// `N(S)` for `S ⊆ X`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        s.check_range(self.nx)?;
        Ok((0..self.ny)
            .filter(|&y| s.iter().any(|x| self.has_edge(x, y)))
            .collect())
    }

    /// Minimum degree over all `nx + ny` vertices; 0 for an empty graph.
    pub fn min_degree(&self) -> usize {
        let dx = (0..self.nx).map(|x| self.degree_x(x));
        let dy = (0..self.ny).map(|y| self.degree_y(y));
        dx.chain(dy).min().unwrap_or(0)
    }

    /// Swaps the roles of `X` and `Y`.
    pub fn transpose(&self) -> BipartiteGraph {
        let mut b = BipartiteGraph::empty(self.ny, self.nx);
        for (x, y) in self.edges() {
            b.set(y, x);
        }
        b
    }

    pub fn with_edge_removed(&self, x: usize, y: usize) -> Result<BipartiteGraph> {
        if !self.has_edge(x, y) {
            return Err(input(format!("({x},{y}) is not an edge")));
        }
        let mut b = self.clone();
        b.clear(x, y);
        Ok(b)
    }

    /// Flattens to a plain graph: `X` on `0..nx`, `Y` on `nx..nx+ny`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.nx + self.ny);
        for (x, y) in self.edges() {
            g.set(x, self.nx + y);
        }
        g
    }

    /// Reads a plain graph whose first `nx` vertices form `X`. Fails if an
    /// edge lies inside a part.
    pub fn from_graph(g: &Graph, nx: usize) -> Result<BipartiteGraph> {
        if nx > g.order() {
            return Err(input("part size exceeds graph order"));
        }
        let mut b = BipartiteGraph::empty(nx, g.order() - nx);
        for (u, v) in g.edges() {
            if (u < nx) == (v < nx) {
                return Err(input(format!("edge ({u},{v}) lies inside one part")));
            }
            b.set(u, v - nx);
        }
        Ok(b)
    }

    /// Two-colours a plain graph. Within each component the colour class
    /// holding the smallest vertex becomes part of `X`. Returns the graph
    /// together with the original vertex behind each `X` and `Y` index.
    pub fn from_graph_two_coloring(g: &Graph) -> Result<(BipartiteGraph, Vec<usize>, Vec<usize>)> {
        let mut colour = vec![usize::MAX; g.order()];
        for comp in g.components() {
            let root = comp[0];
            colour[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in g.neighbors(u) {
                    if colour[w] == usize::MAX {
                        colour[w] = 1 - colour[u];
                        stack.push(w);
                    } else if colour[w] == colour[u] {
                        return Err(input("graph is not bipartite"));
                    }
                }
            }
        }
        let xs: Vec<usize> = (0..g.order()).filter(|&v| colour[v] == 0).collect();
        let ys: Vec<usize> = (0..g.order()).filter(|&v| colour[v] == 1).collect();
        let mut b = BipartiteGraph::empty(xs.len(), ys.len());
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in ys.iter().enumerate() {
                if g.has_edge(x, y) {
                    b.set(i, j);
                }
            }
        }
        Ok((b, xs, ys))
    }
}

/// `b1 ∇₁ b2`: union plus every edge between `X2` and `Y1`.
/// The result records the `X1/X2` and `Y1/Y2` boundaries.
pub fn bipartite_join(b1: &BipartiteGraph, b2: &BipartiteGraph) -> BipartiteGraph {
    let nx = b1.nx + b2.nx;
    let ny = b1.ny + b2.ny;
    let mut b = BipartiteGraph::empty(nx, ny);
    for (x, y) in b1.edges() {
        b.set(x, y);
    }
    for (x, y) in b2.edges() {
        b.set(b1.nx + x, b1.ny + y);
    }
    for x in 0..b2.nx {
        for y in 0..b1.ny {
            b.set(b1.nx + x, y);
        }
    }
    b.provenance = Some(JoinProvenance {
        x_split: b1.nx,
        y_split: b1.ny,
    });
    b
}
