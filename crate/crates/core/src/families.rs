//! The extremal graphs for spanning k-trees and perfect matchings, their
//! closed-form spectral radii, and the quotient polynomials used to compare
//! consecutive members.
//!
//! Closed forms are transcribed term by term and evaluated in `f64` without
//! rearrangement so that the tests exercise the printed expressions.

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{bipartite_join, disjoint_union, join, BipartiteGraph, Graph, VertexSet};
use crate::spectral::{Partition, SquareMatrix};

/// `K_1 ∇ (K_{n-k-1} ∪ k K_1)`: center 0, clique `1..n-k`, pendants after.
pub fn ktree_extremal(n: usize, k: usize) -> Result<Graph> {
    if k < 2 || n < k + 2 {
        return Err(input(format!("ktree_extremal needs k >= 2 and n >= k + 2, got n={n}, k={k}")));
    }
    let rest = disjoint_union(&[Graph::complete(n - k - 1), Graph::empty(k)])?;
    Ok(join(&Graph::empty(1), &rest))
}

/// Parameters of `K_s ∇ (K_{n_1} ∪ ... ∪ K_{n_t})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WinFamilyParams {
    pub n: usize,
    pub s: usize,
    pub parts: Vec<usize>,
}

impl WinFamilyParams {
    pub fn new(s: usize, parts: Vec<usize>) -> Result<Self> {
        let n = s + parts.iter().sum::<usize>();
        let p = WinFamilyParams { n, s, parts };
        p.validate()?;
        Ok(p)
    }

    /// The comparison graph `K_s ∇ (K_{n-s-t+1} ∪ (t-1) K_1)`.
    pub fn extremal(n: usize, s: usize, t: usize) -> Result<Self> {
        if t == 0 || n < s + t {
            return Err(input(format!("need t >= 1 and n >= s + t, got n={n}, s={s}, t={t}")));
        }
        let mut parts = vec![1; t];
        parts[0] = n - s - t + 1;
        WinFamilyParams::new(s, parts)
    }

    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.s == 0 {
            return Err(input("cut size s must be at least 1"));
        }
        if self.parts.is_empty() {
            return Err(input("at least one clique part is required"));
        }
        if self.parts.contains(&0) {
            return Err(input("clique parts must be nonempty"));
        }
        if self.parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(input("clique parts must be nonincreasing"));
        }
        if self.s + self.parts.iter().sum::<usize>() != self.n {
            return Err(input("s + sum(parts) must equal n"));
        }
        Ok(())
    }
}

/// `K_s ∇ (K_{n_1} ∪ ... ∪ K_{n_t})`, join set on `0..s`.
pub fn win_family(params: &WinFamilyParams) -> Result<Graph> {
    params.validate()?;
    let cliques: Vec<Graph> = params.parts.iter().map(|&p| Graph::complete(p)).collect();
    Ok(join(&Graph::complete(params.s), &disjoint_union(&cliques)?))
}

/// `K_{s+1,s} ∇₁ K_{n-s-1,n-s}`, balanced of order `2n`.
pub fn matching_extremal(n: usize, s: usize) -> Result<BipartiteGraph> {
    if n == 0 || s >= n {
        return Err(input(format!("matching_extremal needs 0 <= s <= n - 1, got n={n}, s={s}")));
    }
    Ok(bipartite_join(
        &BipartiteGraph::complete(s + 1, s),
        &BipartiteGraph::complete(n - s - 1, n - s),
    ))
}

/// Partition `(X1, X2, Y1, Y2)` of `matching_extremal(n, s).to_graph()`.
pub fn matching_extremal_partition(n: usize, s: usize) -> Result<Partition> {
    if s == 0 || s + 1 >= n {
        return Err(input(format!("all four classes are nonempty only for 1 <= s <= n - 2, got n={n}, s={s}")));
    }
    Partition::new(
        vec![
            VertexSet::new(0..s + 1),
            VertexSet::new(s + 1..n),
            VertexSet::new(n..n + s),
            VertexSet::new(n + s..2 * n),
        ],
        2 * n,
    )
}

fn sqrt_checked(x: f64, what: &str) -> Result<f64> {
    if x < 0.0 {
        return Err(Error::Domain(format!("{what} radicand is negative ({x})")));
    }
    Ok(x.sqrt())
}

fn check_matching_params(n: usize, delta: usize) -> Result<()> {
    if delta == 0 || n < delta + 1 {
        return Err(input(format!("closed forms need n >= delta + 1 >= 2, got n={n}, delta={delta}")));
    }
    Ok(())
}

/// Adjacency spectral radius of `K_{δ+1,δ} ∇₁ K_{n-δ-1,n-δ}`.
pub fn rho_matching_extremal(n: usize, delta: usize) -> Result<f64> {
    check_matching_params(n, delta)?;
    let (n, d) = (n as f64, delta as f64);
    let f = sqrt_checked(
        n.powi(4) - 2.0 * (d + 1.0) * n.powi(3) + (1.0 - d * d) * n * n
            + 2.0 * d * (3.0 * d * d + 4.0 * d + 1.0) * n
            - 3.0 * d * d * (d + 1.0).powi(2),
        "f(n, delta)",
    )?;
    let outer = sqrt_checked(
        2.0 * n * n - 2.0 * (d + 1.0) * n + 2.0 * d * (d + 1.0) + 2.0 * f,
        "rho",
    )?;
    Ok(outer / 2.0)
}

/// Signless Laplacian spectral radius of the same graph.
pub fn q_matching_extremal(n: usize, delta: usize) -> Result<f64> {
    check_matching_params(n, delta)?;
    let (n, d) = (n as f64, delta as f64);
    let root = sqrt_checked(
        4.0 * n * n - (8.0 * d + 4.0) * n + 8.0 * d * d + 8.0 * d + 1.0,
        "q",
    )?;
    Ok((2.0 * n - 1.0 + root) / 2.0)
}

/// The equitable quotient of `A_a(matching_extremal(n, s))` for the
/// classes `(X1, X2, Y1, Y2)`.
pub fn quotient_b_pi(n: usize, s: usize, a: f64) -> Result<SquareMatrix> {
    if s == 0 || s >= n {
        return Err(input(format!("quotient needs 1 <= s < n, got n={n}, s={s}")));
    }
    let (nf, sf) = (n as f64, s as f64);
    SquareMatrix::from_rows(&[
        vec![a * sf, 0.0, sf, 0.0],
        vec![0.0, a * nf, sf, nf - sf],
        vec![sf + 1.0, nf - sf - 1.0, a * nf, 0.0],
        vec![0.0, nf - sf - 1.0, 0.0, a * (nf - sf - 1.0)],
    ])
}

/// Characteristic polynomial of [`quotient_b_pi`] as printed, coefficients
/// highest degree first.
pub fn phi_coefficients(n: f64, s: f64, a: f64) -> [f64; 5] {
    let a2 = a * a;
    [
        1.0,
        -a * (3.0 * n - 1.0),
        -((a2 + 1.0) * s * s - (a2 + 1.0) * (n - 1.0) * s + (1.0 - 3.0 * a2) * n * n
            - (1.0 - 2.0 * a2) * n),
        a * n * (2.0 * a2 * s * s - 2.0 * a2 * (n - 1.0) * s + (1.0 - a2) * (n * n - n)),
        s * (n - s - 1.0) * (a2 - 1.0) * (a2 * n * n - n * s + s * s - n + s),
    ]
}

/// `φ(B_Π^s, x)` by Horner on the printed coefficients.
pub fn phi_quartic(n: f64, s: f64, a: f64, x: f64) -> f64 {
    phi_coefficients(n, s, a).iter().fold(0.0, |acc, &c| acc * x + c)
}

/// The printed right-hand side of `φ(B_Π^s, x) - φ(B_Π^{s-1}, x)`.
pub fn phi_difference(n: f64, s: f64, a: f64, x: f64) -> f64 {
    (n - 2.0 * s)
        * ((a * a + 1.0) * x * x
            - 2.0 * a.powi(3) * n * x
            - (1.0 - a * a) * (2.0 * s * s - 2.0 * n * s + a * a * n * n))
}

/// The quadratics `f(s)` and `g(s)` bounding `2m(G_s^2)` in the k-tree proof.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundPolynomials {
    pub f: f64,
    pub g: f64,
}

pub fn thm13_bound_polynomials(n: f64, k: f64, s: f64) -> BoundPolynomials {
    let quad = (k * k - 2.0 * k) * s * s - (2.0 * k * n - 5.0 * k - 4.0 * n + 6.0) * s;
    BoundPolynomials {
        f: quad + n * n - 6.0 * n + 7.0,
        g: quad + 2.0 * (n - 2.0).powi(2),
    }
}

/// `2m(G_s^2) = (n-(k-2)s-2)(n-(k-2)s-3) + 2((k-2)s+2)s`.
pub fn twice_edges_gs2(n: i64, k: i64, s: i64) -> i64 {
    let c = n - (k - 2) * s;
    (c - 2) * (c - 3) + 2 * ((k - 2) * s + 2) * s
}

/// Whether `g` is isomorphic to `K_1 ∇ (K_{n-k-1} ∪ k K_1)`.
///
/// The degree multiset pins the graph down: a universal vertex, `k`
/// vertices adjacent only to it, and `n-k-1` vertices of degree `n-k-1`
/// that must then be adjacent to the center and to one another.
pub fn is_ktree_extremal(g: &Graph, n: usize, k: usize) -> bool {
    if k < 2 || n < k + 2 || g.order() != n {
        return false;
    }
    let c = n - k - 1;
    if g.edge_count() != c * (c - 1) / 2 + c + k {
        return false;
    }
    let deg = g.degrees();
    let Some(center) = deg.iter().position(|&d| d == n - 1) else {
        return false;
    };
    let mut pendants = 0;
    for (v, &d) in deg.iter().enumerate() {
        if v == center {
            continue;
        }
        if d == 1 {
            pendants += 1;
        } else if d != c {
            return false;
        }
    }
    // when c == 1 the lone clique vertex is itself a leaf of the star
    pendants == k || (c == 1 && pendants == k + 1)
}

fn matches_oriented(b: &BipartiteGraph, n: usize, s: usize) -> bool {
    let low: Vec<usize> = (0..n).filter(|&x| b.degree_x(x) < n).collect();
    if low.len() != s + 1 {
        return false;
    }
    let y1: Vec<usize> = b.neighbors_x(low[0]).collect();
    if y1.len() != s {
        return false;
    }
    low.iter().all(|&x| b.neighbors_x(x).eq(y1.iter().copied()))
}

/// Whether `b` is isomorphic, as a graph, to `K_{δ+1,δ} ∇₁ K_{n-δ-1,n-δ}`.
/// Both orientations of the parts are tried.
pub fn is_matching_extremal(b: &BipartiteGraph, n: usize, delta: usize) -> bool {
    if b.nx() != n || b.ny() != n || delta >= n {
        return false;
    }
    if b.edge_count() != (delta + 1) * delta + (n - delta - 1) * n {
        return false;
    }
    matches_oriented(b, n, delta) || matches_oriented(&b.transpose(), n, delta)
}
