//! Shifted power iteration for the largest eigenvalue of a nonnegative
//! symmetric matrix.
//!
//! The matrix is split into irreducible blocks (components of its off-diagonal
//! support) and each block is iterated separately from the all-ones vector.
//! Iterating on `M + sigma I` with `sigma` half the Gershgorin lower bound
//! keeps `-rho` from tying with `rho` on bipartite supports. A block is
//! accepted once `max |M x - r x| <= tol * max(1, r)` where `r = x^T M x`.

use super::{DenseSymMatrix, SpectralResult};
use crate::error::{input, Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverOptions {
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

pub fn spectral_radius(m: &DenseSymMatrix, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with(
        m,
        &SolverOptions {
            tol,
            ..SolverOptions::default()
        },
    )
}

fn blocks(m: &DenseSymMatrix) -> Vec<Vec<usize>> {
    let n = m.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut block = Vec::new();
        while let Some(u) = stack.pop() {
            block.push(u);
            for (v, &x) in m.row(u).iter().enumerate() {
                if v != u && x != 0.0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

struct BlockResult {
    radius: f64,
    vector: Vec<f64>,
    residual: f64,
    iterations: usize,
    converged: bool,
}

fn iterate_block(m: &DenseSymMatrix, idx: &[usize], opts: &SolverOptions) -> BlockResult {
    let k = idx.len();
    if k == 1 {
        return BlockResult {
            radius: m.get(idx[0], idx[0]),
            vector: vec![1.0],
            residual: 0.0,
            iterations: 0,
            converged: true,
        };
    }
    let sub: Vec<f64> = idx
        .iter()
        .flat_map(|&i| idx.iter().map(move |&j| m.get(i, j)))
        .collect();
    let gersh_low = (0..k)
        .map(|i| {
            let row = &sub[i * k..(i + 1) * k];
            row[i] - row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x).sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min);
    let shift = if gersh_low < 0.0 { -gersh_low / 2.0 } else { 0.0 };

    let mut x = vec![1.0 / (k as f64).sqrt(); k];
    let mut y = vec![0.0; k];
    let mut best = BlockResult {
        radius: 0.0,
        vector: x.clone(),
        residual: f64::INFINITY,
        iterations: 0,
        converged: false,
    };
    for it in 0..=opts.max_iterations {
        for i in 0..k {
            y[i] = sub[i * k..(i + 1) * k].iter().zip(&x).map(|(a, b)| a * b).sum();
        }
        let r: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let res = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - r * xi).abs())
            .fold(0.0, f64::max);
        if res < best.residual {
            best = BlockResult {
                radius: r,
                vector: x.clone(),
                residual: res,
                iterations: it,
                converged: false,
            };
        }
        if res <= opts.tol * r.abs().max(1.0) {
            best.converged = true;
            return best;
        }
        if it == opts.max_iterations {
            break;
        }
        let mut norm = 0.0;
        for i in 0..k {
            y[i] += shift * x[i];
            norm += y[i] * y[i];
        }
        let norm = norm.sqrt();
        if norm == 0.0 {
            // zero block: every eigenvalue is 0 and x is already an eigenvector
            best.converged = true;
            return best;
        }
        for i in 0..k {
            x[i] = y[i] / norm;
        }
    }
    best.iterations = opts.max_iterations;
    best
}

/// Largest eigenvalue of a nonnegative symmetric matrix. For reducible
/// matrices the block with the largest radius wins and its vector is
/// zero-padded.
pub fn spectral_radius_with(m: &DenseSymMatrix, opts: &SolverOptions) -> Result<SpectralResult> {
    if !(opts.tol > 0.0) {
        return Err(input(format!("tolerance must be positive, got {}", opts.tol)));
    }
    if !m.is_nonnegative() {
        return Err(input("power iteration needs a nonnegative matrix"));
    }
    let n = m.order();
    let mut best: Option<(f64, Vec<usize>, BlockResult)> = None;
    let mut iterations = 0;
    for idx in blocks(m) {
        let r = iterate_block(m, &idx, opts);
        iterations += r.iterations;
        if !r.converged {
            let mut vector = vec![0.0; n];
            for (&i, &xi) in idx.iter().zip(&r.vector) {
                vector[i] = xi;
            }
            return Err(Error::Convergence {
                iterations: r.iterations,
                residual: r.residual,
                best: Box::new(SpectralResult {
                    radius: r.radius,
                    vector,
                    residual: r.residual,
                    iterations,
                }),
            });
        }
        if best.as_ref().is_none_or(|(rad, _, _)| r.radius > *rad) {
            best = Some((r.radius, idx, r));
        }
    }
    let (radius, idx, r) = best.ok_or_else(|| input("empty matrix"))?;
    let mut vector = vec![0.0; n];
    for (&i, &xi) in idx.iter().zip(&r.vector) {
        vector[i] = xi;
    }
    Ok(SpectralResult {
        radius,
        vector,
        residual: r.residual,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, Graph};
    use crate::spectral::{adjacency, signless_laplacian};

    const TOL: f64 = 1e-10;

    #[test]
    fn complete_graph() {
        let r = spectral_radius(&adjacency(&Graph::complete(4)), TOL).unwrap();
        assert!((r.radius - 3.0).abs() < 1e-9);
        assert!(r.vector.iter().all(|&x| x > 0.0));
        let norm: f64 = r.vector.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complete_bipartite_converges_despite_symmetric_spectrum() {
        let r = spectral_radius(&adjacency(&Graph::complete_bipartite(3, 4)), TOL).unwrap();
        assert!((r.radius - 12f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn star_signless_laplacian() {
        let r = spectral_radius(&signless_laplacian(&Graph::star(5)), TOL).unwrap();
        assert!((r.radius - 6.0).abs() < 1e-9);
    }

    #[test]
    fn disconnected_takes_largest_block() {
        // K_{n-k} ∪ k K1 with n - k = 5: rho = 4
        let g = disjoint_union(&[Graph::complete(5), Graph::empty(3)]).unwrap();
        let r = spectral_radius(&adjacency(&g), TOL).unwrap();
        assert!((r.radius - 4.0).abs() < 1e-9);
        assert!(r.vector[5..].iter().all(|&x| x == 0.0));
        let e = spectral_radius(&adjacency(&Graph::empty(3)), TOL).unwrap();
        assert_eq!(e.radius, 0.0);
    }

    #[test]
    fn residual_certificate_holds() {
        let m = adjacency(&Graph::cycle(7));
        let r = spectral_radius(&m, TOL).unwrap();
        assert!(r.residual <= TOL * r.radius.max(1.0));
        assert!(m.residual(&r.vector, r.radius) <= TOL * r.radius.max(1.0) * 1.0001);
        assert!((r.radius - 2.0).abs() < 1e-9);
    }

    #[test]
    fn deterministic() {
        let m = adjacency(&Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap());
        assert_eq!(spectral_radius(&m, TOL).unwrap(), spectral_radius(&m, TOL).unwrap());
    }

    #[test]
    fn reports_non_convergence() {
        let m = adjacency(&Graph::path(12));
        let opts = SolverOptions {
            tol: 1e-14,
            max_iterations: 3,
        };
        match spectral_radius_with(&m, &opts) {
            Err(Error::Convergence { best, residual, .. }) => {
                assert!(residual > 0.0);
                assert_eq!(best.vector.len(), 12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let m = adjacency(&Graph::path(3));
        assert!(spectral_radius(&m, 0.0).is_err());
        let neg = DenseSymMatrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]).unwrap();
        assert!(spectral_radius(&neg, TOL).is_err());
    }
}
