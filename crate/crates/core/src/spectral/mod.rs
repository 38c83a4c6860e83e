//! Matrices attached to a graph and their largest eigenvalue.

mod charpoly;
mod power;
mod quotient;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::Graph;

pub use charpoly::{characteristic_polynomial, eval_poly, largest_eigenvalue_dense, real_roots};
pub use power::{spectral_radius, spectral_radius_with, SolverOptions, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE};
pub use quotient::{quotient_matrix, Partition, Quotient};

/// Square matrix of reals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(order: usize) -> Self {
        SquareMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(input("matrix must have at least one row"));
        }
        let mut data = Vec::with_capacity(order * order);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(input(format!("row {i} has length {}, expected {order}", r.len())));
            }
            if let Some(x) = r.iter().find(|x| !x.is_finite()) {
                return Err(input(format!("non-finite entry {x} in row {i}")));
            }
            data.extend_from_slice(r);
        }
        Ok(SquareMatrix { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.order + j] = x;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    /// Largest absolute row sum, an upper bound on every eigenvalue modulus.
    pub fn max_abs_row_sum(&self) -> f64 {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Symmetric matrix with finite entries.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymMatrix(SquareMatrix);

impl DenseSymMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = SquareMatrix::from_rows(rows)?;
        for i in 0..m.order {
            for j in i + 1..m.order {
                if m.get(i, j) != m.get(j, i) {
                    return Err(input(format!("matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(DenseSymMatrix(m))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    pub fn row(&self, i: usize) -> &[f64] {
        self.0.row(i)
    }

    pub fn as_square(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.data.iter().all(|x| x.fract() == 0.0 && x.abs() < 9.0e15)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.data.iter().all(|&x| x >= 0.0)
    }

    /// `max_i |(M x)_i - lambda x_i|`.
    pub fn residual(&self, x: &[f64], lambda: f64) -> f64 {
        (0..self.order())
            .map(|i| {
                let mx: f64 = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
                (mx - lambda * x[i]).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Largest eigenvalue with its eigenvector, certified by the residual.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub radius: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

pub fn adjacency(g: &Graph) -> DenseSymMatrix {
    a_matrix_unchecked(g, 0.0)
}

pub fn signless_laplacian(g: &Graph) -> DenseSymMatrix {
    a_matrix_unchecked(g, 1.0)
}

/// `A_a(G) = a D(G) + A(G)`.
pub fn a_matrix(g: &Graph, a: f64) -> Result<DenseSymMatrix> {
    if !(a >= 0.0) || !a.is_finite() {
        return Err(input(format!("parameter a must be a finite real >= 0, got {a}")));
    }
    Ok(a_matrix_unchecked(g, a))
}

fn a_matrix_unchecked(g: &Graph, a: f64) -> DenseSymMatrix {
    let n = g.order();
    let mut m = SquareMatrix::zeros(n);
    for u in 0..n {
        let mut d = 0usize;
        for v in g.neighbors(u) {
            m.set(u, v, 1.0);
            d += 1;
        }
        m.set(u, u, a * d as f64);
    }
    DenseSymMatrix(m)
}

/// `rho_a(G)` at the given tolerance.
pub fn rho_a(g: &Graph, a: f64, tol: f64) -> Result<f64> {
    Ok(spectral_radius(&a_matrix(g, a)?, tol)?.radius)
}

/// Hong's bound `sqrt(2m - n + 1)` on the adjacency spectral radius.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    let radicand = 2.0 * g.edge_count() as f64 - g.order() as f64 + 1.0;
    if radicand < 0.0 {
        return Err(Error::Domain(format!(
            "2m - n + 1 = {radicand} is negative (graph has too few edges to be connected)"
        )));
    }
    Ok(radicand.sqrt())
}

/// Das's bound `2m/(n-1) + n - 2` on the signless Laplacian spectral radius.
pub fn das_bound(g: &Graph) -> Result<f64> {
    let n = g.order();
    if n < 2 {
        return Err(input("Das bound needs n >= 2"));
    }
    Ok(2.0 * g.edge_count() as f64 / (n - 1) as f64 + n as f64 - 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(adjacency(&k2).as_square().rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(signless_laplacian(&k2).as_square().rows(), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        let q = signless_laplacian(&Graph::path(3));
        assert_eq!((q.get(0, 0), q.get(1, 1), q.get(2, 2)), (1.0, 2.0, 1.0));
        assert_eq!((q.get(0, 1), q.get(0, 2), q.get(1, 2)), (1.0, 0.0, 1.0));
        assert_eq!(a_matrix(&k2, 0.0).unwrap(), adjacency(&k2));
        assert_eq!(a_matrix(&k2, 1.0).unwrap(), signless_laplacian(&k2));
        assert!(a_matrix(&k2, -0.5).is_err());
        assert!(a_matrix(&k2, f64::NAN).is_err());
    }

    #[test]
    fn hong_examples() {
        assert_eq!(hong_bound(&Graph::complete(4)).unwrap(), 3.0);
        assert!((hong_bound(&Graph::path(3)).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((hong_bound(&Graph::cycle(5)).unwrap() - 6f64.sqrt()).abs() < 1e-15);
        assert!(matches!(hong_bound(&Graph::empty(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn das_examples() {
        assert_eq!(das_bound(&Graph::complete(4)).unwrap(), 6.0);
        assert_eq!(das_bound(&Graph::star(3)).unwrap(), 4.0);
        assert!((das_bound(&Graph::cycle(4)).unwrap() - (8.0 / 3.0 + 2.0)).abs() < 1e-15);
        assert!(das_bound(&Graph::empty(1)).is_err());
    }

    #[test]
    fn symmetric_constructor_checks() {
        assert!(DenseSymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(DenseSymMatrix::from_rows(&[vec![0.0, f64::INFINITY], vec![f64::INFINITY, 0.0]]).is_err());
        assert!(SquareMatrix::from_rows(&[vec![0.0, 1.0]]).is_err());
    }
}
