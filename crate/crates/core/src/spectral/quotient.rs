use super::{DenseSymMatrix, SquareMatrix};
use crate::error::{input, Result};
use crate::graph::VertexSet;

/// Ordered partition of `0..order` into nonempty classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(classes: Vec<VertexSet>, order: usize) -> Result<Self> {
        let mut owner = vec![usize::MAX; order];
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(input(format!("partition class {ci} is empty")));
            }
            class.check_range(order)?;
            for v in class.iter() {
                if owner[v] != usize::MAX {
                    return Err(input(format!("vertex {v} appears in two classes")));
                }
                owner[v] = ci;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(input(format!("vertex {v} is not covered by the partition")));
        }
        Ok(Partition { classes })
    }

    pub fn singletons(order: usize) -> Self {
        Partition {
            classes: (0..order).map(|v| VertexSet::new([v])).collect(),
        }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn order(&self) -> usize {
        self.classes.iter().map(VertexSet::len).sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Quotient {
    pub matrix: SquareMatrix,
    pub equitable: bool,
}

/// Quotient `B_Π`: entry `(i, j)` is the mean row sum of block `M_{i,j}`.
/// Equitability is decided exactly for integer matrices and up to a relative
/// `1e-12` otherwise.
pub fn quotient_matrix(m: &DenseSymMatrix, p: &Partition) -> Result<Quotient> {
    if p.order() != m.order() {
        return Err(input(format!(
            "partition covers {} indices, matrix has order {}",
            p.order(),
            m.order()
        )));
    }
    let k = p.len();
    let integral = m.is_integral();
    let mut b = SquareMatrix::zeros(k);
    let mut equitable = true;
    for (i, ci) in p.classes().iter().enumerate() {
        for (j, cj) in p.classes().iter().enumerate() {
            let sums: Vec<f64> = ci
                .iter()
                .map(|r| cj.iter().map(|c| m.get(r, c)).sum())
                .collect();
            let mean = sums.iter().sum::<f64>() / sums.len() as f64;
            b.set(i, j, mean);
            let constant = if integral {
                sums.iter().all(|&s| s == sums[0])
            } else {
                let scale = sums.iter().fold(1.0f64, |a, s| a.max(s.abs()));
                sums.iter().all(|&s| (s - sums[0]).abs() <= 1e-12 * scale)
            };
            equitable &= constant;
        }
    }
    Ok(Quotient { matrix: b, equitable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join, Graph};
    use crate::spectral::adjacency;

    #[test]
    fn identity_partition() {
        let a = adjacency(&Graph::complete(4));
        let q = quotient_matrix(&a, &Partition::singletons(4)).unwrap();
        assert!(q.equitable);
        assert_eq!(&q.matrix, a.as_square());
    }

    #[test]
    fn star_partition() {
        let a = adjacency(&Graph::star(3));
        let p = Partition::new(vec![VertexSet::new([0]), VertexSet::new(1..4)], 4).unwrap();
        let q = quotient_matrix(&a, &p).unwrap();
        assert!(q.equitable);
        assert_eq!(q.matrix.rows(), vec![vec![0.0, 3.0], vec![1.0, 0.0]]);
    }

    #[test]
    fn ktree_extremal_partition() {
        // K1 ∇ (K18 ∪ 3K1), classes center / clique / pendants
        let g = join(&Graph::empty(1), &disjoint_union(&[Graph::complete(18), Graph::empty(3)]).unwrap());
        let p = Partition::new(
            vec![VertexSet::new([0]), VertexSet::new(1..19), VertexSet::new(19..22)],
            22,
        )
        .unwrap();
        let q = quotient_matrix(&adjacency(&g), &p).unwrap();
        assert!(q.equitable);
        assert_eq!(
            q.matrix.rows(),
            vec![vec![0.0, 18.0, 3.0], vec![1.0, 17.0, 0.0], vec![1.0, 0.0, 0.0]]
        );
    }

    #[test]
    fn non_equitable_detected() {
        let a = adjacency(&Graph::path(4));
        let p = Partition::new(vec![VertexSet::new([0, 1]), VertexSet::new([2, 3])], 4).unwrap();
        let q = quotient_matrix(&a, &p).unwrap();
        assert!(!q.equitable);
        assert_eq!(q.matrix.get(0, 1), 0.5);
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(vec![VertexSet::new([0]), VertexSet::new([0, 1])], 2).is_err());
        assert!(Partition::new(vec![VertexSet::new([0])], 2).is_err());
        assert!(Partition::new(vec![VertexSet::new([0, 1]), VertexSet::empty()], 2).is_err());
        assert!(Partition::new(vec![VertexSet::new([0, 3])], 2).is_err());
        let a = adjacency(&Graph::path(3));
        assert!(quotient_matrix(&a, &Partition::singletons(2)).is_err());
    }
}
