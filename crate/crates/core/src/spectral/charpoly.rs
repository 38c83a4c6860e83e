//! Characteristic polynomials of small matrices and real-root isolation.
//!
//! Roots are isolated recursively: the real roots of `p'` split the interval
//! into monotone pieces, each holding at most one root of `p`, found by
//! bisection on a sign change. Critical points where `p` vanishes up to
//! rounding are reported as (multiple) roots.

use super::SquareMatrix;
use crate::error::{Error, Result};

/// Monic characteristic polynomial `det(xI - M)`, highest degree first,
/// by the Faddeev–LeVerrier recurrence.
pub fn characteristic_polynomial(m: &SquareMatrix) -> Vec<f64> {
    let n = m.order();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[0] = 1.0;
    let mut mk = SquareMatrix::zeros(n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for l in 0..n {
                    s += m.get(i, l) * mk.get(l, j);
                }
                if i == j {
                    s += coeffs[k - 1];
                }
                next.set(i, j, s);
            }
        }
        let mut trace = 0.0;
        for i in 0..n {
            for l in 0..n {
                trace += m.get(i, l) * next.get(l, i);
            }
        }
        coeffs[k] = -trace / k as f64;
        mk = next;
    }
    coeffs
}

/// Horner evaluation, coefficients highest degree first.
pub fn eval_poly(p: &[f64], x: f64) -> f64 {
    p.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn magnitude(p: &[f64], x: f64) -> f64 {
    let ax = x.abs();
    p.iter().fold(0.0, |acc, &c| acc * ax + c.abs())
}

fn derivative(p: &[f64]) -> Vec<f64> {
    let deg = p.len() - 1;
    p[..deg]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (deg - i) as f64)
        .collect()
}

fn bisect(p: &[f64], mut a: f64, mut b: f64) -> f64 {
    let mut fa = eval_poly(p, a);
    for _ in 0..400 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = eval_poly(p, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Real roots of `p` in `[lo, hi]`, ascending, multiple roots listed once.
pub fn real_roots(p: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let start = p.iter().position(|&c| c != 0.0).unwrap_or(p.len());
    let p = &p[start..];
    if p.len() <= 1 {
        return Vec::new();
    }
    if p.len() == 2 {
        let r = -p[1] / p[0];
        return if (lo..=hi).contains(&r) { vec![r] } else { Vec::new() };
    }
    let crit = real_roots(&derivative(p), lo, hi);
    let mut knots = Vec::with_capacity(crit.len() + 2);
    knots.push(lo);
    knots.extend(crit.iter().copied().filter(|&c| c > lo && c < hi));
    knots.push(hi);

    let mut roots = Vec::new();
    for &c in &crit {
        if eval_poly(p, c).abs() <= 1e-12 * magnitude(p, c) {
            roots.push(c);
        }
    }
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval_poly(p, a), eval_poly(p, b));
        if fa == 0.0 {
            roots.push(a);
        }
        if fb == 0.0 {
            roots.push(b);
        }
        if fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
            roots.push(bisect(p, a, b));
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * a.abs().max(1.0));
    roots
}

/// Largest real eigenvalue of a small square matrix.
pub fn largest_eigenvalue_dense(m: &SquareMatrix) -> Result<f64> {
    let bound = m.max_abs_row_sum() + 1.0;
    let p = characteristic_polynomial(m);
    real_roots(&p, -bound, bound)
        .last()
        .copied()
        .ok_or_else(|| Error::Numeric("matrix has no real eigenvalue in its Gershgorin disc".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[f64]]) -> SquareMatrix {
        SquareMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn two_by_two() {
        let m = mat(&[&[0.0, 3.0], &[1.0, 0.0]]);
        assert_eq!(characteristic_polynomial(&m), vec![1.0, 0.0, -3.0]);
        assert!((largest_eigenvalue_dense(&m).unwrap() - 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn complete_bipartite_quotient() {
        // K_{3,4}: classes of sizes 3 and 4
        let m = mat(&[&[0.0, 4.0], &[3.0, 0.0]]);
        assert!((largest_eigenvalue_dense(&m).unwrap() - 12f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn quartic_with_known_roots() {
        // x^4 - 5x^2 + 4 = (x^2 - 1)(x^2 - 4)
        let m = mat(&[
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 0.0, 1.0, 2.0],
            &[2.0, 1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
        ]);
        let p = characteristic_polynomial(&m);
        for (c, e) in p.iter().zip([1.0, 0.0, -5.0, 0.0, 4.0]) {
            assert!((c - e).abs() < 1e-12);
        }
        let roots = real_roots(&p, -10.0, 10.0);
        assert_eq!(roots.len(), 4);
        for (r, e) in roots.iter().zip([-2.0, -1.0, 1.0, 2.0]) {
            assert!((r - e).abs() < 1e-12, "{roots:?}");
        }
        assert!((largest_eigenvalue_dense(&m).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn double_root_found() {
        // adjacency of 2K2 has eigenvalues 1, 1, -1, -1
        let m = mat(&[
            &[0.0, 1.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[0.0, 0.0, 1.0, 0.0],
        ]);
        assert!((largest_eigenvalue_dense(&m).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn no_real_eigenvalue() {
        let rot = mat(&[&[0.0, -1.0], &[1.0, 0.0]]);
        assert!(matches!(largest_eigenvalue_dense(&rot), Err(Error::Numeric(_))));
    }
}
