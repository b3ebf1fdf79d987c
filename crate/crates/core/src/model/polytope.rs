//! Vertex-listed polytope queries by brute-force Carathéodory enumeration.
//! Fine for the handful of vertices desk-scale models have.

use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{self, Mat};

/// Dimension of the affine hull of `points` (`-1` encoded as `None` for an
/// empty set).
pub fn affine_dimension(points: &[&[f64]], tol: f64) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    if rest.is_empty() {
        return Some(0);
    }
    let diffs: Vec<Vec<f64>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    Some(Mat::from_rows(&diffs).rank(tol))
}

/// Best convex combination of `vertices` approximating `point`.
#[derive(Clone, Debug, PartialEq)]
pub struct HullFit {
    /// Weight per vertex (zero for vertices outside the chosen subset).
    pub weights: Vec<f64>,
    /// `max(residual, -min weight)`; zero (up to rounding) iff contained.
    pub infeasibility: f64,
}

/// Searches all vertex subsets of size at most `affine dim + 1` for convex
/// weights reproducing `point`.
pub fn hull_fit(vertices: &[Vec<f64>], point: &[f64], tol: f64) -> HullFit {
    let k = vertices.len();
    let refs: Vec<&[f64]> = vertices.iter().map(Vec::as_slice).collect();
    let max_size = affine_dimension(&refs, tol).map_or(0, |d| d + 1).min(k);
    let mut best = HullFit {
        weights: vec![0.0; k],
        infeasibility: f64::INFINITY,
    };
    let mut subset = Vec::with_capacity(max_size);
    for size in 1..=max_size {
        for_each_combination(k, size, &mut subset, &mut |s| {
            if let Some((w, inf)) = fit_subset(vertices, s, point) {
                if inf < best.infeasibility {
                    best.weights = vec![0.0; k];
                    for (&i, &wi) in s.iter().zip(&w) {
                        best.weights[i] = wi;
                    }
                    best.infeasibility = inf;
                }
            }
            best.infeasibility <= tol * 1e-3
        });
        if best.infeasibility <= tol * 1e-3 {
            break;
        }
    }
    best
}

fn fit_subset(vertices: &[Vec<f64>], subset: &[usize], point: &[f64]) -> Option<(Vec<f64>, f64)> {
    let d = point.len();
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(subset.len());
    for &i in subset {
        let mut c = vertices[i].clone();
        c.push(1.0);
        cols.push(c);
    }
    let a = Mat::from_columns(&cols);
    let mut b = point.to_vec();
    b.push(1.0);
    debug_assert_eq!(b.len(), d + 1);
    let w = a.least_squares(&b)?;
    let residual = linalg::max_abs_diff(&a.apply(&w), &b);
    let negativity = w.iter().fold(0.0f64, |m, &x| m.max(-x));
    Some((w, residual.max(negativity)))
}

/// Calls `f` on each `size`-subset of `0..n`; stops early when `f` returns
/// true.
fn for_each_combination(
    n: usize,
    size: usize,
    buf: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    fn rec(
        start: usize,
        n: usize,
        size: usize,
        buf: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if buf.len() == size {
            return f(buf);
        }
        for i in start..n {
            if n - i < size - buf.len() {
                break;
            }
            buf.push(i);
            if rec(i + 1, n, size, buf, f) {
                buf.pop();
                return true;
            }
            buf.pop();
        }
        false
    }
    buf.clear();
    rec(0, n, size, buf, f)
}
