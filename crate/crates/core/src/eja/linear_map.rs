use alloc::vec::Vec;

use super::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// A linear map between algebras, acting on orthonormal coordinates.
///
/// Because the coordinates are orthonormal for the trace form, the transpose
/// of `matrix` is the trace-form adjoint.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    pub domain: Algebra,
    pub codomain: Algebra,
    pub matrix: Mat,
}

impl LinearMap {
    pub fn new(domain: Algebra, codomain: Algebra, matrix: Mat) -> Result<Self> {
        if matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                found: matrix.cols(),
            });
        }
        if matrix.rows() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: codomain.dim(),
                found: matrix.rows(),
            });
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(alg: &Algebra) -> Self {
        LinearMap {
            domain: alg.clone(),
            codomain: alg.clone(),
            matrix: Mat::identity(alg.dim()),
        }
    }

    /// Matrix whose `i`-th column is `f(e_i)`.
    pub fn from_fn(domain: &Algebra, codomain: &Algebra, f: impl Fn(&Element) -> Element) -> Self {
        let cols: Vec<Vec<f64>> = (0..domain.dim())
            .map(|i| f(&domain.basis(i)).into_coords())
            .collect();
        LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Mat::from_columns(&cols),
        }
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        if a.algebra() != &self.domain {
            return Err(Error::AlgebraMismatch);
        }
        self.codomain.element(self.matrix.apply(a.coords()))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.codomain != self.domain {
            return Err(Error::AlgebraMismatch);
        }
        Ok(LinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    /// Trace-form adjoint.
    pub fn adjoint(&self) -> LinearMap {
        LinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: self.matrix.transpose(),
        }
    }

    pub fn scale(&self, s: f64) -> LinearMap {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.scale(s),
        }
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        Some(LinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn max_abs_diff(&self, other: &LinearMap) -> f64 {
        self.matrix.max_abs_diff(&other.matrix)
    }

    /// Deviation from trace-form self-adjointness.
    pub fn asymmetry(&self) -> f64 {
        self.matrix.asymmetry()
    }
}

/// `L_c : a ↦ c ∘ a`.
pub fn left_multiplication(c: &Element) -> LinearMap {
    let alg = c.algebra();
    LinearMap::from_fn(alg, alg, |e| c.product_unchecked(e))
}

/// Quadratic representation `U_c = 2 L_c² − L_{c²}`.
pub fn quadratic_rep(c: &Element) -> LinearMap {
    let l = left_multiplication(c);
    let l_sq = left_multiplication(&c.square());
    let matrix = l.matrix.mul(&l.matrix).scale(2.0).sub(&l_sq.matrix);
    LinearMap {
        domain: l.domain,
        codomain: l.codomain,
        matrix,
    }
}
