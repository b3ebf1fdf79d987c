use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::SQRT_2;
use core::fmt;

use num_complex::Complex64;

use super::quaternion::Quaternion;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, Mat};

/// The simple non-exceptional Euclidean Jordan algebras and their direct sums.
#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraKind {
    /// Real symmetric `n x n` matrices.
    RealSym(usize),
    /// Complex Hermitian `n x n` matrices.
    ComplexHerm(usize),
    /// Quaternionic Hermitian `n x n` matrices.
    QuatHerm(usize),
    /// The spin factor `R ⊕ R^d`.
    SpinFactor(usize),
    DirectSum(Vec<Algebra>),
}

/// A Euclidean Jordan algebra with a fixed orthonormal coordinate basis.
///
/// Coordinates are orthonormal for the trace form, normalized so that every
/// primitive idempotent has unit norm. The layout is:
///
/// * matrix kinds: the `n` diagonal entries, then for each `i < j` the
///   components of the `(i, j)` entry scaled by `√2` (one for real, re/im for
///   complex, the four quaternion components for quaternionic);
/// * spin factors: `√2 (s, x)` for the element `(s, x)`;
/// * direct sums: the summands' coordinates concatenated.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    kind: AlgebraKind,
    dim: usize,
    rank: usize,
}

impl Algebra {
    pub fn new(kind: AlgebraKind) -> Result<Self> {
        let (dim, rank) = match &kind {
            AlgebraKind::RealSym(n) => (check_size("RealSym", *n, 1)? * (n + 1) / 2, *n),
            AlgebraKind::ComplexHerm(n) => (check_size("ComplexHerm", *n, 1)? * n, *n),
            AlgebraKind::QuatHerm(n) => (check_size("QuatHerm", *n, 1)? * (2 * n - 1), *n),
            AlgebraKind::SpinFactor(d) => (check_size("SpinFactor", *d, 2)? + 1, 2),
            AlgebraKind::DirectSum(parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidSize {
                        kind: "DirectSum",
                        size: 0,
                    });
                }
                (
                    parts.iter().map(|p| p.dim).sum(),
                    parts.iter().map(|p| p.rank).sum(),
                )
            }
        };
        Ok(Algebra { kind, dim, rank })
    }

    pub fn real_sym(n: usize) -> Result<Self> {
        Self::new(AlgebraKind::RealSym(n))
    }

    pub fn complex_herm(n: usize) -> Result<Self> {
        Self::new(AlgebraKind::ComplexHerm(n))
    }

    pub fn quat_herm(n: usize) -> Result<Self> {
        Self::new(AlgebraKind::QuatHerm(n))
    }

    pub fn spin_factor(d: usize) -> Result<Self> {
        Self::new(AlgebraKind::SpinFactor(d))
    }

    pub fn direct_sum(parts: Vec<Algebra>) -> Result<Self> {
        Self::new(AlgebraKind::DirectSum(parts))
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    /// Ambient real dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Size of every Jordan frame.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the complex matrices realizing the algebra, if it is a matrix
    /// kind (quaternionic algebras use the `2n x 2n` embedding).
    pub fn matrix_order(&self) -> Option<usize> {
        match self.kind {
            AlgebraKind::RealSym(n) | AlgebraKind::ComplexHerm(n) => Some(n),
            AlgebraKind::QuatHerm(n) => Some(2 * n),
            _ => None,
        }
    }

    pub fn unit(&self) -> Element {
        let mut coords = vec![0.0; self.dim];
        match &self.kind {
            AlgebraKind::RealSym(n) | AlgebraKind::ComplexHerm(n) | AlgebraKind::QuatHerm(n) => {
                coords[..*n].iter_mut().for_each(|c| *c = 1.0);
            }
            AlgebraKind::SpinFactor(_) => coords[0] = SQRT_2,
            AlgebraKind::DirectSum(parts) => {
                let mut off = 0;
                for p in parts {
                    coords[off..off + p.dim].copy_from_slice(&p.unit().coords);
                    off += p.dim;
                }
            }
        }
        Element {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![0.0; self.dim],
        }
    }

    /// The `i`-th coordinate basis vector.
    pub fn basis(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coords[i] = 1.0;
        e
    }

    pub fn element(&self, coords: Vec<f64>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(Element {
            algebra: self.clone(),
            coords,
        })
    }

    /// Spin-factor element from its natural `(s, x)` parts.
    pub fn spin(&self, s: f64, x: &[f64]) -> Result<Element> {
        match self.kind {
            AlgebraKind::SpinFactor(d) if d == x.len() => {
                let mut coords = Vec::with_capacity(d + 1);
                coords.push(s * SQRT_2);
                coords.extend(x.iter().map(|v| v * SQRT_2));
                Ok(Element {
                    algebra: self.clone(),
                    coords,
                })
            }
            AlgebraKind::SpinFactor(d) => Err(Error::DimensionMismatch {
                expected: d,
                found: x.len(),
            }),
            _ => Err(Error::UnsupportedKind(format!(
                "{self} is not a spin factor"
            ))),
        }
    }

    /// Element of a real or complex Hermitian algebra from a complex matrix;
    /// only the Hermitian part is kept.
    pub fn from_complex_matrix(&self, m: &CMat) -> Result<Element> {
        match self.kind {
            AlgebraKind::RealSym(n) | AlgebraKind::ComplexHerm(n) | AlgebraKind::QuatHerm(n) => {
                let expected = if matches!(self.kind, AlgebraKind::QuatHerm(_)) {
                    2 * n
                } else {
                    n
                };
                if m.order() != expected {
                    return Err(Error::DimensionMismatch {
                        expected,
                        found: m.order(),
                    });
                }
                Ok(Element {
                    algebra: self.clone(),
                    coords: cmat_to_coords(&self.kind, m),
                })
            }
            _ => Err(Error::UnsupportedKind(format!(
                "{self} has no matrix realization"
            ))),
        }
    }

    pub fn from_real_matrix(&self, m: &Mat) -> Result<Element> {
        self.from_complex_matrix(&CMat::from_real(m))
    }

    /// Element of a quaternionic algebra from its quaternion entries (the
    /// Hermitian part is kept).
    pub fn from_quaternion_matrix(&self, rows: &[Vec<Quaternion>]) -> Result<Element> {
        let AlgebraKind::QuatHerm(n) = self.kind else {
            return Err(Error::UnsupportedKind(format!(
                "{self} is not quaternionic"
            )));
        };
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let mut m = CMat::zeros(2 * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                let b = q.to_complex_block();
                for r in 0..2 {
                    for c in 0..2 {
                        m[(2 * i + r, 2 * j + c)] = b[r][c];
                    }
                }
            }
        }
        self.from_complex_matrix(&m)
    }

    /// Offsets and algebras of the direct summands (a single entry for simple
    /// algebras).
    pub fn summands(&self) -> Vec<(usize, &Algebra)> {
        match &self.kind {
            AlgebraKind::DirectSum(parts) => {
                let mut off = 0;
                parts
                    .iter()
                    .map(|p| {
                        let here = off;
                        off += p.dim;
                        (here, p)
                    })
                    .collect()
            }
            _ => vec![(0, self)],
        }
    }

    /// Jordan product of raw coordinate vectors.
    pub(crate) fn product_coords(&self, a: &[f64], b: &[f64]) -> Vec<f64> {
        match &self.kind {
            AlgebraKind::RealSym(_) | AlgebraKind::ComplexHerm(_) | AlgebraKind::QuatHerm(_) => {
                let ma = coords_to_cmat(&self.kind, a);
                let mb = coords_to_cmat(&self.kind, b);
                cmat_to_coords(&self.kind, &ma.jordan(&mb))
            }
            AlgebraKind::SpinFactor(_) => {
                // (s,x)(t,y) = (st + x.y, sy + tx) rewritten for √2-scaled coordinates.
                let (c0, cx) = (a[0], &a[1..]);
                let (d0, dx) = (b[0], &b[1..]);
                let mut out = Vec::with_capacity(a.len());
                out.push((c0 * d0 + linalg::dot(cx, dx)) / SQRT_2);
                out.extend(cx.iter().zip(dx).map(|(x, y)| (c0 * y + d0 * x) / SQRT_2));
                out
            }
            AlgebraKind::DirectSum(parts) => {
                let mut out = Vec::with_capacity(a.len());
                let mut off = 0;
                for p in parts {
                    out.extend(p.product_coords(&a[off..off + p.dim], &b[off..off + p.dim]));
                    off += p.dim;
                }
                out
            }
        }
    }

    /// Gram matrix of the coordinate basis under the trace form, computed
    /// through the realization (not assumed to be the identity).
    pub fn trace_gram(&self) -> Mat {
        let mut g = Mat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..=i {
                let v = realized_trace_form(self, &self.basis(i).coords, &self.basis(j).coords);
                g[(i, j)] = v;
                g[(j, i)] = v;
            }
        }
        g
    }
}

fn check_size(kind: &'static str, size: usize, min: usize) -> Result<usize> {
    if size < min {
        Err(Error::InvalidSize { kind, size })
    } else {
        Ok(size)
    }
}

/// Trace form evaluated via matrices (`Re Tr(ab)`, halved for the quaternionic
/// embedding) or the spin-factor formula `2(st + x.y)`.
fn realized_trace_form(alg: &Algebra, a: &[f64], b: &[f64]) -> f64 {
    match &alg.kind {
        AlgebraKind::RealSym(_) | AlgebraKind::ComplexHerm(_) => {
            coords_to_cmat(&alg.kind, a)
                .mul(&coords_to_cmat(&alg.kind, b))
                .trace()
                .re
        }
        AlgebraKind::QuatHerm(_) => {
            0.5 * coords_to_cmat(&alg.kind, a)
                .mul(&coords_to_cmat(&alg.kind, b))
                .trace()
                .re
        }
        AlgebraKind::SpinFactor(_) => {
            let (s, t) = (a[0] / SQRT_2, b[0] / SQRT_2);
            let xy: f64 = a[1..].iter().zip(&b[1..]).map(|(x, y)| x * y / 2.0).sum();
            2.0 * (s * t + xy)
        }
        AlgebraKind::DirectSum(parts) => {
            let mut off = 0;
            let mut total = 0.0;
            for p in parts {
                total += realized_trace_form(p, &a[off..off + p.dim], &b[off..off + p.dim]);
                off += p.dim;
            }
            total
        }
    }
}

pub(crate) fn coords_to_cmat(kind: &AlgebraKind, c: &[f64]) -> CMat {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    match *kind {
        AlgebraKind::RealSym(n) => {
            let mut m = CMat::zeros(n);
            for i in 0..n {
                m[(i, i)] = Complex64::new(c[i], 0.0);
            }
            let mut k = n;
            for i in 0..n {
                for j in i + 1..n {
                    let v = Complex64::new(c[k] * h, 0.0);
                    m[(i, j)] = v;
                    m[(j, i)] = v;
                    k += 1;
                }
            }
            m
        }
        AlgebraKind::ComplexHerm(n) => {
            let mut m = CMat::zeros(n);
            for i in 0..n {
                m[(i, i)] = Complex64::new(c[i], 0.0);
            }
            let mut k = n;
            for i in 0..n {
                for j in i + 1..n {
                    let v = Complex64::new(c[k] * h, c[k + 1] * h);
                    m[(i, j)] = v;
                    m[(j, i)] = v.conj();
                    k += 2;
                }
            }
            m
        }
        AlgebraKind::QuatHerm(n) => {
            let mut m = CMat::zeros(2 * n);
            let mut put = |i: usize, j: usize, q: Quaternion| {
                let b = q.to_complex_block();
                for r in 0..2 {
                    for s in 0..2 {
                        m[(2 * i + r, 2 * j + s)] = b[r][s];
                    }
                }
            };
            for (i, &ci) in c.iter().enumerate().take(n) {
                put(i, i, Quaternion::real(ci));
            }
            let mut k = n;
            for i in 0..n {
                for j in i + 1..n {
                    let q = Quaternion([c[k], c[k + 1], c[k + 2], c[k + 3]]).scale(h);
                    put(i, j, q);
                    put(j, i, q.conj());
                    k += 4;
                }
            }
            m
        }
        _ => unreachable!("not a matrix kind"),
    }
}

pub(crate) fn cmat_to_coords(kind: &AlgebraKind, m: &CMat) -> Vec<f64> {
    let s2 = SQRT_2;
    match *kind {
        AlgebraKind::RealSym(n) => {
            let mut c: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
            for i in 0..n {
                for j in i + 1..n {
                    c.push(s2 * 0.5 * (m[(i, j)].re + m[(j, i)].re));
                }
            }
            c
        }
        AlgebraKind::ComplexHerm(n) => {
            let mut c: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let z = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
                    c.push(s2 * z.re);
                    c.push(s2 * z.im);
                }
            }
            c
        }
        AlgebraKind::QuatHerm(n) => {
            let block = |i: usize, j: usize| {
                Quaternion::from_complex_block([
                    [m[(2 * i, 2 * j)], m[(2 * i, 2 * j + 1)]],
                    [m[(2 * i + 1, 2 * j)], m[(2 * i + 1, 2 * j + 1)]],
                ])
            };
            let mut c: Vec<f64> = (0..n).map(|i| block(i, i).re()).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let q = (block(i, j) + block(j, i).conj()).scale(0.5);
                    c.extend(q.0.iter().map(|v| s2 * v));
                }
            }
            c
        }
        _ => unreachable!("not a matrix kind"),
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AlgebraKind::RealSym(n) => write!(f, "RealSym({n})"),
            AlgebraKind::ComplexHerm(n) => write!(f, "ComplexHerm({n})"),
            AlgebraKind::QuatHerm(n) => write!(f, "QuatHerm({n})"),
            AlgebraKind::SpinFactor(d) => write!(f, "SpinFactor({d})"),
            AlgebraKind::DirectSum(parts) => {
                write!(f, "DirectSum(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A vector of the algebra, in orthonormal coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    algebra: Algebra,
    coords: Vec<f64>,
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    fn same_algebra(&self, other: &Element) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn jordan(&self, other: &Element) -> Result<Element> {
        self.same_algebra(other)?;
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &Element) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.algebra.product_coords(&self.coords, &other.coords),
        }
    }

    pub fn square(&self) -> Element {
        self.product_unchecked(self)
    }

    /// Trace inner product `<a, b>`; in orthonormal coordinates this is the dot
    /// product.
    pub fn inner(&self, other: &Element) -> Result<f64> {
        self.same_algebra(other)?;
        Ok(linalg::dot(&self.coords, &other.coords))
    }

    /// Trace `<a, u>`.
    pub fn trace(&self) -> f64 {
        linalg::dot(&self.coords, &self.algebra.unit().coords)
    }

    /// Norm induced by the trace form.
    pub fn norm(&self) -> f64 {
        linalg::norm(&self.coords)
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        self.map_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        self.map_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: f64) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: f64, other: &Element) -> Element {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        self.map_with(other, |a, b| a + s * b)
    }

    fn map_with(&self, other: &Element, f: impl Fn(f64, f64) -> f64) -> Element {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| f(*a, *b))
            .collect();
        Element {
            algebra: self.algebra.clone(),
            coords,
        }
    }

    /// Distance in the trace norm.
    pub fn distance(&self, other: &Element) -> f64 {
        self.sub(other).norm()
    }

    /// Matrix realization (quaternionic kinds give the complex embedding).
    pub fn to_complex_matrix(&self) -> Option<CMat> {
        self.algebra
            .matrix_order()
            .map(|_| coords_to_cmat(&self.algebra.kind, &self.coords))
    }

    /// Quaternion entries of a quaternionic element.
    pub fn to_quaternion_matrix(&self) -> Option<Vec<Vec<Quaternion>>> {
        let AlgebraKind::QuatHerm(n) = self.algebra.kind else {
            return None;
        };
        let m = coords_to_cmat(&self.algebra.kind, &self.coords);
        Some(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            Quaternion::from_complex_block([
                                [m[(2 * i, 2 * j)], m[(2 * i, 2 * j + 1)]],
                                [m[(2 * i + 1, 2 * j)], m[(2 * i + 1, 2 * j + 1)]],
                            ])
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// Natural `(s, x)` parts of a spin-factor element.
    pub fn spin_parts(&self) -> Option<(f64, Vec<f64>)> {
        match self.algebra.kind {
            AlgebraKind::SpinFactor(_) => Some((
                self.coords[0] / SQRT_2,
                self.coords[1..].iter().map(|c| c / SQRT_2).collect(),
            )),
            _ => None,
        }
    }

    /// Restriction to one direct summand.
    pub fn component(&self, offset: usize, part: &Algebra) -> Element {
        Element {
            algebra: part.clone(),
            coords: self.coords[offset..offset + part.dim()].to_vec(),
        }
    }

    /// Embeds an element of a summand into this algebra, zero elsewhere.
    pub(crate) fn embed(alg: &Algebra, offset: usize, part: &Element) -> Element {
        let mut coords = vec![0.0; alg.dim()];
        coords[offset..offset + part.coords.len()].copy_from_slice(&part.coords);
        Element {
            algebra: alg.clone(),
            coords,
        }
    }
}

/// `a ∘ b`.
pub fn jordan_product(a: &Element, b: &Element) -> Result<Element> {
    a.jordan(b)
}

/// `<a, b>` for the trace form normalized so primitive idempotents have unit
/// norm.
pub fn trace_inner_product(a: &Element, b: &Element) -> Result<f64> {
    a.inner(b)
}

/// Normalized Jordan-identity defect
/// `‖a²∘(a∘b) − a∘(a²∘b)‖ / (1 + ‖a‖³‖b‖)`.
pub fn jordan_identity_residual(a: &Element, b: &Element) -> Result<f64> {
    a.same_algebra(b)?;
    let a2 = a.square();
    let lhs = a2.product_unchecked(&a.product_unchecked(b));
    let rhs = a.product_unchecked(&a2.product_unchecked(b));
    let na = a.norm();
    Ok(lhs.distance(&rhs) / (1.0 + na * na * na * b.norm()))
}

impl Algebra {
    /// Builds a simple algebra from its short name (`real`, `complex`,
    /// `quaternion`, `spin`).
    pub fn from_name(name: &str, size: usize) -> Result<Self> {
        match name {
            "real" => Self::real_sym(size),
            "complex" => Self::complex_herm(size),
            "quaternion" => Self::quat_herm(size),
            "spin" => Self::spin_factor(size),
            other => Err(Error::UnsupportedKind(String::from(other))),
        }
    }

    /// Short name accepted by [`from_name`](Self::from_name).
    pub fn short_name(&self) -> &'static str {
        match self.kind {
            AlgebraKind::RealSym(_) => "real",
            AlgebraKind::ComplexHerm(_) => "complex",
            AlgebraKind::QuatHerm(_) => "quaternion",
            AlgebraKind::SpinFactor(_) => "spin",
            AlgebraKind::DirectSum(_) => "sum",
        }
    }
}
