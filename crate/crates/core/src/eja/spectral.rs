use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::algebra::{cmat_to_coords, coords_to_cmat, Algebra, AlgebraKind, Element};
use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eigen, CMat};
use crate::tol::MERGE_TOL;

/// A Jordan frame with its eigenvalues, sorted in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub frame: Vec<Element>,
    pub eigenvalues: Vec<f64>,
}

/// Worst violations of the frame invariants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameResiduals {
    pub idempotency: f64,
    pub orthogonality: f64,
    pub completeness: f64,
}

impl FrameResiduals {
    pub fn worst(&self) -> f64 {
        self.idempotency
            .max(self.orthogonality)
            .max(self.completeness)
    }
}

impl SpectralData {
    pub fn reconstruct(&self) -> Option<Element> {
        let first = self.frame.first()?;
        let mut acc = first.algebra().zero();
        for (p, l) in self.frame.iter().zip(&self.eigenvalues) {
            acc = acc.axpy(*l, p);
        }
        Some(acc)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// Groups frame indices whose eigenvalues agree within
    /// `tol * (1 + max|λ|)`, chaining consecutive values. Returns
    /// `(mean eigenvalue, indices)` in descending order.
    pub fn blocks(&self, tol: f64) -> Vec<(f64, Vec<usize>)> {
        let scale = 1.0 + self.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut out: Vec<(f64, Vec<usize>)> = Vec::new();
        for (i, &l) in self.eigenvalues.iter().enumerate() {
            match out.last_mut() {
                Some((_, idx))
                    if (self.eigenvalues[*idx.last().unwrap()] - l).abs() <= tol * scale =>
                {
                    idx.push(i)
                }
                _ => out.push((l, vec![i])),
            }
        }
        for (v, idx) in out.iter_mut() {
            *v = idx.iter().map(|&i| self.eigenvalues[i]).sum::<f64>() / idx.len() as f64;
        }
        out
    }

    /// Checks that the frame consists of pairwise orthogonal idempotents
    /// summing to the unit.
    pub fn frame_residuals(&self) -> FrameResiduals {
        frame_residuals(&self.frame)
    }
}

/// Residuals of the Jordan-frame conditions for an arbitrary element list.
pub fn frame_residuals(frame: &[Element]) -> FrameResiduals {
    let mut r = FrameResiduals {
        idempotency: 0.0,
        orthogonality: 0.0,
        completeness: 0.0,
    };
    let Some(first) = frame.first() else {
        return r;
    };
    let alg = first.algebra();
    let mut sum = alg.zero();
    for (i, p) in frame.iter().enumerate() {
        r.idempotency = r.idempotency.max(p.square().distance(p));
        for q in &frame[i + 1..] {
            r.orthogonality = r.orthogonality.max(p.product_unchecked(q).norm());
        }
        sum = sum.add(p);
    }
    r.completeness = sum.distance(&alg.unit());
    r
}

/// Spectral decomposition `a = Σ λᵢ pᵢ` over a Jordan frame.
pub fn spectral_decompose(a: &Element) -> SpectralData {
    let alg = a.algebra();
    let mut pairs: Vec<(f64, Element)> = match alg.kind() {
        AlgebraKind::RealSym(_) | AlgebraKind::ComplexHerm(_) => hermitian_frame(alg, a),
        AlgebraKind::QuatHerm(_) => quaternionic_frame(alg, a),
        AlgebraKind::SpinFactor(_) => spin_frame(alg, a),
        AlgebraKind::DirectSum(_) => {
            let mut all = Vec::with_capacity(alg.rank());
            for (off, part) in alg.summands() {
                let sd = spectral_decompose(&a.component(off, part));
                for (l, p) in sd.eigenvalues.into_iter().zip(sd.frame) {
                    all.push((l, Element::embed(alg, off, &p)));
                }
            }
            all
        }
    };
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let (eigenvalues, frame) = pairs.into_iter().unzip();
    SpectralData { frame, eigenvalues }
}

fn hermitian_frame(alg: &Algebra, a: &Element) -> Vec<(f64, Element)> {
    let m = coords_to_cmat(alg.kind(), a.coords());
    let (values, vectors) = hermitian_eigen(&m);
    let n = m.order();
    values
        .into_iter()
        .enumerate()
        .map(|(k, l)| {
            let v: Vec<Complex64> = (0..n).map(|r| vectors[(r, k)]).collect();
            let p = alg
                .element(cmat_to_coords(alg.kind(), &CMat::outer(&v)))
                .expect("dimension");
            (l, p)
        })
        .collect()
}

/// Antiunitary quaternionic structure on the complex embedding:
/// `(v1, v2) ↦ (conj v2, −conj v1)` on each 2-block.
fn quaternionic_j(v: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    for b in 0..v.len() / 2 {
        out[2 * b] = v[2 * b + 1].conj();
        out[2 * b + 1] = -v[2 * b].conj();
    }
    out
}

fn quaternionic_frame(alg: &Algebra, a: &Element) -> Vec<(f64, Element)> {
    let m = coords_to_cmat(alg.kind(), a.coords());
    let (values, vectors) = hermitian_eigen(&m);
    let n2 = m.order();
    let column = |k: usize| -> Vec<Complex64> { (0..n2).map(|r| vectors[(r, k)]).collect() };

    // Eigenvalues of the embedding come in equal pairs; keep blocks even.
    let scale = 1.0 + values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (k, &l) in values.iter().enumerate() {
        match blocks.last_mut() {
            Some(b)
                if b.len() % 2 == 1
                    || (values[*b.last().unwrap()] - l).abs() <= MERGE_TOL * scale =>
            {
                b.push(k)
            }
            _ => blocks.push(vec![k]),
        }
    }

    let mut out = Vec::with_capacity(n2 / 2);
    for block in blocks {
        let candidates: Vec<Vec<Complex64>> = block.iter().map(|&k| column(k)).collect();
        let mut chosen: Vec<Vec<Complex64>> = Vec::with_capacity(block.len());
        while chosen.len() < block.len() {
            // Pick the candidate least explained by the span chosen so far.
            let mut best: Option<(f64, Vec<Complex64>)> = None;
            for c in &candidates {
                let mut w = c.clone();
                for q in &chosen {
                    let coef = linalg::cdot(q, &w);
                    for (wi, qi) in w.iter_mut().zip(q) {
                        *wi -= coef * qi;
                    }
                }
                let nrm = linalg::cnorm(&w);
                if best.as_ref().is_none_or(|(b, _)| nrm > *b) {
                    best = Some((nrm, w));
                }
            }
            let (nrm, w) = best.expect("non-empty block");
            let w: Vec<Complex64> = w.iter().map(|z| z / nrm).collect();
            let jw = quaternionic_j(&w);
            let proj = CMat::outer(&w).add(&CMat::outer(&jw));
            let l = 0.5 * m.mul(&proj).trace().re;
            let p = alg
                .element(cmat_to_coords(alg.kind(), &proj))
                .expect("dimension");
            out.push((l, p));
            chosen.push(w);
            chosen.push(jw);
        }
    }
    out
}

fn spin_frame(alg: &Algebra, a: &Element) -> Vec<(f64, Element)> {
    let (s, x) = a.spin_parts().expect("spin factor");
    let r = linalg::norm(&x);
    let dir: Vec<f64> = if r > f64::EPSILON * (1.0 + s.abs()) {
        x.iter().map(|v| v / r).collect()
    } else {
        let mut e1 = vec![0.0; x.len()];
        e1[0] = 1.0;
        e1
    };
    let half_dir: Vec<f64> = dir.iter().map(|v| 0.5 * v).collect();
    let neg_half_dir: Vec<f64> = dir.iter().map(|v| -0.5 * v).collect();
    let plus = alg.spin(0.5, &half_dir).expect("spin");
    let minus = alg.spin(0.5, &neg_half_dir).expect("spin");
    let r = if r > f64::EPSILON * (1.0 + s.abs()) {
        r
    } else {
        0.0
    };
    vec![(s + r, plus), (s - r, minus)]
}

/// `f(a) = Σ f(λᵢ) pᵢ`.
pub fn functional_calculus(a: &Element, f: impl Fn(f64) -> f64) -> Element {
    let sd = spectral_decompose(a);
    combine(a.algebra(), &sd, |l| Ok(f(l))).expect("infallible")
}

/// Functional calculus for partial functions; the first eigenvalue rejected by
/// `f` is reported.
pub fn try_functional_calculus(a: &Element, f: impl Fn(f64) -> Option<f64>) -> Result<Element> {
    let sd = spectral_decompose(a);
    combine(a.algebra(), &sd, |l| {
        f(l).ok_or(Error::DomainViolation { eigenvalue: l })
    })
}

fn combine(alg: &Algebra, sd: &SpectralData, f: impl Fn(f64) -> Result<f64>) -> Result<Element> {
    let mut acc = alg.zero();
    for (p, &l) in sd.frame.iter().zip(&sd.eigenvalues) {
        acc = acc.axpy(f(l)?, p);
    }
    Ok(acc)
}

/// Principal square root; eigenvalues in `[-tol, 0)` are treated as zero.
pub fn sqrt(a: &Element, tol: f64) -> Result<Element> {
    try_functional_calculus(a, |l| {
        if l < -tol {
            None
        } else {
            Some(libm::sqrt(l.max(0.0)))
        }
    })
}

/// Jordan inverse; fails when an eigenvalue lies within `tol` of zero.
pub fn inverse(a: &Element, tol: f64) -> Result<Element> {
    try_functional_calculus(a, |l| if l.abs() <= tol { None } else { Some(1.0 / l) })
}

/// Where an element sits relative to the cone of squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ConeClass {
    Interior,
    Boundary,
    Outside,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConeMembership {
    pub class: ConeClass,
    pub min_eigenvalue: f64,
    /// For elements outside the cone: the spectral projection onto the
    /// negative eigenvalues, a cone member `w` with `<a, w> < 0`.
    pub witness: Option<Element>,
}

/// Classifies `a` by its smallest eigenvalue.
pub fn cone_membership(a: &Element, tol: f64) -> ConeMembership {
    let sd = spectral_decompose(a);
    let min = sd.min_eigenvalue();
    let class = if min > tol {
        ConeClass::Interior
    } else if min >= -tol {
        ConeClass::Boundary
    } else {
        ConeClass::Outside
    };
    let witness = (class == ConeClass::Outside).then(|| {
        let mut w = a.algebra().zero();
        for (p, &l) in sd.frame.iter().zip(&sd.eigenvalues) {
            if l < -tol {
                w = w.add(p);
            }
        }
        w
    });
    ConeMembership {
        class,
        min_eigenvalue: min,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat;

    #[test]
    fn unit_has_all_ones() {
        for alg in [
            Algebra::real_sym(3).unwrap(),
            Algebra::complex_herm(2).unwrap(),
            Algebra::quat_herm(3).unwrap(),
            Algebra::spin_factor(4).unwrap(),
        ] {
            let sd = spectral_decompose(&alg.unit());
            assert_eq!(sd.frame.len(), alg.rank());
            assert!(sd.eigenvalues.iter().all(|l| (l - 1.0).abs() < 1e-12));
            assert!(sd.frame_residuals().worst() < 1e-12);
        }
    }

    #[test]
    fn spin_closed_form() {
        let alg = Algebra::spin_factor(3).unwrap();
        let a = alg.spin(2.0, &[1.0, 0.0, 0.0]).unwrap();
        let sd = spectral_decompose(&a);
        assert!((sd.eigenvalues[0] - 3.0).abs() < 1e-15);
        assert!((sd.eigenvalues[1] - 1.0).abs() < 1e-15);
        assert_eq!(sd.frame[0], alg.spin(0.5, &[0.5, 0.0, 0.0]).unwrap());
        assert_eq!(sd.frame[1], alg.spin(0.5, &[-0.5, 0.0, 0.0]).unwrap());
    }

    #[test]
    fn spin_zero_vector_uses_first_axis() {
        let alg = Algebra::spin_factor(2).unwrap();
        let sd = spectral_decompose(&alg.unit().scale(3.0));
        assert_eq!(sd.frame[0], alg.spin(0.5, &[0.5, 0.0]).unwrap());
        assert_eq!(sd.eigenvalues, vec![3.0, 3.0]);
    }

    #[test]
    fn sqrt_of_diagonal() {
        let alg = Algebra::complex_herm(2).unwrap();
        let a = alg.from_real_matrix(&Mat::diagonal(&[4.0, 9.0])).unwrap();
        let r = sqrt(&a, 1e-8).unwrap();
        let expect = alg.from_real_matrix(&Mat::diagonal(&[2.0, 3.0])).unwrap();
        assert!(r.distance(&expect) < 1e-14);
        assert!(sqrt(&alg.unit(), 1e-8).unwrap().distance(&alg.unit()) < 1e-14);
    }

    #[test]
    fn domain_errors_carry_eigenvalue() {
        let alg = Algebra::real_sym(2).unwrap();
        let a = alg.from_real_matrix(&Mat::diagonal(&[1.0, -0.5])).unwrap();
        assert_eq!(
            sqrt(&a, 1e-8),
            Err(Error::DomainViolation { eigenvalue: -0.5 })
        );
        let b = alg.from_real_matrix(&Mat::diagonal(&[1.0, 0.0])).unwrap();
        assert_eq!(
            inverse(&b, 1e-8),
            Err(Error::DomainViolation { eigenvalue: 0.0 })
        );
    }

    #[test]
    fn negative_unit_is_outside_with_unit_witness() {
        for alg in [
            Algebra::real_sym(3).unwrap(),
            Algebra::spin_factor(5).unwrap(),
        ] {
            let m = cone_membership(&alg.unit().scale(-1.0), 1e-8);
            assert_eq!(m.class, ConeClass::Outside);
            let w = m.witness.unwrap();
            assert!(w.distance(&alg.unit()) < 1e-12);
            let pairing = alg.unit().scale(-1.0).inner(&w).unwrap();
            assert!((pairing + alg.rank() as f64).abs() < 1e-12);
        }
        assert_eq!(
            cone_membership(&Algebra::quat_herm(2).unwrap().unit(), 1e-8).class,
            ConeClass::Interior
        );
    }

    #[test]
    fn direct_sum_frames_merge_and_sort() {
        let alg = Algebra::direct_sum(vec![
            Algebra::real_sym(2).unwrap(),
            Algebra::spin_factor(2).unwrap(),
        ])
        .unwrap();
        let mut coords = vec![0.0; alg.dim()];
        coords[0] = 5.0;
        coords[1] = -1.0;
        coords[3] = 2.0 * core::f64::consts::SQRT_2;
        let a = alg.element(coords).unwrap();
        let sd = spectral_decompose(&a);
        assert_eq!(sd.eigenvalues, vec![5.0, 2.0, 2.0, -1.0]);
        assert!(sd.reconstruct().unwrap().distance(&a) < 1e-14);
        assert!(sd.frame_residuals().worst() < 1e-14);
    }

    #[test]
    fn blocks_merge_repeated_values() {
        let alg = Algebra::real_sym(3).unwrap();
        let a = alg
            .from_real_matrix(&Mat::diagonal(&[3.0, 1.0, 3.0]))
            .unwrap();
        let blocks = spectral_decompose(&a).blocks(MERGE_TOL);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].1.len(), 2);
        assert!((blocks[0].0 - 3.0).abs() < 1e-14);
    }
}
