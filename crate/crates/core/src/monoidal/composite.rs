use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::conjugate::epr_vector;
use crate::eja::{Algebra, AlgebraKind, Element};
use crate::error::{Error, Result};
use crate::linalg::{CMat, Mat};
use crate::model::{validate_bipartite, BipartiteState, Model};
use crate::random::{random_frame, random_state};

/// A non-signaling composite `AB` of two complex quantum models, with
/// `V(AB) = Herm(n·m)` and `π(x, y) = x ⊗ y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Composite {
    pub a: Model,
    pub b: Model,
    pub ab: Model,
    /// Column `i·dim B + j` holds the coordinates of `π(eᵢ, eⱼ)`.
    pi: Mat,
}

fn complex_algebra(model: &Model) -> Result<&Algebra> {
    match model.algebra() {
        Some(alg) if matches!(alg.kind(), AlgebraKind::ComplexHerm(_)) => Ok(alg),
        _ => Err(Error::UnsupportedBackend),
    }
}

fn order(alg: &Algebra) -> usize {
    alg.matrix_order().expect("matrix algebra")
}

pub fn quantum_composite(a: &Model, b: &Model) -> Result<Composite> {
    let (alg_a, alg_b) = (complex_algebra(a)?, complex_algebra(b)?);
    let alg_ab = Algebra::complex_herm(order(alg_a) * order(alg_b))?;
    let mut cols = Vec::with_capacity(alg_a.dim() * alg_b.dim());
    for i in 0..alg_a.dim() {
        let x = alg_a.basis(i).to_complex_matrix().expect("matrix");
        for j in 0..alg_b.dim() {
            let y = alg_b.basis(j).to_complex_matrix().expect("matrix");
            cols.push(alg_ab.from_complex_matrix(&x.kron(&y))?.into_coords());
        }
    }
    Ok(Composite {
        a: a.clone(),
        b: b.clone(),
        ab: Model::jordan(alg_ab),
        pi: Mat::from_columns(&cols),
    })
}

impl Composite {
    /// The trivial model `1` with `V(1) = R`.
    pub fn unit_model() -> Model {
        Model::jordan(Algebra::complex_herm(1).expect("size 1"))
    }

    pub fn algebra_a(&self) -> &Algebra {
        self.a.algebra().expect("jordan")
    }

    pub fn algebra_b(&self) -> &Algebra {
        self.b.algebra().expect("jordan")
    }

    pub fn algebra_ab(&self) -> &Algebra {
        self.ab.algebra().expect("jordan")
    }

    /// The pairing as a matrix from `V(A) ⊗ V(B)` (row-major Kronecker
    /// coordinates) to `V(AB)`.
    pub fn pairing_matrix(&self) -> &Mat {
        &self.pi
    }

    pub fn pi(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.algebra() != self.algebra_a() || y.algebra() != self.algebra_b() {
            return Err(Error::AlgebraMismatch);
        }
        let mut v = Vec::with_capacity(x.coords().len() * y.coords().len());
        for xi in x.coords() {
            v.extend(y.coords().iter().map(|yj| xi * yj));
        }
        self.algebra_ab().element(self.pi.apply(&v))
    }

    /// `M` with `M[i][j] = ω(π(eᵢ, eⱼ))`, so that `ω(π(x, y)) = xᵀ M y`.
    pub fn pullback_matrix(&self, omega: &Element) -> Result<Mat> {
        if omega.algebra() != self.algebra_ab() {
            return Err(Error::AlgebraMismatch);
        }
        let v = self.pi.transpose().apply(omega.coords());
        let db = self.algebra_b().dim();
        let rows: Vec<Vec<f64>> = v.chunks(db).map(<[f64]>::to_vec).collect();
        Ok(Mat::from_rows(&rows))
    }

    pub fn pullback(&self, omega: &Element) -> Result<BipartiteState> {
        BipartiteState::new(self.a.clone(), self.b.clone(), self.pullback_matrix(omega)?)
    }

    /// `|Ψ⟩⟨Ψ|` for the maximally entangled vector, when both factors have
    /// the same order.
    pub fn epr_state(&self) -> Option<Element> {
        let n = order(self.algebra_a());
        if n != order(self.algebra_b()) {
            return None;
        }
        let psi = epr_vector(n);
        self.algebra_ab()
            .from_complex_matrix(&CMat::outer(&psi))
            .ok()
    }

    /// Checks `Σ_{E×F} π(x, y) = u_AB` on sampled frames, the product rule
    /// on product states, and that sampled joint states (the EPR state
    /// among them) pull back to valid bipartite states.
    pub fn verify<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        samples: usize,
        tol: f64,
    ) -> CompositeReport {
        let (alg_a, alg_b, alg_ab) = (self.algebra_a(), self.algebra_b(), self.algebra_ab());
        let u = alg_ab.unit();
        let mut unit_defect = 0.0f64;
        for _ in 0..samples.max(1) {
            let (e, f) = (random_frame(alg_a, rng), random_frame(alg_b, rng));
            let mut sum = alg_ab.zero();
            for x in &e {
                for y in &f {
                    sum = sum.add(&self.pi(x, y).expect("factors"));
                }
            }
            unit_defect = unit_defect.max(sum.distance(&u));
        }

        let mut product_rule = 0.0f64;
        for _ in 0..samples.max(1) {
            let (alpha, beta) = (random_state(alg_a, rng), random_state(alg_b, rng));
            let joint = alg_ab
                .from_complex_matrix(
                    &alpha
                        .to_complex_matrix()
                        .expect("matrix")
                        .kron(&beta.to_complex_matrix().expect("matrix")),
                )
                .expect("order");
            let (x, y) = (
                random_frame(alg_a, rng).remove(0),
                random_frame(alg_b, rng).remove(0),
            );
            let lhs = joint
                .inner(&self.pi(&x, &y).expect("factors"))
                .expect("same algebra");
            let rhs =
                alpha.inner(&x).expect("same algebra") * beta.inner(&y).expect("same algebra");
            product_rule = product_rule.max((lhs - rhs).abs());
        }

        let mut joints: Vec<Element> = self.epr_state().into_iter().collect();
        joints.extend((0..samples.max(1)).map(|_| random_state(alg_ab, rng)));
        let mut pullback = 0.0f64;
        for omega in &joints {
            let w = self.pullback(omega).expect("shape");
            pullback = pullback.max(validate_bipartite(&w, rng, samples.clamp(1, 10), tol).worst());
        }
        CompositeReport {
            unit_defect,
            product_rule,
            pullback,
            states_examined: joints.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompositeReport {
    /// `max ‖Σ π(x, y) − u_AB‖` over sampled test pairs.
    pub unit_defect: f64,
    /// `max |(α ⊗ β)(π(x, y)) − α(x) β(y)|`.
    pub product_rule: f64,
    /// Worst bipartite defect among pulled-back joint states.
    pub pullback: f64,
    pub states_examined: usize,
}

impl CompositeReport {
    pub fn worst(&self) -> f64 {
        self.unit_defect.max(self.product_rule).max(self.pullback)
    }
}

/// Rank-one projections onto `eᵢ`, `(eᵢ + eⱼ)/√2` and `(eᵢ + i eⱼ)/√2`;
/// `n²` of them, spanning `Herm(n)`.
pub fn spanning_projections(alg: &Algebra) -> Vec<Element> {
    let n = order(alg);
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let zero = Complex64::new(0.0, 0.0);
    let mut vectors = Vec::new();
    for i in 0..n {
        let mut v = vec![zero; n];
        v[i] = Complex64::new(1.0, 0.0);
        vectors.push(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            for phase in [Complex64::new(h, 0.0), Complex64::new(0.0, h)] {
                let mut v = vec![zero; n];
                v[i] = Complex64::new(h, 0.0);
                v[j] = phase;
                vectors.push(v);
            }
        }
    }
    vectors
        .iter()
        .map(|v| alg.from_complex_matrix(&CMat::outer(v)).expect("order"))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalTomography {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_ab: usize,
    /// Rank of the product effects `π(x, y)` over spanning projections.
    pub span_rank: usize,
}

impl LocalTomography {
    pub fn passes(&self) -> bool {
        self.dim_ab == self.dim_a * self.dim_b && self.span_rank == self.dim_ab
    }
}

pub fn local_tomography_check(c: &Composite) -> LocalTomography {
    let (alg_a, alg_b) = (c.algebra_a(), c.algebra_b());
    let mut rows = Vec::new();
    for x in spanning_projections(alg_a) {
        for y in spanning_projections(alg_b) {
            rows.push(c.pi(&x, &y).expect("factors").into_coords());
        }
    }
    let span_rank = Mat::from_rows(&rows).rank(1e-10);
    LocalTomography {
        dim_a: alg_a.dim(),
        dim_b: alg_b.dim(),
        dim_ab: c.algebra_ab().dim(),
        span_rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;
    use crate::random::random_element;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// `Tr(ω (x ⊗ y))` computed directly on complex matrices.
    fn direct_pairing(omega: &Element, x: &Element, y: &Element) -> f64 {
        let op = x
            .to_complex_matrix()
            .unwrap()
            .kron(&y.to_complex_matrix().unwrap());
        omega.to_complex_matrix().unwrap().mul(&op).trace().re
    }

    fn qudit(n: usize) -> Model {
        Model::jordan(Algebra::complex_herm(n).unwrap())
    }

    #[test]
    fn qubit_pair_dimensions() {
        let c = quantum_composite(&qudit(2), &qudit(2)).unwrap();
        assert_eq!(c.algebra_ab(), &Algebra::complex_herm(4).unwrap());
        assert_eq!(c.pairing_matrix().rows(), 16);
    }

    #[test]
    fn non_complex_factors_are_rejected() {
        let rebit = Model::jordan(Algebra::real_sym(2).unwrap());
        assert_eq!(
            quantum_composite(&rebit, &qudit(2)),
            Err(Error::UnsupportedBackend)
        );
        let bit = Model::classical(vec!["0".into(), "1".into()]).unwrap();
        assert_eq!(
            quantum_composite(&qudit(2), &bit),
            Err(Error::UnsupportedBackend)
        );
    }

    #[test]
    fn pairing_matches_matrix_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(60);
        let c = quantum_composite(&qudit(2), &qudit(3)).unwrap();
        for _ in 0..10 {
            let omega = random_element(c.algebra_ab(), &mut rng);
            let x = random_element(c.algebra_a(), &mut rng);
            let y = random_element(c.algebra_b(), &mut rng);
            let via_pi = omega.inner(&c.pi(&x, &y).unwrap()).unwrap();
            let m = c.pullback_matrix(&omega).unwrap();
            let via_m = linalg::dot(x.coords(), &m.apply(y.coords()));
            let direct = direct_pairing(&omega, &x, &y);
            assert!((via_pi - direct).abs() < 1e-12 && (via_m - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn product_rule_on_basis_projections() {
        let c = quantum_composite(&qudit(2), &qudit(2)).unwrap();
        let alg = c.algebra_a().clone();
        let p0 = alg.from_real_matrix(&Mat::diagonal(&[1.0, 0.0])).unwrap();
        let alpha = alg.from_real_matrix(&Mat::diagonal(&[0.8, 0.2])).unwrap();
        let beta = alg.from_real_matrix(&Mat::diagonal(&[0.3, 0.7])).unwrap();
        let joint = c.pi(&alpha, &beta).unwrap();
        assert!((joint.inner(&c.pi(&p0, &p0).unwrap()).unwrap() - 0.8 * 0.3).abs() < 1e-15);
    }

    #[test]
    fn epr_pulls_back_to_eta() {
        let c = quantum_composite(&qudit(3), &qudit(3)).unwrap();
        let m = c.pullback_matrix(&c.epr_state().unwrap()).unwrap();
        let conj = crate::conjugate::make_conjugate(&qudit(3)).unwrap();
        assert!(m.max_abs_diff(&conj.eta.matrix) < 1e-15);
    }

    #[test]
    fn composites_satisfy_both_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for (n, m) in [(2, 2), (2, 3), (3, 3)] {
            let c = quantum_composite(&qudit(n), &qudit(m)).unwrap();
            let r = c.verify(&mut rng, 5, 1e-9);
            assert!(r.worst() < 1e-10, "{n}x{m}: {r:?}");
        }
    }

    #[test]
    fn local_tomography_ranks() {
        for (n, m, rank) in [(2, 2, 16), (3, 2, 36), (3, 3, 81)] {
            let t = local_tomography_check(&quantum_composite(&qudit(n), &qudit(m)).unwrap());
            assert_eq!(t.span_rank, rank);
            assert!(t.passes());
        }
        let t = local_tomography_check(
            &quantum_composite(&qudit(3), &Composite::unit_model()).unwrap(),
        );
        assert_eq!((t.dim_ab, t.span_rank), (9, 9));
        assert!(t.passes());
    }

    #[test]
    fn spanning_projections_span() {
        let alg = Algebra::complex_herm(4).unwrap();
        let ps = spanning_projections(&alg);
        assert_eq!(ps.len(), 16);
        let rows: Vec<Vec<f64>> = ps.into_iter().map(Element::into_coords).collect();
        assert_eq!(Mat::from_rows(&rows).rank(1e-10), 16);
    }
}
