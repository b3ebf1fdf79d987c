//! Conjugate systems, filters and homogeneity transports on Jordan models.
//!
//! The conjugate `Ā` of a Jordan model is realized on the same algebra; the
//! bar map `a ↦ ā` is a coordinate sign flip that fixes real entries and
//! conjugates the imaginary ones. The correlating state is
//! `η(a, b̄) = ⟨a, b⟩ / n`.

mod epr;
mod filter;

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

pub use epr::{epr_check, epr_vector, EprReport};
pub use filter::{
    cone_preservation, congruence, filter_symmetry_check, homogeneity_transport, make_filter,
    p_reversibility_check, prepare_state, proportionality, Filter, FilterReport, Reversibility,
    Transport,
};

use crate::eja::{Algebra, AlgebraKind, Element};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::model::{BipartiteState, Model};

/// Signs of the bar map in the algebra's coordinates.
///
/// Complex entries are conjugated. Quaternion entries `a + bi + cj + dk` go
/// to `a − bi + cj − dk` (that is `q ↦ j q j⁻¹`), which is the complex
/// conjugate of the 2×2 complex embedding. Plain entrywise quaternion
/// conjugation amounts to transposition, which fails to be a Jordan
/// automorphism once `n ≥ 3`.
pub fn bar_signs(alg: &Algebra) -> Vec<f64> {
    match alg.kind() {
        AlgebraKind::RealSym(_) | AlgebraKind::SpinFactor(_) => vec![1.0; alg.dim()],
        AlgebraKind::ComplexHerm(n) => {
            let mut s = vec![1.0; *n];
            for _ in 0..n * (n - 1) / 2 {
                s.extend([1.0, -1.0]);
            }
            s
        }
        AlgebraKind::QuatHerm(n) => {
            let mut s = vec![1.0; *n];
            for _ in 0..n * (n - 1) / 2 {
                s.extend([1.0, -1.0, 1.0, -1.0]);
            }
            s
        }
        AlgebraKind::DirectSum(parts) => parts.iter().flat_map(bar_signs).collect(),
    }
}

/// A model together with its conjugate and the correlating state `η`.
#[derive(Clone, Debug, PartialEq)]
pub struct Conjugate {
    algebra: Algebra,
    signs: Vec<f64>,
    /// `η` as a bipartite state on `A` and `Ā`.
    pub eta: BipartiteState,
}

/// Conjugate of a Jordan model, or of a classical model through its
/// realization as `R ⊕ … ⊕ R`.
pub fn make_conjugate(model: &Model) -> Result<Conjugate> {
    let algebra = model.jordan_realization().ok_or(Error::NotJordan)?;
    let signs = bar_signs(&algebra);
    let n = algebra.rank() as f64;
    let m = Mat::diagonal(&signs.iter().map(|s| s / n).collect::<Vec<_>>());
    let eta = BipartiteState::new(model.clone(), model.clone(), m)?;
    Ok(Conjugate {
        algebra,
        signs,
        eta,
    })
}

impl Conjugate {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    /// The bar map as a coordinate sign vector.
    pub fn signs(&self) -> &[f64] {
        &self.signs
    }

    /// The bar map as a matrix.
    pub fn bar_matrix(&self) -> Mat {
        Mat::diagonal(&self.signs)
    }

    /// `a ↦ ā`.
    pub fn bar(&self, a: &Element) -> Element {
        let coords = a
            .coords()
            .iter()
            .zip(&self.signs)
            .map(|(x, s)| x * s)
            .collect();
        self.algebra.element(coords).expect("dimension")
    }

    /// `η(a, f)` for `a ∈ E(A)` and `f ∈ E(Ā)`.
    pub fn eta(&self, a: &Element, f: &Element) -> f64 {
        linalg::dot(a.coords(), &self.eta.matrix.apply(f.coords()))
    }

    /// `η(a, b̄)`.
    pub fn eta_bar(&self, a: &Element, b: &Element) -> f64 {
        self.eta(a, &self.bar(b))
    }

    /// `η_Ā(ā, b) − η_A(a, b̄)` maximized over sampled pairs: the conjugate of
    /// `Ā` is `A` again, with the transposed correlation.
    pub fn double_conjugation_residual<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> f64 {
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let a = crate::random::random_element(&self.algebra, rng);
            let b = crate::random::random_element(&self.algebra, rng);
            // η_Ā has matrix Mᵀ under the identification of the double bar with the identity.
            let lhs = linalg::dot(
                self.bar(&a).coords(),
                &self.eta.matrix.transpose().apply(b.coords()),
            );
            let rhs = self.eta_bar(&a, &b);
            let bb = self.bar(&self.bar(&a));
            worst = worst.max((lhs - rhs).abs()).max(bb.distance(&a));
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eja::Quaternion;
    use crate::linalg::CMat;
    use crate::random::{random_element, random_frame};
    use alloc::string::String;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn algebras() -> Vec<Algebra> {
        vec![
            Algebra::real_sym(3).unwrap(),
            Algebra::complex_herm(3).unwrap(),
            Algebra::quat_herm(3).unwrap(),
            Algebra::spin_factor(5).unwrap(),
            Algebra::direct_sum(vec![
                Algebra::complex_herm(2).unwrap(),
                Algebra::spin_factor(3).unwrap(),
            ])
            .unwrap(),
        ]
    }

    #[test]
    fn bar_is_a_jordan_automorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for alg in algebras() {
            let c = make_conjugate(&Model::jordan(alg.clone())).unwrap();
            for _ in 0..10 {
                let a = random_element(&alg, &mut rng);
                let b = random_element(&alg, &mut rng);
                let lhs = c.bar(&a.jordan(&b).unwrap());
                let rhs = c.bar(&a).jordan(&c.bar(&b)).unwrap();
                assert!(lhs.distance(&rhs) < 1e-12, "{alg}");
            }
        }
    }

    #[test]
    fn complex_bar_is_entrywise_conjugation() {
        let alg = Algebra::complex_herm(2).unwrap();
        let c = make_conjugate(&Model::jordan(alg.clone())).unwrap();
        let m = CMat::from_entries(
            2,
            vec![
                Complex64::new(0.3, 0.0),
                Complex64::new(0.1, 0.4),
                Complex64::new(0.1, -0.4),
                Complex64::new(0.7, 0.0),
            ],
        );
        let a = alg.from_complex_matrix(&m).unwrap();
        assert!(
            c.bar(&a)
                .to_complex_matrix()
                .unwrap()
                .max_abs_diff(&m.conj())
                < 1e-15
        );
    }

    #[test]
    fn literal_quaternion_conjugation_is_not_an_automorphism() {
        // At n = 2 every off-diagonal sum meets a real diagonal entry and the
        // defect vanishes, so the counterexample needs n = 3.
        let alg = Algebra::quat_herm(3).unwrap();
        let lit = |e: &Element| -> Element {
            let rows = e.to_quaternion_matrix().unwrap();
            let conj: Vec<Vec<Quaternion>> = rows
                .iter()
                .map(|r| r.iter().map(|q| q.conj()).collect())
                .collect();
            alg.from_quaternion_matrix(&conj).unwrap()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let a = random_element(&alg, &mut rng);
        let b = random_element(&alg, &mut rng);
        let lhs = lit(&a.jordan(&b).unwrap());
        let rhs = lit(&a).jordan(&lit(&b)).unwrap();
        assert!(lhs.distance(&rhs) > 0.1, "{}", lhs.distance(&rhs));
        let c = make_conjugate(&Model::jordan(alg)).unwrap();
        assert!(
            c.bar(&a.jordan(&b).unwrap())
                .distance(&c.bar(&a).jordan(&c.bar(&b)).unwrap())
                < 1e-14
        );
    }

    #[test]
    fn eta_correlates_frames_uniformly() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for alg in algebras() {
            let c = make_conjugate(&Model::jordan(alg.clone())).unwrap();
            let n = alg.rank() as f64;
            for _ in 0..5 {
                let f = random_frame(&alg, &mut rng);
                for (i, x) in f.iter().enumerate() {
                    for (j, y) in f.iter().enumerate() {
                        let want = if i == j { 1.0 / n } else { 0.0 };
                        assert!((c.eta_bar(x, y) - want).abs() < 1e-12, "{alg}");
                    }
                }
            }
        }
    }

    #[test]
    fn qubit_eta_values_and_validity() {
        let alg = Algebra::complex_herm(2).unwrap();
        let m = Model::jordan(alg.clone());
        let c = make_conjugate(&m).unwrap();
        let p0 = alg.from_real_matrix(&Mat::diagonal(&[1.0, 0.0])).unwrap();
        let p1 = alg.from_real_matrix(&Mat::diagonal(&[0.0, 1.0])).unwrap();
        assert!((c.eta_bar(&p0, &p0) - 0.5).abs() < 1e-15);
        assert!(c.eta_bar(&p0, &p1).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        assert!(crate::model::validate_bipartite(&c.eta, &mut rng, 10, 1e-10).pass);
        assert!(c.double_conjugation_residual(&mut rng, 20) < 1e-14);
    }

    #[test]
    fn classical_and_polytopic_models() {
        let names = ["a", "b", "c"].map(String::from).to_vec();
        let c = make_conjugate(&Model::classical(names).unwrap()).unwrap();
        assert_eq!(c.eta.matrix, Mat::diagonal(&[1.0 / 3.0; 3]));
        assert_eq!(make_conjugate(&Model::square_bit()), Err(Error::NotJordan));
    }
}
