//! Sharpness: every outcome has exactly one state making it certain.

use alloc::vec::Vec;

use rand::Rng;

use super::{affine_dimension, Backend, Model};
use crate::eja::{cone_membership, quadratic_rep};

#[derive(Clone, Debug, PartialEq)]
pub struct OutcomeFace {
    /// Outcome index (discrete) or index of the sampled primitive idempotent.
    pub outcome: usize,
    /// Vertices of the face `{α : α(x) = 1}` (discrete models only).
    pub vertices: Vec<usize>,
    /// Dimension of the face; `None` when the face is empty.
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SharpnessReport {
    pub sharp: bool,
    /// Faces of every outcome examined.
    pub faces: Vec<OutcomeFace>,
    /// Outcomes whose certainty face is empty or not a single point.
    pub offending: Vec<usize>,
    /// Jordan models: worst defect of `δ_x = x` as a state with `δ_x(x) = 1`.
    pub worst_residual: f64,
}

/// For discrete models every outcome is examined. For Jordan models the
/// outcomes of the standard frame and `samples` random frames are examined;
/// `δ_x = x` is checked to be a state with `⟨x, x⟩ = 1`, and the face is
/// the state space of the Peirce 1-space of `x`, of dimension
/// `rank(U_x) − 1`.
pub fn sharpness_check<R: Rng + ?Sized>(
    model: &Model,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> SharpnessReport {
    let mut faces = Vec::new();
    let mut worst_residual = 0.0f64;
    match model.backend() {
        Backend::Jordan(alg) => {
            let mut k = 0;
            for test in model.sample_tests(rng, samples) {
                for x in test {
                    let e = alg.element(x.coords.clone()).expect("dimension");
                    let certainty = (e.inner(&e).expect("same algebra") - 1.0).abs();
                    let trace = (e.trace() - 1.0).abs();
                    let negativity = (-cone_membership(&e, tol).min_eigenvalue).max(0.0);
                    worst_residual = worst_residual.max(certainty).max(trace).max(negativity);
                    let peirce = quadratic_rep(&e).matrix.rank(tol.max(1e-10));
                    faces.push(OutcomeFace {
                        outcome: k,
                        vertices: Vec::new(),
                        dimension: peirce.checked_sub(1),
                    });
                    k += 1;
                }
            }
        }
        _ => {
            let vertices = model.vertices().expect("discrete");
            for x in 0..model.coord_dim() {
                let support: Vec<usize> = (0..vertices.len())
                    .filter(|&v| (vertices[v][x] - 1.0).abs() <= tol)
                    .collect();
                let pts: Vec<&[f64]> = support.iter().map(|&v| vertices[v].as_slice()).collect();
                faces.push(OutcomeFace {
                    outcome: x,
                    dimension: affine_dimension(&pts, tol),
                    vertices: support,
                });
            }
        }
    }
    let offending: Vec<usize> = faces
        .iter()
        .filter(|f| f.dimension != Some(0))
        .map(|f| f.outcome)
        .collect();
    SharpnessReport {
        sharp: offending.is_empty() && worst_residual <= tol,
        faces,
        offending,
        worst_residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::eja::Algebra;

    #[test]
    fn jordan_models_are_sharp() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for alg in [
            Algebra::real_sym(3).unwrap(),
            Algebra::complex_herm(3).unwrap(),
            Algebra::quat_herm(2).unwrap(),
            Algebra::spin_factor(4).unwrap(),
        ] {
            let r = sharpness_check(&Model::jordan(alg.clone()), &mut rng, 5, 1e-9);
            assert!(r.sharp, "{alg}: {r:?}");
        }
    }

    #[test]
    fn square_bit_faces_are_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let r = sharpness_check(&Model::square_bit(), &mut rng, 0, 1e-9);
        assert!(!r.sharp);
        assert_eq!(r.offending, vec![0, 1, 2, 3]);
        assert_eq!(r.faces[0].vertices, vec![0, 1]);
        assert_eq!(r.faces[0].dimension, Some(1));
    }

    #[test]
    fn classical_point_masses() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = Model::classical(vec![
            String::from("a"),
            String::from("b"),
            String::from("c"),
        ])
        .unwrap();
        let r = sharpness_check(&m, &mut rng, 0, 1e-9);
        assert!(r.sharp);
        assert!(r.faces.iter().all(|f| f.vertices.len() == 1));
    }
}
