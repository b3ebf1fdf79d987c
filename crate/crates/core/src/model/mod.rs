//! Probabilistic models: a test space together with a convex set of states.
//!
//! Three backends are supported. Classical models have a single test and the
//! full simplex of states. Polytopic models list their tests and the vertices
//! of their state polytope. Jordan models take the Jordan frames of a
//! Euclidean Jordan algebra as tests and unit-trace cone elements as states;
//! since there are infinitely many frames, operations that quantify over tests
//! sample them.
//!
//! States and effects share one coordinate convention per model: for
//! discrete models a vector indexed by outcomes, for Jordan models the
//! algebra's orthonormal coordinates. The pairing `e(α)` is then the dot
//! product.

mod bipartite;
mod polytope;
mod sharpness;
mod spectrality;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

pub use bipartite::{
    conditional, conditioning_map, marginal, validate_bipartite, BipartiteReport, BipartiteState,
    ConditioningMap, PositivityReport,
};
pub use polytope::{affine_dimension, hull_fit, HullFit};
pub use sharpness::{sharpness_check, OutcomeFace, SharpnessReport};
pub use spectrality::{
    certainty_vertices, spectrality_decompose, Distinguished, Spectrality, TestRef,
};

use crate::eja::{cone_membership, spectral_decompose, Algebra, AlgebraKind, Element};
use crate::error::{Error, Result};
use crate::linalg;
use crate::random::random_frame;

/// Tolerance for probability-weight checks on vertices and states.
pub const WEIGHT_TOL: f64 = 1e-9;

/// Input to [`build_model`].
#[derive(Clone, Debug, PartialEq)]
pub enum ModelDescriptor {
    Classical {
        outcomes: Vec<String>,
    },
    Jordan {
        kind: AlgebraKind,
    },
    Polytopic {
        outcomes: Vec<String>,
        tests: Vec<Vec<String>>,
        vertices: Vec<Vec<f64>>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Backend {
    Classical {
        outcomes: Vec<String>,
    },
    Jordan(Algebra),
    Polytopic {
        outcomes: Vec<String>,
        tests: Vec<Vec<usize>>,
        vertices: Vec<Vec<f64>>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Model {
    backend: Backend,
    rank: usize,
}

/// A state: probability weights (discrete backends) or a unit-trace cone
/// element (Jordan backend), in the model's coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct State {
    pub coords: Vec<f64>,
}

/// A linear functional on states, in the model's coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Effect {
    pub coords: Vec<f64>,
}

impl Effect {
    pub fn from_element(e: &Element) -> Self {
        Effect {
            coords: e.coords().to_vec(),
        }
    }
}

impl State {
    pub fn from_element(e: &Element) -> Self {
        State {
            coords: e.coords().to_vec(),
        }
    }
}

/// Which half of a bipartite system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

pub fn build_model(desc: &ModelDescriptor) -> Result<Model> {
    match desc {
        ModelDescriptor::Classical { outcomes } => Model::classical(outcomes.clone()),
        ModelDescriptor::Jordan { kind } => Ok(Model::jordan(Algebra::new(kind.clone())?)),
        ModelDescriptor::Polytopic {
            outcomes,
            tests,
            vertices,
        } => {
            let mut indexed = Vec::with_capacity(tests.len());
            for t in tests {
                let mut idx = Vec::with_capacity(t.len());
                for name in t {
                    let i = outcomes.iter().position(|o| o == name).ok_or_else(|| {
                        Error::MalformedTests(format!("unknown outcome {name:?}"))
                    })?;
                    idx.push(i);
                }
                indexed.push(idx);
            }
            Model::polytopic(outcomes.clone(), indexed, vertices.clone())
        }
    }
}

impl Model {
    pub fn classical(outcomes: Vec<String>) -> Result<Self> {
        if outcomes.is_empty() {
            return Err(Error::MalformedTests(
                "classical model without outcomes".into(),
            ));
        }
        check_distinct(&outcomes)?;
        let rank = outcomes.len();
        Ok(Model {
            backend: Backend::Classical { outcomes },
            rank,
        })
    }

    pub fn jordan(alg: Algebra) -> Self {
        let rank = alg.rank();
        Model {
            backend: Backend::Jordan(alg),
            rank,
        }
    }

    pub fn polytopic(
        outcomes: Vec<String>,
        tests: Vec<Vec<usize>>,
        vertices: Vec<Vec<f64>>,
    ) -> Result<Self> {
        check_distinct(&outcomes)?;
        let first = tests
            .first()
            .ok_or_else(|| Error::MalformedTests("no tests".into()))?;
        let rank = first.len();
        if rank == 0 {
            return Err(Error::MalformedTests("empty test".into()));
        }
        let mut covered = vec![false; outcomes.len()];
        for (ti, t) in tests.iter().enumerate() {
            if t.len() != rank {
                return Err(Error::NonUniformTests {
                    index: ti,
                    expected: rank,
                    found: t.len(),
                });
            }
            for (k, &x) in t.iter().enumerate() {
                if x >= outcomes.len() {
                    return Err(Error::MalformedTests(format!(
                        "test {ti} refers to outcome {x}"
                    )));
                }
                if t[..k].contains(&x) {
                    return Err(Error::MalformedTests(format!(
                        "test {ti} repeats outcome {x}"
                    )));
                }
                covered[x] = true;
            }
        }
        if let Some(x) = covered.iter().position(|c| !c) {
            return Err(Error::MalformedTests(format!(
                "outcome {:?} belongs to no test",
                outcomes[x]
            )));
        }
        if vertices.is_empty() {
            return Err(Error::MalformedTests("no states".into()));
        }
        for (vi, v) in vertices.iter().enumerate() {
            if v.len() != outcomes.len() {
                return Err(Error::DimensionMismatch {
                    expected: outcomes.len(),
                    found: v.len(),
                });
            }
            let violation = weight_violation(v, &tests);
            if violation > WEIGHT_TOL {
                return Err(Error::InvalidVertex {
                    index: vi,
                    violation,
                });
            }
        }
        for x in 0..outcomes.len() {
            if vertices.iter().all(|v| v[x] <= WEIGHT_TOL) {
                return Err(Error::UnsupportedOutcome { index: x });
            }
        }
        Ok(Model {
            backend: Backend::Polytopic {
                outcomes,
                tests,
                vertices,
            },
            rank,
        })
    }

    /// The two-test model whose state space is a square.
    pub fn square_bit() -> Self {
        let outcomes = ["x0", "x1", "y0", "y1"].map(String::from).to_vec();
        let vertices = vec![
            vec![1.0, 0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0, 1.0],
            vec![0.0, 1.0, 1.0, 0.0],
            vec![0.0, 1.0, 0.0, 1.0],
        ];
        Model::polytopic(outcomes, vec![vec![0, 1], vec![2, 3]], vertices)
            .expect("valid square bit")
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    /// Common size of every test.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn algebra(&self) -> Option<&Algebra> {
        match &self.backend {
            Backend::Jordan(a) => Some(a),
            _ => None,
        }
    }

    /// The Jordan algebra realizing the model, when there is one: the model's
    /// own algebra, or `R ⊕ … ⊕ R` for a classical model (whose coordinates
    /// coincide with probability vectors).
    pub fn jordan_realization(&self) -> Option<Algebra> {
        match &self.backend {
            Backend::Jordan(a) => Some(a.clone()),
            Backend::Classical { outcomes } => {
                let parts = (0..outcomes.len())
                    .map(|_| Algebra::real_sym(1).expect("size 1"))
                    .collect();
                Some(Algebra::direct_sum(parts).expect("non-empty"))
            }
            Backend::Polytopic { .. } => None,
        }
    }

    pub fn outcome_names(&self) -> Option<&[String]> {
        match &self.backend {
            Backend::Classical { outcomes } | Backend::Polytopic { outcomes, .. } => Some(outcomes),
            Backend::Jordan(_) => None,
        }
    }

    /// Length of state and effect coordinate vectors.
    pub fn coord_dim(&self) -> usize {
        match &self.backend {
            Backend::Classical { outcomes } | Backend::Polytopic { outcomes, .. } => outcomes.len(),
            Backend::Jordan(a) => a.dim(),
        }
    }

    /// Explicit tests of a discrete model (the single test of a classical
    /// model); `None` for Jordan models.
    pub fn discrete_tests(&self) -> Option<Vec<Vec<usize>>> {
        match &self.backend {
            Backend::Classical { outcomes } => Some(vec![(0..outcomes.len()).collect()]),
            Backend::Polytopic { tests, .. } => Some(tests.clone()),
            Backend::Jordan(_) => None,
        }
    }

    /// Vertices of the state space for discrete models.
    pub fn vertices(&self) -> Option<Vec<Vec<f64>>> {
        match &self.backend {
            Backend::Classical { outcomes } => {
                let n = outcomes.len();
                Some(
                    (0..n)
                        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
                        .collect(),
                )
            }
            Backend::Polytopic { vertices, .. } => Some(vertices.clone()),
            Backend::Jordan(_) => None,
        }
    }

    /// Effect of a discrete outcome.
    pub fn outcome_effect(&self, x: usize) -> Result<Effect> {
        match &self.backend {
            Backend::Jordan(_) => Err(Error::NotJordan),
            _ if x >= self.coord_dim() => Err(Error::DimensionMismatch {
                expected: self.coord_dim(),
                found: x,
            }),
            _ => {
                let mut coords = vec![0.0; self.coord_dim()];
                coords[x] = 1.0;
                Ok(Effect { coords })
            }
        }
    }

    /// Order unit `u`; for discrete models the sum of the first test's
    /// outcome effects (equal on states to every other test's sum).
    pub fn unit_effect(&self) -> Effect {
        match &self.backend {
            Backend::Jordan(a) => Effect::from_element(&a.unit()),
            _ => {
                let tests = self.discrete_tests().expect("discrete");
                let mut coords = vec![0.0; self.coord_dim()];
                for &x in &tests[0] {
                    coords[x] = 1.0;
                }
                Effect { coords }
            }
        }
    }

    /// The maximally mixed weight `ρ(x) = 1/n`.
    pub fn maximally_mixed(&self) -> State {
        match &self.backend {
            Backend::Jordan(a) => State::from_element(&a.unit().scale(1.0 / a.rank() as f64)),
            _ => State {
                coords: vec![1.0 / self.rank as f64; self.coord_dim()],
            },
        }
    }

    /// Tests as lists of outcome effects: all tests of a discrete model, or
    /// the standard frame followed by `samples` random frames of a Jordan
    /// model.
    pub fn sample_tests<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Vec<Vec<Effect>> {
        match &self.backend {
            Backend::Jordan(a) => {
                let mut out = Vec::with_capacity(samples + 1);
                out.push(
                    spectral_decompose(&a.unit())
                        .frame
                        .iter()
                        .map(Effect::from_element)
                        .collect(),
                );
                for _ in 0..samples {
                    out.push(
                        random_frame(a, rng)
                            .iter()
                            .map(Effect::from_element)
                            .collect(),
                    );
                }
                out
            }
            _ => self
                .discrete_tests()
                .expect("discrete")
                .iter()
                .map(|t| {
                    t.iter()
                        .map(|&x| self.outcome_effect(x).expect("index"))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn state(&self, coords: Vec<f64>) -> Result<State> {
        if coords.len() != self.coord_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.coord_dim(),
                found: coords.len(),
            });
        }
        Ok(State { coords })
    }

    pub fn state_element(&self, s: &State) -> Result<Element> {
        self.algebra()
            .ok_or(Error::NotJordan)?
            .element(s.coords.clone())
    }

    /// How far `s` is from being a state: negative probabilities, test sums
    /// away from one, or (polytopic) distance outside the vertex hull. For
    /// Jordan models: the negative part of the spectrum and the trace defect.
    pub fn state_violation(&self, s: &State, tol: f64) -> f64 {
        if s.coords.len() != self.coord_dim() {
            return f64::INFINITY;
        }
        match &self.backend {
            Backend::Jordan(a) => {
                let e = a.element(s.coords.clone()).expect("dimension");
                let m = cone_membership(&e, tol);
                (-m.min_eigenvalue).max(0.0).max((e.trace() - 1.0).abs())
            }
            Backend::Classical { .. } => {
                weight_violation(&s.coords, &self.discrete_tests().expect("discrete"))
            }
            Backend::Polytopic {
                tests, vertices, ..
            } => {
                let w = weight_violation(&s.coords, tests);
                if w > tol {
                    return w;
                }
                hull_fit(vertices, &s.coords, tol).infeasibility
            }
        }
    }

    /// True when every outcome has positive probability (discrete) or the
    /// density is in the cone interior (Jordan).
    pub fn is_nonsingular(&self, s: &State, tol: f64) -> bool {
        match &self.backend {
            Backend::Jordan(a) => {
                let e = a.element(s.coords.clone()).expect("dimension");
                cone_membership(&e, tol).min_eigenvalue > tol
            }
            _ => s.coords.iter().all(|&p| p > tol),
        }
    }

    fn check_effect(&self, e: &Effect) -> Result<()> {
        if e.coords.len() == self.coord_dim() {
            Ok(())
        } else {
            Err(Error::ModelMismatch)
        }
    }
}

/// `e(α)`: the bilinear pairing of an effect with a state.
pub fn effect_value(model: &Model, e: &Effect, alpha: &State) -> Result<f64> {
    model.check_effect(e)?;
    if alpha.coords.len() != model.coord_dim() {
        return Err(Error::ModelMismatch);
    }
    Ok(linalg::dot(&e.coords, &alpha.coords))
}

fn check_distinct(outcomes: &[String]) -> Result<()> {
    for (i, o) in outcomes.iter().enumerate() {
        if outcomes[..i].contains(o) {
            return Err(Error::MalformedTests(format!("duplicate outcome {o:?}")));
        }
    }
    Ok(())
}

/// Largest deviation from being a probability weight on the given tests.
pub fn weight_violation(w: &[f64], tests: &[Vec<usize>]) -> f64 {
    let neg = w.iter().fold(0.0f64, |m, &p| m.max(-p));
    let sums = tests.iter().fold(0.0f64, |m, t| {
        m.max((t.iter().map(|&x| w[x]).sum::<f64>() - 1.0).abs())
    });
    neg.max(sums)
}
