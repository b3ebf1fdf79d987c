//! Non-signaling bipartite states and their conditioning maps.
//!
//! A joint state is stored as a matrix `M` in the two models' coordinates,
//! so that `ω(e, f) = eᵀ M f`. For discrete models this is the joint
//! probability table.

use alloc::vec::Vec;

use rand::Rng;

use super::{Effect, Model, Side, State};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};

#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteState {
    pub a: Model,
    pub b: Model,
    pub matrix: Mat,
}

impl BipartiteState {
    pub fn new(a: Model, b: Model, matrix: Mat) -> Result<Self> {
        if matrix.rows() != a.coord_dim() {
            return Err(Error::DimensionMismatch {
                expected: a.coord_dim(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != b.coord_dim() {
            return Err(Error::DimensionMismatch {
                expected: b.coord_dim(),
                found: matrix.cols(),
            });
        }
        Ok(BipartiteState { a, b, matrix })
    }

    /// `α ⊗ β`.
    pub fn product(a: Model, b: Model, alpha: &State, beta: &State) -> Result<Self> {
        let rows: Vec<Vec<f64>> = alpha
            .coords
            .iter()
            .map(|&x| beta.coords.iter().map(|&y| x * y).collect())
            .collect();
        Self::new(a, b, Mat::from_rows(&rows))
    }

    pub fn value(&self, e: &Effect, f: &Effect) -> Result<f64> {
        if e.coords.len() != self.a.coord_dim() || f.coords.len() != self.b.coord_dim() {
            return Err(Error::ModelMismatch);
        }
        Ok(linalg::dot(&e.coords, &self.matrix.apply(&f.coords)))
    }

    fn model(&self, side: Side) -> &Model {
        match side {
            Side::First => &self.a,
            Side::Second => &self.b,
        }
    }

    /// The state on `side` obtained by pairing the other side with `e`.
    fn partial(&self, side: Side, e: &[f64]) -> Vec<f64> {
        match side {
            Side::First => self.matrix.apply(e),
            Side::Second => self.matrix.transpose().apply(e),
        }
    }
}

/// `ω₁` (side `First`) or `ω₂` (side `Second`).
pub fn marginal(omega: &BipartiteState, side: Side) -> State {
    let other = match side {
        Side::First => &omega.b,
        Side::Second => &omega.a,
    };
    State {
        coords: omega.partial(side, &other.unit_effect().coords),
    }
}

/// The conditional state on `side` given `outcome` on the other side:
/// `ω_{1|y}` for `First`, `ω_{2|x}` for `Second`.
pub fn conditional(
    omega: &BipartiteState,
    outcome: &Effect,
    side: Side,
    tol: f64,
) -> Result<State> {
    let other = match side {
        Side::First => Side::Second,
        Side::Second => Side::First,
    };
    if outcome.coords.len() != omega.model(other).coord_dim() {
        return Err(Error::ModelMismatch);
    }
    let m = marginal(omega, other);
    let p = linalg::dot(&outcome.coords, &m.coords);
    if p <= tol {
        return Err(Error::ZeroProbability { probability: p });
    }
    let v = omega.partial(side, &outcome.coords);
    Ok(State {
        coords: v.iter().map(|x| x / p).collect(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteReport {
    /// `max |Σ_{E×F} ω − 1|` over test pairs.
    pub normalization: f64,
    /// Largest dependence of a marginal on the partner test.
    pub signaling: f64,
    /// Largest state violation among conditionals with positive weight.
    pub conditionals: f64,
    /// `max |ω₁(x) − Σ_y ω₂(y) ω_{1|y}(x)|`.
    pub total_probability: f64,
    pub tests_examined: usize,
    pub pass: bool,
}

impl BipartiteReport {
    pub fn worst(&self) -> f64 {
        self.normalization
            .max(self.signaling)
            .max(self.conditionals)
            .max(self.total_probability)
    }
}

/// Checks normalization, no-signaling and conditional validity over all
/// test pairs (sampled frames for Jordan models).
pub fn validate_bipartite<R: Rng + ?Sized>(
    omega: &BipartiteState,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> BipartiteReport {
    let ta = omega.a.sample_tests(rng, samples);
    let tb = omega.b.sample_tests(rng, samples);
    let mut normalization = 0.0f64;
    for e in &ta {
        for f in &tb {
            let s: f64 = e
                .iter()
                .flat_map(|x| f.iter().map(move |y| (x, y)))
                .map(|(x, y)| pair(omega, x, y))
                .sum();
            normalization = normalization.max((s - 1.0).abs());
        }
    }

    // ω₁(x) through every test of B must agree, and symmetrically.
    let mut signaling = 0.0f64;
    for (outcomes, partners, first) in [(&ta, &tb, true), (&tb, &ta, false)] {
        for t in outcomes {
            for x in t {
                let through = |f: &Vec<Effect>| -> f64 {
                    f.iter()
                        .map(|y| {
                            if first {
                                pair(omega, x, y)
                            } else {
                                pair(omega, y, x)
                            }
                        })
                        .sum()
                };
                let values: Vec<f64> = partners.iter().map(through).collect();
                let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                signaling = signaling.max(hi - lo);
            }
        }
    }

    let mut conditionals = 0.0f64;
    let mut total_probability = 0.0f64;
    for (side, outcomes) in [(Side::Second, &ta), (Side::First, &tb)] {
        let target = omega.model(side);
        for t in outcomes {
            for x in t {
                if let Ok(c) = conditional(omega, x, side, tol) {
                    conditionals = conditionals.max(target.state_violation(&c, tol));
                }
            }
        }
    }
    let m1 = marginal(omega, Side::First);
    let m2 = marginal(omega, Side::Second);
    for f in &tb {
        for e in &ta {
            for x in e {
                let direct = linalg::dot(&x.coords, &m1.coords);
                let mut via = 0.0;
                for y in f {
                    let w = linalg::dot(&y.coords, &m2.coords);
                    if let Ok(c) = conditional(omega, y, Side::First, tol) {
                        via += w * linalg::dot(&x.coords, &c.coords);
                    }
                }
                total_probability = total_probability.max((direct - via).abs());
            }
        }
    }

    let mut r = BipartiteReport {
        normalization,
        signaling,
        conditionals,
        total_probability,
        tests_examined: ta.len() * tb.len(),
        pass: false,
    };
    r.pass = r.worst() <= tol;
    r
}

fn pair(omega: &BipartiteState, x: &Effect, y: &Effect) -> f64 {
    omega.value(x, y).expect("sampled effects fit the models")
}

#[derive(Clone, Debug, PartialEq)]
pub struct PositivityReport {
    pub generators: usize,
    /// Largest negativity of `ω̂(e)` over the sampled generators of `E(A)₊`.
    pub worst_negativity: f64,
}

/// `ω̂ : E(A) → V(B)`, with checks that it reproduces `ω` and is positive.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditioningMap {
    /// `ω̂` in coordinates: columns are images of coordinate effects.
    pub matrix: Mat,
    /// `max |ω̂(x̂)(y) − ω(x, y)|` over (sampled) outcome pairs.
    pub reproduction: f64,
    /// `max |ω̂(x̂) − ω₁(x) ω_{2|x}|` over (sampled) outcomes of positive weight.
    pub conditional_identity: f64,
    pub positivity: PositivityReport,
}

impl ConditioningMap {
    pub fn apply(&self, e: &Effect) -> State {
        State {
            coords: self.matrix.apply(&e.coords),
        }
    }
}

pub fn conditioning_map<R: Rng + ?Sized>(
    omega: &BipartiteState,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> ConditioningMap {
    let matrix = omega.matrix.transpose();
    let ta = omega.a.sample_tests(rng, samples);
    let tb = omega.b.sample_tests(rng, samples);
    let m1 = marginal(omega, Side::First);
    let mut reproduction = 0.0f64;
    let mut conditional_identity = 0.0f64;
    let mut worst_negativity = 0.0f64;
    let mut generators = 0;
    for e in &ta {
        for x in e {
            let image = matrix.apply(&x.coords);
            for f in &tb {
                for y in f {
                    let direct = pair(omega, x, y);
                    reproduction =
                        reproduction.max((linalg::dot(&image, &y.coords) - direct).abs());
                }
            }
            let p = linalg::dot(&x.coords, &m1.coords);
            if let Ok(c) = conditional(omega, x, Side::Second, tol) {
                let scaled: Vec<f64> = c.coords.iter().map(|v| v * p).collect();
                conditional_identity =
                    conditional_identity.max(linalg::max_abs_diff(&image, &scaled));
            }
            generators += 1;
            worst_negativity = worst_negativity.max(negativity(&omega.b, &image, tol));
        }
    }
    ConditioningMap {
        matrix,
        reproduction,
        conditional_identity,
        positivity: PositivityReport {
            generators,
            worst_negativity,
        },
    }
}

/// Distance of `v` from the cone `V(B)₊`, measured on outcome values
/// (discrete) or the spectrum (Jordan).
fn negativity(model: &Model, v: &[f64], tol: f64) -> f64 {
    match model.algebra() {
        Some(alg) => {
            let e = alg.element(v.to_vec()).expect("dimension");
            (-crate::eja::cone_membership(&e, tol).min_eigenvalue).max(0.0)
        }
        None => {
            let neg = v.iter().fold(0.0f64, |m, &p| m.max(-p));
            let mass: f64 = model
                .unit_effect()
                .coords
                .iter()
                .zip(v)
                .map(|(u, p)| u * p)
                .sum();
            if mass <= tol {
                return neg.max(v.iter().fold(0.0f64, |m, p| m.max(p.abs())));
            }
            let s = State {
                coords: v.iter().map(|p| p / mass).collect(),
            };
            neg.max(model.state_violation(&s, tol) * mass)
        }
    }
}
