//! Spectral decompositions `α = Σ_{x∈E} α(x) δ_x` relative to a choice of
//! states `Δ = {δ_x}` with `δ_x(x) = 1`.

use alloc::vec::Vec;

use super::{Backend, Model, State};
use crate::eja::{spectral_decompose, Element};
use crate::error::{Error, Result};
use crate::linalg;

/// The states `δ_x` used for decompositions.
#[derive(Clone, Debug, PartialEq)]
pub enum Distinguished {
    /// Jordan models: `δ_x = x`. Discrete models: the first listed vertex
    /// with `v(x) = 1`.
    Canonical,
    /// One state per outcome (discrete models).
    Explicit(Vec<Vec<f64>>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum TestRef {
    /// Index into the model's list of tests.
    Discrete(usize),
    /// A Jordan frame.
    Frame(Vec<Element>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Spectrality {
    Decomposed {
        test: TestRef,
        weights: Vec<f64>,
        residual: f64,
    },
    /// No test decomposes the state; `best_residual` is the smallest
    /// reconstruction error found over all tests.
    NotSpectral { best_residual: f64 },
}

impl Spectrality {
    pub fn is_decomposed(&self) -> bool {
        matches!(self, Spectrality::Decomposed { .. })
    }

    pub fn residual(&self) -> f64 {
        match self {
            Spectrality::Decomposed { residual, .. } => *residual,
            Spectrality::NotSpectral { best_residual } => *best_residual,
        }
    }
}

/// For each outcome, the vertices making it certain (discrete models).
pub fn certainty_vertices(model: &Model, tol: f64) -> Option<Vec<Vec<usize>>> {
    let vertices = model.vertices()?;
    Some(
        (0..model.coord_dim())
            .map(|x| {
                (0..vertices.len())
                    .filter(|&v| (vertices[v][x] - 1.0).abs() <= tol)
                    .collect()
            })
            .collect(),
    )
}

fn resolve(model: &Model, delta: &Distinguished, tol: f64) -> Result<Vec<Vec<f64>>> {
    let n = model.coord_dim();
    let states = match delta {
        Distinguished::Explicit(states) => {
            if states.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: states.len(),
                });
            }
            states.clone()
        }
        Distinguished::Canonical => {
            let vertices = model.vertices().expect("discrete");
            let support = certainty_vertices(model, tol).expect("discrete");
            let mut out = Vec::with_capacity(n);
            for (x, s) in support.iter().enumerate() {
                match s.first() {
                    Some(&v) => out.push(vertices[v].clone()),
                    None => {
                        let value = vertices
                            .iter()
                            .map(|v| v[x])
                            .fold(f64::NEG_INFINITY, f64::max);
                        return Err(Error::InvalidDistinguishedState { outcome: x, value });
                    }
                }
            }
            out
        }
    };
    for (x, d) in states.iter().enumerate() {
        if d.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d.len(),
            });
        }
        if (d[x] - 1.0).abs() > tol {
            return Err(Error::InvalidDistinguishedState {
                outcome: x,
                value: d[x],
            });
        }
    }
    Ok(states)
}

pub fn spectrality_decompose(
    model: &Model,
    alpha: &State,
    delta: &Distinguished,
    tol: f64,
) -> Result<Spectrality> {
    if alpha.coords.len() != model.coord_dim() {
        return Err(Error::ModelMismatch);
    }
    match model.backend() {
        Backend::Jordan(alg) => {
            if !matches!(delta, Distinguished::Canonical) {
                return Err(Error::UnsupportedBackend);
            }
            let a = alg.element(alpha.coords.clone())?;
            let spec = spectral_decompose(&a);
            // The weights are α(p) = ⟨a, p⟩, which equal the eigenvalues.
            let weights: Vec<f64> = spec
                .frame
                .iter()
                .map(|p| linalg::dot(p.coords(), a.coords()))
                .collect();
            let mut rebuilt = alg.zero();
            for (p, &w) in spec.frame.iter().zip(&weights) {
                rebuilt = rebuilt.axpy(w, p);
            }
            let residual = rebuilt.distance(&a);
            if residual <= tol {
                Ok(Spectrality::Decomposed {
                    test: TestRef::Frame(spec.frame),
                    weights,
                    residual,
                })
            } else {
                Ok(Spectrality::NotSpectral {
                    best_residual: residual,
                })
            }
        }
        _ => {
            let states = resolve(model, delta, tol)?;
            let tests = model.discrete_tests().expect("discrete");
            let mut best: Option<(usize, Vec<f64>, f64)> = None;
            for (ti, t) in tests.iter().enumerate() {
                let weights: Vec<f64> = t.iter().map(|&x| alpha.coords[x]).collect();
                let parts: Vec<&[f64]> = t.iter().map(|&x| states[x].as_slice()).collect();
                let rebuilt = linalg::combine(&weights, &parts, model.coord_dim());
                let residual = linalg::max_abs_diff(&rebuilt, &alpha.coords);
                if best.as_ref().is_none_or(|b| residual < b.2) {
                    best = Some((ti, weights, residual));
                }
            }
            let (ti, weights, residual) = best.expect("at least one test");
            if residual <= tol {
                Ok(Spectrality::Decomposed {
                    test: TestRef::Discrete(ti),
                    weights,
                    residual,
                })
            } else {
                Ok(Spectrality::NotSpectral {
                    best_residual: residual,
                })
            }
        }
    }
}
