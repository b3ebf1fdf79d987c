use alloc::vec;
use alloc::vec::Vec;

use super::composite::quantum_composite;
use crate::conjugate::make_conjugate;
use crate::eja::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::model::Model;

/// Both snake identities for `A = Herm(n)` with dual `Ā`.
///
/// The cup `1 → V(Ā A)` is induced by the unnormalized maximally entangled
/// vector `Σ eᵢ ⊗ eᵢ`; the cap `V(A Ā) → R` is `η` itself, a normalized
/// state. Each snake therefore composes to `(1/n)·id` rather than `id`.
#[derive(Clone, Debug, PartialEq)]
pub struct SnakeReport {
    pub n: usize,
    /// The factor the snakes compose to; always `1/n`.
    pub normalization: f64,
    /// `cup[j][k]`: coefficient of `eⱼ ⊗ eₖ` in `V(Ā) ⊗ V(A)`.
    pub cup: Mat,
    /// `cap[i][j] = η(eᵢ, ēⱼ)`.
    pub cap: Mat,
    /// `‖(cap ⊗ id_A)(id_A ⊗ cup) − id/n‖` entrywise on `V(A)`.
    pub first: f64,
    /// `‖(id_Ā ⊗ cap)(cup ⊗ id_Ā) − id/n‖` entrywise on `V(Ā)`.
    pub second: f64,
    /// `‖n·snake − id‖`: the identity dragged around the loop.
    pub rescaled_identity: f64,
}

impl SnakeReport {
    pub fn residual(&self) -> f64 {
        self.first.max(self.second).max(self.rescaled_identity)
    }
}

/// `(cap ⊗ id)(v ⊗ cup)` by explicit contraction of the `d³` tensor
/// `v ⊗ cup`.
fn first_snake(cap: &Mat, cup: &Mat, v: &[f64]) -> Vec<f64> {
    let d = v.len();
    let mut tensor = vec![0.0; d * d * d];
    for (i, vi) in v.iter().enumerate() {
        for j in 0..d {
            for k in 0..d {
                tensor[(i * d + j) * d + k] = vi * cup[(j, k)];
            }
        }
    }
    (0..d)
        .map(|k| {
            (0..d)
                .flat_map(|i| (0..d).map(move |j| (i, j)))
                .map(|(i, j)| cap[(i, j)] * tensor[(i * d + j) * d + k])
                .sum()
        })
        .collect()
}

/// `(id ⊗ cap)(cup ⊗ w)` on the `d³` tensor `cup ⊗ w`.
fn second_snake(cap: &Mat, cup: &Mat, w: &[f64]) -> Vec<f64> {
    let d = w.len();
    let mut tensor = vec![0.0; d * d * d];
    for j in 0..d {
        for k in 0..d {
            for (l, wl) in w.iter().enumerate() {
                tensor[(j * d + k) * d + l] = cup[(j, k)] * wl;
            }
        }
    }
    (0..d)
        .map(|j| {
            (0..d)
                .flat_map(|k| (0..d).map(move |l| (k, l)))
                .map(|(k, l)| cap[(k, l)] * tensor[(j * d + k) * d + l])
                .sum()
        })
        .collect()
}

pub fn snake_check(n: usize) -> Result<SnakeReport> {
    if n < 2 {
        return Err(Error::InvalidSize {
            kind: "snake",
            size: n,
        });
    }
    let model = Model::jordan(Algebra::complex_herm(n)?);
    let conj = make_conjugate(&model)?;
    // Ā is realized on the same algebra, so the EPR state of Herm(n) ⊗ Herm(n)
    // pulls back directly to a state on Ā A.
    let composite = quantum_composite(&model, &model)?;
    let epr = composite.epr_state().expect("equal orders");
    let cup = composite.pullback_matrix(&epr)?.scale(n as f64);
    let cap = conj.eta.matrix.clone();

    let d = conj.algebra().dim();
    let normalization = 1.0 / n as f64;
    let (mut first, mut second, mut rescaled_identity) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..d {
        let mut e = vec![0.0; d];
        e[i] = 1.0;
        let s1 = first_snake(&cap, &cup, &e);
        let s2 = second_snake(&cap, &cup, &e);
        for k in 0..d {
            let want = if k == i { normalization } else { 0.0 };
            first = first.max((s1[k] - want).abs());
            second = second.max((s2[k] - want).abs());
            let id = if k == i { 1.0 } else { 0.0 };
            rescaled_identity = rescaled_identity
                .max((n as f64 * s1[k] - id).abs())
                .max((n as f64 * s2[k] - id).abs());
        }
    }
    Ok(SnakeReport {
        n,
        normalization,
        cup,
        cap,
        first,
        second,
        rescaled_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snakes_compose_to_scaled_identity() {
        for n in 2..=4 {
            let r = snake_check(n).unwrap();
            assert!(r.residual() <= 1e-12, "{r:?}");
            assert_eq!(r.normalization, 1.0 / n as f64);
        }
    }

    #[test]
    fn cup_is_the_bar_matrix() {
        let r = snake_check(2).unwrap();
        assert!(r.cup.max_abs_diff(&Mat::diagonal(&[1.0, 1.0, 1.0, -1.0])) < 1e-15);
        assert!(r.cap.max_abs_diff(&r.cup.scale(0.5)) < 1e-15);
    }

    #[test]
    fn trivial_size_is_rejected() {
        assert_eq!(
            snake_check(1),
            Err(Error::InvalidSize {
                kind: "snake",
                size: 1
            })
        );
    }
}
