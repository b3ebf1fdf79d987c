use alloc::vec::Vec;

use rand::Rng;

use crate::eja::cone_membership;
use crate::error::{Error, Result};
use crate::linalg;
use crate::model::{affine_dimension, Model};
use crate::random::{random_element, random_primitive};

#[derive(Clone, Debug, PartialEq)]
pub struct BitClass {
    /// Dimension of the state ball.
    pub d: usize,
    pub label: &'static str,
    /// `max |‖p − ρ‖ − 1/√2|` over sampled pure states `p`.
    pub sphere_radius: f64,
    /// Affine dimension spanned by sampled pure states.
    pub pure_span: usize,
    /// Worst negativity of points `ρ + v/√2` on the sphere of the ball,
    /// `v` a random traceless unit vector.
    pub ball_boundary: f64,
}

impl BitClass {
    pub fn is_ball(&self, tol: f64) -> bool {
        self.sphere_radius <= tol && self.pure_span == self.d && self.ball_boundary <= tol
    }
}

pub fn bit_label(d: usize) -> &'static str {
    match d {
        1 => "classical bit",
        2 => "real bit",
        3 => "complex bit",
        5 => "quaternionic bit",
        _ => "non-quantum spin factor",
    }
}

/// Rank-two models only. In trace-form coordinates the pure states lie on a
/// sphere of radius `1/√2` about `ρ = u/2` inside the trace-one hyperplane,
/// and every point of that sphere is a state.
pub fn classify_bit<R: Rng + ?Sized>(
    model: &Model,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> Result<BitClass> {
    let alg = model.jordan_realization().ok_or(Error::NotJordan)?;
    if alg.rank() != 2 {
        return Err(Error::RankNotTwo { rank: alg.rank() });
    }
    let d = alg.dim() - 1;
    let rho = alg.unit().scale(0.5);
    let r = core::f64::consts::FRAC_1_SQRT_2;
    let mut sphere_radius = 0.0f64;
    let mut pure: Vec<Vec<f64>> = Vec::new();
    for _ in 0..samples.max(2 * d + 2) {
        let p = random_primitive(&alg, rng);
        sphere_radius = sphere_radius.max((p.distance(&rho) - r).abs());
        pure.push(p.into_coords());
    }
    let refs: Vec<&[f64]> = pure.iter().map(Vec::as_slice).collect();
    let pure_span = affine_dimension(&refs, 1e-9).unwrap_or(0);

    let u = alg.unit();
    let mut ball_boundary = 0.0f64;
    for _ in 0..samples {
        let v = random_element(&alg, rng);
        // Project out the unit direction, then normalize.
        let v = v.axpy(-linalg::dot(v.coords(), u.coords()) / 2.0, &u);
        let norm = v.norm();
        if norm < 1e-12 {
            continue;
        }
        let point = rho.axpy(r / norm, &v);
        ball_boundary = ball_boundary.max((-cone_membership(&point, tol).min_eigenvalue).max(0.0));
    }
    Ok(BitClass {
        d,
        label: bit_label(d),
        sphere_radius,
        pure_span,
        ball_boundary,
    })
}
