use alloc::vec;
use alloc::vec::Vec;

use crate::conjugate::Conjugate;
use crate::eja::{spectral_decompose, Element};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::model::{marginal, BipartiteState, Effect, Side};

/// A correlating joint state on `A` and `Ā` with marginal `α`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dilation {
    pub omega: BipartiteState,
    /// The frame `E` of the spectral decomposition `α = Σ t_z δ_z`.
    pub frame: Vec<Element>,
    pub weights: Vec<f64>,
    /// `‖ω₁ − α‖`.
    pub marginal_residual: f64,
}

/// `ω(x, ȳ) = Σ_z t_z δ_z(x) δ_z̄(ȳ)` where `α = Σ_z t_z δ_z` on the
/// eigenframe of `α` and `δ_z = z`.
pub fn correlation_dilation(conj: &Conjugate, alpha: &Element, tol: f64) -> Result<Dilation> {
    if alpha.algebra() != conj.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let sd = spectral_decompose(alpha);
    let residual = sd
        .reconstruct()
        .map_or(f64::INFINITY, |r| r.distance(alpha));
    if residual > tol.max(1e-9) * (1.0 + alpha.norm()) {
        return Err(Error::SpectralFailure(alloc::format!(
            "reconstruction residual {residual:e}"
        )));
    }
    let d = conj.algebra().dim();
    let mut m = Mat::zeros(d, d);
    for (z, &t) in sd.frame.iter().zip(&sd.eigenvalues) {
        let zb = conj.bar(z);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] += t * z.coords()[i] * zb.coords()[j];
            }
        }
    }
    let model = conj.eta.a.clone();
    let omega = BipartiteState::new(model.clone(), model, m)?;
    let marginal_residual =
        linalg::max_abs_diff(&marginal(&omega, Side::First).coords, alpha.coords());
    Ok(Dilation {
        omega,
        frame: sd.frame,
        weights: sd.eigenvalues,
        marginal_residual,
    })
}

/// Outcome of [`correlating_check`].
#[derive(Clone, Debug, PartialEq)]
pub enum Correlation {
    /// `map[i] = Some(j)` when `ω(xᵢ, yⱼ) > 0`.
    Bijection {
        map: Vec<Option<usize>>,
        residual: f64,
    },
    /// An outcome on either side with more than one partner.
    Branching {
        side: Side,
        outcome: usize,
        partners: usize,
    },
    /// `ω` vanishes on `E × F`.
    Empty,
}

impl Correlation {
    pub fn is_bijection(&self) -> bool {
        matches!(self, Correlation::Bijection { .. })
    }
}

/// Reads the support of `ω` on `E × F` (entries above `tol`) and checks it
/// is the graph of a non-empty partial bijection. The residual is
/// `max |ω(x, f(x)) − ω₁(x)|, |ω(x, f(x)) − ω₂(f(x))|` over `x ∈ E`.
#[allow(clippy::needless_range_loop)]
pub fn correlating_check(
    omega: &BipartiteState,
    e: &[Effect],
    f: &[Effect],
    tol: f64,
) -> Result<Correlation> {
    let mut table = vec![vec![0.0; f.len()]; e.len()];
    for (i, x) in e.iter().enumerate() {
        for (j, y) in f.iter().enumerate() {
            table[i][j] = omega.value(x, y)?;
        }
    }
    let mut map = vec![None; e.len()];
    for (i, row) in table.iter().enumerate() {
        let support: Vec<usize> = (0..f.len()).filter(|&j| row[j] > tol).collect();
        if support.len() > 1 {
            return Ok(Correlation::Branching {
                side: Side::First,
                outcome: i,
                partners: support.len(),
            });
        }
        map[i] = support.first().copied();
    }
    for j in 0..f.len() {
        let partners = (0..e.len()).filter(|&i| table[i][j] > tol).count();
        if partners > 1 {
            return Ok(Correlation::Branching {
                side: Side::Second,
                outcome: j,
                partners,
            });
        }
    }
    if map.iter().all(Option::is_none) {
        return Ok(Correlation::Empty);
    }
    let m1 = marginal(omega, Side::First);
    let m2 = marginal(omega, Side::Second);
    let mut residual = 0.0f64;
    for (i, x) in e.iter().enumerate() {
        let p1 = linalg::dot(&x.coords, &m1.coords);
        match map[i] {
            Some(j) => {
                let p2 = linalg::dot(&f[j].coords, &m2.coords);
                residual = residual
                    .max((table[i][j] - p1).abs())
                    .max((table[i][j] - p2).abs());
            }
            None => residual = residual.max(p1.abs()),
        }
    }
    Ok(Correlation::Bijection { map, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugate::make_conjugate;
    use crate::eja::Algebra;
    use crate::linalg::Mat;
    use crate::model::{Model, State};

    fn qubit() -> (Algebra, Conjugate) {
        let alg = Algebra::complex_herm(2).unwrap();
        let conj = make_conjugate(&Model::jordan(alg.clone())).unwrap();
        (alg, conj)
    }

    fn effects(frame: &[Element]) -> Vec<Effect> {
        frame.iter().map(Effect::from_element).collect()
    }

    #[test]
    fn eta_correlates_a_frame_with_its_bar() {
        let (alg, conj) = qubit();
        let frame = spectral_decompose(&alg.unit()).frame;
        let bars: Vec<Element> = frame.iter().map(|x| conj.bar(x)).collect();
        let c = correlating_check(&conj.eta, &effects(&frame), &effects(&bars), 1e-12).unwrap();
        assert_eq!(
            c,
            Correlation::Bijection {
                map: vec![Some(0), Some(1)],
                residual: 0.0
            }
        );
    }

    #[test]
    fn product_of_mixed_states_is_not_correlating() {
        let (alg, conj) = qubit();
        let rho = State::from_element(&alg.unit().scale(0.5));
        let model = conj.eta.a.clone();
        let w = BipartiteState::product(model.clone(), model, &rho, &rho).unwrap();
        let frame = spectral_decompose(&alg.unit()).frame;
        let c = correlating_check(&w, &effects(&frame), &effects(&frame), 1e-12).unwrap();
        assert!(matches!(c, Correlation::Branching { partners: 2, .. }));
    }

    #[test]
    fn maximally_mixed_dilates_to_eta() {
        let (alg, conj) = qubit();
        // The dilation is separable, so it agrees with η on the decomposing
        // frame and its bar, not on every pair of effects.
        let d = correlation_dilation(&conj, &alg.unit().scale(0.5), 1e-10).unwrap();
        for x in &d.frame {
            for y in &d.frame {
                let (ex, ey) = (Effect::from_element(x), Effect::from_element(&conj.bar(y)));
                assert!(
                    (d.omega.value(&ex, &ey).unwrap() - conj.eta.value(&ex, &ey).unwrap()).abs()
                        < 1e-14
                );
            }
        }
        assert!(d.omega.matrix.max_abs_diff(&conj.eta.matrix) > 0.1);
    }

    #[test]
    fn diagonal_state_dilation() {
        let (alg, conj) = qubit();
        let a = alg.from_real_matrix(&Mat::diagonal(&[0.7, 0.3])).unwrap();
        let d = correlation_dilation(&conj, &a, 1e-10).unwrap();
        assert!(d.marginal_residual < 1e-12);
        let bars: Vec<Element> = d.frame.iter().map(|x| conj.bar(x)).collect();
        let c = correlating_check(&d.omega, &effects(&d.frame), &effects(&bars), 1e-12).unwrap();
        let Correlation::Bijection { map, residual } = c else {
            panic!("{c:?}")
        };
        assert_eq!(map, vec![Some(0), Some(1)]);
        assert!(residual < 1e-14);
        assert!(
            (d.omega
                .value(
                    &Effect::from_element(&d.frame[0]),
                    &Effect::from_element(&bars[0])
                )
                .unwrap()
                - 0.7)
                .abs()
                < 1e-14
        );
    }

    #[test]
    fn pure_state_dilation_has_one_point() {
        let (alg, conj) = qubit();
        let p = alg.from_real_matrix(&Mat::diagonal(&[1.0, 0.0])).unwrap();
        let d = correlation_dilation(&conj, &p, 1e-10).unwrap();
        let bars: Vec<Element> = d.frame.iter().map(|x| conj.bar(x)).collect();
        let c = correlating_check(&d.omega, &effects(&d.frame), &effects(&bars), 1e-12).unwrap();
        assert_eq!(
            c,
            Correlation::Bijection {
                map: vec![Some(0), None],
                residual: 0.0
            }
        );
    }
}
