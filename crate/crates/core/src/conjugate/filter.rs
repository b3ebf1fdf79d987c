//! Filters `Φ = U_c` with `c = Σ √t_x x`, their reversals, and the
//! transports `U_{√b} U_{√a}⁻¹` between interior points.

use alloc::vec::Vec;

use rand::Rng;

use super::Conjugate;
use crate::eja::{
    cone_membership, frame_residuals, inverse, quadratic_rep, spectral_decompose, sqrt, Algebra,
    AlgebraKind, Element, LinearMap,
};
use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::random::{random_primitive, random_square};

/// A filter on a Jordan model, stored with its generating frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Filter {
    /// The process on `V(A)`; it is trace-form self-adjoint, so it is also
    /// its own dual action on effects.
    pub map: LinearMap,
    pub frame: Vec<Element>,
    pub coefficients: Vec<f64>,
}

pub fn make_filter(frame: &[Element], coefficients: &[f64], tol: f64) -> Result<Filter> {
    let alg = frame
        .first()
        .ok_or(Error::InvalidFrame {
            residual: f64::INFINITY,
        })?
        .algebra()
        .clone();
    if frame.len() != alg.rank() {
        return Err(Error::InvalidFrame {
            residual: f64::INFINITY,
        });
    }
    if coefficients.len() != frame.len() {
        return Err(Error::DimensionMismatch {
            expected: frame.len(),
            found: coefficients.len(),
        });
    }
    if frame.iter().any(|p| p.algebra() != &alg) {
        return Err(Error::AlgebraMismatch);
    }
    if let Some((index, &value)) = coefficients
        .iter()
        .enumerate()
        .find(|(_, t)| !(0.0..=1.0).contains(*t) || t.is_nan())
    {
        return Err(Error::CoefficientOutOfRange { index, value });
    }
    let residual = frame_residuals(frame).worst();
    if residual > tol {
        return Err(Error::InvalidFrame { residual });
    }
    let mut c = alg.zero();
    for (p, &t) in frame.iter().zip(coefficients) {
        c = c.axpy(libm::sqrt(t), p);
    }
    Ok(Filter {
        map: quadratic_rep(&c),
        frame: frame.to_vec(),
        coefficients: coefficients.to_vec(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FilterReport {
    /// `max |Φ(α)(x) − t_x α(x)|` over sampled states and frame outcomes.
    pub attenuation: f64,
    /// `max ‖Φ*(x) − t_x x‖` over the frame.
    pub dual_action: f64,
    /// Worst negativity of `Φ` on sampled cone elements.
    pub positivity: f64,
    /// Negativity of `u − Φ*(u)`.
    pub subunital: f64,
    /// `‖Φ(ρ) − (1/n) Σ t_x x‖`.
    pub mixed_image: f64,
}

impl FilterReport {
    pub fn worst(&self) -> f64 {
        self.attenuation
            .max(self.dual_action)
            .max(self.positivity)
            .max(self.subunital)
            .max(self.mixed_image)
    }
}

impl Filter {
    pub fn algebra(&self) -> &Algebra {
        &self.map.domain
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        self.map.apply(a)
    }

    pub fn verify<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize, tol: f64) -> FilterReport {
        let alg = self.algebra().clone();
        let dual = self.map.adjoint();
        let n = alg.rank() as f64;
        let mut attenuation = 0.0f64;
        for _ in 0..samples {
            let a = crate::random::random_state(&alg, rng);
            let image = self.apply(&a).expect("same algebra");
            for (x, t) in self.frame.iter().zip(&self.coefficients) {
                let lhs = linalg::dot(image.coords(), x.coords());
                attenuation =
                    attenuation.max((lhs - t * linalg::dot(a.coords(), x.coords())).abs());
            }
        }
        let mut dual_action = 0.0f64;
        let mut expected = alg.zero();
        for (x, &t) in self.frame.iter().zip(&self.coefficients) {
            dual_action =
                dual_action.max(dual.apply(x).expect("same algebra").distance(&x.scale(t)));
            expected = expected.axpy(t / n, x);
        }
        let positivity = cone_preservation(&self.map, rng, samples, tol);
        let u = alg.unit();
        let slack = u.sub(&dual.apply(&u).expect("same algebra"));
        let subunital = (-cone_membership(&slack, tol).min_eigenvalue).max(0.0);
        let rho = u.scale(1.0 / n);
        let mixed_image = self.apply(&rho).expect("same algebra").distance(&expected);
        FilterReport {
            attenuation,
            dual_action,
            positivity,
            subunital,
            mixed_image,
        }
    }
}

/// Worst negativity (smallest eigenvalue below zero, relative to the input's
/// trace) of `map` applied to sampled primitive idempotents and squares.
pub fn cone_preservation<R: Rng + ?Sized>(
    map: &LinearMap,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> f64 {
    let mut worst = 0.0f64;
    for k in 0..samples {
        let a = if k % 2 == 0 {
            random_primitive(&map.domain, rng)
        } else {
            random_square(&map.domain, rng)
        };
        let scale = a.trace().max(f64::MIN_POSITIVE);
        let image = map.apply(&a).expect("domain");
        worst = worst.max((-cone_membership(&image, tol).min_eigenvalue / scale).max(0.0));
    }
    worst
}

/// `max |η(Φ*a, b̄) − η(a, Φ̄*b̄)|` over sampled effect pairs, where `Φ̄` is
/// `Φ` conjugated by the bar map.
pub fn filter_symmetry_check<R: Rng + ?Sized>(
    map: &LinearMap,
    conj: &Conjugate,
    rng: &mut R,
    samples: usize,
) -> Result<f64> {
    if &map.domain != conj.algebra() || &map.codomain != conj.algebra() {
        return Err(Error::ModelMismatch);
    }
    let dual = map.adjoint();
    let c = conj.bar_matrix();
    let dual_bar = c.mul(&dual.matrix).mul(&c);
    let alg = conj.algebra();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = random_square(alg, rng);
        let b = random_square(alg, rng);
        let lhs = conj.eta_bar(&dual.apply(&a)?, &b);
        let bb = conj.bar(&b);
        let moved = alg.element(dual_bar.apply(bb.coords()))?;
        let rhs = conj.eta(&a, &moved);
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Congruence `a ↦ X a X*` on a real or complex matrix algebra; a positive
/// map which is a filter only when `X` is Hermitian.
pub fn congruence(alg: &Algebra, x: &CMat) -> Result<LinearMap> {
    match alg.kind() {
        AlgebraKind::RealSym(n) | AlgebraKind::ComplexHerm(n) if *n == x.order() => {}
        _ => {
            return Err(Error::UnsupportedKind(alloc::format!(
                "congruence on {alg}"
            )))
        }
    }
    let xa = x.adjoint();
    let cols: Result<Vec<Vec<f64>>> = (0..alg.dim())
        .map(|i| {
            let m = alg.basis(i).to_complex_matrix().expect("matrix");
            Ok(alg.from_complex_matrix(&x.mul(&m).mul(&xa))?.into_coords())
        })
        .collect();
    LinearMap::new(alg.clone(), alg.clone(), linalg::Mat::from_columns(&cols?))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Reversibility {
    pub reversible: bool,
    pub p: f64,
    /// `S = p U_{c⁻¹}` when the filter is reversible.
    pub reversing: Option<LinearMap>,
    /// `‖S∘Φ − p I‖` (max entry).
    pub composition: f64,
    /// Worst negativity of `S` on sampled cone elements.
    pub positivity: f64,
    /// Negativity of `u − S*(u)`.
    pub subunital: f64,
}

pub fn p_reversibility_check<R: Rng + ?Sized>(
    filter: &Filter,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> Reversibility {
    let p = filter
        .coefficients
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if p <= tol {
        return Reversibility {
            reversible: false,
            p,
            reversing: None,
            composition: f64::INFINITY,
            positivity: 0.0,
            subunital: 0.0,
        };
    }
    let alg = filter.algebra().clone();
    let mut c_inv = alg.zero();
    for (x, &t) in filter.frame.iter().zip(&filter.coefficients) {
        c_inv = c_inv.axpy(1.0 / libm::sqrt(t), x);
    }
    let s = quadratic_rep(&c_inv).scale(p);
    let sf = s.compose(&filter.map).expect("same algebra");
    let composition = sf.max_abs_diff(&LinearMap::identity(&alg).scale(p));
    let positivity = cone_preservation(&s, rng, samples, tol);
    let u = alg.unit();
    let slack = u.sub(&s.adjoint().apply(&u).expect("same algebra"));
    let subunital = (-cone_membership(&slack, tol).min_eigenvalue).max(0.0);
    Reversibility {
        reversible: composition <= tol && positivity <= tol && subunital <= tol,
        p,
        reversing: Some(s),
        composition,
        positivity,
        subunital,
    }
}

/// An order automorphism carrying `a` to `b`, with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct Transport {
    pub map: LinearMap,
    pub inverse: LinearMap,
}

impl Transport {
    /// `max(‖T(a) − b‖, ‖T⁻¹(b) − a‖, ‖T⁻¹T − I‖)`.
    pub fn residual(&self, a: &Element, b: &Element) -> f64 {
        let fwd = self.map.apply(a).map_or(f64::INFINITY, |t| t.distance(b));
        let back = self
            .inverse
            .apply(b)
            .map_or(f64::INFINITY, |t| t.distance(a));
        let id = self.inverse.compose(&self.map).map_or(f64::INFINITY, |m| {
            m.max_abs_diff(&LinearMap::identity(&self.map.domain))
        });
        fwd.max(back).max(id)
    }
}

/// `T = U_{√b} U_{(√a)⁻¹}`, so that `T(a) = b`.
pub fn homogeneity_transport(a: &Element, b: &Element, tol: f64) -> Result<Transport> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    for e in [a, b] {
        let m = cone_membership(e, tol);
        if m.min_eigenvalue <= tol {
            return Err(Error::NotInterior {
                min_eigenvalue: m.min_eigenvalue,
            });
        }
    }
    let (ra, rb) = (sqrt(a, tol)?, sqrt(b, tol)?);
    let (ra_inv, rb_inv) = (inverse(&ra, tol)?, inverse(&rb, tol)?);
    let map = quadratic_rep(&rb).compose(&quadratic_rep(&ra_inv))?;
    let inverse = quadratic_rep(&ra).compose(&quadratic_rep(&rb_inv))?;
    Ok(Transport { map, inverse })
}

/// The filter `Φ` with `Φ(u) = a / max spec(a)` on the eigenframe of `a`,
/// so that `Φ(ρ)` is proportional to the state `a`.
pub fn prepare_state(a: &Element, tol: f64) -> Result<Filter> {
    let sd = spectral_decompose(a);
    let min = sd.min_eigenvalue();
    if min <= tol {
        return Err(Error::NotInterior {
            min_eigenvalue: min,
        });
    }
    let top = sd.max_eigenvalue();
    let t: Vec<f64> = sd.eigenvalues.iter().map(|s| (s / top).min(1.0)).collect();
    make_filter(&sd.frame, &t, tol.max(1e-9))
}

/// Distance from `Φ(ρ)` to its best multiple `k a`, together with `k`.
pub fn proportionality(filter: &Filter, a: &Element) -> (f64, f64) {
    let alg = filter.algebra();
    let rho = alg.unit().scale(1.0 / alg.rank() as f64);
    let image = filter.apply(&rho).expect("same algebra");
    let k = linalg::dot(image.coords(), a.coords()) / linalg::dot(a.coords(), a.coords());
    (image.distance(&a.scale(k)), k)
}
