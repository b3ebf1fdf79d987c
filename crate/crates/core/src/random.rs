//! Random sampling of elements, frames and cone points for property sweeps.

use alloc::vec::Vec;

use rand::Rng;

use crate::eja::{spectral_decompose, Algebra, Element};

/// Coordinates drawn uniformly from `[-1, 1]`.
pub fn random_element<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    let coords = (0..alg.dim())
        .map(|_| rng.random_range(-1.0..=1.0))
        .collect();
    alg.element(coords).expect("dimension")
}

/// The eigenframe of a random element.
pub fn random_frame<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Vec<Element> {
    spectral_decompose(&random_element(alg, rng)).frame
}

/// A primitive idempotent from a random frame.
pub fn random_primitive<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    let frame = random_frame(alg, rng);
    let k = rng.random_range(0..frame.len());
    frame[k].clone()
}

/// Random element with prescribed eigenvalues on a random frame.
pub fn with_spectrum<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R, eigenvalues: &[f64]) -> Element {
    let frame = random_frame(alg, rng);
    let mut acc = alg.zero();
    for (p, l) in frame.iter().zip(eigenvalues) {
        acc = acc.axpy(*l, p);
    }
    acc
}

/// A square `b²`; lands in the closed cone.
pub fn random_square<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    random_element(alg, rng).square()
}

/// Cone-interior element with eigenvalues in `[0.05, 1]`.
pub fn random_interior<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    let spectrum: Vec<f64> = (0..alg.rank())
        .map(|_| rng.random_range(0.05..=1.0))
        .collect();
    with_spectrum(alg, rng, &spectrum)
}

/// Non-singular unit-trace cone element (the density of a non-singular state).
pub fn random_state<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    let a = random_interior(alg, rng);
    let t = a.trace();
    a.scale(1.0 / t)
}

/// Element outside the cone: eigenvalues in `[-1, 1]`, the smallest forced
/// below `-0.05`.
pub fn random_exterior<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    let mut spectrum: Vec<f64> = (0..alg.rank())
        .map(|_| rng.random_range(-1.0..=1.0))
        .collect();
    let k = rng.random_range(0..spectrum.len());
    spectrum[k] = rng.random_range(-1.0..=-0.05);
    with_spectrum(alg, rng, &spectrum)
}
