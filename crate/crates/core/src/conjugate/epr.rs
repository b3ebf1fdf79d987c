//! The maximally entangled vector `Ψ = n^{-1/2} Σ eᵢ ⊗ eᵢ` and the identity
//! `⟨(a ⊗ b̄)Ψ, Ψ⟩ = Tr(ab)/n`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use super::make_conjugate;
use crate::eja::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eigen, CMat};
use crate::model::Model;
use crate::random::{random_element, random_frame};

pub fn epr_vector(n: usize) -> Vec<Complex64> {
    let mut psi = vec![Complex64::new(0.0, 0.0); n * n];
    let w = 1.0 / libm::sqrt(n as f64);
    for i in 0..n {
        psi[i * n + i] = Complex64::new(w, 0.0);
    }
    psi
}

#[derive(Clone, Debug, PartialEq)]
pub struct EprReport {
    pub n: usize,
    pub pairs: usize,
    /// `max |⟨(a ⊗ b̄)Ψ, Ψ⟩ − Tr(ab)/n|` over random Hermitian pairs.
    pub max_deviation: f64,
    /// Worst deviation of `⟨(p_x ⊗ p̄_y)Ψ, Ψ⟩` from `δ_xy / n` on random frames.
    pub frame_residual: f64,
    /// `max ‖(U ⊗ Ū)Ψ − Ψ‖` over random unitaries.
    pub basis_residual: f64,
    /// Disagreement between the tensor computation and `η(a, b̄)` computed
    /// from the trace form.
    pub eta_agreement: f64,
}

impl EprReport {
    pub fn worst(&self) -> f64 {
        self.max_deviation
            .max(self.frame_residual)
            .max(self.basis_residual)
            .max(self.eta_agreement)
    }
}

fn expectation(a: &CMat, b: &CMat, psi: &[Complex64]) -> Complex64 {
    let op = a.kron(&b.conj());
    linalg::cdot(psi, &op.apply(psi))
}

pub fn epr_check<R: Rng + ?Sized>(n: usize, rng: &mut R, pairs: usize) -> Result<EprReport> {
    if n < 2 {
        return Err(Error::InvalidSize {
            kind: "epr",
            size: n,
        });
    }
    let alg = Algebra::complex_herm(n)?;
    let conj = make_conjugate(&Model::jordan(alg.clone()))?;
    let psi = epr_vector(n);
    let nf = n as f64;
    let mut max_deviation = 0.0f64;
    let mut eta_agreement = 0.0f64;
    for _ in 0..pairs {
        let a = random_element(&alg, rng);
        let b = random_element(&alg, rng);
        let (ma, mb) = (
            a.to_complex_matrix().expect("matrix"),
            b.to_complex_matrix().expect("matrix"),
        );
        let v = expectation(&ma, &mb, &psi);
        let want = ma.mul(&mb).trace().re / nf;
        max_deviation = max_deviation.max((v - want).norm());
        eta_agreement = eta_agreement.max((v.re - conj.eta_bar(&a, &b)).abs());
    }

    let mut frame_residual = 0.0f64;
    let mut basis_residual = 0.0f64;
    for _ in 0..pairs.clamp(1, 10) {
        let frame: Vec<CMat> = random_frame(&alg, rng)
            .iter()
            .map(|p| p.to_complex_matrix().expect("matrix"))
            .collect();
        for (i, p) in frame.iter().enumerate() {
            for (j, q) in frame.iter().enumerate() {
                let want = if i == j { 1.0 / nf } else { 0.0 };
                frame_residual = frame_residual.max((expectation(p, q, &psi) - want).norm());
            }
        }
        let h = random_element(&alg, rng)
            .to_complex_matrix()
            .expect("matrix");
        let (_, u) = hermitian_eigen(&h);
        let moved = u.kron(&u.conj()).apply(&psi);
        let diff: Vec<Complex64> = moved.iter().zip(&psi).map(|(x, y)| x - y).collect();
        basis_residual = basis_residual.max(linalg::cnorm(&diff));
    }
    Ok(EprReport {
        n,
        pairs,
        max_deviation,
        frame_residual,
        basis_residual,
        eta_agreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn psi_is_a_unit_vector() {
        for n in 2..5 {
            assert!((linalg::cnorm(&epr_vector(n)) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn same_projection_gives_one_over_n() {
        let p = CMat::from_real(&Mat::diagonal(&[1.0, 0.0, 0.0]));
        let q = CMat::from_real(&Mat::diagonal(&[0.0, 1.0, 0.0]));
        let psi = epr_vector(3);
        assert!((expectation(&p, &p, &psi).re - 1.0 / 3.0).abs() < 1e-15);
        assert!(expectation(&p, &q, &psi).norm() < 1e-15);
    }

    #[test]
    fn random_pairs_match_the_trace_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let r = epr_check(3, &mut rng, 100).unwrap();
        assert!(r.worst() <= 1e-12, "{r:?}");
        assert!(epr_check(1, &mut rng, 1).is_err());
    }
}
