use alloc::vec::Vec;

use rand::Rng;

use crate::conjugate::Conjugate;
use crate::eja::{cone_membership, spectral_decompose, Algebra, Element};
use crate::linalg::{self, Mat};
use crate::random::{random_exterior, random_frame, random_primitive, random_square};

/// The form `⟨a, b⟩ := η(a, b̄)` on `E(A)` with its invariants measured.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaForm {
    pub algebra: Algebra,
    /// Gram matrix on the coordinate basis.
    pub gram: Mat,
    pub symmetry: f64,
    pub min_eigenvalue: f64,
    /// `max |⟨a,a⟩ − (1/n) Σ t_x²|` over elements `a = Σ t_x x` on sampled frames.
    pub frame_identity: f64,
    /// `max |⟨a,b⟩ − (1/n) tr(a∘b)|` entrywise, against the realized trace form.
    pub trace_form_agreement: f64,
}

impl EtaForm {
    pub fn inner(&self, a: &Element, b: &Element) -> f64 {
        linalg::dot(a.coords(), &self.gram.apply(b.coords()))
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        self.symmetry <= tol
            && self.min_eigenvalue > 0.0
            && self.frame_identity <= tol
            && self.trace_form_agreement <= tol
    }
}

pub fn eta_inner_product<R: Rng + ?Sized>(
    conj: &Conjugate,
    rng: &mut R,
    samples: usize,
) -> EtaForm {
    let alg = conj.algebra().clone();
    let n = alg.rank() as f64;
    let cols: Vec<Vec<f64>> = (0..alg.dim())
        .map(|j| {
            (0..alg.dim())
                .map(|i| conj.eta_bar(&alg.basis(i), &alg.basis(j)))
                .collect()
        })
        .collect();
    let gram = Mat::from_columns(&cols);
    let symmetry = gram.asymmetry();
    let (eigs, _) = gram.symmetrized().symmetric_eigen();
    let min_eigenvalue = eigs.last().copied().unwrap_or(0.0);

    let mut frame_identity = 0.0f64;
    for _ in 0..samples {
        let frame = random_frame(&alg, rng);
        let t: Vec<f64> = (0..frame.len())
            .map(|_| rng.random_range(-2.0..=2.0))
            .collect();
        let mut a = alg.zero();
        for (x, &tx) in frame.iter().zip(&t) {
            a = a.axpy(tx, x);
        }
        let want = t.iter().map(|v| v * v).sum::<f64>() / n;
        frame_identity = frame_identity.max((conj.eta_bar(&a, &a) - want).abs());
    }
    let trace_form_agreement = gram.max_abs_diff(&alg.trace_gram().scale(1.0 / n));
    EtaForm {
        algebra: alg,
        gram,
        symmetry,
        min_eigenvalue,
        frame_identity,
        trace_form_agreement,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelfDualityReport {
    pub cone_pairs: usize,
    /// Smallest `⟨a, b⟩` over sampled cone pairs.
    pub forward_min: f64,
    pub exterior_samples: usize,
    /// Largest `⟨a, w⟩ / |λ_min(a)|` over sampled exterior `a` with witness `w`.
    pub converse_ratio: f64,
    /// Exterior samples that received no witness.
    pub missing_witnesses: usize,
    /// `η̂` is invertible and it and its inverse map sampled cone
    /// generators into the cone: worst negativity seen.
    pub order_isomorphism: f64,
    pub eta_hat_invertible: bool,
}

impl SelfDualityReport {
    /// Cone pairs pair to at least `-forward_tol`, and every exterior sample
    /// is witnessed with `⟨a,w⟩ ≤ −tol·|λ_min|/2`.
    pub fn passes(&self, forward_tol: f64, tol: f64) -> bool {
        self.forward_min >= -forward_tol
            && self.missing_witnesses == 0
            && self.converse_ratio <= -tol / 2.0
            && self.eta_hat_invertible
            && self.order_isomorphism <= tol
    }
}

pub fn self_duality_check<R: Rng + ?Sized>(
    form: &EtaForm,
    conj: &Conjugate,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> SelfDualityReport {
    let alg = &form.algebra;
    let mut forward_min = f64::INFINITY;
    for k in 0..samples {
        let (a, b) = if k % 2 == 0 {
            (random_square(alg, rng), random_square(alg, rng))
        } else {
            (random_primitive(alg, rng), random_primitive(alg, rng))
        };
        forward_min = forward_min.min(form.inner(&a, &b));
    }
    forward_min = forward_min.min(form.inner(&alg.unit(), &random_square(alg, rng)));

    let mut converse_ratio = f64::NEG_INFINITY;
    let mut missing_witnesses = 0;
    for _ in 0..samples {
        let a = random_exterior(alg, rng);
        let m = cone_membership(&a, tol);
        match m.witness {
            Some(w) => {
                converse_ratio = converse_ratio.max(form.inner(&a, &w) / m.min_eigenvalue.abs())
            }
            None => missing_witnesses += 1,
        }
    }

    // η̂ : E(A) → V(Ā) has matrix Mᵀ.
    let eta_hat = conj.eta.matrix.transpose();
    let inverse = eta_hat.inverse();
    let mut order_isomorphism = 0.0f64;
    if let Some(inv) = &inverse {
        for _ in 0..samples.min(50) {
            let p = random_primitive(alg, rng);
            for m in [&eta_hat, inv] {
                let image = alg.element(m.apply(p.coords())).expect("dimension");
                let low = spectral_decompose(&image).min_eigenvalue();
                order_isomorphism = order_isomorphism.max((-low).max(0.0));
            }
        }
    }
    SelfDualityReport {
        cone_pairs: samples + 1,
        forward_min,
        exterior_samples: samples,
        converse_ratio,
        missing_witnesses,
        order_isomorphism,
        eta_hat_invertible: inverse.is_some(),
    }
}
