use alloc::string::ToString;

use rand::Rng;

use crate::conjugate::{bar_signs, cone_preservation, make_conjugate};
use crate::eja::{Algebra, AlgebraKind, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::model::Model;
use crate::random::random_element;
use crate::reconstruction::EtaForm;

fn form_for<'a>(forms: &'a [EtaForm], alg: &Algebra) -> Result<&'a EtaForm> {
    forms
        .iter()
        .find(|f| &f.algebra == alg)
        .ok_or_else(|| Error::MissingEtaForm(alg.to_string()))
}

/// `T† = G_A⁻¹ Tᵀ G_B` for `T : A → B`, so that `⟨T a, b⟩_B = ⟨a, T† b⟩_A`
/// in the self-dualizing inner products.
pub fn dagger_adjoint(t: &LinearMap, forms: &[EtaForm]) -> Result<LinearMap> {
    let ga = form_for(forms, &t.domain)?;
    let gb = form_for(forms, &t.codomain)?;
    let ga_inv = ga
        .gram
        .inverse()
        .ok_or_else(|| Error::SpectralFailure("singular Gram matrix".into()))?;
    LinearMap::new(
        t.codomain.clone(),
        t.domain.clone(),
        ga_inv.mul(&t.matrix.transpose()).mul(&gb.gram),
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct DaggerReport {
    /// `max |⟨T a, b⟩ − ⟨a, T† b⟩|` over sampled pairs.
    pub adjointness: f64,
    /// `‖T†† − T‖` and `‖S†† − S‖`.
    pub involution: f64,
    /// `‖(S∘T)† − T†∘S†‖`.
    pub composition: f64,
    /// `‖id† − id‖` on the domain of `T`.
    pub identity: f64,
}

impl DaggerReport {
    pub fn worst(&self) -> f64 {
        self.adjointness
            .max(self.involution)
            .max(self.composition)
            .max(self.identity)
    }
}

/// Dagger laws for `T : A → B` and `S : B → C`.
pub fn dagger_check<R: Rng + ?Sized>(
    t: &LinearMap,
    s: &LinearMap,
    forms: &[EtaForm],
    rng: &mut R,
    samples: usize,
) -> Result<DaggerReport> {
    let st = s.compose(t)?;
    let td = dagger_adjoint(t, forms)?;
    let sd = dagger_adjoint(s, forms)?;
    let (ga, gb) = (form_for(forms, &t.domain)?, form_for(forms, &t.codomain)?);

    let mut adjointness = 0.0f64;
    for _ in 0..samples {
        let a = random_element(&t.domain, rng);
        let b = random_element(&t.codomain, rng);
        let lhs = gb.inner(&t.apply(&a)?, &b);
        let rhs = ga.inner(&a, &td.apply(&b)?);
        adjointness = adjointness.max((lhs - rhs).abs());
    }
    let involution = dagger_adjoint(&td, forms)?
        .max_abs_diff(t)
        .max(dagger_adjoint(&sd, forms)?.max_abs_diff(s));
    let composition = dagger_adjoint(&st, forms)?.max_abs_diff(&td.compose(&sd)?);
    let id = LinearMap::identity(&t.domain);
    let identity = dagger_adjoint(&id, forms)?.max_abs_diff(&id);
    Ok(DaggerReport {
        adjointness,
        involution,
        composition,
        identity,
    })
}

fn require_complex(alg: &Algebra) -> Result<()> {
    match alg.kind() {
        AlgebraKind::ComplexHerm(_) => Ok(()),
        _ => Err(Error::UnsupportedBackend),
    }
}

/// `φ̄ = C_B φ C_A`, the process `Ā → B̄` obtained by conjugating the matrix
/// representation of `φ`.
pub fn conjugate_map(t: &LinearMap) -> LinearMap {
    let ca = Mat::diagonal(&bar_signs(&t.domain));
    let cb = Mat::diagonal(&bar_signs(&t.codomain));
    LinearMap {
        domain: t.domain.clone(),
        codomain: t.codomain.clone(),
        matrix: cb.mul(&t.matrix).mul(&ca),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Functoriality {
    pub conjugate: LinearMap,
    /// `‖φ̄̄ − φ‖`.
    pub double_conjugation: f64,
    /// Worst `|η_Ā(ā, b) − η_A(a, b̄)|` on both sides, together with `‖ā̄ − a‖`.
    pub eta_symmetry: f64,
    /// `max |⟨φ̄ ā, b̄⟩ − ⟨φ a, b⟩|`: conjugation commutes with evaluation.
    pub evaluation: f64,
    /// Worst negativity of `φ̄` on sampled cone elements; zero when `φ` is
    /// positive.
    pub positivity: f64,
    /// `‖φ̄ − φ‖`; zero for maps with real coefficients.
    pub self_conjugacy: f64,
}

impl Functoriality {
    pub fn worst(&self) -> f64 {
        self.double_conjugation
            .max(self.eta_symmetry)
            .max(self.evaluation)
            .max(self.positivity)
    }
}

pub fn conjugate_functoriality_check<R: Rng + ?Sized>(
    t: &LinearMap,
    rng: &mut R,
    samples: usize,
    tol: f64,
) -> Result<Functoriality> {
    require_complex(&t.domain)?;
    require_complex(&t.codomain)?;
    let ca = make_conjugate(&Model::jordan(t.domain.clone()))?;
    let cb = make_conjugate(&Model::jordan(t.codomain.clone()))?;
    let conjugate = conjugate_map(t);
    let double_conjugation = conjugate_map(&conjugate).max_abs_diff(t);
    let eta_symmetry = ca
        .double_conjugation_residual(rng, samples)
        .max(cb.double_conjugation_residual(rng, samples));

    let mut evaluation = 0.0f64;
    for _ in 0..samples {
        let a = random_element(&t.domain, rng);
        let b = random_element(&t.codomain, rng);
        let lhs = linalg::dot(conjugate.apply(&ca.bar(&a))?.coords(), cb.bar(&b).coords());
        let rhs = linalg::dot(t.apply(&a)?.coords(), b.coords());
        evaluation = evaluation.max((lhs - rhs).abs());
    }
    let positivity = cone_preservation(&conjugate, rng, samples, tol);
    let self_conjugacy = conjugate.max_abs_diff(t);
    Ok(Functoriality {
        conjugate,
        double_conjugation,
        eta_symmetry,
        evaluation,
        positivity,
        self_conjugacy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugate::{congruence, make_filter};
    use crate::eja::quadratic_rep;
    use crate::linalg::CMat;
    use crate::random::{random_frame, random_interior};
    use crate::reconstruction::eta_inner_product;
    use alloc::vec;
    use alloc::vec::Vec;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn forms<R: Rng + ?Sized>(algs: &[Algebra], rng: &mut R) -> Vec<EtaForm> {
        algs.iter()
            .map(|a| eta_inner_product(&make_conjugate(&Model::jordan(a.clone())).unwrap(), rng, 5))
            .collect()
    }

    fn random_map<R: Rng + ?Sized>(a: &Algebra, b: &Algebra, rng: &mut R) -> LinearMap {
        let rows: Vec<Vec<f64>> = (0..b.dim())
            .map(|_| (0..a.dim()).map(|_| rng.random_range(-1.0..=1.0)).collect())
            .collect();
        LinearMap::new(a.clone(), b.clone(), Mat::from_rows(&rows)).unwrap()
    }

    #[test]
    fn dagger_laws_on_random_processes() {
        let mut rng = ChaCha8Rng::seed_from_u64(70);
        let algs = [
            Algebra::complex_herm(2).unwrap(),
            Algebra::complex_herm(3).unwrap(),
            Algebra::real_sym(2).unwrap(),
        ];
        let fs = forms(&algs, &mut rng);
        for _ in 0..5 {
            let t = random_map(&algs[0], &algs[1], &mut rng);
            let s = random_map(&algs[1], &algs[2], &mut rng);
            let r = dagger_check(&t, &s, &fs, &mut rng, 100).unwrap();
            assert!(r.worst() <= 1e-12, "{r:?}");
        }
    }

    #[test]
    fn filters_are_self_adjoint() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let alg = Algebra::complex_herm(3).unwrap();
        let fs = forms(core::slice::from_ref(&alg), &mut rng);
        let frame = random_frame(&alg, &mut rng);
        let f = make_filter(&frame, &[0.9, 0.4, 0.1], 1e-10).unwrap();
        assert!(dagger_adjoint(&f.map, &fs).unwrap().max_abs_diff(&f.map) < 1e-12);
    }

    #[test]
    fn missing_form_is_reported() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        let a = Algebra::complex_herm(2).unwrap();
        let b = Algebra::complex_herm(3).unwrap();
        let fs = forms(core::slice::from_ref(&a), &mut rng);
        let t = random_map(&a, &b, &mut rng);
        assert!(matches!(
            dagger_adjoint(&t, &fs),
            Err(Error::MissingEtaForm(_))
        ));
    }

    #[test]
    fn identity_and_real_maps_are_self_conjugate() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        let alg = Algebra::complex_herm(2).unwrap();
        let id = LinearMap::identity(&alg);
        let r = conjugate_functoriality_check(&id, &mut rng, 20, 1e-10).unwrap();
        assert_eq!(r.conjugate, id);
        // U_c with c real diagonal has real coefficients.
        let c = alg.from_real_matrix(&Mat::diagonal(&[0.9, 0.3])).unwrap();
        let r = conjugate_functoriality_check(&quadratic_rep(&c), &mut rng, 20, 1e-10).unwrap();
        assert!(r.self_conjugacy < 1e-15);
    }

    #[test]
    fn complex_filter_conjugates_twice_to_itself() {
        let mut rng = ChaCha8Rng::seed_from_u64(74);
        let alg = Algebra::complex_herm(3).unwrap();
        let c = random_interior(&alg, &mut rng);
        let r = conjugate_functoriality_check(&quadratic_rep(&c), &mut rng, 30, 1e-10).unwrap();
        assert!(r.worst() <= 1e-12, "{r:?}");
        assert!(r.self_conjugacy > 1e-3);
        // The conjugate of a congruence by X is the congruence by X̄.
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let x = CMat::from_entries(2, vec![one, i, 0.5 * one, one]);
        let q = Algebra::complex_herm(2).unwrap();
        let r = conjugate_functoriality_check(&congruence(&q, &x).unwrap(), &mut rng, 10, 1e-10)
            .unwrap();
        assert!(
            r.conjugate
                .max_abs_diff(&congruence(&q, &x.conj()).unwrap())
                < 1e-14
        );
    }

    #[test]
    fn real_backend_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(75);
        let id = LinearMap::identity(&Algebra::real_sym(2).unwrap());
        assert_eq!(
            conjugate_functoriality_check(&id, &mut rng, 1, 1e-10),
            Err(Error::UnsupportedBackend)
        );
    }
}
