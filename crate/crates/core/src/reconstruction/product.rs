use alloc::vec::Vec;

use rand::Rng;

use crate::conjugate::Conjugate;
use crate::eja::{frame_residuals, spectral_decompose, Algebra, Element};
use crate::random::{random_element, random_frame};
use crate::tol::MERGE_TOL;

/// `a = Σ tᵢ eᵢ` with `t₀ > t₁ > …` and jointly orthogonal sharp effects
/// `eᵢ = Σ_{x∈Dᵢ} x` over disjoint subsets `Dᵢ` of one frame.
#[derive(Clone, Debug, PartialEq)]
pub struct SharpRepresentation {
    pub values: Vec<f64>,
    pub effects: Vec<Element>,
    /// The frame the `Dᵢ` are drawn from.
    pub frame: Vec<Element>,
    /// Frame indices making up each `Dᵢ`.
    pub blocks: Vec<Vec<usize>>,
}

impl SharpRepresentation {
    pub fn reconstruct(&self) -> Element {
        let mut acc = self.frame[0].algebra().zero();
        for (e, &t) in self.effects.iter().zip(&self.values) {
            acc = acc.axpy(t, e);
        }
        acc
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] > w[1])
    }

    /// `f(a) = Σ f(tᵢ) eᵢ`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> Element {
        let mut acc = self.frame[0].algebra().zero();
        for (e, &t) in self.effects.iter().zip(&self.values) {
            acc = acc.axpy(f(t), e);
        }
        acc
    }

    /// The normalized projection state `eᵢ / |Dᵢ|`, which assigns `eᵢ`
    /// probability one.
    pub fn witness(&self, i: usize) -> Element {
        self.effects[i].scale(1.0 / self.blocks[i].len() as f64)
    }
}

/// Merges equal eigenvalues (within `MERGE_TOL`, relative) into level sets.
pub fn unique_spectral_rep(a: &Element) -> SharpRepresentation {
    let sd = spectral_decompose(a);
    let mut values = Vec::new();
    let mut effects = Vec::new();
    let mut blocks = Vec::new();
    for (mean, idx) in sd.blocks(MERGE_TOL) {
        let mut e = a.algebra().zero();
        for &i in &idx {
            e = e.add(&sd.frame[i]);
        }
        values.push(mean);
        effects.push(e);
        blocks.push(idx);
    }
    SharpRepresentation {
        values,
        effects,
        frame: sd.frame,
        blocks,
    }
}

/// `a²` from the spectral representation alone.
pub fn spectral_square(a: &Element) -> Element {
    unique_spectral_rep(a).apply(|t| t * t)
}

/// `a • b = ½((a + b)² − a² − b²)` with squares from spectral data.
pub fn candidate_product(a: &Element, b: &Element) -> Element {
    spectral_square(&a.add(b))
        .sub(&spectral_square(a))
        .sub(&spectral_square(b))
        .scale(0.5)
}

/// The same combination without the ½.
pub fn unhalved_product(a: &Element, b: &Element) -> Element {
    spectral_square(&a.add(b))
        .sub(&spectral_square(a))
        .sub(&spectral_square(b))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductRecovery {
    pub basis_pairs: usize,
    pub samples: usize,
    /// `max ‖eᵢ • eⱼ − eᵢ ∘ eⱼ‖ / (1 + ‖eᵢ ∘ eⱼ‖)` over all coordinate basis pairs.
    pub table: f64,
    /// Relative linearity defect of `•` in each slot on random triples.
    pub bilinearity: f64,
    /// Jordan identity residual for `•`.
    pub jordan_identity: f64,
    /// `max ‖u • a − a‖ / (1 + ‖a‖)`.
    pub unit: f64,
    /// Frame defects under `•` (idempotency, orthogonality, completeness)
    /// for sampled frames.
    pub frames: f64,
    /// `max ‖u ⋆ a − a‖ / (1 + ‖a‖)` for the unhalved formula `⋆`; about 1
    /// since `u ⋆ a = 2a`.
    pub unhalved_unit_defect: f64,
}

impl ProductRecovery {
    pub fn worst(&self) -> f64 {
        self.table
            .max(self.bilinearity)
            .max(self.jordan_identity)
            .max(self.unit)
            .max(self.frames)
    }
}

/// Builds `•` from spectral data and compares it with the native product.
/// The conjugate supplies the outcomes and tests being checked: frames of
/// the model, whose elements must be `•`-primitive idempotents.
pub fn recover_jordan_product<R: Rng + ?Sized>(
    conj: &Conjugate,
    rng: &mut R,
    samples: usize,
) -> ProductRecovery {
    let alg: &Algebra = conj.algebra();
    let mut table = 0.0f64;
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let (a, b) = (alg.basis(i), alg.basis(j));
            let native = a.jordan(&b).expect("same algebra");
            table = table.max(candidate_product(&a, &b).distance(&native) / (1.0 + native.norm()));
        }
    }

    let mut bilinearity = 0.0f64;
    let mut jordan_identity = 0.0f64;
    let mut unit = 0.0f64;
    let mut unhalved_unit_defect = 0.0f64;
    let u = alg.unit();
    for _ in 0..samples {
        let a = random_element(alg, rng);
        let b = random_element(alg, rng);
        let c = random_element(alg, rng);
        let s: f64 = rng.random_range(-2.0..=2.0);
        let sa_c = a.scale(s).add(&c);
        let lhs = candidate_product(&sa_c, &b);
        let rhs = candidate_product(&a, &b)
            .scale(s)
            .add(&candidate_product(&c, &b));
        let left = lhs.distance(&rhs) / (1.0 + rhs.norm());
        let lhs = candidate_product(&b, &sa_c);
        let rhs = candidate_product(&b, &a)
            .scale(s)
            .add(&candidate_product(&b, &c));
        let right = lhs.distance(&rhs) / (1.0 + rhs.norm());
        bilinearity = bilinearity.max(left).max(right);

        // (a•a)•(a•b) = a•((a•a)•b)
        let aa = candidate_product(&a, &a);
        let l = candidate_product(&aa, &candidate_product(&a, &b));
        let r = candidate_product(&a, &candidate_product(&aa, &b));
        jordan_identity =
            jordan_identity.max(l.distance(&r) / (1.0 + a.norm() * a.norm() * a.norm() * b.norm()));

        unit = unit.max(candidate_product(&u, &a).distance(&a) / (1.0 + a.norm()));
        unhalved_unit_defect =
            unhalved_unit_defect.max(unhalved_product(&u, &a).distance(&a) / (1.0 + a.norm()));
    }

    let mut frames = 0.0f64;
    for _ in 0..samples.clamp(1, 20) {
        let frame = random_frame(alg, rng);
        for (i, x) in frame.iter().enumerate() {
            frames = frames.max(candidate_product(x, x).distance(x));
            for y in &frame[i + 1..] {
                frames = frames.max(candidate_product(x, y).norm());
            }
        }
        let mut sum = alg.zero();
        for x in &frame {
            sum = sum.add(x);
        }
        frames = frames.max(sum.distance(&u));
        // Primitivity: a native frame, so the native residuals must agree.
        frames = frames.max(frame_residuals(&frame).worst());
    }

    ProductRecovery {
        basis_pairs: alg.dim() * (alg.dim() + 1) / 2,
        samples,
        table,
        bilinearity,
        jordan_identity,
        unit,
        frames,
        unhalved_unit_defect,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugate::make_conjugate;
    use crate::linalg::Mat;
    use crate::model::Model;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_has_a_single_level() {
        let alg = Algebra::real_sym(3).unwrap();
        let r = unique_spectral_rep(&alg.unit());
        assert_eq!(r.values.len(), 1);
        assert!((r.values[0] - 1.0).abs() < 1e-15);
        assert!(r.effects[0].distance(&alg.unit()) < 1e-14);
    }

    #[test]
    fn diagonal_levels_merge() {
        let alg = Algebra::real_sym(3).unwrap();
        let a = alg
            .from_real_matrix(&Mat::diagonal(&[3.0, 3.0, 1.0]))
            .unwrap();
        let r = unique_spectral_rep(&a);
        assert_eq!(r.values.len(), 2);
        assert!((r.values[0] - 3.0).abs() < 1e-14 && (r.values[1] - 1.0).abs() < 1e-14);
        assert_eq!(r.blocks[0].len(), 2);
        assert_eq!(r.blocks[1].len(), 1);
        assert!((r.effects[0].trace() - 2.0).abs() < 1e-14);
        for i in 0..2 {
            let w = r.witness(i);
            assert!((w.inner(&r.effects[i]).unwrap() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn random_representations_reconstruct() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for alg in [
            Algebra::complex_herm(3).unwrap(),
            Algebra::quat_herm(2).unwrap(),
            Algebra::spin_factor(3).unwrap(),
        ] {
            for _ in 0..20 {
                let a = random_element(&alg, &mut rng);
                let r = unique_spectral_rep(&a);
                assert!(r.strictly_decreasing());
                assert!(r.reconstruct().distance(&a) < 1e-10 * (1.0 + a.norm()));
            }
        }
    }

    #[test]
    fn recovered_product_matches_native() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for alg in [
            Algebra::complex_herm(2).unwrap(),
            Algebra::spin_factor(4).unwrap(),
            Algebra::quat_herm(2).unwrap(),
        ] {
            let conj = make_conjugate(&Model::jordan(alg.clone())).unwrap();
            let r = recover_jordan_product(&conj, &mut rng, 10);
            assert!(r.worst() <= 1e-8, "{alg}: {r:?}");
            assert!(r.unhalved_unit_defect > 0.1);
        }
        let alg = Algebra::real_sym(2).unwrap();
        let u = alg.unit();
        assert!(candidate_product(&u, &u).distance(&u) < 1e-14);
    }
}
