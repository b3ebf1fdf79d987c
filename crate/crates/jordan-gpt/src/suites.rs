//! Named check suites. Each returns report records; the caller decides how
//! to group them.

use jordan_gpt_core::conjugate::{
    cone_preservation, epr_check, filter_symmetry_check, homogeneity_transport, make_conjugate,
    p_reversibility_check, prepare_state, proportionality,
};
use jordan_gpt_core::eja::{jordan_identity_residual, Algebra, AlgebraKind, LinearMap};
use jordan_gpt_core::linalg::Mat;
use jordan_gpt_core::model::{
    certainty_vertices, sharpness_check, spectrality_decompose, Backend, Distinguished, Effect,
    Model, State,
};
use jordan_gpt_core::monoidal::{
    conjugate_functoriality_check, dagger_check, local_tomography_check, quantum_composite,
    snake_check, Composite,
};
use jordan_gpt_core::random::{random_element, random_frame, random_interior, random_state};
use jordan_gpt_core::reconstruction::{
    classify_bit, correlating_check, correlation_dilation, eta_inner_product,
    recover_jordan_product, self_duality_check,
};
use jordan_gpt_core::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::report::Check;

pub const ALGEBRA: &str = "Jordan algebras: Jordan identity";
pub const MODEL: &str = "Probabilistic models: valid states";
pub const SHARP: &str = "Sharpness: unique certainty states";
pub const SPECTRAL: &str = "Spectrality: decomposition into distinguishable states";
pub const CONJUGATE: &str = "Conjugates: correlating state";
pub const EPR: &str = "Trace inner product as an EPR state";
pub const LEMMA1: &str = "Lemma 1: self-dualizing inner product";
pub const LEMMA2: &str = "Lemma 2: correlation principle";
pub const THM1: &str = "Theorem 1: Jordan product from spectral data";
pub const THM2: &str = "Theorem 2: filters and homogeneity";
pub const THM3: &str = "Theorem 3: dagger-compact structure";
pub const BITS: &str = "Bits: rank-two state spaces";
pub const COUNTEREXAMPLE: &str = "Counterexample: square bit";

/// Samples per randomized check.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub frames: usize,
    pub pairs: usize,
    pub states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            frames: 50,
            pairs: 100,
            states: 50,
        }
    }
}

pub fn model_suite(model: &Model, rng: &mut ChaCha8Rng, tol: f64, budget: Budget) -> Vec<Check> {
    let rho = model.maximally_mixed();
    let mut checks = vec![Check::measured(
        "model.maximally_mixed",
        "the maximally mixed weight is a state",
        MODEL,
        1,
        model.state_violation(&rho, tol),
        tol,
    )
    .with_note(format!(
        "rank {}, {} coordinates",
        model.rank(),
        model.coord_dim()
    ))];
    if let Some(vertices) = model.vertices() {
        let worst = vertices
            .iter()
            .map(|v| model.state_violation(&State { coords: v.clone() }, tol))
            .fold(0.0, f64::max);
        checks.push(Check::measured(
            "model.vertices",
            "every listed vertex is a state",
            MODEL,
            vertices.len(),
            worst,
            tol,
        ));
    }
    if let Some(alg) = model.algebra() {
        let mut worst = 0.0f64;
        for _ in 0..budget.pairs {
            let a = random_element(alg, rng);
            let b = random_element(alg, rng);
            worst = worst.max(jordan_identity_residual(&a, &b).expect("same algebra"));
        }
        checks.push(Check::measured(
            "algebra.jordan_identity",
            "(a²∘b)∘a = a²∘(b∘a) on random pairs",
            ALGEBRA,
            budget.pairs,
            worst,
            1e-9,
        ));
    }
    checks
}

fn outcome_label(model: &Model, x: usize) -> String {
    model
        .outcome_names()
        .and_then(|n| n.get(x).cloned())
        .unwrap_or_else(|| format!("outcome {x}"))
}

pub fn sharpness_suite(
    model: &Model,
    rng: &mut ChaCha8Rng,
    tol: f64,
    budget: Budget,
) -> Vec<Check> {
    let r = sharpness_check(model, rng, budget.frames.min(10), tol);
    let mut checks = Vec::new();
    let offenders: Vec<String> = r
        .offending
        .iter()
        .map(|&x| outcome_label(model, x))
        .collect();
    let mut summary = Check::verdict(
        "sharpness",
        "each outcome is made certain by exactly one state",
        SHARP,
        r.faces.len(),
        r.worst_residual,
        tol,
        r.sharp && r.worst_residual <= tol,
    );
    if !offenders.is_empty() {
        summary = summary.with_note(format!("offending outcomes: {}", offenders.join(", ")));
    }
    checks.push(summary);
    if model.algebra().is_none() {
        for face in &r.faces {
            let name = outcome_label(model, face.outcome);
            let extra = face.vertices.len().saturating_sub(1) as f64;
            let note = match face.dimension {
                Some(d) => format!(
                    "certainty face has {} vertices, dimension {d}",
                    face.vertices.len()
                ),
                None => "no state makes this outcome certain".into(),
            };
            checks.push(
                Check::verdict(
                    &format!("sharpness.outcome.{name}"),
                    "the certainty face is a single vertex",
                    SHARP,
                    face.vertices.len(),
                    extra,
                    0.0,
                    face.dimension == Some(0),
                )
                .with_note(note),
            );
        }
    }
    checks
}

/// Every choice of `Δ` built from vertices that make each outcome certain.
fn delta_choices(model: &Model, tol: f64) -> Vec<Vec<Vec<f64>>> {
    let vertices = model.vertices().expect("discrete");
    let support = certainty_vertices(model, tol).expect("discrete");
    let mut choices: Vec<Vec<Vec<f64>>> = vec![Vec::new()];
    for s in &support {
        let mut next = Vec::new();
        for prefix in &choices {
            for &v in s {
                let mut c = prefix.clone();
                c.push(vertices[v].clone());
                next.push(c);
            }
        }
        choices = next;
    }
    choices
}

pub fn spectrality_suite(
    model: &Model,
    rng: &mut ChaCha8Rng,
    tol: f64,
    budget: Budget,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    match model.backend() {
        Backend::Jordan(alg) => {
            let mut worst = 0.0f64;
            let mut failures = 0;
            for _ in 0..budget.states {
                let s = State::from_element(&random_state(alg, rng));
                let r = spectrality_decompose(model, &s, &Distinguished::Canonical, tol)?;
                worst = worst.max(r.residual());
                failures += usize::from(!r.is_decomposed());
            }
            checks.push(Check::verdict(
                "spectrality.random_states",
                "random states decompose over a frame",
                SPECTRAL,
                budget.states,
                worst,
                1e-10,
                failures == 0 && worst <= 1e-10,
            ));
        }
        _ => {
            let vertices = model.vertices().expect("discrete");
            let centroid = State {
                coords: (0..model.coord_dim())
                    .map(|x| vertices.iter().map(|v| v[x]).sum::<f64>() / vertices.len() as f64)
                    .collect(),
            };
            let mut states = vec![centroid.clone()];
            states.extend(vertices.iter().map(|v| State { coords: v.clone() }));
            for _ in 0..budget.states {
                let w: Vec<f64> = vertices
                    .iter()
                    .map(|_| rng.random_range(0.0..1.0))
                    .collect();
                let total: f64 = w.iter().sum();
                let coords = (0..model.coord_dim())
                    .map(|x| {
                        vertices
                            .iter()
                            .zip(&w)
                            .map(|(v, wi)| v[x] * wi)
                            .sum::<f64>()
                            / total
                    })
                    .collect();
                states.push(State { coords });
            }

            let c = spectrality_decompose(model, &centroid, &Distinguished::Canonical, tol);
            let (residual, pass, note) = match &c {
                Ok(r) => (r.residual(), r.is_decomposed(), None),
                Err(e) => (f64::INFINITY, false, Some(e.to_string())),
            };
            let mut check = Check::verdict(
                "spectrality.centroid",
                "the centroid state decomposes over some test",
                SPECTRAL,
                1,
                residual,
                tol,
                pass,
            );
            if let Some(n) = note {
                check = check.with_note(n);
            }
            checks.push(check);

            // Spectrality may hold for some other choice of distinguished states.
            let choices = delta_choices(model, tol);
            let mut good = 0;
            let mut best = f64::INFINITY;
            for delta in &choices {
                let d = Distinguished::Explicit(delta.clone());
                let mut worst = 0.0f64;
                let mut all = true;
                for s in &states {
                    let r = spectrality_decompose(model, s, &d, tol)?;
                    worst = worst.max(r.residual());
                    all &= r.is_decomposed();
                }
                best = best.min(worst);
                good += usize::from(all);
            }
            checks.push(
                Check::verdict(
                    "spectrality.all_states",
                    "some choice of distinguished states decomposes every sampled state",
                    SPECTRAL,
                    states.len(),
                    best,
                    tol,
                    good > 0,
                )
                .with_note(format!(
                    "{good} of {} choices of distinguished states succeed",
                    choices.len()
                )),
            );
        }
    }
    Ok(checks)
}

pub fn conjugate_suite(
    model: &Model,
    rng: &mut ChaCha8Rng,
    tol: f64,
    budget: Budget,
) -> Result<Vec<Check>> {
    let conj = make_conjugate(model)?;
    let alg = conj.algebra().clone();
    let n = alg.rank() as f64;
    let mut diag = 0.0f64;
    let mut off = 0.0f64;
    for _ in 0..budget.frames {
        let frame = random_frame(&alg, rng);
        for (i, x) in frame.iter().enumerate() {
            for (j, y) in frame.iter().enumerate() {
                let v = conj.eta_bar(x, y);
                if i == j {
                    diag = diag.max((v - 1.0 / n).abs());
                } else {
                    off = off.max(v.abs());
                }
            }
        }
    }
    let mut checks = vec![
        Check::measured(
            "conjugate.frame_correlation",
            "η(x, x̄) = 1/n and η(x, ȳ) = 0 for x ≠ y in a frame",
            CONJUGATE,
            budget.frames,
            diag.max(off),
            1e-10,
        ),
        Check::measured(
            "conjugate.double_conjugation",
            "the conjugate of Ā is A, with η_Ā(ā, b) = η_A(a, b̄)",
            CONJUGATE,
            budget.pairs,
            conj.double_conjugation_residual(rng, budget.pairs),
            1e-12,
        ),
    ];
    let mut automorphism = 0.0f64;
    for _ in 0..budget.pairs {
        let a = random_element(&alg, rng);
        let b = random_element(&alg, rng);
        let lhs = conj.bar(&a.jordan(&b)?);
        let rhs = conj.bar(&a).jordan(&conj.bar(&b))?;
        automorphism = automorphism.max(lhs.distance(&rhs));
    }
    checks.push(Check::measured(
        "conjugate.bar_automorphism",
        "a ↦ ā is a Jordan automorphism",
        CONJUGATE,
        budget.pairs,
        automorphism,
        1e-12,
    ));
    let report = jordan_gpt_core::model::validate_bipartite(&conj.eta, rng, 10, tol);
    checks.push(Check::measured(
        "conjugate.eta_is_state",
        "η is a normalized non-signaling joint state",
        CONJUGATE,
        report.tests_examined,
        report.worst(),
        tol,
    ));
    if let AlgebraKind::ComplexHerm(k) = alg.kind() {
        if *k >= 2 {
            let r = epr_check(*k, rng, budget.pairs)?;
            checks.push(Check::measured(
                "conjugate.epr",
                "⟨(a⊗b̄)Ψ, Ψ⟩ = Tr(ab)/n",
                EPR,
                budget.pairs,
                r.worst(),
                1e-12,
            ));
        }
    }
    Ok(checks)
}

pub fn selfdual_suite(
    model: &Model,
    rng: &mut ChaCha8Rng,
    tol: f64,
    budget: Budget,
) -> Result<Vec<Check>> {
    let conj = make_conjugate(model)?;
    let form = eta_inner_product(&conj, rng, budget.frames);
    let samples = 2 * budget.pairs;
    let r = self_duality_check(&form, &conj, rng, samples, tol);
    Ok(vec![
        Check::verdict(
            "selfdual.form",
            "⟨a, b⟩ = η(a, b̄) is a symmetric positive-definite form equal to tr(a∘b)/n",
            LEMMA1,
            budget.frames,
            form.symmetry
                .max(form.frame_identity)
                .max(form.trace_form_agreement),
            1e-10,
            form.is_valid(1e-10),
        )
        .with_note(format!("smallest Gram eigenvalue {}", form.min_eigenvalue)),
        Check::measured(
            "selfdual.forward",
            "⟨a, b⟩ ≥ 0 for a, b in the cone",
            LEMMA1,
            r.cone_pairs,
            (-r.forward_min).max(0.0),
            1e-12,
        ),
        Check::verdict(
            "selfdual.converse",
            "every element outside the cone has a witness w with ⟨a, w⟩ ≤ −tol·|λ_min|/2",
            LEMMA1,
            r.exterior_samples,
            r.converse_ratio,
            -tol / 2.0,
            r.missing_witnesses == 0 && r.converse_ratio <= -tol / 2.0,
        )
        .with_note("residual is the largest ⟨a, w⟩ / |λ_min|"),
        Check::verdict(
            "selfdual.order_isomorphism",
            "η̂ is an order isomorphism onto the conjugate cone",
            LEMMA1,
            samples.min(50),
            r.order_isomorphism,
            tol,
            r.eta_hat_invertible && r.order_isomorphism <= tol,
        ),
    ])
}

pub fn filters_suite(
    model: &Model,
    rng: &mut ChaCha8Rng,
    tol: f64,
    budget: Budget,
) -> Result<Vec<Check>> {
    let conj = make_conjugate(model)?;
    let alg = conj.algebra().clone();
    let (mut composition, mut symmetry, mut prepared, mut min_p) =
        (0.0f64, 0.0f64, 0.0f64, f64::INFINITY);
    let mut reversible = true;
    for _ in 0..budget.states {
        let a = random_state(&alg, rng);
        let f = prepare_state(&a, tol)?;
        let r = p_reversibility_check(&f, rng, 10, 1e-9);
        reversible &= r.reversible;
        composition = composition.max(r.composition);
        min_p = min_p.min(r.p);
        symmetry = symmetry.max(filter_symmetry_check(&f.map, &conj, rng, 10)?);
        prepared = prepared.max(proportionality(&f, &a).0);
    }
    let mut checks = vec![
        Check::verdict(
            "filters.p_reversible",
            "the filter preparing a nonsingular state is p-reversible with p = min t",
            THM2,
            budget.states,
            composition,
            1e-9,
            reversible && composition <= 1e-9 && min_p > 0.0,
        )
        .with_note(format!("smallest p seen {min_p}")),
        Check::measured(
            "filters.eta_symmetric",
            "η(Φ*a, b̄) = η(a, Φ̄*b̄)",
            THM2,
            budget.states,
            symmetry,
            1e-9,
        ),
        Check::measured(
            "filters.prepares_state",
            "the filter maps the maximally mixed state onto a multiple of the target",
            THM2,
            budget.states,
            prepared,
            1e-9,
        ),
    ];

    let (mut transport, mut positivity) = (0.0f64, 0.0f64);
    for _ in 0..budget.pairs {
        let a = random_interior(&alg, rng);
        let b = random_interior(&alg, rng);
        let t = homogeneity_transport(&a, &b, tol)?;
        transport = transport.max(t.residual(&a, &b));
        positivity = positivity
            .max(cone_preservation(&t.map, rng, 1, tol))
            .max(cone_preservation(&t.inverse, rng, 1, tol));
    }
    checks.push(Check::measured(
        "filters.transport",
        "T = U_{√b} U_{√a}⁻¹ maps a to b and is invertible",
        THM2,
        budget.pairs,
        transport,
        1e-8,
    ));
    checks.push(Check::measured(
        "filters.transport_positivity",
        "T and T⁻¹ preserve the cone",
        THM2,
        2 * budget.pairs,
        positivity,
        tol,
    ));
    Ok(checks)
}

pub fn lemma1_suite(
    model: &Model,
    rng: &mut ChaCha8Rng,
    tol: f64,
    budget: Budget,
) -> Result<Vec<Check>> {
    let mut checks = conjugate_suite(model, rng, tol, budget)?;
    checks.extend(selfdual_suite(model, rng, tol, budget)?);
    Ok(checks)
}

pub fn lemma2_suite(model: &Model, rng: &mut ChaCha8Rng, budget: Budget) -> Result<Vec<Check>> {
    let conj = make_conjugate(model)?;
    let alg = conj.algebra().clone();
    let (mut marginal, mut correlation) = (0.0f64, 0.0f64);
    let mut bijective = true;
    for _ in 0..budget.states {
        let alpha = random_state(&alg, rng);
        let d = correlation_dilation(&conj, &alpha, 1e-10)?;
        marginal = marginal.max(d.marginal_residual);
        let e: Vec<Effect> = d.frame.iter().map(Effect::from_element).collect();
        let f: Vec<Effect> = d
            .frame
            .iter()
            .map(|x| Effect::from_element(&conj.bar(x)))
            .collect();
        match correlating_check(&d.omega, &e, &f, 1e-12)? {
            jordan_gpt_core::reconstruction::Correlation::Bijection { map, residual } => {
                correlation = correlation.max(residual);
                bijective &= map.iter().enumerate().all(|(i, m)| *m == Some(i));
            }
            _ => bijective = false,
        }
    }
    Ok(vec![
        Check::measured(
            "lemma2.marginal",
            "the dilation has marginal α",
            LEMMA2,
            budget.states,
            marginal,
            1e-10,
        ),
        Check::verdict(
            "lemma2.correlating",
            "the dilation correlates the eigenframe of α with its conjugate",
            LEMMA2,
            budget.states,
            correlation,
            1e-10,
            bijective && correlation <= 1e-10,
        ),
    ])
}

pub fn thm1_suite(model: &Model, rng: &mut ChaCha8Rng, budget: Budget) -> Result<Vec<Check>> {
    let conj = make_conjugate(model)?;
    let r = recover_jordan_product(&conj, rng, budget.pairs.min(30));
    let rows = [
        (
            "thm1.product_table",
            "a • b = a ∘ b on every pair of basis elements",
            r.table,
            r.basis_pairs,
        ),
        (
            "thm1.bilinearity",
            "• is linear in each slot",
            r.bilinearity,
            r.samples,
        ),
        (
            "thm1.jordan_identity",
            "• satisfies the Jordan identity",
            r.jordan_identity,
            r.samples,
        ),
        ("thm1.unit", "u • a = a", r.unit, r.samples),
        (
            "thm1.frames",
            "frames are orthogonal •-idempotents summing to u",
            r.frames,
            r.samples.clamp(1, 20),
        ),
    ];
    Ok(rows
        .into_iter()
        .map(|(name, claim, residual, samples)| {
            Check::measured(name, claim, THM1, samples, residual, 1e-8)
        })
        .collect())
}

pub fn thm2_suite(
    model: &Model,
    rng: &mut ChaCha8Rng,
    tol: f64,
    budget: Budget,
) -> Result<Vec<Check>> {
    filters_suite(model, rng, tol, budget)
}

fn random_map(a: &Algebra, b: &Algebra, rng: &mut ChaCha8Rng) -> LinearMap {
    let rows: Vec<Vec<f64>> = (0..b.dim())
        .map(|_| (0..a.dim()).map(|_| rng.random_range(-1.0..=1.0)).collect())
        .collect();
    LinearMap::new(a.clone(), b.clone(), Mat::from_rows(&rows)).expect("shape")
}

/// Composite, snake, dagger and conjugation checks at order `n`.
pub fn thm3_suite(n: usize, rng: &mut ChaCha8Rng, tol: f64, budget: Budget) -> Result<Vec<Check>> {
    let a = Model::jordan(Algebra::complex_herm(n)?);
    let mut checks = Vec::new();

    let snake = snake_check(n)?;
    checks.push(
        Check::measured(
            "thm3.snake",
            "(cap ⊗ id)(id ⊗ cup) = (1/n)·id on V(A) and on V(Ā)",
            THM3,
            snake.cup.rows(),
            snake.residual(),
            1e-10,
        )
        .with_note(format!(
            "cup from the unnormalized EPR vector, cap = η; normalization 1/n = {}",
            snake.normalization
        )),
    );

    let mut composite = 0.0f64;
    let mut states = 0;
    let mut tomography = Vec::new();
    for m in [2, n] {
        let b = Model::jordan(Algebra::complex_herm(m)?);
        let c = quantum_composite(&a, &b)?;
        let r = c.verify(rng, 5, tol);
        composite = composite.max(r.worst());
        states += r.states_examined;
        tomography.push(local_tomography_check(&c));
    }
    tomography.push(local_tomography_check(&quantum_composite(
        &a,
        &Composite::unit_model(),
    )?));
    checks.push(Check::measured(
        "thm3.composite",
        "Σ π(x, y) = u_AB and pulled-back joint states are non-signaling",
        THM3,
        states,
        composite,
        1e-10,
    ));
    let failed = tomography.iter().filter(|t| !t.passes()).count();
    let summary: Vec<String> = tomography
        .iter()
        .map(|t| {
            format!(
                "{}·{} = {} (span rank {})",
                t.dim_a, t.dim_b, t.dim_ab, t.span_rank
            )
        })
        .collect();
    checks.push(
        Check::verdict(
            "thm3.local_tomography",
            "dim V(AB) = dim V(A)·dim V(B) and product effects span",
            THM3,
            tomography.len(),
            failed as f64,
            0.0,
            failed == 0,
        )
        .with_note(summary.join("; ")),
    );

    let algs = [
        Algebra::complex_herm(n)?,
        Algebra::complex_herm(2)?,
        Algebra::complex_herm(n + 1)?,
    ];
    let forms: Vec<_> = algs
        .iter()
        .map(|alg| {
            make_conjugate(&Model::jordan(alg.clone())).map(|c| eta_inner_product(&c, rng, 5))
        })
        .collect::<Result<_>>()?;
    let mut dagger = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..5 {
        let t = random_map(&algs[0], &algs[1], rng);
        let s = random_map(&algs[1], &algs[2], rng);
        let r = dagger_check(&t, &s, &forms, rng, budget.pairs)?;
        dagger.0 = dagger.0.max(r.adjointness);
        dagger.1 = dagger.1.max(r.involution).max(r.identity);
        dagger.2 = dagger.2.max(r.composition);
    }
    checks.push(Check::measured(
        "thm3.dagger_adjoint",
        "⟨T a, b⟩ = ⟨a, T† b⟩",
        THM3,
        5 * budget.pairs,
        dagger.0,
        1e-12,
    ));
    checks.push(Check::measured(
        "thm3.dagger_involution",
        "T†† = T and id† = id",
        THM3,
        5,
        dagger.1,
        1e-12,
    ));
    checks.push(Check::measured(
        "thm3.dagger_composition",
        "(S∘T)† = T†∘S†",
        THM3,
        5,
        dagger.2,
        1e-12,
    ));

    let filter = jordan_gpt_core::eja::quadratic_rep(&random_interior(&algs[0], rng));
    let r = conjugate_functoriality_check(&filter, rng, 20, tol)?;
    checks.push(Check::measured(
        "thm3.conjugation",
        "φ̄̄ = φ, φ̄ is positive, and η_Ā(ā, b) = η_A(a, b̄)",
        THM3,
        20,
        r.worst(),
        1e-12,
    ));
    Ok(checks)
}

pub fn bits_suite(rng: &mut ChaCha8Rng, tol: f64) -> Result<Vec<Check>> {
    let cases = [
        (Algebra::real_sym(2)?, 2),
        (Algebra::complex_herm(2)?, 3),
        (Algebra::quat_herm(2)?, 5),
        (Algebra::spin_factor(4)?, 4),
    ];
    let mut checks = Vec::new();
    for (alg, d) in cases {
        let c = classify_bit(&Model::jordan(alg.clone()), rng, 30, 1e-10)?;
        checks.push(
            Check::verdict(
                &format!(
                    "bits.{}{}",
                    alg.short_name(),
                    alg.matrix_order().unwrap_or(alg.dim() - 1)
                ),
                "the state space is a ball of the expected dimension",
                BITS,
                30,
                c.sphere_radius.max(c.ball_boundary),
                tol,
                c.d == d && c.is_ball(tol),
            )
            .with_note(format!("d = {}: {}", c.d, c.label)),
        );
    }
    Ok(checks)
}

/// The square bit: sharpness and spectrality must both fail for it.
pub fn gbit_demo(rng: &mut ChaCha8Rng, tol: f64, budget: Budget) -> Result<Vec<Check>> {
    let model = Model::square_bit();
    let mut checks = sharpness_suite(&model, rng, tol, budget);
    checks.extend(spectrality_suite(&model, rng, tol, budget)?);
    Ok(checks)
}

/// Algebra used by `theorem` for a kind name and rank (for `spin`, the
/// rank argument is the dimension `d`).
pub fn theorem_model(kind: &str, rank: usize) -> Result<Model> {
    Ok(Model::jordan(Algebra::from_name(kind, rank)?))
}

/// Everything, over a fixed set of algebras.
pub fn full_suite(rng: &mut ChaCha8Rng, tol: f64) -> Result<Vec<Check>> {
    let budget = Budget::default();
    let mut checks = Vec::new();
    for (kind, size) in [("real", 3), ("complex", 3), ("quaternion", 2), ("spin", 4)] {
        let model = theorem_model(kind, size)?;
        let prefix = format!("{kind}{size}");
        let mut local = model_suite(&model, rng, tol, budget);
        local.extend(sharpness_suite(&model, rng, tol, budget));
        local.extend(spectrality_suite(&model, rng, tol, budget)?);
        local.extend(lemma1_suite(&model, rng, tol, budget)?);
        local.extend(lemma2_suite(&model, rng, budget)?);
        local.extend(thm1_suite(&model, rng, budget)?);
        local.extend(thm2_suite(&model, rng, tol, budget)?);
        checks.extend(local.into_iter().map(|mut c| {
            c.name = format!("{prefix}.{}", c.name);
            c
        }));
    }
    for n in [2, 3] {
        checks.extend(thm3_suite(n, rng, tol, budget)?.into_iter().map(|mut c| {
            c.name = format!("complex{n}.{}", c.name);
            c
        }));
    }
    checks.extend(bits_suite(rng, tol)?);

    let demo = gbit_demo(rng, tol, budget)?;
    let failing: Vec<&str> = demo
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    let sharp_fails = failing.contains(&"sharpness");
    let spectral_fails = failing.contains(&"spectrality.centroid");
    checks.push(
        Check::verdict(
            "gbit.counterexample",
            "the square bit is neither sharp nor spectral",
            COUNTEREXAMPLE,
            demo.len(),
            0.0,
            0.0,
            sharp_fails && spectral_fails,
        )
        .with_note(format!("failing checks: {}", failing.join(", "))),
    );
    Ok(checks)
}
