//! Strong-norm properties and the contractivity examples.

use crate::error::Result;
use crate::graded::{iota, is_epsilon_positive, min_sesquilinear, sample_graded, GradedOperator, GradedSpace, RandomKind};
use crate::linalg;
use crate::norms::{
    big_r_norm, check_sigma_axioms, hermitian_contractive_check, lower_triangular_basis, numerical_radius, r_norm,
    rsc_check, sigma_strong_norm, strong_norm, LinearMapSpec, RscConfig,
};
use crate::report::{PropertyCheck, Report};
use crate::rng::{self, SampleRng};

use super::{golden, SuiteConfig};

/// Inner tolerance of the radius solver.
const RADIUS_TOL: f64 = 1e-10;

fn small_space(r: &mut SampleRng) -> GradedSpace {
    super::graded_core::random_space(r, 3)
}

/// A map and the subspace on which its witness condition is checked.
pub struct LemmaExample {
    pub name: String,
    pub map: LinearMapSpec<f64>,
    pub restricted: LinearMapSpec<f64>,
}

/// The two projections of the contractivity examples on ungraded `M_m`,
/// restricted to lower-triangular matrices for the witness search.
pub fn lemma_examples() -> Result<Vec<LemmaExample>> {
    let mut out = Vec::new();
    for m in 2..=4 {
        let sp = GradedSpace::diag(m, 0)?;
        for (kind, map) in [
            ("corner", LinearMapSpec::corner_projection(sp)?),
            ("diagonal-pair", LinearMapSpec::diagonal_pair_projection(sp)?),
        ] {
            let restricted = map.restrict(lower_triangular_basis(m))?;
            out.push(LemmaExample { name: format!("{kind} projection m={m}"), map, restricted });
        }
    }
    Ok(out)
}

/// Witness search over 200 η and hermitian contractivity at levels 1 and 2
/// with `samples` draws each, tolerance 1e-7.
pub fn lemma_checks(seed: u64, samples: usize) -> Result<Vec<PropertyCheck>> {
    let mut out = Vec::new();
    for ex in lemma_examples()? {
        let cfg = RscConfig { num_eta: 200, xi_budget: 400, seed, tol: 1e-7, signed: false };
        out.push(rsc_check(&ex.restricted, &cfg)?.to_check(format!("{} witness condition on lower triangulars", ex.name)));
        for level in [1, 2] {
            let h = hermitian_contractive_check(&ex.map, level, samples, seed ^ level as u64, 1e-7)?;
            out.push(h.to_check(format!("{} hermitian contractive at level {level}", ex.name), 1e-7));
        }
    }
    Ok(out)
}

pub fn run(cfg: &SuiteConfig) -> Result<Report> {
    let mut rep = Report::default();
    let tol = cfg.tol;

    let mut inv = PropertyCheck::new("numerical radius: even-unitary invariance, w <= |M| <= 2w, w(M*) = w(M) [1e-8]");
    for i in 0..cfg.share(4) {
        let mut r = rng::derive_rng(cfg.stream(21), i as u64);
        let sp = small_space(&mut r);
        let m = rng::gaussian_matrix::<f64>(&mut r, sp.size(), sp.size());
        let u = sample_graded::<f64>(RandomKind::EvenUnitary, sp, &mut r);
        let w = numerical_radius(&m, RADIUS_TOL)?.value;
        let wu = numerical_radius(&(u.data() * &m * u.data().adjoint()), RADIUS_TOL)?.value;
        let wa = numerical_radius(&m.adjoint(), RADIUS_TOL)?.value;
        let nm = linalg::op_norm(&m);
        let margin = [1e-8 - (w - wu).abs(), 1e-8 - (w - wa).abs(), nm - w + 1e-8, 2.0 * w - nm + 1e-8]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        inv.record(i, margin);
    }
    rep.push(inv);

    let mut herm = PropertyCheck::new("strong norm of a hermitian element is its operator norm [1e-6]");
    let mut sig = PropertyCheck::new("sigma-strong norm equals the numerical radius of iota(x) [1e-6]");
    let mut iso = PropertyCheck::new("superinvolution is isometric for the strong and sigma-strong norms [1e-6]");
    let mut form = PropertyCheck::new("eps-positivity by 200 sampled forms agrees with the PSD test");
    for i in 0..cfg.share(2) {
        let mut r = rng::derive_rng(cfg.stream(22), i as u64);
        let sp = small_space(&mut r);
        let h = sample_graded::<f64>(RandomKind::Hermitian, sp, &mut r);
        herm.record(i, 1e-6 - (strong_norm(&h, RADIUS_TOL)?.value - h.op_norm()).abs());
        let x = sample_graded::<f64>(RandomKind::Generic, sp, &mut r);
        let s = sigma_strong_norm(&x, RADIUS_TOL)?.value;
        sig.record(i, 1e-6 - (s - numerical_radius(iota(&x).data(), RADIUS_TOL)?.value).abs());
        let xs = x.superinvolve();
        let d1 = (strong_norm(&x, RADIUS_TOL)?.value - strong_norm(&xs, RADIUS_TOL)?.value).abs();
        let d2 = (s - sigma_strong_norm(&xs, RADIUS_TOL)?.value).abs();
        iso.record(i, 1e-6 - d1.max(d2));
        let y = if i % 2 == 0 { sample_graded::<f64>(RandomKind::EpsPositive, sp, &mut r) } else { h };
        let by_form = y.is_hermitian(tol) && min_sesquilinear(&y, 200, &mut r) >= -tol * (1.0 + y.op_norm());
        form.record_bool(i, by_form == is_epsilon_positive(&y, tol));
    }
    rep.push(herm);
    rep.push(sig);
    rep.push(iso);
    rep.push(form);

    // Axioms on levels 1 and 2 over spaces up to (3, 3).
    let count = (cfg.samples * 3 / 10).max(2);
    let mut samples: Vec<GradedOperator<f64>> = Vec::with_capacity(count);
    let mut base = GradedSpace::diag(1, 1)?;
    for i in 0..count {
        let mut r = rng::derive_rng(cfg.stream(23), i as u64);
        if i % 2 == 0 {
            base = small_space(&mut r);
        }
        let level = 1 + (i / 2) % 2;
        samples.push(sample_graded(RandomKind::Generic, base.amplified(level), &mut r));
    }
    let mut r = rng::derive_rng(cfg.stream(24), 0);
    let mut scalars = vec![
        linalg::identity::<f64>(1),
        linalg::real_matrix(&[&[0.6, 0.8]]),
        linalg::real_matrix(&[&[1.0], &[0.0]]),
    ];
    for (rows, cols) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
        scalars.push(rng::gaussian_matrix(&mut r, rows, cols));
    }
    let axioms = check_sigma_axioms(&samples, &scalars, 1e-6)?;
    for c in axioms.checks {
        let name = format!("{} [1e-6]", c.name);
        rep.push(PropertyCheck { name, ..c });
    }

    let mut circle = PropertyCheck::new("r and R over a 128-point circle agree with the strong norm [1e-6]");
    for i in 0..cfg.share(20) {
        let mut r = rng::derive_rng(cfg.stream(25), i as u64);
        let sp = small_space(&mut r);
        let x = sample_graded::<f64>(RandomKind::Generic, sp, &mut r);
        let s = strong_norm(&x, RADIUS_TOL)?.value;
        let lo = r_norm(&x, 128, RADIUS_TOL)?.value;
        let hi = big_r_norm(&x, 128)?.value;
        circle.record(i, 1e-6 - (lo - s).abs().max((hi - s).abs()));
    }
    rep.push(circle);

    rep.push(golden::norms(tol));

    for c in lemma_checks(cfg.stream(26), cfg.samples * 10)? {
        rep.push(c);
    }
    Ok(rep)
}
