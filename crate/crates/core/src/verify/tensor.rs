//! Tensor-norm properties.

use crate::error::Result;
use crate::graded::{is_epsilon_positive, sample_graded, GradedSpace, RandomKind};
use crate::linalg;
use crate::report::{PropertyCheck, Report};
use crate::rng::{self, SampleRng};
use crate::scalar::CMat;
use crate::tensor::{
    dual_symmetrized_haagerup, finite_dim_cstar_tensor, haagerup_norm, projective_norm, star_tensor, PositivityCheck,
    StarMode, TensorElement, DUAL_DIM_CAP,
};

use super::{golden, SuiteConfig};

fn dim(r: &mut SampleRng, max: usize) -> usize {
    1 + (rng::uniform::<f64>(r, 0.0, max as f64) as usize).min(max - 1)
}

fn grading(r: &mut SampleRng, n: usize) -> GradedSpace {
    let p = (rng::uniform::<f64>(r, 0.0, (n + 1) as f64) as usize).min(n);
    GradedSpace::diag(p, n - p).expect("n ≥ 1")
}

/// Random graded element with factor sizes up to `max` and up to three terms.
pub fn random_element(r: &mut SampleRng, max: usize) -> Result<TensorElement<f64>> {
    let (a, b) = (dim(r, max), dim(r, max));
    let k = dim(r, 3);
    let terms = (0..k).map(|_| (rng::gaussian_matrix(r, a, a), rng::gaussian_matrix(r, b, b))).collect();
    let (ga, gb) = (grading(r, a), grading(r, b));
    TensorElement::new(a, b, terms)?.with_gradings(Some(ga), Some(gb))
}

/// The same element written with the decomposition mixed by a random invertible matrix.
fn remixed(t: &TensorElement<f64>, r: &mut SampleRng) -> Result<TensorElement<f64>> {
    let k = t.terms().len();
    let g: CMat<f64> = linalg::identity::<f64>(k) + rng::gaussian_matrix::<f64>(r, k, k) * crate::scalar::creal(0.5);
    let gi = g.clone().try_inverse().unwrap_or_else(|| linalg::identity(k));
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut a = linalg::zeros::<f64>(t.a_dim(), t.a_dim());
        let mut b = linalg::zeros::<f64>(t.b_dim(), t.b_dim());
        for j in 0..k {
            a += &t.terms()[j].a * g[(i, j)];
            b += &t.terms()[j].b * gi[(j, i)];
        }
        out.push((a, b));
    }
    TensorElement::new(t.a_dim(), t.b_dim(), out)?.with_gradings(t.a_grading(), t.b_grading())
}

pub fn run(cfg: &SuiteConfig) -> Result<Report> {
    let mut rep = Report::default();
    let budgets = &cfg.budgets;

    let mut order = PropertyCheck::new("injective <= Haagerup <= projective on random elements [1e-6]");
    for i in 0..cfg.share(10) {
        let mut r = rng::derive_rng(cfg.stream(31), i as u64);
        let t = random_element(&mut r, 3)?;
        let h = haagerup_norm(&t, budgets)?;
        let p = projective_norm(&t, budgets)?;
        let margin = [
            h.upper - t.injective_norm() + 1e-6,
            h.upper - h.lower + 1e-12,
            p.upper - h.upper + 1e-6,
            p.upper - p.lower + 1e-12,
        ]
        .into_iter()
        .fold(f64::INFINITY, f64::min);
        order.record(i, margin);
    }
    rep.push(order);

    let mut inj = PropertyCheck::new("product star preserves the injective norm [1e-12 relative]");
    let mut flip = PropertyCheck::new("Haagerup brackets of t and its flip involute agree under identical budgets [1e-4]");
    let mut invol = PropertyCheck::new("every star mode is involutive");
    for i in 0..cfg.share(20) {
        let mut r = rng::derive_rng(cfg.stream(32), i as u64);
        let t = random_element(&mut r, 3)?;
        let s = star_tensor(&t, StarMode::Product)?;
        let n = t.injective_norm();
        inj.record(i, 1e-12 * (1.0 + n) - (n - s.injective_norm()).abs());
        let (l1, u1) = haagerup_norm(&t, budgets)?.ends();
        let (l2, u2) = haagerup_norm(&star_tensor(&t, StarMode::HaagerupFlip)?, budgets)?.ends();
        flip.record(i, 1e-4 - (l1 - l2).abs().max((u1 - u2).abs()));
        let mut ok = true;
        for mode in StarMode::ALL {
            let src = if mode == StarMode::AdjointSpace && t.a_dim() != t.b_dim() {
                TensorElement::new(t.a_dim(), t.a_dim(), t.terms().iter().map(|x| (x.a.clone(), x.a.clone())).collect())?
            } else {
                t.clone()
            };
            let twice = star_tensor(&star_tensor(&src, mode)?, mode)?;
            ok &= twice.terms() == src.terms();
        }
        invol.record_bool(i, ok);
    }
    rep.push(inj);
    rep.push(flip);
    rep.push(invol);

    let mut ginv = PropertyCheck::new("Haagerup upper is invariant under re-mixing the decomposition [1e-5]");
    for i in 0..cfg.share(20) {
        let mut r = rng::derive_rng(cfg.stream(33), i as u64);
        let t = random_element(&mut r, 3)?;
        let u = remixed(&t, &mut r)?;
        let (a, b) = (haagerup_norm(&t, budgets)?.upper, haagerup_norm(&u, budgets)?.upper);
        ginv.record(i, 1e-5 - (a - b).abs());
    }
    rep.push(ginv);

    let mut dual = PropertyCheck::new("dual symmetrized bracket lies in [injective, Haagerup upper] [1e-9]");
    for i in 0..cfg.share(20) {
        let mut r = rng::derive_rng(cfg.stream(34), i as u64);
        let mut t = random_element(&mut r, 3)?;
        while t.a_dim() * t.b_dim() > DUAL_DIM_CAP {
            t = random_element(&mut r, 3)?;
        }
        let d = dual_symmetrized_haagerup(&t, budgets)?;
        let h = haagerup_norm(&t, budgets)?;
        let margin = [d.upper - d.lower + 1e-9, d.lower - t.injective_norm() + 1e-9, h.upper - d.upper + 1e-9]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        dual.record(i, margin);
    }
    rep.push(dual);

    let mut cstar = PropertyCheck::new("Kronecker products of even eps-positive factors are eps-positive");
    for i in 0..cfg.share(10) {
        let mut r = rng::derive_rng(cfg.stream(35), i as u64);
        let (da, db) = (dim(&mut r, 3), dim(&mut r, 3));
        let (sa, sb) = (grading(&mut r, da), grading(&mut r, db));
        let x = sample_graded::<f64>(RandomKind::EpsPositive, sa, &mut r);
        let y = sample_graded::<f64>(RandomKind::EpsPositive, sb, &mut r);
        // Even parts of ε-positive elements stay ε-positive.
        let (x, y) = (x.even_part(), y.even_part());
        let ok = is_epsilon_positive(&x, cfg.tol) && is_epsilon_positive(&y, cfg.tol);
        let t = TensorElement::new(sa.size(), sb.size(), vec![(x.into_data(), y.into_data())])?.with_gradings(Some(sa), Some(sb))?;
        cstar.record_bool(i, ok && finite_dim_cstar_tensor(&t, PositivityCheck::EpsPositive, cfg.tol)?);
    }
    rep.push(cstar);

    rep.push(golden::tensor(budgets, cfg.tol));
    Ok(rep)
}

