//! Graded-core properties.

use crate::error::Result;
use crate::graded::{
    fiber_iso, graded_abs, graded_spectrum, iota, is_epsilon_positive, is_epsilon_positive_by_form,
    is_epsilon_positive_by_spectrum, is_pseudo_unitary, is_superpositive, is_superpositive_alt, is_superunitary,
    kappa_conjugate, kappa_unconjugate, lemma2_search, lemma2_violation, omega_hermitian, random_graded,
    sample_graded, standard_form_embed, swap_double, twisted_product, GradedOperator, GradedSpace, OmegaUnitary,
    RandomKind,
};
use crate::linalg;
use crate::norms::LinearMapSpec;
use crate::report::{PropertyCheck, Report};
use crate::rng::{self, SampleRng};
use crate::scalar::{cis, creal};

use super::{golden, SuiteConfig};

/// Random space with `p, q ≤ max`, occasionally swap-graded.
pub(crate) fn random_space(r: &mut SampleRng, max: usize) -> GradedSpace {
    if rng::uniform::<f64>(r, 0.0, 1.0) < 0.2 {
        let m = 1 + (rng::uniform::<f64>(r, 0.0, max as f64) as usize).min(max - 1);
        return GradedSpace::swap(m).expect("m ≥ 1");
    }
    loop {
        let p = (rng::uniform::<f64>(r, 0.0, (max + 1) as f64) as usize).min(max);
        let q = (rng::uniform::<f64>(r, 0.0, (max + 1) as f64) as usize).min(max);
        if p + q > 0 {
            return GradedSpace::diag(p, q).expect("p + q ≥ 1");
        }
    }
}

fn generic(space: GradedSpace, r: &mut SampleRng) -> GradedOperator<f64> {
    sample_graded(RandomKind::Generic, space, r)
}

fn dist(a: &GradedOperator<f64>, b: &GradedOperator<f64>) -> f64 {
    linalg::max_abs(&(a.data() - b.data()))
}

pub fn run(cfg: &SuiteConfig) -> Result<Report> {
    let mut rep = Report::default();
    let n = cfg.samples;
    let tol = cfg.tol;
    let minus_one = creal(-1.0);

    let mut mult = PropertyCheck::new("iota carries the (-1)-twisted product to the product [err <= 1e-12]");
    let mut star = PropertyCheck::new("iota carries the superinvolution to the adjoint [err <= 1e-12]");
    let mut bound = PropertyCheck::new("norm estimate |x|/2 <= |iota(x)| <= 2|x| [tol 1e-10]");
    for i in 0..n {
        let mut r = rng::derive_rng(cfg.stream(1), i as u64);
        let sp = random_space(&mut r, 4);
        let (x, y) = (generic(sp, &mut r), generic(sp, &mut r));
        let lhs = iota(&twisted_product(&x, &y, minus_one)?);
        let rhs = iota(&x).mul(&iota(&y))?;
        mult.record(i, 1e-12 - dist(&lhs, &rhs));
        star.record(i, 1e-12 - dist(&iota(&x.superinvolve()), &iota(&x).adjoint()));
        let (nx, ni) = (x.op_norm(), iota(&x).op_norm());
        bound.record(i, (ni - 0.5 * nx).min(2.0 * nx - ni) + 1e-10);
    }
    rep.push(mult);
    rep.push(star);
    rep.push(bound);

    let mut fiber = PropertyCheck::new("fiber_iso is multiplicative at 32 points of the circle [err <= 1e-10]");
    for i in 0..cfg.share(10) {
        let mut r = rng::derive_rng(cfg.stream(2), i as u64);
        let sp = random_space(&mut r, 3);
        let (x, y) = (generic(sp, &mut r), generic(sp, &mut r));
        let mut worst = 0.0f64;
        for k in 0..32 {
            let w = cis(std::f64::consts::TAU * k as f64 / 32.0);
            let lhs = fiber_iso(&twisted_product(&x, &y, w)?, w);
            let rhs = fiber_iso(&x, w).mul(&fiber_iso(&y, w))?;
            worst = worst.max(dist(&lhs, &rhs));
        }
        fiber.record(i, 1e-10 - worst);
    }
    rep.push(fiber);

    let mut inv = PropertyCheck::new("superinvolution is antilinear, antimultiplicative, involutive, isometric to level 4 [err <= 1e-10]");
    for i in 0..cfg.share(5) {
        let mut r = rng::derive_rng(cfg.stream(3), i as u64);
        let base = random_space(&mut r, 2);
        let sp = base.amplified(1 + i % 4);
        let (x, y) = (generic(sp, &mut r), generic(sp, &mut r));
        let lam = rng::complex_normal::<f64>(&mut r);
        let anti = dist(&x.scale(lam).superinvolve(), &x.superinvolve().scale(lam.conj()));
        let mult = dist(&x.mul(&y)?.superinvolve(), &y.superinvolve().mul(&x.superinvolve())?);
        let invol = dist(&x.superinvolve().superinvolve(), &x);
        let one = GradedOperator::identity(sp);
        let eps = GradedOperator::grading(sp);
        let fixed = dist(&one.superinvolve(), &one).max(dist(&eps.superinvolve(), &eps));
        let iso = (x.superinvolve().op_norm() - x.op_norm()).abs() / (1.0 + x.op_norm());
        inv.record(i, 1e-10 - anti.max(mult).max(invol).max(fixed).max(iso));
    }
    rep.push(inv);

    let mut eps_agree = PropertyCheck::new("eps-positivity: PSD, graded spectrum and 200-vector form tests agree");
    let mut sup_agree = PropertyCheck::new("superpositivity: iota test agrees with the x0 + eps x1 test");
    for i in 0..cfg.share(2) {
        let mut r = rng::derive_rng(cfg.stream(4), i as u64);
        let sp = random_space(&mut r, 3);
        let kind = [RandomKind::Hermitian, RandomKind::EpsPositive, RandomKind::Superpositive][i % 3];
        let x = sample_graded::<f64>(kind, sp, &mut r);
        let psd = is_epsilon_positive(&x, tol);
        let spec = is_epsilon_positive_by_spectrum(&x, tol)?;
        let form = is_epsilon_positive_by_form(&x, tol, 200, &mut r);
        let expected = kind != RandomKind::EpsPositive || psd;
        eps_agree.record_bool(i, psd == spec && spec == form && expected);
        let (a, b) = (is_superpositive(&x, tol), is_superpositive_alt(&x, tol));
        sup_agree.record_bool(i, a == b && (kind != RandomKind::Superpositive || a));
    }
    rep.push(eps_agree);
    rep.push(sup_agree);

    let mut abs = PropertyCheck::new("graded_abs is superpositive and squares to x* (-1)-times x [err <= 1e-9]");
    for i in 0..cfg.share(2) {
        let mut r = rng::derive_rng(cfg.stream(5), i as u64);
        let sp = random_space(&mut r, 3);
        let x = generic(sp, &mut r);
        let a = graded_abs(&x);
        let err = dist(&twisted_product(&a, &a, minus_one)?, &twisted_product(&x.superinvolve(), &x, minus_one)?);
        let margin = if is_superpositive(&a, tol) { 1e-9 - err } else { -1.0 };
        abs.record(i, margin);
    }
    rep.push(abs);

    let mut maps = PropertyCheck::new("identity, grading automorphism and even-unitary conjugation preserve superpositivity");
    for i in 0..cfg.share(5) {
        let mut r = rng::derive_rng(cfg.stream(6), i as u64);
        let sp = random_space(&mut r, 3);
        let x = sample_graded::<f64>(RandomKind::Superpositive, sp, &mut r);
        let u = sample_graded::<f64>(RandomKind::EvenUnitary, sp, &mut r);
        let family = [
            LinearMapSpec::identity(sp)?,
            LinearMapSpec::grading_automorphism(sp)?,
            LinearMapSpec::conjugation(sp, u.data())?,
        ];
        let mut ok = true;
        for phi in &family {
            let y = GradedOperator::new(sp, phi.apply(x.data())?)?;
            ok &= is_superpositive(&y, tol);
        }
        maps.record_bool(i, ok);
    }
    rep.push(maps);

    let mut su = PropertyCheck::new("sampled pseudo-unitaries are superunitary and have norm >= 1 - 1e-12");
    let mut even = PropertyCheck::new("superunitary norm is 1 within 1e-9 iff the element is even");
    for i in 0..cfg.share(5) {
        let mut r = rng::derive_rng(cfg.stream(7), i as u64);
        let sp = random_space(&mut r, 3);
        let kind = if i % 4 == 0 { RandomKind::EvenUnitary } else { RandomKind::Superunitary };
        let u = sample_graded::<f64>(kind, sp, &mut r);
        let nu = u.op_norm();
        let ok = is_superunitary(&u, tol) && is_pseudo_unitary(&u, tol);
        su.record(i, if ok { nu - (1.0 - 1e-12) } else { -1.0 });
        let is_even = linalg::max_abs(u.odd_part().data()) <= 1e-9;
        even.record_bool(i, ((nu - 1.0).abs() <= 1e-9) == is_even);
    }
    rep.push(su);
    rep.push(even);

    let grid: Vec<f64> = (0..41).map(|k| -10.0 + 0.5 * k as f64).collect();
    let mut l2_hold = PropertyCheck::new("omega-hermitian contractions satisfy |x - it w| <= sqrt(1+t^2) on 41 points [tol 1e-9]");
    let mut l2_fail = PropertyCheck::new("non-omega-hermitian or norm > 1 samples violate the bound somewhere");
    for i in 0..cfg.share(5) {
        let mut r = rng::derive_rng(cfg.stream(8), i as u64);
        let sp = random_space(&mut r, 3);
        let w = OmegaUnitary::new(sp, rng::random_phase(&mut r), rng::random_phase(&mut r))?;
        let radius = rng::uniform::<f64>(&mut r, 0.0, 1.0);
        let x = omega_hermitian(&w, &mut r, radius);
        l2_hold.record_bool(i, lemma2_violation(&x, &w, &grid, 1e-9)?.is_none());

        let bad = if i % 2 == 0 {
            let radius = rng::uniform::<f64>(&mut r, 1.05, 2.0);
            omega_hermitian(&w, &mut r, radius)
        } else {
            let g = generic(sp, &mut r);
            let s = rng::uniform::<f64>(&mut r, 0.5, 1.0) / g.op_norm();
            g.scale(creal(s))
        };
        let is_contraction = bad.is_omega_hermitian(&w, tol)? && bad.op_norm() <= 1.0 + tol;
        l2_fail.record_bool(i, !is_contraction && lemma2_search(&bad, &w, &grid, 1e-9)?.is_some());
    }
    rep.push(l2_hold);
    rep.push(l2_fail);

    let mut kap = PropertyCheck::new("kappa conjugation is an invertible isometry sending eps to 1 [err <= 1e-10]");
    for i in 0..cfg.share(5) {
        let mut r = rng::derive_rng(cfg.stream(9), i as u64);
        let sp = random_space(&mut r, 3);
        let x = generic(sp, &mut r);
        let k = kappa_conjugate(&x);
        let iso = (linalg::op_norm(&k) - x.op_norm()).abs() / (1.0 + x.op_norm());
        let back = dist(&kappa_unconjugate(&x, &k)?, &x);
        let eps = GradedOperator::grading(sp);
        let unit = linalg::max_abs(&(kappa_conjugate(&eps) - linalg::identity::<f64>(sp.size())));
        kap.record(i, 1e-10 - iso.max(back).max(unit));
    }
    rep.push(kap);

    let mut sf = PropertyCheck::new("standard-form embeddings are hermitian with spectrum symmetric under negation [tol 1e-9]");
    let mut sd = PropertyCheck::new("superinvolution exchanges the two slots of swap_double [err <= 1e-12]");
    for i in 0..cfg.share(5) {
        let mut r = rng::derive_rng(cfg.stream(10), i as u64);
        let m = 1 + i % 3;
        let (a, b) = (rng::random_hermitian::<f64>(&mut r, m), rng::random_hermitian::<f64>(&mut r, m));
        let x = standard_form_embed(&a, &b, tol)?;
        let mut s: Vec<f64> = graded_spectrum(&x)?.iter().map(|z| z.re).collect();
        let mut neg: Vec<f64> = s.iter().map(|v| -v).collect();
        s.sort_by(f64::total_cmp);
        neg.sort_by(f64::total_cmp);
        let sym = s.iter().zip(&neg).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max);
        sf.record(i, if x.is_hermitian(tol) { 1e-9 - sym } else { -1.0 });

        let (u, v) = (rng::gaussian_matrix::<f64>(&mut r, m, m), rng::gaussian_matrix::<f64>(&mut r, m, m));
        sd.record(i, 1e-12 - dist(&swap_double(&u, &v)?.superinvolve(), &swap_double(&v, &u)?));
    }
    rep.push(sf);
    rep.push(sd);

    let mut det = PropertyCheck::new("random_graded is deterministic and each kind satisfies its predicate");
    for (i, kind) in RandomKind::ALL.into_iter().enumerate() {
        let sp = GradedSpace::diag(2, 2)?;
        let seed = cfg.stream(11) ^ i as u64;
        let x = random_graded::<f64>(kind, sp, seed);
        let same = x == random_graded::<f64>(kind, sp, seed);
        let fits = match kind {
            RandomKind::Generic => true,
            RandomKind::Hermitian => x.is_hermitian(tol),
            RandomKind::EpsPositive => is_epsilon_positive(&x, tol),
            RandomKind::Superpositive => is_superpositive(&x, tol),
            RandomKind::Superunitary | RandomKind::EvenUnitary => is_superunitary(&x, tol),
        };
        det.record_bool(i, same && fits);
    }
    rep.push(det);

    rep.push(golden::graded_core(tol));
    Ok(rep)
}
