//! Sampled contractivity checks for linear maps: the two-sided witness
//! condition comparing `⟨xξ, εξ⟩` with `⟨φ(x)η, εη⟩`, and hermitian contractivity.

use crate::error::{Error, Result};
use crate::graded::GradedOperator;
use crate::linalg;
use crate::report::PropertyCheck;
use crate::rng::{self, SampleRng};
use crate::scalar::{cabs, creal, lit, to_f64, CMat, CVec, Cx, Real};

use super::maps::LinearMapSpec;

const STEPS_PER_START: usize = 200;
const FIRST_STEP: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct RscConfig {
    pub num_eta: usize,
    pub xi_budget: usize,
    pub seed: u64,
    pub tol: f64,
    /// Also require `Re α` and `Re β` to share a sign.
    pub signed: bool,
}

impl Default for RscConfig {
    fn default() -> Self {
        Self { num_eta: 200, xi_budget: 400, seed: 0, tol: 1e-7, signed: false }
    }
}

/// Outcome of the witness search. Only sampled pairs are covered, so even a
/// full witnessed fraction is not a proof.
#[derive(Debug, Clone, PartialEq)]
pub struct RscReport {
    pub pairs: usize,
    pub witnessed: usize,
    /// Smallest best-found margin over all pairs; negative means no witness.
    pub worst_margin: f64,
    pub worst_index: Option<usize>,
    pub worst_eta: Option<Vec<Cx<f64>>>,
    pub worst_x: Option<CMat<f64>>,
}

impl RscReport {
    pub fn fraction(&self) -> f64 {
        if self.pairs == 0 {
            1.0
        } else {
            self.witnessed as f64 / self.pairs as f64
        }
    }

    pub fn passed(&self) -> bool {
        self.witnessed == self.pairs
    }

    pub fn to_check(&self, name: impl Into<String>) -> PropertyCheck {
        let mut c = PropertyCheck::new(name);
        c.samples = self.pairs;
        c.passed = self.passed();
        c.worst_margin = self.worst_margin;
        c.worst_index = self.worst_index;
        c.with_note(format!("witnessed {}/{}", self.witnessed, self.pairs))
    }
}

/// `⟨mξ, εξ⟩ = ξ† ε m ξ` with `a = εm` precomputed.
fn form<T: Real>(a: &CMat<T>, v: &CVec<T>) -> Cx<T> {
    linalg::quad_form(a, v)
}

struct Target<T: Real> {
    abs_beta: T,
    re_beta: T,
    signed: bool,
}

impl<T: Real> Target<T> {
    fn margin(&self, alpha: Cx<T>) -> T {
        let first = cabs(alpha) - self.abs_beta;
        let second = if self.signed && self.re_beta != T::zero() {
            alpha.re * self.re_beta.signum() - self.re_beta.abs()
        } else {
            alpha.re.abs() - self.re_beta.abs()
        };
        first.min(second)
    }

    /// Ascent direction for whichever condition is currently binding.
    fn direction(&self, a: &CMat<T>, v: &CVec<T>) -> CVec<T> {
        let alpha = form(a, v);
        let av = a * v;
        let ahv = a.adjoint() * v;
        let first = cabs(alpha) - self.abs_beta;
        let re_part = (&av + &ahv) * creal(lit::<T>(0.5));
        let second_dir = if self.signed && self.re_beta != T::zero() {
            re_part * creal(self.re_beta.signum())
        } else {
            re_part * creal(alpha.re.signum())
        };
        let first_dir = &av * alpha.conj() + &ahv * alpha;
        let second = self.margin(alpha);
        if first <= second {
            linalg::normalize(&first_dir)
        } else {
            linalg::normalize(&second_dir)
        }
    }
}

/// Best margin reachable from `start` with backtracking ascent; stops early
/// once the margin clears `-tol` or the evaluation budget runs out.
fn ascend<T: Real>(a: &CMat<T>, target: &Target<T>, start: CVec<T>, tol: T, budget: &mut usize) -> T {
    let mut v = linalg::normalize(&start);
    let mut best = target.margin(form(a, &v));
    *budget = budget.saturating_sub(1);
    let mut step = lit::<T>(FIRST_STEP);
    for _ in 0..STEPS_PER_START {
        if best >= -tol || *budget == 0 {
            break;
        }
        let d = target.direction(a, &v);
        let mut moved = false;
        while *budget > 0 && step > lit(1e-10) {
            let cand = linalg::normalize(&(&v + &d * creal(step)));
            let m = target.margin(form(a, &cand));
            *budget -= 1;
            if m > best {
                v = cand;
                best = m;
                step = (step * lit(1.5)).min(T::one());
                moved = true;
                break;
            }
            step *= lit(0.5);
        }
        if !moved {
            break;
        }
    }
    best
}

/// Best margin found for one `(η, x)` pair.
fn witness_margin<T: Real>(
    map: &LinearMapSpec<T>,
    x: &CMat<T>,
    eta: &CVec<T>,
    budget: usize,
    tol: T,
    signed: bool,
    rng: &mut SampleRng,
) -> Result<T> {
    let eps_dom = map.domain().epsilon::<T>();
    let eps_cod = map.codomain().epsilon::<T>();
    let beta = form(&(&eps_cod * map.apply(x)?), eta);
    let target = Target { abs_beta: cabs(beta), re_beta: beta.re, signed };
    let a = &eps_dom * x;
    let n = a.nrows();
    let mut left = budget;

    let mut starts: Vec<CVec<T>> = Vec::new();
    if eta.len() == n {
        starts.push(eta.clone());
    }
    // Extreme eigenvectors of rotated hermitian parts maximize |Re(e^{iθ}α)|.
    for k in 0..8 {
        let th = T::two_pi() * lit(k as f64 / 8.0);
        let (_, vecs) = linalg::eigh(&(&a * crate::scalar::cis(th)));
        starts.push(vecs.column(n - 1).into_owned());
        starts.push(vecs.column(0).into_owned());
    }
    let mut best = lit::<T>(-1e30);
    for s in starts {
        if left == 0 {
            break;
        }
        best = best.max(ascend(&a, &target, s, tol, &mut left));
        if best >= -tol {
            return Ok(best);
        }
    }
    while left > 0 && best < -tol {
        let s = rng::unit_vector::<T>(rng, n);
        best = best.max(ascend(&a, &target, s, tol, &mut left));
    }
    Ok(best)
}

/// Samples `num_eta` pairs `(η, x)` with `x` in the map's domain and searches
/// for a unit `ξ` with `|α| ≥ |β| − tol` and `|Re α| ≥ |Re β| − tol`.
pub fn rsc_check<T: Real>(map: &LinearMapSpec<T>, cfg: &RscConfig) -> Result<RscReport> {
    if cfg.xi_budget < 100 || cfg.num_eta == 0 {
        return Err(Error::InvalidConfig("rsc check needs num_eta ≥ 1 and xi_budget ≥ 100".into()));
    }
    let tol = lit::<T>(cfg.tol);
    let mut report = RscReport { pairs: 0, witnessed: 0, worst_margin: f64::INFINITY, worst_index: None, worst_eta: None, worst_x: None };
    for i in 0..cfg.num_eta {
        let mut r = rng::derive_rng(cfg.seed, i as u64);
        let eta = rng::unit_vector::<T>(&mut r, map.codomain().size());
        let mut x = map.sample_domain(&mut r);
        let nx = linalg::op_norm(&x);
        if nx > T::zero() {
            x *= creal(T::one() / nx);
        }
        let m = to_f64(witness_margin(map, &x, &eta, cfg.xi_budget, tol, cfg.signed, &mut r)?);
        report.pairs += 1;
        if m >= -cfg.tol {
            report.witnessed += 1;
        }
        if m < report.worst_margin || report.worst_index.is_none() {
            report.worst_margin = m;
            report.worst_index = Some(i);
            report.worst_eta = Some(eta.iter().map(|z| Cx::new(to_f64(z.re), to_f64(z.im))).collect());
            report.worst_x = Some(x.map(|z| Cx::new(to_f64(z.re), to_f64(z.im))));
        }
    }
    Ok(report)
}

/// Result of sampling hermitian contractions through `φ_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianReport {
    pub level: usize,
    pub samples: usize,
    pub violations: usize,
    pub worst_norm: f64,
    pub worst_index: Option<usize>,
}

impl HermitianReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn to_check(&self, name: impl Into<String>, tol: f64) -> PropertyCheck {
        let mut c = PropertyCheck::new(name);
        c.samples = self.samples;
        c.passed = self.passed();
        c.worst_margin = 1.0 + tol - self.worst_norm;
        c.worst_index = self.worst_index;
        c.with_note(format!("level {}: {} violations, worst norm {:.9}", self.level, self.violations, self.worst_norm))
    }
}

/// Hermitian elements of `M_level(domain)` scaled to norm one, checked for
/// `‖φ_level(x)‖ ≤ 1 + tol`. The domain must be closed under the superinvolution.
pub fn hermitian_contractive_check<T: Real>(
    map: &LinearMapSpec<T>,
    level: usize,
    num_samples: usize,
    seed: u64,
    tol: f64,
) -> Result<HermitianReport> {
    if level == 0 || level > 4 {
        return Err(Error::InvalidConfig(format!("level must be in 1..=4, got {level}")));
    }
    if !map.is_star_closed() {
        return Err(Error::NotStarClosed);
    }
    let space = map.domain().amplified(level);
    let b = map.domain().base_size();
    let mut rep = HermitianReport { level, samples: 0, violations: 0, worst_norm: 0.0, worst_index: None };
    for i in 0..num_samples {
        let mut r = rng::derive_rng(seed, i as u64);
        let mut data = linalg::zeros::<T>(space.size(), space.size());
        for bi in 0..level {
            for bj in 0..level {
                let blk = map.sample_domain(&mut r);
                data.view_mut((bi * b, bj * b), (b, b)).copy_from(&blk);
            }
        }
        let x = GradedOperator::new(space, data)?.hermitian_part();
        let nx = x.op_norm();
        if nx == T::zero() {
            continue;
        }
        let x = x.scale(creal(T::one() / nx));
        let y = to_f64(map.apply_level(&x)?.op_norm());
        rep.samples += 1;
        if y > 1.0 + tol {
            rep.violations += 1;
        }
        if y > rep.worst_norm || rep.worst_index.is_none() {
            rep.worst_norm = y;
            rep.worst_index = Some(i);
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedSpace;

    #[test]
    fn identity_is_witnessed_and_contractive() {
        let sp = GradedSpace::diag(2, 1).unwrap();
        let id = LinearMapSpec::<f64>::identity(sp).unwrap();
        let cfg = RscConfig { num_eta: 20, xi_budget: 100, seed: 3, ..Default::default() };
        let rep = rsc_check(&id, &cfg).unwrap();
        assert_eq!(rep.fraction(), 1.0);
        let h = hermitian_contractive_check(&id, 2, 50, 3, 1e-7).unwrap();
        assert!(h.passed());
    }

    #[test]
    fn doubling_violates_contractivity() {
        let sp = GradedSpace::diag(1, 1).unwrap();
        let two = LinearMapSpec::<f64>::scaling(sp, creal(2.0)).unwrap();
        let h = hermitian_contractive_check(&two, 1, 10, 0, 1e-7).unwrap();
        assert_eq!(h.violations, 10);
        assert!((h.worst_norm - 2.0).abs() < 1e-12);
    }
}
