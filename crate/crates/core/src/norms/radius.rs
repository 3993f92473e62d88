//! Numerical radius `w(M) = max_θ λ_max((e^{iθ}M + e^{-iθ}M†)/2)`.
//!
//! A 64-point angle grid and golden-section refinement give a lower bound
//! with a witness vector. The bound is then certified by checking that the
//! level `r = value + gap` is never reached: `r` is an eigenvalue of the
//! angle-`θ` hermitian part exactly when `e^{iθ}` solves the quadratic
//! eigenproblem `z² M − 2rz + M† = 0`, so an empty unimodular spectrum means
//! `w(M) < r`.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{carg, cis, creal, lit, CMat, CVec, Real};

const GRID: usize = 64;
const GOLDEN_ITERS: usize = 60;
const CERT_ROUNDS: usize = 8;
const FALLBACK_GRID: usize = 1024;

/// `w(M)` with an achieving vector. The true radius lies in
/// `[value, value + certified_error]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusResult<T: Real> {
    pub value: T,
    pub maximizer_theta: T,
    pub maximizer_vector: CVec<T>,
    pub certified_error: T,
}

impl<T: Real> RadiusResult<T> {
    fn zero(n: usize) -> Self {
        let mut v = CVec::zeros(n);
        if n > 0 {
            v[0] = creal(T::one());
        }
        Self { value: T::zero(), maximizer_theta: T::zero(), maximizer_vector: v, certified_error: T::zero() }
    }

    pub fn upper(&self) -> T {
        self.value + self.certified_error
    }
}

/// `λ_max` of the hermitian part of `e^{iθ} m` and its eigenvector.
fn rotated_top<T: Real>(m: &CMat<T>, theta: T) -> (T, CVec<T>) {
    linalg::lambda_max(&(m * cis(theta)))
}

fn wrap<T: Real>(theta: T) -> T {
    let tau = T::two_pi();
    let mut t = theta % tau;
    if t < T::zero() {
        t += tau;
    }
    if t >= tau {
        t -= tau;
    }
    t
}

/// Golden-section maximization of `h` on `[lo, hi]`.
fn golden<T: Real>(m: &CMat<T>, lo: T, hi: T) -> (T, T) {
    let g = lit::<T>(0.618_033_988_749_894_9);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = rotated_top(m, c).0;
    let mut fd = rotated_top(m, d).0;
    for _ in 0..GOLDEN_ITERS {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = rotated_top(m, c).0;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = rotated_top(m, d).0;
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Unimodular solutions of `z² M − 2rz + M† = 0` through the shifted
/// linearization `(A − cB)⁻¹ B`, with `A = [[2rI, −M†], [I, 0]]`,
/// `B = [[M, 0], [0, I]]`, `c = e^{iφ}` at an angle where `r` is not attained.
fn level_crossings<T: Real>(m: &CMat<T>, r: T, phi: T) -> Result<Vec<T>> {
    let n = m.nrows();
    let i = linalg::identity::<T>(n);
    let z = linalg::zeros::<T>(n, n);
    let a = linalg::from_blocks(&[vec![&i * creal(r + r), -m.adjoint()], vec![i.clone(), z.clone()]])?;
    let b = linalg::from_blocks(&[vec![m.clone(), z.clone()], vec![z, i]])?;
    let c = cis(phi);
    let shifted = &a - &b * c;
    let k = shifted
        .lu()
        .solve(&b)
        .ok_or_else(|| Error::Numerical("singular shifted pencil".into()))?;
    let mus = linalg::eigenvalues(&k)?;
    let band = lit::<T>(1e-5);
    let mut angles = Vec::new();
    for mu in mus {
        if mu.norm_sqr() == T::zero() {
            continue;
        }
        let zc = c + creal(T::one()) / mu;
        if !zc.re.is_finite() || !zc.im.is_finite() {
            continue;
        }
        if (zc.norm_sqr().sqrt() - T::one()).abs() <= band {
            angles.push(wrap(carg(zc)));
        }
    }
    Ok(angles)
}

/// Numerical radius to absolute accuracy `tol`.
pub fn numerical_radius<T: Real>(m: &CMat<T>, tol: T) -> Result<RadiusResult<T>> {
    let n = linalg::ensure_square(m)?;
    if !(tol > T::zero()) {
        return Err(Error::InvalidConfig("tolerance must be positive".into()));
    }
    if n == 0 {
        return Ok(RadiusResult::zero(0));
    }
    let scale = linalg::op_norm(m);
    if scale == T::zero() {
        return Ok(RadiusResult::zero(n));
    }
    let roundoff = lit::<T>(64.0 * n as f64) * T::default_epsilon() * scale;
    if linalg::max_abs(&(m - m.adjoint())) <= roundoff {
        return Ok(hermitian_radius(m, roundoff));
    }
    let normed = m * creal(T::one() / scale);
    let mut res = radius_unit(&normed, tol / scale);
    res.value *= scale;
    res.certified_error *= scale;
    Ok(res)
}

fn hermitian_radius<T: Real>(m: &CMat<T>, err: T) -> RadiusResult<T> {
    let (vals, vecs) = linalg::eigh(m);
    let (lo, hi) = (vals[0], vals[vals.len() - 1]);
    if hi.abs() >= lo.abs() {
        RadiusResult { value: hi.abs(), maximizer_theta: T::zero(), maximizer_vector: vecs.column(vals.len() - 1).into_owned(), certified_error: err }
    } else {
        RadiusResult { value: lo.abs(), maximizer_theta: T::pi(), maximizer_vector: vecs.column(0).into_owned(), certified_error: err }
    }
}

/// Radius of a matrix with unit operator norm; `tol` is relative to that scale.
fn radius_unit<T: Real>(m: &CMat<T>, tol: T) -> RadiusResult<T> {
    let step = T::two_pi() / lit(GRID as f64);
    let samples: Vec<(T, T)> = (0..GRID)
        .map(|k| {
            let th = step * lit(k as f64);
            (th, rotated_top(m, th).0)
        })
        .collect();
    let phi = samples
        .iter()
        .copied()
        .fold(samples[0], |acc, s| if s.1 < acc.1 { s } else { acc })
        .0;
    let mut order: Vec<usize> = (0..GRID).collect();
    order.sort_by(|&a, &b| samples[b].1.partial_cmp(&samples[a].1).unwrap_or(std::cmp::Ordering::Equal).then(a.cmp(&b)));
    let (mut best_t, mut best_v) = samples[order[0]];
    for &k in order.iter().take(3) {
        let (t, v) = golden(m, samples[k].0 - step, samples[k].0 + step);
        if v > best_v {
            best_t = t;
            best_v = v;
        }
    }

    let floor = lit::<T>(1e-13).max(lit::<T>(100.0) * T::default_epsilon());
    let gap = (tol * lit(0.5)).max(floor);
    let mut certified = false;
    for _ in 0..CERT_ROUNDS {
        let r = best_v + gap;
        let Ok(angles) = level_crossings(m, r, phi) else { break };
        let mut improved = false;
        for th in angles {
            let v = rotated_top(m, th).0;
            // A genuine crossing sits at height r up to eigensolver error.
            if v > best_v + gap * lit(0.25) {
                let (t2, v2) = golden(m, th - step * lit(0.25), th + step * lit(0.25));
                if v2 >= v {
                    best_t = t2;
                    best_v = v2;
                } else {
                    best_t = th;
                    best_v = v;
                }
                improved = true;
            }
        }
        if !improved {
            certified = true;
            break;
        }
    }

    let certified_error = if certified {
        gap
    } else {
        // Dense-grid outer bound: a point of the numerical range with modulus w
        // is within half a grid step of some direction θ_k, so w cos(δ/2) ≤ h(θ_k).
        let d = T::two_pi() / lit(FALLBACK_GRID as f64);
        let mut top = best_v;
        for k in 0..FALLBACK_GRID {
            let th = d * lit(k as f64);
            let v = rotated_top(m, th).0;
            if v > best_v {
                best_v = v;
                best_t = th;
            }
            top = top.max(v);
        }
        top / (d * lit(0.5)).cos() - best_v
    };

    let theta = wrap(best_t);
    let (value, vec) = rotated_top(m, theta);
    RadiusResult { value: value.max(T::zero()), maximizer_theta: theta, maximizer_vector: vec, certified_error }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::real_matrix;

    #[test]
    fn nilpotent_has_radius_half() {
        let m = real_matrix::<f64>(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let r = numerical_radius(&m, 1e-10).unwrap();
        assert!((r.value - 0.5).abs() < 1e-10);
        assert!(r.certified_error <= 1e-10);
        let q = linalg::quad_form(&m, &r.maximizer_vector).norm();
        assert!(q >= r.value - 1e-12);
    }

    #[test]
    fn selfadjoint_gives_spectral_radius() {
        let m = real_matrix::<f64>(&[&[3.0, 0.0], &[0.0, -1.0]]);
        assert!((numerical_radius(&m, 1e-10).unwrap().value - 3.0).abs() < 1e-12);
        let m = real_matrix::<f64>(&[&[1.0, 0.0], &[0.0, -4.0]]);
        let r = numerical_radius(&m, 1e-10).unwrap();
        assert!((r.value - 4.0).abs() < 1e-12);
    }

    #[test]
    fn identity_and_zero() {
        assert!((numerical_radius(&linalg::identity::<f64>(3), 1e-10).unwrap().value - 1.0).abs() < 1e-14);
        assert_eq!(numerical_radius(&linalg::zeros::<f64>(2, 2), 1e-10).unwrap().value, 0.0);
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(numerical_radius(&linalg::zeros::<f64>(2, 3), 1e-10).is_err());
    }
}
