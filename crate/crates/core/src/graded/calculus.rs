//! Graded functional calculus: the ι map, twisted products, graded spectrum,
//! the two positive cones and the graded absolute value.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rng::{self, SampleRng};
use crate::scalar::{carg, cis, creal, lit, CMat, Cx, Real};

use super::operator::GradedOperator;

fn imag_unit<T: Real>() -> Cx<T> {
    Cx::new(T::zero(), T::one())
}

/// `x₀ + x₁ ↦ x₀ + i x₁`.
pub fn iota<T: Real>(x: &GradedOperator<T>) -> GradedOperator<T> {
    let odd = x.odd_part();
    x.with_data(x.even_part().data() + odd.data() * imag_unit::<T>())
}

/// `y₀ + y₁ ↦ y₀ − i y₁`.
pub fn iota_inverse<T: Real>(y: &GradedOperator<T>) -> GradedOperator<T> {
    let odd = y.odd_part();
    y.with_data(y.even_part().data() - odd.data() * imag_unit::<T>())
}

/// `(x₀y₀ + ω x₁y₁) + (x₀y₁ + x₁y₀)`.
pub fn twisted_product<T: Real>(
    x: &GradedOperator<T>,
    y: &GradedOperator<T>,
    omega: Cx<T>,
) -> Result<GradedOperator<T>> {
    x.check_same_space(y)?;
    let (x0, x1) = (x.even_part(), x.odd_part());
    let (y0, y1) = (y.even_part(), y.odd_part());
    let (x0, x1, y0, y1) = (x0.data(), x1.data(), y0.data(), y1.data());
    let data = x0 * y0 + (x1 * y1) * omega + x0 * y1 + x1 * y0;
    Ok(x.with_data(data))
}

/// `√ω` on the branch `ω = e^{iθ}`, `θ ∈ [0, 2π)`.
pub fn sqrt_branch<T: Real>(omega: Cx<T>) -> Cx<T> {
    let mut theta = carg(omega);
    if theta < T::zero() {
        theta += T::two_pi();
    }
    if theta >= T::two_pi() {
        theta -= T::two_pi();
    }
    cis(theta * lit(0.5))
}

/// `x₀ + √ω x₁`, which carries `∗_ω` to the ordinary product.
pub fn fiber_iso<T: Real>(x: &GradedOperator<T>, omega: Cx<T>) -> GradedOperator<T> {
    let r = sqrt_branch(omega);
    x.with_data(x.even_part().data() + x.odd_part().data() * r)
}

/// Eigenvalues of `εx`, the `λ` for which `x − λε` is singular, sorted by
/// (re, im). Hermitian input goes through the self-adjoint solver.
pub fn graded_spectrum<T: Real>(x: &GradedOperator<T>) -> Result<Vec<Cx<T>>> {
    let ex = x.epsilon() * x.data();
    let scale = T::one() + x.op_norm();
    if x.is_hermitian(lit::<T>(1e3) * T::default_epsilon() * scale) {
        Ok(linalg::eigvalsh(&ex).into_iter().map(creal).collect())
    } else {
        linalg::eigenvalues(&ex)
    }
}

/// Hermitian and `εx` positive semidefinite.
pub fn is_epsilon_positive<T: Real>(x: &GradedOperator<T>, tol: T) -> bool {
    x.is_hermitian(tol) && linalg::is_psd(&(x.epsilon() * x.data()), tol)
}

/// Hermitian and every graded-spectrum value real and at least `-tol·(1+‖x‖)`.
pub fn is_epsilon_positive_by_spectrum<T: Real>(x: &GradedOperator<T>, tol: T) -> Result<bool> {
    if !x.is_hermitian(tol) {
        return Ok(false);
    }
    let floor = -tol * (T::one() + x.op_norm());
    Ok(graded_spectrum(x)?.iter().all(|l| l.re >= floor && l.im.abs() <= tol * (T::one() + x.op_norm())))
}

/// Smallest value of `Re⟨xξ, εξ⟩` found over `samples` random unit vectors,
/// each polished by Rayleigh-quotient descent on the hermitian part of `εx`.
pub fn min_sesquilinear<T: Real>(x: &GradedOperator<T>, samples: usize, rng: &mut SampleRng) -> T {
    let form = linalg::hermitian_part(&(x.epsilon() * x.data()));
    let n = x.size();
    let shift = creal(linalg::op_norm(&form) + T::one());
    let descend = (linalg::identity::<T>(n) * shift) - &form;
    let rayleigh = |v: &crate::scalar::CVec<T>| linalg::quad_form(&form, v).re;
    let mut best = None::<(T, crate::scalar::CVec<T>)>;
    for _ in 0..samples.max(1) {
        let v = rng::unit_vector::<T>(rng, n);
        let val = rayleigh(&v);
        if best.as_ref().is_none_or(|(b, _)| val < *b) {
            best = Some((val, v));
        }
    }
    let (mut val, mut v) = best.expect("at least one sample");
    // Power steps on (c − form) pull the best sample toward the bottom eigenvector.
    for _ in 0..200 {
        let w = linalg::normalize(&(&descend * &v));
        let nv = rayleigh(&w);
        if nv > val - lit::<T>(1e-15) * (T::one() + val.abs()) {
            if nv < val {
                val = nv;
            }
            break;
        }
        val = nv;
        v = w;
    }
    val
}

/// Sesquilinear version of ε-positivity: hermitian and the sampled form
/// bounded below by `-tol·(1+‖x‖)`.
pub fn is_epsilon_positive_by_form<T: Real>(
    x: &GradedOperator<T>,
    tol: T,
    samples: usize,
    rng: &mut SampleRng,
) -> bool {
    x.is_hermitian(tol) && min_sesquilinear(x, samples, rng) >= -tol * (T::one() + x.op_norm())
}

/// Hermitian and `ι(x)` positive semidefinite.
pub fn is_superpositive<T: Real>(x: &GradedOperator<T>, tol: T) -> bool {
    x.is_hermitian(tol) && linalg::is_psd(iota(x).data(), tol)
}

/// Hermitian and `x₀ + εx₁` positive semidefinite; unitarily equivalent to `ι(x)`.
pub fn is_superpositive_alt<T: Real>(x: &GradedOperator<T>, tol: T) -> bool {
    let m = x.even_part().data() + x.epsilon() * x.odd_part().data();
    x.is_hermitian(tol) && linalg::is_psd(&m, tol)
}

/// The superpositive square root of `x* ∗₋₁ x`.
pub fn graded_abs<T: Real>(x: &GradedOperator<T>) -> GradedOperator<T> {
    let y = iota(x);
    let root = linalg::sqrt_psd(&(y.data().adjoint() * y.data()));
    iota_inverse(&x.with_data(root))
}

/// `κ = P₊ + i P₋`: unitary with `κ² = ε`.
pub fn kappa<T: Real>(x: &GradedOperator<T>) -> CMat<T> {
    let e = x.epsilon();
    let i = linalg::identity::<T>(x.size());
    let half = creal(lit::<T>(0.5));
    (&i + &e) * half + (&i - &e) * (half * imag_unit::<T>())
}

/// `κ x κ`. Sends `ε` to `1` and hermitian elements to self-adjoint matrices.
pub fn kappa_conjugate<T: Real>(x: &GradedOperator<T>) -> CMat<T> {
    let k = kappa(x);
    &k * x.data() * &k
}

/// Inverse of [`kappa_conjugate`] on matrices of the same size.
pub fn kappa_unconjugate<T: Real>(like: &GradedOperator<T>, m: &CMat<T>) -> Result<GradedOperator<T>> {
    if m.shape() != like.data().shape() {
        return Err(Error::DimMismatch("kappa preimage has the wrong size".into()));
    }
    let k = kappa(like).adjoint();
    Ok(like.with_data(&k * m * &k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::space::GradedSpace;
    use crate::linalg::{complex_matrix, real_matrix};

    fn sp() -> GradedSpace {
        GradedSpace::diag(1, 1).unwrap()
    }

    fn stored() -> GradedOperator<f64> {
        GradedOperator::new(sp(), real_matrix(&[&[1.0, 1.0], &[-1.0, -1.0]])).unwrap()
    }

    #[test]
    fn cones_differ_on_stored_example() {
        let x = stored();
        assert!(is_epsilon_positive(&x, 1e-9));
        assert!(!is_superpositive(&x, 1e-9));
        assert!(!is_superpositive_alt(&x, 1e-9));
        let sp = graded_spectrum(&x).unwrap();
        assert!(sp[0].norm() < 1e-12 && (sp[1].re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn iota_of_stored_example() {
        let y = iota(&stored());
        let expect = complex_matrix(&[&[(1.0, 0.0), (0.0, 1.0)], &[(0.0, -1.0), (-1.0, 0.0)]]);
        assert!(linalg::max_abs(&(y.data() - expect)) < 1e-15);
        assert_eq!(iota_inverse(&y), stored());
    }

    #[test]
    fn graded_abs_of_stored_example() {
        let a = graded_abs(&stored());
        let expect = linalg::identity::<f64>(2) * creal(2f64.sqrt());
        assert!(linalg::max_abs(&(a.data() - expect)) < 1e-12);
    }

    #[test]
    fn odd_flip_squares_to_minus_one() {
        let x = GradedOperator::new(sp(), real_matrix::<f64>(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        let y = twisted_product(&x, &x, creal(-1.0)).unwrap();
        assert!(linalg::max_abs(&(y.data() + linalg::identity::<f64>(2))) < 1e-15);
    }

    #[test]
    fn branch_holonomy() {
        let x = stored();
        let near = fiber_iso(&x, Cx::from_polar(1.0, std::f64::consts::TAU - 1e-9));
        let flipped = x.even_part().data() - x.odd_part().data();
        assert!(linalg::max_abs(&(near.data() - flipped)) < 1e-8);
        assert_eq!(fiber_iso(&x, creal(1.0)), x);
    }

    #[test]
    fn kappa_sends_grading_to_one() {
        let e = GradedOperator::<f64>::grading(GradedSpace::diag(2, 3).unwrap());
        let m = kappa_conjugate(&e);
        assert!(linalg::max_abs(&(m - linalg::identity::<f64>(5))) < 1e-15);
    }
}
