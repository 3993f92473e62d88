use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{CMat, Cx, Real};

use super::operator::GradedOperator;
use super::space::GradedSpace;

/// `[[a, ib], [ib, a]]` on `(m, m)`; the shape hermitian elements take in a
/// standard-form representation.
pub fn standard_form_embed<T: Real>(a: &CMat<T>, b: &CMat<T>, tol: T) -> Result<GradedOperator<T>> {
    let m = linalg::ensure_square(a)?;
    if b.shape() != a.shape() {
        return Err(Error::DimMismatch(format!("a is {m}x{m}, b is {}x{}", b.nrows(), b.ncols())));
    }
    if linalg::max_abs(&(a - a.adjoint())) > tol {
        return Err(Error::NotSelfAdjoint("a"));
    }
    if linalg::max_abs(&(b - b.adjoint())) > tol {
        return Err(Error::NotSelfAdjoint("b"));
    }
    let ib = b * Cx::new(T::zero(), T::one());
    let data = linalg::from_blocks(&[vec![a.clone(), ib.clone()], vec![ib, a.clone()]])?;
    GradedOperator::new(GradedSpace::diag(m, m)?, data)
}

/// `diag(x, xstar†)` on two copies graded by exchanging them. The
/// superinvolution sends `swap_double(x, y)` to `swap_double(y, x)`.
pub fn swap_double<T: Real>(x: &CMat<T>, xstar: &CMat<T>) -> Result<GradedOperator<T>> {
    let m = linalg::ensure_square(x)?;
    if xstar.shape() != x.shape() {
        return Err(Error::DimMismatch(format!(
            "x is {m}x{m}, xstar is {}x{}",
            xstar.nrows(),
            xstar.ncols()
        )));
    }
    let adj = xstar.adjoint();
    GradedOperator::new(GradedSpace::swap(m)?, linalg::block_diag(&[x, &adj]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::calculus::graded_spectrum;
    use crate::linalg::real_matrix;

    #[test]
    fn standard_form_spectrum_is_symmetric() {
        let a = linalg::zeros::<f64>(1, 1);
        let b = linalg::identity::<f64>(1);
        let x = standard_form_embed(&a, &b, 1e-12).unwrap();
        assert!(x.is_hermitian(1e-15));
        let s = graded_spectrum(&x).unwrap();
        assert!((s[0].re + 1.0).abs() < 1e-12 && (s[1].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn standard_form_rejects_non_selfadjoint() {
        let a = real_matrix::<f64>(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let b = linalg::zeros::<f64>(2, 2);
        assert_eq!(standard_form_embed(&a, &b, 1e-9), Err(Error::NotSelfAdjoint("a")));
    }

    #[test]
    fn swap_double_exchanges_under_superinvolution() {
        let x = real_matrix::<f64>(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let d = swap_double(&x, &x.adjoint()).unwrap();
        assert_eq!(d.superinvolve(), swap_double(&x.adjoint(), &x).unwrap());
    }
}
