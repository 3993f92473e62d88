//! Unitaries of the algebra generated by `1` and `ε`, the contraction
//! characterization of ω-hermitian operators, and superunitaries.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{cabs, carg, cis, creal, lit, to_f64, CMat, Cx, Real};

use super::operator::GradedOperator;
use super::space::GradedSpace;

const UNIMODULAR_TOL: f64 = 1e-12;

/// `ω = ω₀ P₊ + ω₁ P₋` where `P±` project onto the even and odd subspaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaUnitary<T: Real> {
    space: GradedSpace,
    omega0: Cx<T>,
    omega1: Cx<T>,
}

impl<T: Real> OmegaUnitary<T> {
    pub fn new(space: GradedSpace, omega0: Cx<T>, omega1: Cx<T>) -> Result<Self> {
        for w in [omega0, omega1] {
            let dev = to_f64(cabs(w)) - 1.0;
            if !dev.is_finite() || dev.abs() > UNIMODULAR_TOL.max(10.0 * to_f64(T::default_epsilon())) {
                return Err(Error::NotUnimodular(to_f64(cabs(w))));
            }
        }
        Ok(Self { space, omega0, omega1 })
    }

    /// `ω = 1`, whose involution is the ordinary adjoint.
    pub fn one(space: GradedSpace) -> Self {
        Self { space, omega0: creal(T::one()), omega1: creal(T::one()) }
    }

    /// `ω = ε`, whose involution is the superinvolution.
    pub fn grading(space: GradedSpace) -> Self {
        Self { space, omega0: creal(T::one()), omega1: creal(-T::one()) }
    }

    pub fn space(&self) -> GradedSpace {
        self.space
    }

    pub fn omega0(&self) -> Cx<T> {
        self.omega0
    }

    pub fn omega1(&self) -> Cx<T> {
        self.omega1
    }

    pub fn at_space(&self, space: GradedSpace) -> Self {
        Self { space, ..*self }
    }

    pub fn matrix(&self) -> CMat<T> {
        self.combine(self.omega0, self.omega1)
    }

    /// A unitary square root of `ω⁻¹` in the same algebra.
    pub fn inverse_sqrt(&self) -> CMat<T> {
        let r = |w: Cx<T>| {
            let h = lit::<T>(0.5);
            cis(-carg(w) * h)
        };
        self.combine(r(self.omega0), r(self.omega1))
    }

    fn combine(&self, a: Cx<T>, b: Cx<T>) -> CMat<T> {
        let e = self.space.epsilon::<T>();
        let i = linalg::identity::<T>(self.space.size());
        let half = creal(lit::<T>(0.5));
        (&i + &e) * (a * half) + (&i - &e) * (b * half)
    }
}

/// `‖x − i t ω‖`.
pub fn lemma2_gap<T: Real>(x: &GradedOperator<T>, w: &OmegaUnitary<T>, t: T) -> Result<T> {
    x.space().check_same(&w.space())?;
    let shifted = x.data() - w.matrix() * Cx::new(T::zero(), t);
    Ok(linalg::op_norm(&shifted))
}

/// First `t` in `ts` with `‖x − i t ω‖ > √(1+t²) + tol`.
pub fn lemma2_violation<T: Real>(
    x: &GradedOperator<T>,
    w: &OmegaUnitary<T>,
    ts: &[T],
    tol: T,
) -> Result<Option<T>> {
    for &t in ts {
        if lemma2_gap(x, w, t)? > (T::one() + t * t).sqrt() + tol {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Whether "ω-hermitian of norm at most one" agrees with "no violation on
/// the grid". A grid can refute the inequality but never prove it for all `t`.
pub fn lemma2_check<T: Real>(
    x: &GradedOperator<T>,
    w: &OmegaUnitary<T>,
    t_grid: &[T],
    tol: T,
) -> Result<bool> {
    if t_grid.is_empty() {
        return Err(Error::InvalidConfig("t grid must be nonempty".into()));
    }
    let contraction = x.is_omega_hermitian(w, tol)? && x.op_norm() <= T::one() + tol;
    let holds = lemma2_violation(x, w, t_grid, tol)?.is_none();
    Ok(contraction == holds)
}

/// Grid violation search extended geometrically to `|t| = 10⁶`. A skew part
/// of size `s` in the rotated frame makes the gap grow like `s·|t|`, so a
/// failing `t` shows up on the large-`|t|` arm even when the grid misses it.
pub fn lemma2_search<T: Real>(
    x: &GradedOperator<T>,
    w: &OmegaUnitary<T>,
    t_grid: &[T],
    tol: T,
) -> Result<Option<T>> {
    if let Some(t) = lemma2_violation(x, w, t_grid, tol)? {
        return Ok(Some(t));
    }
    let mut far = Vec::new();
    let mut mag = 1.0f64;
    while mag <= 1e6 {
        far.push(lit::<T>(mag));
        far.push(lit::<T>(-mag));
        mag *= 2.0;
    }
    lemma2_violation(x, w, &far, tol)
}

/// `x x* = x* x = 1` within `tol` in operator norm.
pub fn is_superunitary<T: Real>(x: &GradedOperator<T>, tol: T) -> bool {
    let s = x.superinvolve();
    let one = linalg::identity::<T>(x.size());
    linalg::op_norm(&(x.data() * s.data() - &one)) <= tol
        && linalg::op_norm(&(s.data() * x.data() - &one)) <= tol
}

/// `x† ε x = ε`, the form-preserving description of a superunitary.
pub fn is_pseudo_unitary<T: Real>(x: &GradedOperator<T>, tol: T) -> bool {
    let e = x.epsilon();
    linalg::op_norm(&(x.data().adjoint() * &e * x.data() - &e)) <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::real_matrix;

    fn sp() -> GradedSpace {
        GradedSpace::diag(1, 1).unwrap()
    }

    #[test]
    fn omega_involution_example() {
        let w = OmegaUnitary::new(sp(), creal(1.0), Cx::new(0.0, 1.0)).unwrap();
        let x = GradedOperator::new(sp(), real_matrix::<f64>(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        let y = x.omega_involve(&w).unwrap();
        let expect = linalg::complex_matrix::<f64>(&[&[(0.0, 0.0), (0.0, 1.0)], &[(0.0, 1.0), (0.0, 0.0)]]);
        assert!(linalg::max_abs(&(y.data() - expect)) < 1e-15);
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(OmegaUnitary::new(sp(), creal(1.0), creal(1.1)).is_err());
    }

    #[test]
    fn boost_is_superunitary() {
        let (c, s) = (0.7f64.cosh(), 0.7f64.sinh());
        let x = GradedOperator::new(sp(), real_matrix(&[&[c, s], &[s, c]])).unwrap();
        assert!(is_superunitary(&x, 1e-12));
        assert!(is_pseudo_unitary(&x, 1e-12));
        assert!((x.op_norm() - 0.7f64.exp()).abs() < 1e-12);
        let flip = GradedOperator::new(sp(), real_matrix::<f64>(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        assert!(!is_superunitary(&flip, 1e-9));
    }

    #[test]
    fn grading_saturates_lemma2() {
        let e = GradedOperator::<f64>::grading(sp());
        let w = OmegaUnitary::grading(sp());
        let ts: Vec<f64> = (-10..=10).map(f64::from).collect();
        assert!(lemma2_check(&e, &w, &ts, 1e-9).unwrap());
        for &t in &ts {
            assert!((lemma2_gap(&e, &w, t).unwrap() - (1.0 + t * t).sqrt()).abs() < 1e-12);
        }
    }
}
