//! Strong and σ-strong norms of graded operators and the seminorms built from them.

use crate::error::{Error, Result};
use crate::graded::GradedOperator;
use crate::linalg;
use crate::scalar::{cis, creal, lit, Cx, Real};

use super::radius::{numerical_radius, RadiusResult};

/// `sup |⟨xξ, εξ⟩|`, i.e. `w(εx)`.
pub fn strong_norm<T: Real>(x: &GradedOperator<T>, tol: T) -> Result<RadiusResult<T>> {
    numerical_radius(&(x.epsilon() * x.data()), tol)
}

/// `sup |⟨x₀ξ, ξ⟩ + ⟨x₁ξ, εξ⟩|`, i.e. `w(x₀ + εx₁)`.
pub fn sigma_strong_norm<T: Real>(x: &GradedOperator<T>, tol: T) -> Result<RadiusResult<T>> {
    let m = x.even_part().data() + x.epsilon() * x.odd_part().data();
    numerical_radius(&m, tol)
}

/// `[[0, x], [0, 0]]` one matrix level up.
pub fn corner_embed<T: Real>(x: &GradedOperator<T>) -> GradedOperator<T> {
    let z = GradedOperator::zero(x.space());
    GradedOperator::from_blocks(&[vec![z.clone(), x.clone()], vec![z.clone(), z]])
        .expect("blocks share one space")
}

/// `2 ‖[[0, x], [0, 0]]‖^s`, which reproduces the operator norm.
pub fn derived_matrix_norm<T: Real>(x: &GradedOperator<T>, tol: T) -> Result<T> {
    let two = lit::<T>(2.0);
    Ok(two * strong_norm(&corner_embed(x), tol / two)?.value)
}

/// Same construction with the σ-strong norm.
pub fn derived_sigma_norm<T: Real>(x: &GradedOperator<T>, tol: T) -> Result<T> {
    let two = lit::<T>(2.0);
    Ok(two * sigma_strong_norm(&corner_embed(x), tol / two)?.value)
}

fn check_unimodular<T: Real>(omega: Cx<T>) -> Result<()> {
    let m = omega.norm_sqr().sqrt();
    if (m - T::one()).abs() > lit(1e-12) {
        return Err(Error::NotUnimodular(crate::scalar::to_f64(m)));
    }
    Ok(())
}

/// `ωx + ω̄x*`, a hermitian element.
fn omega_symmetrize<T: Real>(x: &GradedOperator<T>, omega: Cx<T>) -> GradedOperator<T> {
    let s = x.superinvolve();
    x.with_data(x.data() * omega + s.data() * omega.conj())
}

/// `½ ‖ωx + ω̄x*‖^s`.
pub fn seminorm_p_omega<T: Real>(x: &GradedOperator<T>, omega: Cx<T>, tol: T) -> Result<T> {
    check_unimodular(omega)?;
    Ok(strong_norm(&omega_symmetrize(x, omega), tol)?.value * lit(0.5))
}

/// `½ ‖ωx + ω̄x*‖`.
pub fn seminorm_big_p_omega<T: Real>(x: &GradedOperator<T>, omega: Cx<T>) -> Result<T> {
    check_unimodular(omega)?;
    Ok(omega_symmetrize(x, omega).op_norm() * lit(0.5))
}

/// Supremum of a seminorm family over the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleSup<T: Real> {
    pub value: T,
    pub theta: T,
}

fn circle_sup<T: Real>(grid: usize, f: impl Fn(T) -> Result<T>) -> Result<CircleSup<T>> {
    if grid < 16 {
        return Err(Error::InvalidConfig(format!("omega grid needs at least 16 points, got {grid}")));
    }
    let step = T::two_pi() / lit(grid as f64);
    let mut best = CircleSup { value: -T::one(), theta: T::zero() };
    for k in 0..grid {
        let th = step * lit(k as f64);
        let v = f(th)?;
        if v > best.value {
            best = CircleSup { value: v, theta: th };
        }
    }
    let g = lit::<T>(0.618_033_988_749_894_9);
    let (mut a, mut b) = (best.theta - step, best.theta + step);
    for _ in 0..50 {
        let c = b - g * (b - a);
        let d = a + g * (b - a);
        let (fc, fd) = (f(c)?, f(d)?);
        if fc > best.value {
            best = CircleSup { value: fc, theta: c };
        }
        if fd > best.value {
            best = CircleSup { value: fd, theta: d };
        }
        if fc >= fd {
            b = d;
        } else {
            a = c;
        }
    }
    Ok(best)
}

/// `r(x) = sup_ω p_ω(x)`.
pub fn r_norm<T: Real>(x: &GradedOperator<T>, grid: usize, tol: T) -> Result<CircleSup<T>> {
    circle_sup(grid, |th| seminorm_p_omega(x, cis(th), tol))
}

/// `R(x) = sup_ω P_ω(x)`.
pub fn big_r_norm<T: Real>(x: &GradedOperator<T>, grid: usize) -> Result<CircleSup<T>> {
    circle_sup(grid, |th| seminorm_big_p_omega(x, cis(th)))
}

/// `x ⊕ y` on the same base space, levels adding.
pub fn direct_sum<T: Real>(x: &GradedOperator<T>, y: &GradedOperator<T>) -> Result<GradedOperator<T>> {
    if x.space().base() != y.space().base() {
        return Err(Error::DimMismatch("direct sum of different base spaces".into()));
    }
    let space = x.space().base().amplified(x.space().level + y.space().level);
    GradedOperator::new(space, linalg::block_diag(&[x.data(), y.data()]))
}

/// `(α ⊗ 1) x (α ⊗ 1)†` for a scalar `m × n` matrix `α` and `x` at level `n`.
pub fn scalar_compress<T: Real>(alpha: &crate::scalar::CMat<T>, x: &GradedOperator<T>) -> Result<GradedOperator<T>> {
    if alpha.ncols() != x.space().level {
        return Err(Error::DimMismatch(format!(
            "scalar matrix has {} columns, operator level is {}",
            alpha.ncols(),
            x.space().level
        )));
    }
    if alpha.nrows() == 0 {
        return Err(Error::EmptyDim);
    }
    let a = linalg::kron(alpha, &linalg::identity(x.space().base_size()));
    let space = x.space().base().amplified(alpha.nrows());
    GradedOperator::new(space, &a * x.data() * a.adjoint())
}

/// `[[0, x], [x, 0]]` and `diag(x, −x)`, the two rotations of the cross-diagonal embedding.
pub fn cross_embed<T: Real>(x: &GradedOperator<T>) -> (GradedOperator<T>, GradedOperator<T>) {
    let z = GradedOperator::zero(x.space());
    let neg = x.scale(creal(-T::one()));
    let off = GradedOperator::from_blocks(&[vec![z.clone(), x.clone()], vec![x.clone(), z.clone()]])
        .expect("blocks share one space");
    let diag = GradedOperator::from_blocks(&[vec![x.clone(), z.clone()], vec![z, neg]]).expect("blocks share one space");
    (off, diag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{iota, GradedSpace};
    use crate::linalg::real_matrix;

    fn sp() -> GradedSpace {
        GradedSpace::diag(1, 1).unwrap()
    }

    fn op(rows: &[&[f64]]) -> GradedOperator<f64> {
        GradedOperator::new(sp(), real_matrix(rows)).unwrap()
    }

    #[test]
    fn strong_norm_examples() {
        assert!((strong_norm(&op(&[&[1.0, 1.0], &[-1.0, -1.0]]), 1e-10).unwrap().value - 2.0).abs() < 1e-9);
        assert!((strong_norm(&op(&[&[0.0, 1.0], &[1.0, 0.0]]), 1e-10).unwrap().value - 1.0).abs() < 1e-9);
        assert!((strong_norm(&GradedOperator::<f64>::identity(sp()), 1e-10).unwrap().value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sigma_norm_matches_iota() {
        let x = op(&[&[1.0, 1.0], &[-1.0, -1.0]]);
        let s = sigma_strong_norm(&x, 1e-10).unwrap().value;
        assert!((s - 2f64.sqrt()).abs() < 1e-9);
        let w = numerical_radius(iota(&x).data(), 1e-10).unwrap().value;
        assert!((s - w).abs() < 1e-9);
    }

    #[test]
    fn derived_norm_examples() {
        assert!((derived_matrix_norm(&op(&[&[0.0, 1.0], &[0.0, 0.0]]), 1e-10).unwrap() - 1.0).abs() < 1e-9);
        assert!((derived_matrix_norm(&op(&[&[1.0, 1.0], &[-1.0, -1.0]]), 1e-10).unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn seminorms_on_hermitian_and_skew() {
        let h = op(&[&[1.0, 1.0], &[-1.0, -1.0]]);
        assert!((seminorm_p_omega(&h, creal(1.0), 1e-10).unwrap() - 2.0).abs() < 1e-9);
        let skew = op(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!(seminorm_p_omega(&skew, creal(1.0), 1e-10).unwrap() < 1e-12);
        let nil = op(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let big = big_r_norm(&nil, 128).unwrap().value;
        let s = strong_norm(&nil, 1e-10).unwrap().value;
        assert!((big - s).abs() < 1e-6);
    }
}
