//! Seeded sampling of complex vectors and matrices.
//!
//! Each sample draws from its own ChaCha stream keyed by `(seed, index)`, so a
//! loop over samples gives the same values whatever order it runs in.

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg;
use crate::scalar::{cabs, creal, lit, CMat, CVec, Cx, Real};

pub type SampleRng = ChaCha8Rng;

/// Generator for sample `stream` under `seed`.
pub fn derive_rng(seed: u64, stream: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn normal<T: Real>(rng: &mut impl Rng) -> T {
    let x: f64 = rng.sample(StandardNormal);
    lit(x)
}

/// Standard complex Gaussian with `E|z|² = 1`.
pub fn complex_normal<T: Real>(rng: &mut impl Rng) -> Cx<T> {
    let h = lit::<T>(std::f64::consts::FRAC_1_SQRT_2);
    Complex::new(normal::<T>(rng) * h, normal::<T>(rng) * h)
}

pub fn uniform<T: Real>(rng: &mut impl Rng, lo: f64, hi: f64) -> T {
    lit(rng.random_range(lo..hi))
}

pub fn gaussian_matrix<T: Real>(rng: &mut impl Rng, rows: usize, cols: usize) -> CMat<T> {
    DMatrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

pub fn gaussian_vector<T: Real>(rng: &mut impl Rng, n: usize) -> CVec<T> {
    CVec::from_fn(n, |_, _| complex_normal(rng))
}

/// Uniformly distributed point on the complex unit sphere.
pub fn unit_vector<T: Real>(rng: &mut impl Rng, n: usize) -> CVec<T> {
    loop {
        let v = gaussian_vector::<T>(rng, n);
        if v.norm() > lit(1e-8) {
            return linalg::normalize(&v);
        }
    }
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of
/// `R`'s diagonal folded back into `Q`.
pub fn haar_unitary<T: Real>(rng: &mut impl Rng, n: usize) -> CMat<T> {
    let g = gaussian_matrix::<T>(rng, n, n);
    let qr = g.qr();
    let (mut q, r) = qr.unpack();
    for j in 0..n {
        let d = r[(j, j)];
        let ph = if cabs(d) > T::zero() { d / creal(cabs(d)) } else { creal(T::one()) };
        let mut col = q.column_mut(j);
        col *= ph;
    }
    q
}

pub fn random_hermitian<T: Real>(rng: &mut impl Rng, n: usize) -> CMat<T> {
    linalg::hermitian_part(&gaussian_matrix(rng, n, n))
}

/// `G G†` for a Gaussian `G` of the given rank, scaled to unit operator norm.
pub fn random_psd<T: Real>(rng: &mut impl Rng, n: usize, rank: usize) -> CMat<T> {
    let g = gaussian_matrix::<T>(rng, n, rank.max(1));
    let m = &g * g.adjoint();
    let s = linalg::op_norm(&m);
    if s > T::zero() {
        m * creal(T::one() / s)
    } else {
        m
    }
}

/// Unit-modulus scalar with uniform phase.
pub fn random_phase<T: Real>(rng: &mut impl Rng) -> Cx<T> {
    crate::scalar::cis(uniform::<T>(rng, 0.0, std::f64::consts::TAU))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: f64 = normal(&mut derive_rng(42, 3));
        let b: f64 = normal(&mut derive_rng(42, 3));
        let c: f64 = normal(&mut derive_rng(42, 4));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn haar_unitary_is_unitary() {
        let u = haar_unitary::<f64>(&mut derive_rng(1, 0), 5);
        let e = &u.adjoint() * &u - linalg::identity::<f64>(5);
        assert!(linalg::max_abs(&e) < 1e-12);
    }
}
