//! Dense complex linear algebra helpers on top of nalgebra.
//!
//! Every routine is deterministic for a fixed input: eigenvalues come back
//! sorted, and eigenvector phases are left as the solver produces them.

use std::cmp::Ordering;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cabs, creal, eps, lit, CMat, CVec, Cx, Real};

pub fn identity<T: Real>(n: usize) -> CMat<T> {
    DMatrix::identity(n, n)
}

pub fn zeros<T: Real>(r: usize, c: usize) -> CMat<T> {
    DMatrix::zeros(r, c)
}

pub fn ensure_square<T: Real>(m: &CMat<T>) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    Ok(m.nrows())
}

pub fn all_finite<T: Real>(m: &CMat<T>) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Largest entry modulus.
pub fn max_abs<T: Real>(m: &CMat<T>) -> T {
    m.iter().fold(T::zero(), |acc, z| acc.max(cabs(*z)))
}

/// Operator (spectral) norm: the largest singular value.
pub fn op_norm<T: Real>(m: &CMat<T>) -> T {
    if m.is_empty() {
        return T::zero();
    }
    m.singular_values().iter().fold(T::zero(), |acc, &s| acc.max(s))
}

/// Trace norm: the sum of singular values.
pub fn trace_norm<T: Real>(m: &CMat<T>) -> T {
    m.singular_values().iter().fold(T::zero(), |acc, &s| acc + s)
}

/// `m = u · diag(s) · v†` with `k = min(rows, cols)` columns in `u` and `v`
/// and `s` descending.
#[derive(Debug, Clone)]
pub struct ThinSvd<T: Real> {
    pub u: CMat<T>,
    pub s: Vec<T>,
    pub v: CMat<T>,
}

impl<T: Real> ThinSvd<T> {
    pub fn max(&self) -> T {
        self.s.first().copied().unwrap_or(T::zero())
    }

    /// Indices of singular values above `rel · max`.
    pub fn rank_indices(&self, rel: T) -> Vec<usize> {
        let cut = rel * self.max();
        (0..self.s.len()).filter(|&k| self.s[k] > cut).collect()
    }
}

/// One-sided Jacobi SVD. nalgebra's complex SVD returns mismatched singular
/// vectors on rank-deficient input, so anything that needs the vectors uses this.
pub fn thin_svd<T: Real>(m: &CMat<T>) -> ThinSvd<T> {
    if m.ncols() > m.nrows() {
        let t = thin_svd(&m.adjoint());
        return ThinSvd { u: t.v, s: t.s, v: t.u };
    }
    let n = m.ncols();
    let mut w = m.clone();
    let mut v = identity::<T>(n);
    let tol = eps::<T>() * lit(4.0);
    // Pairs below this are numerically orthogonal whatever their lengths.
    let floor = eps::<T>() * eps::<T>() * m.norm_squared();
    for _ in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = w.column(p).norm_squared();
                let beta = w.column(q).norm_squared();
                let gamma = w.column(p).dotc(&w.column(q));
                let g = cabs(gamma);
                if g <= floor || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma.unscale(g);
                let zeta = (beta - alpha) / (lit::<T>(2.0) * g);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for mat in [&mut w, &mut v] {
                    let cp = mat.column(p).into_owned();
                    let cq = mat.column(q) * phase.conj();
                    mat.set_column(p, &(&cp * creal(c) - &cq * creal(s)));
                    mat.set_column(q, &((&cp * creal(s) + &cq * creal(c)) * phase));
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let norms: Vec<T> = (0..n).map(|j| w.column(j).norm()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap_or(Ordering::Equal).then(i.cmp(&j)));
    let mut u = zeros::<T>(m.nrows(), n);
    let mut vs = zeros::<T>(n, n);
    let mut s = Vec::with_capacity(n);
    for (k, &j) in order.iter().enumerate() {
        s.push(norms[j]);
        if norms[j] > T::zero() {
            u.set_column(k, &w.column(j).unscale(norms[j]));
        }
        vs.set_column(k, &v.column(j));
    }
    ThinSvd { u, s, v: vs }
}

pub fn hermitian_part<T: Real>(m: &CMat<T>) -> CMat<T> {
    (m + m.adjoint()) * creal(lit::<T>(0.5))
}

/// Symmetrizes and diagonalizes a Hermitian matrix. Eigenvalues ascend;
/// column `k` of the returned matrix belongs to eigenvalue `k`.
pub fn eigh<T: Real>(m: &CMat<T>) -> (DVector<T>, CMat<T>) {
    let h = hermitian_part(m);
    let n = h.nrows();
    let se = SymmetricEigen::new(h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap_or(Ordering::Equal).then(i.cmp(&j))
    });
    let vals = DVector::from_iterator(n, order.iter().map(|&i| se.eigenvalues[i]));
    let mut vecs = zeros(n, n);
    for (k, &i) in order.iter().enumerate() {
        vecs.set_column(k, &se.eigenvectors.column(i));
    }
    (vals, vecs)
}

pub fn eigvalsh<T: Real>(m: &CMat<T>) -> Vec<T> {
    let h = hermitian_part(m);
    let mut v: Vec<T> = h.symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    v
}

/// Largest eigenvalue of the Hermitian part of `m` together with a unit eigenvector.
pub fn lambda_max<T: Real>(m: &CMat<T>) -> (T, CVec<T>) {
    let (vals, vecs) = eigh(m);
    let n = vals.len();
    (vals[n - 1], vecs.column(n - 1).into_owned())
}

/// Total order on complex numbers: real part first, then imaginary part.
pub fn cmp_complex<T: Real>(a: &Cx<T>, b: &Cx<T>) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

/// Eigenvalues of a general complex square matrix, sorted by (re, im).
pub fn eigenvalues<T: Real>(m: &CMat<T>) -> Result<Vec<Cx<T>>> {
    ensure_square(m)?;
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let schur = m
        .clone()
        .try_schur(T::default_epsilon(), 10_000)
        .ok_or_else(|| Error::Numerical("Schur iteration did not converge".into()))?;
    let (_, t) = schur.unpack();
    let mut ev: Vec<Cx<T>> = (0..n).map(|i| t[(i, i)]).collect();
    ev.sort_by(cmp_complex);
    Ok(ev)
}

/// True when the Hermitian part's smallest eigenvalue is at least
/// `-tol * (1 + ‖m‖)`.
pub fn is_psd<T: Real>(m: &CMat<T>, tol: T) -> bool {
    let vals = eigvalsh(m);
    let scale = T::one() + op_norm(m);
    vals.first().is_none_or(|&lo| lo >= -tol * scale)
}

/// Principal square root of a positive semidefinite matrix; negative
/// eigenvalues from round-off are clamped to zero.
pub fn sqrt_psd<T: Real>(m: &CMat<T>) -> CMat<T> {
    let (vals, vecs) = eigh(m);
    let d = DVector::from_iterator(vals.len(), vals.iter().map(|&v| creal(v.max(T::zero()).sqrt())));
    &vecs * DMatrix::from_diagonal(&d) * vecs.adjoint()
}

/// Lower-triangular `L` with `LL† = m` for Hermitian positive definite `m`;
/// `None` as soon as a pivot is not strictly positive. Only the lower
/// triangle of `m` is read.
pub fn cholesky_lower<T: Real>(m: &CMat<T>) -> Option<CMat<T>> {
    let n = m.nrows();
    let mut l = zeros::<T>(n, n);
    for j in 0..n {
        let mut d = m[(j, j)].re;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if !(d > T::zero()) {
            return None;
        }
        let d = d.sqrt();
        l[(j, j)] = creal(d);
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / creal(d);
        }
    }
    Some(l)
}

/// Inverse of a Hermitian positive definite matrix, if its Cholesky factor exists.
pub fn inv_pd<T: Real>(m: &CMat<T>) -> Option<CMat<T>> {
    let l = cholesky_lower(&hermitian_part(m))?;
    let li = l.solve_lower_triangular(&identity(m.nrows()))?;
    Some(li.adjoint() * li)
}

pub fn kron<T: Real>(a: &CMat<T>, b: &CMat<T>) -> CMat<T> {
    a.kronecker(b)
}

/// Assembles a block matrix from a row-major grid of equally sized blocks.
pub fn from_blocks<T: Real>(blocks: &[Vec<CMat<T>>]) -> Result<CMat<T>> {
    let nr = blocks.len();
    if nr == 0 {
        return Ok(zeros(0, 0));
    }
    let nc = blocks[0].len();
    let (br, bc) = (blocks[0][0].nrows(), blocks[0][0].ncols());
    let mut out = zeros(nr * br, nc * bc);
    for (i, row) in blocks.iter().enumerate() {
        if row.len() != nc {
            return Err(Error::DimMismatch("ragged block grid".into()));
        }
        for (j, blk) in row.iter().enumerate() {
            if blk.shape() != (br, bc) {
                return Err(Error::DimMismatch("blocks of unequal shape".into()));
            }
            out.view_mut((i * br, j * bc), (br, bc)).copy_from(blk);
        }
    }
    Ok(out)
}

pub fn block<T: Real>(m: &CMat<T>, i: usize, j: usize, br: usize, bc: usize) -> CMat<T> {
    m.view((i * br, j * bc), (br, bc)).into_owned()
}

pub fn block_diag<T: Real>(parts: &[&CMat<T>]) -> CMat<T> {
    let r: usize = parts.iter().map(|m| m.nrows()).sum();
    let c: usize = parts.iter().map(|m| m.ncols()).sum();
    let mut out = zeros(r, c);
    let (mut i, mut j) = (0, 0);
    for m in parts {
        out.view_mut((i, j), m.shape()).copy_from(*m);
        i += m.nrows();
        j += m.ncols();
    }
    out
}

pub fn scale<T: Real>(m: &CMat<T>, s: Cx<T>) -> CMat<T> {
    m * s
}

/// `⟨m v, v⟩ = v† m v`.
pub fn quad_form<T: Real>(m: &CMat<T>, v: &CVec<T>) -> Cx<T> {
    v.dotc(&(m * v))
}

pub fn normalize<T: Real>(v: &CVec<T>) -> CVec<T> {
    let n = v.norm();
    if n > T::zero() {
        v * creal(T::one() / n)
    } else {
        v.clone()
    }
}

/// Column-stacked vectorization as a complex column vector.
pub fn vec_of<T: Real>(m: &CMat<T>) -> CVec<T> {
    DVector::from_iterator(m.len(), m.iter().copied())
}

pub fn unvec<T: Real>(v: &[Cx<T>], rows: usize, cols: usize) -> CMat<T> {
    DMatrix::from_column_slice(rows, cols, v)
}

/// Builds a complex matrix from real row-major entries.
pub fn real_matrix<T: Real>(rows: &[&[f64]]) -> CMat<T> {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    DMatrix::from_fn(r, c, |i, j| Complex::new(lit(rows[i][j]), T::zero()))
}

/// Builds a complex matrix from `(re, im)` row-major entries.
pub fn complex_matrix<T: Real>(rows: &[&[(f64, f64)]]) -> CMat<T> {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    DMatrix::from_fn(r, c, |i, j| Complex::new(lit(rows[i][j].0), lit(rows[i][j].1)))
}

/// Matrix unit `e_{ij}` of size `n`.
pub fn unit<T: Real>(n: usize, i: usize, j: usize) -> CMat<T> {
    let mut m = zeros(n, n);
    m[(i, j)] = creal(T::one());
    m
}

pub fn diag_from<T: Real>(d: &[Cx<T>]) -> CMat<T> {
    DMatrix::from_diagonal(&DVector::from_column_slice(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigh_sorts_ascending() {
        let m = real_matrix::<f64>(&[&[3.0, 0.0], &[0.0, -1.0]]);
        let (vals, vecs) = eigh(&m);
        assert_eq!(vals.as_slice(), &[-1.0, 3.0]);
        assert!((vecs[(0, 1)].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn thin_svd_reconstructs_rank_deficient_input() {
        let mut g = crate::rng::derive_rng(5, 0);
        for (rows, cols, rank) in [(9, 9, 3), (6, 4, 2), (4, 7, 1), (5, 5, 5)] {
            let m = crate::rng::gaussian_matrix::<f64>(&mut g, rows, rank) * crate::rng::gaussian_matrix::<f64>(&mut g, rank, cols);
            let svd = thin_svd(&m);
            let d = DMatrix::from_diagonal(&DVector::from_iterator(svd.s.len(), svd.s.iter().map(|&x| creal(x))));
            assert!((&svd.u * d * svd.v.adjoint() - &m).norm() < 1e-12 * (1.0 + m.norm()));
            assert!((svd.max() - op_norm(&m)).abs() < 1e-12 * svd.max());
            assert_eq!(svd.rank_indices(1e-10).len(), rank);
            assert!(svd.s.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn op_norm_of_partial_permutation() {
        let m = real_matrix::<f64>(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!((op_norm(&m) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn general_eigenvalues_sorted() {
        let m = real_matrix::<f64>(&[&[0.0, -1.0], &[1.0, 0.0]]);
        let ev = eigenvalues(&m).unwrap();
        assert!((ev[0].im + 1.0).abs() < 1e-12 && (ev[1].im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt_psd_squares_back() {
        let m = real_matrix::<f64>(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let s = sqrt_psd(&m);
        assert!(max_abs(&(&s * &s - &m)) < 1e-12);
    }

    #[test]
    fn blocks_roundtrip() {
        let a = unit::<f64>(2, 0, 1);
        let z = zeros::<f64>(2, 2);
        let m = from_blocks(&[vec![z.clone(), a.clone()], vec![z.clone(), z]]).unwrap();
        assert_eq!(block(&m, 0, 1, 2, 2), a);
    }
}
