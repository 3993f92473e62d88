//! Haagerup norms. For a fixed minimal decomposition `u = X ⊙ Y` every other
//! one of the same length is `X(G ⊗ 1) ⊙ (G⁻¹ ⊗ 1)Y`, and the product of the
//! two norms depends on `G` only through `P = GG†`. Minimizing
//! `½(λ_max(X(P⊗1)X†) + λ_max(Y†(P⁻¹⊗1)Y))` is a semidefinite program.

use crate::error::Result;
use crate::linalg;
use crate::rng;
use crate::scalar::{creal, lit, CMat, Real};

use super::bracket::{Method, NormBracket, TensorConfig, UpperWitness};
use super::element::TensorElement;
use super::lmi::{hermitian_basis, hermitian_from_coords, identity_coords, LmiBlock, LmiConfig, LmiProblem};
use super::star::{star_tensor, StarMode};

const RANK_TOL: f64 = 1e-12;

/// Balanced factorization `R = L·Rt` from a truncated SVD.
fn low_rank_split<T: Real>(r: &CMat<T>) -> Option<(CMat<T>, CMat<T>)> {
    let svd = linalg::thin_svd(r);
    if svd.max() == T::zero() {
        return None;
    }
    let keep = svd.rank_indices(lit(RANK_TOL));
    let mut left = linalg::zeros::<T>(r.nrows(), keep.len());
    let mut right = linalg::zeros::<T>(keep.len(), r.ncols());
    for (c, &k) in keep.iter().enumerate() {
        let s = creal(svd.s[k].sqrt());
        left.set_column(c, &(svd.u.column(k) * s));
        right.set_row(c, &(svd.v.column(k).adjoint() * s));
    }
    Some((left, right))
}

/// Row operator `X` (`n·a × r·a`) and column operator `Y` (`r·b × n·b`) from
/// coefficient factors `L` (`n·a² × r`) and `Rt` (`r × b²·n`).
pub(crate) fn factor_operators<T: Real>(
    left: &CMat<T>,
    right: &CMat<T>,
    a: usize,
    b: usize,
    level: usize,
) -> (CMat<T>, CMat<T>) {
    let r = left.ncols();
    let (a2, b2) = (a * a, b * b);
    let mut x = linalg::zeros::<T>(level * a, r * a);
    let mut y = linalg::zeros::<T>(r * b, level * b);
    for k in 0..r {
        for i in 0..level {
            let col: Vec<_> = (0..a2).map(|p| left[(i * a2 + p, k)]).collect();
            x.view_mut((i * a, k * a), (a, a)).copy_from(&linalg::unvec(&col, a, a));
        }
        for j in 0..level {
            let row: Vec<_> = (0..b2).map(|q| right[(k, j * b2 + q)]).collect();
            y.view_mut((k * b, j * b), (b, b)).copy_from(&linalg::unvec(&row, b, b));
        }
    }
    (x, y)
}

/// `Σ_{ijk} e_ij ⊗ X_ik ⊗ Y_kj`, the element a factorization represents.
pub fn factorization_matrix<T: Real>(left: &CMat<T>, right: &CMat<T>, a: usize, b: usize) -> CMat<T> {
    let level = left.nrows() / a;
    let r = left.ncols() / a;
    let ab = a * b;
    let mut out = linalg::zeros::<T>(level * ab, level * ab);
    for i in 0..level {
        for j in 0..level {
            for k in 0..r {
                let xk = left.view((i * a, k * a), (a, a)).into_owned();
                let yk = right.view((k * b, j * b), (b, b)).into_owned();
                let mut blk = out.view_mut((i * ab, j * ab), (ab, ab));
                blk += linalg::kron(&xk, &yk);
            }
        }
    }
    out
}

/// Invertible `G` (`r × r`) minimizing `‖X(G ⊗ 1_a)‖ · ‖(G⁻¹ ⊗ 1_b)Y‖`, where
/// `X` has `r·a` columns and `Y` has `r·b` rows.
pub(crate) fn optimal_link<T: Real>(x: &CMat<T>, y: &CMat<T>, r: usize, max_newton: usize) -> Result<CMat<T>> {
    let a = x.ncols() / r;
    let b = y.nrows() / r;
    let (nx, ny) = (linalg::op_norm(x), linalg::op_norm(y));
    if nx == T::zero() || ny == T::zero() {
        return Ok(linalg::identity(r));
    }
    let x = x * creal(T::one() / nx);
    let y = y * creal(T::one() / ny);
    let basis = hermitian_basis::<T>(r);
    let nb = basis.len();
    let (ia, ib) = (linalg::identity::<T>(a), linalg::identity::<T>(b));
    let (da, db) = (x.nrows(), y.ncols());
    let (s_idx, t_idx, p0, q0) = (0, 1, 2, 2 + nb);

    let mut left_terms = vec![(s_idx, linalg::identity::<T>(da))];
    let mut right_terms = vec![(t_idx, linalg::identity::<T>(db))];
    let mut link_terms = Vec::with_capacity(2 * nb);
    let z = linalg::zeros::<T>(r, r);
    for (i, h) in basis.iter().enumerate() {
        left_terms.push((p0 + i, -(&x * linalg::kron(h, &ia) * x.adjoint())));
        right_terms.push((q0 + i, -(y.adjoint() * linalg::kron(h, &ib) * &y)));
        link_terms.push((p0 + i, linalg::block_diag(&[&z, h])));
        link_terms.push((q0 + i, linalg::block_diag(&[h, &z])));
    }
    let id = linalg::identity::<T>(r);
    let link_const = linalg::from_blocks(&[vec![z.clone(), id.clone()], vec![id, z.clone()]])?;
    let problem = LmiProblem {
        cost: [vec![lit(0.5), lit(0.5)], vec![T::zero(); 2 * nb]].concat(),
        blocks: vec![
            LmiBlock { constant: linalg::zeros(da, da), terms: left_terms },
            LmiBlock { constant: linalg::zeros(db, db), terms: right_terms },
            LmiBlock { constant: link_const, terms: link_terms },
        ],
    };
    // P = 1, Q = 2·1 is strictly inside every block.
    let x0 = [vec![lit(2.0), lit(3.0)], identity_coords(r, T::one()), identity_coords(r, lit(2.0))].concat();
    let cfg = LmiConfig { max_newton, ..LmiConfig::default() };
    let sol = problem.solve(x0, &cfg)?;
    let p = hermitian_from_coords(&sol.x[p0..q0], r);
    let p = (&p + p.adjoint()) * creal(lit::<T>(0.5));
    match linalg::cholesky_lower(&p) {
        Some(l) => Ok(l),
        None => Err(crate::error::Error::Numerical("optimal gram matrix is not positive definite".into())),
    }
}

/// `X(G ⊗ 1)` and `(G⁻¹ ⊗ 1)Y`, rescaled to equal norms.
pub(crate) fn apply_link<T: Real>(x: &CMat<T>, y: &CMat<T>, g: &CMat<T>) -> Option<(CMat<T>, CMat<T>)> {
    let r = g.nrows();
    let a = x.ncols() / r;
    let b = y.nrows() / r;
    let gi = g.clone().try_inverse()?;
    let xs = x * linalg::kron(g, &linalg::identity(a));
    let ys = linalg::kron(&gi, &linalg::identity(b)) * y;
    let (nx, ny) = (linalg::op_norm(&xs), linalg::op_norm(&ys));
    if !(nx > T::zero() && ny > T::zero()) {
        return Some((xs, ys));
    }
    let s = (ny / nx).sqrt();
    Some((xs * creal(s), ys * creal(T::one() / s)))
}

fn spatial_note() -> String {
    "spatial: operator norm of the Kronecker matrix".into()
}

/// Best factorization reachable from coefficient factors `L`, `Rt`: the
/// identity link or the barrier-optimal one, whichever is smaller.
fn best_factorization<T: Real>(
    left: &CMat<T>,
    right: &CMat<T>,
    t: &TensorElement<T>,
    max_newton: usize,
) -> (T, CMat<T>, CMat<T>) {
    let r = left.ncols();
    let (x0, y0) = factor_operators(left, right, t.a_dim(), t.b_dim(), t.level());
    let mut best = apply_link(&x0, &y0, &linalg::identity(r)).expect("identity is invertible");
    let mut best_val = linalg::op_norm(&best.0) * linalg::op_norm(&best.1);
    if let Ok(g) = optimal_link(&x0, &y0, r, max_newton) {
        if let Some(cand) = apply_link(&x0, &y0, &g) {
            let v = linalg::op_norm(&cand.0) * linalg::op_norm(&cand.1);
            if v < best_val {
                best = cand;
                best_val = v;
            }
        }
    }
    (best_val, best.0, best.1)
}

/// Minimal decomposition extended by `pairs` cancelling pairs `c ⊗ d`, `c ⊗ (−d)`.
fn padded<T: Real>(left: &CMat<T>, right: &CMat<T>, pairs: usize, seed: u64) -> (CMat<T>, CMat<T>) {
    let mut g = rng::derive_rng(seed, u64::MAX);
    let r0 = left.ncols();
    let mut left = left.clone().resize_horizontally(r0 + 2 * pairs, creal(T::zero()));
    let mut right = right.clone().resize_vertically(r0 + 2 * pairs, creal(T::zero()));
    for k in 0..pairs {
        let c = rng::gaussian_vector::<T>(&mut g, left.nrows());
        let d = rng::gaussian_vector::<T>(&mut g, right.ncols()).transpose();
        left.set_column(r0 + 2 * k, &c);
        left.set_column(r0 + 2 * k + 1, &c);
        right.set_row(r0 + 2 * k, &d);
        right.set_row(r0 + 2 * k + 1, &(-d));
    }
    (left, right)
}

/// Haagerup norm bracket at the element's own matrix level. With padding the
/// longer decomposition is searched as well and the smaller bound kept.
pub fn haagerup_norm<T: Real>(t: &TensorElement<T>, cfg: &TensorConfig) -> Result<NormBracket<T>> {
    cfg.validate()?;
    let lower = t.injective_norm();
    let Some((left, right)) = low_rank_split(&t.coefficient_matrix()) else {
        return Ok(NormBracket {
            lower,
            upper: T::zero(),
            method: Method::ConvexFactorization,
            upper_witness: UpperWitness::Zero,
            lower_witness: spatial_note(),
        });
    };
    let budget = 10 * cfg.iterations;
    let mut best = best_factorization(&left, &right, t, budget);
    if cfg.padding > 0 {
        let (pl, pr) = padded(&left, &right, cfg.padding, cfg.seed);
        let cand = best_factorization(&pl, &pr, t, budget);
        if cand.0 < best.0 {
            best = cand;
        }
    }
    Ok(NormBracket {
        lower,
        upper: best.0,
        method: Method::ConvexFactorization,
        upper_witness: UpperWitness::Factorization { left: best.1, right: best.2 },
        lower_witness: spatial_note(),
    })
}

/// `max(‖t‖_h, ‖t*‖_h)` with the product involution.
pub fn symmetrized_haagerup<T: Real>(t: &TensorElement<T>, cfg: &TensorConfig) -> Result<NormBracket<T>> {
    let s = star_tensor(t, StarMode::Product)?;
    let h = haagerup_norm(t, cfg)?;
    let hs = haagerup_norm(&s, cfg)?;
    let lower = h.lower.max(hs.lower);
    let (upper, witness, which) = if hs.upper > h.upper {
        (hs.upper, hs.upper_witness, "involute")
    } else {
        (h.upper, h.upper_witness, "element")
    };
    Ok(NormBracket {
        lower,
        upper,
        method: Method::ConvexFactorization,
        upper_witness: witness,
        lower_witness: format!("{}; upper attained by the {which}", spatial_note()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    fn e(n: usize, i: usize, j: usize) -> CMat<f64> {
        linalg::unit(n, i, j)
    }

    #[test]
    fn flip_sum_has_norm_one() {
        for n in [2, 3] {
            let t = TensorElement::new(n, n, (0..n).map(|i| (e(n, i, 0), e(n, 0, i))).collect()).unwrap();
            let br = haagerup_norm(&t, &TensorConfig::default()).unwrap();
            assert!((br.upper - 1.0).abs() < 1e-6 && (br.lower - 1.0).abs() < 1e-6, "{n}: {br:?}");
        }
    }

    #[test]
    fn transposed_flip_sum_has_norm_n() {
        let n = 3;
        let t = TensorElement::new(n, n, (0..n).map(|i| (e(n, 0, i), e(n, i, 0))).collect()).unwrap();
        let br = haagerup_norm(&t, &TensorConfig::default()).unwrap();
        assert!((br.upper - 3.0).abs() < 1e-6, "{br:?}");
    }

    #[test]
    fn witness_reproduces_element_and_bound() {
        let mut g = rng::derive_rng(5, 0);
        let f = (0..3).map(|_| (rng::gaussian_matrix::<f64>(&mut g, 2, 2), rng::gaussian_matrix::<f64>(&mut g, 3, 3)));
        let t = TensorElement::new(2, 3, f.collect()).unwrap();
        let br = haagerup_norm(&t, &TensorConfig::default()).unwrap();
        let UpperWitness::Factorization { left, right } = &br.upper_witness else { panic!() };
        let k = factorization_matrix(left, right, 2, 3);
        assert!(linalg::max_abs(&(k - t.kron_matrix())) < 1e-10);
        assert!((br.upper_witness.value() - br.upper).abs() < 1e-12);
        assert!(br.lower <= br.upper + 1e-12);
    }

    #[test]
    fn padding_does_not_change_the_value() {
        let t = TensorElement::new(2, 2, vec![(e(2, 0, 0), e(2, 0, 0)), (e(2, 1, 1) * cx(0.0, 1.0), e(2, 1, 1))]).unwrap();
        let plain = haagerup_norm(&t, &TensorConfig::default()).unwrap();
        let padded = haagerup_norm(&t, &TensorConfig { padding: 1, ..Default::default() }).unwrap();
        assert!((plain.upper - 1.0).abs() < 1e-6);
        assert!(padded.upper <= plain.upper);
    }
}
