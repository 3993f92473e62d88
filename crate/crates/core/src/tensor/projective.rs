//! Projective norm upper bounds. A decomposition `Σ x_k ⊗ y_k` gives
//! `‖u‖_∧ ≤ Σ ‖x_k‖·‖y_k‖` (take `v = ⊕ x_k/‖x_k‖`, `w = ⊕ y_k/‖y_k‖` and
//! scalar row/column weights `α, β`); the search re-weights the minimal
//! decomposition by invertible changes of basis.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rng::{self, SampleRng};
use crate::scalar::{creal, lit, CMat, Real};

use super::bracket::{Method, NormBracket, TensorConfig, UpperWitness};
use super::element::TensorElement;

struct Basis<T: Real> {
    xs: Vec<CMat<T>>,
    ys: Vec<CMat<T>>,
}

impl<T: Real> Basis<T> {
    fn transformed(&self, g: &CMat<T>) -> Option<Vec<(CMat<T>, CMat<T>)>> {
        let gi = g.clone().try_inverse()?;
        let r = self.xs.len();
        let out = (0..r)
            .map(|k| {
                let x = (0..r).fold(linalg::zeros(self.xs[0].nrows(), self.xs[0].ncols()), |acc, j| acc + &self.xs[j] * g[(j, k)]);
                let y = (0..r).fold(linalg::zeros(self.ys[0].nrows(), self.ys[0].ncols()), |acc, j| acc + &self.ys[j] * gi[(k, j)]);
                (x, y)
            })
            .collect();
        Some(out)
    }

    fn cost(&self, g: &CMat<T>) -> Option<(T, Vec<(CMat<T>, CMat<T>)>)> {
        let terms = self.transformed(g)?;
        let v = terms.iter().fold(T::zero(), |s, (x, y)| s + linalg::op_norm(x) * linalg::op_norm(y));
        v.is_finite().then_some((v, terms))
    }
}

/// Minimal decomposition `Σ x_k ⊗ y_k` of a level-one element.
fn minimal_terms<T: Real>(t: &TensorElement<T>) -> Option<Basis<T>> {
    let (a, b) = (t.a_dim(), t.b_dim());
    let r = t.coefficient_matrix();
    let svd = linalg::thin_svd(&r);
    if svd.max() == T::zero() {
        return None;
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for k in svd.rank_indices(lit(1e-12)) {
        let h = creal(svd.s[k].sqrt());
        let col: Vec<_> = svd.u.column(k).iter().map(|z| *z * h).collect();
        let row: Vec<_> = svd.v.column(k).iter().map(|z| z.conj() * h).collect();
        xs.push(linalg::unvec(&col, a, a));
        ys.push(linalg::unvec(&row, b, b));
    }
    Some(Basis { xs, ys })
}

fn local_search<T: Real>(basis: &Basis<T>, start: CMat<T>, steps: usize, rng: &mut SampleRng) -> Option<(T, Vec<(CMat<T>, CMat<T>)>)> {
    let r = start.nrows();
    let mut g = start;
    let mut best = basis.cost(&g)?;
    let mut step = lit::<T>(0.3);
    for _ in 0..steps {
        let z = rng::gaussian_matrix::<T>(rng, r, r);
        let z = &z * creal(step / linalg::op_norm(&z).max(lit(1e-300)));
        let cand = &g * (linalg::identity::<T>(r) + z);
        match basis.cost(&cand) {
            Some(c) if c.0 < best.0 => {
                g = cand;
                best = c;
                step = (step * lit(1.3)).min(T::one());
            }
            _ => {
                step *= lit(0.8);
                if step < lit(1e-7) {
                    step = lit(0.3);
                }
            }
        }
    }
    Some(best)
}

/// Projective norm bracket of a level-one element.
pub fn projective_norm<T: Real>(t: &TensorElement<T>, cfg: &TensorConfig) -> Result<NormBracket<T>> {
    cfg.validate()?;
    if t.level() != 1 {
        return Err(Error::InvalidConfig("projective norms are computed at matrix level one".into()));
    }
    let lower = t.injective_norm();
    let note = "spatial: operator norm of the Kronecker matrix".to_string();
    let given: Vec<_> = t.terms().iter().map(|x| (x.a.clone(), x.b.clone())).collect();
    let mut best_terms = given;
    let mut best = UpperWitness::Terms(best_terms.clone()).value();

    if let Some(basis) = minimal_terms(t) {
        let r = basis.xs.len();
        for restart in 0..cfg.restarts {
            let mut g = rng::derive_rng(cfg.seed, restart as u64);
            let start = if restart == 0 {
                linalg::identity::<T>(r)
            } else {
                linalg::identity::<T>(r) + rng::gaussian_matrix::<T>(&mut g, r, r) * creal(lit::<T>(0.5))
            };
            if let Some((v, terms)) = local_search(&basis, start, cfg.iterations, &mut g) {
                if v < best {
                    best = v;
                    best_terms = terms;
                }
            }
        }
    } else {
        return Ok(NormBracket { lower, upper: T::zero(), method: Method::FactorizationSearch, upper_witness: UpperWitness::Zero, lower_witness: note });
    }
    let witness = UpperWitness::Terms(best_terms);
    Ok(NormBracket { lower, upper: witness.value(), method: Method::FactorizationSearch, upper_witness: witness, lower_witness: note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    #[test]
    fn elementary_and_identity_are_exact() {
        let a = linalg::complex_matrix::<f64>(&[&[(1.0, 0.0), (2.0, 1.0)], &[(0.0, 0.0), (-1.0, 0.5)]]);
        let b = linalg::real_matrix::<f64>(&[&[3.0, 0.0], &[1.0, 1.0]]);
        let t = TensorElement::new(2, 2, vec![(a.clone(), b.clone())]).unwrap();
        let br = projective_norm(&t, &TensorConfig::default()).unwrap();
        let want = linalg::op_norm(&a) * linalg::op_norm(&b);
        assert!((br.upper - want).abs() < 1e-9 && (br.lower - want).abs() < 1e-9);

        let one = TensorElement::new(2, 2, vec![(linalg::identity::<f64>(2), linalg::identity(2) * cx(1.0, 0.0))]).unwrap();
        let br = projective_norm(&one, &TensorConfig::default()).unwrap();
        assert!((br.upper - 1.0).abs() < 1e-12);
    }

    #[test]
    fn search_improves_a_redundant_decomposition() {
        let e = |i, j| linalg::unit::<f64>(2, i, j);
        // (e11 + e22) ⊗ e11 written redundantly.
        let t = TensorElement::new(2, 2, vec![(e(0, 0), e(0, 0)), (e(1, 1), e(0, 0))]).unwrap();
        let br = projective_norm(&t, &TensorConfig::default()).unwrap();
        assert!((br.upper - 1.0).abs() < 1e-9, "{br:?}");
    }
}
