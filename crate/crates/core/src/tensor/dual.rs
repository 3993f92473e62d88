use crate::error::{Error, Result};
use crate::linalg;
use crate::rng;
use crate::scalar::{cabs, CMat, Cx, Real};

use super::bracket::{Method, NormBracket, TensorConfig};
use super::element::TensorElement;
use super::haagerup::haagerup_norm;
use super::projective::projective_norm;

/// Largest `a_dim · b_dim` accepted.
pub const DUAL_DIM_CAP: usize = 16;

const FUNCTIONAL_STREAM: u64 = 0x0d0a_1000;

/// `⟨t, Σ F_l ⊗ G_l⟩ = Σ_{k,l} tr(F_l a_k) tr(G_l b_k)`.
fn pairing<T: Real>(t: &TensorElement<T>, fs: &[(CMat<T>, CMat<T>)]) -> Cx<T> {
    let mut s = Cx::new(T::zero(), T::zero());
    for term in t.terms() {
        for (f, g) in fs {
            s += (f * &term.a).trace() * (g * &term.b).trace();
        }
    }
    s
}

/// Bracket for the dual symmetrized Haagerup norm of a level-one element.
/// The upper end is the smaller of the Haagerup and projective uppers. The
/// lower end is the spatial norm or the best sampled functional, each
/// functional scaled by `Σ ‖F_l‖₁‖G_l‖₁`, which dominates its norm in the
/// symmetrized Haagerup product of the duals.
pub fn dual_symmetrized_haagerup<T: Real>(t: &TensorElement<T>, cfg: &TensorConfig) -> Result<NormBracket<T>> {
    let (a, b) = (t.a_dim(), t.b_dim());
    if a * b > DUAL_DIM_CAP {
        return Err(Error::DimensionCap(format!("a_dim·b_dim = {} exceeds {DUAL_DIM_CAP}", a * b)));
    }
    if t.level() != 1 {
        return Err(Error::InvalidConfig("dual symmetrized norms are computed at matrix level one".into()));
    }
    let h = haagerup_norm(t, cfg)?;
    let p = projective_norm(t, cfg)?;
    let up = if p.upper < h.upper { p } else { h };

    let spatial = t.injective_norm();
    let mut sampled = T::zero();
    for s in 0..cfg.restarts * 4 {
        let mut g = rng::derive_rng(cfg.seed ^ FUNCTIONAL_STREAM, s as u64);
        let rank = 1 + s % 2;
        let fs: Vec<_> = (0..rank).map(|_| (rng::gaussian_matrix::<T>(&mut g, a, a), rng::gaussian_matrix::<T>(&mut g, b, b))).collect();
        let scale = fs.iter().fold(T::zero(), |acc, (f, g)| acc + linalg::trace_norm(f) * linalg::trace_norm(g));
        if scale > T::zero() {
            sampled = sampled.max(cabs(pairing(t, &fs)) / scale);
        }
    }
    let (lower, note) = if sampled > spatial {
        (sampled, "sampled dual functional")
    } else {
        (spatial, "spatial: operator norm of the Kronecker matrix")
    };
    Ok(NormBracket {
        lower,
        upper: up.upper,
        method: Method::HeuristicDualLower,
        upper_witness: up.upper_witness,
        lower_witness: format!("{note} ({} functionals sampled)", cfg.restarts * 4),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_bracket_contains_one() {
        let t = TensorElement::new(2, 2, vec![(linalg::identity::<f64>(2), linalg::identity(2))]).unwrap();
        let br = dual_symmetrized_haagerup(&t, &TensorConfig::default()).unwrap();
        assert!(br.contains(1.0, 1e-9));
    }

    #[test]
    fn cap_is_enforced() {
        let t = TensorElement::new(5, 4, vec![(linalg::identity::<f64>(5), linalg::identity(4))]).unwrap();
        assert!(matches!(dual_symmetrized_haagerup(&t, &TensorConfig::default()), Err(Error::DimensionCap(_))));
    }
}
