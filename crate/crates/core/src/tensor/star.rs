use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::scalar::{CMat, Real};

use super::element::{Term, TensorElement};

/// The three involutions on tensor elements. Each transposes matrix levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarMode {
    /// `a ⊗ b ↦ a* ⊗ b*`.
    Product,
    /// `a ⊗ b ↦ b* ⊗ a*`, factor spaces exchanged.
    HaagerupFlip,
    /// `a ⊗ b ↦ b† ⊗ a†` with ordinary adjoints; both factors must have the same size.
    AdjointSpace,
}

impl StarMode {
    pub const ALL: [StarMode; 3] = [StarMode::Product, StarMode::HaagerupFlip, StarMode::AdjointSpace];

    pub fn name(&self) -> &'static str {
        match self {
            StarMode::Product => "product",
            StarMode::HaagerupFlip => "haagerup_flip",
            StarMode::AdjointSpace => "adjoint_space",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(Error::Unknown { what: "star mode", value: s })
    }
}

fn superinvolve<T: Real>(m: &CMat<T>, space: &GradedSpace) -> CMat<T> {
    let e = space.epsilon::<T>();
    &e * m.adjoint() * &e
}

pub fn star_tensor<T: Real>(t: &TensorElement<T>, mode: StarMode) -> Result<TensorElement<T>> {
    let (ga, gb) = (t.a_grading(), t.b_grading());
    let need = |g: Option<GradedSpace>, which| g.ok_or(Error::MissingGrading(which));
    let (a_dim, b_dim, level) = (t.a_dim(), t.b_dim(), t.level());
    match mode {
        StarMode::Product => {
            let (sa, sb) = (need(ga, "first factor")?, need(gb, "second factor")?);
            let terms = t
                .terms()
                .iter()
                .map(|x| Term { a: superinvolve(&x.a, &sa), b: superinvolve(&x.b, &sb), row: x.col, col: x.row })
                .collect();
            TensorElement::with_terms(a_dim, b_dim, level, terms)?.with_gradings(ga, gb)
        }
        StarMode::HaagerupFlip => {
            let (sa, sb) = (need(ga, "first factor")?, need(gb, "second factor")?);
            let terms = t
                .terms()
                .iter()
                .map(|x| Term { a: superinvolve(&x.b, &sb), b: superinvolve(&x.a, &sa), row: x.col, col: x.row })
                .collect();
            TensorElement::with_terms(b_dim, a_dim, level, terms)?.with_gradings(gb, ga)
        }
        StarMode::AdjointSpace => {
            if a_dim != b_dim {
                return Err(Error::DimMismatch(format!("adjoint_space needs equal factor sizes, got {a_dim} and {b_dim}")));
            }
            let terms = t
                .terms()
                .iter()
                .map(|x| Term { a: x.b.adjoint(), b: x.a.adjoint(), row: x.col, col: x.row })
                .collect();
            TensorElement::with_terms(b_dim, a_dim, level, terms)?.with_gradings(gb, ga)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;
    use crate::rng;

    fn sample(seed: u64) -> TensorElement<f64> {
        let mut g = rng::derive_rng(seed, 0);
        let f = (0..2).map(|_| (rng::gaussian_matrix(&mut g, 3, 3), rng::gaussian_matrix(&mut g, 3, 3)));
        TensorElement::new(3, 3, f.collect())
            .unwrap()
            .with_gradings(Some(GradedSpace::diag(2, 1).unwrap()), Some(GradedSpace::diag(1, 2).unwrap()))
            .unwrap()
    }

    #[test]
    fn every_mode_is_involutive() {
        let t = sample(1);
        for mode in StarMode::ALL {
            let back = star_tensor(&star_tensor(&t, mode).unwrap(), mode).unwrap();
            assert!(back.distance(&t).unwrap() < 1e-14, "{mode:?}");
        }
    }

    #[test]
    fn product_mode_keeps_injective_norm() {
        let t = sample(2);
        let s = star_tensor(&t, StarMode::Product).unwrap();
        assert!((t.injective_norm() - s.injective_norm()).abs() < 1e-12);
    }

    #[test]
    fn missing_grading_is_an_error() {
        let t = TensorElement::new(2, 2, vec![(linalg::identity::<f64>(2), linalg::identity(2))]).unwrap();
        assert!(matches!(star_tensor(&t, StarMode::Product), Err(Error::MissingGrading(_))));
        assert!(star_tensor(&t, StarMode::AdjointSpace).is_ok());
    }
}
