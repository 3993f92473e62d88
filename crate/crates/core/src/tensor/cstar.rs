use crate::error::{Error, Result};
use crate::graded::{is_epsilon_positive, is_superpositive, GradedOperator, GradedSpace};
use crate::linalg;
use crate::scalar::{CMat, Real};

use super::element::TensorElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositivityCheck {
    EpsPositive,
    Superpositive,
}

impl PositivityCheck {
    pub fn name(&self) -> &'static str {
        match self {
            PositivityCheck::EpsPositive => "eps_positive",
            PositivityCheck::Superpositive => "superpositive",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "eps_positive" => Ok(PositivityCheck::EpsPositive),
            "superpositive" => Ok(PositivityCheck::Superpositive),
            other => Err(Error::Unknown { what: "positivity check", value: other.into() }),
        }
    }
}

/// The Kronecker matrix as a graded operator for the grading `ε_A ⊗ ε_B`,
/// moved into a basis where that grading is `diag(1, −1)`.
pub fn product_graded<T: Real>(t: &TensorElement<T>) -> Result<GradedOperator<T>> {
    if t.level() != 1 {
        return Err(Error::InvalidConfig("product grading is formed at matrix level one".into()));
    }
    let ga = t.a_grading().ok_or(Error::MissingGrading("first factor"))?;
    let gb = t.b_grading().ok_or(Error::MissingGrading("second factor"))?;
    let w = linalg::kron(&ga.frame::<T>(), &gb.frame::<T>());
    let (sa, sb) = (ga.signature(), gb.signature());
    let sig: Vec<i8> = sa.iter().flat_map(|&x| sb.iter().map(move |&y| x * y)).collect();
    let order: Vec<usize> = (0..sig.len()).filter(|&i| sig[i] > 0).chain((0..sig.len()).filter(|&i| sig[i] < 0)).collect();
    let p = sig.iter().filter(|&&s| s > 0).count();
    let n = sig.len();
    let mut perm = linalg::zeros::<T>(n, n);
    for (new, &old) in order.iter().enumerate() {
        perm[(old, new)] = crate::scalar::creal(T::one());
    }
    let basis: CMat<T> = w * perm;
    let data = basis.adjoint() * t.kron_matrix() * &basis;
    GradedOperator::new(GradedSpace::diag(p, n - p)?, data)
}

/// Positivity of a tensor of full matrix algebras, where the maximal and
/// spatial tensor products coincide.
pub fn finite_dim_cstar_tensor<T: Real>(t: &TensorElement<T>, check: PositivityCheck, tol: T) -> Result<bool> {
    let x = product_graded(t)?;
    Ok(match check {
        PositivityCheck::EpsPositive => is_epsilon_positive(&x, tol),
        PositivityCheck::Superpositive => is_superpositive(&x, tol),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::real_matrix;

    #[test]
    fn cone_separation_survives_tensoring_with_one() {
        let x = real_matrix::<f64>(&[&[1.0, 1.0], &[-1.0, -1.0]]);
        let t = TensorElement::new(2, 2, vec![(x, linalg::identity(2))])
            .unwrap()
            .with_gradings(Some(GradedSpace::diag(1, 1).unwrap()), Some(GradedSpace::diag(2, 0).unwrap()))
            .unwrap();
        assert!(finite_dim_cstar_tensor(&t, PositivityCheck::EpsPositive, 1e-10).unwrap());
        assert!(!finite_dim_cstar_tensor(&t, PositivityCheck::Superpositive, 1e-10).unwrap());
    }

    #[test]
    fn unit_is_superpositive_but_not_eps_positive_when_graded() {
        let sw = GradedSpace::swap(1).unwrap();
        let t = TensorElement::new(2, 2, vec![(linalg::identity::<f64>(2), linalg::identity(2))])
            .unwrap()
            .with_gradings(Some(sw), Some(sw))
            .unwrap();
        assert!(finite_dim_cstar_tensor(&t, PositivityCheck::Superpositive, 1e-10).unwrap());
        assert!(!finite_dim_cstar_tensor(&t, PositivityCheck::EpsPositive, 1e-10).unwrap());
        let plain = t.ungraded().unwrap();
        assert!(finite_dim_cstar_tensor(&plain, PositivityCheck::EpsPositive, 1e-10).unwrap());
    }
}
