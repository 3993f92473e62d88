use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::linalg;
use crate::scalar::{CMat, Real};

/// One summand `e_{row,col} ⊗ a ⊗ b` of a matrix-level tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Term<T: Real> {
    pub a: CMat<T>,
    pub b: CMat<T>,
    pub row: usize,
    pub col: usize,
}

/// An element of `M_level(M_a ⊗ M_b)` stored as a sum of elementary terms.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElement<T: Real> {
    a_dim: usize,
    b_dim: usize,
    level: usize,
    a_grading: Option<GradedSpace>,
    b_grading: Option<GradedSpace>,
    terms: Vec<Term<T>>,
}

impl<T: Real> TensorElement<T> {
    /// `Σ a_k ⊗ b_k` at level one.
    pub fn new(a_dim: usize, b_dim: usize, factors: Vec<(CMat<T>, CMat<T>)>) -> Result<Self> {
        let terms = factors.into_iter().map(|(a, b)| Term { a, b, row: 0, col: 0 }).collect();
        Self::with_terms(a_dim, b_dim, 1, terms)
    }

    pub fn with_terms(a_dim: usize, b_dim: usize, level: usize, terms: Vec<Term<T>>) -> Result<Self> {
        if a_dim == 0 || b_dim == 0 || level == 0 {
            return Err(Error::EmptyDim);
        }
        if terms.is_empty() {
            return Err(Error::EmptyFactors);
        }
        for t in &terms {
            if t.a.shape() != (a_dim, a_dim) || t.b.shape() != (b_dim, b_dim) {
                return Err(Error::DimMismatch(format!(
                    "factor shapes {:?} and {:?} for dims ({a_dim}, {b_dim})",
                    t.a.shape(),
                    t.b.shape()
                )));
            }
            if t.row >= level || t.col >= level {
                return Err(Error::DimMismatch(format!("block index ({}, {}) outside level {level}", t.row, t.col)));
            }
            if !linalg::all_finite(&t.a) || !linalg::all_finite(&t.b) {
                return Err(Error::NonFinite);
            }
        }
        Ok(Self { a_dim, b_dim, level, a_grading: None, b_grading: None, terms })
    }

    /// Attaches gradings to the two factor spaces.
    pub fn with_gradings(mut self, a: Option<GradedSpace>, b: Option<GradedSpace>) -> Result<Self> {
        for (g, d) in [(a, self.a_dim), (b, self.b_dim)] {
            if let Some(g) = g {
                if g.size() != d {
                    return Err(Error::DimMismatch(format!("grading of size {} on a factor of size {d}", g.size())));
                }
            }
        }
        self.a_grading = a;
        self.b_grading = b;
        Ok(self)
    }

    /// Both factors ungraded (`ε = 1`), so the superinvolution is the adjoint.
    pub fn ungraded(self) -> Result<Self> {
        let (a, b) = (self.a_dim, self.b_dim);
        self.with_gradings(Some(GradedSpace::diag(a, 0)?), Some(GradedSpace::diag(b, 0)?))
    }

    pub fn a_dim(&self) -> usize {
        self.a_dim
    }

    pub fn b_dim(&self) -> usize {
        self.b_dim
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn a_grading(&self) -> Option<GradedSpace> {
        self.a_grading
    }

    pub fn b_grading(&self) -> Option<GradedSpace> {
        self.b_grading
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    /// `Σ e_{ij} ⊗ a ⊗ b` as a square matrix of size `level · a_dim · b_dim`.
    pub fn kron_matrix(&self) -> CMat<T> {
        let ab = self.a_dim * self.b_dim;
        let mut out = linalg::zeros::<T>(self.level * ab, self.level * ab);
        for t in &self.terms {
            let k = linalg::kron(&t.a, &t.b);
            let mut v = out.view_mut((t.row * ab, t.col * ab), (ab, ab));
            v += &k;
        }
        out
    }

    /// Operator norm of the Kronecker matrix, the spatial (minimal) norm.
    pub fn injective_norm(&self) -> T {
        linalg::op_norm(&self.kron_matrix())
    }

    /// Coefficient matrix with rows `(i, p)` and columns `(q, j)`, where `p`
    /// and `q` run over the column-stacked entries of the two factors.
    pub fn coefficient_matrix(&self) -> CMat<T> {
        let (a2, b2) = (self.a_dim * self.a_dim, self.b_dim * self.b_dim);
        let mut r = linalg::zeros::<T>(self.level * a2, b2 * self.level);
        for t in &self.terms {
            let va = linalg::vec_of(&t.a);
            let vb = linalg::vec_of(&t.b);
            for p in 0..a2 {
                for q in 0..b2 {
                    r[(t.row * a2 + p, t.col * b2 + q)] += va[p] * vb[q];
                }
            }
        }
        r
    }

    /// Scalar multiple.
    pub fn scaled(&self, s: crate::scalar::Cx<T>) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.a *= s;
        }
        out
    }

    /// Entrywise difference of the Kronecker matrices, in max-entry norm.
    pub fn distance(&self, other: &Self) -> Result<T> {
        if (self.a_dim, self.b_dim, self.level) != (other.a_dim, other.b_dim, other.level) {
            return Err(Error::DimMismatch("tensor elements of different shapes".into()));
        }
        Ok(linalg::max_abs(&(self.kron_matrix() - other.kron_matrix())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_sum_is_a_partial_permutation() {
        let u = |i, j| linalg::unit::<f64>(2, i, j);
        let t = TensorElement::new(2, 2, vec![(u(0, 0), u(0, 0)), (u(1, 0), u(0, 1))]).unwrap();
        assert!((t.injective_norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_empty_and_misshapen() {
        assert_eq!(TensorElement::<f64>::new(2, 2, vec![]), Err(Error::EmptyFactors));
        let bad = TensorElement::new(2, 2, vec![(linalg::identity::<f64>(3), linalg::identity::<f64>(2))]);
        assert!(bad.is_err());
    }
}
