use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{creal, lit, CMat, Cx, Real};

use super::space::GradedSpace;
use super::unitary::OmegaUnitary;

/// A bounded operator on a graded space, possibly at a matrix level above one.
///
/// At level `n` the matrix is read as an `n × n` grid of base-size blocks and
/// the grading is `I_n ⊗ ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedOperator<T: Real> {
    space: GradedSpace,
    data: CMat<T>,
}

impl<T: Real> GradedOperator<T> {
    pub fn new(space: GradedSpace, data: CMat<T>) -> Result<Self> {
        let n = linalg::ensure_square(&data)?;
        if n != space.size() {
            return Err(Error::DimMismatch(format!(
                "matrix is {n}x{n} but the space has dimension {}",
                space.size()
            )));
        }
        if !linalg::all_finite(&data) {
            return Err(Error::NonFinite);
        }
        Ok(Self { space, data })
    }

    pub fn identity(space: GradedSpace) -> Self {
        Self { space, data: linalg::identity(space.size()) }
    }

    pub fn zero(space: GradedSpace) -> Self {
        Self { space, data: linalg::zeros(space.size(), space.size()) }
    }

    /// The grading operator itself.
    pub fn grading(space: GradedSpace) -> Self {
        Self { space, data: space.epsilon() }
    }

    /// Builds a level-`n` operator from an `n × n` grid of operators on one space.
    pub fn from_blocks(blocks: &[Vec<GradedOperator<T>>]) -> Result<Self> {
        let first = blocks.first().and_then(|r| r.first()).ok_or(Error::EmptyDim)?;
        let space = first.space;
        let mut grid = Vec::with_capacity(blocks.len());
        for row in blocks {
            if row.len() != blocks.len() {
                return Err(Error::DimMismatch("block grid must be square".into()));
            }
            let mut r = Vec::with_capacity(row.len());
            for b in row {
                space.check_same(&b.space)?;
                r.push(b.data.clone());
            }
            grid.push(r);
        }
        Ok(Self { space: space.amplified(blocks.len()), data: linalg::from_blocks(&grid)? })
    }

    /// Block `(i, j)` of the grid when read at the base level.
    pub fn block(&self, i: usize, j: usize) -> Self {
        let b = self.space.base_size();
        Self { space: self.space.base(), data: linalg::block(&self.data, i, j, b, b) }
    }

    pub fn space(&self) -> GradedSpace {
        self.space
    }

    pub fn data(&self) -> &CMat<T> {
        &self.data
    }

    pub fn into_data(self) -> CMat<T> {
        self.data
    }

    pub fn size(&self) -> usize {
        self.data.nrows()
    }

    pub fn epsilon(&self) -> CMat<T> {
        self.space.epsilon()
    }

    /// Same space, new matrix. The caller guarantees the shape.
    pub(crate) fn with_data(&self, data: CMat<T>) -> Self {
        debug_assert_eq!(data.shape(), self.data.shape());
        Self { space: self.space, data }
    }

    pub fn check_same_space(&self, other: &Self) -> Result<()> {
        self.space.check_same(&other.space)
    }

    pub fn op_norm(&self) -> T {
        linalg::op_norm(&self.data)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        Ok(self.with_data(&self.data + &other.data))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        Ok(self.with_data(&self.data - &other.data))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        Ok(self.with_data(&self.data * &other.data))
    }

    pub fn scale(&self, s: Cx<T>) -> Self {
        self.with_data(&self.data * s)
    }

    /// Ordinary adjoint.
    pub fn adjoint(&self) -> Self {
        self.with_data(self.data.adjoint())
    }

    /// `x* = ε x† ε`.
    pub fn superinvolve(&self) -> Self {
        let e = self.epsilon();
        self.with_data(&e * self.data.adjoint() * &e)
    }

    /// `ω x† ω`.
    pub fn omega_involve(&self, w: &OmegaUnitary<T>) -> Result<Self> {
        self.space.check_same(&w.space())?;
        let m = w.matrix();
        Ok(self.with_data(&m * self.data.adjoint() * &m))
    }

    /// Grading automorphism `x ↦ ε x ε`.
    pub fn grade_flip(&self) -> Self {
        let e = self.epsilon();
        self.with_data(&e * &self.data * &e)
    }

    pub fn even_part(&self) -> Self {
        let half = creal(lit::<T>(0.5));
        self.with_data((&self.data + self.grade_flip().data) * half)
    }

    pub fn odd_part(&self) -> Self {
        let half = creal(lit::<T>(0.5));
        self.with_data((&self.data - self.grade_flip().data) * half)
    }

    /// Hermitian with respect to the superinvolution, in max-entry norm.
    pub fn is_hermitian(&self, tol: T) -> bool {
        linalg::max_abs(&(&self.data - self.superinvolve().data)) <= tol
    }

    pub fn is_omega_hermitian(&self, w: &OmegaUnitary<T>, tol: T) -> Result<bool> {
        let inv = self.omega_involve(w)?;
        Ok(linalg::max_abs(&(&self.data - inv.data)) <= tol)
    }

    /// `(x + x*)/2`.
    pub fn hermitian_part(&self) -> Self {
        let half = creal(lit::<T>(0.5));
        self.with_data((&self.data + self.superinvolve().data) * half)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::real_matrix;

    fn sp() -> GradedSpace {
        GradedSpace::diag(1, 1).unwrap()
    }

    #[test]
    fn superinvolution_of_nilpotent() {
        let x = GradedOperator::new(sp(), real_matrix::<f64>(&[&[0.0, 1.0], &[0.0, 0.0]])).unwrap();
        let expect = real_matrix::<f64>(&[&[0.0, 0.0], &[-1.0, 0.0]]);
        assert_eq!(x.superinvolve().data(), &expect);
        assert!(!x.is_hermitian(1e-9));
    }

    #[test]
    fn parts_of_stored_example() {
        let x = GradedOperator::new(sp(), real_matrix::<f64>(&[&[1.0, 1.0], &[-1.0, -1.0]])).unwrap();
        assert!(x.is_hermitian(1e-12));
        assert_eq!(x.even_part().data(), &real_matrix(&[&[1.0, 0.0], &[0.0, -1.0]]));
        assert_eq!(x.odd_part().data(), &real_matrix(&[&[0.0, 1.0], &[-1.0, 0.0]]));
    }

    #[test]
    fn amplified_blocks_transpose_under_superinvolution() {
        let a = GradedOperator::new(sp(), real_matrix::<f64>(&[&[0.0, 1.0], &[2.0, 3.0]])).unwrap();
        let z = GradedOperator::zero(sp());
        let x = GradedOperator::from_blocks(&[vec![z.clone(), a.clone()], vec![z.clone(), z]]).unwrap();
        let s = x.superinvolve();
        assert_eq!(s.block(1, 0), a.superinvolve());
        assert_eq!(s.block(0, 1).data(), GradedOperator::zero(sp()).data());
    }

    #[test]
    fn rejects_wrong_shape() {
        assert!(GradedOperator::new(sp(), linalg::identity::<f64>(3)).is_err());
    }
}
