use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{creal, lit, CMat, Real};

/// Dimensions of the even and odd subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradedDim {
    pub p: usize,
    pub q: usize,
}

impl GradedDim {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::EmptyDim);
        }
        Ok(Self { p, q })
    }

    pub fn total(&self) -> usize {
        self.p + self.q
    }
}

/// How the grading operator sits in the standard basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grading {
    /// `diag(I_p, -I_q)`.
    Diagonal,
    /// `[[0, I], [I, 0]]` on two copies of the same space; needs `p == q`.
    Swap,
}

impl Grading {
    pub fn name(&self) -> &'static str {
        match self {
            Grading::Diagonal => "diag",
            Grading::Swap => "swap",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "diag" => Ok(Grading::Diagonal),
            "swap" => Ok(Grading::Swap),
            other => Err(Error::Unknown { what: "grading", value: other.to_string() }),
        }
    }
}

/// A graded Hilbert space at matrix level `level`, i.e. `C^level ⊗ Ĥ` with
/// grading `I_level ⊗ ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    pub dim: GradedDim,
    pub grading: Grading,
    pub level: usize,
}

impl GradedSpace {
    pub fn diag(p: usize, q: usize) -> Result<Self> {
        Ok(Self { dim: GradedDim::new(p, q)?, grading: Grading::Diagonal, level: 1 })
    }

    /// Two copies of an `m`-dimensional space graded by exchanging them.
    pub fn swap(m: usize) -> Result<Self> {
        Ok(Self { dim: GradedDim::new(m, m)?, grading: Grading::Swap, level: 1 })
    }

    pub fn new(dim: GradedDim, grading: Grading, level: usize) -> Result<Self> {
        if grading == Grading::Swap && dim.p != dim.q {
            return Err(Error::InvalidConfig(format!(
                "swap grading needs p == q, got ({}, {})",
                dim.p, dim.q
            )));
        }
        if level == 0 {
            return Err(Error::InvalidConfig("level must be positive".into()));
        }
        Ok(Self { dim, grading, level })
    }

    /// The same base space at level `level * n`.
    pub fn amplified(&self, n: usize) -> Self {
        Self { level: self.level * n.max(1), ..*self }
    }

    pub fn base(&self) -> Self {
        Self { level: 1, ..*self }
    }

    pub fn base_size(&self) -> usize {
        self.dim.total()
    }

    pub fn size(&self) -> usize {
        self.level * self.dim.total()
    }

    /// Diagonal of the grading in its eigenbasis: `+1` on even vectors, `-1` on odd ones.
    pub fn signature(&self) -> Vec<i8> {
        let base: Vec<i8> = (0..self.dim.total()).map(|i| if i < self.dim.p { 1 } else { -1 }).collect();
        base.iter().copied().cycle().take(self.size()).collect()
    }

    pub fn base_epsilon<T: Real>(&self) -> CMat<T> {
        let (p, q) = (self.dim.p, self.dim.q);
        match self.grading {
            Grading::Diagonal => DMatrix::from_fn(p + q, p + q, |i, j| {
                if i != j {
                    creal(T::zero())
                } else if i < p {
                    creal(T::one())
                } else {
                    creal(-T::one())
                }
            }),
            Grading::Swap => DMatrix::from_fn(2 * p, 2 * p, |i, j| {
                if (i + p) % (2 * p) == j {
                    creal(T::one())
                } else {
                    creal(T::zero())
                }
            }),
        }
    }

    /// The grading operator `I_level ⊗ ε`.
    pub fn epsilon<T: Real>(&self) -> CMat<T> {
        linalg::kron(&linalg::identity(self.level), &self.base_epsilon())
    }

    /// Unitary `W` with `ε = W · diag(signature) · W†`.
    pub fn frame<T: Real>(&self) -> CMat<T> {
        let base = match self.grading {
            Grading::Diagonal => linalg::identity(self.dim.total()),
            Grading::Swap => {
                let m = self.dim.p;
                let h = creal(lit::<T>(std::f64::consts::FRAC_1_SQRT_2));
                DMatrix::from_fn(2 * m, 2 * m, |i, j| {
                    if i % m != j % m {
                        creal(T::zero())
                    } else if i >= m && j >= m {
                        -h
                    } else {
                        h
                    }
                })
            }
        };
        linalg::kron(&linalg::identity(self.level), &base)
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::DimMismatch(format!("{self:?} vs {other:?}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_diagonalizes_epsilon() {
        for s in [GradedSpace::diag(2, 1).unwrap(), GradedSpace::swap(2).unwrap().amplified(2)] {
            let w = s.frame::<f64>();
            let d: Vec<_> = s.signature().iter().map(|&x| creal(x as f64)).collect();
            let rebuilt = &w * linalg::diag_from(&d) * w.adjoint();
            assert!(linalg::max_abs(&(rebuilt - s.epsilon::<f64>())) < 1e-14);
        }
    }

    #[test]
    fn rejects_degenerate_dims() {
        assert_eq!(GradedDim::new(0, 0), Err(Error::EmptyDim));
        assert!(GradedSpace::new(GradedDim { p: 1, q: 2 }, Grading::Swap, 1).is_err());
    }
}
